from gwlocalize.settings import *


GWLOCALIZE = dict(GWLOCALIZE, WORKERS=1, RETRY_CAP=5)
