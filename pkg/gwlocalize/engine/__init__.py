import os
from importlib.metadata import PackageNotFoundError, version

try:
    ENGINE_VERSION = version("gwlocalize")
except PackageNotFoundError:
    # source checkout; setup.py reads the same file
    with open(os.path.join(os.path.dirname(__file__), "..", "..", "VERSION")) as f:
        ENGINE_VERSION = f.read().strip()
