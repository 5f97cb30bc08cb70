from django.conf import settings
from django.core.exceptions import ImproperlyConfigured

DEFAULTS = {
    "CACHE_DIR": "var/cache",
    "DEFAULT_SEEDS": (0, 1, 2),
    "RETRY_CAP": 5,
    "WORKERS": 1,
}


def get_setting(name):
    """Engine setting from ``settings.GWLOCALIZE``, falling back to the defaults outside a configured project."""
    try:
        configured = getattr(settings, "GWLOCALIZE", {})
    except ImproperlyConfigured:
        configured = {}
    return configured.get(name, DEFAULTS[name])
