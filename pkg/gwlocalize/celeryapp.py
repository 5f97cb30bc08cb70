import os

from celery import Celery

# Set the gwlocalize settings module for the Celery instance
os.environ.setdefault("DJANGO_SETTINGS_MODULE", "gwlocalize.settings")

app = Celery("gwlocalize")

# Pass config made of up values beginning with the prefix of CELERY_ in settings.py
app.config_from_object("django.conf:settings", namespace="CELERY")

# Autodiscover tasks in tasks.py
app.autodiscover_tasks()
