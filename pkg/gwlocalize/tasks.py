import os

from celery import shared_task
from django.core.management import call_command

from gwlocalize.engine.graphs import clear_enumeration_caches


@shared_task
def compute_invariant(genus, d, a=5, n=4, seeds="0,1,2", out=None):
    try:
        call_command("compute", genus=genus, n=n, d=d, a=a, seeds=seeds, out=out)
    finally:
        clear_enumeration_caches()


@shared_task
def warm_enumeration_cache(max_degree, n=4):
    try:
        for d in range(1, max_degree + 1):
            for kind in ("g0-trees", "g1-effective", "refined-trees"):
                call_command("enumerate", kind=kind, n=n, d=d, out=os.devnull)
    finally:
        clear_enumeration_caches()
