import json
import logging
from contextlib import contextmanager

from django.core.management import BaseCommand, CommandError
from rest_framework.exceptions import ValidationError

from gwlocalize.engine.conf import get_setting
from gwlocalize.engine.exceptions import (
    InvalidInput,
    NonGenericWeights,
    UnsupportedInsertions,
    WeightDependence,
)

logger = logging.getLogger(__name__)

CONFIG_ERROR = 2
WEIGHT_DEPENDENCE = 3
DEGENERATE_WEIGHTS = 4


def parse_marks(text):
    """``"1,3"`` as ``[1, 3]``; ``None`` for an empty option."""
    if not text:
        return None
    try:
        return [int(mark) for mark in text.split(",")]
    except ValueError:
        raise InvalidInput("marks must be comma separated integers, got %r" % text)


class EngineCommand(BaseCommand):
    """Shared options and exit codes of the engine commands."""

    def add_problem_arguments(self, parser):
        parser.add_argument("--genus", type=int, default=0, choices=[0, 1])
        parser.add_argument("--n", type=int, default=4)
        parser.add_argument("--d", type=int, default=1)
        parser.add_argument("--k", type=int, default=0)
        parser.add_argument("--cache-dir", dest="cache_dir", type=str)
        parser.add_argument("--out", type=str, help="Write the JSON document here instead of stdout")

    def add_seed_arguments(self, parser):
        parser.add_argument("--a", type=int, default=5)
        parser.add_argument("--seeds", type=str, help="Comma separated weight seeds")

    def default_seeds(self, seeds):
        if seeds:
            return seeds
        return ",".join(str(seed) for seed in get_setting("DEFAULT_SEEDS"))

    def emit(self, document, out=None):
        text = json.dumps(document, indent=2, sort_keys=True)
        if out:
            with open(out, "w") as f:
                f.write(text + "\n")
        else:
            self.stdout.write(text)

    @contextmanager
    def exit_codes(self, out=None):
        try:
            yield
        except ValidationError as error:
            raise CommandError("invalid configuration: %s" % error.detail, returncode=CONFIG_ERROR)
        except (InvalidInput, UnsupportedInsertions) as error:
            raise CommandError(str(error), returncode=CONFIG_ERROR)
        except WeightDependence as error:
            if error.report is not None:
                self.emit(error.report, out)
            logger.error("weight dependence: %s", error)
            raise CommandError("weight dependence detected: %s" % error, returncode=WEIGHT_DEPENDENCE)
        except NonGenericWeights as error:
            raise CommandError(
                "degenerate weights for seed %s: %s" % (error.seed, error), returncode=DEGENERATE_WEIGHTS
            )
