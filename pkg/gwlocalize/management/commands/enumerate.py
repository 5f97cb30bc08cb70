from gwlocalize.engine.runner import RunConfig, run_enumerate
from gwlocalize.engine.serializers import GRAPH_KINDS, INDEX_SET_KINDS

from ._engine import EngineCommand, parse_marks


class Command(EngineCommand):
    help = "List fixed loci or index sets as JSON records"

    def add_arguments(self, parser):
        self.add_problem_arguments(parser)
        parser.add_argument("--kind", type=str, required=True, choices=GRAPH_KINDS + INDEX_SET_KINDS)
        parser.add_argument(
            "--relative", type=str, help="Comma separated marks every block of a curve split must meet"
        )

    def handle(self, *args, **options):
        with self.exit_codes():
            config = RunConfig.from_options(
                command="enumerate",
                kind=options["kind"],
                genus=options["genus"],
                n=options["n"],
                d=options["d"],
                k=options["k"],
                cache_dir=options.get("cache_dir"),
            )
            records = run_enumerate(config, relative=parse_marks(options.get("relative")))
            self.emit(records, options.get("out"))
