from gwlocalize.engine.runner import RunConfig, run_compute

from ._engine import EngineCommand


class Command(EngineCommand):
    help = "Compute a genus-0 or genus-1 hypersurface invariant at several weight seeds"

    def add_arguments(self, parser):
        self.add_problem_arguments(parser)
        self.add_seed_arguments(parser)
        parser.add_argument("--breakdown", action="store_true", help="Include per-locus contributions")

    def handle(self, *args, **options):
        with self.exit_codes(options.get("out")):
            config = RunConfig.from_options(
                command="compute",
                genus=options["genus"],
                n=options["n"],
                d=options["d"],
                k=options["k"],
                a=options["a"],
                seeds=self.default_seeds(options.get("seeds")),
                cache_dir=options.get("cache_dir"),
                breakdown=options.get("breakdown", False),
            )
            self.emit(run_compute(config), options.get("out"))
