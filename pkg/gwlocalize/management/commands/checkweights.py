from gwlocalize.engine.runner import RunConfig, run_check

from ._engine import EngineCommand


class Command(EngineCommand):
    help = "Check that an invariant is the same at every weight seed"

    def add_arguments(self, parser):
        self.add_problem_arguments(parser)
        self.add_seed_arguments(parser)

    def handle(self, *args, **options):
        with self.exit_codes(options.get("out")):
            config = RunConfig.from_options(
                command="check",
                genus=options["genus"],
                n=options["n"],
                d=options["d"],
                k=options["k"],
                a=options["a"],
                seeds=self.default_seeds(options.get("seeds")),
                cache_dir=options.get("cache_dir"),
            )
            document = run_check(config)
            self.emit(document, options.get("out"))
