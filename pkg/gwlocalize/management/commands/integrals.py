from django.core.management import CommandError

from gwlocalize.engine.integrals import evaluate_query
from gwlocalize.engine.serializers import FractionField

from ._engine import CONFIG_ERROR, EngineCommand


class Command(EngineCommand):
    help = "Evaluate psi-class integrals, e.g. --query g0:2,1,0,0,0,0 g1l:1,0 blowup:7,1"

    def add_arguments(self, parser):
        parser.add_argument("--query", type=str, nargs="+", default=[])
        parser.add_argument("--out", type=str)

    def handle(self, *args, **options):
        if not options["query"]:
            raise CommandError("at least one --query is required", returncode=CONFIG_ERROR)
        with self.exit_codes():
            field = FractionField()
            results = [
                {"query": query, "value": field.to_representation(evaluate_query(query))}
                for query in options["query"]
            ]
            self.emit(results, options.get("out"))
