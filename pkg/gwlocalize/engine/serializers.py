from fractions import Fraction

from rest_framework import serializers

from .graphs import tree_locus_data
from .posets import members

GRAPH_KINDS = ("g0-trees", "g1-effective", "refined-trees")
INDEX_SET_KINDS = ("triples", "curve-splits", "map-splits")


class FractionField(serializers.Field):
    """Exact rationals as decimal strings, never as JSON numbers."""

    default_error_messages = {"invalid": "Expected {\"num\": \"<int>\", \"den\": \"<positive int>\"}."}

    def to_representation(self, value):
        value = Fraction(value)
        return {"num": str(value.numerator), "den": str(value.denominator)}

    def to_internal_value(self, data):
        try:
            numerator, denominator = int(data["num"]), int(data["den"])
        except (KeyError, TypeError, ValueError):
            self.fail("invalid")
        if denominator <= 0:
            self.fail("invalid")
        return Fraction(numerator, denominator)


class SeedListField(serializers.Field):
    """Seeds as a comma separated string or a list of integers."""

    def to_representation(self, value):
        return list(value)

    def to_internal_value(self, data):
        if isinstance(data, str):
            data = [part for part in data.split(",") if part.strip()]
        try:
            return [int(seed) for seed in data]
        except (TypeError, ValueError):
            raise serializers.ValidationError("Seeds must be integers.")


class RunConfigSerializer(serializers.Serializer):
    command = serializers.ChoiceField(choices=["enumerate", "compute", "check"])
    genus = serializers.ChoiceField(choices=[0, 1], default=0)
    n = serializers.IntegerField(min_value=1, default=4)
    d = serializers.IntegerField(min_value=1, default=1)
    k = serializers.IntegerField(min_value=0, max_value=62, default=0)
    a = serializers.IntegerField(min_value=1, default=5)
    seeds = SeedListField(default=[0, 1, 2])
    cache_dir = serializers.CharField(required=False, allow_blank=True, allow_null=True, default=None)
    breakdown = serializers.BooleanField(default=False)
    kind = serializers.ChoiceField(choices=GRAPH_KINDS + INDEX_SET_KINDS, required=False, allow_null=True, default=None)

    def validate_seeds(self, value):
        if not value:
            raise serializers.ValidationError("At least one seed is required.")
        if len(set(value)) != len(value):
            raise serializers.ValidationError("Duplicate seeds: %s." % ",".join(map(str, value)))
        return value

    def validate(self, data):
        if data["genus"] == 1 and (data["n"] != 4 or data["k"] != 0):
            raise serializers.ValidationError("Genus one runs require n=4 and k=0.")
        if data["command"] == "check" and len(data["seeds"]) < 2:
            raise serializers.ValidationError("A weight check needs at least two seeds.")
        if data["command"] == "enumerate" and not data.get("kind"):
            raise serializers.ValidationError("Enumeration needs a kind.")
        return data


class TripleSerializer(serializers.Serializer):
    label = serializers.CharField(source="__str__")
    m = serializers.IntegerField()
    jP = serializers.SerializerMethodField()
    jB = serializers.SerializerMethodField()

    def get_jP(self, obj):
        return list(members(obj.j_p))

    def get_jB(self, obj):
        return list(members(obj.j_b))


class CurveSplitSerializer(serializers.Serializer):
    label = serializers.CharField(source="__str__")
    iP = serializers.SerializerMethodField()
    blocks = serializers.SerializerMethodField()

    def get_iP(self, obj):
        return sorted(obj.i_p)

    def get_blocks(self, obj):
        return [sorted(block) for block in obj.blocks]


class TreeLocusDataSerializer(serializers.Serializer):
    sigma = TripleSerializer()
    dPlus = serializers.IntegerField(source="d_plus")
    muPlus = serializers.IntegerField(source="mu_plus")
    edgPlusCount = serializers.IntegerField(source="edg_plus_count")
    dimPlus = serializers.IntegerField(source="dim_plus")
    fPrimeRank = serializers.IntegerField(source="f_prime_rank")


class DecoratedGraphSerializer(serializers.Serializer):
    encoding = serializers.CharField(source="encode")
    genus = serializers.ListField(child=serializers.IntegerField())
    mu = serializers.ListField(child=serializers.IntegerField())
    edges = serializers.SerializerMethodField()
    deg = serializers.SerializerMethodField()
    tails = serializers.SerializerMethodField()
    aut = serializers.IntegerField()
    A_order = serializers.IntegerField(source="a_order")

    def get_edges(self, obj):
        return [[u, v] for u, v, _ in obj.edges]

    def get_deg(self, obj):
        return [degree for _, _, degree in obj.edges]

    def get_tails(self, obj):
        return {str(mark): owner for mark, owner in obj.tails}


class RefinedTreeSerializer(serializers.Serializer):
    encoding = serializers.CharField(source="encode")
    parent = serializers.SerializerMethodField()
    mu = serializers.SerializerMethodField()
    deg = serializers.SerializerMethodField()
    thick = serializers.SerializerMethodField()
    dashed = serializers.SerializerMethodField()
    aut = serializers.IntegerField()
    A_order = serializers.SerializerMethodField()
    locusData = serializers.SerializerMethodField()

    def _flat(self, obj):
        return obj.flatten()

    def get_parent(self, obj):
        return self._flat(obj).parent

    def get_mu(self, obj):
        return self._flat(obj).mu

    def get_deg(self, obj):
        return self._flat(obj).degree

    def get_thick(self, obj):
        return sorted(self._flat(obj).plus)

    def get_dashed(self, obj):
        return sorted(self._flat(obj).zero)

    def get_A_order(self, obj):
        return obj.aut * obj.degree_product

    def get_locusData(self, obj):
        return TreeLocusDataSerializer(tree_locus_data(obj)).data


class LocusContributionSerializer(serializers.Serializer):
    locusId = serializers.CharField(source="locus_id")
    kind = serializers.CharField()
    value = FractionField()
    autOrder = serializers.IntegerField(source="aut_order")


class SeedValueSerializer(serializers.Serializer):
    seed = serializers.IntegerField()
    weightsSeed = serializers.IntegerField(source="weights_seed")
    value = FractionField()


class ResultSerializer(serializers.Serializer):
    schemaVersion = serializers.IntegerField(source="schema_version")
    engineVersion = serializers.CharField(source="engine_version")
    config = serializers.DictField()
    value = FractionField()
    perSeed = SeedValueSerializer(source="evaluations", many=True)
    agree = serializers.BooleanField()
    lociCount = serializers.IntegerField(source="locus_count")
    elapsedSeconds = serializers.FloatField(source="elapsed")
    bps = serializers.DictField(child=FractionField(), required=False)
    breakdown = LocusContributionSerializer(many=True, required=False)


class WeightCheckSerializer(serializers.Serializer):
    config = serializers.DictField()
    agree = serializers.BooleanField()
    values = serializers.DictField(child=FractionField())
    report = serializers.CharField()


RECORD_SERIALIZERS = {
    "triples": TripleSerializer,
    "map-splits": TripleSerializer,
    "curve-splits": CurveSplitSerializer,
    "g0-trees": DecoratedGraphSerializer,
    "g1-effective": DecoratedGraphSerializer,
    "refined-trees": RefinedTreeSerializer,
}
