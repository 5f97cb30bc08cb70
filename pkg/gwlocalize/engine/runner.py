"""
Batch runs behind the management commands.
"""
import logging
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional

from . import ENGINE_VERSION
from .cache import SCHEMA_VERSION, EnumerationCache, cache_roundtrip
from .exceptions import InvalidInput, WeightDependence
from .localize import (
    THREEFOLD_DIMENSION,
    Evaluation,
    LocusContribution,
    genus0_bps_numbers,
    genus0_evaluation,
    genus1_evaluation,
    weight_independence_check,
)
from .posets import enumerate_admissible_triples, enumerate_auxiliary_index_set
from .serializers import RECORD_SERIALIZERS, ResultSerializer, RunConfigSerializer, WeightCheckSerializer

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    command: str
    genus: int = 0
    n: int = 4
    d: int = 1
    k: int = 0
    a: int = 5
    seeds: List[int] = field(default_factory=lambda: [0, 1, 2])
    cache_dir: Optional[str] = None
    breakdown: bool = False
    kind: Optional[str] = None

    @classmethod
    def from_options(cls, **options) -> "RunConfig":
        """Validated config; raises ``rest_framework.exceptions.ValidationError``."""
        serializer = RunConfigSerializer(data={k: v for k, v in options.items() if v is not None})
        serializer.is_valid(raise_exception=True)
        return cls(**serializer.validated_data)


@dataclass
class RunResult:
    config: Dict
    value: Fraction
    evaluations: List[Evaluation]
    agree: bool
    locus_count: int
    elapsed: float
    breakdown: Optional[List[LocusContribution]] = None
    bps: Optional[Dict[int, Fraction]] = None
    schema_version: int = SCHEMA_VERSION
    engine_version: str = ENGINE_VERSION


def _loci(config: RunConfig, kind: str, n: int):
    if config.cache_dir:
        return cache_roundtrip(kind, n, config.d, config.k, EnumerationCache(config.cache_dir))
    return None


def _evaluate(config: RunConfig, seed: int) -> Evaluation:
    if config.genus == 0:
        return genus0_evaluation(config.n, config.a, config.d, seed, trees=_loci(config, "g0-trees", config.n))
    n = THREEFOLD_DIMENSION
    return genus1_evaluation(
        config.a,
        config.d,
        seed,
        genus0_trees=_loci(config, "g0-trees", n),
        refined_trees=_loci(config, "refined-trees", n),
        cycles=_loci(config, "g1-effective", n),
    )


def _lower_degree_bps(config: RunConfig, value: Fraction, seed: int) -> Optional[Dict[int, Fraction]]:
    """Multiple-cover reduction for the Calabi-Yau threefold case."""
    if config.genus != 0 or config.n != THREEFOLD_DIMENSION or config.a != config.n + 1:
        return None
    values = {config.d: value}
    for degree in range(1, config.d):
        if config.d % degree == 0:
            values[degree] = genus0_evaluation(config.n, config.a, degree, seed).value
    return genus0_bps_numbers(values)


def run_compute(config: RunConfig) -> dict:
    """
    Evaluate the requested invariant at every seed and return the result
    document; raises :class:`WeightDependence` carrying the document when the
    seeds disagree.
    """
    started = time.monotonic()
    evaluations = [_evaluate(config, seed) for seed in config.seeds]
    values = {evaluation.value for evaluation in evaluations}
    agree = len(values) == 1
    first = evaluations[0]

    result = RunResult(
        config=asdict(config),
        value=first.value,
        evaluations=evaluations,
        agree=agree,
        locus_count=first.locus_count,
        elapsed=round(time.monotonic() - started, 3),
        breakdown=first.contributions if config.breakdown else None,
        bps=_lower_degree_bps(config, first.value, config.seeds[0]) if agree else None,
    )
    document = ResultSerializer(result).data
    if not agree:
        raise WeightDependence("values differ across seeds %s" % config.seeds, report=document)
    logger.info("computed %s = %s over seeds %s", config, first.value, config.seeds)
    return document


def run_check(config: RunConfig) -> dict:
    """Weight-independence report for the configured invariant."""
    check = weight_independence_check(lambda seed: _evaluate(config, seed).value, config.seeds)
    document = WeightCheckSerializer({"config": asdict(config), **asdict(check)}).data
    if not check.agree:
        raise WeightDependence(check.report, report=document)
    return document


def run_enumerate(config: RunConfig, relative=None) -> List[dict]:
    kind = config.kind
    if kind == "triples":
        records = enumerate_admissible_triples(config.d, config.k)
    elif kind == "map-splits":
        records = enumerate_auxiliary_index_set("map-g0", d=config.d, marks=range(1, config.k + 1)).elements
    elif kind == "curve-splits":
        index_kind = "curve-g%d%s" % (config.genus, "-rel" if relative else "")
        records = enumerate_auxiliary_index_set(
            index_kind, ground=range(1, config.k + 1), relative_to=relative or ()
        ).elements
    elif kind in ("g0-trees", "g1-effective", "refined-trees"):
        records = cache_roundtrip(kind, config.n, config.d, config.k, EnumerationCache(config.cache_dir))
    else:
        raise InvalidInput("unknown enumeration kind %r" % kind)
    return RECORD_SERIALIZERS[kind](records, many=True).data
