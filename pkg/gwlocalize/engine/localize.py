"""
Torus localization of genus-zero and genus-one hypersurface invariants.

Weights: the tangent space of P^n at p_i has weights ``alpha_i - alpha_j``
(j != i), the fibre of O(1) at p_i has weight ``alpha_i`` and O(a) has
``a * alpha_i``. Each fixed locus contributes the integral of the Euler class
of the twisted bundle over the Euler class of its normal bundle, divided by
its automorphism order.
"""
import logging
from collections import namedtuple
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial
from typing import Callable, Dict, Iterable, List, Mapping, Optional, Sequence

from .classpoly import Generator, NilpotentClassPoly, NilpotentRing, integrate
from .conf import get_setting
from .exactnum import WeightAssignment, product, reseed, sample_weights
from .exceptions import InvalidInput, NonGenericWeights, UnsupportedInsertions
from .graphs import (
    DecoratedGraph,
    RefinedTree,
    automorphism_order,
    bubble_graph,
    enumerate_effective_genus1_graphs,
    enumerate_genus0_trees,
    enumerate_refined_trees,
    tree_locus_data,
)
from .integrals import blowup_tangent_integral, psi_integral_g0

logger = logging.getLogger(__name__)

THREEFOLD_DIMENSION = 4

FlagWeights = namedtuple("FlagWeights", ["first", "second"])


@dataclass(frozen=True)
class LocusContribution:
    locus_id: str
    value: Fraction
    aut_order: int
    kind: str = "genus0"


def _nonzero(value: Fraction, what: str) -> Fraction:
    if not value:
        raise NonGenericWeights("zero weight in %s" % what)
    return value


def edge_weight(graph: DecoratedGraph, edge: int, weights: WeightAssignment) -> FlagWeights:
    """Weights of the tangent lines of the edge's domain at its two ends."""
    u, v, degree = graph.edges[edge]
    at_first = _nonzero((weights[graph.mu[u]] - weights[graph.mu[v]]) / degree, "edge %d" % edge)
    return FlagWeights(at_first, -at_first)


def _edge_factor(i: int, j: int, degree: int, weights: WeightAssignment, a: int) -> Fraction:
    """Twisted sections over the edge's moving deformations, for a degree-``degree`` cover of the line p_i p_j."""
    alpha_i, alpha_j = weights[i], weights[j]
    sections = product((c * alpha_i + (a * degree - c) * alpha_j) / degree for c in range(a * degree + 1))

    moving = Fraction((-1) ** degree * factorial(degree) ** 2, degree ** (2 * degree))
    moving *= (alpha_i - alpha_j) ** (2 * degree)
    for k in range(len(weights.alphas)):
        if k in (i, j):
            continue
        for c in range(degree + 1):
            moving *= (c * alpha_i + (degree - c) * alpha_j) / degree - weights[k]
    return sections / _nonzero(moving, "edge normal bundle")


def _psi_generators(graph: DecoratedGraph, prefix: str):
    """
    One psi class per special point of every contracted vertex. Returns the
    generators and a map ``(vertex, "e" | "t", edge or mark) -> name``.
    """
    generators, names = [], {}
    for vertex in range(graph.vertex_count):
        valence = graph.valence(vertex)
        if valence < 3:
            continue
        group = "%sv%d" % (prefix, vertex)
        points = [("e", flag.edge) for flag in graph.flags(vertex)]
        points += [("t", mark) for mark in graph.tails_at(vertex)]
        for kind, index in points:
            name = "%s.%s%d" % (group, kind, index)
            names[(vertex, kind, index)] = name
            generators.append(Generator(name, valence - 3, group))
    return generators, names


def _graph_integrand(graph: DecoratedGraph, weights: WeightAssignment, a: int,
                     ring: NilpotentRing, names: Mapping) -> NilpotentClassPoly:
    """Twisted Euler class over normal Euler class for a graph whose vertices all have genus 0."""
    scalar = Fraction(1)
    for u, v, degree in graph.edges:
        scalar *= _edge_factor(graph.mu[u], graph.mu[v], degree, weights, a)

    integrand = ring.one()
    for vertex in range(graph.vertex_count):
        flags = graph.flags(vertex)
        i = graph.mu[vertex]
        scalar *= weights.tangent_euler(i) ** (len(flags) - 1)
        scalar /= _nonzero(a * weights[i], "twisting fibre") ** (len(flags) - 1)

        omegas = [(weights[i] - weights[graph.mu[flag.other]]) / flag.degree for flag in flags]
        valence = graph.valence(vertex)
        if valence >= 3:
            for flag, omega in zip(flags, omegas):
                integrand = integrand * (omega - ring.gen(names[(vertex, "e", flag.edge)])).inverse()
        elif len(flags) == 2:
            scalar /= _nonzero(omegas[0] + omegas[1], "node smoothing")
        elif valence == 1:
            scalar *= omegas[0]
    return integrand * scalar


def _vertex_evaluators(generators: Iterable[Generator]) -> Dict[str, Callable]:
    return {generator.group: psi_integral_g0 for generator in generators}


def _genus_zero_vertex_locus(graph: DecoratedGraph, weights: WeightAssignment, a: int, kind: str) -> LocusContribution:
    locus = graph.canonical()
    generators, names = _psi_generators(locus, "")
    ring = NilpotentRing(generators)
    integrand = _graph_integrand(locus, weights, a, ring, names)
    value = integrate(integrand, _vertex_evaluators(generators)) / locus.a_order
    return LocusContribution(locus.encode(), value, locus.a_order, kind)


def genus0_fixed_locus_contribution(graph: DecoratedGraph, weights: WeightAssignment, a: int) -> LocusContribution:
    if not graph.is_tree() or any(graph.genus):
        raise InvalidInput("genus-zero loci are trees of genus-zero vertices")
    return _genus_zero_vertex_locus(graph, weights, a, "genus0")


def effective_locus_contribution(graph: DecoratedGraph, weights: WeightAssignment, a: int) -> LocusContribution:
    """
    Contribution of a cycle graph. The normalisation sequence of a cycle of
    non-contracted components leaves no H^1 for f*T P^n or f*O(a), so the
    vertex, edge and node factors are those of the genus-zero formula.
    """
    if any(graph.genus) or graph.first_betti != 1:
        raise InvalidInput("effective loci are cycle graphs of genus-zero vertices")
    return _genus_zero_vertex_locus(graph, weights, a, "effective")


def boundary_locus_contribution(tree: RefinedTree, weights: WeightAssignment, a: int) -> LocusContribution:
    """Contribution of the fixed locus of the desingularised space indexed by ``tree``."""
    if tree.marks:
        raise UnsupportedInsertions("boundary loci with marked points need psi insertions on the blown-up space")

    flat = tree.flatten()
    data = tree_locus_data(tree)
    m = data.sigma.m
    root = tree.root_mu
    alpha = weights[root]
    omega_plus = (alpha - weights[tree.mu_plus]) / tree.d_plus

    generators = [Generator("h", data.dim_plus, "h"), Generator("lam", m, "lam")]
    bubbles = []
    for index, vertex in enumerate(flat.children(0)):
        graph = bubble_graph(tree, vertex)
        bubble_generators, names = _psi_generators(graph, "b%d." % index)
        generators += bubble_generators
        bubbles.append((vertex, graph, names))
    ring = NilpotentRing(generators)
    h, lam = ring.gen("h"), ring.gen("lam")

    integrand = ring.one()
    for _, graph, names in bubbles:
        integrand = integrand * _graph_integrand(graph, weights, a, ring, names)

    # gluing the bubbles at p_root
    scalar = (weights.tangent_euler(root) / _nonzero(a * alpha, "twisting fibre")) ** (m - 1)

    # directions of the normal bundle off the thick edges
    for vertex, graph, names in bubbles:
        if vertex in flat.plus:
            continue
        if vertex in flat.zero:
            cut = next(owner for mark, owner in graph.tails if mark == 0)
            tangent = -ring.gen(names[(cut, "t", 0)])
        else:
            tangent = ring.const((alpha - weights[flat.mu[vertex]]) / flat.degree[vertex])
        integrand = integrand * (h - omega_plus + tangent).inverse()

    # quotient by the tangent space at p_root; for d_plus = 1 the j = mu_plus
    # factor is the zero-weight direction of F' and cancels
    for j in range(len(weights.alphas)):
        if j == root or (tree.d_plus == 1 and j == tree.mu_plus):
            continue
        integrand = integrand * (h - omega_plus + alpha - weights[j])

    integrand = integrand * (omega_plus - h - lam).inverse()
    integrand = integrand * (h - omega_plus + a * alpha).inverse()

    evaluators = _vertex_evaluators(generators)
    evaluators["h"] = lambda exponents: Fraction(1)
    evaluators["lam"] = lambda exponents: blowup_tangent_integral(m, 0)
    order = automorphism_order(tree)
    value = integrate(integrand * scalar, evaluators) / order.a_order
    return LocusContribution(tree.encode(), value, order.a_order, "boundary")


CONTRIBUTIONS = {
    "genus0": genus0_fixed_locus_contribution,
    "boundary": boundary_locus_contribution,
    "effective": effective_locus_contribution,
}


def _contribution(job):
    kind, locus, weights, a = job
    return CONTRIBUTIONS[kind](locus, weights, a)


def locus_contributions(kind: str, loci: Sequence, weights: WeightAssignment, a: int,
                        workers: Optional[int] = None) -> List[LocusContribution]:
    """Per-locus contributions in the order of ``loci``, optionally computed in a process pool."""
    workers = get_setting("WORKERS") if workers is None else workers
    jobs = [(kind, locus, weights, a) for locus in loci]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as executor:
            return list(executor.map(_contribution, jobs, chunksize=max(1, len(jobs) // (4 * workers))))
    return [_contribution(job) for job in jobs]


def total(contributions: Iterable[LocusContribution]) -> Fraction:
    return sum((c.value for c in contributions), Fraction(0))


@dataclass
class Evaluation:
    value: Fraction
    seed: int
    weights_seed: int
    locus_count: int
    contributions: List[LocusContribution] = field(default_factory=list)


def evaluate_with_retries(evaluate: Callable[[WeightAssignment], Evaluation], n: int, seed: int,
                          retry_cap: Optional[int] = None) -> Evaluation:
    """Run ``evaluate`` at the weights of ``seed``, resampling after degenerate weights."""
    retry_cap = get_setting("RETRY_CAP") if retry_cap is None else retry_cap
    for attempt in range(retry_cap + 1):
        weights = sample_weights(n, reseed(seed, attempt))
        try:
            evaluation = evaluate(weights)
        except NonGenericWeights as error:
            logger.warning("seed %d attempt %d: %s; resampling", seed, attempt, error)
            continue
        evaluation.seed = seed
        evaluation.weights_seed = weights.seed
        return evaluation
    raise NonGenericWeights("weights stayed degenerate after %d resamples" % retry_cap, seed=seed)


def check_genus0_dimension(n: int, a: int, d: int, k: int = 0):
    if n < 1 or a < 1 or d < 1:
        raise InvalidInput("need n, a, d >= 1")
    if d * a + 1 != (n + 1) * (d + 1) - 4 + k:
        raise InvalidInput(
            "degree-%d hypersurface in P^%d has no zero-dimensional degree-%d count with %d marks" % (a, n, d, k)
        )
    if k:
        raise UnsupportedInsertions("marked genus-zero invariants need insertions")


def genus0_at(weights: WeightAssignment, a: int, trees: Sequence[DecoratedGraph],
              workers: Optional[int] = None) -> Evaluation:
    contributions = locus_contributions("genus0", trees, weights, a, workers)
    return Evaluation(total(contributions), weights.seed, weights.seed, len(trees), contributions)


def genus0_evaluation(n: int, a: int, d: int, seed: int = 0, retry_cap: Optional[int] = None,
                      workers: Optional[int] = None, trees: Optional[Sequence[DecoratedGraph]] = None) -> Evaluation:
    check_genus0_dimension(n, a, d)
    trees = enumerate_genus0_trees(n, d) if trees is None else trees
    evaluation = evaluate_with_retries(lambda weights: genus0_at(weights, a, trees, workers), n, seed, retry_cap)
    logger.info("genus 0 n=%d a=%d d=%d seed=%d: %s over %d loci", n, a, d, seed, evaluation.value, len(trees))
    return evaluation


def gw0_hypersurface(n: int, a: int, d: int, seed: int = 0, **options) -> Fraction:
    """Genus-zero degree-``d`` invariant of a degree-``a`` hypersurface in P^n."""
    return genus0_evaluation(n, a, d, seed, **options).value


def genus1_standard_coefficient(a: int, d: int) -> Fraction:
    return Fraction(d * (a - 5) + 2, 24)


def genus1_at(weights: WeightAssignment, a: int, d: int, genus0_trees, refined_trees, cycles,
              workers: Optional[int] = None) -> Evaluation:
    genus0 = locus_contributions("genus0", genus0_trees, weights, a, workers)
    boundary = locus_contributions("boundary", refined_trees, weights, a, workers)
    effective = locus_contributions("effective", cycles, weights, a, workers)
    value = genus1_standard_coefficient(a, d) * total(genus0) + total(boundary) + total(effective)
    return Evaluation(value, weights.seed, weights.seed, len(refined_trees) + len(cycles), boundary + effective)


def genus1_evaluation(a: int, d: int, seed: int = 0, k: int = 0, retry_cap: Optional[int] = None,
                      workers: Optional[int] = None, genus0_trees=None, refined_trees=None, cycles=None) -> Evaluation:
    if k:
        raise UnsupportedInsertions("genus-one invariants are computed without marked points")
    n = THREEFOLD_DIMENSION
    check_genus0_dimension(n, a, d)
    genus0_trees = enumerate_genus0_trees(n, d) if genus0_trees is None else genus0_trees
    refined_trees = enumerate_refined_trees(n, d) if refined_trees is None else refined_trees
    cycles = enumerate_effective_genus1_graphs(n, d) if cycles is None else cycles

    evaluation = evaluate_with_retries(
        lambda weights: genus1_at(weights, a, d, genus0_trees, refined_trees, cycles, workers),
        n, seed, retry_cap,
    )
    logger.info(
        "genus 1 a=%d d=%d seed=%d: %s over %d refined trees and %d cycles",
        a, d, seed, evaluation.value, len(refined_trees), len(cycles),
    )
    return evaluation


def gw1_hypersurface_threefold(a: int, d: int, seed: int = 0, **options) -> Fraction:
    """Standard genus-one degree-``d`` invariant of a degree-``a`` hypersurface in P^4."""
    return genus1_evaluation(a, d, seed, **options).value


@dataclass
class WeightCheck:
    agree: bool
    values: Dict[int, Fraction]
    report: str


def weight_independence_check(computation: Callable[[int], Fraction], seeds: Sequence[int]) -> WeightCheck:
    """Evaluate ``computation`` at every seed and compare the exact results."""
    seeds = list(seeds)
    if len(seeds) < 2:
        raise InvalidInput("weight independence needs at least two seeds")
    values = {seed: computation(seed) for seed in seeds}
    distinct = sorted(set(values.values()))
    if len(distinct) == 1:
        return WeightCheck(True, values, "all %d seeds agree on %s" % (len(seeds), distinct[0]))
    lines = ["seed %d: %s" % (seed, value) for seed, value in values.items()]
    return WeightCheck(False, values, "%d distinct values\n%s" % (len(distinct), "\n".join(lines)))


def genus0_bps_numbers(values: Mapping[int, Fraction]) -> Dict[int, Fraction]:
    """
    Invert the multiple-cover relation ``N_d = sum_{k | d} n_{d/k} / k^3``.
    For a Calabi-Yau threefold the results are integers.
    """
    bps = {}
    for d in sorted(values):
        correction = Fraction(0)
        for k in range(2, d + 1):
            if d % k:
                continue
            if d // k not in values:
                raise InvalidInput("degree %d needs the value in degree %d" % (d, d // k))
            correction += bps[d // k] / k ** 3
        bps[d] = values[d] - correction
    return bps
