"""
Combinatorics of torus-fixed loci.

* :class:`DecoratedGraph` - a fixed locus of a space of stable maps to P^n:
  vertex genera and fixed-point labels, edge degrees and tails.
* :class:`RefinedTree` - a refined decorated rooted tree, indexing the
  boundary fixed loci of the desingularised genus-one space.

Rooted structures are stored as nested, sorted tuples of :class:`Branch`, which
makes them canonical on construction. Graphs with a cycle are canonicalised by
brute force over vertex orderings.
"""
import itertools
import json
import logging
from collections import Counter, namedtuple
from dataclasses import dataclass, field
from functools import lru_cache
from math import factorial
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import networkx as nx

from .exceptions import InvalidInput
from .posets import AdmissibleTriple, mask_of

logger = logging.getLogger(__name__)

Tails = Tuple[int, ...]

AutomorphismOrder = namedtuple("AutomorphismOrder", ["aut", "a_order"])


def _multiset_aut(items) -> int:
    """Automorphisms permuting identical members of a multiset of rooted pieces."""
    result = 1
    for item, multiplicity in Counter(items).items():
        result *= factorial(multiplicity) * item.aut ** multiplicity
    return result


def _dumps(value) -> str:
    return json.dumps(value, separators=(",", ":"))


@dataclass(frozen=True, order=True)
class Branch:
    """
    An edge of degree ``degree`` leading to a vertex labelled ``mu`` which
    carries ``tails`` and the sub-branches ``children``.
    """

    degree: int
    mu: int
    tails: Tails = ()
    children: Tuple["Branch", ...] = ()
    genus: int = 0

    @classmethod
    def of(cls, degree, mu, tails=(), children=(), genus=0) -> "Branch":
        return cls(degree, mu, tuple(sorted(tails)), tuple(sorted(children)), genus)

    @property
    def head(self):
        return self.degree, self.mu

    @property
    def total_degree(self) -> int:
        return self.degree + sum(child.total_degree for child in self.children)

    @property
    def marks(self) -> Tails:
        return tuple(sorted(self.tails + sum((child.marks for child in self.children), ())))

    @property
    def degree_product(self) -> int:
        result = self.degree
        for child in self.children:
            result *= child.degree_product
        return result

    @property
    def aut(self) -> int:
        return _multiset_aut(self.children)

    def as_list(self):
        return [self.degree, self.mu, self.genus, list(self.tails), [c.as_list() for c in self.children]]

    @classmethod
    def from_list(cls, data) -> "Branch":
        degree, mu, genus, tails, children = data
        return cls.of(degree, mu, tails, [cls.from_list(c) for c in children], genus)


@dataclass(frozen=True, order=True)
class DashedVertex:
    """A contracted vertex joined to the root by a dashed edge."""

    tails: Tails
    children: Tuple[Branch, ...]

    @classmethod
    def of(cls, tails=(), children=()) -> "DashedVertex":
        return cls(tuple(sorted(tails)), tuple(sorted(children)))

    @property
    def total_degree(self) -> int:
        return sum(child.total_degree for child in self.children)

    @property
    def marks(self) -> Tails:
        return tuple(sorted(self.tails + sum((child.marks for child in self.children), ())))

    @property
    def degree_product(self) -> int:
        result = 1
        for child in self.children:
            result *= child.degree_product
        return result

    @property
    def aut(self) -> int:
        return _multiset_aut(self.children)

    def as_list(self):
        return [list(self.tails), [c.as_list() for c in self.children]]

    @classmethod
    def from_list(cls, data) -> "DashedVertex":
        tails, children = data
        return cls.of(tails, [Branch.from_list(c) for c in children])


Flag = namedtuple("Flag", ["edge", "other", "degree"])


@dataclass(frozen=True)
class DecoratedGraph:
    genus: Tuple[int, ...]
    mu: Tuple[int, ...]
    edges: Tuple[Tuple[int, int, int], ...]
    tails: Tuple[Tuple[int, int], ...] = ()
    aut: int = field(default=1, compare=False)

    @classmethod
    def of(cls, genus, mu, edges, tails=(), aut=1) -> "DecoratedGraph":
        """
        ``edges`` are ``(u, v, degree)`` triples; ``tails`` is a mapping or a
        sequence of ``(mark, vertex)`` pairs.
        """
        if isinstance(tails, dict):
            tails = tails.items()
        edges = tuple(sorted((min(u, v), max(u, v), degree) for u, v, degree in edges))
        return cls(tuple(genus), tuple(mu), edges, tuple(sorted(tuple(t) for t in tails)), aut)

    @property
    def vertex_count(self) -> int:
        return len(self.mu)

    @property
    def total_degree(self) -> int:
        return sum(degree for _, _, degree in self.edges)

    @property
    def degree_product(self) -> int:
        result = 1
        for _, _, degree in self.edges:
            result *= degree
        return result

    @property
    def a_order(self) -> int:
        return self.aut * self.degree_product

    @property
    def first_betti(self) -> int:
        return len(self.edges) - self.vertex_count + nx.number_connected_components(self.to_networkx())

    @property
    def total_genus(self) -> int:
        return sum(self.genus) + self.first_betti

    def is_tree(self) -> bool:
        return len(self.edges) == self.vertex_count - 1 and nx.is_connected(self.to_networkx())

    def tails_at(self, vertex) -> Tails:
        return tuple(sorted(mark for mark, owner in self.tails if owner == vertex))

    def flags(self, vertex) -> List[Flag]:
        result = []
        for index, (u, v, degree) in enumerate(self.edges):
            if u == vertex:
                result.append(Flag(index, v, degree))
            elif v == vertex:
                result.append(Flag(index, u, degree))
        return result

    def valence(self, vertex) -> int:
        return len(self.flags(vertex)) + len(self.tails_at(vertex))

    def to_networkx(self) -> nx.MultiGraph:
        graph = nx.MultiGraph()
        for vertex, (g, mu) in enumerate(zip(self.genus, self.mu)):
            graph.add_node(vertex, genus=g, mu=mu, tails=self.tails_at(vertex))
        for u, v, degree in self.edges:
            graph.add_edge(u, v, degree=degree)
        return graph

    def validate(self, n: Optional[int] = None, d: Optional[int] = None, genus: Optional[int] = None):
        if not self.mu:
            raise InvalidInput("graph has no vertices")
        if len(self.genus) != len(self.mu) or any(g not in (0, 1) for g in self.genus):
            raise InvalidInput("vertex genera must be 0 or 1")
        if n is not None and any(not 0 <= mu <= n for mu in self.mu):
            raise InvalidInput("vertex label outside 0..%d" % n)
        for u, v, degree in self.edges:
            if u == v:
                raise InvalidInput("self-loop at vertex %d" % u)
            if degree < 1:
                raise InvalidInput("edge degrees must be positive")
            if self.mu[u] == self.mu[v]:
                raise InvalidInput("edge %d-%d joins two vertices labelled %d" % (u, v, self.mu[u]))
        if any(not 0 <= owner < self.vertex_count for _, owner in self.tails):
            raise InvalidInput("tail attached to a missing vertex")
        if len({mark for mark, _ in self.tails}) != len(self.tails):
            raise InvalidInput("mark used twice")
        if not nx.is_connected(self.to_networkx()):
            raise InvalidInput("graph is not connected")
        for vertex in range(self.vertex_count):
            if not self.flags(vertex) and self.valence(vertex) + self.genus[vertex] < 3:
                raise InvalidInput("contracted vertex %d is unstable" % vertex)
        if d is not None and self.total_degree != d:
            raise InvalidInput("total degree %d, expected %d" % (self.total_degree, d))
        if genus is not None and self.total_genus != genus:
            raise InvalidInput("total genus %d, expected %d" % (self.total_genus, genus))

    def relabeled(self, permutation) -> "DecoratedGraph":
        """The same graph with vertex ``i`` renamed ``permutation[i]``."""
        genus = [0] * self.vertex_count
        mu = [0] * self.vertex_count
        for old, new in enumerate(permutation):
            genus[new] = self.genus[old]
            mu[new] = self.mu[old]
        return DecoratedGraph.of(
            genus,
            mu,
            [(permutation[u], permutation[v], degree) for u, v, degree in self.edges],
            [(mark, permutation[owner]) for mark, owner in self.tails],
        )

    def canonical(self) -> "DecoratedGraph":
        """Isomorphic copy in canonical vertex order, with ``aut`` filled in."""
        return _canonicalize(self)

    def encode(self) -> str:
        canonical = self.canonical()
        if canonical.is_tree():
            return "T" + _dumps(_rooted_list(canonical, 0))
        return "G" + _dumps([list(canonical.genus), list(canonical.mu),
                             [list(e) for e in canonical.edges], [list(t) for t in canonical.tails]])

    @classmethod
    def decode(cls, encoding: str) -> "DecoratedGraph":
        kind, body = encoding[:1], json.loads(encoding[1:])
        if kind == "T":
            genus, mu, tails, children = body
            return _graph_from_rooted(genus, mu, tuple(tails), [Branch.from_list(c) for c in children]).canonical()
        if kind == "G":
            genus, mu, edges, tails = body
            return cls.of(genus, mu, edges, tails).canonical()
        raise InvalidInput("unknown graph encoding %r" % encoding[:16])


def _adjacent_branches(graph: DecoratedGraph, vertex: int, parent_edge: Optional[int]) -> Tuple[Branch, ...]:
    children = []
    for flag in graph.flags(vertex):
        if flag.edge == parent_edge:
            continue
        children.append(Branch(
            flag.degree,
            graph.mu[flag.other],
            graph.tails_at(flag.other),
            _adjacent_branches(graph, flag.other, flag.edge),
            graph.genus[flag.other],
        ))
    return tuple(sorted(children))


def _rooted_key(graph: DecoratedGraph, root: int):
    return graph.genus[root], graph.mu[root], graph.tails_at(root), _adjacent_branches(graph, root, None)


def _rooted_list(graph: DecoratedGraph, root: int):
    genus, mu, tails, children = _rooted_key(graph, root)
    return [genus, mu, list(tails), [child.as_list() for child in children]]


def _graph_from_rooted(genus, mu, tails, children, aut=1) -> DecoratedGraph:
    genera, labels, edges, marks = [genus], [mu], [], [(t, 0) for t in tails]

    def attach(parent, branch):
        vertex = len(labels)
        genera.append(branch.genus)
        labels.append(branch.mu)
        edges.append((parent, vertex, branch.degree))
        marks.extend((t, vertex) for t in branch.tails)
        for child in branch.children:
            attach(vertex, child)

    for child in sorted(children):
        attach(0, child)
    return DecoratedGraph.of(genera, labels, edges, marks, aut)


def _permuted_key(graph: DecoratedGraph, permutation):
    genus = [0] * graph.vertex_count
    mu = [0] * graph.vertex_count
    for old, new in enumerate(permutation):
        genus[new] = graph.genus[old]
        mu[new] = graph.mu[old]
    edges = sorted(
        (min(permutation[u], permutation[v]), max(permutation[u], permutation[v]), degree)
        for u, v, degree in graph.edges
    )
    tails = sorted((mark, permutation[owner]) for mark, owner in graph.tails)
    return tuple(mu), tuple(genus), tuple(edges), tuple(tails)


@lru_cache(maxsize=None)
def _canonicalize(graph: DecoratedGraph) -> DecoratedGraph:
    if graph.is_tree():
        keys = [_rooted_key(graph, root) for root in range(graph.vertex_count)]
        best = min(keys)
        genus, mu, tails, children = best
        aut = keys.count(best) * _multiset_aut(children)
        return _graph_from_rooted(genus, mu, tails, children, aut)

    best, hits = None, 0
    for permutation in itertools.permutations(range(graph.vertex_count)):
        key = _permuted_key(graph, permutation)
        if best is None or key < best:
            best, hits = key, 1
        elif key == best:
            hits += 1
    mu, genus, edges, tails = best
    parallel = 1
    for multiplicity in Counter(edges).values():
        parallel *= factorial(multiplicity)
    return DecoratedGraph.of(genus, mu, edges, tails, hits * parallel)


def _subsets(marks: Tails):
    for size in range(len(marks) + 1):
        yield from itertools.combinations(marks, size)


def _multisets(candidates, degree: int, marks: Tails, size: Optional[int] = None):
    """
    Sorted tuples of candidates (repetition allowed) whose degrees add up to
    ``degree`` and whose marks partition ``marks``; exactly ``size`` members
    when given. Every candidate has positive degree.
    """
    results = []

    def extend(start, degree_left, marks_left, chosen):
        if degree_left == 0:
            if not marks_left and (size is None or len(chosen) == size):
                results.append(tuple(chosen))
            return
        if size is not None and len(chosen) == size:
            return
        for i in range(start, len(candidates)):
            item = candidates[i]
            item_marks = frozenset(item.marks)
            if item.total_degree <= degree_left and item_marks <= marks_left:
                extend(i, degree_left - item.total_degree, marks_left - item_marks, chosen + [item])

    extend(0, degree, frozenset(marks), [])
    return results


@lru_cache(maxsize=None)
def _branches(n: int, parent: int, degree: int, marks: Tails) -> Tuple[Branch, ...]:
    """Branches below a vertex labelled ``parent`` of total degree ``degree`` carrying exactly ``marks``."""
    found = []
    for own in range(1, degree + 1):
        for mu in range(n + 1):
            if mu == parent:
                continue
            for tails in _subsets(marks):
                rest = tuple(mark for mark in marks if mark not in tails)
                for children in _forests(n, mu, degree - own, rest):
                    found.append(Branch(own, mu, tails, children))
    return tuple(sorted(found))


def _candidate_branches(n, parent, degree, marks):
    return sorted(
        branch
        for sub_degree in range(1, degree + 1)
        for sub_marks in _subsets(marks)
        for branch in _branches(n, parent, sub_degree, sub_marks)
    )


@lru_cache(maxsize=None)
def _forests(n: int, parent: int, degree: int, marks: Tails) -> Tuple[Tuple[Branch, ...], ...]:
    if degree == 0:
        return ((),) if not marks else ()
    return tuple(_multisets(_candidate_branches(n, parent, degree, marks), degree, marks))


def clear_enumeration_caches():
    """Drop the memoised branches, forests and canonical forms of earlier enumerations."""
    for cached in (_canonicalize, _branches, _forests):
        cached.cache_clear()


def _check_range(n, d, k=0):
    if n < 1:
        raise InvalidInput("ambient dimension must be at least 1, got %r" % n)
    if d < 1:
        raise InvalidInput("degree must be positive, got %r" % d)
    if k < 0:
        raise InvalidInput("mark count must be non-negative, got %r" % k)


def enumerate_genus0_trees(n: int, d: int, k: int = 0) -> List[DecoratedGraph]:
    """Genus-zero fixed loci of the space of k-pointed degree-d maps to P^n, up to isomorphism."""
    _check_range(n, d, k)
    marks = tuple(range(1, k + 1))
    found: Dict[str, DecoratedGraph] = {}
    for mu in range(n + 1):
        for root_tails in _subsets(marks):
            rest = tuple(mark for mark in marks if mark not in root_tails)
            for children in _forests(n, mu, d, rest):
                graph = _graph_from_rooted(0, mu, root_tails, children).canonical()
                found.setdefault(graph.encode(), graph)
    logger.debug("genus-zero trees n=%d d=%d k=%d: %d", n, d, k, len(found))
    return [found[key] for key in sorted(found)]


def _compositions(total: int, parts: int):
    for cuts in itertools.combinations(range(1, total), parts - 1):
        bounds = (0,) + cuts + (total,)
        yield tuple(bounds[i + 1] - bounds[i] for i in range(parts))


def enumerate_effective_genus1_graphs(n: int, d: int, k: int = 0) -> List[DecoratedGraph]:
    """Fixed loci whose genus is carried by a cycle of non-contracted components."""
    _check_range(n, d, k)
    marks = tuple(range(1, k + 1))
    found: Dict[str, DecoratedGraph] = {}
    for size in range(2, d + 1):
        pairs = list(itertools.combinations(range(size), 2))
        for shape in itertools.combinations_with_replacement(pairs, size):
            skeleton = nx.MultiGraph()
            skeleton.add_nodes_from(range(size))
            skeleton.add_edges_from(shape)
            if not nx.is_connected(skeleton):
                continue
            for degrees in _compositions(d, size):
                for labels in itertools.product(range(n + 1), repeat=size):
                    if any(labels[u] == labels[v] for u, v in shape):
                        continue
                    for owners in itertools.product(range(size), repeat=k):
                        graph = DecoratedGraph.of(
                            (0,) * size,
                            labels,
                            [(u, v, degree) for (u, v), degree in zip(shape, degrees)],
                            zip(marks, owners),
                        ).canonical()
                        found.setdefault(graph.encode(), graph)
    logger.debug("cycle graphs n=%d d=%d k=%d: %d", n, d, k, len(found))
    return [found[key] for key in sorted(found)]


@dataclass
class FlatTree:
    """
    Vertex-indexed view of a refined tree. Vertex 0 is the root; every other
    vertex is identified with the edge joining it to its parent.
    """

    parent: List[Optional[int]]
    mu: List[Optional[int]]
    degree: List[Optional[int]]
    tails: List[Tails]
    plus: FrozenSet[int]
    zero: FrozenSet[int]

    def children(self, vertex) -> List[int]:
        return [v for v, p in enumerate(self.parent) if p == vertex]

    def subtree(self, vertex) -> List[int]:
        found = [vertex]
        for child in self.children(vertex):
            found.extend(self.subtree(child))
        return found

    def label(self, vertex) -> int:
        """Vertex label, with contracted vertices reading the root's label."""
        return self.mu[0] if vertex in self.zero else self.mu[vertex]


def check_tree_conditions(flat: FlatTree) -> List[str]:
    """The conditions (i)-(v) of a refined decorated rooted tree that ``flat`` violates."""
    failed = []
    root_children = flat.children(0)
    if not flat.plus or not (flat.plus | flat.zero) <= set(root_children) or flat.plus & flat.zero:
        failed.append("shape")
        return failed

    heads = {(flat.mu[v], flat.degree[v]) for v in flat.plus}
    if len(heads) != 1:
        failed.append("i")
    else:
        head = next(iter(heads))
        for v in root_children:
            if v not in flat.plus and v not in flat.zero and (flat.mu[v], flat.degree[v]) == head:
                failed.append("ii")
                break

    for v in range(1, len(flat.parent)):
        if v in flat.zero:
            continue
        if flat.mu[v] is None or flat.degree[v] is None or flat.degree[v] < 1:
            failed.append("iii")
            break
        if flat.label(flat.parent[v]) == flat.mu[v]:
            failed.append("iii")
            break

    for v in flat.zero:
        children = flat.children(v)
        if not children or 1 + len(children) + len(flat.tails[v]) < 3:
            failed.append("iv")
            break

    if sum(flat.degree[v] for v in flat.plus if flat.degree[v]) < 2:
        failed.append("v")
    return failed


@dataclass(frozen=True)
class TreeLocusData:
    sigma: AdmissibleTriple
    d_plus: int
    mu_plus: int
    edg_plus_count: int
    dim_plus: int
    f_prime_rank: int


@dataclass(frozen=True, order=True)
class RefinedTree:
    """
    A refined decorated rooted tree: the root (the contracted genus-one part)
    with its thick branches ``thick`` (the set Edg+), the remaining branches
    ``others`` and contracted genus-zero vertices ``dashed`` hanging off it.
    """

    root_mu: int
    root_tails: Tails
    thick: Tuple[Branch, ...]
    others: Tuple[Branch, ...] = ()
    dashed: Tuple[DashedVertex, ...] = ()

    @classmethod
    def of(cls, root_mu, root_tails=(), thick=(), others=(), dashed=()) -> "RefinedTree":
        return cls(root_mu, tuple(sorted(root_tails)), tuple(sorted(thick)),
                   tuple(sorted(others)), tuple(sorted(dashed)))

    @property
    def root_edge_count(self) -> int:
        return len(self.thick) + len(self.others) + len(self.dashed)

    @property
    def total_degree(self) -> int:
        return sum(piece.total_degree for piece in self.thick + self.others + self.dashed)

    @property
    def marks(self) -> Tails:
        pieces = self.thick + self.others + self.dashed
        return tuple(sorted(self.root_tails + sum((piece.marks for piece in pieces), ())))

    @property
    def d_plus(self) -> int:
        return self.thick[0].degree

    @property
    def mu_plus(self) -> int:
        return self.thick[0].mu

    @property
    def aut(self) -> int:
        return _multiset_aut(self.thick) * _multiset_aut(self.others) * _multiset_aut(self.dashed)

    @property
    def degree_product(self) -> int:
        result = 1
        for piece in self.thick + self.others + self.dashed:
            result *= piece.degree_product
        return result

    def flatten(self) -> FlatTree:
        parent, mu, degree, tails = [None], [self.root_mu], [None], [self.root_tails]

        def attach(at, branch):
            vertex = len(parent)
            parent.append(at)
            mu.append(branch.mu)
            degree.append(branch.degree)
            tails.append(branch.tails)
            for child in branch.children:
                attach(vertex, child)
            return vertex

        plus = [attach(0, branch) for branch in self.thick]
        for branch in self.others:
            attach(0, branch)
        zero = []
        for vertex in self.dashed:
            zero.append(len(parent))
            parent.append(0)
            mu.append(None)
            degree.append(None)
            tails.append(vertex.tails)
            for child in vertex.children:
                attach(zero[-1], child)
        return FlatTree(parent, mu, degree, tails, frozenset(plus), frozenset(zero))

    def validate(self):
        failed = check_tree_conditions(self.flatten())
        if failed:
            raise InvalidInput("tree violates condition(s) %s" % ", ".join(failed))

    def encode(self) -> str:
        return "R" + _dumps([
            self.root_mu,
            list(self.root_tails),
            [b.as_list() for b in self.thick],
            [b.as_list() for b in self.others],
            [v.as_list() for v in self.dashed],
        ])

    @classmethod
    def decode(cls, encoding: str) -> "RefinedTree":
        if not encoding.startswith("R"):
            raise InvalidInput("not a refined tree encoding: %r" % encoding[:16])
        root_mu, root_tails, thick, others, dashed = json.loads(encoding[1:])
        return cls.of(
            root_mu,
            root_tails,
            [Branch.from_list(b) for b in thick],
            [Branch.from_list(b) for b in others],
            [DashedVertex.from_list(v) for v in dashed],
        )


def _dashed_candidates(n, root_mu, degree, marks):
    found = []
    for sub_degree in range(1, degree + 1):
        for sub_marks in _subsets(marks):
            for tails in _subsets(sub_marks):
                rest = tuple(mark for mark in sub_marks if mark not in tails)
                for children in _forests(n, root_mu, sub_degree, rest):
                    if children and len(children) + len(tails) >= 2:
                        found.append(DashedVertex(tails, children))
    return sorted(found)


def _mark_buckets(marks: Tails, buckets: int):
    for owners in itertools.product(range(buckets), repeat=len(marks)):
        yield tuple(tuple(m for m, o in zip(marks, owners) if o == b) for b in range(buckets))


def enumerate_refined_trees(n: int, d: int, k: int = 0) -> List[RefinedTree]:
    """Refined decorated rooted trees of total degree ``d`` with marks ``1..k``, up to isomorphism."""
    _check_range(n, d, k)
    marks = tuple(range(1, k + 1))
    found = set()
    for root_mu in range(n + 1):
        for mu_plus in range(n + 1):
            if mu_plus == root_mu:
                continue
            for d_plus in range(1, d + 1):
                for count in range(1, d // d_plus + 1):
                    if count * d_plus < 2:
                        continue
                    budget = d - count * d_plus
                    for root_tails, thick_marks, other_marks, dashed_marks in _mark_buckets(marks, 4):
                        thick_candidates = [
                            b for b in _candidate_branches(n, root_mu, d_plus + budget, thick_marks)
                            if b.head == (d_plus, mu_plus)
                        ]
                        other_candidates = [
                            b for b in _candidate_branches(n, root_mu, budget, other_marks)
                            if b.head != (d_plus, mu_plus)
                        ]
                        dashed_candidates = _dashed_candidates(n, root_mu, budget, dashed_marks)
                        for thick_extra in range(budget + 1):
                            thick_sets = _multisets(
                                thick_candidates, count * d_plus + thick_extra, thick_marks, size=count
                            )
                            if not thick_sets:
                                continue
                            for other_degree in range(budget - thick_extra + 1):
                                dashed_degree = budget - thick_extra - other_degree
                                other_sets = _multisets(other_candidates, other_degree, other_marks)
                                dashed_sets = _multisets(dashed_candidates, dashed_degree, dashed_marks)
                                for thick, others, dashed in itertools.product(thick_sets, other_sets, dashed_sets):
                                    found.add(RefinedTree(root_mu, root_tails, thick, others, dashed))
    logger.debug("refined trees n=%d d=%d k=%d: %d", n, d, k, len(found))
    return sorted(found)


def automorphism_order(tree: RefinedTree) -> AutomorphismOrder:
    aut = tree.aut
    return AutomorphismOrder(aut, aut * tree.degree_product)


def tree_locus_data(tree: RefinedTree) -> TreeLocusData:
    j_p = mask_of(tree.root_tails)
    sigma = AdmissibleTriple(tree.root_edge_count, j_p, mask_of(tree.marks) & ~j_p)
    count = len(tree.thick)
    dim_plus = count - 2 if tree.d_plus == 1 else count - 1
    return TreeLocusData(sigma, tree.d_plus, tree.mu_plus, count, dim_plus, dim_plus + 1)


def project_tree(tree: RefinedTree) -> DecoratedGraph:
    """Collapse the contracted vertices into the root, which becomes the genus-one vertex."""
    flat = tree.flatten()
    index = {0: 0}
    for v in range(1, len(flat.parent)):
        if v not in flat.zero:
            index[v] = len(index)
    for v in flat.zero:
        index[v] = 0

    genus, mu = [1], [flat.mu[0]]
    for v in sorted(index, key=index.get):
        if v and v not in flat.zero:
            genus.append(0)
            mu.append(flat.mu[v])
    edges = [(index[flat.parent[v]], index[v], flat.degree[v])
             for v in range(1, len(flat.parent)) if v not in flat.zero]
    tails = [(mark, index[v]) for v, marks in enumerate(flat.tails) for mark in marks]
    return DecoratedGraph.of(genus, mu, edges, tails).canonical()


def _genus0_piece(flat: FlatTree, cut_tails: Tails, vertices: Iterable[int]) -> DecoratedGraph:
    """Genus-zero graph on ``vertices`` hanging from a new cut vertex labelled with the root's label."""
    index = {}
    for v in vertices:
        index[v] = len(index) + 1
    mu = [flat.mu[0]] + [flat.mu[v] for v in sorted(index, key=index.get)]
    edges = [(index.get(flat.parent[v], 0), index[v], flat.degree[v]) for v in index]
    tails = [(mark, 0) for mark in cut_tails] + [(mark, index[v]) for v in index for mark in flat.tails[v]]
    return DecoratedGraph.of([0] * len(mu), mu, edges, tails).canonical()


def branch_graph(tree: RefinedTree, vertex: int) -> DecoratedGraph:
    """
    The branch cut off by the edge ending at ``vertex`` (in the numbering of
    :meth:`RefinedTree.flatten`), with the new tail 0 at the cut.
    """
    flat = tree.flatten()
    if not 0 < vertex < len(flat.parent):
        raise InvalidInput("no edge ends at vertex %r" % vertex)
    if vertex in flat.zero:
        raise InvalidInput("edge to vertex %d is a dashed edge" % vertex)
    if flat.parent[vertex] != 0 and flat.parent[vertex] not in flat.zero:
        raise InvalidInput("edge to vertex %d does not leave the root or a contracted vertex" % vertex)
    return _genus0_piece(flat, (0,), flat.subtree(vertex))


def bubble_graph(tree: RefinedTree, vertex: int) -> DecoratedGraph:
    """
    The genus-zero piece attached to the root through the root edge ending at
    ``vertex``: its branch graph, or for a contracted vertex the union of its
    branches glued at a vertex carrying tail 0 and the vertex's own marks.
    """
    flat = tree.flatten()
    if vertex not in flat.children(0):
        raise InvalidInput("vertex %r is not a child of the root" % vertex)
    if vertex not in flat.zero:
        return branch_graph(tree, vertex)
    below = [v for child in flat.children(vertex) for v in flat.subtree(child)]
    return _genus0_piece(flat, (0,) + flat.tails[vertex], below)
