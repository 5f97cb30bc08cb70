"""
Combinatorial index sets of the blowup construction and their partial orders.

Mark sets are bitmasks over ``{1..k}`` (bit ``i-1`` stands for mark ``i``).
"""
import itertools
from dataclasses import dataclass
from typing import Callable, Dict, FrozenSet, Hashable, Iterable, List, Optional, Tuple

from .exceptions import InvalidInput

MAX_MARKS = 62


def mask_of(marks: Iterable[int]) -> int:
    mask = 0
    for mark in marks:
        if not 1 <= mark <= MAX_MARKS:
            raise InvalidInput("mark %r outside 1..%d" % (mark, MAX_MARKS))
        mask |= 1 << (mark - 1)
    return mask


def members(mask: int) -> Tuple[int, ...]:
    return tuple(i + 1 for i in range(mask.bit_length()) if mask >> i & 1)


def full_mask(k: int) -> int:
    if not 0 <= k <= MAX_MARKS:
        raise InvalidInput("mark count must lie in 0..%d, got %r" % (MAX_MARKS, k))
    return (1 << k) - 1


def _is_submask(small: int, big: int) -> bool:
    return small & ~big == 0


def _format_marks(mask: int) -> str:
    return "{%s}" % ",".join(str(mark) for mark in members(mask))


@dataclass(frozen=True)
class _MarkedSplit:
    m: int
    j_p: int
    j_b: int

    @property
    def marks(self) -> int:
        return self.j_p | self.j_b

    def sort_key(self):
        return (self.m, bin(self.j_p).count("1"), members(self.j_p))

    def precedes(self, other) -> bool:
        return self != other and self.m <= other.m and _is_submask(self.j_p, other.j_p)

    def __str__(self):
        return "(%d;%s,%s)" % (self.m, _format_marks(self.j_p), _format_marks(self.j_b))


@dataclass(frozen=True)
class AdmissibleTriple(_MarkedSplit):
    """An element ``(m; J_P, J_B)`` of the index set of the genus-one blowups."""

    @classmethod
    def of(cls, m: int, j_p: Iterable[int] = (), j_b: Iterable[int] = ()) -> "AdmissibleTriple":
        return cls(m, mask_of(j_p), mask_of(j_b))

    def validate(self, d: int, k: int):
        if not 1 <= self.m <= d:
            raise InvalidInput("%s: m must lie in 1..%d" % (self, d))
        if self.j_p & self.j_b or self.marks != full_mask(k):
            raise InvalidInput("%s: J_P and J_B must partition {1..%d}" % (self, k))


@dataclass(frozen=True)
class MapSplit(_MarkedSplit):
    """An element ``(m; J_P, J_B)`` of the genus-zero map index set, ``m + |J_P| >= 2``."""

    @classmethod
    def of(cls, m: int, j_p: Iterable[int] = (), j_b: Iterable[int] = ()) -> "MapSplit":
        return cls(m, mask_of(j_p), mask_of(j_b))


@dataclass(frozen=True)
class CurveSplit:
    """``(I_P, {I_k : k in K})``: blocks of at least two points plus the leftover ``I_P``."""

    i_p: FrozenSet[Hashable]
    blocks: Tuple[FrozenSet[Hashable], ...]

    @classmethod
    def of(cls, i_p: Iterable[Hashable], blocks: Iterable[Iterable[Hashable]]) -> "CurveSplit":
        return cls(frozenset(i_p), tuple(sorted((frozenset(b) for b in blocks), key=_block_key)))

    @property
    def ground(self) -> FrozenSet[Hashable]:
        return self.i_p.union(*self.blocks)

    def collapsed(self) -> int:
        return sum(len(block) - 1 for block in self.blocks)

    def sort_key(self):
        return (-self.collapsed(), tuple(_block_key(b) for b in self.blocks), tuple(sorted(self.i_p)))

    def precedes(self, other: "CurveSplit") -> bool:
        """``self`` precedes ``other`` when every block of ``other`` sits inside a block of ``self``."""
        if self == other:
            return False
        return all(any(block <= coarse for coarse in self.blocks) for block in other.blocks)

    def __str__(self):
        inner = ",".join("{%s}" % ",".join(map(str, _block_key(b))) for b in self.blocks)
        return "({%s};%s)" % (",".join(map(str, sorted(self.i_p))), inner)


def _block_key(block):
    return tuple(sorted(block))


def enumerate_admissible_triples(d: int, k: int) -> List[AdmissibleTriple]:
    if d < 1:
        raise InvalidInput("degree must be positive, got %r" % d)
    everything = full_mask(k)
    return [
        AdmissibleTriple(m, j_p, everything & ~j_p)
        for m in range(1, d + 1)
        for j_p in range(everything + 1)
    ]


def precedes(lower, upper) -> bool:
    return lower.precedes(upper)


def meet_upper(first: AdmissibleTriple, second: AdmissibleTriple) -> AdmissibleTriple:
    """The largest triple below two incomparable ones."""
    if first == second or first.precedes(second) or second.precedes(first):
        raise InvalidInput("%s and %s are comparable" % (first, second))
    return AdmissibleTriple(
        min(first.m, second.m), first.j_p & second.j_p, first.j_b | second.j_b
    )


def _set_partitions(elements):
    if not elements:
        yield []
        return
    head, rest = elements[0], elements[1:]
    for partition in _set_partitions(rest):
        yield [[head]] + partition
        for i in range(len(partition)):
            yield partition[:i] + [[head] + partition[i]] + partition[i + 1:]


def _curve_splits(ground, genus, relative_to=None):
    elements = sorted(ground)
    splits = set()
    for size in range(len(elements) + 1):
        for i_p in itertools.combinations(elements, size):
            rest = [e for e in elements if e not in i_p]
            for partition in _set_partitions(rest):
                if not partition or any(len(block) < 2 for block in partition):
                    continue
                if genus == 0 and len(partition) + len(i_p) < 2:
                    continue
                if relative_to is not None and any(not relative_to.intersection(b) for b in partition):
                    continue
                splits.add(CurveSplit.of(i_p, partition))
    return sorted(splits, key=CurveSplit.sort_key)


def _map_splits(d, marks):
    if d < 1:
        raise InvalidInput("degree must be positive, got %r" % d)
    everything = mask_of(marks)
    splits = []
    for m in range(1, d + 1):
        for j_p in range(everything + 1):
            if _is_submask(j_p, everything) and m + bin(j_p).count("1") >= 2:
                splits.append(MapSplit(m, j_p, everything & ~j_p))
    return sorted(splits, key=MapSplit.sort_key)


@dataclass
class IndexSet:
    kind: str
    elements: list
    precedes: Callable = precedes

    def __iter__(self):
        return iter(self.elements)

    def __len__(self):
        return len(self.elements)

    def __contains__(self, item):
        return item in self.elements

    def linear_extension(self) -> "LinearExtension":
        return linear_extension(self.elements, universe=self.elements)


AUXILIARY_KINDS = ("curve-g1", "curve-g0", "curve-g1-rel", "curve-g0-rel", "map-g0")


def enumerate_auxiliary_index_set(kind: str, ground=(), relative_to=(), d: int = 1, marks=()) -> IndexSet:
    """
    Enumerate one of the auxiliary index sets.

    ``curve-*`` kinds split ``ground``; the ``-rel`` variants keep only splits
    whose blocks all meet ``relative_to``. ``map-g0`` takes the degree ``d`` and
    the mark set ``marks``.
    """
    if kind == "map-g0":
        return IndexSet(kind, _map_splits(d, marks))
    if kind not in AUXILIARY_KINDS:
        raise InvalidInput("unknown index set kind %r" % kind)
    genus = 0 if kind.startswith("curve-g0") else 1
    anchor = None
    if kind.endswith("-rel"):
        anchor = frozenset(relative_to)
        if not anchor <= frozenset(ground):
            raise InvalidInput("relative set must lie inside the ground set")
    return IndexSet(kind, _curve_splits(frozenset(ground), genus, anchor))


@dataclass
class LinearExtension:
    order: list
    predecessor: Dict[object, Optional[object]]


def _universe(items):
    sample = items[0]
    if isinstance(sample, CurveSplit):
        genus = 0 if all(len(item.blocks) + len(item.i_p) >= 2 for item in items) else 1
        return _curve_splits(sample.ground, genus)
    if not isinstance(sample, _MarkedSplit):
        raise InvalidInput("cannot order items of type %s" % type(sample).__name__)

    if any(type(item) is not type(sample) or item.marks != sample.marks for item in items):
        raise InvalidInput("items do not share one kind and one mark set")
    d = max(item.m for item in items)
    if isinstance(sample, MapSplit):
        return _map_splits(d, members(sample.marks))
    k = bin(sample.marks).count("1")
    if sample.marks != full_mask(k):
        raise InvalidInput("mark set %s is not of the form {1..k}" % _format_marks(sample.marks))
    return enumerate_admissible_triples(d, k)


def linear_extension(items: List, universe: Optional[List] = None) -> LinearExtension:
    """
    Total order refining the partial order, with deterministic tie-breaking,
    plus the immediate-predecessor map (``None`` for the minimum).

    ``items`` must be downward closed inside ``universe``, which defaults to
    the full index set the items come from.
    """
    items = list(items)
    if not items:
        return LinearExtension([], {})
    if len(set(items)) != len(items):
        raise InvalidInput("duplicate elements")

    if universe is None:
        universe = _universe(items)
    present = set(items)
    for item in items:
        for other in universe:
            if other.precedes(item) and other not in present:
                raise InvalidInput("not downward closed: %s is missing below %s" % (other, item))

    order = sorted(items, key=lambda item: item.sort_key())
    predecessor = {item: (order[i - 1] if i else None) for i, item in enumerate(order)}
    return LinearExtension(order, predecessor)
