"""The pointwise order on filters, exhaustive enumeration, and ultrafilters."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache

from .errors import (
    BudgetExceeded,
    EmptyFamily,
    GroundMismatch,
    NotAChain,
)
from .filters import FuzzyFilter, _labels, filter_violation, pullback_indices, table_leq
from .ground import GroundSet, ground_morphism
from .lattice import QmlLattice, implication, is_residuated
from .verdict import Verdict

DEFAULT_BUDGET = 10 ** 7


def filter_leq(F1: FuzzyFilter, F2: FuzzyFilter) -> Verdict:
    if F1.ground != F2.ground:
        raise GroundMismatch("filters live on different grounds")
    i = table_leq(F1.ground.lattice, F1.table, F2.table)
    if i is None:
        return Verdict(True)
    return Verdict(False, {"g": _labels(F1.ground, i)})


# backtracking search shared by filter and topology enumeration


def search_tables(L: QmlLattice, size: int, order: Sequence[int], pins: dict[int, int],
                  pairs: Iterable[tuple[int, int]],
                  triples: Iterable[tuple[tuple, int, int, int]],
                  budget: int) -> list[tuple[int, ...]]:
    """All tables T on ``size`` slots with values in L meeting every constraint.

    ``pairs`` are ``(a, c)`` meaning T(a) <= T(c); ``triples`` are
    ``(op, a, b, c)`` meaning op[T(a)][T(b)] <= T(c).  Each constraint is
    checked as soon as its last slot (in ``order``) is assigned.  More than
    ``budget`` tentative assignments raises :class:`BudgetExceeded`.
    """
    pos = {slot: k for k, slot in enumerate(order)}
    at_pairs: list[list[tuple[int, int]]] = [[] for _ in order]
    at_triples: list[list[tuple]] = [[] for _ in order]
    for a, c in pairs:
        at_pairs[max(pos[a], pos[c])].append((a, c))
    for op, a, b, c in triples:
        at_triples[max(pos[a], pos[b], pos[c])].append((op, a, b, c))
    le = L.leq
    n = len(L)
    domains = [(pins[slot],) if slot in pins else tuple(range(n)) for slot in order]
    table = [0] * size
    out: list[tuple[int, ...]] = []
    nodes = 0

    def ok(k: int) -> bool:
        for a, c in at_pairs[k]:
            if not le[table[a]][table[c]]:
                return False
        for op, a, b, c in at_triples[k]:
            if not le[op[table[a]][table[b]]][table[c]]:
                return False
        return True

    def descend(k: int):
        nonlocal nodes
        if k == len(order):
            out.append(tuple(table))
            return
        slot = order[k]
        for v in domains[k]:
            nodes += 1
            if nodes > budget:
                raise BudgetExceeded(
                    f"search exceeded {budget} candidate assignments",
                    search_space=n ** size, budget=budget)
            table[slot] = v
            if ok(k):
                descend(k + 1)

    descend(0)
    out.sort()
    return out


@lru_cache(maxsize=64)
def _filter_tables(G: GroundSet, budget: int) -> tuple[tuple[int, ...], ...]:
    L, S = G.lattice, G.space
    pairs = [(c, g) for g in range(S.size) for c in S.lower_covers[g]]
    triples = [(L.tensor, f, g, S.tensor[f][g]) for f in range(S.size) for g in range(S.size)]
    pins = {S.zero: L.bottom, S.one: L.top}
    return tuple(search_tables(L, S.size, S.linear_extension, pins, pairs, triples, budget))


@dataclass(frozen=True)
class FilterPoset:
    ground: GroundSet
    filters: tuple[FuzzyFilter, ...]

    def __len__(self) -> int:
        return len(self.filters)

    def le(self, i: int, j: int) -> bool:
        return table_leq(self.ground.lattice, self.filters[i].table,
                         self.filters[j].table) is None

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        """Full order table; quadratic in the number of filters."""
        n = len(self.filters)
        return tuple(tuple(self.le(i, j) for j in range(n)) for i in range(n))

    def index(self, F: FuzzyFilter) -> int:
        return self._positions[F.table]

    @cached_property
    def _positions(self) -> dict[tuple[int, ...], int]:
        return {F.table: i for i, F in enumerate(self.filters)}


def enumerate_filters(G: GroundSet, budget: int = DEFAULT_BUDGET) -> FilterPoset:
    """Every fuzzy filter on G, sorted by table.

    The search walks L^X along a linear extension, keeps the table monotone
    across covering pairs with both endpoints pinned, and prunes on the
    tensor axiom as soon as a triple is fully assigned.
    """
    tables = _filter_tables(G, budget)
    return FilterPoset(G, tuple(FuzzyFilter(G, t) for t in tables))


def _strict_rank(L: QmlLattice) -> tuple[int, ...]:
    rank = [0] * len(L)
    for r, e in enumerate(L.linear_extension):
        rank[e] = r
    return tuple(rank)


def maximal_filters(poset: FilterPoset) -> list[FuzzyFilter]:
    """All maximal elements, in the poset's order."""
    L = poset.ground.lattice
    rank = _strict_rank(L)
    weight = [sum(rank[v] for v in F.table) for F in poset.filters]
    order = sorted(range(len(poset)), key=lambda i: (-weight[i], i))
    maximal: list[int] = []
    for i in order:
        # anything strictly above i has larger weight, so was seen already
        if not any(poset.le(i, j) for j in maximal):
            maximal.append(i)
    return [poset.filters[i] for i in sorted(maximal)]


# residuation on L^X


def pointwise_residuum(G: GroundSet, g: Sequence[int], f: Sequence[int]) -> tuple[int, ...]:
    r = implication(G.lattice)
    return tuple(r(a, b) for a, b in zip(g, f))


def negation_table(G: GroundSet) -> tuple[int, ...]:
    """For each fuzzy set index f, the index of ``f -> 0_X``."""
    S = G.space
    zero = S.sets[S.zero]
    return tuple(S.index(pointwise_residuum(G, f, zero)) for f in S.sets)


def ultrafilter_characterization(U: FuzzyFilter) -> Verdict:
    """Does ``U(f) == U(f -> 0_X) -> bottom`` hold for every f?

    ``detail["one_sided"]`` reports the inequality ``<=`` of the same
    identity, which the theory expects of every filter.  On a lattice that
    is not residuated the implication is still the join formula and
    ``detail["residuated"]`` is false.
    """
    G = U.ground
    L = G.lattice
    r = implication(G.lattice)
    neg = negation_table(G)
    E = L.elements
    first = one_sided = None
    for f, nf in enumerate(neg):
        rhs = r(U.table[nf], L.bottom)
        if first is None and U.table[f] != rhs:
            first = (f, rhs)
        if one_sided is None and not L.le(U.table[f], rhs):
            one_sided = f
    detail: dict = {"one_sided": one_sided is None, "residuated": is_residuated(L)}
    if one_sided is not None:
        detail["one_sided_witness"] = _labels(G, one_sided)
    if first is None:
        return Verdict(True, detail=detail)
    f, rhs = first
    detail.update({"U(f)": E[U.table[f]], "U(f->0)->bottom": E[rhs]})
    return Verdict(False, {"f": _labels(G, f)}, detail)


def chain_join(chain: Sequence[FuzzyFilter]) -> FuzzyFilter:
    chain = list(chain)
    if not chain:
        raise EmptyFamily("join of an empty chain")
    G = chain[0].ground
    if any(F.ground != G for F in chain):
        raise GroundMismatch("filters live on different grounds")
    L = G.lattice
    for i in range(len(chain)):
        for j in range(i + 1, len(chain)):
            a, b = chain[i].table, chain[j].table
            if table_leq(L, a, b) is not None and table_leq(L, b, a) is not None:
                raise NotAChain("filters are not totally ordered",
                                {"first": i, "second": j})
    table = tuple(L.join_all(F.table[k] for F in chain) for k in range(G.space.size))
    bad = filter_violation(G, table)
    if bad is not None:  # pragma: no cover - a chain join is always a filter
        raise AssertionError(f"join of a chain is not a filter: {bad}")
    return FuzzyFilter(G, table)


def image_filter(phi, F: FuzzyFilter, target: GroundSet) -> FuzzyFilter:
    """``g |-> F(g . phi)`` on the target ground; ``phi`` maps points to points."""
    if F.ground.lattice != target.lattice:
        raise GroundMismatch("image filter needs the same lattice on both grounds")
    gm = ground_morphism(F.ground, target, phi)
    table = tuple(F.table[x] for x in pullback_indices(gm))
    bad = filter_violation(target, table)
    if bad is not None:  # pragma: no cover - images of filters are filters
        raise AssertionError(f"image of a filter is not a filter: {bad}")
    image = FuzzyFilter(target, table)
    if (is_residuated(target.lattice) and ultrafilter_characterization(F)
            and not ultrafilter_characterization(image)):  # pragma: no cover
        raise AssertionError("image of an ultrafilter fails the characterization")
    return image
