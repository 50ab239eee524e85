"""Fuzzy filters on a ground set, continuity, meets, final and initial filters."""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import lru_cache

from .errors import (
    AxiomViolation,
    BottomAxiom,
    EmptyFamily,
    GroundMismatch,
    InvalidTable,
    MeetsNotPreserved,
    Monotonicity,
    NoCoAdjoint,
    NotOnto,
    PreconditionUnmet,
    TensorAxiom,
    TopAxiom,
)
from .ground import FuzzySet, GroundMorphism, GroundSet, _backward, _forward, compose
from .lattice import co_adjoint
from .verdict import Verdict

Table = tuple[int, ...]


@dataclass(frozen=True)
class FuzzyFilter:
    """A validated fuzzy filter; ``table[i]`` is its value on fuzzy set number i."""

    ground: GroundSet
    table: Table

    def __call__(self, g) -> int:
        if isinstance(g, FuzzySet):
            if g.ground != self.ground:
                raise GroundMismatch("fuzzy set lives on another ground")
            return self.table[g.index]
        if isinstance(g, int):
            return self.table[g]
        return self.table[self.ground.fuzzy_set(g).index]

    def labels(self) -> list[str]:
        E = self.ground.lattice.elements
        return [E[v] for v in self.table]


def read_table(G: GroundSet, table) -> Table:
    """Coerce a table given as values, a callable on fuzzy sets, or a dict keyed by index."""
    L, N = G.lattice, G.space.size
    if callable(table) and not isinstance(table, (list, tuple)):
        return tuple(L.index(table(g)) for g in G.fuzzy_sets())
    if isinstance(table, dict):
        try:
            return tuple(L.index(table[i]) for i in range(N))
        except KeyError as exc:
            raise InvalidTable(f"table is not total: missing index {exc.args[0]}",
                               {"missing": exc.args[0]}) from None
    values = list(table)
    if len(values) != N:
        raise InvalidTable(f"table needs {N} entries, one per fuzzy set, got {len(values)}",
                           {"length": len(values)})
    return tuple(L.index(v) for v in values)


def _labels(G: GroundSet, i: int) -> dict[str, str]:
    return FuzzySet(G, G.space.sets[i]).labels()


def filter_violation(G: GroundSet, table: Table) -> AxiomViolation | None:
    """First violated filter axiom in canonical order, or ``None``."""
    L, S = G.lattice, G.space
    E = L.elements
    if table[S.one] != L.top:
        return TopAxiom(f"value at the constant top set is {E[table[S.one]]}",
                        {"g": _labels(G, S.one), "value": E[table[S.one]]})
    if table[S.zero] != L.bottom:
        return BottomAxiom(f"value at the constant bottom set is {E[table[S.zero]]}",
                           {"g": _labels(G, S.zero), "value": E[table[S.zero]]})
    le = L.leq
    for f in range(S.size):
        row = S.leq[f]
        tf = table[f]
        for g in range(S.size):
            if row[g] and not le[tf][table[g]]:
                return Monotonicity(
                    f"f <= g but value {E[tf]} !<= {E[table[g]]}",
                    {"f": _labels(G, f), "g": _labels(G, g)})
    ten, sten = L.tensor, S.tensor
    for f in range(S.size):
        tf = table[f]
        row = sten[f]
        for g in range(S.size):
            if not le[ten[tf][table[g]]][table[row[g]]]:
                return TensorAxiom(
                    f"F(h)*F(k) = {E[ten[tf][table[g]]]} !<= F(h*k) = {E[table[row[g]]]}",
                    {"h": _labels(G, f), "k": _labels(G, g)})
    return None


def check_fuzzy_filter(G: GroundSet, table) -> FuzzyFilter:
    t = read_table(G, table)
    bad = filter_violation(G, t)
    if bad is not None:
        raise bad
    return FuzzyFilter(G, t)


def point_filter(G: GroundSet, point) -> FuzzyFilter:
    p = G.point_index(point)
    return FuzzyFilter(G, tuple(v[p] for v in G.space.sets))


def minimum_filter(G: GroundSet) -> FuzzyFilter:
    """Top on the constant top set, bottom everywhere else."""
    L, S = G.lattice, G.space
    return FuzzyFilter(G, tuple(L.top if i == S.one else L.bottom for i in range(S.size)))


def _same_ground(filters: Sequence[FuzzyFilter]) -> GroundSet:
    G = filters[0].ground
    if any(F.ground != G for F in filters):
        raise GroundMismatch("filters live on different grounds")
    return G


def meet_filters(family: Iterable[FuzzyFilter]) -> FuzzyFilter:
    family = list(family)
    if not family:
        raise EmptyFamily("meet of an empty family of filters")
    G = _same_ground(family)
    meet = G.lattice.meet_all
    table = tuple(meet(F.table[i] for F in family) for i in range(G.space.size))
    bad = filter_violation(G, table)
    if bad is not None:  # pragma: no cover - meets of filters are filters
        raise AssertionError(f"meet of filters is not a filter: {bad}")
    return FuzzyFilter(G, table)


# continuity


@lru_cache(maxsize=4096)
def pullback_indices(gm: GroundMorphism) -> Table:
    """For each b in M^Y (by index), the index of its backward image in L^X."""
    S = gm.source.space
    return tuple(S.index(_backward(gm, b)) for b in gm.target.space.sets)


def continuity_witness(gm: GroundMorphism, src: Table, tgt: Table) -> int | None:
    """First b with phi_op(tgt(b)) !<= src(back(b)), as an index into M^Y."""
    le, m = gm.source.lattice.leq, gm.phi_op.map
    for b, x in enumerate(pullback_indices(gm)):
        if not le[m[tgt[b]]][src[x]]:
            return b
    return None


def adjoint_continuity_witness(gm: GroundMorphism, src: Table, tgt: Table) -> int | None:
    """Same test in adjoint form: tgt(b) <= right_adjoint(src(back(b)))."""
    le, ra = gm.target.lattice.leq, gm.right_adjoint
    for b, x in enumerate(pullback_indices(gm)):
        if not le[tgt[b]][ra[src[x]]]:
            return b
    return None


def _check_grounds(gm: GroundMorphism, src_ground: GroundSet, tgt_ground: GroundSet):
    if src_ground != gm.source:
        raise GroundMismatch("source structure is not on the morphism's source ground")
    if tgt_ground != gm.target:
        raise GroundMismatch("target structure is not on the morphism's target ground")


def continuity_verdict(gm: GroundMorphism, src: Table, tgt: Table) -> Verdict:
    w = continuity_witness(gm, src, tgt)
    w_adj = adjoint_continuity_witness(gm, src, tgt)
    if (w is None) != (w_adj is None):  # pragma: no cover - Galois law broken
        raise AssertionError(f"continuity forms disagree at {w!r} / {w_adj!r}")
    if w is None:
        return Verdict(True, detail={"adjoint_form": True})
    b = FuzzySet(gm.target, gm.target.space.sets[w])
    E_M, E_L = gm.target.lattice.elements, gm.source.lattice.elements
    x = pullback_indices(gm)[w]
    return Verdict(False, {"b": b.labels()},
                   {"adjoint_form": False,
                    "phi_op(target(b))": E_L[gm.phi_op.map[tgt[w]]],
                    "source(back(b))": E_L[src[x]],
                    "target(b)": E_M[tgt[w]]})


def check_continuity(gm: GroundMorphism, F: FuzzyFilter, target: FuzzyFilter) -> Verdict:
    """Is ``gm`` filter-continuous from F to target?  Both forms are evaluated."""
    _check_grounds(gm, F.ground, target.ground)
    return continuity_verdict(gm, F.table, target.table)


def compose_check(gm1: GroundMorphism, F1: FuzzyFilter, F2: FuzzyFilter,
                  gm2: GroundMorphism, F3: FuzzyFilter) -> bool:
    """Recompute continuity of the composite of two continuous legs."""
    if not check_continuity(gm1, F1, F2):
        raise PreconditionUnmet("first leg is not continuous")
    if not check_continuity(gm2, F2, F3):
        raise PreconditionUnmet("second leg is not continuous")
    return bool(check_continuity(compose(gm2, gm1), F1, F3))


# final and initial structures


def final_table(gm: GroundMorphism, src: Table) -> Table:
    """``b |-> right_adjoint(src(phi_op . b . f))`` as a raw table on M^Y."""
    ra = gm.right_adjoint
    return tuple(ra[src[x]] for x in pullback_indices(gm))


def final_filter(gm: GroundMorphism, F: FuzzyFilter) -> FuzzyFilter:
    """The final filter on the target, validated.

    Raises :class:`BottomAxiom` when the right adjoint sends bottom above
    bottom, that is, when phi_op collapses some non-bottom element to bottom.
    """
    if F.ground != gm.source:
        raise GroundMismatch("filter is not on the morphism's source ground")
    table = final_table(gm, F.table)
    bad = filter_violation(gm.target, table)
    if bad is not None:
        M, L = gm.target.lattice, gm.source.lattice
        bad.witness["right_adjoint(bottom)"] = M.elements[gm.right_adjoint[L.bottom]]
        bad.witness["kernel"] = [M.elements[b] for b in range(len(M))
                                 if gm.phi_op.map[b] == L.bottom]
        raise bad
    if continuity_witness(gm, F.table, table) is not None:  # pragma: no cover
        raise AssertionError("morphism is not continuous into its final filter")
    return FuzzyFilter(gm.target, table)


def table_leq(L, t1: Table, t2: Table) -> int | None:
    """Index of the first fuzzy set where t1 !<= t2, else ``None``."""
    le = L.leq
    for i, (a, b) in enumerate(zip(t1, t2)):
        if not le[a][b]:
            return i
    return None


def final_characterization_check(gm: GroundMorphism, F: FuzzyFilter,
                                 target_filter: FuzzyFilter) -> dict[str, bool]:
    _check_grounds(gm, F.ground, target_filter.ground)
    fin = final_table(gm, F.table)
    return {
        "continuous": continuity_witness(gm, F.table, target_filter.table) is None,
        "leq": table_leq(gm.target.lattice, target_filter.table, fin) is None,
        "eq": target_filter.table == fin,
    }


def finality_verdict(gm: GroundMorphism, src: Table, tgt: Table,
                     continuations: Iterable[tuple[GroundMorphism, Iterable[Table]]]) -> Verdict:
    """Instance-level finality of ``gm: (src) -> (tgt)`` against given continuations.

    Each continuation is a morphism g out of the target together with
    candidate tables on g's target; finality fails at the first (g, table)
    where the composite is continuous but g is not.
    """
    for g, tables in continuations:
        if g.source != gm.target:
            raise GroundMismatch("continuation does not start at the target ground")
        comp = compose(g, gm)
        for i, t in enumerate(tables):
            if continuity_witness(comp, src, t) is None and continuity_witness(g, tgt, t) is not None:
                return Verdict(False, {"continuation": g.name or "g", "table": i})
    return Verdict(True)


def _candidate_initial(gm: GroundMorphism, tgt: Table) -> Table:
    S, m = gm.target.space, gm.phi_op.map
    return tuple(m[tgt[S.index(_forward(gm, h))]] for h in gm.source.space.sets)


def initial_filter(gm: GroundMorphism, target_filter: FuzzyFilter) -> FuzzyFilter:
    """``h |-> phi_op(F'(forward(h)))`` on the source, fully validated.

    Needs f onto and a co-adjoint for phi_op.  The candidate is not
    guaranteed to be a filter; the first broken axiom is raised with its
    witnesses and with the injectivity of f recorded alongside.
    """
    if target_filter.ground != gm.target:
        raise GroundMismatch("filter is not on the morphism's target ground")
    if not gm.is_onto:
        raise NotOnto("point map is not onto")
    try:
        co_adjoint(gm.phi_op)
    except MeetsNotPreserved as exc:
        raise NoCoAdjoint(f"lattice map has no co-adjoint: {exc}") from exc
    table = _candidate_initial(gm, target_filter.table)
    bad = filter_violation(gm.source, table)
    if bad is not None:
        bad.witness["f_injective"] = gm.is_injective
        raise bad
    return FuzzyFilter(gm.source, table)
