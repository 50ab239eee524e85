"""Lattice-valued topologies, their continuity, final topologies, and the
passage from filters to topologies."""

from __future__ import annotations

import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .errors import GroundMismatch, JoinAxiom, PreconditionUnmet, TensorAxiom, TopAxiom
from .filters import (
    FuzzyFilter,
    _check_grounds,
    _labels,
    continuity_verdict,
    continuity_witness,
    final_table,
    read_table,
)
from .ground import FuzzySet, GroundMorphism, GroundSet
from .ultrafilter import DEFAULT_BUDGET, search_tables
from .verdict import Verdict

Table = tuple[int, ...]

EXHAUSTIVE_LIMIT = 9
SAMPLED_SUBSETS = 1000


@dataclass(frozen=True)
class FuzzyTopology:
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


def _subset_witness(G: GroundSet, members) -> list[dict[str, str]]:
    return [_labels(G, i) for i in members]


def join_axiom_witness(G: GroundSet, table: Table, include_empty: bool = True,
                       seed: int = 0) -> list[int] | None:
    """A family J of fuzzy sets with meet(T(J)) !<= T(join J), or ``None``.

    Every subset is tried when L^X has at most nine members; larger spaces
    get every pair, the full and empty families, and ``SAMPLED_SUBSETS``
    seeded random families.
    """
    L, S = G.lattice, G.space
    le, meet, join = L.leq, L.meet_table, S.join
    N = S.size
    if include_empty and not le[L.top][table[S.zero]]:
        return []
    if N <= EXHAUSTIVE_LIMIT:
        mv = [L.top] * (1 << N)
        jv = [S.zero] * (1 << N)
        for mask in range(1, 1 << N):
            low = (mask & -mask).bit_length() - 1
            rest = mask & (mask - 1)
            mv[mask] = meet[mv[rest]][table[low]]
            jv[mask] = join[jv[rest]][low]
            if not le[mv[mask]][table[jv[mask]]]:
                return [i for i in range(N) if mask >> i & 1]
        return None
    for a, b in combinations(range(N), 2):
        if not le[meet[table[a]][table[b]]][table[join[a][b]]]:
            return [a, b]
    for fam, j in _sampled_families(S, seed):
        target, m = table[j], L.top
        for i in fam:
            m = meet[m][table[i]]
            if le[m][target]:
                break
        else:
            return list(fam)
    return None


@lru_cache(maxsize=256)
def _sampled_families(S, seed: int) -> tuple[tuple[tuple[int, ...], int], ...]:
    """The full family and ``SAMPLED_SUBSETS`` seeded random ones, with joins."""
    N = S.size
    rng = random.Random(seed)
    families = [tuple(range(N))]
    families += [tuple(i for i in range(N) if rng.random() < 0.5)
                 for _ in range(SAMPLED_SUBSETS)]
    return tuple((fam, S.join_all(fam)) for fam in families if fam)


def topology_violation(G: GroundSet, table: Table, include_empty: bool = True):
    L, S = G.lattice, G.space
    E = L.elements
    if table[S.one] != L.top:
        return TopAxiom(f"value at the constant top set is {E[table[S.one]]}",
                        {"g": _labels(G, S.one), "value": E[table[S.one]]})
    fam = join_axiom_witness(G, table, include_empty)
    if fam is not None:
        return JoinAxiom("meet of values exceeds the value of the join",
                         {"family": _subset_witness(G, fam)})
    le, ten = L.leq, L.tensor
    for f in range(S.size):
        for g in range(S.size):
            if not le[ten[table[f]][table[g]]][table[S.tensor[f][g]]]:
                return TensorAxiom(
                    f"T(f)*T(g) = {E[ten[table[f]][table[g]]]} !<= "
                    f"T(f*g) = {E[table[S.tensor[f][g]]]}",
                    {"f": _labels(G, f), "g": _labels(G, g)})
    return None


def check_fuzzy_topology(G: GroundSet, table, include_empty: bool = True) -> FuzzyTopology:
    """Validate a topology table.

    ``include_empty`` decides whether the empty family counts for the join
    axiom; it does by default, which forces the value at 0_X to be top.
    """
    t = read_table(G, table)
    bad = topology_violation(G, t, include_empty)
    if bad is not None:
        raise bad
    return FuzzyTopology(G, t)


def check_topo_continuity(gm: GroundMorphism, source_topo: FuzzyTopology,
                          target_topo: FuzzyTopology) -> Verdict:
    _check_grounds(gm, source_topo.ground, target_topo.ground)
    return continuity_verdict(gm, source_topo.table, target_topo.table)


def final_topology(gm: GroundMorphism, source_topo: FuzzyTopology,
                   include_empty: bool = True) -> FuzzyTopology:
    if source_topo.ground != gm.source:
        raise GroundMismatch("topology is not on the morphism's source ground")
    table = final_table(gm, source_topo.table)
    bad = topology_violation(gm.target, table, include_empty)
    if bad is not None:  # pragma: no cover - final topologies always validate
        raise AssertionError(f"final topology fails an axiom: {bad}")
    if continuity_witness(gm, source_topo.table, table) is not None:  # pragma: no cover
        raise AssertionError("morphism is not continuous into its final topology")
    return FuzzyTopology(gm.target, table)


def filter_table_as_topology(F: FuzzyFilter) -> Table:
    S, L = F.ground.space, F.ground.lattice
    return tuple(L.top if i == S.zero else v for i, v in enumerate(F.table))


def filter_to_topology(F: FuzzyFilter) -> FuzzyTopology:
    """Agree with F away from 0_X and send 0_X to top."""
    table = filter_table_as_topology(F)
    bad = topology_violation(F.ground, table)
    if bad is not None:  # pragma: no cover - the filtered-type topology always validates
        raise AssertionError(f"filter-derived table is not a topology: {bad}")
    return FuzzyTopology(F.ground, table)


def functor_T_check(gm: GroundMorphism, F: FuzzyFilter, G: FuzzyFilter) -> bool:
    """Filter continuity of (gm, F, G) carried over to (gm, T(F), T(G))."""
    _check_grounds(gm, F.ground, G.ground)
    if continuity_witness(gm, F.table, G.table) is not None:
        raise PreconditionUnmet("morphism is not filter-continuous")
    return bool(check_topo_continuity(gm, filter_to_topology(F), filter_to_topology(G)))


@lru_cache(maxsize=64)
def _topology_tables(G: GroundSet, budget: int, include_empty: bool):
    L, S = G.lattice, G.space
    N = S.size
    pins = {S.one: L.top}
    if include_empty:
        pins[S.zero] = L.top
    # the join axiom over finite families reduces to binary joins
    triples = [(L.meet_table, a, b, S.join[a][b]) for a, b in combinations(range(N), 2)]
    triples += [(L.tensor, f, g, S.tensor[f][g]) for f in range(N) for g in range(N)]
    return tuple(search_tables(L, N, tuple(range(N)), pins, (), triples, budget))


def enumerate_topologies(G: GroundSet, budget: int = DEFAULT_BUDGET,
                         include_empty: bool = True) -> list[FuzzyTopology]:
    """Every topology on G, sorted by table."""
    return [FuzzyTopology(G, t) for t in _topology_tables(G, budget, include_empty)]
