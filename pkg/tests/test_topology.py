from __future__ import annotations

from itertools import product

import oracles as O
import pytest

from ffil.errors import (
    GroundMismatch,
    JoinAxiom,
    PreconditionUnmet,
    TensorAxiom,
    TopAxiom,
)
from ffil.filters import check_continuity, final_filter, minimum_filter, point_filter
from ffil.ground import ground, ground_morphism, identity
from ffil.lattice import enumerate_morphisms
from ffil.topology import (
    FuzzyTopology,
    check_fuzzy_topology,
    check_topo_continuity,
    enumerate_topologies,
    filter_table_as_topology,
    filter_to_topology,
    final_topology,
    functor_T_check,
    join_axiom_witness,
    topology_violation,
)
from ffil.ultrafilter import enumerate_filters

# (lattice, points) -> (count with the empty family, count without), from oracles.py
FROZEN_TOPOLOGY_COUNTS = {
    ("BOOL", 1): (1, 2),
    ("BOOL", 2): (4, 7),
    ("CHAIN3", 1): (3, 9),
    ("LUK3", 1): (3, 7),
    ("DIAMOND", 1): (16, 49),
}

REGRESSION_TOPOLOGY_COUNTS = {("BOOL", 3): 29, ("CHAIN3", 2): 491, ("LUK3", 2): 308}


def _ground(lattices, name, n):
    return ground([f"x{i}" for i in range(n)], lattices[name])


@pytest.fixture
def pq(lattices):
    return ground(["p", "q"], lattices["BOOL"])


def test_constant_top_is_a_topology(lattices):
    for L in lattices.values():
        G = ground(["x"], L)
        check_fuzzy_topology(G, [L.top] * G.space.size)


def test_top_axiom(lattices):
    C = lattices["CHAIN3"]
    G = ground(["x"], C)
    with pytest.raises(TopAxiom) as exc:
        check_fuzzy_topology(G, ["1", "1", "m"])
    assert exc.value.witness == {"g": {"x": "1"}, "value": "m"}


def test_join_axiom_violations(pq):
    # 0_X below top breaks the empty family only
    table = ["0", "0", "0", "1"]
    with pytest.raises(JoinAxiom) as exc:
        check_fuzzy_topology(pq, table)
    assert exc.value.witness == {"family": []}
    check_fuzzy_topology(pq, table, include_empty=False)



def test_join_axiom_pair_witness(lattices):
    # two open singletons whose union is closed
    G = ground(["a", "b", "c"], lattices["BOOL"])
    table = [1] * G.space.size
    table[G.space.index((1, 1, 0))] = 0
    with pytest.raises(JoinAxiom) as exc:
        check_fuzzy_topology(G, table)
    fam = [G.fuzzy_set(w).index for w in exc.value.witness["family"]]
    assert G.space.join_all(fam) == G.space.index((1, 1, 0))
    assert not O.is_topology(O.raw(G.lattice), O.fuzzy_sets(3, 2), table)


def test_tensor_axiom_violation(lattices):
    K = lattices["LUK3"]
    G = ground(["x"], K)
    # h is fully open but h*h = 0 is not
    with pytest.raises(TensorAxiom) as exc:
        check_fuzzy_topology(G, ["0", "1", "1"], include_empty=False)
    assert exc.value.witness == {"f": {"x": "h"}, "g": {"x": "h"}}
    assert not O.is_topology(O.raw(K), O.fuzzy_sets(1, 3), (0, 2, 2), include_empty=False)


def test_validator_matches_oracle(lattices):
    for name, n in [("BOOL", 1), ("BOOL", 2), ("CHAIN3", 1), ("LUK3", 1), ("DIAMOND", 1)]:
        L = lattices[name]
        G = _ground(lattices, name, n)
        R, sets = O.raw(L), O.fuzzy_sets(n, len(L))
        for t in product(range(len(L)), repeat=G.space.size):
            for empty in (True, False):
                ours = topology_violation(G, t, empty) is None
                assert ours == O.is_topology(R, sets, t, empty)


@pytest.mark.parametrize("key", sorted(FROZEN_TOPOLOGY_COUNTS))
def test_enumeration_matches_oracle(lattices, key):
    name, n = key
    G = _ground(lattices, name, n)
    with_empty = [T.table for T in enumerate_topologies(G)]
    without = [T.table for T in enumerate_topologies(G, include_empty=False)]
    assert (len(with_empty), len(without)) == FROZEN_TOPOLOGY_COUNTS[key]
    assert with_empty == O.all_topologies(lattices[name], n)
    assert without == O.all_topologies(lattices[name], n, include_empty=False)


@pytest.mark.parametrize("key", sorted(REGRESSION_TOPOLOGY_COUNTS))
def test_enumeration_regression(lattices, key):
    name, n = key
    G = _ground(lattices, name, n)
    tops = enumerate_topologies(G)
    assert len(tops) == REGRESSION_TOPOLOGY_COUNTS[key]
    assert all(topology_violation(G, T.table) is None for T in tops)


def test_sampled_join_check_on_large_space(lattices):
    G = _ground(lattices, "CHAIN3", 3)
    assert G.space.size > 9
    for F in enumerate_filters(G).filters:
        assert join_axiom_witness(G, filter_table_as_topology(F)) is None
    # a table breaking a binary join is caught by the pair scan
    table = [2] * G.space.size
    a, b = G.space.index((2, 0, 0)), G.space.index((0, 2, 0))
    table[G.space.join[a][b]] = 0
    fam = join_axiom_witness(G, tuple(table))
    assert fam is not None and G.space.join_all(fam) == G.space.join[a][b]


def test_filter_to_topology_point_filter(pq):
    Fp = point_filter(pq, "p")
    T = filter_to_topology(Fp)
    for g in pq.fuzzy_sets():
        expect = pq.lattice.top if g == pq.zero else g["p"]
        assert T(g) == expect
    assert O.is_topology(O.raw(pq.lattice), O.fuzzy_sets(2, 2), T.table)


def test_filter_to_topology_minimum_filter(pq):
    T = filter_to_topology(minimum_filter(pq))
    tops = {i for i, v in enumerate(T.table) if v == pq.lattice.top}
    assert tops == {pq.space.zero, pq.space.one}


def test_filter_tables_satisfy_join_and_tensor_axioms(lattices):
    for name, n in [("BOOL", 2), ("CHAIN3", 1), ("LUK3", 2), ("DIAMOND", 1)]:
        G = _ground(lattices, name, n)
        for F in enumerate_filters(G).filters:
            assert topology_violation(G, F.table, include_empty=False) is None
            # the raw filter table fails only at 0_X
            assert isinstance(topology_violation(G, F.table), JoinAxiom)
            assert topology_violation(G, filter_table_as_topology(F)) is None


def test_topology_continuity(pq, lattices):
    T = filter_to_topology(point_filter(pq, "p"))
    assert check_topo_continuity(identity(pq), T, T)
    top = FuzzyTopology(pq, (1,) * 4)
    for S in enumerate_topologies(pq):
        assert check_topo_continuity(identity(pq), top, S)
    v = check_topo_continuity(identity(pq), T, top)
    assert not v and "b" in v.witness
    with pytest.raises(GroundMismatch):
        check_topo_continuity(identity(pq), T, FuzzyTopology(ground(["y"], pq.lattice), (1, 1)))


def test_final_topology_identity(pq):
    for T in enumerate_topologies(pq):
        assert final_topology(identity(pq), T) == T


def test_final_topology_collapse(pq):
    Y = ground(["y"], pq.lattice)
    gm = ground_morphism(pq, Y, ["y", "y"])
    T = filter_to_topology(point_filter(pq, "p"))
    fin = final_topology(gm, T)
    # direct evaluation: b |-> T(b . f) for both b in the two-element M^Y
    expect = tuple(T.table[pq.space.index((b[0], b[0]))] for b in O.fuzzy_sets(1, 2))
    assert fin.table == expect == (1, 1)
    assert check_topo_continuity(gm, T, fin)


def test_final_topology_is_join_of_continuous(lattices):
    for L, M in product([lattices["BOOL"], lattices["CHAIN3"]], repeat=2):
        X, Y = ground(["x1"], L), ground(["y"], M)
        targets = enumerate_topologies(Y)
        for phi in enumerate_morphisms(M, L):
            gm = ground_morphism(X, Y, ["y"], phi)
            for T in enumerate_topologies(X):
                fin = final_topology(gm, T)
                cont = [S.table for S in targets if check_topo_continuity(gm, T, S)]
                join = tuple(M.join_all(t[i] for t in cont) for i in range(Y.space.size))
                assert join == fin.table
                for S in targets:
                    below = all(M.le(a, b) for a, b in zip(S.table, fin.table))
                    assert bool(check_topo_continuity(gm, T, S)) == below


def test_functor_T(pq, lattices):
    F = point_filter(pq, "p")
    assert functor_T_check(identity(pq), F, F)
    Y = ground(["y"], pq.lattice)
    gm = ground_morphism(pq, Y, ["y", "y"])
    assert functor_T_check(gm, F, final_filter(gm, F))
    with pytest.raises(PreconditionUnmet):
        functor_T_check(identity(pq), minimum_filter(pq), F)


def test_functor_T_exhaustive(lattices):
    names = ["BOOL", "CHAIN3", "LUK3"]
    for a, b in product(names, repeat=2):
        L, M = lattices[a], lattices[b]
        X = ground(["x1", "x2"] if len(L) == 2 else ["x1"], L)
        Y = ground(["y1", "y2"] if len(M) == 2 else ["y1"], M)
        for phi in enumerate_morphisms(M, L):
            for f in product(Y.points, repeat=len(X.points)):
                gm = ground_morphism(X, Y, list(f), phi)
                for F in enumerate_filters(X).filters:
                    for G in enumerate_filters(Y).filters:
                        if check_continuity(gm, F, G):
                            assert functor_T_check(gm, F, G)
