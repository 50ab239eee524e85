"""Hypothesis property tests for the library's standing invariants."""

from __future__ import annotations

import oracles as O
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from ffil.filters import (
    check_continuity,
    filter_violation,
    final_table,
    meet_filters,
    table_leq,
)
from ffil.ground import (
    backward_powerset,
    forward_powerset,
    ground,
    ground_morphism,
    zadeh_forward,
)
from ffil.lattice import (
    BOOL,
    CHAIN3,
    DIAMOND,
    LUK3,
    co_adjoint,
    enumerate_morphisms,
    residuum,
    right_adjoint,
)
from ffil.topology import (
    check_topo_continuity,
    filter_to_topology,
    final_topology,
    join_axiom_witness,
    topology_violation,
)
from ffil.ultrafilter import enumerate_filters, filter_leq, image_filter

LATTICES = {"BOOL": BOOL(), "CHAIN3": CHAIN3(), "LUK3": LUK3(), "DIAMOND": DIAMOND()}
NAMES = sorted(LATTICES)
SETTINGS = settings(max_examples=60, deadline=None,
                    suppress_health_check=[HealthCheck.too_slow])


def _points(L, prefix):
    # keep L^X at nine members or fewer
    top = {2: 3, 3: 2, 4: 1}[len(L)]
    return st.integers(1, top).map(lambda n: [f"{prefix}{i}" for i in range(n)])


@st.composite
def ground_morphisms(draw):
    L = LATTICES[draw(st.sampled_from(NAMES))]
    M = LATTICES[draw(st.sampled_from(NAMES))]
    X = ground(draw(_points(L, "x")), L)
    Y = ground(draw(_points(M, "y")), M)
    phi = draw(st.sampled_from(enumerate_morphisms(M, L)))
    f = draw(st.lists(st.sampled_from(Y.points), min_size=len(X.points),
                      max_size=len(X.points)))
    return ground_morphism(X, Y, f, phi)


def fuzzy_sets(G):
    return st.integers(0, G.space.size - 1).map(lambda i: G.fuzzy_set(i))


def filters_on(G):
    return st.sampled_from(enumerate_filters(G).filters)


@st.composite
def filter_grounds(draw):
    L = LATTICES[draw(st.sampled_from(NAMES))]
    return ground(draw(_points(L, "x")), L)


# lattice level


@SETTINGS
@given(st.sampled_from(NAMES), st.sampled_from(NAMES), st.data())
def test_adjoint_units(m_name, l_name, data):
    M, L = LATTICES[m_name], LATTICES[l_name]
    phi = data.draw(st.sampled_from(enumerate_morphisms(M, L)))
    ra = right_adjoint(phi)
    for b in range(len(M)):
        assert M.le(b, ra[phi.map[b]])
    for a in range(len(L)):
        assert L.le(phi.map[ra[a]], a)
    ca = co_adjoint(phi)
    for a in range(len(L)):
        assert L.le(a, phi.map[ca[a]])
    for b in range(len(M)):
        assert M.le(ca[phi.map[b]], b)
        for a in range(len(L)):
            assert M.le(ca[a], b) == L.le(a, phi.map[b])


@SETTINGS
@given(st.sampled_from(NAMES), st.data())
def test_residuum_laws(name, data):
    L = LATTICES[name]
    r = residuum(L)
    a = data.draw(st.integers(0, len(L) - 1))
    b = data.draw(st.integers(0, len(L) - 1))
    assert L.le(L.otimes(a, r(a, b)), b)
    assert L.le(b, r(a, L.otimes(a, b)))


# powerset operators


@SETTINGS
@given(ground_morphisms(), st.data())
def test_backward_distributes_over_tensor(gm, data):
    b1 = data.draw(fuzzy_sets(gm.target))
    b2 = data.draw(fuzzy_sets(gm.target))
    lhs = backward_powerset(gm, b1.otimes(b2))
    assert lhs == backward_powerset(gm, b1).otimes(backward_powerset(gm, b2))


@SETTINGS
@given(ground_morphisms(), st.data())
def test_zadeh_image_is_monotone(gm, data):
    a = data.draw(fuzzy_sets(gm.source))
    a2 = data.draw(fuzzy_sets(gm.source))
    hi = a | a2
    assert zadeh_forward(gm, a) <= zadeh_forward(gm, hi)
    assert zadeh_forward(gm, a).values == O.zadeh(gm.source.lattice, len(gm.target.points),
                                                  gm.f, a.values)


@SETTINGS
@given(ground_morphisms(), st.data())
def test_forward_backward_galois_law(gm, data):
    a = data.draw(fuzzy_sets(gm.source))
    b = data.draw(fuzzy_sets(gm.target))
    assert (forward_powerset(gm, a) <= b) == (a <= backward_powerset(gm, b))


# filters


@SETTINGS
@given(filter_grounds(), st.data())
def test_meet_is_a_filter_and_the_greatest_lower_bound(G, data):
    every = enumerate_filters(G).filters
    fam = data.draw(st.lists(st.sampled_from(every), min_size=1, max_size=4))
    m = meet_filters(fam)
    assert filter_violation(G, m.table) is None
    assert all(filter_leq(m, F) for F in fam)
    for H in every:
        if all(filter_leq(H, F) for F in fam):
            assert filter_leq(H, m)


@SETTINGS
@given(filter_grounds(), st.data())
def test_filter_tables_satisfy_nonempty_join_axiom(G, data):
    F = data.draw(filters_on(G))
    assert join_axiom_witness(G, F.table, include_empty=False) is None
    assert topology_violation(G, filter_to_topology(F).table) is None


@SETTINGS
@given(ground_morphisms(), st.data())
def test_final_filter_continuity_and_maximality(gm, data):
    F = data.draw(filters_on(gm.source))
    fin = final_table(gm, F.table)
    M = gm.target.lattice
    for Om in enumerate_filters(gm.target).filters:
        cont = bool(check_continuity(gm, F, Om))
        assert cont == (table_leq(M, Om.table, fin) is None)
    assert fin == O.final_table(gm.source.lattice, M, gm.phi_op.map, gm.f,
                                len(gm.source.points), len(gm.target.points), F.table)


@SETTINGS
@given(ground_morphisms(), st.data())
def test_final_filter_bottom_fails_exactly_with_a_kernel(gm, data):
    F = data.draw(filters_on(gm.source))
    fin = final_table(gm, F.table)
    bad = filter_violation(gm.target, fin)
    kernel = gm.right_adjoint[gm.source.lattice.bottom] != gm.target.lattice.bottom
    # the only axiom the raw final table can break is the bottom one
    assert (bad is not None) == kernel
    if bad is not None:
        assert bad.axiom == "bottom"


# ultrafilters and topologies


@SETTINGS
@given(filter_grounds(), st.data())
def test_image_filter_composes(G, data):
    n = len(G.points)
    Y = ground([f"y{i}" for i in range(data.draw(st.integers(1, n)))], G.lattice)
    Z = ground([f"z{i}" for i in range(data.draw(st.integers(1, len(Y.points))))], G.lattice)
    phi = data.draw(st.lists(st.integers(0, len(Y.points) - 1), min_size=n, max_size=n))
    psi = data.draw(st.lists(st.integers(0, len(Z.points) - 1),
                             min_size=len(Y.points), max_size=len(Y.points)))
    F = data.draw(filters_on(G))
    direct = image_filter([psi[y] for y in phi], F, Z)
    assert direct == image_filter(psi, image_filter(phi, F, Y), Z)


@SETTINGS
@given(ground_morphisms(), st.data())
def test_final_topology_is_greatest_continuous(gm, data):
    F = data.draw(filters_on(gm.source))
    T = filter_to_topology(F)
    fin = final_topology(gm, T)
    M = gm.target.lattice
    assert check_topo_continuity(gm, T, fin)
    for G in enumerate_filters(gm.target).filters:
        S = filter_to_topology(G)
        cont = bool(check_topo_continuity(gm, T, S))
        assert cont == (table_leq(M, S.table, fin.table) is None)
