"""Ground sets (X, L), fuzzy sets L^X, ground morphisms and powerset operators.

The canonical enumeration of L^X treats a fuzzy set as a base-|L| numeral
whose *first* point is the least significant digit, so the first point varies
fastest: over X = {p, q} and BOOL the order is (0,0), (1,0), (0,1), (1,1).
Filter and topology tables are keyed by this index.
"""

from __future__ import annotations

from collections.abc import Iterator, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product

from . import lattice as _lat
from .errors import EmptyGround, GroundMismatch, InvalidTable
from .lattice import QmlLattice, QmlMorphism

Values = tuple[int, ...]


class FuzzySpace:
    """Precomputed tables for the lattice L^X with pointwise operations."""

    def __init__(self, points: Sequence[str], L: QmlLattice):
        self.lattice = L
        k, n = len(points), len(L)
        self.size = n ** k
        # product() varies its last slot fastest; reverse to make point 0 fastest.
        self.sets: tuple[Values, ...] = tuple(tuple(reversed(v))
                                             for v in product(range(n), repeat=k))
        self._weights = tuple(n ** i for i in range(k))
        self.zero = self.index((L.bottom,) * k)
        self.one = self.index((L.top,) * k)

    def index(self, values: Sequence[int]) -> int:
        return sum(v * w for v, w in zip(values, self._weights))

    def _pointwise(self, table) -> tuple[tuple[int, ...], ...]:
        idx, sets = self.index, self.sets
        return tuple(tuple(idx([table[a][b] for a, b in zip(f, g)]) for g in sets)
                     for f in sets)

    @cached_property
    def tensor(self) -> tuple[tuple[int, ...], ...]:
        return self._pointwise(self.lattice.tensor)

    @cached_property
    def join(self) -> tuple[tuple[int, ...], ...]:
        return self._pointwise(self.lattice.join_table)

    @cached_property
    def meet(self) -> tuple[tuple[int, ...], ...]:
        return self._pointwise(self.lattice.meet_table)

    @cached_property
    def leq(self) -> tuple[tuple[bool, ...], ...]:
        le = self.lattice.leq
        return tuple(tuple(all(le[a][b] for a, b in zip(f, g)) for g in self.sets)
                     for f in self.sets)

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        """Fuzzy sets obtained by lowering one coordinate to a lower cover."""
        covers = self.lattice.lower_covers
        out = []
        for f in self.sets:
            below = []
            for i, v in enumerate(f):
                for c in covers[v]:
                    below.append(self.index(f[:i] + (c,) + f[i + 1:]))
            out.append(tuple(below))
        return tuple(out)

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Indices ordered so every fuzzy set comes after everything below it."""
        rank = {e: r for r, e in enumerate(self.lattice.linear_extension)}
        return tuple(sorted(range(self.size),
                            key=lambda i: (sum(rank[v] for v in self.sets[i]), i)))

    def join_all(self, indices) -> int:
        out = self.zero
        for i in indices:
            out = self.join[out][i]
        return out


@dataclass(frozen=True)
class GroundSet:
    points: tuple[str, ...]
    lattice: QmlLattice
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if not self.points:
            raise EmptyGround("a ground set needs at least one point", {})
        if len(set(self.points)) != len(self.points):
            raise InvalidTable("duplicate point identifiers", {"points": list(self.points)})

    @cached_property
    def space(self) -> FuzzySpace:
        return FuzzySpace(self.points, self.lattice)

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {p: i for i, p in enumerate(self.points)}

    def point_index(self, point: str | int) -> int:
        if isinstance(point, int):
            if not 0 <= point < len(self.points):
                raise InvalidTable(f"no point with index {point}", {"index": point})
            return point
        try:
            return self._positions[point]
        except KeyError:
            raise InvalidTable(f"{point!r} is not a point of the ground",
                               {"point": point}) from None

    def fuzzy_set(self, spec) -> FuzzySet:
        """Build a fuzzy set from ``{point: element}``, an element sequence, or an index."""
        L = self.lattice
        if isinstance(spec, FuzzySet):
            if spec.ground != self:
                raise GroundMismatch("fuzzy set lives on another ground")
            return spec
        if isinstance(spec, int):
            if not 0 <= spec < self.space.size:
                raise InvalidTable(f"no fuzzy set with index {spec}", {"index": spec})
            return FuzzySet(self, self.space.sets[spec])
        if isinstance(spec, Mapping):
            missing = [p for p in self.points if p not in spec]
            if missing:
                raise InvalidTable(f"fuzzy set is not total: missing {missing}",
                                   {"missing": missing})
            return FuzzySet(self, tuple(L.index(spec[p]) for p in self.points))
        values = list(spec)
        if len(values) != len(self.points):
            raise InvalidTable("fuzzy set is not total", {"length": len(values)})
        return FuzzySet(self, tuple(L.index(v) for v in values))

    def constant(self, element: str | int) -> FuzzySet:
        return FuzzySet(self, (self.lattice.index(element),) * len(self.points))

    @property
    def zero(self) -> FuzzySet:
        return self.constant(self.lattice.bottom)

    @property
    def one(self) -> FuzzySet:
        return self.constant(self.lattice.top)

    def fuzzy_sets(self) -> Iterator[FuzzySet]:
        for v in self.space.sets:
            yield FuzzySet(self, v)

    def with_lattice(self, L: QmlLattice) -> GroundSet:
        return GroundSet(self.points, L, name=self.name)

    def describe(self) -> dict:
        return {"points": list(self.points)}


def ground(points: Sequence[str], L: QmlLattice, *, name: str = "") -> GroundSet:
    return GroundSet(tuple(str(p) for p in points), L, name=name)


@dataclass(frozen=True)
class FuzzySet:
    ground: GroundSet
    values: Values

    def __post_init__(self):
        n = len(self.ground.lattice)
        if len(self.values) != len(self.ground.points) or not all(
                isinstance(v, int) and 0 <= v < n for v in self.values):
            raise InvalidTable("fuzzy set values must be element indices, one per point",
                               {"values": list(self.values)})

    @property
    def index(self) -> int:
        return self.ground.space.index(self.values)

    def __getitem__(self, point: str | int) -> int:
        return self.values[self.ground.point_index(point)]

    def labels(self) -> dict[str, str]:
        E = self.ground.lattice.elements
        return {p: E[v] for p, v in zip(self.ground.points, self.values)}

    def __le__(self, other: FuzzySet) -> bool:
        self._same(other)
        le = self.ground.lattice.le
        return all(le(a, b) for a, b in zip(self.values, other.values))

    def _same(self, other: FuzzySet):
        if self.ground != other.ground:
            raise GroundMismatch("fuzzy sets live on different grounds")

    def _zip(self, other: FuzzySet, table) -> FuzzySet:
        self._same(other)
        return FuzzySet(self.ground, tuple(table[a][b] for a, b in zip(self.values, other.values)))

    def __and__(self, other: FuzzySet) -> FuzzySet:
        return self._zip(other, self.ground.lattice.meet_table)

    def __or__(self, other: FuzzySet) -> FuzzySet:
        return self._zip(other, self.ground.lattice.join_table)

    def otimes(self, other: FuzzySet) -> FuzzySet:
        return self._zip(other, self.ground.lattice.tensor)

    def __repr__(self) -> str:
        inner = ", ".join(f"{p}:{e}" for p, e in self.labels().items())
        return f"FuzzySet({inner})"


@dataclass(frozen=True)
class GroundMorphism:
    """A ground function (X, L) -> (Y, M): a point map plus a lattice map M -> L.

    ``f`` holds, for every point of X, the index of its image in Y;
    ``phi_op`` is the concrete lattice map M -> L.
    """

    source: GroundSet
    target: GroundSet
    f: tuple[int, ...]
    phi_op: QmlMorphism
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.f) != len(self.source.points) or not all(
                0 <= y < len(self.target.points) for y in self.f):
            raise InvalidTable("point map must be total into the target points",
                               {"f": list(self.f)})
        if self.phi_op.source != self.target.lattice or self.phi_op.target != self.source.lattice:
            raise GroundMismatch("lattice map must run from the target lattice "
                                 "to the source lattice")

    @property
    def is_onto(self) -> bool:
        return set(self.f) == set(range(len(self.target.points)))

    @property
    def is_injective(self) -> bool:
        return len(set(self.f)) == len(self.f)

    @property
    def is_isomorphism(self) -> bool:
        """Both components bijective."""
        m = self.phi_op.map
        return (self.is_onto and self.is_injective and len(set(m)) == len(m)
                and len(self.phi_op.source) == len(self.phi_op.target))

    @cached_property
    def right_adjoint(self) -> tuple[int, ...]:
        return _lat.right_adjoint(self.phi_op)

    def f_map(self) -> dict[str, str]:
        return {x: self.target.points[y] for x, y in zip(self.source.points, self.f)}

    def describe(self) -> dict:
        return {"f": self.f_map()}


def ground_morphism(source: GroundSet, target: GroundSet, f, phi_op: QmlMorphism | None = None,
                    *, name: str = "") -> GroundMorphism:
    """``f`` is a ``{point: point}`` dict or a sequence aligned with source points.

    ``phi_op`` defaults to the identity, which needs both grounds on one lattice.
    """
    if phi_op is None:
        if source.lattice != target.lattice:
            raise GroundMismatch("identity lattice map needs a shared lattice")
        phi_op = _lat.identity(source.lattice)
    if isinstance(f, Mapping):
        missing = [x for x in source.points if x not in f]
        if missing:
            raise InvalidTable(f"point map is not total: missing {missing}", {"missing": missing})
        table = tuple(target.point_index(f[x]) for x in source.points)
    else:
        f = list(f)
        if len(f) != len(source.points):
            raise InvalidTable("point map is not total", {"length": len(f)})
        table = tuple(target.point_index(y) for y in f)
    return GroundMorphism(source, target, table, phi_op, name=name)


def identity(G: GroundSet) -> GroundMorphism:
    return GroundMorphism(G, G, tuple(range(len(G.points))), _lat.identity(G.lattice))


def compose(second: GroundMorphism, first: GroundMorphism) -> GroundMorphism:
    """``(g . f, psi . phi)`` for first = (f, phi), second = (g, psi)."""
    if first.target != second.source:
        raise GroundMismatch("ground morphisms are not composable")
    f = tuple(second.f[y] for y in first.f)
    return GroundMorphism(first.source, second.target, f,
                          _lat.compose(first.phi_op, second.phi_op))


def _check_on(G: GroundSet, a: FuzzySet, what: str):
    if a.ground != G:
        raise GroundMismatch(f"{what} does not live on the expected ground")


# powerset operators; the underscored variants work on raw value tuples


def _zadeh(gm: GroundMorphism, a: Values) -> Values:
    L = gm.source.lattice
    out = [L.bottom] * len(gm.target.points)
    for x, y in enumerate(gm.f):
        out[y] = L.join(out[y], a[x])
    return tuple(out)


def _backward(gm: GroundMorphism, b: Values) -> Values:
    m = gm.phi_op.map
    return tuple(m[b[y]] for y in gm.f)


def _forward(gm: GroundMorphism, a: Values) -> Values:
    M, L = gm.target.lattice, gm.source.lattice
    m = gm.phi_op.map
    return tuple(M.meet_all(beta for beta in range(len(M)) if L.le(alpha, m[beta]))
                 for alpha in _zadeh(gm, a))


def zadeh_forward(gm: GroundMorphism, a: FuzzySet) -> FuzzySet:
    """Fiberwise join of ``a`` along f; lands in L^Y."""
    _check_on(gm.source, a, "fuzzy set")
    return FuzzySet(gm.target.with_lattice(gm.source.lattice), _zadeh(gm, a.values))


def backward_powerset(gm: GroundMorphism, b: FuzzySet) -> FuzzySet:
    """``x |-> phi_op(b(f(x)))``."""
    _check_on(gm.target, b, "fuzzy set")
    return FuzzySet(gm.source, _backward(gm, b.values))


def forward_powerset(gm: GroundMorphism, a: FuzzySet) -> FuzzySet:
    """Least ``b`` in M^Y, pointwise, with the Zadeh image of ``a`` below ``phi_op . b``."""
    _check_on(gm.source, a, "fuzzy set")
    return FuzzySet(gm.target, _forward(gm, a.values))
