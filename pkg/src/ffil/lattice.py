"""Finite complete quasi-monoidal lattices and their morphisms.

A lattice is stored as tables over element *indices*; the declared order of
``elements`` is the canonical enumeration order used everywhere downstream.
Nothing in this module accepts an unvalidated structure: build lattices with
:func:`check_cqml` and morphisms with :func:`check_qml_morphism`.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cache, cached_property
from itertools import product

from .errors import (
    BottomNotPreserved,
    GroundMismatch,
    InvalidTable,
    JoinNotPreserved,
    MeetsNotPreserved,
    NotALattice,
    NotAPartialOrder,
    NotResiduated,
    TensorNotIsotone,
    TensorNotPreserved,
    TopNotIdempotentUnderTensor,
    TopNotPreserved,
    TopNotUnit,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QmlLattice:
    elements: tuple[str, ...]
    leq: tuple[tuple[bool, ...], ...]
    tensor: Table
    meet_table: Table = field(compare=False, repr=False)
    join_table: Table = field(compare=False, repr=False)
    top: int = field(compare=False)
    bottom: int = field(compare=False)
    name: str = field(default="", compare=False)
    unital: bool = field(default=False, compare=False)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element: str | int) -> int:
        if isinstance(element, int):
            if not 0 <= element < len(self.elements):
                raise InvalidTable(f"no element with index {element}", {"index": element})
            return element
        try:
            return self._positions[element]
        except KeyError:
            raise InvalidTable(f"{element!r} is not an element of {self.label}",
                               {"element": element}) from None

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {e: i for i, e in enumerate(self.elements)}

    @property
    def label(self) -> str:
        return self.name or "{" + ",".join(self.elements) + "}"

    def le(self, a: int, b: int) -> bool:
        return self.leq[a][b]

    def meet(self, a: int, b: int) -> int:
        return self.meet_table[a][b]

    def join(self, a: int, b: int) -> int:
        return self.join_table[a][b]

    def otimes(self, a: int, b: int) -> int:
        return self.tensor[a][b]

    def join_all(self, values: Iterable[int]) -> int:
        out = self.bottom
        for v in values:
            out = self.join_table[out][v]
        return out

    def meet_all(self, values: Iterable[int]) -> int:
        out = self.top
        for v in values:
            out = self.meet_table[out][v]
        return out

    @cached_property
    def linear_extension(self) -> tuple[int, ...]:
        """Element indices sorted so that every element follows its lower bounds."""
        below = [sum(self.leq[j][i] for j in range(len(self))) for i in range(len(self))]
        return tuple(sorted(range(len(self)), key=lambda i: (below[i], i)))

    @cached_property
    def lower_covers(self) -> tuple[tuple[int, ...], ...]:
        n = len(self)
        out = []
        for b in range(n):
            strictly = [a for a in range(n) if a != b and self.leq[a][b]]
            out.append(tuple(a for a in strictly
                             if not any(c != a and self.leq[a][c] for c in strictly)))
        return tuple(out)

    def describe(self) -> dict:
        """Raw description accepted back by :func:`check_cqml`."""
        return {
            "elements": list(self.elements),
            "leq": [list(row) for row in self.leq],
            "tensor": [[self.elements[v] for v in row] for row in self.tensor],
        }


def _bitmask(flags: Iterable[bool]) -> int:
    out = 0
    for i, flag in enumerate(flags):
        if flag:
            out |= 1 << i
    return out


def _read_square(raw, n: int, what: str) -> list[list]:
    try:
        rows = [list(r) for r in raw]
    except TypeError:
        raise InvalidTable(f"{what} must be a square table", {}) from None
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InvalidTable(f"{what} must be a {n}x{n} table", {"table": what})
    return rows


def _order_tables(elements, leq):
    elements = tuple(str(e) for e in elements)
    n = len(elements)
    if n == 0:
        raise InvalidTable("a lattice needs at least one element", {})
    if len(set(elements)) != n:
        raise InvalidTable("duplicate element identifiers", {"elements": list(elements)})
    le = tuple(tuple(bool(v) for v in row) for row in _read_square(leq, n, "leq"))
    E = elements

    for a in range(n):
        if not le[a][a]:
            raise NotAPartialOrder(f"not reflexive at {E[a]}", {"a": E[a]})
    for a, b in product(range(n), repeat=2):
        if a != b and le[a][b] and le[b][a]:
            raise NotAPartialOrder(f"not antisymmetric: {E[a]} <= {E[b]} <= {E[a]}",
                                   {"a": E[a], "b": E[b]})
    for a, b, c in product(range(n), repeat=3):
        if le[a][b] and le[b][c] and not le[a][c]:
            raise NotAPartialOrder(f"not transitive: {E[a]} <= {E[b]} <= {E[c]}",
                                   {"a": E[a], "b": E[b], "c": E[c]})

    up = [_bitmask(le[a]) for a in range(n)]
    down = [_bitmask(le[b][a] for b in range(n)) for a in range(n)]
    by_up = {m: a for a, m in enumerate(up)}
    by_down = {m: a for a, m in enumerate(down)}
    join_t, meet_t = [], []
    for a in range(n):
        jrow, mrow = [], []
        for b in range(n):
            j = by_up.get(up[a] & up[b])
            m = by_down.get(down[a] & down[b])
            if j is None:
                raise NotALattice(f"{E[a]} and {E[b]} have no join", {"a": E[a], "b": E[b]})
            if m is None:
                raise NotALattice(f"{E[a]} and {E[b]} have no meet", {"a": E[a], "b": E[b]})
            jrow.append(j)
            mrow.append(m)
        join_t.append(tuple(jrow))
        meet_t.append(tuple(mrow))
    top = bottom = 0
    for a in range(n):
        top = join_t[top][a]
        bottom = meet_t[bottom][a]
    return elements, le, tuple(meet_t), tuple(join_t), top, bottom


def check_cqml(elements: Sequence[str], leq, tensor, *, name: str = "",
               unital: bool = False) -> QmlLattice:
    """Validate a raw lattice description.

    ``leq`` is a boolean table (``leq[i][j]`` iff element i <= element j);
    ``tensor`` a table of element names or indices.  With ``unital=True``
    the top element must additionally be a two-sided unit for the tensor.
    """
    elements, le, meet_t, join_t, top, bottom = _order_tables(elements, leq)
    n = len(elements)
    pos = {e: i for i, e in enumerate(elements)}

    def idx(v) -> int:
        if isinstance(v, bool):
            raise InvalidTable(f"tensor entry {v!r} is not an element", {"entry": v})
        if isinstance(v, int) and 0 <= v < n:
            return v
        if v in pos:
            return pos[v]
        raise InvalidTable(f"tensor entry {v!r} is not an element", {"entry": v})

    ten = tuple(tuple(idx(v) for v in row) for row in _read_square(tensor, n, "tensor"))
    E = elements

    for a, a2, b in product(range(n), repeat=3):
        if not le[a][a2]:
            continue
        if not le[ten[a][b]][ten[a2][b]]:
            raise TensorNotIsotone(
                f"{E[a]} <= {E[a2]} but {E[a]}*{E[b]} !<= {E[a2]}*{E[b]}",
                {"a": E[a], "a'": E[a2], "b": E[b], "argument": "left"})
        if not le[ten[b][a]][ten[b][a2]]:
            raise TensorNotIsotone(
                f"{E[a]} <= {E[a2]} but {E[b]}*{E[a]} !<= {E[b]}*{E[a2]}",
                {"a": E[a], "a'": E[a2], "b": E[b], "argument": "right"})
    if ten[top][top] != top:
        raise TopNotIdempotentUnderTensor(
            f"top*top = {E[ten[top][top]]}, not {E[top]}",
            {"top": E[top], "top*top": E[ten[top][top]]})
    if unital:
        for a in range(n):
            if ten[top][a] != a or ten[a][top] != a:
                raise TopNotUnit(f"top is not a unit at {E[a]}", {"a": E[a]})

    return QmlLattice(elements, le, ten, meet_t, join_t, top, bottom,
                      name=name, unital=unital)


def from_description(raw: Mapping, *, name: str = "", unital: bool = False) -> QmlLattice:
    return check_cqml(raw["elements"], raw["leq"], raw["tensor"], name=name,
                      unital=unital or bool(raw.get("unital", False)))


def chain(elements: Sequence[str], tensor=None, *, name: str = "") -> QmlLattice:
    """A finite chain in the declared order; ``tensor`` defaults to the meet."""
    n = len(elements)
    leq = [[i <= j for j in range(n)] for i in range(n)]
    if tensor is None:
        tensor = [[min(i, j) for j in range(n)] for i in range(n)]
    elif callable(tensor):
        tensor = [[tensor(i, j) for j in range(n)] for i in range(n)]
    return check_cqml(elements, leq, tensor, name=name)


def with_meet_tensor(elements: Sequence[str], leq, *, name: str = "") -> QmlLattice:
    """Validate an order and use its meet as the tensor."""
    return check_cqml(elements, leq, _order_tables(elements, leq)[2], name=name)


def BOOL() -> QmlLattice:
    return chain(["0", "1"], name="BOOL")


def CHAIN3() -> QmlLattice:
    return chain(["0", "m", "1"], name="CHAIN3")


def LUK3() -> QmlLattice:
    # Lukasiewicz t-norm on {0, 1/2, 1}, indices scaled by 2.
    return chain(["0", "h", "1"], lambda i, j: max(0, i + j - 2), name="LUK3")


def DIAMOND() -> QmlLattice:
    leq = [[True, True, True, True],
           [False, True, False, True],
           [False, False, True, True],
           [False, False, False, True]]
    return with_meet_tensor(["0", "a", "b", "1"], leq, name="DIAMOND")


def bundled() -> dict[str, QmlLattice]:
    return {"BOOL": BOOL(), "CHAIN3": CHAIN3(), "LUK3": LUK3(), "DIAMOND": DIAMOND()}


# residuation


@dataclass(frozen=True)
class Residuum:
    lattice: QmlLattice
    table: Table

    def __call__(self, a: int, b: int) -> int:
        return self.table[a][b]


@cache
def implication(L: QmlLattice) -> Residuum:
    """``a -> b`` as the join of every ``c`` with ``a * c <= b``, law unchecked."""
    n = len(L)
    rows = []
    for a in range(n):
        rows.append(tuple(L.join_all(c for c in range(n) if L.le(L.otimes(a, c), b))
                          for b in range(n)))
    return Residuum(L, tuple(rows))


@cache
def residuum(L: QmlLattice) -> Residuum:
    """The implication table, after verifying the residuation law.

    Raises :class:`NotResiduated` with the first triple breaking
    ``a*c <= b  <=>  c <= (a -> b)``.
    """
    n = len(L)
    table = implication(L).table
    E = L.elements
    for a, b, c in product(range(n), repeat=3):
        if L.le(L.otimes(a, c), b) != L.le(c, table[a][b]):
            raise NotResiduated(
                f"{E[a]}*{E[c]} <= {E[b]} disagrees with {E[c]} <= ({E[a]} -> {E[b]})",
                {"a": E[a], "b": E[b], "c": E[c]})
    return implication(L)


def is_residuated(L: QmlLattice) -> bool:
    try:
        residuum(L)
    except NotResiduated:
        return False
    return True


# morphisms


@dataclass(frozen=True)
class QmlMorphism:
    """Concrete lattice map ``source -> target`` preserving joins, tensor and top.

    Read against a ground morphism (X, L) -> (Y, M), ``source`` is M,
    ``target`` is L and ``map`` is its lattice map.
    """

    source: QmlLattice
    target: QmlLattice
    map: tuple[int, ...]
    name: str = field(default="", compare=False)

    def __call__(self, b: int) -> int:
        return self.map[b]

    def describe(self) -> dict[str, str]:
        return {self.source.elements[b]: self.target.elements[v] for b, v in enumerate(self.map)}

    @cached_property
    def right_adjoint(self) -> tuple[int, ...]:
        return right_adjoint(self)


def _read_map(src: QmlLattice, tgt: QmlLattice, mapping) -> tuple[int, ...]:
    if isinstance(mapping, Mapping):
        missing = [e for e in src.elements if e not in mapping]
        if missing:
            raise InvalidTable(f"map is not total: missing {missing}", {"missing": missing})
        return tuple(tgt.index(mapping[e]) for e in src.elements)
    values = list(mapping)
    if len(values) != len(src):
        raise InvalidTable("map is not total on the source lattice", {"length": len(values)})
    return tuple(tgt.index(v) for v in values)


def check_qml_morphism(src: QmlLattice, tgt: QmlLattice, mapping, *,
                       name: str = "") -> QmlMorphism:
    """Validate a map ``src -> tgt`` given as a dict or a sequence in element order."""
    m = _read_map(src, tgt, mapping)
    S, T = src.elements, tgt.elements
    if m[src.bottom] != tgt.bottom:
        raise BottomNotPreserved(f"bottom maps to {T[m[src.bottom]]}",
                                 {"bottom": S[src.bottom], "image": T[m[src.bottom]]})
    n = len(src)
    for a, b in product(range(n), repeat=2):
        if m[src.join(a, b)] != tgt.join(m[a], m[b]):
            raise JoinNotPreserved(
                f"map({S[a]} v {S[b]}) != map({S[a]}) v map({S[b]})",
                {"b1": S[a], "b2": S[b], "map(join)": T[m[src.join(a, b)]],
                 "join(maps)": T[tgt.join(m[a], m[b])]})
    for a, b in product(range(n), repeat=2):
        if m[src.otimes(a, b)] != tgt.otimes(m[a], m[b]):
            raise TensorNotPreserved(
                f"map({S[a]} * {S[b]}) != map({S[a]}) * map({S[b]})",
                {"b1": S[a], "b2": S[b]})
    if m[src.top] != tgt.top:
        raise TopNotPreserved(f"top maps to {T[m[src.top]]}",
                              {"top": S[src.top], "image": T[m[src.top]]})
    return QmlMorphism(src, tgt, m, name=name)


def identity(L: QmlLattice) -> QmlMorphism:
    return QmlMorphism(L, L, tuple(range(len(L))), name=f"id_{L.name}" if L.name else "id")


def compose(outer: QmlMorphism, inner: QmlMorphism) -> QmlMorphism:
    """``outer . inner`` (apply ``inner`` first), revalidated."""
    if inner.target != outer.source:
        raise GroundMismatch("morphisms are not composable")
    return check_qml_morphism(inner.source, outer.target,
                              [outer.map[v] for v in inner.map])


def right_adjoint(phi: QmlMorphism) -> tuple[int, ...]:
    """Table L -> M of ``alpha |-> join{beta | phi(beta) <= alpha}``."""
    M, L = phi.source, phi.target
    return tuple(M.join_all(b for b in range(len(M)) if L.le(phi.map[b], a))
                 for a in range(len(L)))


def meet_failure(phi: QmlMorphism) -> dict | None:
    """First witness that ``phi`` fails to preserve finite meets, else ``None``."""
    M, L = phi.source, phi.target
    m = phi.map
    if m[M.top] != L.top:
        return {"top": M.elements[M.top]}
    for a, b in product(range(len(M)), repeat=2):
        if m[M.meet(a, b)] != L.meet(m[a], m[b]):
            return {"b1": M.elements[a], "b2": M.elements[b],
                    "map(meet)": L.elements[m[M.meet(a, b)]],
                    "meet(maps)": L.elements[L.meet(m[a], m[b])]}
    return None


def co_adjoint(phi: QmlMorphism) -> tuple[int, ...]:
    """Table L -> M of ``alpha |-> meet{beta | alpha <= phi(beta)}``.

    Defined only when ``phi`` preserves meets; raises
    :class:`MeetsNotPreserved` otherwise.
    """
    bad = meet_failure(phi)
    if bad is not None:
        raise MeetsNotPreserved("map does not preserve meets; no co-adjoint", bad)
    M, L = phi.source, phi.target
    return tuple(M.meet_all(b for b in range(len(M)) if L.le(a, phi.map[b]))
                 for a in range(len(L)))


def has_co_adjoint(phi: QmlMorphism) -> bool:
    return meet_failure(phi) is None


def enumerate_morphisms(src: QmlLattice, tgt: QmlLattice) -> list[QmlMorphism]:
    """Every valid morphism ``src -> tgt``, in lexicographic order of tables."""
    out = []
    for values in product(range(len(tgt)), repeat=len(src)):
        try:
            out.append(check_qml_morphism(src, tgt, values))
        except (BottomNotPreserved, JoinNotPreserved, TensorNotPreserved, TopNotPreserved):
            continue
    return out


def inverse(phi: QmlMorphism) -> QmlMorphism:
    """Inverse of a bijective morphism, validated as a morphism in its own right."""
    if len(set(phi.map)) != len(phi.map) or len(phi.source) != len(phi.target):
        raise InvalidTable("map is not a bijection", {"map": phi.describe()})
    inv = [0] * len(phi.map)
    for b, a in enumerate(phi.map):
        inv[a] = b
    return check_qml_morphism(phi.target, phi.source, inv)
