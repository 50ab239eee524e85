"""JSON instance documents: loading is validation, and dumping round-trips.

Layout (see FORMAT.md for the full reference)::

    {"lattices":        {name: {"bundled": "BOOL"} | {"elements", "leq", "tensor", "unital"?}},
     "morphisms":       {name: {"source", "target", "map"}},
     "grounds":         {name: {"points", "lattice"}},
     "ground_morphisms": {name: {"source", "target", "f", "phi_op"?}},
     "fuzzy_sets":      {name: {"over", "values"}},
     "filters":         {name: {"over", "values"} | {"over", "pairs"}},
     "topologies":      {name: {"over", "values"} | {"over", "pairs"}}}
"""

from __future__ import annotations

import json
from collections.abc import Mapping
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from .errors import (
    FfilError,
    GroundMismatch,
    InvalidTable,
    ParseError,
    ValidationError,
    Violation,
)
from .filters import FuzzyFilter, check_fuzzy_filter
from .ground import FuzzySet, GroundMorphism, GroundSet, ground_morphism
from .lattice import (
    QmlLattice,
    QmlMorphism,
    bundled,
    check_qml_morphism,
    from_description,
)
from .topology import FuzzyTopology, check_fuzzy_topology

SECTIONS = ("lattices", "morphisms", "grounds", "ground_morphisms", "fuzzy_sets",
            "filters", "topologies")


@dataclass
class InstanceDocument:
    lattices: dict[str, QmlLattice] = field(default_factory=dict)
    morphisms: dict[str, QmlMorphism] = field(default_factory=dict)
    grounds: dict[str, GroundSet] = field(default_factory=dict)
    ground_morphisms: dict[str, GroundMorphism] = field(default_factory=dict)
    fuzzy_sets: dict[str, FuzzySet] = field(default_factory=dict)
    filters: dict[str, FuzzyFilter] = field(default_factory=dict)
    topologies: dict[str, FuzzyTopology] = field(default_factory=dict)

    def lookup(self, section: str, name: str):
        table = getattr(self, section)
        if name not in table:
            known = ", ".join(sorted(table)) or "none"
            raise ParseError(f"no {section[:-1].replace('_', ' ')} named {name!r} (known: {known})")
        return table[name]

    def name_of(self, section: str, obj) -> str:
        for k, v in getattr(self, section).items():
            if v == obj:
                return k
        raise KeyError(obj)


def _section(raw: Mapping, key: str) -> Mapping:
    sec = raw.get(key, {})
    if not isinstance(sec, Mapping):
        raise ParseError(f"section {key!r} must be an object")
    for name, entry in sec.items():
        if not isinstance(entry, Mapping):
            raise ParseError(f"{key}.{name} must be an object")
    return sec


def _field(entry: Mapping, key: str, where: str):
    if key not in entry:
        raise ParseError(f"{where}: missing field {key!r}")
    return entry[key]


class _Loader:
    def __init__(self, include_empty: bool):
        self.doc = InstanceDocument()
        self.include_empty = include_empty

    def ref(self, section: str, name, where: str):
        if not isinstance(name, str):
            raise ParseError(f"{where}: reference must be a name, got {name!r}")
        try:
            return self.doc.lookup(section, name)
        except ParseError as exc:
            raise ParseError(f"{where}: unresolved reference: {exc}") from None

    def checked(self, where: str, build):
        try:
            return build()
        except Violation as exc:
            raise ValidationError(f"{where}: {exc}", exc) from exc
        except GroundMismatch as exc:
            raise ParseError(f"{where}: {exc}") from exc

    def lattice(self, name: str, e: Mapping) -> QmlLattice:
        where = f"lattices.{name}"
        if "bundled" in e:
            table = bundled()
            if e["bundled"] not in table:
                raise ParseError(f"{where}: unknown bundled lattice {e['bundled']!r}")
            return table[e["bundled"]]
        for key in ("elements", "leq", "tensor"):
            _field(e, key, where)
        return self.checked(where, lambda: from_description(e, name=name))

    def morphism(self, name: str, e: Mapping) -> QmlMorphism:
        where = f"morphisms.{name}"
        src = self.ref("lattices", _field(e, "source", where), where)
        tgt = self.ref("lattices", _field(e, "target", where), where)
        return self.checked(where, lambda: check_qml_morphism(
            src, tgt, _field(e, "map", where), name=name))

    def ground(self, name: str, e: Mapping) -> GroundSet:
        where = f"grounds.{name}"
        L = self.ref("lattices", _field(e, "lattice", where), where)
        points = _field(e, "points", where)
        if not isinstance(points, list) or not all(isinstance(p, str) for p in points):
            raise ParseError(f"{where}: points must be a list of strings")
        return self.checked(where, lambda: GroundSet(tuple(points), L, name=name))

    def ground_morphism(self, name: str, e: Mapping) -> GroundMorphism:
        where = f"ground_morphisms.{name}"
        src = self.ref("grounds", _field(e, "source", where), where)
        tgt = self.ref("grounds", _field(e, "target", where), where)
        phi = e.get("phi_op")
        phi = None if phi is None else self.ref("morphisms", phi, where)
        return self.checked(where, lambda: ground_morphism(
            src, tgt, _field(e, "f", where), phi, name=name))

    def fuzzy_set(self, name: str, e: Mapping) -> FuzzySet:
        where = f"fuzzy_sets.{name}"
        G = self.ref("grounds", _field(e, "over", where), where)
        return self.checked(where, lambda: G.fuzzy_set(_field(e, "values", where)))

    def table(self, where: str, G: GroundSet, e: Mapping):
        """Values in canonical order, or explicit (fuzzy set, value) pairs covering L^X."""
        if "values" in e:
            return e["values"]
        pairs = _field(e, "pairs", where)
        if not isinstance(pairs, list):
            raise ParseError(f"{where}: pairs must be a list")
        out: dict[int, Any] = {}
        for k, pair in enumerate(pairs):
            if not isinstance(pair, list) or len(pair) != 2:
                raise ParseError(f"{where}: pairs[{k}] must be [fuzzy set, value]")
            spec, value = pair
            if isinstance(spec, str):
                g = self.ref("fuzzy_sets", spec, where)
            else:
                g = self.checked(where, lambda s=spec: G.fuzzy_set(s))
            if g.ground != G:
                raise ParseError(f"{where}: pairs[{k}] names a fuzzy set on another ground")
            if g.index in out and out[g.index] != value:
                raise ValidationError(f"{where}: conflicting values for one fuzzy set",
                                      InvalidTable("conflicting pair", {"g": g.labels()}))
            out[g.index] = value
        return out

    def structure(self, section: str, name: str, e: Mapping):
        where = f"{section}.{name}"
        G = self.ref("grounds", _field(e, "over", where), where)
        table = self.table(where, G, e)
        if section == "filters":
            return self.checked(where, lambda: check_fuzzy_filter(G, table))
        return self.checked(where, lambda: check_fuzzy_topology(G, table, self.include_empty))

    def load(self, raw: Any) -> InstanceDocument:
        if not isinstance(raw, Mapping):
            raise ParseError("an instance document must be a JSON object")
        unknown = sorted(set(raw) - set(SECTIONS))
        if unknown:
            raise ParseError(f"unknown sections: {unknown}")
        d = self.doc
        for name, e in _section(raw, "lattices").items():
            d.lattices[name] = self.lattice(name, e)
        for name, e in _section(raw, "morphisms").items():
            d.morphisms[name] = self.morphism(name, e)
        for name, e in _section(raw, "grounds").items():
            d.grounds[name] = self.ground(name, e)
        for name, e in _section(raw, "ground_morphisms").items():
            d.ground_morphisms[name] = self.ground_morphism(name, e)
        for name, e in _section(raw, "fuzzy_sets").items():
            d.fuzzy_sets[name] = self.fuzzy_set(name, e)
        for section in ("filters", "topologies"):
            for name, e in _section(raw, section).items():
                getattr(d, section)[name] = self.structure(section, name, e)
        return d


def loads(text: str, include_empty: bool = True) -> InstanceDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    return from_dict(raw, include_empty)


def from_dict(raw: Any, include_empty: bool = True) -> InstanceDocument:
    try:
        return _Loader(include_empty).load(raw)
    except (FfilError, KeyError, TypeError) as exc:
        if isinstance(exc, (ParseError, ValidationError)):
            raise
        raise ParseError(f"malformed document: {exc}") from exc


def load(path: str | Path, include_empty: bool = True) -> InstanceDocument:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc
    return loads(text, include_empty)


def to_dict(doc: InstanceDocument) -> dict[str, Any]:
    """Serialize every structure in explicit, reloadable form."""
    out: dict[str, Any] = {}
    out["lattices"] = {}
    for name, L in doc.lattices.items():
        e = L.describe()
        if L.unital:
            e["unital"] = True
        out["lattices"][name] = e
    out["morphisms"] = {
        name: {"source": doc.name_of("lattices", m.source),
               "target": doc.name_of("lattices", m.target), "map": m.describe()}
        for name, m in doc.morphisms.items()}
    out["grounds"] = {
        name: {"points": list(G.points), "lattice": doc.name_of("lattices", G.lattice)}
        for name, G in doc.grounds.items()}
    gms = {}
    for name, gm in doc.ground_morphisms.items():
        e = {"source": doc.name_of("grounds", gm.source),
             "target": doc.name_of("grounds", gm.target), "f": gm.f_map()}
        try:
            e["phi_op"] = doc.name_of("morphisms", gm.phi_op)
        except KeyError:
            phi = gm.phi_op
            if phi.source != phi.target or phi.map != tuple(range(len(phi.source))):
                raise ValueError(f"lattice map of {name!r} is not declared in morphisms")
        gms[name] = e
    out["ground_morphisms"] = gms
    out["fuzzy_sets"] = {
        name: {"over": doc.name_of("grounds", g.ground), "values": g.labels()}
        for name, g in doc.fuzzy_sets.items()}
    for section in ("filters", "topologies"):
        out[section] = {
            name: {"over": doc.name_of("grounds", F.ground), "values": F.labels()}
            for name, F in getattr(doc, section).items()}
    return out


def dumps(doc: InstanceDocument) -> str:
    return json.dumps(to_dict(doc), indent=2)
