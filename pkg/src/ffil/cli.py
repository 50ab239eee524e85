"""``ffil`` command line.

Every command prints one JSON report on stdout.  A short human summary goes
to stderr unless ``--json`` is given.  Exit status: 0 when every verdict
holds, 1 when the only failures are known counterexample families, 2 on any
other failed verdict, 3 on usage or validation errors.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from importlib import resources
from typing import Any

from . import instance as inst_io
from .errors import (
    AxiomViolation,
    BottomAxiom,
    BudgetExceeded,
    FfilError,
    MeetsNotPreserved,
    PreconditionUnmet,
    ValidationError,
    Violation,
)
from .filters import (
    FuzzyFilter,
    check_continuity,
    check_fuzzy_filter,
    filter_violation,
    final_filter,
    initial_filter,
    meet_filters,
)
from .ground import GroundMorphism, backward_powerset, forward_powerset, zadeh_forward
from .lattice import QmlMorphism, co_adjoint, is_residuated, right_adjoint
from .suite import (
    TAGS,
    TheoremSuite,
    document_instances,
    exit_status,
    random_suite,
    summarize,
)
from .topology import (
    check_topo_continuity,
    filter_to_topology,
    final_topology,
    topology_violation,
)
from .ultrafilter import (
    DEFAULT_BUDGET,
    enumerate_filters,
    image_filter,
    maximal_filters,
    ultrafilter_characterization,
)

COMMANDS = ("check", "adjoints", "forward", "backward", "filter-check", "filter-meet",
            "continuity", "final-filter", "initial-filter", "enumerate-filters",
            "ultrafilters", "char-check", "image-filter", "to-topology", "final-topology",
            "verify-theorems", "random-suite")

BUNDLED_DOCUMENT = "bool_pq.json"


class UsageError(FfilError, ValueError):
    pass


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "on"):
        return True
    if low in ("0", "false", "no", "off"):
        return False
    raise argparse.ArgumentTypeError(f"expected a boolean, got {text!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="ffil", description=(
        "Validate lattice-valued filters and topologies on finite instances and "
        "run the theorem property suite."))
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("names", nargs="*", help="names of document objects the command acts on")
    p.add_argument("--instance", metavar="FILE",
                   help=f"instance document (default: the bundled {BUNDLED_DOCUMENT})")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200, help="random-suite instance count")
    p.add_argument("--budget", type=int, default=DEFAULT_BUDGET,
                   help="enumeration node budget")
    p.add_argument("--json", action="store_true", help="suppress the stderr summary")
    p.add_argument("--include-empty-join-axiom", type=_bool, default=True, metavar="BOOL",
                   help="count the empty family in the topology join axiom (default true)")
    p.add_argument("--over", metavar="GROUND", help="ground for an inline --table")
    p.add_argument("--table", metavar="JSON",
                   help="inline candidate table: JSON list of values in canonical order")
    p.add_argument("--tags", metavar="TAG,...", help="restrict the suites to these tags")
    return p


# helpers


def _document(args):
    if args.instance:
        return inst_io.load(args.instance, args.include_empty_join_axiom)
    text = resources.files("ffil").joinpath("data", BUNDLED_DOCUMENT).read_text()
    return inst_io.loads(text, args.include_empty_join_axiom)


def _need(args, n: int, what: str) -> list[str]:
    if len(args.names) != n:
        raise UsageError(f"{args.command} expects {n} name(s): {what}")
    return args.names


def _structure(doc, name: str) -> tuple[str, Any]:
    """A filter or topology by name (filters first)."""
    for section in ("filters", "topologies"):
        if name in getattr(doc, section):
            return section, getattr(doc, section)[name]
    raise UsageError(f"no filter or topology named {name!r}")


def _filter(doc, name: str) -> FuzzyFilter:
    return doc.lookup("filters", name)


def _gm(doc, name: str) -> GroundMorphism:
    return doc.lookup("ground_morphisms", name)


def _inline_table(doc, args):
    if args.table is None:
        return None
    if not args.over:
        raise UsageError("--table needs --over GROUND")
    G = doc.lookup("grounds", args.over)
    try:
        values = json.loads(args.table)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--table is not JSON: {exc}") from exc
    return G, values


def _verdict(name: str, holds: bool, **extra) -> dict[str, Any]:
    out = {"check": name, "holds": bool(holds)}
    out.update(extra)
    return out


# commands; each returns (result, verdicts, status)


def cmd_check(doc, args):
    sections = {s: sorted(getattr(doc, s)) for s in inst_io.SECTIONS}
    lattices = {n: {"elements": list(L.elements), "residuated": is_residuated(L),
                    "unital": L.unital} for n, L in doc.lattices.items()}
    return {"document": sections, "lattices": lattices}, [_verdict("load", True)], 0


def _adjoint_tables(phi: QmlMorphism) -> dict[str, Any]:
    M, L = phi.source, phi.target
    ra = right_adjoint(phi)
    out: dict[str, Any] = {
        "map": phi.describe(),
        "right_adjoint": {L.elements[a]: M.elements[ra[a]] for a in range(len(L))}}
    try:
        ca = co_adjoint(phi)
        out["co_adjoint"] = {L.elements[a]: M.elements[ca[a]] for a in range(len(L))}
    except MeetsNotPreserved as exc:
        out["co_adjoint"] = None
        out["co_adjoint_missing"] = exc.report()
    return out


def cmd_adjoints(doc, args):
    (name,) = _need(args, 1, "MORPHISM (lattice or ground morphism)")
    if name in doc.morphisms:
        phi = doc.morphisms[name]
    else:
        phi = _gm(doc, name).phi_op
    res = _adjoint_tables(phi)
    M, L = phi.source, phi.target
    ra = right_adjoint(phi)
    law = all(L.le(phi.map[b], a) == M.le(b, ra[a]) for a in range(len(L)) for b in range(len(M)))
    return res, [_verdict("galois-law", law)], 0 if law else 2


def _powerset(doc, args, forward: bool):
    gname, sname = _need(args, 2, "GROUND_MORPHISM FUZZY_SET")
    gm = _gm(doc, gname)
    a = doc.lookup("fuzzy_sets", sname)
    if forward:
        res = {"zadeh": zadeh_forward(gm, a).labels()}
        try:
            res["forward"] = forward_powerset(gm, a).labels()
        except MeetsNotPreserved as exc:
            raise PreconditionUnmet(f"forward operator needs a co-adjoint: {exc}") from exc
        return res, [], 0
    return {"backward": backward_powerset(gm, a).labels()}, [], 0


def cmd_forward(doc, args):
    return _powerset(doc, args, True)


def cmd_backward(doc, args):
    return _powerset(doc, args, False)


def cmd_filter_check(doc, args):
    inline = _inline_table(doc, args)
    if inline is not None:
        G, table = inline
        try:
            F = check_fuzzy_filter(G, table)
        except AxiomViolation as exc:
            return {"violation": exc.report()}, [_verdict("filter-axioms", False)], 2
        return {"table": F.labels()}, [_verdict("filter-axioms", True)], 0
    (name,) = _need(args, 1, "FILTER_OR_TOPOLOGY (or --over/--table)")
    _, S = _structure(doc, name)
    bad = filter_violation(S.ground, S.table)
    if bad is None:
        return {"table": S.labels()}, [_verdict("filter-axioms", True)], 0
    return {"violation": bad.report()}, [_verdict("filter-axioms", False)], 2


def cmd_filter_meet(doc, args):
    if not args.names:
        raise UsageError("filter-meet expects one or more FILTER names")
    m = meet_filters([_filter(doc, n) for n in args.names])
    return {"meet": m.labels()}, [_verdict("filter-axioms", True)], 0


def cmd_continuity(doc, args):
    gname, sname, tname = _need(args, 3, "GROUND_MORPHISM SOURCE TARGET")
    gm = _gm(doc, gname)
    ks, S = _structure(doc, sname)
    kt, T = _structure(doc, tname)
    if ks != kt:
        raise UsageError("source and target must both be filters or both topologies")
    v = check_continuity(gm, S, T) if ks == "filters" else check_topo_continuity(gm, S, T)
    return v.to_json(), [_verdict("continuity", v.holds)], 0 if v else 2


def cmd_final_filter(doc, args):
    gname, fname = _need(args, 2, "GROUND_MORPHISM FILTER")
    gm = _gm(doc, gname)
    try:
        F = final_filter(gm, _filter(doc, fname))
    except AxiomViolation as exc:
        # bottom is always in the kernel; a larger kernel is the known family
        known = isinstance(exc, BottomAxiom) and len(exc.witness.get("kernel", [])) > 1
        return ({"violation": exc.report()},
                [_verdict("final-filter-axioms", False, known_counterexample=known)],
                1 if known else 2)
    return {"final": F.labels()}, [_verdict("final-filter-axioms", True)], 0


def cmd_initial_filter(doc, args):
    gname, fname = _need(args, 2, "GROUND_MORPHISM FILTER_ON_TARGET")
    gm = _gm(doc, gname)
    try:
        F = initial_filter(gm, _filter(doc, fname))
    except AxiomViolation as exc:
        return ({"violation": exc.report()},
                [_verdict("initial-filter-axioms", False, known_counterexample=True)], 1)
    return {"initial": F.labels()}, [_verdict("initial-filter-axioms", True)], 0


def _ground_arg(doc, args):
    (name,) = _need(args, 1, "GROUND")
    return doc.lookup("grounds", name)


def cmd_enumerate_filters(doc, args):
    G = _ground_arg(doc, args)
    poset = enumerate_filters(G, args.budget)
    return {"count": len(poset), "filters": [F.labels() for F in poset.filters]}, [], 0


def cmd_ultrafilters(doc, args):
    G = _ground_arg(doc, args)
    mx = maximal_filters(enumerate_filters(G, args.budget))
    res: dict[str, Any] = {"count": len(mx), "maximal": [F.labels() for F in mx]}
    verdicts = []
    if is_residuated(G.lattice):
        chars = {F.table for F in enumerate_filters(G, args.budget).filters
                 if ultrafilter_characterization(F)}
        same = chars == {F.table for F in mx}
        verdicts.append(_verdict("maximal-equals-characterized", same))
        return res, verdicts, 0 if same else 2
    res["note"] = "lattice is not residuated; characterization not compared"
    return res, verdicts, 0


def cmd_char_check(doc, args):
    (name,) = _need(args, 1, "FILTER")
    v = ultrafilter_characterization(_filter(doc, name))
    return v.to_json(), [_verdict("characterization", v.holds)], 0


def cmd_image_filter(doc, args):
    gname, fname = _need(args, 2, "GROUND_MORPHISM FILTER")
    gm = _gm(doc, gname)
    F = _filter(doc, fname)
    target = gm.target.with_lattice(F.ground.lattice)
    img = image_filter(gm.f, F, target)
    return {"image": img.labels(),
            "source_characterized": bool(ultrafilter_characterization(F)),
            "image_characterized": bool(ultrafilter_characterization(img))}, [], 0


def cmd_to_topology(doc, args):
    (name,) = _need(args, 1, "FILTER")
    T = filter_to_topology(_filter(doc, name))
    ok = topology_violation(T.ground, T.table, args.include_empty_join_axiom) is None
    return {"topology": T.labels()}, [_verdict("topology-axioms", ok)], 0 if ok else 2


def cmd_final_topology(doc, args):
    gname, tname = _need(args, 2, "GROUND_MORPHISM TOPOLOGY")
    T = final_topology(_gm(doc, gname), doc.lookup("topologies", tname),
                       args.include_empty_join_axiom)
    return {"final": T.labels()}, [_verdict("topology-axioms", True)], 0


def _tags(args):
    if not args.tags:
        return TAGS
    tags = tuple(t.strip() for t in args.tags.split(",") if t.strip())
    unknown = [t for t in tags if t not in TAGS]
    if unknown:
        raise UsageError(f"unknown tags: {unknown}")
    return tags


def cmd_verify_theorems(doc, args):
    suite = TheoremSuite(args.budget, args.include_empty_join_axiom)
    instances = document_instances(suite, doc)
    outcomes = [o for i in instances for o in suite.run(i, _tags(args))]
    return {"instances": [i.label for i in instances], "tags": summarize(outcomes)}, \
        [], exit_status(outcomes)


def cmd_random_suite(doc, args):
    _, outcomes = random_suite(args.seed, args.count, args.budget,
                               args.include_empty_join_axiom, _tags(args))
    return {"seed": args.seed, "count": args.count, "tags": summarize(outcomes)}, \
        [], exit_status(outcomes)


HANDLERS = {c: globals()["cmd_" + c.replace("-", "_")] for c in COMMANDS}


def run(args) -> tuple[dict[str, Any], int]:
    """Execute one parsed command; returns (report, exit status)."""
    echo = {"command": args.command, "names": list(args.names)}
    try:
        doc = None if args.command == "random-suite" else _document(args)
        result, verdicts, status = HANDLERS[args.command](doc, args)
    except ValidationError as exc:
        return {**echo, "error": exc.report()}, 3
    except (UsageError, PreconditionUnmet, BudgetExceeded, FfilError) as exc:
        err: dict[str, Any] = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, Violation):
            err = exc.report()
        if isinstance(exc, BudgetExceeded):
            err.update(search_space=exc.search_space, budget=exc.budget)
        return {**echo, "error": err}, 3
    report = {**echo, "result": result}
    if verdicts:
        report["verdicts"] = verdicts
    report["status"] = status
    return report, status


def _summary(report: dict[str, Any], status: int, elapsed: float) -> str:
    lines = [f"ffil {report['command']}: exit {status} ({elapsed:.2f} s)"]
    if "error" in report:
        lines.append(f"  error: {report['error'].get('message', report['error'])}")
    for v in report.get("verdicts", []):
        lines.append(f"  {v['check']}: {'holds' if v['holds'] else 'FAILS'}")
    for tag, s in report.get("result", {}).get("tags", {}).items():
        mark = "ok" if s["passed"] == s["checked"] else (
            "known failures" if not s["failed_unexpected"] else "VIOLATED")
        lines.append(f"  {tag:20s} {s['passed']}/{s['checked']}  {mark}")
    return "\n".join(lines)


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 3
    start = time.perf_counter()
    report, status = run(args)
    print(json.dumps(report, indent=2))
    if not args.json:
        print(_summary(report, status, time.perf_counter() - start), file=sys.stderr)
    return status


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
