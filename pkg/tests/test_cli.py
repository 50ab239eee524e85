from __future__ import annotations

import json
import subprocess
import sys
from importlib import resources
from pathlib import Path

import pytest

from ffil.cli import COMMANDS, main
from ffil.filters import _candidate_initial
from ffil.instance import loads


def run_cli(capsys, *argv):
    status = main(list(argv) + ["--json"])
    out = capsys.readouterr().out
    return status, json.loads(out) if out.strip() else None


def bundled(name):
    return str(resources.files("ffil").joinpath("data", name))


def test_commands_listed():
    assert len(COMMANDS) == 17
    assert {"check", "verify-theorems", "random-suite"} <= set(COMMANDS)


def test_check_bundled(capsys):
    status, rep = run_cli(capsys, "check")
    assert status == 0
    assert rep["result"]["document"]["filters"] == ["at_p", "on_y"]
    assert rep["result"]["lattices"]["BOOL"]["residuated"] is True


def test_usage_errors_exit_3(capsys):
    assert main(["no-such-command"]) == 3
    capsys.readouterr()
    status, rep = run_cli(capsys, "ultrafilters")
    assert status == 3 and "expects 1 name" in rep["error"]["message"]
    status, rep = run_cli(capsys, "final-filter", "collapse", "missing")
    assert status == 3 and rep["error"]["error"] == "ParseError"
    status, _ = run_cli(capsys, "random-suite", "--tags", "nonsense", "--count", "1")
    assert status == 3
    status, _ = run_cli(capsys, "filter-check", "--table", "[1]")
    assert status == 3


def test_invalid_document_exits_3(capsys, tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"filters": {"f": {"over": "nowhere", "values": []}}}))
    status, rep = run_cli(capsys, "check", "--instance", str(path))
    assert status == 3 and "error" in rep
    path.write_text(json.dumps({"grounds": {"P": {"points": ["p"], "lattice": "B"}},
                                "lattices": {"B": {"bundled": "BOOL"}},
                                "filters": {"f": {"over": "P", "values": ["1", "1"]}}}))
    status, rep = run_cli(capsys, "check", "--instance", str(path))
    assert status == 3 and rep["error"]["error"] == "BottomAxiom"


def test_ultrafilters(capsys):
    status, rep = run_cli(capsys, "ultrafilters", "P")
    assert status == 0
    assert rep["result"]["count"] == 2
    assert rep["verdicts"] == [{"check": "maximal-equals-characterized", "holds": True}]


def test_enumerate_filters(capsys):
    status, rep = run_cli(capsys, "enumerate-filters", "P")
    assert status == 0 and rep["result"]["count"] == 3
    status, rep = run_cli(capsys, "enumerate-filters", "P", "--budget", "1")
    assert status == 3 and rep["error"]["error"] == "BudgetExceeded"


def test_final_filter_identity_returns_input(capsys, tmp_path):
    raw = json.loads(Path(bundled("bool_pq.json")).read_text())
    raw["ground_morphisms"]["same"] = {"source": "P", "target": "P",
                                       "f": {"p": "p", "q": "q"}}
    path = tmp_path / "doc.json"
    path.write_text(json.dumps(raw))
    status, rep = run_cli(capsys, "final-filter", "same", "at_p", "--instance", str(path))
    assert status == 0
    assert rep["result"]["final"] == ["0", "1", "0", "1"]


def test_filter_check_inline(capsys):
    status, rep = run_cli(capsys, "filter-check", "--over", "P", "--table", '["0","1","0","1"]')
    assert status == 0
    status, rep = run_cli(capsys, "filter-check", "--over", "P", "--table", '["1","1","1","1"]')
    assert status == 2
    assert rep["result"]["violation"]["error"] == "BottomAxiom"


def test_powerset_and_adjoints(capsys):
    status, rep = run_cli(capsys, "forward", "collapse", "only_p")
    assert status == 0 and rep["result"]["forward"] == {"y": "1"}
    status, rep = run_cli(capsys, "backward", "collapse", "all_y")
    assert status == 0 and rep["result"]["backward"] == {"p": "1", "q": "1"}
    status, rep = run_cli(capsys, "adjoints", "collapse")
    assert status == 0 and rep["verdicts"][0]["holds"]


def test_topology_commands(capsys):
    status, rep = run_cli(capsys, "to-topology", "at_p")
    assert status == 0 and rep["result"]["topology"] == ["1", "1", "0", "1"]
    status, rep = run_cli(capsys, "final-topology", "collapse", "at_p_open")
    assert status == 0 and rep["result"]["final"] == ["1", "1"]
    status, rep = run_cli(capsys, "continuity", "swap", "at_p_open", "at_p")
    assert status == 3


def test_char_and_image(capsys):
    status, rep = run_cli(capsys, "char-check", "at_p")
    assert status == 0 and rep["result"]["holds"]
    status, rep = run_cli(capsys, "image-filter", "collapse", "at_p")
    assert rep["result"] == {"image": ["0", "1"], "source_characterized": True,
                             "image_characterized": True}
    status, rep = run_cli(capsys, "filter-meet", "at_p")
    assert status == 0 and rep["result"]["meet"] == ["0", "1", "0", "1"]


def test_verify_theorems_bundled_exits_1(capsys):
    status, rep = run_cli(capsys, "verify-theorems")
    assert status == 1
    failing = {t for t, s in rep["result"]["tags"].items()
               if s["failed_expected"] or s["failed_unexpected"]}
    assert failing == {"initial-filter"}
    assert rep["result"]["tags"]["initial-filter"]["failed_unexpected"] == 0


def test_initial_counterexample_exits_1(capsys):
    status, rep = run_cli(capsys, "initial-filter", "collapse", "on_y",
                          "--instance", bundled("initial_counterexample.json"))
    assert status == 1
    w = rep["result"]["violation"]["witness"]
    assert (w["h"], w["k"]) == ({"x1": "1", "x2": "0"}, {"x1": "0", "x2": "1"})


def test_continuity_witness_reproduces(capsys):
    status, rep = run_cli(capsys, "continuity", "swap", "at_p", "at_p")
    assert status == 2
    b = rep["result"]["witness"]["b"]
    doc = loads(Path(bundled("bool_pq.json")).read_text())
    gm, F = doc.ground_morphisms["swap"], doc.filters["at_p"]
    P, L = gm.source, gm.source.lattice
    bvec = P.fuzzy_set(b)
    pulled = P.fuzzy_set([bvec.values[y] for y in gm.f])
    # phi_op is the identity: continuity needs F(b) <= F(b . f)
    assert not L.le(F(bvec), F(pulled))


def test_initial_witness_reproduces(capsys):
    _, rep = run_cli(capsys, "initial-filter", "collapse", "on_y",
                          "--instance", bundled("initial_counterexample.json"))
    w = rep["result"]["violation"]["witness"]
    doc = loads(Path(bundled("initial_counterexample.json")).read_text())
    gm = doc.ground_morphisms["collapse"]
    X, L = gm.source, gm.source.lattice
    table = _candidate_initial(gm, doc.filters["on_y"].table)
    h, k = X.fuzzy_set(w["h"]), X.fuzzy_set(w["k"])
    assert not L.le(L.otimes(table[h.index], table[k.index]), table[h.otimes(k).index])


def test_random_suite_is_deterministic(capsys):
    args = ["random-suite", "--seed", "3", "--count", "4", "--tags", "adjunction,filter-meet"]
    outputs = []
    for _ in range(2):
        assert main(args + ["--json"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["result"]["tags"]["adjunction"]["checked"] > 0


def test_console_script_and_stderr_summary():
    proc = subprocess.run([sys.executable, "-m", "ffil.cli", "ultrafilters", "P"],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["count"] == 2
    assert proc.stderr.strip()
    quiet = subprocess.run([sys.executable, "-m", "ffil.cli", "ultrafilters", "P", "--json"],
                           capture_output=True, text=True, check=False)
    assert quiet.stderr == "" and quiet.stdout == proc.stdout


@pytest.mark.parametrize("value", ["true", "false"])
def test_empty_family_flag(capsys, value):
    status, _ = run_cli(capsys, "to-topology", "at_p", "--include-empty-join-axiom", value)
    assert status == 0
