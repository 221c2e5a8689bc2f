import contextlib
import io
import json
import os
import subprocess
import sys

import pytest

from duoidal import cli, fixtures, specio
from duoidal import vbase as vb

SHIPPED = os.path.join(os.path.dirname(os.path.dirname(__file__)), "fixtures")


def run(argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = cli.main(argv)
    return code, out.getvalue(), err.getvalue()


def write(tmp_path, name, doc):
    path = tmp_path / name
    path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
    return str(path)


@pytest.mark.parametrize("name", fixtures.names())
def test_shipped_fixtures_match_the_catalog(name):
    with open(os.path.join(SHIPPED, name + ".json"), encoding="utf-8") as fh:
        assert fh.read() == specio.dumps(fixtures.fixture(name))


def test_emit_round_trip_is_bit_exact(tmp_path):
    path = str(tmp_path / "a.json")
    assert run(["emit-fixture", "klein_duoidal", "-o", path])[0] == 0
    text = open(path, encoding="utf-8").read()
    assert specio.dumps(specio.loads(text)) == text
    code, out, _ = run(["emit-fixture", "klein_duoidal"])
    assert code == 0 and out == text


def test_emit_unknown_name_lists_the_catalog():
    code, _, err = run(["emit-fixture", "nope"])
    assert code == 2 and "z2_group_bimonoid" in err
    code, out, _ = run(["emit-fixture", "--list"])
    assert code == 0 and out.split() == fixtures.names()


@pytest.mark.parametrize("text", [
    "not json",
    "[]",
    json.dumps({"version": 2, "base": {"kind": "FinSet"}, "kind": "duoidal", "payload": {}}),
    json.dumps({"version": 1, "base": {"kind": "FinSet"}, "kind": "sheaf", "payload": {}}),
    json.dumps({"version": 1, "base": {"kind": "Top"}, "kind": "duoidal", "payload": {}}),
    json.dumps({"version": 1, "base": {"kind": "FinSet"}, "kind": "duoidal", "payload": {}, "x": 1}),
    json.dumps({"version": 1, "base": {"kind": "FinSet"}, "kind": "category",
                "payload": {"monoid_table": [[0, 1], [1]]}}),
    json.dumps({"version": 1, "base": {"kind": "FinSet"}, "kind": "category",
                "payload": {"monoid_table": [[0, 5], [1, 0]]}}),
])
def test_parse_errors_exit_2(tmp_path, text):
    code, out, _ = run(["validate", write(tmp_path, "bad.json", text)])
    assert code == 2
    doc = json.loads(out)
    assert doc["status"] == "error" and doc["errors"][0].startswith("parse error")


def test_missing_file_exits_2(tmp_path):
    assert run(["validate", str(tmp_path / "missing.json")])[0] == 2


def test_validate_reports_counterexamples():
    code, out, _ = run(["validate", os.path.join(SHIPPED, "broken_gamma.json")])
    assert code == 1
    doc = json.loads(out)
    failed = {c["axiom"] for c in doc["checks"] if c["status"] == "fail"}
    assert "(3)" in failed


def test_report_file_matches_stdout(tmp_path):
    rp = str(tmp_path / "r.json")
    code, out, _ = run(["--report", rp, "validate", os.path.join(SHIPPED, "klein_duoidal.json")])
    assert code == 0
    assert open(rp, encoding="utf-8").read() == out


def test_budget_flag_and_environment(monkeypatch):
    path = os.path.join(SHIPPED, "z2_group_bimonoid.json")
    argv = ["roundtrip", path, "--carriers", "0", "1", "2", "3"]
    code, out, _ = run(["--budget", "257"] + argv)
    assert code == 3 and "budget exceeded" in json.loads(out)["errors"][0]
    monkeypatch.setenv(vb.BUDGET_ENV, "257")
    assert run(argv)[0] == 3
    monkeypatch.setenv(vb.BUDGET_ENV, "lots")
    assert run(argv)[0] == 2


def test_roundtrip_and_classify(tmp_path):
    code, out, _ = run(["roundtrip", os.path.join(SHIPPED, "z2_group_bimonoid.json")])
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(["classify", "--bimonoid", os.path.join(SHIPPED, "z2_group_bimonoid.json")])
    assert code == 0 and json.loads(out) == {"hopf": True}
    rp = str(tmp_path / "c.json")
    code, out, _ = run(["--report", rp, "classify", "--bimonoid", os.path.join(SHIPPED, "or_bimonoid.json")])
    assert code == 0 and json.loads(out) == {"hopf": False}
    assert json.load(open(rp))["classification"] == {"left": False, "right": False, "hopf": False}
    code, out, _ = run(["classify", "--bimonoid", os.path.join(SHIPPED, "broken_bimonoid.json")])
    assert code == 1 and json.loads(out)["status"] == "fail"
    assert run(["classify", "--bimonoid", os.path.join(SHIPPED, "klein_duoidal.json")])[0] == 2


@pytest.mark.parametrize("op,src,extra", [
    ("from-braided", "finset2_braided", []),
    ("warp", "z3_shift_warping", []),
    ("modules", "z2_group_bimonoid", []),
    ("lift-bimonoid", "z2_group_bimonoid", []),
    ("produoidal-from-duoidal", "z2_discrete_duoidal", []),
    ("day-convolve", "z2_produoidal", ["--tensor", "circ", "--left", "1", "--right", "0"]),
])
def test_constructions_revalidate(tmp_path, op, src, extra):
    out_path = str(tmp_path / "out.json")
    code, out, _ = run(["construct", op, os.path.join(SHIPPED, src + ".json"), "-o", out_path] + extra)
    assert code == 0, out
    assert json.loads(out)["artifacts"] == ["out.json"]
    assert run(["validate", out_path])[0] == 0


def test_construct_without_output_writes_the_structure_to_stdout():
    code, out, err = run(["construct", "from-braided", os.path.join(SHIPPED, "finset2_braided.json")])
    assert code == 0
    assert specio.loads(out).kind == "duoidal"
    assert json.loads(err)["status"] == "pass"


def test_day_convolve_appends_an_entry(tmp_path):
    out_path = str(tmp_path / "p.json")
    run(["construct", "day-convolve", os.path.join(SHIPPED, "z2_produoidal.json"), "-o", out_path,
         "--left", "1", "--right", "1"])
    entries = specio.load(out_path).payload["convolutions"]
    assert len(entries) == 2 and entries[-1]["sizes"] == [1, 0]


def test_construct_rejects_the_wrong_kind():
    assert run(["construct", "warp", os.path.join(SHIPPED, "klein_duoidal.json")])[0] == 2


def test_console_script_smoke():
    proc = subprocess.run([sys.executable, "-m", "duoidal.cli", "validate",
                           os.path.join(SHIPPED, "z2_discrete_duoidal.json")],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["status"] == "pass"
