import json

import pytest

from conftest import FIXTURES
from twomorita.cli import main, run
from twomorita.endodecomp import EndoMatrix
from twomorita.nnimat import NNIMatrix
from twomorita.projfun import load_quiver
from twomorita.soergel import load_coxeter
from twomorita.twocat import TwoCatPresentation, dumps


def f(name):
    return str(FIXTURES / name)


def test_flor_example():
    r = run(["flor", f("flor_77.json")])
    assert r.exit_code == 0
    assert "a=1 b=1 c=1" in r.report
    assert "block equations verified: yes" in r.report


def test_projectives_example():
    r = run(["--format", "json", "projectives", f("ex72.json")])
    assert r.exit_code == 0
    data = json.loads(r.report)
    assert [(d["G"], d["Q"]) for d in data["descriptors"]] == [("1_i", {}), ("F", {"K": 1})]


def test_morita_example():
    r = run(["projfun", "morita", f("cx2.json"), f("cx2_plus_c.json")])
    assert r.exit_code == 0
    assert r.report.splitlines()[0] == "inequivalent"
    r = run(["projfun", "morita", f("C.json"), f("CplusC.json"), "--oracle"])
    assert r.report.splitlines()[0] == "equivalent"
    assert "search oracle agrees: yes" in r.report


def test_format_flag_either_side_of_subcommand():
    a = run(["--format", "json", "essential", f("two_objects.json")])
    b = run(["essential", f("two_objects.json"), "--format", "json"])
    assert a.report == b.report
    assert json.loads(a.report)["essential"] == ["i", "j"]


def test_usage_errors():
    assert run([]).exit_code == 2
    assert run(["flor", "--bogus", f("flor_77.json")]).exit_code == 2
    assert run(["frobnicate"]).exit_code == 2
    assert run(["flor", f("does_not_exist.json")]).exit_code == 2
    assert run(["--format", "xml", "flor", f("flor_77.json")]).exit_code == 2


def test_help_exits_zero(capsys):
    assert run(["--help"]).exit_code == 0
    assert run(["soergel", "kl", "--help"]).exit_code == 0
    assert "usage: twomorita" in capsys.readouterr().out


def test_domain_errors_report_class_name(tmp_path):
    bad = tmp_path / "m.json"
    bad.write_text("[[0, 2], [0, 0]]")
    r = run(["flor", str(bad)])
    assert r.exit_code == 1 and "NotIdempotent" in r.report
    r = run(["soergel", "check", f("A3.json"), "--cap", "10"])
    assert r.exit_code == 1 and "CapExceeded" in r.report
    r = run(["--format", "json", "projectives", f("cx2.json")])
    assert r.exit_code == 1 and json.loads(r.report)["error"] == "InvalidPresentation"
    loop = tmp_path / "loop.json"
    loop.write_text('{"vertices": ["1"], "arrows": [{"name": "x", "src": "1", "tgt": "1"}]}')
    r = run(["projfun", "build", str(loop)])
    assert r.exit_code == 1 and "InfiniteDimensional" in r.report


def test_validate_reports_violations(tmp_path):
    assert run(["validate", f("ex72.json")]).report == "valid\n"
    bad = tmp_path / "p.json"
    bad.write_text(json.dumps({
        "objects": ["i"], "identities": {"i": "1_i"},
        "onemorphisms": [{"id": "F", "src": "i", "tgt": "i"}],
        "composition": [{"left": "1_i", "right": "F", "result": {"F": 2}}],
    }))
    r = run(["validate", str(bad)])
    assert r.exit_code == 0
    assert r.report.startswith("invalid") and "identity-law" in r.report


def test_decompose():
    r = run(["--format", "json", "decompose", f("ex72.json"), f("ex72_endo.json")])
    data = json.loads(r.report)
    assert r.exit_code == 0 and data["all_checks_pass"]
    assert len(data["checks"]) == 13
    r = run(["decompose", f("ex71.json"), f("ex71_endo.json")])
    assert r.exit_code == 0 and "FAIL" not in r.report


def test_build_outputs_feed_other_commands(tmp_path):
    out = tmp_path / "a2.json"
    r = run(["soergel", "build", f("A2.json"), "-o", str(out)])
    assert r.exit_code == 0 and r.output_file == str(out)
    r = run(["projectives", str(out)])
    assert r.exit_code == 0
    assert "G=B_e" in r.report and "G=B_s " not in r.report
    out = tmp_path / "pc.json"
    run(["projfun", "build", f("path12_plus_c.json"), "-o", str(out)])
    r = run(["essential", str(out)])
    assert r.report.splitlines()[-1] == "essential objects: 1"


def test_build_without_output_prints_presentation():
    r = run(["projfun", "build", f("cx2.json")])
    P = TwoCatPresentation.from_json(json.loads(r.report))
    assert sorted(P.mor) == ["1_1", "P[1,1]"]


def test_soergel_commands():
    r = run(["soergel", "check", f("G2.json")])
    assert "group order: 12" in r.report and "identity is the only weak idempotent: yes" in r.report
    r = run(["--format", "json", "soergel", "kl", f("A1.json")])
    assert json.loads(r.report)["h"] == [
        {"h": "1", "w": "e", "x": "e"}, {"h": "v", "w": "s", "x": "e"}, {"h": "1", "w": "s", "x": "s"}]


def test_search_is_seeded():
    a = run(["search", f("ex72.json"), "--seed", "5", "--trials", "200"])
    b = run(["search", f("ex72.json"), "--seed", "5", "--trials", "200"])
    assert a.exit_code == 0 and a.report == b.report
    assert "identity check failures: 0" in a.report


def test_main_writes_report(capsys):
    assert main(["flor", f("flor_77.json")]) == 0
    assert "a=1 b=1 c=1" in capsys.readouterr().out


LOADERS = {
    "flor_77": lambda d: NNIMatrix.from_json(d).to_json(),
    "ex72": lambda d: TwoCatPresentation.from_json(d).to_json(),
    "ex71": lambda d: TwoCatPresentation.from_json(d).to_json(),
    "two_objects": lambda d: TwoCatPresentation.from_json(d).to_json(),
}


@pytest.mark.parametrize("path", sorted(FIXTURES.glob("*.json")), ids=lambda p: p.name)
def test_fixture_round_trip(path):
    text = path.read_text(encoding="utf-8")
    data = json.loads(text)
    name = path.stem
    if name in LOADERS:
        again = LOADERS[name](data)
    elif name.endswith("_endo") or "_endo_" in name:
        P = TwoCatPresentation.from_json(json.loads((FIXTURES / (name.split("_endo")[0] + ".json")).read_text()))
        again = EndoMatrix.from_json(P, data).to_json()
    elif "m" in data:
        again = load_coxeter(text).to_json()
    else:
        again = load_quiver(text).to_json()
    assert dumps(again) == text
