import json
import subprocess
import sys

import pytest

from proxkit import formats
from proxkit.cli import main
from proxkit.corpus import FIXTURE_DIR, named_lattice
from proxkit.errors import ParseError


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


def lines(out):
    return dict(line.split(": ", 1) for line in out.splitlines())


def test_validate_b2_with_leq(capsys):
    code, out = run(capsys, "validate", "B2", "--relation", "leq")
    assert code == 0
    assert all(lines(out)[f"check.{ax}"] == "pass" for ax in ("S1", "S2", "S3", "S4", "S5", "S6", "S8"))


def test_validate_axiom_subset(capsys):
    code, out = run(capsys, "validate", "B2", "--relation", "min", "--axioms", "S1,S5")
    assert code == 1
    assert lines(out)["check.S5"] == "FAIL witness=(a)"
    assert "check.S2" not in out


@pytest.mark.parametrize("name, witness", [("M3", "(x, y, z)"), ("N5", "(c, a, b)")])
def test_validate_rejects_non_distributive(capsys, name, witness):
    code, out = run(capsys, "validate", name)
    assert code == 1
    assert lines(out)["check.distributive"] == f"FAIL witness={witness}"


def test_validate_truncated_file(tmp_path, capsys):
    bad = tmp_path / "cut.json"
    bad.write_text((FIXTURE_DIR / "B2.json").read_text()[:30])
    assert main(["validate", str(bad)]) == 2
    assert "cut.json:" in capsys.readouterr().err


def test_parse_error_is_positioned():
    with pytest.raises(ParseError, match=r"x\.json:2:"):
        formats.parse_text('{"elements": [1,\n ]}', "x.json")


def test_validate_cycle_and_gleason(tmp_path, capsys):
    cyc = tmp_path / "cyc.json"
    cyc.write_text('{"kind": "poset", "elements": ["a", "b"], "leq": [["a", "b"], ["b", "a"]]}')
    code, out = run(capsys, "validate", str(cyc))
    assert code == 1 and lines(out)["check.partial-order"] == "FAIL witness=(a, b)"
    g = tmp_path / "g.json"
    g.write_text('{"kind": "gleason", "elements": ["p", "q"], "leq": [], "R": [[0,0],[0,1],[1,0],[1,1]]}')
    code, out = run(capsys, "validate", str(g))
    assert code == 1
    assert lines(out)["check.item3"] == "pass" and lines(out)["check.item4"].startswith("FAIL")


def test_dualize_examples(capsys, tmp_path):
    code, out = run(capsys, "dualize", "C3")
    d = lines(out)
    assert code == 0
    assert d["points"] == "[↑1, ↑m]" and d["classes"] == "[{↑1}, {↑m}]"
    assert d["ends"] == "[{1}, {m,1}]" and d["check.sigma"] == "pass"

    target = tmp_path / "dual.json"
    code, out = run(capsys, "dualize", "B2", "min", "--out", str(target))
    d = lines(out)
    assert code == 0
    assert d["R"] == "[↑a<↑a, ↑a<↑b, ↑b<↑a, ↑b<↑b]" and d["classes"] == "[{↑a,↑b}]"
    assert d["sigma"].startswith("skipped: not a proximity frame")
    doc = formats.load(str(target))
    assert doc["kind"] == "gleason" and len(doc["R"]) == 4

    code, out = run(capsys, "dualize", "C1")
    assert code == 0 and lines(out)["points"] == "[]"


def test_dualize_rejects_non_subordination(capsys):
    code, out = run(capsys, "dualize", "C3", "[[0, 1]]")
    assert code == 1 and lines(out)["check.subordination"].startswith("FAIL witness=(S1")


def test_morphism_examples(capsys):
    code, out = run(capsys, "morphism", "B2", "B2", "0,1,2,3")
    assert code == 0
    code, out = run(capsys, "morphism", "B2", "C2", "0,0,0,1")
    d = lines(out)
    assert code == 1
    assert d["check.H1"] == "FAIL witness=(a, b, a, b)"
    assert d["check.ofc"].startswith("FAIL witness=")
    assert d["check.H1-iff-ofc"] == "pass"
    code, out = run(capsys, "morphism", "C2", "C3", "0,2")
    assert code == 0 and lines(out)["xi"] == "[{↑1}->{↑1}, {↑m}->{↑1}]"


def test_morphism_file_and_labels(tmp_path, capsys):
    f = tmp_path / "m.json"
    f.write_text(json.dumps({"kind": "morphism", "source": "C2", "target": "C3", "map": ["0", "1"]}))
    code, out = run(capsys, "morphism", str(f))
    assert code == 0 and lines(out)["map"] == "[0->0, 1->1]"


def test_exhaust_checks(capsys):
    code, out = run(capsys, "exhaust", "C3", "--check", "collapse")
    d = lines(out)
    assert code == 0 and d["scanned"] == "512" and d["survivors"] == "1"
    code, out = run(capsys, "exhaust", "B2", "--check", "lemma-correspondence")
    assert code == 0 and lines(out)["survivors"] == "16"
    code, out = run(capsys, "exhaust", "B2", "--check", "iff-s6")
    assert code == 0


def test_exhaust_listing_and_limits(capsys):
    code, out = run(capsys, "exhaust", "C3", "--axioms", "S1,S2,S3,S4")
    assert code == 0 and lines(out)["survivors"] == "6"
    assert sum(line.startswith("relation.") for line in out.splitlines()) == 6
    code, _ = run(capsys, "exhaust", "B3")
    assert code == 2
    code, out = run(capsys, "exhaust", "B3", "--check", "collapse", "--sample", "500", "--seed", "4")
    assert code == 0 and lines(out)["exhaustive"] == "no"
    code, _ = run(capsys, "exhaust", "C3", "--axioms", "S7")
    assert code == 2


def test_worker_count_leaves_report_unchanged(capsys):
    _, one = run(capsys, "exhaust", "B2", "--axioms", "S1,S2,S3,S4", "--workers", "1")
    _, three = run(capsys, "exhaust", "B2", "--axioms", "S1,S2,S3,S4", "--workers", "3")
    assert one == three


def test_generate(capsys, tmp_path):
    _, a = run(capsys, "generate", "--poset", "3", "--seed", "7")
    _, b = run(capsys, "generate", "--poset", "3", "--seed", "7")
    assert a == b
    doc = json.loads(lines(a)["instance"])
    assert doc["kind"] == "poset" and len(doc["elements"]) == 3
    code, _ = run(capsys, "generate", "--poset", "99", "--seed", "1")
    assert code == 2
    out_file = tmp_path / "rel.json"
    code, out = run(capsys, "generate", "--subordination", "B2", "--seed", "1", "--out", str(out_file))
    assert code == 0
    s = formats.parse_relation(formats.load(str(out_file)))
    assert s.is_subordination
    for seed in range(20):
        code, _ = run(capsys, "generate", "--subordination", "U(P3vee)", "--seed", str(seed))
        assert code == 0


def test_dot(capsys, tmp_path):
    code, out = run(capsys, "dot", "C3")
    assert code == 0
    assert out.count("label=") == 3 and out.count("->") == 2 and "dashed" not in out
    g = tmp_path / "g.json"
    run(capsys, "dualize", "B2", "min", "--out", str(g))
    code, out = run(capsys, "dot", str(g))
    assert out.count("[label=") == 2 and out.count("style=dashed") == 2 and "cluster_0" in out
    e = tmp_path / "e.json"
    e.write_text('{"kind": "poset", "elements": [], "leq": []}')
    code, out = run(capsys, "dot", str(e))
    assert code == 0 and "->" not in out and "label" not in out
    code, _ = run(capsys, "dot", str(tmp_path / "missing.json"))
    assert code == 2


def test_json_output(capsys):
    code, out = run(capsys, "morphism", "B2", "C2", "0,0,0,1", "--json")
    doc = json.loads(out)
    assert doc["status"] == "fail"
    h1 = next(c for c in doc["checks"] if c["name"] == "H1")
    assert h1["witness"] == ["a", "b", "a", "b"]


def test_corpus_override(tmp_path, monkeypatch, capsys):
    (tmp_path / "Tiny.json").write_text('{"kind": "lattice", "elements": ["bot", "top"], "leq": [[0, 1]]}')
    monkeypatch.setenv("PROXKIT_CORPUS", str(tmp_path))
    code, out = run(capsys, "validate", "Tiny", "--relation", "leq")
    assert code == 0 and lines(out)["elements"] == "[bot, top]"
    code, _ = run(capsys, "validate", "B2")
    assert code == 2


def test_bad_usage_exit_code(capsys):
    assert main(["frobnicate"]) == 2
    assert main(["morphism", "B2", "C2"]) == 2
    assert main(["validate", "no-such-thing"]) == 2


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "proxkit", "validate", "M3"], capture_output=True, text=True)
    assert res.returncode == 1 and "check.distributive: FAIL" in res.stdout


def test_fixtures_roundtrip():
    for path in sorted(FIXTURE_DIR.glob("*.json")):
        doc = formats.load(str(path))
        assert formats.parse_text(formats.dumps(doc)) == doc
    L = formats.parse_lattice("U(P3vee)")
    assert L == named_lattice("U(P3vee)")
