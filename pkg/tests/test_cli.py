import json
from fractions import Fraction as F

import pytest

from polycauchy.bfile import BFileError, compare, format_bfile, load_manifest, parse_bfile
from polycauchy.cli import main, parse_A, parse_table
from polycauchy.families import sequence


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_compute_csv(capsys):
    code, out = run(capsys, "compute", "--family", "first", "--k", "1", "--n-max", "4")
    assert code == 0
    assert out == "n,value\n0,1\n1,1/2\n2,-1/6\n3,1/4\n4,-19/30\n"


def test_compute_json(capsys):
    code, out = run(capsys, "compute", "--family", "second", "--k", "2", "--n-max", "2", "--format", "json")
    doc = json.loads(out)
    assert [r["value"] for r in doc["rows"]] == ["1", "-1/4", "13/36"]
    assert all(isinstance(r["value"], str) for r in doc["rows"])
    assert doc["meta"]["k"] == 2


@pytest.mark.parametrize("family", ["first", "second"])
def test_compute_n_max_zero(capsys, family):
    _, out = run(capsys, "compute", "--family", family, "--n-max", "0")
    assert out == "n,value\n0,1\n"


def test_compute_deterministic(capsys):
    argv = ("compute", "--family", "second", "--k", "3", "--n-max", "12", "--format", "json")
    _, a = run(capsys, *argv)
    _, b = run(capsys, *argv)
    assert a == b


@pytest.mark.parametrize("fmt", ["csv", "json"])
def test_roundtrip(capsys, fmt):
    _, out = run(capsys, "compute", "--family", "first", "--k", "2", "--n-max", "15", "--format", fmt)
    assert [v for _, v in parse_table(out)] == sequence("first", 2, 15)


def test_compute_q_family(capsys):
    _, out = run(capsys, "compute", "--family", "first", "--k", "1", "--n-max", "2",
                 "--A", "0,1", "--L", "1", "--q", "1/2", "--z", "0", "--format", "json")
    doc = json.loads(out)
    assert doc["rows"][2]["value"] == "-2/21"
    assert doc["meta"]["q_regime"] == "series"


def test_compute_rho_family(capsys):
    _, out = run(capsys, "compute", "--family", "second", "--n-max", "2", "--A", "rho:2")
    assert out.splitlines()[-1] == "2,4/3"


@pytest.mark.parametrize("argv,fieldname", [
    (["--k", "0"], "--k"),
    (["--family", "third"], "--family"),
    (["--q", "1"], "--q"),
    (["--L", "1,1", "--k", "1"], "--L"),
    (["--A", "0,1", "--n-max", "5"], "--A"),
    (["--n-max", "-1"], "--n-max"),
])
def test_invalid_config(capsys, argv, fieldname):
    with pytest.raises(SystemExit) as exc:
        main(["compute", *argv])
    assert exc.value.code != 0
    assert fieldname in capsys.readouterr().err


def test_parse_A_forms():
    assert parse_A("0,1/2,3", 3) == (0, F(1, 2), 3)
    assert parse_A("rho:1/2", 3) == (0, F(1, 2), 1)
    assert parse_A("plateau:I,3,2,2,2", 6) == (0, 2, 2, 2, 1, 1)


def test_analyze_first_kind(capsys):
    code, out = run(capsys, "analyze", "--family", "first", "--k", "1", "--n-max", "20", "--n-min", "2")
    rep = json.loads(out)["report"]
    assert code == 0 and rep["log_convex"] is True and rep["start_index"] == 2


def test_analyze_second_kind(capsys):
    _, out = run(capsys, "analyze", "--family", "second", "--k", "4", "--n-max", "20")
    assert json.loads(out)["report"]["log_convex"] is True


def test_analyze_input_file(capsys, tmp_path):
    p = tmp_path / "seq.txt"
    p.write_text("1\n0\n1\n")
    _, out = run(capsys, "analyze", "--input", str(p))
    rep = json.loads(out)["report"]
    assert rep["unimodal"] is False
    assert rep["log_convex"] == "not applicable"


def test_verify_t22(capsys):
    code, out = run(capsys, "verify", "t22", "--k-range", "1-4", "--n-max", "30")
    doc = json.loads(out)
    assert code == 0 and doc["passed"]
    assert doc["suites"]["t22"]["count"] == 4 * 28


def test_verify_oracle(capsys):
    code, out = run(capsys, "verify", "oracle", "--k-range", "1-2", "--n-max", "5", "--seeds", "3")
    assert code == 0 and json.loads(out)["passed"]


def test_verify_oracle_budget(capsys):
    code = main(["verify", "oracle", "--k-range", "1", "--n-max", "9"])
    assert code == 2
    assert "n <= 8" in capsys.readouterr().err


def test_verify_t24(capsys):
    code, out = run(capsys, "verify", "t24", "--case", "I", "--l", "3", "--k-range", "1",
                    "--A", "plateau:I,3,2,2,2", "--n-max", "8")
    inst = json.loads(out)["suites"]["t24"]["instances"]
    assert code == 0 and inst[0]["modes"] == [4]


def test_verify_t23_bad_hypothesis(capsys):
    code = main(["verify", "t23", "--A", "0,1,1,2,3", "--n-max", "4", "--k-range", "1"])
    assert code == 2
    assert "a_2" in capsys.readouterr().err


def test_verify_writes_out(tmp_path, capsys):
    out = tmp_path / "summary.json"
    assert main(["verify", "lemma21", "--k-range", "1-2", "--n-max", "10", "--out", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["suites"]["lemma21"]["count"] == 22


# b-files

def test_parse_bfile():
    bf = parse_bfile("# comment\n0 1\n1 2\n\n2 -6\n")
    assert bf.entries == ((0, 1), (1, 2), (2, -6))


@pytest.mark.parametrize("text,line", [("0 1\n1\n", 2), ("0 1\n0 2\n", 2), ("# x\n0 a\n", 2)])
def test_parse_bfile_errors(text, line):
    with pytest.raises(BFileError, match=f"line {line}"):
        parse_bfile(text)


def test_compare_offset():
    vals = sequence("first", 1, 4)
    rep = compare(parse_bfile("1 1\n2 2\n3 6\n"), vals, "denominator", offset=1)
    assert rep.full_match and [c["n"] for c in rep.checked] == [0, 1, 2]


def test_oeis_check_full_match(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text(format_bfile([(0, 1), (1, 2), (2, 6), (3, 4), (4, 30)]))
    code, out = run(capsys, "oeis-check", str(p), "--family", "first", "--k", "1", "--part", "denominator")
    doc = json.loads(out)
    assert code == 0 and doc["full_match"] and doc["checked"] == 5


def test_oeis_check_mismatch(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("0 1\n1 2\n2 7\n3 4\n4 30\n")
    code, out = run(capsys, "oeis-check", str(p), "--part", "denominator")
    doc = json.loads(out)
    assert code == 1 and doc["mismatched"] == 1
    assert [e["index"] for e in doc["entries"] if not e["match"]] == [2]


def test_oeis_check_empty(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("# nothing\n")
    code, out = run(capsys, "oeis-check", str(p), "--part", "numerator")
    doc = json.loads(out)
    assert code == 0 and doc["vacuous"] and doc["full_match"]


def test_oeis_check_bad_line(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("0 1\n1 x\n")
    assert main(["oeis-check", str(p), "--part", "numerator"]) == 2
    assert "line 2" in capsys.readouterr().err


def test_self_generated_bfile(capsys, tmp_path):
    p = tmp_path / "b.txt"
    _, out = run(capsys, "compute", "--family", "second", "--k", "2", "--n-max", "25",
                 "--format", "bfile", "--part", "numerator", "--out", str(p))
    code, out = run(capsys, "oeis-check", str(p), "--family", "second", "--k", "2", "--part", "numerator")
    assert code == 0 and json.loads(out)["checked"] == 26


def test_unsigned_numerators(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("0 1\n1 1\n2 5\n3 9\n4 251\n")
    code, _ = run(capsys, "oeis-check", str(p), "--family", "second", "--part", "numerator", "--unsigned")
    assert code == 0


def test_manifest():
    m = load_manifest()["entries"]
    for a in ["A224094", "A224101", "A219247", "A224102", "A224107", "A224109"]:
        assert a in m
    assert all(e["confirmed"] is False for e in m.values())


def test_manifest_settings(capsys, tmp_path):
    p = tmp_path / "b.txt"
    p.write_text("0 1\n1 2\n2 6\n3 4\n4 30\n5 4\n6 84\n")
    code, _ = run(capsys, "oeis-check", str(p), "--anumber", "A006233")
    assert code == 0
    with pytest.raises(SystemExit):
        main(["oeis-check", str(p), "--anumber", "A224094"])


def test_verify_all_clips_oracle(capsys, tmp_path):
    out = tmp_path / "s.json"
    code = main(["verify", "all", "--k-range", "4-5", "--n-max", "8", "--out", str(out)])
    doc = json.loads(out.read_text())
    assert code == 0
    assert doc["suites"]["oracle"]["count"] == 0
    assert "clipped" in doc["suites"]["oracle"]["note"]
