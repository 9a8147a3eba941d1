import io
import json

import pytest

from filterlab import cli
from filterlab.formats import parse_assignment, parse_model
from filterlab.henkin import model_check, parse_fo_theory
from filterlab.proplogic import parse_theory


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = cli.main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def records(*argv):
    code, text, _ = run(*argv, "--format", "records")
    return code, [json.loads(line) for line in text.splitlines()]


@pytest.fixture
def files(tmp_path):
    def write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return p
    return write


def test_indep_all_cells(files):
    fam = files("f2.sexp", "(family (domain finite 2) (gen all-subsets))")
    code, recs = records("indep", fam, "--exhaustive")
    assert code == cli.OK
    summary = recs[-1]
    assert summary["kind"] == "summary" and summary["cells"] == summary["witnessed"] == 16
    assert summary["discrepancies"] == 0
    assert all(r["schema"] == 1 for r in recs)


def test_indep_empty_cell(files):
    fam = files("f2.sexp", "(family (domain finite 2) (gen {0}) (gen {1}))")
    code, recs = records("indep", fam, "--cell", "")
    assert code == cli.OK and recs[0]["cell"] == "" and recs[0]["points"] == ["(pt {} ())"]


def test_indep_single_cell(files):
    fam = files("f2.sexp", "(family (domain finite 2) (gen {0}) (gen {1}))")
    code, recs = records("indep", fam, "--cell", "0=1,1=0", "--count", 2)
    assert code == cli.OK and recs[0]["points"] == ["(pt {0} ({0}))", "(pt {0 1} ({0}))"]


def test_indep_exhausted_cell_is_a_failed_cell(files):
    fam = files("f2.sexp", "(family (domain finite 2) (gen {0}) (gen {1}))")
    code, _, err = run("indep", fam, "--cell", "0=1,1=0", "--count", 3)
    assert code == cli.VIOLATED


def test_iota_check_corpus():
    code, recs = records("iota-check")
    assert code == cli.OK and recs[-1]["failures"] == 0 and recs[-1]["partition_failures"] == 0


def test_iota_check_random_is_reproducible():
    a = records("iota-check", "--random", 40, "--seed", 7)
    b = records("iota-check", "--random", 40, "--seed", 7)
    assert a == b and a[0] == cli.OK and a[1][-1]["formulas"] == 40


def test_iota_check_random_needs_seed():
    code, _, _ = run("iota-check", "--random", 5)
    assert code == cli.BAD_INPUT


def test_solve_sat_writes_assignment(files, tmp_path):
    th = files("t.th", "(theory (assert a0) (assert (or (not a0) a1)))")
    out = tmp_path / "s.sexp"
    code, _, _ = run("solve", th, "--out", out)
    assert code == cli.OK
    assert parse_assignment(out.read_text()) == {0: 1, 1: 1}


def test_solve_exit_codes(files):
    assert run("solve", files("u.th", "(theory (assert a0) (assert (not a0)))"))[0] == cli.UNSAT
    assert run("solve", "/nonexistent/theory")[0] == cli.BAD_INPUT
    code, _, err = run("solve", files("bad.th", "(theory (assert a0)"))
    assert code == cli.BAD_INPUT and ":" in err


def test_solve_random_agreement():
    code, recs = records("solve", "--random", 30, "--seed", 1)
    assert code in (cli.OK, cli.UNSAT) and recs[-1]["disagreements"] == 0


def test_henkin_corpus():
    code, recs = records("henkin")
    assert code == cli.OK and recs[-1]["theories"] == 12
    assert all(r["model_check"] for r in recs if r.get("verdict") == "sat")


def test_henkin_model_and_prop(files, tmp_path):
    text = "(theory (assert (exists (x) (P x))) (assert (forall (x) (implies (P x) (Q x)))))"
    th = files("fo.th", text)
    model, prop = tmp_path / "m.sexp", tmp_path / "p.th"
    code, _, _ = run("henkin", th, "--out", model, "--emit-prop", prop)
    assert code == cli.OK
    M = parse_model(model.read_text())
    assert all(model_check(M, f) for f in parse_fo_theory(text))
    assert parse_theory(prop.read_text())
    assert run("solve", prop)[0] == cli.OK


def test_henkin_unsat(files):
    th = files("u.th", "(theory (assert (exists (x) (P x))) (assert (forall (x) (not (P x)))))")
    assert run("henkin", th)[0] == cli.UNSAT


def test_encode_solve_decode(files, tmp_path):
    fl = files("f.sexp", "(filter (carrier finite 3) (width 4) (gen {0 1}) (gen {1 2}))")
    enc, asg = tmp_path / "e.th", tmp_path / "a.sexp"
    assert run("encode", fl, "--out", enc)[0] == cli.OK
    assert run("solve", enc, "--out", asg)[0] == cli.OK
    code, out, _ = run("decode", fl, asg)
    assert code == cli.OK and "(principal 1)" in out


def test_encode_fo_then_henkin_decode(files, tmp_path):
    fl = files("f.sexp", "(filter (carrier finite 2) (width 3) (gen {1}))")
    enc, model = tmp_path / "e.th", tmp_path / "m.sexp"
    assert run("encode", fl, "--fo", "--out", enc)[0] == cli.OK
    assert run("henkin", enc, "--out", model)[0] == cli.OK
    code, out, _ = run("decode", fl, model)
    assert code == cli.OK and "(principal 1)" in out


def test_decode_violation(files):
    fl = files("f.sexp", "(filter (carrier finite 2) (width 3) (gen {0 1}))")
    asg = files("a.sexp", "(assignment (a0 0) (a1 0) (a2 0) (a3 1))")
    assert run("decode", fl, asg)[0] == cli.VIOLATED


def test_roundtrip(files):
    fl = files("f.sexp", "(filter (carrier finite 3) (width 4) (gen {0 1}) (gen {1 2}))")
    code, recs = records("roundtrip", fl, "--mode", "both")
    assert code == cli.OK
    assert recs[0]["decoded"] == {"direct": "(principal 1)", "henkin": "(principal 1)"}
    code, recs = records("roundtrip", "--principal", "--n", 3)
    assert code == cli.OK and recs[-1]["failures"] == 0 and recs[-1]["filters"] == 1 + 3 + 7  # nonempty generating sets


def test_roundtrip_encoder_refuses_large_field(files):
    fl = files("f.sexp", "(filter (carrier finite 6) (width 4) (gen {0}))")
    assert run("roundtrip", fl)[0] == cli.BAD_INPUT


def test_suite_requires_seed():
    assert run("suite")[0] == cli.BAD_INPUT


def test_human_format_has_no_json(files):
    fam = files("f2.sexp", "(family (domain finite 2) (gen {0}) (gen {1}))")
    code, out, _ = run("indep", fam)
    assert code == cli.OK and not out.lstrip().startswith("{")


def test_records_are_sorted_and_timing_free(files):
    fam = files("f2.sexp", "(family (domain finite 2) (gen {0}) (gen {1}))")
    _, text, _ = run("indep", fam, "--format", "records")
    for line in text.splitlines():
        rec = json.loads(line)
        assert list(rec) == sorted(rec)
        assert not any("time" in k or "elapsed" in k for k in rec)


def test_parallel_matches_serial(files):
    fam = files("f3.sexp", "(family (domain finite 3) (gen all-subsets))")
    serial = run("indep", fam, "--up-to", 2, "--format", "records")
    par = run("indep", fam, "--up-to", 2, "--format", "records", "--parallel", 2)
    assert serial == par and serial[0] == cli.OK
