import io
import json

import pytest

from squareheron.cli import run


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def records(text):
    return [json.loads(line) for line in text.splitlines()]


def test_verify_triangle_example():
    code, out, _ = call(["verify-triangle", "12321", "187489", "197200"])
    rec = records(out)[0]
    assert code == 0
    assert rec["heron"] and rec["primitive"] and rec["square_sides"] == 2


def test_verify_triangle_degenerate():
    code, out, _ = call(["verify-triangle", "1", "2", "3"])
    assert code == 0 and records(out) == [{"a": 1, "b": 2, "c": 3, "heron": False, "degenerate": True}]


def test_map_point():
    code, out, _ = call(["map-point", "--k", "2", "--x", "16", "--y", "136"])
    rec = records(out)[0]
    assert code == 0
    assert (rec["triangle"]["a"], rec["triangle"]["b"], rec["triangle"]["c"]) == (111**2, 433**2, 197200)
    assert rec["r"] == "197200/12321" and rec["q"] == "-433/111"


def test_domain_error_exit_1():
    code, out, err = call(["map-point", "--k", "2", "--x", "16", "--y", "-136"])
    assert code == 1 and out == ""
    assert json.loads(err)["type"] == "domain"
    code, _, err = call(["map-point", "--k", "1", "--x", "0", "--y", "0"])
    assert code == 1


def test_singular_x_exit_1():
    # X = 2(k^2+1)(k-1)^2 = 10 at k = 2; (10, 100) is on E_2.
    code, _, err = call(["map-point", "--k", "2", "--x", "10", "--y", "100"])
    assert code == 1 and "singular" in json.loads(err)["error"]


@pytest.mark.parametrize("argv", [
    ["map-point", "--k", "2", "--x", "1.5", "--y", "3"],
    ["map-point", "--k", "2", "--x", "16"],
    ["verify-triangle", "1", "2"],
    ["verify-triangle", "0", "2", "3"],
    ["enumerate"],
    ["no-such-command"],
])
def test_validation_errors_exit_2(argv, capsys):
    with pytest.raises(SystemExit) as exc:
        run(argv)
    assert exc.value.code == 2


def test_negative_rationals_accepted():
    code, out, _ = call(["symmetry", "--k", "-23/1421", "--r", "1853/4380", "--q", "4427/4380", "--op", "canonical"])
    recs = records(out)
    assert code == 0 and recs[0]["is_solution"]
    assert recs[1]["k"] == "31/37" and recs[1]["chain"] == ["prop4+", "r-inv"]


def test_symmetry_report_fields():
    _, out, _ = call(["symmetry", "--k", "1/2", "--r", "1/2", "--q", "1/2"])
    rec = records(out)[0]
    assert set(rec) >= {"k", "r", "q", "F_value", "is_solution", "triangle"}
    assert rec["is_solution"] is False and rec["triangle"] is None


def test_verify_corpus_reports_erratum():
    code, out, _ = call(["verify-corpus"])
    recs = records(out)
    assert code == 1
    assert [r["item"] for r in recs if not r["passed"]] == ["ex2.3 solution 6 F=0"]
    code, out, _ = call(["verify-corpus", "--item", "ex2.4"])
    assert code == 0 and len(records(out)) == 3


def test_gen_family_and_isosceles():
    _, out, _ = call(["gen-family", "--k", "3"])
    rec = records(out)[0]
    assert (rec["a"], rec["b"], rec["c"]) == (781**2, 2257**2, 5436600)
    assert rec["provenance"] == "thm1.4 3/1"
    _, out, _ = call(["gen-isosceles", "--u", "3", "--v", "1", "--variant", "2"])
    assert records(out)[0]["c"] == 14
    code, _, _ = call(["gen-isosceles", "--u", "2", "--v", "1", "--variant", "2"])
    assert code == 1
    _, out, _ = call(["gen-isosceles", "--u-max", "4"])
    assert len(records(out)) >= 4


def test_point_search():
    code, out, _ = call(["point-search", "--k", "2", "--height", "16"])
    pts = {(r["X"], r["Y"]) for r in records(out)}
    assert code == 0 and {("16", "136"), ("16", "-136"), ("0", "0")} <= pts


def test_enumerate_deterministic_and_worker_invariant():
    a = call(["enumerate", "--max-side", "500"])[1]
    b = call(["enumerate", "--max-side", "500"])[1]
    c = call(["enumerate", "--max-side", "500", "--workers", "4"])[1]
    assert a == b == c
    assert {"a": 16, "b": 25, "c": 39, "area": 120, "primitive": True, "square_sides": [0, 1]} in records(a)


def test_tsv_matches_json():
    js = records(call(["enumerate", "--max-side", "300"])[1])
    lines = call(["enumerate", "--max-side", "300", "--tsv"])[1].splitlines()
    header = lines[0].split("\t")
    assert header == ["a", "b", "c", "area", "primitive", "square_sides"]
    rows = [dict(zip(header, line.split("\t"))) for line in lines[1:]]
    assert len(rows) == len(js)
    for row, rec in zip(rows, js):
        assert int(row["a"]) == rec["a"] and int(row["area"]) == rec["area"]
        assert row["square_sides"] == ",".join(map(str, rec["square_sides"]))


def test_every_subcommand_has_tsv():
    for argv in (["verify-triangle", "3", "4", "5"], ["verify-corpus", "--item", "ex2.4"],
                 ["gen-family", "--k", "2"], ["gen-isosceles", "--k", "2"],
                 ["map-point", "--k", "2", "--x", "16", "--y", "136"],
                 ["point-search", "--k", "2", "--height", "20"],
                 ["enumerate", "--max-side", "100"],
                 ["symmetry", "--k", "2", "--r", "0", "--q", "1"]):
        code, out, _ = call(argv + ["--tsv"])
        assert code == 0 and "\t" in out.splitlines()[0]


def test_resume_checkpoint(tmp_path):
    ck = tmp_path / "ck.txt"
    full = records(call(["enumerate", "--max-side", "400", "--resume", str(ck)])[1])
    done = ck.read_text().splitlines()
    assert done[0] == "1 1" and len(done) == 20
    # Drop the last two partitions and resume: only they are recomputed.
    ck.write_text("\n".join(done[:-2]) + "\n")
    tail = records(call(["enumerate", "--max-side", "400", "--resume", str(ck)])[1])
    assert tail and all(r["a"] >= 19**2 for r in tail)
    assert {json.dumps(r) for r in tail} <= {json.dumps(r) for r in full}
    assert len(ck.read_text().splitlines()) == 20


def test_workers_env_default(monkeypatch):
    monkeypatch.setenv("HERON_WORKERS", "3")
    from squareheron.cli import build_parser
    args = build_parser().parse_args(["enumerate", "--max-side", "100"])
    assert args.workers == 3
