import json
import subprocess
import sys

import pytest

from nilhodge.algebra import RationalPoly
from nilhodge.cli import main, poly_from_record
from nilhodge.goldens import golden, golden_poincare
from nilhodge.invariants import InvariantRequest, assemble
from nilhodge.weyl import parse_group


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_compute_sl2_xw(capsys):
    code, out, _ = run(capsys, "compute", "--group", "SL:2", "--r", "3", "--kind", "mu_rep", "--vars", "xw")
    assert code == 0
    expect = RationalPoly.parse("1/2*((1+w)*(1+x)^3+(1-w)*(1-x)^3)", ("x", "w"))
    assert out.strip() == str(expect) == "1 + 3*x^2 + 3*x*w + x^3*w"


def test_compute_euler(capsys):
    assert run(capsys, "compute", "--group", "Sp:4", "--r", "1", "--kind", "euler_char")[1] == "0\n"


def test_compute_exotic(capsys):
    code, out, _ = run(capsys, "compute", "--exotic", "p=2,m=1", "--r", "2", "--kind", "mu_char")
    assert code == 0 and out.strip() == "2 + t^2*u^2*v^2"


def test_compute_latex(capsys):
    _, out, _ = run(capsys, "compute", "--group", "SL:2", "--r", "2", "--kind", "mu_char", "--vars", "xw", "--format", "latex")
    assert out.strip() == "1 + x^{2}"


@pytest.mark.parametrize(
    "argv,token",
    [
        (["--group", "Foo:3", "--r", "1"], "Foo"),
        (["--group", "SL:3", "--r", "0"], "0"),
        (["--group", "Sp:3", "--r", "1"], "Sp:3"),
        (["--group", "SL:3x", "--r", "1"], "SL:3x"),
        (["--exotic", "p=4,m=1", "--r", "2"], "p=4"),
    ],
)
def test_compute_errors_name_token(capsys, argv, token):
    code, out, err = run(capsys, "compute", *argv)
    assert code != 0 and out == ""
    assert token in err


def test_unknown_kind_rejected():
    with pytest.raises(SystemExit) as exc:
        main(["compute", "--group", "SL:2", "--r", "1", "--kind", "betti"])
    assert exc.value.code != 0


def test_verify_suites(capsys):
    code, out, _ = run(capsys, "verify", "--suite", "weyl", "--max-n", "4")
    assert code == 0 and out.startswith("PASS weyl")
    code, out, _ = run(capsys, "verify", "--suite", "recursion", "--max-n", "6", "--max-r", "3")
    assert code == 0 and out.startswith("PASS recursion")
    code, out, _ = run(capsys, "verify", "--suite", "paper-golden")
    assert code == 0 and "PASS paper-golden" in out


def test_verify_all(capsys):
    code, out, _ = run(capsys, "verify")
    assert code == 0
    assert len(out.splitlines()) == 9 and all(line.startswith("PASS") for line in out.splitlines())


def test_table_text(tmp_path, capsys):
    path = tmp_path / "t.txt"
    assert main(["table", "--groups", "SL:2..4", "--r", "1..3", "--kind", "mu_char", "--out", str(path)]) == 0
    lines = path.read_text().splitlines()
    assert len(lines) == 1 + 9
    assert lines[1].split("\t")[:3] == ["SL", "2", "1"]


def test_table_is_deterministic(tmp_path):
    args = ["table", "--groups", "SL:2..3,Sp:4,GL:2xGL:1", "--r", "1..2", "--kind", "mu_rep", "--format", "jsonl"]
    a, b = tmp_path / "a", tmp_path / "b"
    main(args + ["--out", str(a)])
    main(args + ["--out", str(b)])
    assert a.read_bytes() == b.read_bytes()


def test_table_empty_grid(tmp_path):
    path = tmp_path / "empty.jsonl"
    assert main(["table", "--groups", "", "--format", "jsonl", "--out", str(path)]) == 0
    assert len(path.read_text().splitlines()) == 1


def test_table_unwritable(capsys, tmp_path):
    code, _, err = run(capsys, "table", "--groups", "SL:2", "--out", str(tmp_path / "no" / "such" / "f"))
    assert code != 0 and "error" in err


@pytest.mark.parametrize("kind", ["mu_rep", "mu_char", "counting_poly", "total_dim"])
def test_jsonl_round_trip(tmp_path, kind):
    path = tmp_path / "grid.jsonl"
    main(["table", "--groups", "SL:2..3,Sp:4", "--r", "1..3", "--kind", kind, "--format", "jsonl", "--out", str(path)])
    header, *records = [json.loads(line) for line in path.read_text().splitlines()]
    assert header["kind"] == kind and len(records) == 9
    for rec in records:
        assert set(rec) == {"family", "n", "r", "kind", "vars", "poly"}
        poly = poly_from_record(rec)
        direct = assemble(InvariantRequest(parse_group(f"{rec['family']}:{rec['n']}"), rec["r"], kind))
        if isinstance(direct, int):
            assert poly(**{}) == direct
            continue
        point = {v: k + 2 for k, v in enumerate(poly.vars)}
        assert poly(**point) == direct(**point)


@pytest.mark.parametrize("group", ["SL:2", "SL:3", "SL:4", "Sp:4"])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_poincare_goldens(capsys, group, r):
    _, out, _ = run(capsys, "compute", "--group", group, "--r", str(r), "--kind", "poincare")
    assert out.strip() == str(golden_poincare(group, r))


@pytest.mark.parametrize("group", ["SL:2", "SL:3", "Sp:4"])
def test_xw_goldens_json(capsys, group):
    _, out, _ = run(capsys, "compute", "--group", group, "--r", "2", "--vars", "xw", "--format", "json")
    assert poly_from_record(json.loads(out)) == golden(group, 2)


def test_module_entry_point():
    out = subprocess.run(
        [sys.executable, "-m", "nilhodge", "compute", "--group", "GL:1", "--r", "2", "--vars", "xw"],
        capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "1 + 2*x + x^2"
