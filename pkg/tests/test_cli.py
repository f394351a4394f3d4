import json

import pytest

from pseudoalg.cli import main

VIRASORO = "algebra virasoro\nrank 1\nbracket e0 e0 : e0 <- s|1 - 1|s\n"
TYPE14 = (
    "algebra leibniz14\nrank 2\n"
    "bracket e0 e0 : e0 <- s|1 - 1|s\n"
    "bracket e0 e1 : e1 <- 2 s|1 - 1|s + 3 1|1\n"
)
BROKEN = (
    "algebra broken\nrank 2\n"
    "bracket e0 e0 : e0 <- s|1 - 1|s\n"
    "bracket e0 e0 : e1 <- s(3)|s(4) - s(4)|s(3)\n"
    "bracket e0 e1 : e1 <- -4 s|1 - 1|s\n"
    "bracket e1 e0 : e1 <- 4 1|s + s|1\n"
)


@pytest.fixture
def write(tmp_path):
    def _write(name, text):
        p = tmp_path / name
        p.write_text(text)
        return str(p)

    return _write


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def test_check_virasoro(capsys, write):
    code, out = run(capsys, "check", write("v.pa", VIRASORO), "--lie")
    assert code == 0
    assert "lie" in out


def test_check_modes(capsys, write):
    path = write("t14.pa", TYPE14)
    assert run(capsys, "check", path)[0] == 0
    assert run(capsys, "check", path, "--lie")[0] == 1
    code, out = run(capsys, "check", path, "--lie", "--json")
    data = json.loads(out)
    assert code == 1 and data["classification"] == "leibniz-not-lie"


def test_check_jacobi_failure(capsys, write):
    code, out = run(capsys, "check", write("b.pa", BROKEN), "--json")
    assert code == 1
    assert json.loads(out)["jacobi_pass"] is False


def test_parse_error_exit(capsys, write):
    assert main(["check", write("bad.pa", "algebra x\nrank 1\nbracket e0 e0 : e0 <- s(-1)|1\n")]) == 2
    assert main(["check", "/nonexistent/file.pa"]) == 2


def test_usage_errors():
    assert main(["--no-such-flag"]) == 2
    assert main(["catalog", "build", "thm27-99"]) == 2
    assert main(["catalog", "build", "thm27-8", "-p", "lambda=-5"]) == 2
    assert main(["annihilate", "--family", "mtype-B", "--window", "3..1"]) == 2


def test_help_exits_zero(capsys):
    assert main(["--help"]) == 0


def test_cohomology_command(capsys):
    code, out = run(capsys, "cohomology", "--variant", "lie", "--lambda", "-7", "--kappa", "0")
    assert code == 0
    assert "1" in out and "s(3)|s(6)" in out


def test_annihilate_sv(capsys):
    code, _ = run(
        capsys, "annihilate", "--family", "mtype-B", "-p", "lambda1=1/2", "-p", "kappa1=0",
        "-p", "w01=1", "-p", "a=0", "--rho", "1/2", "--window", "-6..6", "--verify-jacobi",
    )
    assert code == 0


def test_annihilate_compare_reports_mismatch(capsys):
    code, out = run(
        capsys, "annihilate", "--family", "mtype-B", "-p", "lambda1=1/2", "-p", "kappa1=0",
        "-p", "w01=1", "-p", "a=0", "--rho", "1/2", "--window", "-2..2", "--compare", "--json",
    )
    assert code == 1
    assert json.loads(out)["compare"]["ok"] is False


def test_catalog_commands(capsys, tmp_path):
    code, out = run(capsys, "catalog", "list", "--json")
    assert code == 0 and len(json.loads(out)["families"]) >= 70
    target = tmp_path / "tsv.pa"
    assert main(["catalog", "build", "tsv", "-p", "c=2", "-o", str(target)]) == 0
    assert main(["check", str(target), "--lie"]) == 0
    docs = tmp_path / "families.md"
    assert main(["catalog", "docs", "-o", str(docs)]) == 0
    assert "| `tsv` |" in docs.read_text()


def test_lambda_and_derived(capsys, write):
    path = write("v.pa", VIRASORO)
    code, out = run(capsys, "lambda", path, "--ascii")
    assert code == 0 and "[e0 _lam e0] = (2lam - d) e0" in out
    code, out = run(capsys, "derived", path, "--json")
    assert code == 0
    assert [row["rank"] for row in json.loads(out)["series"]] == [1] * 6


def test_enumerate_mtype_command(capsys):
    code, out = run(capsys, "enumerate-mtype", "--m-max", "3", "--lambda-grid", "2/3,1/3", "--json")
    assert code == 0
    rows = json.loads(out)["rows"]
    assert any(r["m"] == 3 and r["solvable"] for r in rows)
