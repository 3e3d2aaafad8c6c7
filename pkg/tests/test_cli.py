import subprocess
import sys

import pytest

from crossfam.cli import REPORT_HEADER, main
from crossfam.familyfile import parse_family
from crossfam.families import frankl_family
from crossfam.measure import mu_weight
from crossfam.shifting import is_cross_t_intersecting, is_shifted
from fractions import Fraction


def run_ok(argv, capsys):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def run_err(argv, capsys):
    with pytest.raises(SystemExit) as ei:
        main(argv)
    out = capsys.readouterr()
    return ei.value.code, out.out, out.err


@pytest.fixture
def star_file(tmp_path):
    # sets containing {1,2} inside [3]
    p = tmp_path / "star.fam"
    p.write_text("n 3\n1,2\n1,2,3\n")
    return str(p)


def test_weight_examples(star_file, capsys, tmp_path):
    code, out, _ = run_ok(["weight", star_file, "--p", "1/3"], capsys)
    assert (code, out) == (0, "1/9\n")
    full = tmp_path / "full.fam"
    full.write_text("n 2\n-\n1\n2\n1,2\n")
    code, out, _ = run_ok(["weight", str(full), "--p", "1/3"], capsys)
    assert (code, out) == (0, "1\n")


def test_weight_bad_inputs(star_file, capsys, tmp_path):
    code, _, err = run_err(["weight", star_file, "--p", "5/3"], capsys)
    assert code == 3 and "bias" in err
    dup = tmp_path / "dup.fam"
    dup.write_text("n 3\n1,2\n1,2\n")
    code, _, err = run_err(["weight", str(dup), "--p", "1/3"], capsys)
    assert code == 2 and "duplicate" in err
    code, _, _ = run_err(["weight", str(tmp_path / "nope.fam"), "--p", "1/3"], capsys)
    assert code == 2


def test_lambda_and_classify(star_file, capsys, tmp_path):
    mixed = tmp_path / "mixed.fam"
    mixed.write_text("n 3\n1,2\n1,3\n2,3\n1,2,3\n")
    code, out, _ = run_ok(["lambda", str(mixed)], capsys)
    assert (code, out) == (0, "1\n")
    code, out, _ = run_ok(["classify", str(mixed), "--line", "1"], capsys)
    assert code == 0
    assert out == "1,2 TILDE\n1,2,3 TILDE\n1,3 DOUBLEHAT\n2,3 HAT\n"
    code, _, _ = run_err(["classify", str(mixed), "--line", "0"], capsys)
    assert code == 3
    empty = tmp_path / "empty.fam"
    empty.write_text("n 3\n")
    code, _, _ = run_err(["lambda", str(empty)], capsys)
    assert code == 2


def test_walkcount(capsys):
    code, out, _ = run_ok(["walkcount", "--x0", "2", "--y0", "3", "--c", "2"], capsys)
    assert (code, out) == (0, "5\n")
    code, _, _ = run_err(["walkcount", "--x0", "3", "--y0", "3", "--c", "0"], capsys)
    assert code == 3


def test_shift_single(capsys, tmp_path):
    f = tmp_path / "a.fam"
    f.write_text("n 3\n2\n2,3\n")
    code, out, _ = run_ok(["shift", str(f), "--i", "1", "--j", "2"], capsys)
    assert (code, out) == (0, "n 3\n1\n1,3\n")
    code, _, _ = run_err(["shift", str(f)], capsys)
    assert code == 2
    code, _, _ = run_err(["shift", str(f), "--i", "1", "--j", "1"], capsys)
    assert code == 3


def test_shift_pair_fixpoint(capsys, tmp_path):
    a = tmp_path / "a.fam"
    b = tmp_path / "b.fam"
    high_star = "n 4\n3,4\n1,3,4\n2,3,4\n1,2,3,4\n"
    a.write_text(high_star)
    b.write_text(high_star)
    code, out, _ = run_ok(
        ["shift", str(a), str(b), "--out-dir", str(tmp_path)], capsys
    )
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 2
    fam_a = parse_family((tmp_path / "shifted_A.fam").read_text())
    fam_b = parse_family((tmp_path / "shifted_B.fam").read_text())
    assert is_shifted(fam_a) and is_shifted(fam_b)
    assert is_cross_t_intersecting(fam_a, fam_b, 2)
    assert fam_a == fam_b == parse_family("n 4\n1,2\n1,2,3\n1,2,4\n1,2,3,4\n")
    p = Fraction(1, 3)
    assert mu_weight(fam_a, p) == mu_weight(parse_family(high_star), p)
    code, _, _ = run_err(
        ["shift", str(a), str(b), "--out-dir", str(tmp_path), "--i", "1"], capsys
    )
    assert code == 2


def test_partner(star_file, capsys, tmp_path):
    code, out, _ = run_ok(["partner", star_file, "--t", "2"], capsys)
    assert (code, out) == (0, "n 3\n1,2\n1,2,3\n")
    empty = tmp_path / "empty.fam"
    empty.write_text("n 3\n")
    code, _, _ = run_err(["partner", str(empty), "--t", "2"], capsys)
    assert code == 2


def test_search_small(capsys, tmp_path):
    code, out, _ = run_ok(
        ["search", "--n", "2", "--t", "1", "--p", "1/2", "--out-dir", str(tmp_path)],
        capsys,
    )
    assert (code, out) == (0, "1/4\n")
    fam_a = parse_family((tmp_path / "witness_A.fam").read_text())
    fam_b = parse_family((tmp_path / "witness_B.fam").read_text())
    assert is_cross_t_intersecting(fam_a, fam_b, 1)
    p = Fraction(1, 2)
    assert mu_weight(fam_a, p) * mu_weight(fam_b, p) == Fraction(1, 4)


def test_search_cap_and_flags(capsys, tmp_path):
    code, _, err = run_err(
        ["search", "--n", "7", "--t", "1", "--p", "1/2", "--out-dir", str(tmp_path)],
        capsys,
    )
    assert code == 4 and "unsafe-n" in err
    code, out, _ = run_ok(
        ["search", "--n", "3", "--t", "2", "--p", "2/5",
         "--out-dir", str(tmp_path), "--unsafe-n"],
        capsys,
    )
    assert (code, out) == (0, "16/625\n")
    code, _, _ = run_err(
        ["search", "--n", "3", "--t", "0", "--p", "1/2", "--out-dir", str(tmp_path)],
        capsys,
    )
    assert code == 3


def test_certify_single_claim(capsys):
    code, out, _ = run_ok(["certify", "--claim", "G31", "--t", "10"], capsys)
    assert code == 1
    lines = out.strip().splitlines()
    assert lines[0] == REPORT_HEADER
    assert len(lines) == 4
    assert all("verdict=fail" in ln for ln in lines[1:3])
    assert lines[3] == "# total=2 pass=0 fail=2"
    code, out, _ = run_ok(["certify", "--claim", "LS-HU", "--t", "200"], capsys)
    assert code == 0
    assert "verdict=pass" in out and "fail=0" in out


def test_certify_t_list(capsys):
    code, out, _ = run_ok(["certify", "--claim", "UV-ODD", "--t", "26,126"], capsys)
    assert code == 1
    body = out.strip().splitlines()[1:-1]
    assert [ln.split()[1] for ln in body] == ["t=26", "t=126"]
    assert "verdict=fail" in body[0] and "verdict=pass" in body[1]


def test_certify_all_deterministic(capsys):
    code1, out1, _ = run_ok(["certify", "--all"], capsys)
    code2, out2, _ = run_ok(["certify", "--all"], capsys)
    assert code1 == code2 == 1
    assert out1 == out2
    assert out1.strip().splitlines()[-1] == "# total=394 pass=375 fail=19"


def test_certify_timings_keep_stdout_stable(capsys):
    _, plain, _ = run_ok(["certify", "--claim", "G33", "--t", "52"], capsys)
    _, timed, err = run_ok(["certify", "--claim", "G33", "--t", "52", "--timings"], capsys)
    assert timed == plain
    assert err.strip()


def test_certify_errors(capsys):
    code, _, err = run_err(["certify", "--claim", "NOPE"], capsys)
    assert code == 5 and "unknown claim" in err
    code, _, _ = run_err(["certify", "--all", "--p-policy", "median"], capsys)
    assert code == 3
    code, _, _ = run_err(["certify", "--claim", "G33", "--t", "abc"], capsys)
    assert code == 2
    with pytest.raises(SystemExit) as ei:
        main(["certify", "--claim", "G33", "--all"])
    assert ei.value.code == 2
    capsys.readouterr()


def test_console_script(tmp_path):
    f = tmp_path / "star.fam"
    f.write_text("n 3\n1,2\n1,2,3\n")
    proc = subprocess.run(
        [sys.executable, "-m", "crossfam.cli", "weight", str(f), "--p", "1/3"],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert proc.stdout == "1/9\n"
