import subprocess
import sys

import pytest

from gammafuzz.cli import main
from gammafuzz.formats import format_gsg, format_ifs, load_ifs, parse_set
from gammafuzz.harness import catalog_ifs, catalog_instance
from gammafuzz.ifs import characteristic_pair


@pytest.fixture
def files(tmp_path):
    out = {}
    for name in ("z4-full", "z4-g02", "capped-int", "left-zero-2"):
        p = tmp_path / f"{name}.gsg"
        p.write_text(format_gsg(catalog_instance(name)))
        out[name] = p
    a = tmp_path / "A.ifs"
    a.write_text(format_ifs(catalog_ifs("capped-int-A")))
    out["A"] = a
    chi1 = tmp_path / "chi1.ifs"
    chi1.write_text(format_ifs(characteristic_pair(catalog_instance("z4-full"), {"1"})))
    out["chi1"] = chi1
    out["dir"] = tmp_path
    return out


def run(capsys, *argv):
    code = main([str(a) for a in argv])
    captured = capsys.readouterr()
    return code, captured.out, captured.err


class TestValidate:
    def test_valid(self, capsys, files):
        code, out, _ = run(capsys, "validate", files["z4-g02"])
        assert code == 0
        assert out.startswith("valid") and "commutative" in out and "non-regular (witness c=1)" in out

    def test_machine(self, capsys, files):
        code, out, _ = run(capsys, "validate", "--machine", files["left-zero-2"])
        assert code == 0 and "commutative=no" in out and "zero=-" in out

    def test_mutated(self, capsys, files, tmp_path):
        bad = tmp_path / "bad.gsg"
        bad.write_text(files["z4-full"].read_text().replace("1 1 1 = 1", "1 1 1 = 2", 1))
        code, out, _ = run(capsys, "validate", bad)
        assert code == 1 and "associative law" in out

    def test_missing_section(self, capsys, files, tmp_path):
        bad = tmp_path / "bad.gsg"
        bad.write_text(files["z4-full"].read_text().split("[gsg]")[0])
        code, _, err = run(capsys, "validate", bad)
        assert code == 2 and "missing section [gsg]" in err

    def test_missing_file(self, capsys, tmp_path):
        assert run(capsys, "validate", tmp_path / "nope.gsg")[0] == 2


class TestCheck:
    def test_prime_pass(self, capsys, files):
        code, out, _ = run(capsys, "check", "prime", files["z4-full"], "--set", "0,2")
        assert code == 0 and "is prime" in out

    def test_prime_fail(self, capsys, files):
        code, out, _ = run(capsys, "check", "prime", files["z4-full"], "--set", "0", "--criterion", "sandwich")
        assert code == 1 and "witness 2 2" in out

    def test_degenerate(self, capsys, files):
        code, out, _ = run(capsys, "check", "semiprime", files["z4-full"], "--set", "0 1 2 3")
        assert code == 0 and "degenerate" in out

    def test_not_an_ideal(self, capsys, files):
        assert run(capsys, "check", "prime", files["z4-full"], "--set", "1")[0] == 1
        assert run(capsys, "check", "ideal", files["z4-full"], "--set", "1")[0] == 1
        assert run(capsys, "check", "ideal", files["left-zero-2"], "--set", "a", "--side", "right")[0] == 0

    def test_empty_set(self, capsys, files):
        code, _, err = run(capsys, "check", "ideal", files["z4-full"], "--set", "")
        assert code == 2 and "empty" in err

    def test_unknown_element(self, capsys, files):
        assert run(capsys, "check", "ideal", files["z4-full"], "--set", "7")[0] == 2

    def test_ifs_witness(self, capsys, files):
        code, out, _ = run(capsys, "check", "ifi", files["z4-full"], files["chi1"])
        assert code == 1 and "fails (mu-left) at 0 0 1" in out
        code, out, _ = run(capsys, "check", "ifli", files["z4-full"], files["chi1"], "--machine")
        assert code == 1 and "witness=0,0,1" in out

    def test_ifs_from_set(self, capsys, files):
        assert run(capsys, "check", "ifpi", files["z4-full"], "--set", "0,2")[0] == 0
        assert run(capsys, "check", "ifspi", files["z4-full"], "--set", "0")[0] == 1

    def test_needs_target(self, capsys, files):
        assert run(capsys, "check", "ifi", files["z4-full"])[0] == 2
        assert run(capsys, "check", "prime", files["z4-full"])[0] == 2

    def test_bad_subcommand(self, capsys):
        with pytest.raises(SystemExit) as info:
            main(["frobnicate"])
        assert info.value.code == 2


class TestConstructions:
    def test_compose_round_trip(self, capsys, files):
        out_path = files["dir"] / "C.ifs"
        code, out, _ = run(capsys, "compose", files["capped-int"], files["A"], files["A"], "--out", out_path, "--explain")
        assert code == 0 and "no factorization" in out
        G = catalog_instance("capped-int")
        C = load_ifs(out_path, G)
        assert C["-1"] == (0, 1)
        code, again, _ = run(capsys, "compose", files["capped-int"], files["A"], files["A"])
        assert again == out_path.read_text()

    def test_extend_by_zero(self, capsys, files):
        out_path = files["dir"] / "E.ifs"
        assert run(capsys, "extend", files["capped-int"], files["A"], "--by", "0", "--out", out_path)[0] == 0
        E = load_ifs(out_path)
        assert set(E.mu) == {1} and set(E.nu) == {0}

    def test_cut(self, capsys, files):
        code, out, _ = run(capsys, "cut", files["A"], "--t", "1")
        assert code == 0 and parse_set(out) == {"0"}
        code, out, _ = run(capsys, "cut", files["A"], "--t", "3/5", "--kind", "lower", "--machine")
        assert out.strip() == "kind=lower t=3/5 members=0,-1,-2"
        assert run(capsys, "cut", files["A"], "--t", "0.5.1")[0] == 2

    def test_enumerate(self, capsys, files):
        code, out, _ = run(capsys, "enumerate-ideals", files["z4-full"])
        assert out.splitlines() == ["{0}", "{0, 2}", "{0, 1, 2, 3}"]
        code, out, _ = run(capsys, "enumerate-ideals", files["left-zero-2"], "--side", "left", "--machine")
        assert out.strip() == "side=left members=a,b"


class TestVerifyAndGen:
    def test_verify_prefix(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "--cases", "thm-3.20", "--budget", "50", "--seed", "7", "--out", tmp_path)
        assert code == 0 and "pass: 2" in out
        assert (tmp_path / "report.txt").read_text().count("status=pass") == 2

    def test_budget_zero(self, capsys, tmp_path):
        code, out, _ = run(capsys, "verify", "--budget", "0", "--out", tmp_path, "--machine")
        records = [line for line in out.splitlines() if line.startswith("case=")]
        assert code == 0 and records
        assert all("verdict=hypothesis-never-met" in line for line in records)

    def test_unknown_case(self, capsys, tmp_path):
        assert run(capsys, "verify", "--cases", "thm-9.9", "--out", tmp_path)[0] == 2

    def test_results_dir_from_environment(self, capsys, tmp_path, monkeypatch):
        monkeypatch.setenv("GFZ_RESULTS_DIR", str(tmp_path / "env"))
        assert run(capsys, "verify", "--cases", "lem-3.7", "--budget", "3")[0] == 0
        assert (tmp_path / "env" / "report.txt").is_file()

    def test_gen(self, capsys, tmp_path):
        assert run(capsys, "gen", "catalog", "--out", tmp_path / "cat", "--names", "z5-full")[0] == 0
        assert run(capsys, "validate", tmp_path / "cat" / "z5-full.gsg")[0] == 0
        assert run(capsys, "gen", "modular", "--n", "4", "--gamma", "2", "--out", tmp_path / "m.gsg")[0] == 2
        assert run(capsys, "gen", "modular", "--n", "4", "--gamma", "2", "--close", "--out", tmp_path / "m.gsg")[0] == 0
        code, out, _ = run(capsys, "gen", "random", "--family", "table-mutation", "--count", "3", "--out", tmp_path / "r")
        assert code == 0 and len(out.splitlines()) == 3
        for path in out.splitlines():
            assert run(capsys, "validate", path)[0] == 0


def test_console_script_entry_point(files):
    proc = subprocess.run(
        [sys.executable, "-m", "gammafuzz.cli", "check", "ideal", str(files["z4-full"]), "--set", ""],
        capture_output=True, text=True,
    )
    assert proc.returncode == 2
