import json

import pytest

from klarner import cache
from klarner.cli import run


@pytest.fixture(autouse=True)
def isolated_cache(tmp_path, monkeypatch):
    monkeypatch.setenv(cache.ENV_VAR, str(tmp_path / "cache"))


def test_unknown_subcommand(capsys):
    assert run(["frobnicate"]) == 2
    assert "usage" in capsys.readouterr().err


def test_unknown_flag(capsys):
    assert run(["rec", "--bogus"]) == 2


def test_out_of_range_is_usage_error(capsys):
    assert run(["count", "--max-n", "0"]) == 2
    assert run(["count", "--max-n", "11", "--algo", "naive_oracle"]) == 2
    assert run(["verify", "--workers", "0"]) == 2


def test_rec_csv(capsys):
    assert run(["rec", "--max-n", "5", "--format", "csv"]) == 0
    lines = capsys.readouterr().out.splitlines()
    assert lines[0] == "n,value"
    assert lines[-1] == "5,72"


def test_rec_F(capsys):
    assert run(["rec", "--max-n", "3", "--label", "F", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["values"] == {"0": 1, "1": 1, "2": 3, "3": 10}


def test_count_uses_cache(tmp_path, capsys):
    d = tmp_path / "c2"
    assert run(["count", "--max-n", "6", "--cache-dir", str(d), "--format", "csv"]) == 0
    first = capsys.readouterr().out
    assert (d / "A-fixed.tsv").exists()
    assert run(["count", "--max-n", "4", "--cache-dir", str(d), "--format", "csv"]) == 0
    assert first.startswith(capsys.readouterr().out)
    assert first.splitlines()[-1] == "6,216"


def test_count_naive(capsys):
    assert run(["count", "--max-n", "5", "--algo", "naive_oracle"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "A(5) = 63"


@pytest.mark.parametrize("variant, last", [("A", "4,35"), ("B-left", "4,20"), ("B-right", "4,20")])
def test_pairs(variant, last, capsys):
    assert run(["pairs", "--max-n", "4", "--variant", variant, "--format", "csv", "--no-cache"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == last


def test_series(capsys):
    assert run(["series", "--order", "6", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert list(payload["coefficients"].values()) == [1, 1, 2, 6, 20, 72]
    assert payload["functional_equation_residual_is_zero"] is True


def test_motzkin(capsys):
    assert run(["motzkin", "--max-len", "4", "--algo", "bruteforce", "--format", "csv"]) == 0
    assert capsys.readouterr().out.splitlines()[1:] == ["0,1", "1,2", "2,6", "3,20", "4,72"]
    assert run(["motzkin", "--max-len", "17", "--algo", "bruteforce"]) == 2


def test_report(capsys):
    assert run(["report", "--max-n", "8", "--ratio-n", "300", "--format", "json"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["lambda_lower"] > 3.76049
    assert payload["lambda_lower"] <= payload["growth_constant"]
    assert set(payload["ratio_at"]) >= {"2", "300"}


def test_verify_small_writes_out_file(tmp_path, capsys):
    out = tmp_path / "verify.json"
    code = run(
        ["verify", "--max-n", "6", "--order", "40", "--max-len", "40", "--ratio-n", "300", "--format", "json", "--out", str(out)]
    )
    payload = json.loads(out.read_text())
    # ratio at 300 is still ~0.02 from the limit, so exactly that check fails
    failed = [c["name"] for c in payload["checks"] if not c["pass"]]
    assert failed == ["recurrences.ratio_near_growth"]
    assert code == 1
    assert payload["overall"] is False
    assert payload["provenance"]["A(70)"] == "18500792645885711270652890811942343400814"


def test_verify_text_and_csv(capsys):
    args = ["verify", "--max-n", "5", "--order", "30", "--max-len", "30", "--ratio-n", "2000"]
    assert run(args + ["--format", "text"]) == 0
    text = capsys.readouterr().out
    assert text.splitlines()[-1].startswith("PASS overall")
    assert run(args + ["--format", "csv"]) == 0
    assert capsys.readouterr().out.startswith("name,inputs,actual,relation,expected,tolerance,pass\n")
