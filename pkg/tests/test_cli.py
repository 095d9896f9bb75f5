import json

from cphi.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_expand_cphi_level1(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--series", "cphi", "--N", "1", "--nmax", "10"
    )
    assert code == 0
    values = [line.split(": ")[1] for line in out.strip().split("\n")]
    assert values == ["1", "1", "2", "3", "5", "7", "11", "15", "22", "30", "42"]


def test_expand_json_schema(capsys):
    code, out, _ = run_cli(
        capsys,
        "expand", "--series", "theta", "--N", "5", "--nmax", "4",
        "--format", "json",
    )
    assert code == 0
    payload = json.loads(out)
    assert set(payload) == {"valuation", "trunc", "coeffs"}
    assert payload["trunc"] == 4
    assert payload["coeffs"][1] == ["20", "1"]


def test_expand_eta_requires_d(capsys):
    code, _, err = run_cli(capsys, "expand", "--series", "eta", "--N", "5")
    assert code == 2
    assert "--d" in err


def test_expand_vr(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--series", "vr", "--r", "2", "--nmax", "4",
        "--format", "csv",
    )
    assert code == 0
    assert out.strip().split("\n") == [
        "n,coefficient", "0,1", "1,2", "2,5", "3,10", "4,20"
    ]


def test_expand_partition_series(capsys):
    code, out, _ = run_cli(
        capsys, "expand", "--series", "partition", "--N", "5", "--nmax", "3",
        "--format", "csv",
    )
    assert code == 0
    # main-identity partition side for N=5: cphi itself (zero residual)
    assert out.strip().split("\n")[1:] == ["0,1", "1,25", "2,150", "3,675"]


def test_invalid_level_messages(capsys):
    code, _, err = run_cli(capsys, "verify", "--N", "15", "--nmax", "10")
    assert code == 2
    assert "coprime to 6" in err
    code, _, err = run_cli(capsys, "verify", "--N", "25", "--nmax", "10")
    assert code == 2
    assert "squarefree" in err


def test_verify_pass_and_exit_codes(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--N", "5", "--nmax", "60", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert all(entry["pass"] for entry in payload["checks"])


def test_verify_n13_reports_b1(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--N", "13", "--nmax", "30", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["b"][1] == "26"


def test_gauss_agreement(capsys):
    code, out, _ = run_cli(
        capsys, "gauss", "--dim", "4", "--a", "1", "--c", "5", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["agree"] is True
    assert payload["level-closed-form"] == "-25*sqrt(5)"


def test_gauss_guard_falls_back_to_closed_form(capsys):
    code, out, _ = run_cli(
        capsys, "gauss", "--dim", "12", "--a", "1", "--c", "13", "--format", "json"
    )
    assert code == 0
    payload = json.loads(out)
    assert payload["oracle"] is None
    assert "level-closed-form" in payload


def test_gauss_rejects_noncoprime(capsys):
    code, _, err = run_cli(capsys, "gauss", "--dim", "2", "--a", "5", "--c", "10")
    assert code == 2
    assert "gcd" in err


def test_bernoulli(capsys):
    code, out, _ = run_cli(capsys, "bernoulli", "--k", "2", "--N", "5")
    assert code == 0
    assert out.strip() == "4/5"


def test_ratios(capsys):
    code, out, _ = run_cli(
        capsys, "ratios", "--N", "13", "--nmax", "5", "--format", "csv"
    )
    assert code == 0
    lines = out.strip().split("\n")
    assert lines[0] == "n,ratio"
    assert lines[1] == "1,1.181818181818"


def test_table_b1(capsys):
    code, out, _ = run_cli(capsys, "table", "--which", "b1", "--format", "json")
    assert code == 0
    rows = json.loads(out)
    assert [(r["N"], r["b1"]) for r in rows] == [
        (13, "26"), (17, "170"), (19, "266"), (23, "506")
    ]
    assert all(r["match"] for r in rows)


def test_table_kolitsch(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--which", "kolitsch", "--nmax", "60", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert [r["N"] for r in rows] == [5, 7, 11]
    assert all(r["residual_zero"] for r in rows)


def test_table_cusp_constants(capsys):
    code, out, _ = run_cli(
        capsys, "table", "--which", "cusp-constants", "--N", "5", "--format", "json"
    )
    assert code == 0
    rows = json.loads(out)
    assert rows == [
        {"d": 1, "theta": "-1/5*sqrt(5)", "eta": "-1/125*sqrt(5)"},
        {"d": 5, "theta": "1", "eta": "1"},
    ]


def test_threads_env_validation(capsys, monkeypatch):
    monkeypatch.setenv("QSERIES_THREADS", "abc")
    code, _, err = run_cli(capsys, "bernoulli", "--k", "0", "--N", "1")
    assert code == 2
    assert "QSERIES_THREADS" in err
    monkeypatch.setenv("QSERIES_THREADS", "4")
    code, out, _ = run_cli(capsys, "bernoulli", "--k", "0", "--N", "1")
    assert code == 0


def test_byte_identical_output(capsys):
    first = run_cli(capsys, "verify", "--N", "7", "--nmax", "40", "--format", "json")
    second = run_cli(capsys, "verify", "--N", "7", "--nmax", "40", "--format", "json")
    assert first == second
    third = run_cli(capsys, "ratios", "--N", "13", "--nmax", "20", "--format", "csv")
    fourth = run_cli(capsys, "ratios", "--N", "13", "--nmax", "20", "--format", "csv")
    assert third == fourth
