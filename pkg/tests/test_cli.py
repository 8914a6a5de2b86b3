import json

from click.testing import CliRunner

from kreckstolz.cli import main


def _run(*args):
    return CliRunner().invoke(main, list(args))


def test_compute_json_record():
    result = _run("compute", "--n", "1", "--k", "2", "--l", "3", "--json")
    assert result.exit_code == 0
    record = json.loads(result.output)
    assert record == {
        "n": "1",
        "k": "2",
        "l": "3",
        "spin": "true",
        "s": "-1/14",
        "t_w": "-1/14",
        "ahat_part": "2/27",
        "lgenus_part": "-16/27",
        "signature_term": "0",
        "ek_mod1": "1/14",
        "ek_mod1_halved": "1/28",
    }


def test_compute_text_mode():
    result = _run("compute", "--n", "1", "--k", "2", "--l", "3")
    assert result.exit_code == 0
    assert "s = -1/14" in result.output
    assert "spin = true" in result.output


def test_compute_domain_errors():
    result = _run("compute", "--n", "1", "--k", "3", "--l", "2")
    assert result.exit_code == 2
    assert "k must be even" in result.output
    result = _run("compute", "--n", "1", "--k", "2", "--l", "2")
    assert result.exit_code == 2
    assert "k and l must be coprime" in result.output
    result = _run("compute", "--n", "0", "--k", "2", "--l", "1")
    assert result.exit_code == 2
    assert "n must be a positive integer" in result.output


def test_laurent_check_leading():
    result = _run("laurent", "--n", "1", "--check-leading")
    assert result.exit_code == 0
    assert "exponent range [-2, 2]" in result.output
    assert "-3/896" in result.output
    assert "check: pass" in result.output


def test_laurent_json():
    result = _run("laurent", "--n", "2", "--json")
    assert result.exit_code == 0
    record = json.loads(result.output)
    assert record["min_exponent"] == "-2"
    assert record["max_exponent"] == "4"
    assert record["coeff[4]"] == "5/31744"


def test_series_output():
    result = _run("series", "--series", "lgenus", "--order", "2")
    assert result.exit_code == 0
    assert result.output.strip() == "b_2 = 1/3, b_4 = -1/45"
    result = _run("series", "--series", "ahat", "--order", "2")
    assert result.output.strip() == "ahat_2 = -1/24, ahat_4 = 7/5760"


def test_nm_output():
    assert _run("nm", "--m", "1").output.strip() == "N_1 = 0"
    assert _run("nm", "--m", "2").output.strip() == "N_2 = 1/896 * p1^2"


def test_table_csv_layout():
    result = _run("table", "--n", "1", "--l", "3", "--k-start", "2", "--k-end", "8", "--format", "csv")
    assert result.exit_code == 0
    lines = result.output.strip().splitlines()
    assert lines[0] == "n,k,l,spin,s,abs_s,ek_mod1"
    assert lines[1] == "1,2,3,true,-1/14,1/14,1/14"
    # k = 6 shares a factor with l = 3 and is skipped
    assert [line.split(",")[1] for line in lines[1:]] == ["2", "4", "8"]


def test_table_json_and_csv_agree():
    args = ["--n", "1", "--l", "3", "--k-start", "2", "--k-end", "10"]
    csv_out = _run("table", *args, "--format", "csv").output
    json_out = _run("table", *args, "--format", "json").output
    rows = json.loads(json_out)
    csv_lines = csv_out.strip().splitlines()
    header = csv_lines[0].split(",")
    assert len(rows) == len(csv_lines) - 1
    for rec, line in zip(rows, csv_lines[1:]):
        assert [rec[field] for field in header] == line.split(",")


def test_table_refuses_vanishing_l():
    result = _run("table", "--n", "1", "--l", "1", "--k-start", "2", "--k-end", "6")
    assert result.exit_code == 2
    assert "p(1) = 0" in result.output


def test_flag_domain_edges():
    assert _run("laurent", "--n", "0").exit_code == 2
    assert _run("series", "--series", "ahat", "--order", "0").exit_code == 2
    assert _run("series", "--series", "todd", "--order", "2").exit_code == 2
    assert _run("nm", "--m", "0").exit_code == 2
    assert _run("verify", "--n-max", "0").exit_code == 2


def test_table_writes_file(tmp_path):
    out = tmp_path / "rows.csv"
    result = _run(
        "table", "--n", "1", "--l", "3", "--k-start", "2", "--k-end", "4",
        "--format", "csv", "--out", str(out),
    )
    assert result.exit_code == 0
    assert out.read_text().startswith("n,k,l,spin,s,abs_s,ek_mod1\n")
    assert "2 distinct |s|" in result.output


def test_outputs_are_deterministic():
    for args in (
        ("compute", "--n", "2", "--k", "4", "--l", "5", "--json"),
        ("laurent", "--n", "2", "--check-leading"),
        ("table", "--n", "1", "--l", "3", "--k-start", "2", "--k-end", "20", "--format", "json"),
        ("series", "--series", "ahat", "--order", "4"),
        ("nm", "--m", "3"),
    ):
        first = _run(*args)
        second = _run(*args)
        assert first.exit_code == 0
        assert first.output == second.output


def test_verify_passes_at_n_max_3():
    result = _run("verify", "--n-max", "3")
    assert result.exit_code == 0, result.output
    assert "all 21 property suites passed" in result.output
    assert "FAIL" not in result.output
