import json
import subprocess
import sys

import pytest

from higgs_spectral.cli import EXIT_DOMAIN, EXIT_INTERNAL, EXIT_OK, EXIT_PARSE, SCHEMA_VERSION, main
from higgs_spectral.curves import AFFINE_SCOPE, SO_EVEN_QUOTIENT_NOTE
from higgs_spectral.divisors import PRYM_SCOPE


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.lstrip().startswith("{") else out)


def test_dims_example(capsys):
    code, env = run(capsys, "dims", "--group", "sp", "--n", "2", "--genus", "2")
    assert code == EXIT_OK
    assert env["schema_version"] == SCHEMA_VERSION
    assert env["command"] == "dims"
    r = env["result"]
    assert (r["degrees"], r["base_dim"], r["moduli_dim"], r["half_dim_check"]) == ([2, 4], 10, 20, "pass")


def test_curve_example_flags_discrepancy(capsys):
    code, env = run(capsys, "curve", "--group", "so_even", "--n", "2", "--genus", "2")
    assert code == EXIT_OK
    r = env["result"]
    assert (r["virtual_genus"], r["desing_genus"], r["quotient_genus"], r["prym_dim"]) == (17, 13, 7, 6)
    assert SO_EVEN_QUOTIENT_NOTE in r["notes"]
    assert SO_EVEN_QUOTIENT_NOTE in env["warnings"]


def test_pushforward_example(capsys):
    code, env = run(capsys, "pushforward", "--input", "free_module_eta2_minus_w.json")
    assert code == EXIT_OK
    assert env["result"]["phi_text"] == [["0", "w"], ["1", "0"]]
    assert env["result"]["char"] == "eta^2 - w"
    assert AFFINE_SCOPE in env["warnings"]


def test_pushforward_singular_fixture_warns(capsys):
    code, env = run(capsys, "pushforward", "--input", "ideal_eta_in_eta2_minus_w.json")
    assert code == EXIT_OK
    code, env = run(capsys, "pushforward", "--input", "sigma_ideal_even_quartic.json")
    assert code == EXIT_OK
    assert env["result"]["sigma"]["classification"] == "neither"
    assert any("not certified smooth" in w for w in env["warnings"])
    assert any("principality" in w for w in env["warnings"])


def test_rank_two_pushforward(capsys):
    code, env = run(capsys, "pushforward", "--input", "rank2_free_plus_eta.json")
    assert code == EXIT_OK
    assert env["result"]["rank"] == 2


def test_eigenline(capsys):
    code, env = run(capsys, "eigenline", "--input", "higgs_local_model.json")
    assert code == EXIT_OK
    assert env["result"]["is_free"] is True


@pytest.mark.parametrize("fixture", ["fixedpoint_su11.json", "fixedpoint_sl2r.json"])
def test_check_fixedpoint(capsys, fixture):
    code, env = run(capsys, "check-fixedpoint", "--input", fixture)
    assert code == EXIT_OK
    assert env["result"]["status"] == "pass"


def test_norm_and_prym(capsys):
    code, env = run(capsys, "norm", "--input", "divisor_eta2_minus_w.json")
    assert code == EXIT_OK
    assert env["result"]["norm"] == [] and env["result"]["degree"] == 0
    code, env = run(capsys, "prym-check", "--input", "divisor_eta2_minus_w.json")
    assert env["result"]["in_norm_kernel"] is True
    assert PRYM_SCOPE in env["warnings"]


def test_realform_and_validate(capsys):
    code, env = run(capsys, "realform", "--name", "SU(p,q)", "--param", "p=2", "--param", "q=1")
    assert code == EXIT_OK
    assert env["result"]["passed"] is True
    assert env["result"]["maximal_compact_dim"] == 4
    code, env = run(capsys, "validate", "--group", "so_even", "--n", "2", "--char", "eta^4 + w*eta^2 + w^2")
    assert code == EXIT_OK and env["result"]["passed"] is True
    code, env = run(capsys, "validate", "--group", "so_even", "--n", "2", "--char", "eta^4 + w")
    assert code == EXIT_OK and env["result"]["passed"] is False


def test_text_format(capsys):
    code, out = run(capsys, "pushforward", "--input", "free_module_eta2_minus_w.json", "--format", "text")
    assert code == EXIT_OK
    assert "phi_text: [[0, w], [1, 0]]" in out
    assert "entries" not in out
    assert out.rstrip().splitlines()[-1].startswith("warning:")


def test_domain_error(capsys):
    code, env = run(capsys, "dims", "--group", "sl", "--n", "1", "--genus", "2")
    assert code == EXIT_DOMAIN
    assert env["result"]["error"]["kind"] == "domain"
    assert env["inputs"] == {"genus": 2, "group": "sl", "n": 1}


def test_parse_errors(capsys):
    code, env = run(capsys, "validate", "--group", "sp", "--n", "1", "--char", "eta^2 +")
    assert code == EXIT_PARSE
    assert env["result"]["error"]["kind"] == "parse"
    code, env = run(capsys, "pushforward", "--input", "missing.json")
    assert code == EXIT_PARSE
    code, _ = run(capsys, "dims", "--group", "e8", "--n", "1", "--genus", "2")
    assert code == EXIT_PARSE


def test_internal_error_exit_code(capsys, monkeypatch):
    import higgs_spectral.cli as cli

    def broken(args):
        raise AssertionError("invariant violated")

    monkeypatch.setattr(cli, "cmd_dims", broken)
    code, env = run(capsys, "dims", "--group", "sp", "--n", "2", "--genus", "2")
    assert code == EXIT_INTERNAL
    assert env["result"]["error"]["kind"] == "internal"


def test_verify_all_small_is_deterministic(capsys):
    code, first = run(capsys, "verify-all", "--seed", "3", "--samples", "2")
    assert code == EXIT_OK and first["result"]["passed"]
    _, second = run(capsys, "verify-all", "--seed", "3", "--samples", "2")
    assert first == second
    names = [s["name"] for s in first["result"]["suites"]]
    assert len(names) == 9


def test_console_script_entry_point():
    proc = subprocess.run([sys.executable, "-m", "higgs_spectral.cli", "dims", "--group", "gl", "--n", "2",
                           "--genus", "2"], capture_output=True, text=True, check=False)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["result"]["moduli_dim"] == 10
