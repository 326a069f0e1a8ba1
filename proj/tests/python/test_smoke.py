import json
import os
import subprocess

import pytest

import pcmeff

A = [[1, 1, 4, 9], [1, 1, 7, 5], [1 / 4, 1 / 7, 1, 4], [1 / 9, 1 / 5, 1 / 4, 1]]
DATA = os.environ.get("PCMEFF_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def test_eigenvector():
    w, lam = pcmeff.principal_eigenvector(A)
    assert w == pytest.approx([0.404518, 0.436173, 0.110295, 0.049014], abs=1e-6)
    assert lam == pytest.approx(4.259384, abs=1e-6)


def test_analyze_example():
    report = pcmeff.analyze(A)
    assert report["schema"] == "report_v1"
    assert report["efficiency"]["verdict"] == "inefficient"
    assert report["efficiency"]["lp_optimum"] == pytest.approx(-0.226, abs=1e-3)
    assert report["efficiency"]["dominator_aligned"] == pytest.approx([0.436173, 0.436173, 0.110295, 0.049014], abs=1e-6)
    assert report["weak_efficiency"]["verdict"] == "weakly_efficient"
    assert pcmeff.is_efficient(A, method="geometric_mean")


def test_dominance_and_tournament():
    powers = [[2.0 ** (j - i) for j in range(4)] for i in range(4)]
    assert pcmeff.dominates(powers, [8, 4, 2, 1], [27, 9, 3, 1]) == "dominates_strongly"
    d = pcmeff.acyclic_dominator(powers, [27, 9, 3, 1], [0, 1, 2, 3])
    assert [d[i] / d[i + 1] for i in range(3)] == pytest.approx([2, 2, 2])


def test_errors():
    with pytest.raises(pcmeff.ValidationError):
        pcmeff.analyze([[1, 2], [0.5, 1]])
    with pytest.raises(pcmeff.PcmError):
        pcmeff.principal_eigenvector([[1, 2, 3], [1, 1, 1], [1, 1, 1]])


def test_generate_and_experiment():
    assert pcmeff.generate(4, "saaty_discrete", 42) == pcmeff.generate(4, "saaty_discrete", 42)
    summary = pcmeff.experiment(4, trials=50, seed=3)
    assert summary["trials"] == 50
    assert summary["conflicts"] == 0


def test_service_and_cli_agree():
    status, body = pcmeff.handle_request("POST", "/api/v1/analyze", json.dumps({"matrix": A}))
    assert status == 200
    code, out, _ = pcmeff.run_cli(["efficiency", os.path.join(DATA, "exampleA.json"), "--json"])
    assert code == 2
    assert json.loads(out)["efficiency"] == json.loads(body)["efficiency"]


@pytest.mark.skipif("PCMEFF_CLI" not in os.environ, reason="command line tool not built")
def test_cli_binary():
    proc = subprocess.run([os.environ["PCMEFF_CLI"], "efficiency", os.path.join(DATA, "exampleA.csv")],
                          capture_output=True, text=True)
    assert proc.returncode == 2
    assert proc.stdout.startswith("INEFFICIENT, lp_optimum=-0.226")
