"""Command-line interface: JSON documents, exit codes, input precedence."""

import json

import pytest
from click.testing import CliRunner

from eqcasson.cli import main


@pytest.fixture
def runner():
    return CliRunner()


def run_json(runner, args, **kw):
    result = runner.invoke(main, args, **kw)
    return result, json.loads(result.output) if result.output.strip() else None


class TestKnotInput:
    def test_torus(self, runner):
        res, doc = run_json(runner, ["alexander", "--torus", "2,3"])
        assert res.exit_code == 0
        assert doc == {"alexander": [[-1, 1], [0, -1], [1, 1]]}

    def test_braid(self, runner):
        res, doc = run_json(runner, ["alexander", "--braid", "2 | 1 1 1"])
        assert res.exit_code == 0
        assert doc == {"alexander": [[-1, 1], [0, -1], [1, 1]]}

    def test_seifert_file(self, runner, tmp_path):
        f = tmp_path / "k.json"
        f.write_text('{"matrix": [[-1, 1], [0, -1]]}')
        res, doc = run_json(runner, ["alexander", "--seifert", str(f)])
        assert res.exit_code == 0
        assert doc == {"alexander": [[-1, 1], [0, -1], [1, 1]]}

    def test_multiple_inputs_is_usage_error(self, runner):
        res = runner.invoke(main, ["alexander", "--torus", "2,3",
                                   "--braid", "2 | 1 1 1"])
        assert res.exit_code == 2

    def test_no_input_is_usage_error(self, runner):
        res = runner.invoke(main, ["alexander"])
        assert res.exit_code == 2

    def test_malformed_torus(self, runner):
        res = runner.invoke(main, ["alexander", "--torus", "2;3"])
        assert res.exit_code == 2


class TestInvariantCommands:
    def test_signature_left_t56(self, runner):
        res, doc = run_json(runner, ["signature", "--torus", "5,6",
                                     "--hand", "left", "--alpha", "1/2"])
        assert res.exit_code == 0 and doc == {"sign": 16}

    def test_signature_at_root_domain_error(self, runner):
        res, doc = run_json(runner, ["signature", "--torus", "2,3",
                                     "--alpha", "1/6"])
        assert res.exit_code == 1
        assert doc["error"] == "SignatureAtRoot"

    def test_arf(self, runner):
        res, doc = run_json(runner, ["arf", "--torus", "2,3"])
        assert res.exit_code == 0 and doc == {"arf": 1}

    def test_foxcover(self, runner):
        res, doc = run_json(runner, ["foxcover", "--torus", "2,3", "-n", "5"])
        assert res.exit_code == 0
        assert doc == {"foxcover": [[-1, 1], [0, -1], [1, 1]]}

    def test_galois_pass(self, runner):
        res, doc = run_json(runner, ["galois", "--torus", "2,3", "-n", "5"])
        assert res.exit_code == 0 and doc["pass"] is True

    def test_galois_domain_error(self, runner):
        res, doc = run_json(runner, ["galois", "--torus", "2,3", "-n", "2"])
        assert res.exit_code == 1 and doc["error"] == "CoverNotZHS"

    def test_casson_brieskorn(self, runner):
        res, doc = run_json(runner, ["casson", "brieskorn", "2", "3", "5"])
        assert res.exit_code == 0
        assert doc["lambda"] == "-1" and doc["rho"] == 1

    def test_casson_brieskorn_bad_triple(self, runner):
        res = runner.invoke(main, ["casson", "brieskorn", "2", "4", "5"])
        assert res.exit_code == 2

    def test_casson_surgery(self, runner):
        res, doc = run_json(runner, ["casson", "surgery", "--torus", "2,3",
                                     "-q", "-1"])
        assert res.exit_code == 0 and doc["lambda"] == "-1"

    def test_eqcasson_free(self, runner):
        res, doc = run_json(runner, ["eqcasson", "free", "--torus", "2,3",
                                     "-n", "5", "-q", "-1"])
        assert res.exit_code == 0 and doc == {"lambda_tau": "-2"}

    def test_eqcasson_branched(self, runner):
        res, doc = run_json(runner, ["eqcasson", "branched", "--torus", "2,3",
                                     "-n", "5"])
        assert res.exit_code == 0 and doc == {"lambda_tau": "-1"}

    def test_boyernicas_rational(self, runner):
        res, doc = run_json(runner, ["boyernicas", "--torus", "2,3",
                                     "-n", "2", "-q", "1", "-w", "0"])
        assert res.exit_code == 0
        assert doc["lambda_w"] == "1/2"
        assert "CyclicallyFinite" in doc["flags"]

    def test_lambdabar(self, runner):
        res, doc = run_json(runner, ["lambdabar", "--torus", "2,3",
                                     "-n", "2", "-q", "1"])
        assert res.exit_code == 0 and doc == {"lambda_bar": "3/8"}

    def test_mubar_cork(self, runner):
        res, doc = run_json(runner, ["mubar", "--cork"])
        assert res.exit_code == 0 and doc == {"mu_bar": "2"}

    def test_mubar_domain_error(self, runner):
        res, doc = run_json(runner, ["mubar", "--torus", "5,6",
                                     "--hand", "left"])
        assert res.exit_code == 1 and doc["error"] == "DoubleCoverNotZHS"

    def test_lefschetz(self, runner):
        res, doc = run_json(runner, ["lefschetz", "--lambda-tau", "-1",
                                     "--ranks", "2,0,0,0"])
        assert res.exit_code == 0
        assert doc == {"lefschetz": "-2", "check": True}


class TestPillowcase:
    def test_curve_dump(self, runner):
        res, doc = run_json(runner, ["pillowcase", "curve", "--torus", "2,3"])
        assert res.exit_code == 0
        assert len(doc["arcs"]) == 2
        assert doc["arcs"][0]["interval"] == ["1/6", "5/6"]

    def test_count(self, runner):
        res, doc = run_json(runner, ["pillowcase", "count", "--torus", "2,3",
                                     "-n", "2", "-q", "1", "-w", "0"])
        assert res.exit_code == 0
        assert doc == {"count": -4, "invariant": "1/2"}

    def test_check(self, runner):
        res, doc = run_json(runner, ["pillowcase", "check", "--torus", "2,3",
                                     "-n", "5", "-q", "1"])
        assert res.exit_code == 0 and doc == {"ok": True}

    def test_endpoint_hit_domain_error(self, runner):
        res, doc = run_json(runner, ["pillowcase", "count", "--torus", "2,3",
                                     "-n", "12", "-q", "1"])
        assert res.exit_code == 1 and doc["error"] == "EndpointHit"


class TestVerify:
    def test_suite_runs(self, runner):
        res, doc = run_json(runner, ["verify", "boyer-nicas", "--seed", "1",
                                     "--cases", "10"])
        assert res.exit_code == 0
        (report,) = doc["reports"]
        assert report["suite"] == "boyer-nicas"
        assert report["failures"] == []
        assert report["cases"] >= 10

    def test_unknown_suite(self, runner):
        res = runner.invoke(main, ["verify", "nonsense"])
        assert res.exit_code == 2
