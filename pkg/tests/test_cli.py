"""Command-line interface: exit codes, determinism, configuration,
subcommand payloads, golden regeneration, and coverage of the manifest."""

import json
import os

import pytest

from g2forge import cli

HERE = os.path.dirname(os.path.abspath(__file__))


def run_capture(capsys, argv):
    code = cli.run(argv)
    out = capsys.readouterr().out
    return code, out


@pytest.fixture(scope="module")
def verify_report():
    """One shared full verification run (seed 7, JSON)."""
    import io
    from contextlib import redirect_stdout

    buf = io.StringIO()
    with redirect_stdout(buf):
        code = cli.run(["verify", "--seed", "7", "--format", "json"])
    return code, buf.getvalue()


class TestExitCodes:
    def test_unknown_flag_is_usage_error(self, capsys):
        assert cli.run(["verify", "--bogus"]) == 2

    def test_unknown_subcommand_is_usage_error(self, capsys):
        assert cli.run(["frobnicate"]) == 2

    def test_arthur_requires_a_selection(self, capsys):
        assert cli.run(["arthur"]) == 2

    def test_verify_succeeds(self, verify_report):
        code, _ = verify_report
        assert code == 0


class TestDeterminism:
    def test_same_seed_byte_identical(self, verify_report, capsys):
        _, first = verify_report
        code, second = run_capture(capsys, ["verify", "--seed", "7", "--format", "json"])
        assert code == 0
        assert first == second

    def test_report_schema(self, verify_report):
        _, out = verify_report
        rep = json.loads(out)
        assert set(rep) == {"version", "seed", "suites"}
        assert rep["seed"] == 7
        for suite in rep["suites"]:
            assert set(suite) == {"name", "checks"}
            for check in suite["checks"]:
                assert set(check) == {"id", "anchor", "status", "detail"}
                assert check["status"] in {"pass", "fail", "finding"}

    def test_no_failures_and_findings_present(self, verify_report):
        _, out = verify_report
        rep = json.loads(out)
        statuses = [c["status"] for s in rep["suites"] for c in s["checks"]]
        assert "fail" not in statuses
        assert "finding" in statuses  # documented probes stay visible


class TestCoverageManifest:
    def test_every_check_appears_exactly_once(self, verify_report):
        _, out = verify_report
        rep = json.loads(out)
        seen = [f"{s['name']}/{c['id']}" for s in rep["suites"] for c in s["checks"]]
        with open(os.path.join(HERE, "coverage_manifest.json"), encoding="utf-8") as fh:
            manifest = json.load(fh)["checks"]
        assert len(seen) == len(set(seen))
        assert sorted(seen) == sorted(manifest)


class TestConfiguration:
    def test_config_file_sets_seed_and_word_length(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("# comment\nseed = 11\nword-length = 1\n")
        code, out = run_capture(capsys, ["verify", "--format", "json", "--config", str(cfg)])
        assert code == 0
        rep = json.loads(out)
        assert rep["seed"] == 11
        detail = next(
            c["detail"]
            for s in rep["suites"]
            for c in s["checks"]
            if c["id"] == "coefficient-relations"
        )
        assert "length <= 1" in detail

    def test_cli_seed_overrides_config(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("seed = 11\n")
        code, out = run_capture(
            capsys, ["verify", "--seed", "4", "--format", "json", "--config", str(cfg)]
        )
        assert code == 0
        assert json.loads(out)["seed"] == 4

    def test_unknown_key_rejected(self, tmp_path, capsys):
        cfg = tmp_path / "run.cfg"
        cfg.write_text("bogus = 1\n")
        assert cli.run(["verify", "--config", str(cfg)]) == 2

    def test_env_var_sets_output_dir(self, tmp_path, capsys, monkeypatch):
        outdir = tmp_path / "out"
        monkeypatch.setenv("G2FORGE_OUTPUT_DIR", str(outdir))
        code, out = run_capture(capsys, ["verify", "--seed", "2", "--format", "json", "--bless"])
        assert code == 0
        assert (outdir / "verify_report.json").exists()
        assert (outdir / "wedge2_display.json").exists()
        # the freshly blessed golden matches in the same run
        rep = json.loads(out)
        golden = next(
            c for s in rep["suites"] for c in s["checks"] if c["id"] == "golden-displayed-blocks"
        )
        assert golden["status"] == "pass"

    def test_missing_golden_is_a_finding_not_a_failure(self, tmp_path, capsys, monkeypatch):
        monkeypatch.setenv("G2FORGE_OUTPUT_DIR", str(tmp_path / "empty"))
        code, out = run_capture(capsys, ["verify", "--seed", "2", "--format", "json"])
        assert code == 0
        rep = json.loads(out)
        golden = next(
            c for s in rep["suites"] for c in s["checks"] if c["id"] == "golden-displayed-blocks"
        )
        assert golden["status"] == "finding"


class TestSubcommands:
    def test_roots_payload(self, capsys):
        code, out = run_capture(capsys, ["roots"])
        assert code == 0
        rep = json.loads(out)
        assert len(rep["weyl_elements"]) == 12
        assert rep["two_rho"]["P_long"] == "(5)*alpha + (10)*beta"

    def test_kostant_payload(self, capsys):
        code, out = run_capture(capsys, ["kostant", "--c1", "1", "--c2", "1", "--parabolic", "alpha"])
        assert code == 0
        rep = json.loads(out)
        assert len(rep["pieces"]) == 6
        assert [c["degree"] for c in rep["degree_cases"]] == [4, 5, 6]

    def test_triform_payload(self, capsys):
        code, out = run_capture(capsys, ["triform", "--a", "2/3", "--word-length", "1"])
        assert code == 0
        rep = json.loads(out)
        assert all(rep["form_preserved_by"].values())
        assert rep["centralizer_dims"] == [14, 8, 6, 4, 2]

    def test_triform_zero_parameter_rejected(self, capsys):
        assert cli.run(["triform", "--a", "0"]) == 2

    def test_wedge2_payload(self, capsys):
        code, out = run_capture(capsys, ["wedge2", "--report", "json"])
        assert code == 0
        rep = json.loads(out)
        assert rep["elimination"]["det_natural_is_minus_9d3"] is True
        assert rep["five_dim"]["wedge_block_equals_sym_cube"] is True

    def test_phin_obstruction_payload(self, capsys):
        code, out = run_capture(capsys, ["phin", "--k", "4", "--sp", "1", "--mode", "obstruction"])
        assert code == 0
        rep = json.loads(out)
        constraints = {c["constraint"] for c in rep["constraints"]}
        assert constraints == {
            "unit = p^(1/2*k - 1)",
            "unit = p^(1/2*k)",
            "unit^3 = p^(3/2*k - 1)",
            "unit^3 = p^(3/2*k - 2)",
        }
        assert rep["monodromy_forced_zero"] is False

    def test_phin_polygons_payload(self, capsys):
        code, out = run_capture(capsys, ["phin", "--k", "4", "--sp", "1", "--mode", "polygons"])
        assert code == 0
        rep = json.loads(out)
        assert rep["admissible"] is True
        assert rep["newton"]["vertices"] == [[0, "0"], [1, "-2"], [2, "-3"]]

    def test_arthur_payload(self, capsys):
        code, out = run_capture(
            capsys, ["arthur", "--orbits", "--packet", "4", "--lift", "1", "1", "--ledger", "12", "1"]
        )
        assert code == 0
        rep = json.loads(out)
        assert [o["dim"] for o in rep["orbits"]] == [0, 6, 8, 10, 12]
        assert rep["lift"]["coweight"] == [10, 6]
        assert rep["ledger"]["bound"] == ["m_cusp(plain)", 2]
