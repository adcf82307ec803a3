"""Command-line entry point: flags, config files, exit codes and report output."""
import json

import pytest

from chevlab.cli import main, parse_matrix


def run(capsys, *argv):
    code = main(list(argv))
    return code, json.loads(capsys.readouterr().out)


class TestCommands:
    def test_ring_info(self, capsys):
        code, report = run(capsys, "ring-info", "--ring", "Z/12")
        assert code == 0
        assert report["passed"] is True
        assert report["counts"]["units"] == 4
        assert report["tables"]["factors"] == ["Z/4", "Z/3"]

    def test_verify(self, capsys):
        code, report = run(capsys, "verify", "--phi", "B2", "--ring", "Z/5")
        assert code == 0
        assert report["counts"]["dimension"] == 4

    def test_enumerate(self, capsys):
        code, report = run(capsys, "enumerate", "--ring", "F2")
        assert code == 0
        assert report["counts"]["order"] == report["counts"]["sl3_order"] == 168

    def test_k2(self, capsys, tmp_path):
        prefix = tmp_path / "sl3f2"
        code, report = run(capsys, "k2", "--ring", "F2", "--dump", str(prefix))
        assert code == 0
        assert report["counts"]["k2_order"] == 1
        assert (tmp_path / "sl3f2.presentation.txt").read_text().startswith("# St(A2, F2)")
        assert (tmp_path / "sl3f2.cosets.tsv").exists()

    def test_bigcell_outside(self, capsys):
        code, report = run(capsys, "bigcell", "--ring", "F2", "--element", "0,1,0; 1,0,0; 0,0,1")
        assert code == 0
        assert report["tables"]["factorization"]["in_cell"] is False

    def test_bigcell_inside(self, capsys):
        code, report = run(capsys, "bigcell", "--ring", "Z/5", "--element", "1,2,0; 0,1,0; 0,0,1")
        assert code == 0
        assert report["tables"]["factorization"]["uplus"]["e1-e2"] == "2"

    def test_words_through_a_reduction(self, capsys):
        code, report = run(capsys, "words", "--ring", "Z/4", "--source", "Z/8", "--images", "1")
        assert code == 0
        assert report["counts"]["kernel_size"] == 2
        assert report["tables"]["f_injective"] is False

    def test_filtration(self, capsys):
        code, report = run(capsys, "filtration", "--ring", "F3[x]/(x^2)", "--equivariance-samples", "5",
                           "--samples", "5")
        assert code == 0
        assert report["counts"]["quotient_order"] == 3 ** 8


class TestFailures:
    def test_bad_ring_spec(self, capsys):
        code, report = run(capsys, "ring-info", "--ring", "Q/3")
        assert code == 1
        assert report["passed"] is False
        assert report["error"]

    def test_non_nice_pair(self, capsys):
        code, report = run(capsys, "k2", "--phi", "G2", "--ring", "Z/6")
        assert code == 1
        assert report["error"].startswith("NicePairViolation")

    def test_invalid_level(self, capsys):
        assert main(["filtration", "--ring", "F3[x]/(x^2)", "--level", "0"]) == 2


class TestConfig:
    def test_config_file_overrides_flags(self, capsys, tmp_path):
        config = tmp_path / "run.json"
        config.write_text(json.dumps({"ring": "Z/7"}))
        code, report = run(capsys, "ring-info", "--ring", "Z/5", "--config", str(config))
        assert code == 0
        assert report["inputs"]["ring"] == "Z/7"
        assert report["counts"]["cardinality"] == 7

    def test_out_file(self, capsys, tmp_path):
        out = tmp_path / "report.json"
        assert main(["ring-info", "--ring", "Z/6", "--out", str(out)]) == 0
        assert capsys.readouterr().out == ""
        assert json.loads(out.read_text())["counts"]["local_factors"] == 2

    def test_missing_config_file(self, tmp_path):
        assert main(["ring-info", "--config", str(tmp_path / "absent.json")]) == 2


class TestParsing:
    def test_parse_matrix(self):
        assert parse_matrix("0,1,0; 1,0,0; 0,0,1") == [["0", "1", "0"], ["1", "0", "0"], ["0", "0", "1"]]

    def test_parse_product_entries(self):
        assert parse_matrix("(1, 0), (0, 1)") == [["(1, 0)", "(0, 1)"]]

    def test_command_required(self):
        with pytest.raises(SystemExit):
            main([])
