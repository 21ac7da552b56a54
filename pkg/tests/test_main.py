import json
import os

import pytest

from qzeta.main import EXIT_USAGE, attach_signed_values, main, parse_arguments

VERIFY_CONF = os.path.join(os.path.dirname(__file__), "test_verify.json")


class TestArguments(object):

    def test_defaults_are_filled(self):
        tool, conf, verbosity = parse_arguments(["series", "--word", "py"])
        assert tool == "series"
        assert conf["order"] == 20 and conf["pathway"] == "sum" and conf["q0"] is None
        assert not verbosity

    def test_flags_override_the_file(self):
        _, conf, _ = parse_arguments(["verify", "-c", VERIFY_CONF, "--order", "4"])
        assert conf["order"] == 4
        assert conf["suite"] == "word-laws"

    @pytest.mark.parametrize("argv, expected", [
        (["verify", "--range", "-2..3"], ["verify", "--range=-2..3"]),
        (["series", "--q0", "-1/2", "--word", "y"], ["series", "--q0=-1/2", "--word", "y"]),
        (["verify", "--range=-1..1"], ["verify", "--range=-1..1"]),
        (["verify", "--range"], ["verify", "--range"]),
    ])
    def test_signed_values_are_attached(self, argv, expected):
        assert attach_signed_values(argv) == expected

    def test_negative_range_as_two_tokens(self):
        _, conf, _ = parse_arguments(["verify", "--range", "-2..3", "--samples", "5"])
        assert conf["range"] == "-2..3"
        assert conf["samples"] == 5

    def test_samples_default(self):
        _, conf, _ = parse_arguments(["verify"])
        assert conf["samples"] == 20


class TestExpand(object):

    def test_py_py(self, capsys):
        assert main(["expand", "--product", "qshuffle", "p y", "p y"]) == 0
        assert "2 p y p y - p y y" in capsys.readouterr().out

    def test_json(self, capsys):
        assert main(["expand", "z(2)", "z(3)", "--product", "quasi", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert sorted(term["word"] for term in doc["terms"]) == [[2, 3], [3, 2], [5]]

    def test_needs_two_words(self):
        assert main(["expand", "p y"]) == EXIT_USAGE

    def test_bad_word(self):
        assert main(["expand", "p y", "p q"]) == EXIT_USAGE


class TestSeries(object):

    def test_json_coefficients(self, capsys):
        assert main(["series", "--word", "z(0)", "--order", "4", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["coeffs"] == ["0", "1", "1", "1", "1"]

    def test_at_a_point(self, capsys):
        assert main(["series", "--word", "y", "--q0", "1/2", "--term-cap", "10", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["value"] == "1023/1024"

    def test_schlesinger_series(self, capsys):
        assert main(["series", "--word", "z(1)", "--model", "schlesinger", "--order", "2", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["var"] == "x" and doc["coeffs"] == ["1", "1", "0"]

    def test_negative_point(self, capsys):
        assert main(["series", "--word", "y", "--q0", "-1/2", "--term-cap", "4", "--format", "json"]) == 0
        assert json.loads(capsys.readouterr().out)["value"] == "-5/16"

    def test_domain_error(self):
        assert main(["series", "--word", "z(2)", "--q0", "2"]) == EXIT_USAGE


class TestVerify(object):

    def test_config_file(self, capsys):
        assert main(["verify", "-c", VERIFY_CONF]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["suite"] == "word-laws" and doc["pass"] is True

    def test_documented_example(self, capsys):
        argv = ["verify", "--suite", "regularization", "--order", "6", "--range", "-2..3", "--seed", "7",
                "--format", "json"]
        assert main(argv) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["params"]["range"] == "-2..3" and doc["pass"] is True

    def test_text_report(self, capsys):
        assert main(["verify", "--suite", "regularization", "--order", "6", "--range=-1..1"]) == 0
        assert capsys.readouterr().out.startswith("# qzeta - regularization")

    @pytest.mark.parametrize("argv", [
        ["verify", "--range=2..1"],
        ["verify", "--range", "wide"],
        ["verify", "--suite", "everything"],
        ["verify", "-c", "/nonexistent/conf.json"],
        ["verify", "--bogus"],
    ])
    def test_usage_errors(self, argv):
        assert main(argv) == EXIT_USAGE


class TestLimit(object):

    def test_zeta_two(self, capsys):
        assert main(["limit", "--word", "z(2)", "--format", "json"]) == 0
        doc = json.loads(capsys.readouterr().out)
        assert doc["suite"] == "limit" and doc["pass"] is True

    def test_missed_target(self, capsys):
        assert main(["limit", "--word", "z(2)", "--tol", "0.0001", "--format", "json"]) == 1
