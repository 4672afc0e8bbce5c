"""CLI surface: parsing, output formats, exit codes, file ingestion."""
import json

import pytest

from wreathfock.cli import main, parse_group, parse_gset
from wreathfock.groups import GroupError, symmetric


class TestParsing:
    def test_shorthand(self):
        assert parse_group("z4").order == 4
        assert parse_group("s3").order == 6
        assert parse_group("d4").order == 8
        assert parse_group("q8").order == 8
        assert parse_group("bd3").order == 12

    def test_builtin_prefix_and_param(self):
        assert parse_group("builtin:cyclic:5").order == 5
        assert parse_group("sl2_f3").order == 24
        with pytest.raises(GroupError):
            parse_group("no_such_group")

    def test_gset_specs(self):
        g = symmetric(3)
        assert parse_gset("pt", g).size == 1
        assert parse_gset("regular", g).size == 6


class TestCommands:
    def test_series_euler_product(self, capsys):
        assert main(["series", "euler-product", "-e", "1", "-N", "5"]) == 0
        assert capsys.readouterr().out.strip() == "1 1 2 3 5 7"

    def test_series_graded_dim_group(self, capsys):
        assert main(["series", "graded-dim", "--group", "z2", "-N", "4"]) == 0
        assert capsys.readouterr().out.strip() == "1 2 5 10 20"

    def test_group_info_json(self, capsys):
        assert main(["group", "info", "--group", "s3",
                     "--format", "json"]) == 0
        info = json.loads(capsys.readouterr().out)
        assert info["order"] == 6 and info["num_classes"] == 3

    def test_wreath_types(self, capsys):
        assert main(["wreath", "types", "--group", "z2", "-N", "2"]) == 0
        assert len(capsys.readouterr().out.strip().splitlines()) == 5

    def test_verify_hopf_json(self, capsys):
        assert main(["verify", "hopf", "--group", "z2", "-N", "3",
                     "--format", "json"]) == 0
        rep = json.loads(capsys.readouterr().out)
        assert rep["all_passed"] is True and rep["checks"]

    def test_verify_mackey(self, capsys):
        assert main(["verify", "mackey", "--group", "s3"]) == 0
        capsys.readouterr()

    def test_bad_input_exit_2(self, capsys):
        assert main(["group", "info", "--group", "no_such_group"]) == 2
        assert "error:" in capsys.readouterr().err

    def test_byte_stable_output(self, capsys):
        argv = ["verify", "lambda", "--group", "z2", "-N", "3",
                "--format", "json"]
        assert main(argv) == 0
        first = capsys.readouterr().out
        assert main(argv) == 0
        assert capsys.readouterr().out == first


class TestFileIngestion:
    def test_cayley_file(self, tmp_path, capsys):
        g = symmetric(3)
        path = tmp_path / "mygroup.json"
        path.write_text(g.to_json())
        assert main(["group", "info", "--group", str(path)]) == 0
        assert "order: 6" in capsys.readouterr().out

    def test_permutation_file(self, tmp_path, capsys):
        path = tmp_path / "perms.json"
        path.write_text(json.dumps(
            {"degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}))
        assert main(["group", "info", "--group", str(path)]) == 0
        assert "order: 6" in capsys.readouterr().out

    def test_gset_file(self, tmp_path, capsys):
        path = tmp_path / "x.json"
        path.write_text(json.dumps(
            {"size": 2, "action": [[0, 1], [1, 0]]}))
        assert main(["verify", "euler", "--group", "z2", "-N", "2",
                     "--gset", str(path)]) == 0
        capsys.readouterr()

    def test_bad_gset_file(self, tmp_path, capsys):
        path = tmp_path / "bad.json"
        path.write_text("{}")
        assert main(["verify", "euler", "--group", "z2",
                     "--gset", str(path)]) == 2
        capsys.readouterr()
