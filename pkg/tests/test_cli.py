"""Command-line interface: payloads, formats, exit codes, figures."""

import json

import pytest

from gip.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestCheck:
    def test_nonidentity(self, capsys):
        report = run_json(
            capsys, "check", "--n", "5", "--blocks", "4,1", "--monomial", "1,2,3,4,4"
        )
        assert report["result"]["identity"] is False
        assert report["result"]["witness_rows"] is not None
        assert report["command"] == "check"
        assert report["input"]["monomial"] == [1, 2, 3, 4, 4]

    def test_bt44_identity(self, capsys):
        report = run_json(
            capsys,
            "check",
            "--n",
            "8",
            "--blocks",
            "4,4",
            "--monomial",
            "1,1,1,1,7,7,7,1,1,1,7,1,1",
        )
        assert report["result"]["identity"] is True

    def test_profile_flag(self, capsys):
        report = run_json(
            capsys,
            "check",
            "--n",
            "5",
            "--blocks",
            "4,1",
            "--profile",
            "--monomial",
            "1,2,3,4,4,3,1",
        )
        profile = report["result"]["profile"]
        assert [step[2] for step in profile] == [0, 1, 1, 0, 0, 1, 1]

    def test_long_valid_monomial_is_not_malformed(self, capsys):
        code, _, _ = run(
            capsys, "check", "--n", "5", "--blocks", "4,1", "--monomial", "1,2,3,4,4,3"
        )
        assert code == 0

    def test_residue_out_of_range_exits_2(self, capsys):
        code, _out, err = run(
            capsys, "check", "--n", "5", "--blocks", "4,1", "--monomial", "1,2,5"
        )
        assert code == 2
        assert "residue" in err

    def test_bad_blocks_exit_2(self, capsys):
        code, _out, err = run(
            capsys, "check", "--n", "4", "--blocks", "2,3", "--monomial", "1,1"
        )
        assert code == 2
        assert err.startswith("error:")


class TestEnumerate:
    def test_corner_csv(self, capsys):
        code, out, _ = run(
            capsys,
            "enumerate",
            "--n", "2", "--blocks", "1,1", "--max-degree", "2", "--format", "csv",
        )
        assert code == 0
        assert out.splitlines() == ["1,1"]

    def test_full_algebra_empty(self, capsys):
        code, out, _ = run(
            capsys,
            "enumerate",
            "--n", "4", "--blocks", "4", "--max-degree", "6", "--format", "csv",
        )
        assert code == 0
        assert out.strip() == ""

    def test_round_trip_through_check(self, capsys):
        code, out, _ = run(
            capsys,
            "enumerate",
            "--n", "4", "--blocks", "2,2", "--max-degree", "4", "--format", "csv",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines
        for line in lines:
            report = run_json(
                capsys, "check", "--n", "4", "--blocks", "2,2", "--monomial", line
            )
            assert report["result"]["identity"] is True

    def test_threads_do_not_change_output(self, capsys, monkeypatch):
        _, sequential, _ = run(
            capsys,
            "enumerate",
            "--n", "4", "--blocks", "2,2", "--max-degree", "5", "--format", "csv",
        )
        monkeypatch.setenv("GIP_THREADS", "3")
        _, parallel, _ = run(
            capsys,
            "enumerate",
            "--n", "4", "--blocks", "2,2", "--max-degree", "5", "--format", "csv",
        )
        assert sequential == parallel

    def test_figure_written(self, capsys, tmp_path):
        target = tmp_path / "figs" / "counts.png"
        code, _, _ = run(
            capsys,
            "enumerate",
            "--n", "4", "--blocks", "2,2", "--max-degree", "4",
            "--figure", str(target),
        )
        assert code == 0
        assert target.exists() and target.stat().st_size > 0


class TestBasis:
    def test_n3(self, capsys):
        code, out, _ = run(
            capsys, "basis", "--n", "3", "--blocks", "2,1", "--format", "csv"
        )
        assert code == 0
        assert out.splitlines() == ["1,1,1", "1,1,2", "2,2,1", "2,2,2"]

    def test_wrong_blocks_exit_2(self, capsys):
        code, _, err = run(capsys, "basis", "--n", "4", "--blocks", "2,2")
        assert code == 2
        assert "blocks" in err


class TestReduce:
    def test_collapse(self, capsys):
        code, out, _ = run(
            capsys,
            "reduce",
            "--n", "5", "--blocks", "4,1",
            "--monomial", "1,2,3,4,4,3,1",
            "--format", "csv",
        )
        assert code == 0
        assert out.strip() == "1,2,1,3,1"

    def test_nonidentity_exit_2(self, capsys):
        code, _, err = run(
            capsys, "reduce", "--n", "5", "--blocks", "4,1", "--monomial", "1,2,3,4,4"
        )
        assert code == 2
        assert "identity" in err


class TestEquiv:
    def test_reversal(self, capsys):
        report = run_json(
            capsys,
            "equiv",
            "--n", "4",
            "--degrees", "1,3,1",
            "--perm-a", "1,2,3",
            "--perm-b", "3,2,1",
        )
        assert report["result"]["equivalent"] is True
        assert report["result"]["witness_rows"]

    def test_rigid_swap(self, capsys):
        report = run_json(
            capsys,
            "equiv",
            "--n", "2",
            "--degrees", "1,1",
            "--perm-a", "1,2",
            "--perm-b", "2,1",
        )
        assert report["result"]["equivalent"] is False


class TestConsequence:
    def test_from_generators_file(self, capsys, tmp_path):
        gens = tmp_path / "gens.txt"
        gens.write_text("# comment line\n\n1,2,1,3,1\n")
        report = run_json(
            capsys,
            "consequence",
            "--n", "5", "--blocks", "4,1",
            "--monomial", "1,2,3,4,4,3,1",
            "--generators-file", str(gens),
        )
        assert report["result"]["status"] == "confirmed"
        assert report["result"]["generator"] == [1, 2, 1, 3, 1]
        assert report["result"]["blocks"] == [[1], [2], [3, 4, 4], [3], [1]]

    def test_missing_file_exit_2(self, capsys, tmp_path):
        code, _, err = run(
            capsys,
            "consequence",
            "--n", "5", "--blocks", "4,1",
            "--monomial", "1,2,1,3,4",
            "--generators-file", str(tmp_path / "nope.txt"),
        )
        assert code == 2


class TestConjecture:
    def test_bt22_confirms_and_exits_0(self, capsys):
        report = run_json(capsys, "conjecture", "--n", "4", "--blocks", "2,2")
        result = report["result"]
        assert result["holds"] is True
        assert result["minimal_generating_degree"] == 3
        assert result["unresolved"] == []
        assert result["confirmed_counts"]["4"] == result["identity_counts"]["4"]

    def test_csv_rows(self, capsys):
        code, out, _ = run(
            capsys, "conjecture", "--n", "2", "--blocks", "1,1", "--format", "csv"
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0] == "degree,identities,confirmed,unresolved"

    def test_figure_written(self, capsys, tmp_path):
        target = tmp_path / "census.png"
        code, _, _ = run(
            capsys,
            "conjecture",
            "--n", "4", "--blocks", "2,2", "--figure", str(target),
        )
        assert code == 0
        assert target.exists() and target.stat().st_size > 0


class TestConjectureExitCode:
    def test_unresolved_cases_exit_3(self, capsys, monkeypatch):
        import gip.cli as cli_module
        from gip import ConjectureReport

        def fake_report(spec, cap=None):
            return ConjectureReport(
                n=spec.n,
                blocks=spec.blocks,
                max_length=6,
                identity_counts=((4, 1),),
                minimal_generating_degree=None,
                holds=False,
                checked_level=4,
                confirmed_counts=((5, 0),),
                unresolved=((1, 2, 1, 2, 3),),
            )

        monkeypatch.setattr(cli_module, "conjecture_report", fake_report)
        code, out, _ = run(capsys, "conjecture", "--n", "4", "--blocks", "2,2")
        assert code == 3
        assert json.loads(out)["result"]["unresolved"] == [[1, 2, 1, 2, 3]]


class TestTextFormat:
    def test_header_and_fields(self, capsys):
        code, out, _ = run(
            capsys,
            "check",
            "--n", "5", "--blocks", "4,1",
            "--monomial", "1,2,1,3,4",
            "--format", "text",
        )
        assert code == 0
        lines = out.splitlines()
        assert lines[0].startswith("# gip")
        assert "identity: True" in out


class TestDeterminism:
    @pytest.mark.parametrize(
        "argv",
        [
            ("check", "--n", "5", "--blocks", "4,1", "--monomial", "1,2,3,4,4"),
            ("enumerate", "--n", "4", "--blocks", "2,2", "--max-degree", "4"),
            ("basis", "--n", "4", "--blocks", "3,1"),
            ("conjecture", "--n", "4", "--blocks", "2,2"),
        ],
    )
    def test_payload_is_reproducible(self, capsys, argv):
        first = run_json(capsys, *argv)
        second = run_json(capsys, *argv)
        first.pop("time_ms")
        second.pop("time_ms")
        assert first == second
