import json

import pytest

from deltak.cli import main


def write_json(path, data):
    path.write_text(json.dumps(data))
    return str(path)


@pytest.fixture()
def ex51_path(tmp_path):
    return write_json(tmp_path / "ex51.json",
                      {"n": 3, "feasible": [[1, 2, 3], [1], [2], [3]]})


@pytest.fixture()
def ex52_path(tmp_path):
    return write_json(tmp_path / "ex52.json",
                      {"n": 4, "feasible": [[], [1], [2], [3], [4], [2, 3, 4],
                                            [1, 3, 4], [1, 2, 4], [1, 2, 3]]})


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, (json.loads(out) if out.strip() else None)


class TestCommands:
    def test_validate(self, capsys, ex51_path):
        code, report = run_cli(capsys, "validate", "--input", ex51_path)
        assert code == 0 and report["valid"] is True

    def test_validate_bad_family(self, capsys, tmp_path):
        path = write_json(tmp_path / "bad.json",
                          {"n": 3, "feasible": [[], [1, 2, 3]]})
        code, report = run_cli(capsys, "validate", "--input", path)
        assert code == 0
        assert report["valid"] is False
        assert report["violating_edge"] == [[], [1, 2, 3]]

    def test_interlace(self, capsys, ex51_path):
        code, report = run_cli(capsys, "interlace", "--input", ex51_path)
        assert code == 0
        assert report["Int"] == {"0": "4", "1": "4"}

    def test_chi(self, capsys, ex51_path):
        code, report = run_cli(capsys, "chi", "--input", ex51_path)
        assert code == 0 and report["chi"] == 4
        code, report = run_cli(capsys, "chi", "--class", "doubled",
                               "--input", ex51_path)
        assert code == 0 and report["chi"] == 11

    def test_rpoly_orbit_second_example(self, capsys, ex52_path):
        code, report = run_cli(capsys, "rpoly", "--mode", "orbit",
                               "--input", ex52_path)
        assert code == 0
        assert report["R"] == {"0": "9", "1": "16", "2": "6", "3": "-1",
                               "4": "1", "5": "1"}
        assert report["directions_agreed"] is True

    def test_rpoly_y(self, capsys, ex51_path):
        code, report = run_cli(capsys, "rpoly", "--mode", "y",
                               "--input", ex51_path)
        assert code == 0
        assert report["R"] == {"0": "4", "1": "8", "2": "4"}

    def test_verify_theorem_a(self, capsys):
        code, report = run_cli(capsys, "verify", "--theorem", "A", "--n", "2")
        assert code == 0
        assert report["failures"] == 0
        assert report["checked"] == 18

    def test_verify_theorem_b(self, capsys):
        code, report = run_cli(capsys, "verify", "--theorem", "B", "--n", "1")
        assert code == 0 and report["failures"] == 0

    def test_verify_intersection(self, capsys):
        code, report = run_cli(capsys, "verify", "--theorem", "intersection",
                               "--n", "2")
        assert code == 0 and report["failures"] == 0

    def test_polytope_audit(self, capsys, ex51_path):
        code, report = run_cli(capsys, "polytope", "audit",
                               "--input", ex51_path)
        assert code == 0
        assert report["very_ample"] is False
        assert {"vertex": [1], "gap_point": [-1, 1, 1]} in report["certificates"]

    def test_classes_dump(self, capsys, ex51_path):
        code, report = run_cli(capsys, "classes", "dump", "--input", ex51_path)
        assert code == 0
        assert "y" in report and "orbit" in report and "polytope" in report
        assert len(report["polytope"]) == 48

    def test_moment_graph_dump(self, capsys):
        code, report = run_cli(capsys, "classes", "dump", "--moment-graph",
                               "--n", "2")
        assert code == 0
        assert len(report["vertices"]) == 8
        assert len(report["edges"]) == 8

    def test_search_star_small(self, capsys):
        code, report = run_cli(capsys, "search-star", "--n", "2")
        assert code == 0 and report["failures"] == []

    def test_bench_small(self, capsys):
        code, report = run_cli(capsys, "bench", "--n", "3", "--jobs", "1")
        assert code == 0 and report["chi"] == 8

    def test_output_file(self, capsys, tmp_path, ex51_path):
        out = tmp_path / "report.json"
        code, _ = run_cli(capsys, "interlace", "--input", ex51_path,
                          "--output", str(out))
        assert code == 0
        assert json.loads(out.read_text())["Int"] == {"0": "4", "1": "4"}


class TestExitCodes:
    def test_missing_file(self, capsys):
        assert main(["interlace", "--input", "/nonexistent.json"]) == 2

    def test_malformed_json(self, capsys, tmp_path):
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        assert main(["interlace", "--input", str(path)]) == 2

    def test_wrong_schema(self, capsys, tmp_path):
        path = write_json(tmp_path / "odd.json", {"something": 1})
        assert main(["interlace", "--input", str(path)]) == 2

    def test_resource_budget(self, capsys, ex52_path):
        code = main(["rpoly", "--mode", "orbit", "--input", ex52_path,
                     "--max-pairs", "1"])
        assert code == 3

    def test_search_star_n4_guard(self, capsys):
        assert main(["search-star", "--n", "4"]) == 2

    def test_contract_violation_exit_code(self, capsys, monkeypatch):
        import deltak.cli as cli
        from deltak.errors import ContractViolation

        def boom(cfg):
            raise ContractViolation("forced")

        monkeypatch.setitem(cli.COMMANDS, "selftest", boom)
        assert main(["selftest"]) == 1

    def test_verify_failure_payload_exits_one(self, capsys, monkeypatch):
        import deltak.cli as cli
        from deltak.laurent import UniPoly

        monkeypatch.setattr(cli, "r_poly_y", lambda D, **kw: UniPoly((0,)))
        code, report = run_cli(capsys, "verify", "--theorem", "A", "--n", "1")
        assert code == 1
        assert report["failures"] == report["checked"] == 3
        assert "failure_payloads" in report

    def test_reports_are_reproducible(self, capsys, ex51_path):
        _, a = run_cli(capsys, "rpoly", "--mode", "orbit", "--input", ex51_path,
                       "--seed", "7")
        _, b = run_cli(capsys, "rpoly", "--mode", "orbit", "--input", ex51_path,
                       "--seed", "7")
        assert a == b
