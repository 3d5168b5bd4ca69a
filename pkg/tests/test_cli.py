import io
import json

from cli.commands import run


def _run(*argv: str) -> tuple[int, str, str]:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


class TestRankCommands:
    def test_zelevinsky(self, data_dir) -> None:
        code, out, _ = _run("zelevinsky", "-i", str(data_dir / "ranks_2342.json"))
        assert code == 0
        assert json.loads(out) == [7, 10, 3, 4, 11, 1, 5, 6, 8, 2, 9]

    def test_lace_array(self, data_dir) -> None:
        code, out, _ = _run("lace-array", "-i", str(data_dir / "ranks_2342.json"))
        assert code == 0
        assert json.loads(out) == {"valid": True, "s": [[1, 1, 0, 0], [0, 1, 1], [2, 0], [1]]}

    def test_codim(self, data_dir) -> None:
        code, out, _ = _run("codim", "-i", str(data_dir / "ranks_2342.json"))
        assert code == 0
        assert json.loads(out) == {"codim": 9}

    def test_ranks_from_stdin(self, monkeypatch) -> None:
        monkeypatch.setattr("sys.stdin", io.StringIO('{"n": 1, "r": [[1, 0], [1]]}'))
        code, out, _ = _run("codim", "-i", "-")
        assert code == 0
        assert json.loads(out) == {"codim": 1}

    def test_quiver_poly_json_is_sorted(self, data_dir) -> None:
        code, out, _ = _run("quiver-poly", "-i", str(data_dir / "tiny_n1.json"))
        assert code == 0
        assert json.loads(out) == {
            "terms": [
                {"mono": {"x0_1": 1}, "coeff": "1"},
                {"mono": {"y1_1": 1}, "coeff": "-1"},
            ]
        }

    def test_output_is_byte_stable(self, data_dir) -> None:
        path = str(data_dir / "tiny_n1.json")
        assert _run("quiver-poly", "--method", "divide", "-i", path) == _run("quiver-poly", "-i", path)

    def test_embed_given_lacing(self, data_dir) -> None:
        code, out, _ = _run(
            "embed",
            "-i", str(data_dir / "ranks_2342.json"),
            "--lacing", str(data_dir / "lacing_2342.json"),
        )
        assert code == 0
        graph = json.loads(out)
        assert graph["d"] == 11
        assert len(graph["crosses"]) == 27

    def test_component_check(self, data_dir) -> None:
        code, out, _ = _run("component-check", "-i", str(data_dir / "tiny_n1.json"))
        assert code == 0
        report = json.loads(out)
        assert report["equal"] is True
        assert report["wmin"] == 1


class TestPermutationCommands:
    def test_double_schubert_of_transposition(self) -> None:
        code, out, _ = _run("--format", "ascii", "schubert", "--w", "[2,1]", "--double")
        assert code == 0
        assert out == "x1 - y1\n"

    def test_stanley_coefficients(self) -> None:
        code, out, _ = _run("stanley", "--w", "[3,1,2]")
        assert code == 0
        assert json.loads(out) == {"terms": [{"partition": [2], "coeff": 1}]}

    def test_schur_q(self) -> None:
        code, out, _ = _run("--format", "ascii", "schur-q", "--mu", "[2]", "-k", "2")
        assert code == 0
        assert out == "2*x1^2 + 4*x1*x2 + 2*x2^2\n"

    def test_schubert(self) -> None:
        code, out, _ = _run("schubert", "--w", "[3,1,2]")
        assert code == 0
        assert json.loads(out) == {"terms": [{"mono": {"x1": 2}, "coeff": "1"}]}

    def test_schubert_ascii(self) -> None:
        code, out, _ = _run("--format", "ascii", "schubert", "--w", "[1,3,2]")
        assert code == 0
        assert out == "x1 + x2\n"

    def test_split_a_drops_vanishing_terms(self) -> None:
        code, out, _ = _run("split-a", "--w", "[2,3,1]", "--breaks", "[1,2]")
        assert code == 0
        assert json.loads(out) == {"terms": [{"partition": [[1], [1]], "coeff": 1}]}

        code, out, _ = _run("split-a", "--w", "[2,3,1]", "--breaks", "[1,2]", "--all-terms")
        assert len(json.loads(out)["terms"]) == 2

    def test_split_bcd_from_printed_expansion(self, data_dir) -> None:
        code, out, _ = _run(
            "split-bcd", "--w", "[3,1,-2]", "--breaks", "[1,2]",
            "--printed", str(data_dir / "printed_31m2.json"),
        )
        assert code == 0
        result = json.loads(out)
        assert result["power_of_two"] == 0
        assert len(result["terms"]) == 8
        assert {"mu": [4, 1], "lambda": [[], []], "coeff": 1} in result["terms"]

    def test_split_bcd_from_table(self, data_dir) -> None:
        code, out, _ = _run(
            "split-bcd", "--w", "[3,1,-2]", "--breaks", "[1,2]", "--type", "B",
            "--table", str(data_dir / "table_31m2.json"),
        )
        assert code == 0
        result = json.loads(out)
        assert result["power_of_two"] == 1
        assert len(result["terms"]) == 8

    def test_theorem2_check(self) -> None:
        code, out, _ = _run("theorem2-check", "--w", "[3,1,2]", "--n", "2")
        assert code == 0
        report = json.loads(out)
        assert report["equal"] is True
        assert report["codim"] == report["length"] == 2

    def test_theorem2_check_without_component(self) -> None:
        code, out, _ = _run("theorem2-check", "--w", "[2,4,1,3]", "--n", "3", "--skip-component")
        assert code == 0
        report = json.loads(out)
        assert report["equal"] is True
        assert report["component"] is None
        assert report["wmin"] == report["factorizations"]


class TestRender:
    def test_partial_permutation(self, tmp_path) -> None:
        path = tmp_path / "rho.json"
        path.write_text('{"rows": 2, "cols": 2, "ones": [[1, 2]]}')
        code, out, _ = _run("render", "-i", str(path))
        assert code == 0
        assert out == "0 1\n0 0\n"

    def test_lacing(self, data_dir) -> None:
        code, out, _ = _run("render", "-i", str(data_dir / "lacing_2342.json"))
        assert code == 0
        assert out.strip()


class TestErrors:
    def test_unknown_subcommand(self) -> None:
        code, out, err = _run("frobnicate")
        assert code == 1
        assert out == ""
        assert json.loads(err)["error"] == "UsageError"

    def test_no_subcommand(self) -> None:
        code, _, err = _run()
        assert code == 1
        assert json.loads(err)["error"] == "UsageError"

    def test_malformed_json(self, tmp_path) -> None:
        path = tmp_path / "bad.json"
        path.write_text("{not json")
        code, _, err = _run("codim", "-i", str(path))
        assert code == 1
        assert json.loads(err)["error"] == "DimensionMismatch"

    def test_missing_file(self, tmp_path) -> None:
        code, _, err = _run("codim", "-i", str(tmp_path / "absent.json"))
        assert code == 1
        assert json.loads(err)["error"] == "FileNotFoundError"

    def test_not_a_permutation(self) -> None:
        code, _, err = _run("schubert", "--w", "[1,1]")
        assert code == 1
        assert json.loads(err)["error"] == "NotAPermutation"

    def test_guard_exit_code(self) -> None:
        code, _, err = _run("--max-dim", "2", "schubert", "--w", "[3,2,1]")
        assert code == 2
        payload = json.loads(err)
        assert payload["error"] == "GuardExceeded"
        assert payload["guard"] == "max_dim"

    def test_unknown_sweep_family(self) -> None:
        code, _, err = _run("sweep", "--family", "no-such-family")
        assert code == 1
        assert json.loads(err)["error"] == "UsageError"

    def test_aborted_sweep_prints_partial_report(self) -> None:
        code, out, err = _run("--max-dim", "1", "sweep", "--family", "characterization")
        assert code == 2
        assert out == ""
        payload = json.loads(err)
        assert payload["guard"] == "max_dim"
        assert payload["report"]["family"] == "characterization"
        assert payload["report"]["error"] == payload["message"]
