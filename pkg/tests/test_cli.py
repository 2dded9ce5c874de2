import pytest

from dpllsat import brute_force, check_model, parse_dimacs, to_dimacs
from dpllsat.cli import (EXIT_SAT, EXIT_UNKNOWN, EXIT_UNSAT,
                         generate_pigeonhole, generate_queens, main)
from helpers import EXAMPLE1_DIMACS


def write_cnf(tmp_path, text, name="instance.cnf"):
    path = tmp_path / name
    path.write_text(text)
    return str(path)


def parse_model_line(out):
    tokens = []
    for line in out.splitlines():
        if line.startswith("v "):
            tokens.extend(int(t) for t in line[2:].split())
    assert tokens[-1] == 0
    literals = tokens[:-1]
    return [lit > 0 for lit in sorted(literals, key=abs)]


class TestRun:
    def test_example1_sat(self, tmp_path, capsys):
        code = main([write_cnf(tmp_path, EXAMPLE1_DIMACS)])
        out = capsys.readouterr().out
        assert code == EXIT_SAT
        assert "s SATISFIABLE" in out
        model = parse_model_line(out)
        assert check_model(parse_dimacs(EXAMPLE1_DIMACS), model)

    def test_hole6_unsat(self, tmp_path, capsys):
        path = write_cnf(tmp_path, to_dimacs(generate_pigeonhole(6)))
        code = main([path])
        assert code == EXIT_UNSAT
        assert capsys.readouterr().out.strip() == "s UNSATISFIABLE"

    def test_empty_clause_file(self, tmp_path, capsys):
        code = main([write_cnf(tmp_path, "p cnf 1 1\n0\n")])
        assert code == EXIT_UNSAT
        assert capsys.readouterr().out.strip() == "s UNSATISFIABLE"

    def test_parse_error_exit_code(self, tmp_path, capsys):
        code = main([write_cnf(tmp_path, "p cnf bogus\n")])
        assert code == 1
        assert "error" in capsys.readouterr().err

    def test_missing_file(self, capsys):
        assert main(["/nonexistent/a.cnf"]) == 1

    def test_clause_count_mismatch_warns_on_stderr(self, tmp_path, capsys):
        code = main([write_cnf(tmp_path, "p cnf 2 9\n1 0\n")])
        captured = capsys.readouterr()
        assert code == EXIT_SAT
        assert "warning" in captured.err

    def test_timeout_prints_unknown(self, tmp_path, capsys):
        # pigeonhole with 10 holes is far beyond this solver in 50 ms
        path = write_cnf(tmp_path, to_dimacs(generate_pigeonhole(10)))
        code = main(["--time-limit", "0.05", path])
        assert code == EXIT_UNKNOWN
        assert capsys.readouterr().out.strip() == "s UNKNOWN"

    def test_checked_and_trace_flags(self, tmp_path, capsys):
        code = main(["--checked", "--trace",
                     write_cnf(tmp_path, EXAMPLE1_DIMACS)])
        out = capsys.readouterr().out
        assert code == EXIT_SAT
        assert "c decide x1=T" in out
        assert "c propagate x2=F" in out

    def test_exit_status_matches_verdict_line(self, tmp_path, capsys):
        for text, expected in [(EXAMPLE1_DIMACS, EXIT_SAT),
                               ("p cnf 1 2\n1 0\n-1 0\n", EXIT_UNSAT)]:
            code = main([write_cnf(tmp_path, text)])
            out = capsys.readouterr().out
            if code == EXIT_SAT:
                assert "s SATISFIABLE" in out
            else:
                assert "s UNSATISFIABLE" in out
            assert code == expected

    def test_determinism_byte_identical_output(self, tmp_path, capsys):
        path = write_cnf(tmp_path, EXAMPLE1_DIMACS)
        main([path])
        first = capsys.readouterr().out
        main([path])
        second = capsys.readouterr().out
        assert first == second


class TestGenerators:
    def test_hole6_dimensions(self):
        f = generate_pigeonhole(6)
        assert f.variables_count == 42
        assert len(f.clauses) == 133

    def test_hole1_exact_clauses(self):
        f = generate_pigeonhole(1)
        assert f.variables_count == 2
        assert f.clauses == ((1,), (2,), (-1, -2))

    def test_hole2_unsat_by_oracle(self):
        assert brute_force(generate_pigeonhole(2)) is None

    def test_queens16_size(self):
        assert generate_queens(16).variables_count == 256

    def test_queens2_unsat_by_oracle(self):
        assert brute_force(generate_queens(2)) is None

    def test_queens4_sat_with_checked_model(self):
        f = generate_queens(4)
        model = brute_force(f)
        assert model is not None
        assert check_model(f, model)

    @pytest.mark.parametrize("holes", [1, 2, 3])
    def test_php_verdicts_match_oracle(self, holes):
        assert brute_force(generate_pigeonhole(holes)) is None

    def test_invalid_sizes_rejected(self):
        with pytest.raises(ValueError):
            generate_pigeonhole(0)
        with pytest.raises(ValueError):
            generate_queens(0)


class TestGenSubcommand:
    def test_gen_php_emits_dimacs(self, capsys):
        assert main(["gen", "php", "6"]) == 0
        out = capsys.readouterr().out
        f = parse_dimacs(out)
        assert f == generate_pigeonhole(6)

    def test_gen_queens_emits_dimacs(self, capsys):
        assert main(["gen", "queens", "4"]) == 0
        f = parse_dimacs(capsys.readouterr().out)
        assert f == generate_queens(4)

    def test_gen_output_solvable_end_to_end(self, tmp_path, capsys):
        assert main(["gen", "queens", "5"]) == 0
        text = capsys.readouterr().out
        path = write_cnf(tmp_path, text)
        code = main([path])
        out = capsys.readouterr().out
        assert code == EXIT_SAT
        model = parse_model_line(out)
        assert check_model(parse_dimacs(text), model)
