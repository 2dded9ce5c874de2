"""Command-line front end and benchmark instance generators.

Output and exit codes follow the SAT-competition convention:
`s SATISFIABLE` with `v` model lines and exit 10, `s UNSATISFIABLE` and exit
20, `s UNKNOWN` and exit 0 on timeout, exit 1 on input errors.
"""

import argparse
import sys
import warnings
from itertools import combinations

from . import __version__
from .cnf import DimacsError, DimacsWarning, build_formula, parse_dimacs, to_dimacs
from .oracle import check_model
from .search import TimeLimitReached, Tracer, solve
from .state import build_state

EXIT_SAT = 10
EXIT_UNSAT = 20
EXIT_UNKNOWN = 0
EXIT_ERROR = 1


def generate_pigeonhole(holes):
    """PHP instance: holes+1 pigeons into `holes` holes (unsatisfiable).

    Variable p*holes+h (0-based, pigeon-major) means pigeon p sits in hole
    h.  Clauses: each pigeon in some hole, no two pigeons share a hole.
    """
    if holes < 1:
        raise ValueError("holes must be >= 1")
    pigeons = holes + 1
    clauses = []
    for p in range(pigeons):
        clauses.append([p * holes + h + 1 for h in range(holes)])
    for h in range(holes):
        for p1, p2 in combinations(range(pigeons), 2):
            clauses.append([-(p1 * holes + h + 1), -(p2 * holes + h + 1)])
    return build_formula(pigeons * holes, clauses)


def generate_queens(n):
    """N-queens instance with one variable per board cell.

    At least one queen per row; at most one per row, column, and diagonal
    (pairwise encoding).  Satisfiable iff n-queens has a solution.
    """
    if n < 1:
        raise ValueError("n must be >= 1")

    def var(row, col):
        return row * n + col + 1

    clauses = []
    for row in range(n):
        clauses.append([var(row, col) for col in range(n)])
        for c1, c2 in combinations(range(n), 2):
            clauses.append([-var(row, c1), -var(row, c2)])
    for col in range(n):
        for r1, r2 in combinations(range(n), 2):
            clauses.append([-var(r1, col), -var(r2, col)])
    for row in range(n):
        for col in range(n):
            for d in range(1, n):
                if row + d < n and col + d < n:
                    clauses.append([-var(row, col), -var(row + d, col + d)])
                if row + d < n and col - d >= 0:
                    clauses.append([-var(row, col), -var(row + d, col - d)])
    return build_formula(n * n, clauses)


def _format_model(model):
    """`v` lines with 1-based signed literals, terminated by 0."""
    literals = [str(i + 1) if value else str(-(i + 1))
                for i, value in enumerate(model)]
    literals.append("0")
    lines = []
    for start in range(0, len(literals), 20):
        lines.append("v " + " ".join(literals[start:start + 20]))
    return "\n".join(lines)


def run(input_path, checked=False, time_limit=None, trace=False,
        verify_model=True, out=None, err=None):
    """Parse, solve, and report one instance; returns the process exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always", DimacsWarning)
            if input_path == "-":
                formula = parse_dimacs(sys.stdin.read())
            else:
                with open(input_path) as handle:
                    formula = parse_dimacs(handle.read())
        for warning in caught:
            print("c warning: %s" % warning.message, file=err)
    except OSError as exc:
        print("error: %s" % exc, file=err)
        return EXIT_ERROR
    except DimacsError as exc:
        print("error: %s" % exc, file=err)
        return EXIT_ERROR

    if formula.trivially_unsat:
        print("s UNSATISFIABLE", file=out)
        return EXIT_UNSAT

    state = build_state(formula, checked=checked)
    tracer = Tracer() if trace else None
    state.tracer = tracer
    try:
        result = solve(state, time_limit=time_limit)
    except TimeLimitReached:
        print("s UNKNOWN", file=out)
        return EXIT_UNKNOWN

    if trace:
        for event in tracer.events:
            if event[0] == "decide":
                print("c decide x%d=%s" % (event[1] + 1,
                                           "T" if event[2] else "F"), file=out)
            elif event[0] == "propagate":
                print("c propagate x%d=%s (clause %d)"
                      % (event[1] + 1, "T" if event[2] else "F", event[3] + 1),
                      file=out)
            elif event[0] == "backtrack":
                print("c backtrack to level %d" % event[1], file=out)

    if result.satisfiable:
        if verify_model and not check_model(formula, result.model):
            print("error: produced model failed independent verification",
                  file=err)
            return EXIT_ERROR
        print("s SATISFIABLE", file=out)
        print(_format_model(result.model), file=out)
        return EXIT_SAT
    print("s UNSATISFIABLE", file=out)
    return EXIT_UNSAT


def _gen_main(argv, out=None):
    out = out or sys.stdout
    parser = argparse.ArgumentParser(
        prog="dpllsat gen", description="emit a benchmark instance as DIMACS")
    sub = parser.add_subparsers(dest="family", required=True)
    php = sub.add_parser("php", help="pigeonhole principle (UNSAT)")
    php.add_argument("holes", type=int)
    queens = sub.add_parser("queens", help="n-queens (SAT for n=1 and n>=4)")
    queens.add_argument("n", type=int)
    args = parser.parse_args(argv)
    try:
        if args.family == "php":
            formula = generate_pigeonhole(args.holes)
        else:
            formula = generate_queens(args.n)
    except ValueError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_ERROR
    out.write(to_dimacs(formula))
    return 0


def main(argv=None):
    argv = list(sys.argv[1:] if argv is None else argv)
    if argv and argv[0] == "gen":
        return _gen_main(argv[1:])
    parser = argparse.ArgumentParser(
        prog="dpllsat",
        description="DPLL SAT solver (DIMACS in, SAT-competition output)")
    parser.add_argument("--version", action="version", version=__version__)
    parser.add_argument("--checked", action="store_true",
                        help="recheck all data-structure invariants after "
                             "every mutation (slow)")
    parser.add_argument("--time-limit", type=float, metavar="S",
                        help="give up after S seconds (prints s UNKNOWN)")
    parser.add_argument("--trace", action="store_true",
                        help="print decision/propagation events as comments")
    parser.add_argument("--no-verify-model", dest="verify_model",
                        action="store_false",
                        help="skip independent re-checking of SAT models")
    parser.add_argument("input", metavar="file.cnf|-",
                        help="DIMACS CNF file, or - for standard input")
    args = parser.parse_args(argv)
    if args.time_limit is not None and args.time_limit <= 0:
        parser.error("--time-limit must be positive")
    return run(args.input, checked=args.checked, time_limit=args.time_limit,
               trace=args.trace, verify_model=args.verify_model)


def entry():
    sys.exit(main())


if __name__ == "__main__":
    entry()
