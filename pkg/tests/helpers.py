"""Shared test utilities: canned instances and random-CNF generation."""

import random

from dpllsat import build_formula, build_state, parse_dimacs, solve

# the 7-variable, 5-clause running example:
# (x1|x2|x3) & (-x1|-x2) & (x2|-x3) & (x2|x4|x5) & (x5|x6|x7)
EXAMPLE1_DIMACS = "p cnf 7 5\n1 2 3 0\n-1 -2 0\n2 -3 0\n2 4 5 0\n5 6 7 0\n"


def example1():
    return parse_dimacs(EXAMPLE1_DIMACS)


def random_raw_clauses(rng, variables, clauses, min_len=1, max_len=4):
    """Raw clause lists that may contain duplicates and tautologies."""
    out = []
    for _ in range(clauses):
        length = rng.randint(min_len, max_len)
        clause = []
        for _ in range(length):
            variable = rng.randrange(variables)
            clause.append(variable + 1 if rng.random() < 0.5 else -variable - 1)
        out.append(clause)
    return out


def random_formula(rng, min_vars=3, max_vars=12, min_clauses=1, max_clauses=40,
                   min_len=1, max_len=4):
    variables = rng.randint(min_vars, max_vars)
    clauses = rng.randint(min_clauses, max_clauses)
    raw = random_raw_clauses(rng, variables, clauses, min_len, max_len)
    return build_formula(variables, raw)


def solve_formula(formula, checked=False, tracer=None):
    """Convenience: fresh state, solve, return (result, state)."""
    state = build_state(formula, checked=checked)
    state.tracer = tracer
    return solve(state), state


def raw_brute_force(variables, raw_clauses):
    """Satisfiability of raw (un-normalized) clauses by direct enumeration.

    Independent of both the solver and the package oracle; used to check
    that normalization preserves satisfiability.
    """
    for bits in range(1 << variables):
        model = [(bits >> v) & 1 == 1 for v in range(variables)]
        ok = True
        for clause in raw_clauses:
            if not any(model[l - 1] if l > 0 else not model[-l - 1]
                       for l in clause):
                ok = False
                break
        if ok:
            return True
    return False


def make_rng(seed):
    return random.Random(seed)
