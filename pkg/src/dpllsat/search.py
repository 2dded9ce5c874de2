"""Recursive DPLL search: literal choice, unit propagation, decide/undo.

The search recurses once per decision.  Unit propagation runs as a work
queue inside the current layer, so recursion depth is bounded by the number
of variables.
"""

import sys
import time
from dataclasses import dataclass

from ._contracts import ContractError, require
from .cnf import decode_literal
from .state import (TRUE, UNSET, get_literal_value, has_empty_clause,
                    is_formula_satisfied, set_variable, undo_last_layer)


class TimeLimitReached(Exception):
    """Raised when a cooperative solve deadline expires."""


@dataclass(frozen=True)
class SolveResult:
    satisfiable: bool
    model: tuple = None  # complete assignment, present iff satisfiable

    @property
    def verdict(self):
        return "SAT" if self.satisfiable else "UNSAT"


class Tracer:
    """Collects search events for golden-trace and lemma-level tests.

    Events:
      ("decide", variable, value)
      ("propagate", variable, value, clause_index, tau_before)
      ("backtrack", trail_size)
      ("sat", tau)
      ("branch_unsat", tau)
    Assignment snapshots are recorded only with snapshot_assignments=True;
    otherwise those slots hold None.
    """

    def __init__(self, snapshot_assignments=False):
        self.events = []
        self.snapshot_assignments = snapshot_assignments

    def emit(self, event):
        self.events.append(event)

    def _tau(self, state):
        if self.snapshot_assignments:
            return tuple(state.truth_assignment)
        return None


def choose_literal(state):
    """First unset literal of the lowest-index unsatisfied clause."""
    require(not has_empty_clause(state), "conflict present, nothing to decide")
    tau = state.truth_assignment
    for index, count in enumerate(state.true_literals_count):
        if count == 0:
            for literal in state.formula.clauses[index]:
                if get_literal_value(tau, literal) == UNSET:
                    return literal
    raise ContractError("no unsatisfied clause, nothing to decide")


def set_literal(state, literal, value):
    """Make `literal` evaluate to `value`, then unit-propagate to quiescence.

    All forced assignments land on the current trail layer.  Propagation
    stops early if a clause becomes fully false; the caller detects the
    conflict via has_empty_clause.
    """
    tau = state.truth_assignment
    require(get_literal_value(tau, literal) == UNSET,
            "literal %d is already set" % literal)
    before = state.unset_count
    variable, positive = decode_literal(literal)
    assigned = value if positive else not value
    tracer = state.tracer
    set_variable(state, variable, assigned)
    clauses = state.formula.clauses
    lengths = state.clause_lengths
    true_counts = state.true_literals_count
    false_counts = state.false_literals_count
    queue = [(variable, assigned)]
    head = 0
    while head < len(queue):
        var, val = queue[head]
        head += 1
        # clauses where a literal of var just became false
        if val:
            candidates = state.negative_occurrences[var]
        else:
            candidates = state.positive_occurrences[var]
        for index in candidates:
            if true_counts[index] > 0:
                continue
            false_count = false_counts[index]
            length = lengths[index]
            if false_count == length:
                # conflict: remaining propagation is pointless
                require(state.unset_count < before,
                        "propagation must assign at least one variable")
                return
            if false_count == length - 1:
                for forced in clauses[index]:
                    if get_literal_value(tau, forced) == UNSET:
                        break
                forced_variable, forced_positive = decode_literal(forced)
                if tracer is not None:
                    tracer.emit(("propagate", forced_variable,
                                 forced_positive, index, tracer._tau(state)))
                set_variable(state, forced_variable, forced_positive)
                queue.append((forced_variable, forced_positive))
    require(state.unset_count < before,
            "propagation must assign at least one variable")


def complete_model(truth_assignment):
    """Total assignment extending tau, unset variables defaulting to false."""
    return tuple(value == TRUE for value in truth_assignment)


def step(state, literal, value, deadline=None, depth=0):
    """One decision: new layer, set the literal, recurse, undo the layer.

    Returns the child verdict; the state is restored exactly, even on SAT.
    """
    require(literal != 0, "invalid literal")
    before = state.snapshot() if state.checked else None
    unset_before = state.unset_count
    variable, positive = decode_literal(literal)
    state.trail.new_layer()
    if state.tracer is not None:
        state.tracer.emit(("decide", variable,
                           value if positive else not value))
    set_literal(state, literal, value)
    require(state.unset_count < unset_before,
            "decision must reduce the unset-variable count")
    result = _solve(state, deadline, depth + 1)
    undo_last_layer(state)
    if state.tracer is not None:
        state.tracer.emit(("backtrack", state.trail.size))
    if state.checked and state.snapshot() != before:
        raise ContractError("step did not restore the state exactly")
    return result


def _solve(state, deadline, depth):
    if deadline is not None and time.monotonic() >= deadline:
        raise TimeLimitReached()
    require(depth <= state.formula.variables_count,
            "recursion depth exceeds variable count")
    if has_empty_clause(state):
        return SolveResult(False)
    if is_formula_satisfied(state):
        if state.tracer is not None:
            state.tracer.emit(("sat", tuple(state.truth_assignment)))
        return SolveResult(True, complete_model(state.truth_assignment))
    literal = choose_literal(state)
    result = step(state, literal, True, deadline, depth)
    if result.satisfiable:
        return result
    result = step(state, literal, False, deadline, depth)
    if not result.satisfiable and state.tracer is not None:
        state.tracer.emit(("branch_unsat",
                           tuple(state.truth_assignment)
                           if state.tracer.snapshot_assignments else None))
    return result


def solve(state, time_limit=None):
    """Full DPLL search from the current (usually all-unset) state.

    Returns SolveResult; the state is left exactly as it was on entry.
    Raises TimeLimitReached if the optional time limit (seconds) expires;
    the state is then not guaranteed to be restored.
    """
    deadline = None
    if time_limit is not None:
        require(time_limit > 0, "time limit must be positive")
        deadline = time.monotonic() + time_limit
    needed = 8 * state.formula.variables_count + 200
    if sys.getrecursionlimit() < needed:
        sys.setrecursionlimit(needed)
    return _solve(state, deadline, 0)
