"""Layered assignment trail.

Each decision opens a new layer holding the decision assignment followed by
the assignments forced by unit propagation, so backtracking knows exactly
which assignments to revert.
"""

from ._contracts import require


class Trail:
    """Fixed-capacity stack of assignment layers.

    Capacity is variables_count layers since every layer holds at least one
    assignment of a distinct variable.  Entries are (variable, bool) pairs in
    push order.
    """

    def __init__(self, variables_count):
        require(variables_count > 0, "variables_count must be positive")
        self.variables_count = variables_count
        self.layers = [[] for _ in range(variables_count)]
        self.size = 0
        self._assigned = set()  # variables currently on the trail

    def new_layer(self):
        """Open a new (empty) decision layer."""
        require(self.size < self.variables_count, "trail is full")
        require(self.size == 0 or len(self.layers[self.size - 1]) > 0,
                "current layer is empty, push an entry first")
        self.size += 1

    def push_entry(self, variable, value):
        """Append an assignment to the current layer."""
        require(self.size > 0, "no open layer")
        require(0 <= variable < self.variables_count,
                "variable %r out of range" % (variable,))
        require(variable not in self._assigned,
                "variable %d already on the trail" % variable)
        self.layers[self.size - 1].append((variable, value))
        self._assigned.add(variable)

    def pop_layer(self):
        """Remove the last layer and return its entries in push order."""
        require(self.size > 0, "trail is empty")
        layer = self.layers[self.size - 1]
        require(len(layer) > 0, "last layer is empty")
        entries = list(layer)
        layer.clear()
        self.size -= 1
        for variable, _ in entries:
            self._assigned.discard(variable)
        return entries

    def last_layer(self):
        require(self.size > 0, "trail is empty")
        return list(self.layers[self.size - 1])

    def __contains__(self, variable):
        return variable in self._assigned

    def __len__(self):
        return len(self._assigned)

    def entries(self):
        """All (variable, value) pairs on active layers, oldest first."""
        out = []
        for i in range(self.size):
            out.extend(self.layers[i])
        return out

    def dump(self):
        """One line per active layer, entries as (var, T|F)."""
        lines = []
        for i in range(self.size):
            cells = " ".join("(%d, %s)" % (v, "T" if b else "F")
                             for v, b in self.layers[i])
            lines.append("layer %d: %s" % (i, cells))
        return "\n".join(lines)


def check_trail_invariants(trail):
    """True iff the trail satisfies all of its structural invariants."""
    n = trail.variables_count
    if not (0 <= trail.size <= n) or len(trail.layers) != n:
        return False
    # used layers below the top are nonempty, unused layers are empty
    for i in range(trail.size - 1):
        if not trail.layers[i]:
            return False
    for i in range(trail.size, n):
        if trail.layers[i]:
            return False
    # each variable at most once, in range, with a boolean value
    seen = set()
    for i in range(trail.size):
        for variable, value in trail.layers[i]:
            if not (0 <= variable < n) or not isinstance(value, bool):
                return False
            if variable in seen:
                return False
            seen.add(variable)
    # the assigned-variable cache is the set view of the layers
    if seen != trail._assigned:
        return False
    return True
