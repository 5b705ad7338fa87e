"""Depth-first constraint search shared by the enumerators."""

from __future__ import annotations

from .errors import SearchBudgetExceeded


class Budget:
    """Counts candidate assignments and raises once ``cap`` is exceeded."""

    def __init__(self, cap: int, what: str):
        self.cap = cap
        self.used = 0
        self.what = what

    def spend(self, k: int = 1):
        self.used += k
        if self.used > self.cap:
            raise SearchBudgetExceeded(self.what, self.cap)


def solve(order, domain, constraints, budget: Budget):
    """Yield every assignment of ``order`` satisfying all constraints.

    ``domain(var, assignment)`` lists candidates for ``var`` given the
    assignment so far. Each constraint is ``(vars, predicate)``; the
    predicate runs once all of its variables are assigned.
    """
    pos = {v: i for i, v in enumerate(order)}
    due: list[list] = [[] for _ in order]
    for vars_, pred in constraints:
        due[max(pos[v] for v in vars_)].append(pred)
    assignment: dict = {}
    n = len(order)

    def walk(i):
        if i == n:
            yield dict(assignment)
            return
        var = order[i]
        for value in domain(var, assignment):
            budget.spend()
            assignment[var] = value
            if all(pred(assignment) for pred in due[i]):
                yield from walk(i + 1)
        assignment.pop(var, None)

    yield from walk(0)
