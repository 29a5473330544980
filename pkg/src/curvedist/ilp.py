"""Integer program over arc-class weights.

Every elementary circuit of an arc system's dual graph must be
crossed often enough to fill (threshold 4 at genus 2, 2g-1 above),
and the weights on arcs with both ends on one boundary circle must
balance with the other circle's.  The problems are tiny (a handful of
variables, objectives below a few dozen), so all-solution enumeration
is a bounded search with constraint propagation — no external solver.
"""

from __future__ import annotations

from dataclasses import dataclass

from .circuits import DualGraph, elementary_circuits
from .errors import InfeasibleError, InputError

PP = "pp"  # both endpoints on the bottom boundary circle
MM = "mm"  # both endpoints on the top boundary circle
PM = "pm"  # one endpoint on each


@dataclass(frozen=True)
class ArcClass:
    """One weighted arc class; ``index`` is the 1-based w-subscript."""

    index: int
    kind: str  # PP, MM or PM
    orientation: str = "parallel"  # multi-copy pairing, see template module

    def __post_init__(self):
        if self.kind not in (PP, MM, PM):
            raise InputError(f"unknown arc kind {self.kind!r}")


@dataclass(frozen=True)
class ConstraintSystem:
    """Circuit inequalities plus the boundary balance equality.

    ``inequalities`` holds 1-based variable index tuples, one per
    elementary circuit; each sums to at least ``threshold``.
    ``balance`` is a pair (pp indices, mm indices) with equal sums,
    omitted when both sides are empty.
    """

    n_vars: int
    inequalities: tuple[tuple[int, ...], ...]
    threshold: int
    balance: tuple[tuple[int, ...], tuple[int, ...]] | None = None

    def render(self) -> str:
        lines = [
            " + ".join(f"w{i}" for i in ineq) + f" >= {self.threshold}"
            for ineq in self.inequalities
        ]
        if self.balance is not None:
            pp, mm = self.balance
            lines.append(
                " + ".join(f"w{i}" for i in pp)
                + " = "
                + " + ".join(f"w{i}" for i in mm)
            )
        lines.append(
            ", ".join(f"w{i}" for i in range(1, self.n_vars + 1)) + " >= 0"
        )
        return "\n".join(lines)

    def satisfied_by(self, weights: tuple[int, ...]) -> bool:
        if len(weights) != self.n_vars or any(w < 0 for w in weights):
            return False
        for ineq in self.inequalities:
            if sum(weights[i - 1] for i in ineq) < self.threshold:
                return False
        if self.balance is not None:
            pp, mm = self.balance
            if sum(weights[i - 1] for i in pp) != sum(weights[i - 1] for i in mm):
                return False
        return True


def filling_threshold(genus: int) -> int:
    """Minimal intersection number of a filling pair on that genus."""
    if genus < 2:
        raise InputError(f"threshold defined for genus >= 2, got {genus}")
    return 4 if genus == 2 else 2 * genus - 1


def build_constraints(
    arc_classes: list[ArcClass], graph: DualGraph, genus: int
) -> ConstraintSystem:
    """Constraint system of a dual graph whose edges carry class indices."""
    circuits = elementary_circuits(graph)
    if not circuits:
        raise InputError("dual graph has no circuits", code="NO_CIRCUITS")
    inequalities = tuple(
        tuple(sorted(c.label_set)) for c in circuits
    )
    pp = tuple(a.index for a in arc_classes if a.kind == PP)
    mm = tuple(a.index for a in arc_classes if a.kind == MM)
    balance = (pp, mm) if (pp or mm) else None
    return ConstraintSystem(
        n_vars=len(arc_classes),
        inequalities=inequalities,
        threshold=filling_threshold(genus),
        balance=balance,
    )


def enumerate_solutions(
    system: ConstraintSystem, objective: int
) -> list[tuple[int, ...]]:
    """All weight vectors with total exactly ``objective``, lex order.

    Depth-first over variables with pruning: the remaining budget must
    still be able to satisfy every unmet inequality through some
    unassigned variable, and the balance gap must stay repayable on
    the short side.  The final variable's value is forced.
    """
    if objective < 0:
        raise InputError("objective must be nonnegative")
    n = system.n_vars
    m = len(system.inequalities)
    threshold = system.threshold
    var_ineqs: list[list[int]] = [[] for _ in range(n)]
    for ci, ineq in enumerate(system.inequalities):
        for i in ineq:
            var_ineqs[i - 1].append(ci)
    pp_set: set[int] = set()
    mm_set: set[int] = set()
    if system.balance is not None:
        pp_set = {i - 1 for i in system.balance[0]}
        mm_set = {i - 1 for i in system.balance[1]}

    ineq_sum = [0] * m
    ineq_open = [len(ineq) for ineq in system.inequalities]
    out: list[tuple[int, ...]] = []
    current = [0] * n

    def feasible(remaining: int, gap: int, pp_open: int, mm_open: int) -> bool:
        for ci in range(m):
            if ineq_sum[ci] < threshold:
                if ineq_open[ci] == 0 or ineq_sum[ci] + remaining < threshold:
                    return False
        if gap > 0 and (mm_open == 0 or gap > remaining):
            return False
        if gap < 0 and (pp_open == 0 or -gap > remaining):
            return False
        return True

    def assign(v: int, remaining: int, gap: int, pp_open: int, mm_open: int):
        if v == n:
            vec = tuple(current)
            assert system.satisfied_by(vec)
            out.append(vec)
            return
        npp = pp_open - (v in pp_set)
        nmm = mm_open - (v in mm_set)
        for ci in var_ineqs[v]:
            ineq_open[ci] -= 1
        values = range(remaining + 1) if v < n - 1 else (remaining,)
        for value in values:
            current[v] = value
            for ci in var_ineqs[v]:
                ineq_sum[ci] += value
            g = gap
            if v in pp_set:
                g += value
            if v in mm_set:
                g -= value
            if feasible(remaining - value, g, npp, nmm):
                assign(v + 1, remaining - value, g, npp, nmm)
            for ci in var_ineqs[v]:
                ineq_sum[ci] -= value
        current[v] = 0
        for ci in var_ineqs[v]:
            ineq_open[ci] += 1

    if feasible(objective, 0, len(pp_set), len(mm_set)):
        assign(0, objective, 0, len(pp_set), len(mm_set))
    return out


def minimize(
    system: ConstraintSystem, p_limit: int | None = None
) -> tuple[int, list[tuple[int, ...]]]:
    """Least feasible objective and every vector attaining it."""
    if p_limit is None:
        p_limit = system.threshold * system.n_vars + system.n_vars
    for p in range(p_limit + 1):
        sols = enumerate_solutions(system, p)
        if sols:
            return p, sols
    raise InfeasibleError(f"no solution with objective <= {p_limit}")
