"""Self-contained dense two-phase simplex with Bland's anti-cycling rule.

Variables are implicitly nonnegative; constraints are =, <= or >= rows.
Arithmetic follows the number types supplied: Fractions/ints run exactly
(all comparisons strict), floats run with a zero tolerance.  Bland's rule
(lowest eligible index enters; ties in the ratio test go to the lowest basis
index) guarantees termination and makes the solved vertex deterministic.

Problem sizes here are tiny (cells of a canonical partition), so the tableau
recomputes reduced costs from scratch each iteration for robustness.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .numeric import FLOAT_TOL, Number, is_exact

RELATIONS = ("=", "<=", ">=")


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Number, ...]
    relation: str
    rhs: Number

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(self.coeffs))
        if self.relation not in RELATIONS:
            raise ValueError(f"relation must be one of {RELATIONS}")


@dataclass(frozen=True)
class LinearProgram:
    n_vars: int
    objective: tuple[Number, ...]
    constraints: tuple[Constraint, ...]
    sense: str = "min"

    def __post_init__(self):
        object.__setattr__(self, "objective", tuple(self.objective))
        object.__setattr__(self, "constraints", tuple(self.constraints))
        if self.sense not in ("min", "max"):
            raise ValueError("sense must be 'min' or 'max'")
        if len(self.objective) != self.n_vars:
            raise ValueError("objective length must equal n_vars")
        for c in self.constraints:
            if len(c.coeffs) != self.n_vars:
                raise ValueError("constraint length must equal n_vars")


@dataclass(frozen=True)
class LPOutcome:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Number | None = None
    point: tuple[Number, ...] | None = None
    #: phase-1 optimum (total artificial mass) when infeasible
    infeasibility: Number | None = None


def _lp_is_exact(lp: LinearProgram) -> bool:
    if not all(is_exact(x) for x in lp.objective):
        return False
    for c in lp.constraints:
        if not is_exact(c.rhs) or not all(is_exact(x) for x in c.coeffs):
            return False
    return True


def solve(lp: LinearProgram, tol: Number | None = None) -> LPOutcome:
    """Optimize; tol=None picks 0 for exact inputs, 1e-9 for floats."""
    if tol is None:
        tol = 0 if _lp_is_exact(lp) else FLOAT_TOL
    exact = tol == 0
    conv = (lambda x: Fraction(x)) if exact else float
    zero = Fraction(0) if exact else 0.0
    one = Fraction(1) if exact else 1.0

    # Rows normalized to nonnegative rhs (negation flips the relation).
    rows = []
    for c in lp.constraints:
        coeffs = [conv(v) for v in c.coeffs]
        rhs = conv(c.rhs)
        rel = c.relation
        if rhs < 0:
            coeffs = [-v for v in coeffs]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "=": "="}[rel]
        rows.append((coeffs, rel, rhs))

    n = lp.n_vars
    n_ineq = sum(1 for _, rel, _ in rows if rel != "=")
    ncols = n + n_ineq
    art_cols: set[int] = set()

    tableau: list[list] = []
    basis: list[int] = []
    slack_at = n
    for coeffs, rel, rhs in rows:
        row = coeffs + [zero] * n_ineq + [rhs]
        if rel == "<=":
            row[slack_at] = one
            basis.append(slack_at)
            slack_at += 1
        elif rel == ">=":
            row[slack_at] = -one
            basis.append(-1)  # placeholder: artificial assigned below
            slack_at += 1
        else:
            basis.append(-1)
        tableau.append(row)

    for i, row in enumerate(tableau):
        if basis[i] == -1:
            col = ncols + len(art_cols)
            art_cols.add(col)
            row.insert(-1, one)
            basis[i] = col
            for j, other in enumerate(tableau):
                if j != i:
                    other.insert(-1, zero)
    ncols += len(art_cols)

    if art_cols:
        phase1_costs = [one if j in art_cols else zero for j in range(ncols)]
        _optimize(tableau, basis, phase1_costs, tol, banned=set())
        residue = sum(
            (tableau[i][-1] for i in range(len(tableau)) if basis[i] in art_cols),
            zero,
        )
        if residue > tol:
            return LPOutcome(status="infeasible", infeasibility=residue)
        _drive_out_artificials(tableau, basis, art_cols, ncols, tol)

    costs = [zero] * ncols
    sign = one if lp.sense == "min" else -one
    for j, v in enumerate(lp.objective):
        costs[j] = sign * conv(v)
    status = _optimize(tableau, basis, costs, tol, banned=art_cols)
    if status == "unbounded":
        return LPOutcome(status="unbounded")

    solution = [zero] * ncols
    for i, b in enumerate(basis):
        solution[b] = tableau[i][-1]
    point = tuple(solution[:n])
    value = sum((conv(c) * x for c, x in zip(lp.objective, point)), zero)
    return LPOutcome(status="optimal", value=value, point=point)


def _optimize(tableau, basis, costs, tol, banned) -> str:
    """Minimize costs over the current feasible basis; Bland's rule."""
    m = len(tableau)
    ncols = len(costs)
    tie_eps = 0 if tol == 0 else 1e-12
    while True:
        in_basis = set(basis)
        cb = [costs[b] for b in basis]
        entering = -1
        for j in range(ncols):
            if j in in_basis or j in banned:
                continue
            reduced = costs[j] - sum(cb[i] * tableau[i][j] for i in range(m))
            if reduced < -tol:
                entering = j
                break
        if entering < 0:
            return "optimal"
        leaving = -1
        best = None
        for i in range(m):
            a = tableau[i][entering]
            if a > tol:
                ratio = tableau[i][-1] / a
                if (
                    best is None
                    or ratio < best - tie_eps
                    or (ratio <= best + tie_eps and basis[i] < basis[leaving])
                ):
                    best = ratio
                    leaving = i
        if leaving < 0:
            return "unbounded"
        _pivot(tableau, basis, leaving, entering)


def _pivot(tableau, basis, r, c):
    pivot_row = tableau[r]
    factor = pivot_row[c]
    tableau[r] = pivot_row = [v / factor for v in pivot_row]
    for i, row in enumerate(tableau):
        if i == r:
            continue
        scale = row[c]
        if scale:
            tableau[i] = [v - scale * p for v, p in zip(row, pivot_row)]
    basis[r] = c


def _drive_out_artificials(tableau, basis, art_cols, ncols, tol):
    """Pivot basic artificials onto real columns; drop redundant rows."""
    pivot_floor = tol if tol else 0
    i = 0
    while i < len(tableau):
        if basis[i] in art_cols:
            for j in range(ncols):
                if j not in art_cols and abs(tableau[i][j]) > pivot_floor:
                    _pivot(tableau, basis, i, j)
                    break
            else:
                del tableau[i]
                del basis[i]
                continue
        i += 1


def maximize(objective: Sequence[Number], constraints: Sequence[Constraint]) -> LPOutcome:
    objective = tuple(objective)
    return solve(LinearProgram(len(objective), objective, tuple(constraints), "max"))


def minimize(objective: Sequence[Number], constraints: Sequence[Constraint]) -> LPOutcome:
    objective = tuple(objective)
    return solve(LinearProgram(len(objective), objective, tuple(constraints), "min"))
