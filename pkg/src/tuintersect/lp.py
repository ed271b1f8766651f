"""Exact bounded-variable primal simplex over the rationals.

Minimizes ``c x`` subject to ``A x = b`` and ``lower <= x <= upper``.  All
arithmetic uses Python ints and :class:`fractions.Fraction`, so returned
points satisfy the constraints exactly.  Pricing follows Bland's rule
(smallest eligible index enters, smallest index leaves among ratio ties),
which rules out cycling.

The basis inverse is kept as a dense m x m matrix and updated by a rank-one
pivot.  On totally unimodular data every pivot element is +-1 and every
number stays an int, which is what keeps this fast enough in pure Python.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Optional, Sequence

from .errors import DimensionMismatch, NonIntegralEntry, TUIntersectError, Unbounded

Number = Rational  # int or Fraction


def _num(v) -> Number:
    if isinstance(v, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(v, int):
        return v
    q = v if isinstance(v, Fraction) else Fraction(v)
    return q.numerator if q.denominator == 1 else q


def _div(a, b):
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        if not r:
            return q
    q = Fraction(a, b)
    return q.numerator if q.denominator == 1 else q


def _norm(v):
    if type(v) is Fraction and v.denominator == 1:
        return v.numerator
    return v


@dataclass(frozen=True)
class LpProblem:
    """``min objective . x  s.t.  a_eq x = b_eq,  lower <= x <= upper``.

    ``upper`` entries may be None (no upper bound); lower bounds must be finite.
    """

    a_eq: Sequence[Sequence[Number]]
    b_eq: Sequence[Number]
    lower: Sequence[Number]
    upper: Sequence[Optional[Number]]
    objective: Sequence[Number]

    def __post_init__(self):
        m = len(self.a_eq)
        if len(self.b_eq) != m:
            raise DimensionMismatch(f"b_eq has length {len(self.b_eq)}, a_eq has {m} rows")
        num = len(self.objective)
        for i, row in enumerate(self.a_eq):
            if len(row) != num:
                raise DimensionMismatch(f"row {i} of a_eq has length {len(row)}, expected {num}")
        for name in ("lower", "upper"):
            if len(getattr(self, name)) != num:
                raise DimensionMismatch(f"{name} has length {len(getattr(self, name))}, expected {num}")
        for j, (lo, up) in enumerate(zip(self.lower, self.upper)):
            if lo is None:
                raise DimensionMismatch(f"variable {j} has no lower bound")
            if up is not None and lo > up:
                raise DimensionMismatch(f"variable {j} has lower bound {lo} > upper bound {up}")

    @property
    def num_vars(self) -> int:
        return len(self.objective)

    @property
    def num_rows(self) -> int:
        return len(self.a_eq)


class LpStatus(enum.Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"


@dataclass(frozen=True)
class LpOutcome:
    status: LpStatus
    solution: tuple = ()
    objective_value: Optional[Number] = None
    # structural variables that are basic at the returned vertex
    basis: tuple[int, ...] = ()
    iterations: int = field(default=0, compare=False)

    @property
    def optimal(self) -> bool:
        return self.status is LpStatus.OPTIMAL


class OptimalityCertificateError(TUIntersectError):
    pass


class _Simplex:
    def __init__(self, p: LpProblem):
        m, num = p.num_rows, p.num_vars
        self.m, self.num = m, num
        cols: list[list[tuple[int, Number]]] = [[] for _ in range(num)]
        for i, row in enumerate(p.a_eq):
            for j, v in enumerate(row):
                if v:
                    cols[j].append((i, _num(v)))
        lower = [_num(v) for v in p.lower]
        upper = [None if v is None else _num(v) for v in p.upper]
        x = list(lower)
        resid = [_num(v) for v in p.b_eq]
        for j, col in enumerate(cols):
            if x[j]:
                for i, v in col:
                    resid[i] -= v * x[j]
        # one artificial per row, signed so that it starts at |residual| >= 0
        for i in range(m):
            sign = 1 if resid[i] >= 0 else -1
            cols.append([(i, sign)])
            lower.append(0)
            upper.append(None)
            x.append(abs(resid[i]))
        self.cols, self.lower, self.upper, self.x = cols, lower, upper, x
        self.basis = list(range(num, num + m))
        self.binv = [[0] * m for _ in range(m)]
        for i in range(m):
            self.binv[i][i] = cols[num + i][0][1]
        self.is_basic = [False] * num + [True] * m
        self.iterations = 0

    def reduced_cost(self, j: int, y: list) -> Number:
        d = self.cost[j]
        for i, v in self.cols[j]:
            if y[i]:
                d -= y[i] * v
        return d

    def duals(self) -> list:
        m, binv = self.m, self.binv
        y = [0] * m
        for r, j in enumerate(self.basis):
            c = self.cost[j]
            if c:
                row = binv[r]
                for i in range(m):
                    if row[i]:
                        y[i] += c * row[i]
        return [_norm(v) for v in y]

    def run(self, cost: list) -> bool:
        """Iterate to optimality under ``cost``; False when unbounded."""
        self.cost = cost
        m, x, lower, upper = self.m, self.x, self.lower, self.upper
        total = len(self.cols)
        while True:
            y = self.duals()
            enter, direction = -1, 0
            for j in range(total):
                if self.is_basic[j]:
                    continue
                up = upper[j]
                if up is not None and up == lower[j]:
                    continue
                dj = self.reduced_cost(j, y)
                if dj < 0 and (up is None or x[j] < up):
                    enter, direction = j, 1
                    break
                if dj > 0 and x[j] > lower[j]:
                    enter, direction = j, -1
                    break
            if enter < 0:
                return True

            # column of the entering variable in basis coordinates
            alpha = [0] * m
            for i, v in self.cols[enter]:
                for r in range(m):
                    b_ri = self.binv[r][i]
                    if b_ri:
                        alpha[r] += b_ri * v
            alpha = [_norm(a) for a in alpha]

            # x_B moves by -direction * alpha * step
            best_t, best_var, best_row, best_at_upper = None, None, -1, False
            if upper[enter] is not None:
                best_t, best_var = upper[enter] - lower[enter], enter
                best_at_upper = direction > 0
            for r in range(m):
                a = alpha[r]
                if not a:
                    continue
                j = self.basis[r]
                rate = -a if direction > 0 else a
                if rate < 0:
                    t, at_upper = _div(x[j] - lower[j], -rate), False
                elif upper[j] is not None:
                    t, at_upper = _div(upper[j] - x[j], rate), True
                else:
                    continue
                if best_t is None or t < best_t or (t == best_t and j < best_var):
                    best_t, best_var, best_row, best_at_upper = t, j, r, at_upper
            if best_t is None:
                return False

            self.iterations += 1
            t = best_t
            if t:
                x[enter] = _norm(x[enter] + direction * t)
                for r in range(m):
                    if alpha[r]:
                        j = self.basis[r]
                        x[j] = _norm(x[j] - direction * alpha[r] * t)
            if best_var == enter:
                x[enter] = upper[enter] if best_at_upper else lower[enter]
                continue
            leave = best_var
            x[leave] = upper[leave] if best_at_upper else lower[leave]
            self._pivot(best_row, alpha)
            self.is_basic[leave] = False
            self.is_basic[enter] = True
            self.basis[best_row] = enter

    def _pivot(self, r: int, alpha: list) -> None:
        binv = self.binv
        piv = alpha[r]
        prow = binv[r]
        if piv != 1:
            prow = [_div(v, piv) if v else 0 for v in prow]
            binv[r] = prow
        nz = [(i, v) for i, v in enumerate(prow) if v]
        for k in range(self.m):
            f = alpha[k]
            if k == r or not f:
                continue
            row = binv[k]
            for i, v in nz:
                row[i] = _norm(row[i] - f * v)

    def check_certificate(self) -> None:
        y = self.duals()
        for j in range(len(self.cols)):
            if self.is_basic[j]:
                if self.reduced_cost(j, y) != 0:
                    raise OptimalityCertificateError(f"basic variable {j} has nonzero reduced cost")
                continue
            up = self.upper[j]
            if up is not None and up == self.lower[j]:
                continue
            dj = self.reduced_cost(j, y)
            if self.x[j] == self.lower[j] and dj < 0:
                raise OptimalityCertificateError(f"variable {j} at lower bound has reduced cost {dj} < 0")
            if self.x[j] != self.lower[j] and (up is None or self.x[j] != up):
                raise OptimalityCertificateError(f"nonbasic variable {j} is not at a bound")
            if up is not None and self.x[j] == up and dj > 0:
                raise OptimalityCertificateError(f"variable {j} at upper bound has reduced cost {dj} > 0")


def solve_lp(p: LpProblem, *, check_certificate: bool = False) -> LpOutcome:
    """Solve ``p`` exactly; return an optimal basic solution or an infeasible outcome.

    Raises :class:`Unbounded` if some unbounded-above variable makes the
    objective unbounded below.  With ``check_certificate`` the final basis is
    re-checked for dual feasibility.
    """
    s = _Simplex(p)
    num, m = s.num, s.m
    phase1 = [0] * num + [1] * m
    s.run(phase1)
    if any(s.x[num:]):
        return LpOutcome(LpStatus.INFEASIBLE, iterations=s.iterations)
    # artificials are pinned to zero from here on; basic ones sit on redundant rows
    for j in range(num, num + m):
        s.upper[j] = 0
    cost = [_num(c) for c in p.objective] + [0] * m
    if any(cost) and not s.run(cost):
        raise Unbounded("objective is unbounded below")
    if check_certificate:
        s.cost = cost
        s.check_certificate()

    sol = tuple(s.x[:num])
    _verify(p, sol)
    value = _norm(sum(c * v for c, v in zip(cost, sol) if c and v))
    basis = tuple(sorted(j for j in s.basis if j < num))
    return LpOutcome(LpStatus.OPTIMAL, sol, value, basis, s.iterations)


def _verify(p: LpProblem, sol: Sequence[Number]) -> None:
    for j, (lo, up, v) in enumerate(zip(p.lower, p.upper, sol)):
        if v < lo or (up is not None and v > up):
            raise TUIntersectError(f"simplex returned x[{j}] = {v} outside [{lo}, {up}]")
    for i, (row, rhs) in enumerate(zip(p.a_eq, p.b_eq)):
        if sum(a * v for a, v in zip(row, sol) if a and v) != rhs:
            raise TUIntersectError(f"simplex returned a point violating row {i}")


def assert_integral(v: Sequence[Number]) -> tuple[int, ...]:
    """Return ``v`` as ints; raise :class:`NonIntegralEntry` at the first fractional entry."""
    out = []
    for i, q in enumerate(v):
        if isinstance(q, int):
            out.append(int(q))
        elif isinstance(q, Fraction) and q.denominator == 1:
            out.append(q.numerator)
        else:
            raise NonIntegralEntry(i, q)
    return tuple(out)
