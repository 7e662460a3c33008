"""Dense exact-rational simplex with Bland's anti-cycling rule.

Solves  max c^T x  subject to  A x <= b,  x >= 0  with b >= 0, so the
all-slack basis is feasible and no phase-1 is needed.  Every entry is a
``fractions.Fraction``; no floating point enters the computation, which is
what lets the covering optima downstream be exact.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class SimplexError(RuntimeError):
    """Unbounded instance or violated entry preconditions."""


@dataclass(frozen=True)
class SimplexResult:
    value: Fraction
    x: tuple[Fraction, ...]       # structural variable values
    duals: tuple[Fraction, ...]   # one multiplier per constraint row


def simplex_max(
    rows: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    c: Sequence[Fraction],
) -> SimplexResult:
    """Maximize c.x over Ax <= b, x >= 0 (requires b >= 0).

    Bland's rule: entering variable is the least-index column with positive
    reduced cost; the leaving row breaks ratio ties by least basic-variable
    index.  This guarantees termination without perturbation.
    """
    m = len(rows)
    n = len(c)
    if any(len(r) != n for r in rows) or len(b) != m:
        raise SimplexError("inconsistent dimensions")
    if any(bi < 0 for bi in b):
        raise SimplexError("requires nonnegative right-hand sides")

    zero = Fraction(0)
    # tableau: m rows of n structural + m slack coefficients + rhs
    t = [
        [Fraction(rows[i][j]) for j in range(n)]
        + [Fraction(1) if k == i else zero for k in range(m)]
        + [Fraction(b[i])]
        for i in range(m)
    ]
    # objective row holds reduced costs; slacks start costless
    obj = [Fraction(c[j]) for j in range(n)] + [zero] * m + [zero]
    basis = [n + i for i in range(m)]
    total = n + m

    while True:
        enter = next((j for j in range(total) if obj[j] > 0), None)
        if enter is None:
            break
        leave = None
        best: Fraction | None = None
        for i in range(m):
            coef = t[i][enter]
            if coef > 0:
                ratio = t[i][total] / coef
                if best is None or ratio < best or (
                    ratio == best and basis[i] < basis[leave]  # type: ignore[index]
                ):
                    best = ratio
                    leave = i
        if leave is None:
            raise SimplexError("unbounded objective")
        piv = t[leave][enter]
        t[leave] = [v / piv for v in t[leave]]
        for i in range(m):
            if i != leave and t[i][enter] != 0:
                f = t[i][enter]
                row = t[i]
                prow = t[leave]
                t[i] = [row[k] - f * prow[k] for k in range(total + 1)]
        if obj[enter] != 0:
            f = obj[enter]
            prow = t[leave]
            obj = [obj[k] - f * prow[k] for k in range(total + 1)]
        basis[leave] = enter

    x = [zero] * n
    for i, var in enumerate(basis):
        if var < n:
            x[var] = t[i][total]
    value = -obj[total]
    duals = tuple(-obj[n + i] for i in range(m))
    return SimplexResult(value, tuple(x), duals)
