"""Tiny exact linear-algebra helpers over Q(i) and over ParamPoly."""

from __future__ import annotations

from .params import ParamPoly
from .scalars import GQ


def solve_exact(rows: list[list[GQ]], rhs: list[GQ]) -> list[GQ] | None:
    """Solve a square system by Gaussian elimination; None if singular."""
    n = len(rows)
    m = [list(map(GQ.coerce, row)) + [GQ.coerce(b)] for row, b in zip(rows, rhs)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if not m[r][col].is_zero()), None)
        if pivot is None:
            return None
        m[col], m[pivot] = m[pivot], m[col]
        inv = GQ(1) / m[col][col]
        m[col] = [x * inv for x in m[col]]
        for r in range(n):
            if r != col and not m[r][col].is_zero():
                f = m[r][col]
                m[r] = [a - f * b for a, b in zip(m[r], m[col])]
    return [m[r][n] for r in range(n)]


def solve_affine_conditions(conds: list[tuple[ParamPoly, ParamPoly]]):
    """Given conditions a*x + c = 0, return ("forced", value) when a single
    consistent solution with scalar slope exists, or None for the caller to
    classify further."""
    for a, c in conds:
        if a.is_const() and not a.is_zero():
            return (-c) / a.as_const()
    return None
