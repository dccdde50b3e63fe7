"""Exact integer linear algebra over Z^3 and small integer matrices"""
import logging
from functools import reduce
from math import gcd

from src.errors import NotUnimodularError, ShapeError, ZeroVectorError
from src.models.lattice import DualVector, IntMatrix, LatticePoint, SnfDecomposition

logger = logging.getLogger(__name__)


def gcd_ext(a, b):
    """Return (g, s, t) with s*a + t*b = g = gcd(a, b) >= 0; gcd_ext(0, 0) = (0, 0, 0)"""
    old_r, r = a, b
    old_s, s = 1, 0
    old_t, t = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_s, s = s, old_s - q * s
        old_t, t = t, old_t - q * t
    if old_r < 0:
        old_r, old_s, old_t = -old_r, -old_s, -old_t
    if old_r == 0:
        return 0, 0, 0
    return old_r, old_s, old_t


def content(values):
    return reduce(gcd, values, 0)


def primitive(v):
    g = content(v.coords)
    if g == 0:
        raise ZeroVectorError()
    return type(v)(tuple(c // g for c in v.coords))


def cross(u, v):
    """u x v; for points of N the result lives in M and annihilates both"""
    u1, u2, u3 = u.coords
    v1, v2, v3 = v.coords
    return DualVector((u2 * v3 - u3 * v2, u3 * v1 - u1 * v3, u1 * v2 - u2 * v1))


def det_columns(a, b, c):
    return cross(a, b).pair(c)


def det3(m):
    if m.shape != (3, 3):
        raise ShapeError(f"det3 needs a 3x3 matrix, got {m.rows}x{m.cols}")
    return det_columns(*(LatticePoint(m.column(j)) for j in range(3)))


def inverse_unimodular(m):
    d = det3(m)
    if d not in (1, -1):
        raise NotUnimodularError(f"not unimodular (det = {d})")
    cols = [LatticePoint(m.column(j)) for j in range(3)]
    # rows of the inverse are the cross products of pairs of columns, over det
    rows = [
        cross(cols[1], cols[2]),
        cross(cols[2], cols[0]),
        cross(cols[0], cols[1]),
    ]
    return IntMatrix.from_rows([[d * e for e in r.coords] for r in rows])


def _swap_rows(m, i, j):
    m[i], m[j] = m[j], m[i]


def _swap_columns(m, i, j):
    for row in m:
        row[i], row[j] = row[j], row[i]


def _add_row(m, target, source, k):
    # m[target, :] += k * m[source, :]
    m[target] = [a + k * b for a, b in zip(m[target], m[source])]


def _add_column(m, target, source, k):
    for row in m:
        row[target] += k * row[source]


def _smallest_entry(m, t):
    best = None
    for i in range(t, len(m)):
        for j in range(t, len(m[i])):
            e = abs(m[i][j])
            if e and (best is None or e < best[0]):
                best = (e, i, j)
    return best


def smith_normal_form(a):
    """Smith normal form with transforms: U * a * V = S.

    The pivot is always the entry of smallest nonzero absolute value in the
    remaining block, lowest (row, column) first, so U and V are reproducible.
    """
    rows, cols = a.shape
    s = a.to_rows()
    u = IntMatrix.identity(rows).to_rows()
    v = IntMatrix.identity(cols).to_rows()

    for t in range(min(rows, cols)):
        pivot = _smallest_entry(s, t)
        if pivot is None:
            break
        while True:
            _, i, j = pivot
            _swap_rows(s, t, i)
            _swap_rows(u, t, i)
            _swap_columns(s, t, j)
            _swap_columns(v, t, j)

            cleared = True
            for i in range(t + 1, rows):
                q = s[i][t] // s[t][t]
                if q:
                    _add_row(s, i, t, -q)
                    _add_row(u, i, t, -q)
                cleared = cleared and s[i][t] == 0
            for j in range(t + 1, cols):
                q = s[t][j] // s[t][t]
                if q:
                    _add_column(s, j, t, -q)
                    _add_column(v, j, t, -q)
                cleared = cleared and s[t][j] == 0

            if cleared:
                offender = next(
                    (i for i in range(t + 1, rows)
                     for j in range(t + 1, cols) if s[i][j] % s[t][t]),
                    None,
                )
                if offender is None:
                    break
                _add_row(s, t, offender, 1)
                _add_row(u, t, offender, 1)
            pivot = _smallest_entry(s, t)

        if s[t][t] < 0:
            s[t] = [-e for e in s[t]]
            u[t] = [-e for e in u[t]]

    return SnfDecomposition(
        U=IntMatrix.from_rows(u) if rows else IntMatrix(0, 0, ()),
        S=IntMatrix.from_rows(s) if rows else IntMatrix(0, cols, ()),
        V=IntMatrix.from_rows(v) if cols else IntMatrix(0, 0, ()),
    )


def cokernel(a):
    """Structure of Z^rows / image(a) as (free_rank, torsion invariants)"""
    snf = smith_normal_form(a)
    free_rank = a.rows - snf.rank
    torsion = [d for d in snf.invariant_factors if d > 1]
    return free_rank, torsion
