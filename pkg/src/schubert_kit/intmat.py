"""Small exact integer-matrix helpers (tuples of tuples, row major)."""

from __future__ import annotations

from fractions import Fraction

Matrix = tuple[tuple[int, ...], ...]


def identity(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, k, m = len(a), len(b), len(b[0]) if b else 0
    bt = tuple(zip(*b))
    return tuple(
        tuple(sum(ra[t] * cb[t] for t in range(k)) for cb in bt) for ra in a
    )


def column(a: Matrix, j: int) -> tuple[int, ...]:
    return tuple(row[j] for row in a)


def det(m) -> int:
    """Exact determinant of a square integer matrix."""
    rows = [[Fraction(x) for x in row] for row in m]
    n = len(rows)
    sign = 1
    for c in range(n):
        piv = next((r for r in range(c, n) if rows[r][c]), None)
        if piv is None:
            return 0
        if piv != c:
            rows[c], rows[piv] = rows[piv], rows[c]
            sign = -sign
        for r in range(c + 1, n):
            f = rows[r][c] / rows[c][c]
            for t in range(c, n):
                rows[r][t] -= f * rows[c][t]
    d = sign
    for c in range(n):
        d *= rows[c][c]
    assert d.denominator == 1
    return d.numerator


def rank(m) -> int:
    """Rank over the rationals of an integer matrix given as rows."""
    rows = [[Fraction(x) for x in row] for row in m]
    if not rows:
        return 0
    ncols = len(rows[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                for t in range(c, ncols):
                    rows[i][t] -= f * rows[r][t]
        r += 1
    return r


def inverse_rational(m: Matrix):
    """Inverse as Fractions, or None if singular."""
    n = len(m)
    rows = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
            for i, row in enumerate(m)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c]), None)
        if piv is None:
            return None
        rows[r], rows[piv] = rows[piv], rows[r]
        f = rows[r][c]
        rows[r] = [x / f for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c]:
                g = rows[i][c]
                rows[i] = [x - g * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return tuple(tuple(row[n:]) for row in rows)


def integer_inverse(m: Matrix):
    """Inverse of a unimodular integer matrix, or None."""
    inv = inverse_rational(m)
    if inv is None:
        return None
    if any(x.denominator != 1 for row in inv for x in row):
        return None
    return tuple(tuple(x.numerator for x in row) for row in inv)
