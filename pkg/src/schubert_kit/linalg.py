"""Exact Gaussian elimination over a coefficient field."""

from __future__ import annotations


def _rref(mat, ring):
    """Reduced row echelon form in place; returns pivot column list."""
    nrows = len(mat)
    ncols = len(mat[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if not ring.is_zero(mat[i][c])), None)
        if piv is None:
            continue
        mat[r], mat[piv] = mat[piv], mat[r]
        inv_lead = mat[r][c]
        mat[r] = [ring.div(x, inv_lead) for x in mat[r]]
        for i in range(nrows):
            if i != r and not ring.is_zero(mat[i][c]):
                f = mat[i][c]
                mat[i] = [ring.sub(x, ring.mul(f, y)) for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
    return pivots


def rank(matrix, ring) -> int:
    mat = [[ring.promote(x) for x in row] for row in matrix]
    return len(_rref(mat, ring))


def kernel_basis(matrix, ncols, ring):
    """Basis of {v : M v = 0} for M given as rows; deterministic order."""
    mat = [[ring.promote(x) for x in row] for row in matrix]
    for row in mat:
        assert len(row) == ncols
    pivots = _rref(mat, ring)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        v = [ring.zero] * ncols
        v[fc] = ring.one
        for r, pc in enumerate(pivots):
            v[pc] = ring.neg(mat[r][fc])
        basis.append(tuple(v))
    return basis
