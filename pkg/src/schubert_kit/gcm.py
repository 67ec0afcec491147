"""Generalized Cartan matrices and the combinatorics derived from them.

A generalized Cartan matrix is an integer matrix with 2 on the diagonal,
non-positive entries off it, and symmetric vanishing (``a[i,j] = 0`` exactly
when ``a[j,i] = 0``).  From a validated matrix this module derives the
pairwise reflection orders, the finite-type test for subsets of the index
set, the poset of spherical subsets, and an explicit integral lattice
realization of the ambient torus on which the polynomial modules act.

Generator indices are 1-based throughout the public API.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations

from . import intmat
from .errors import DiagonalNotTwo, PositiveOffDiagonal, ZeroAsymmetry

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GeneralizedCartanMatrix:
    labels: tuple[str, ...]
    entries: Matrix

    @property
    def size(self) -> int:
        return len(self.labels)

    @property
    def index_set(self) -> tuple[int, ...]:
        return tuple(range(1, self.size + 1))

    def a(self, i: int, j: int) -> int:
        """Entry a[i,j], 1-based."""
        return self.entries[i - 1][j - 1]

    def submatrix(self, subset) -> Matrix:
        idx = sorted(subset)
        return tuple(tuple(self.entries[i - 1][j - 1] for j in idx) for i in idx)

    def to_dict(self) -> dict:
        return {"labels": list(self.labels), "rows": [list(r) for r in self.entries]}

    def __repr__(self) -> str:
        rows = ";".join(",".join(str(x) for x in row) for row in self.entries)
        return f"GCM({rows})"


@dataclass(frozen=True)
class Realization:
    """An integral model of the torus character lattice.

    ``coroots[i]`` and ``root_functionals[j]`` are coordinate vectors of
    length ``torus_rank`` satisfying ``root_functionals[j] . coroots[i] =
    a[i,j]``, and ``dual_basis[i] . coroots[j]`` is the Kronecker delta.  The
    dual basis is one fixed deterministic choice among many valid ones, so
    downstream results are reproducible.
    """

    gcm: GeneralizedCartanMatrix
    torus_rank: int
    coroots: tuple[tuple[int, ...], ...]
    root_functionals: tuple[tuple[int, ...], ...]
    dual_basis: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class SphericalPoset:
    """All subsets of the index set whose parabolic subgroup is finite."""

    subsets: tuple[tuple[int, ...], ...]
    covers: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def __contains__(self, subset) -> bool:
        return tuple(sorted(subset)) in set(self.subsets)


def validate_gcm(matrix, labels=None) -> GeneralizedCartanMatrix:
    """Validate the three Cartan axioms and freeze the matrix.

    Raises DiagonalNotTwo, PositiveOffDiagonal or ZeroAsymmetry naming the
    first offending entry.
    """
    rows = [tuple(int(x) for x in row) for row in matrix]
    n = len(rows)
    for row in rows:
        if len(row) != n:
            raise ValueError("matrix is not square")
    for i in range(n):
        if rows[i][i] != 2:
            raise DiagonalNotTwo(i + 1, rows[i][i])
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if rows[i][j] > 0:
                raise PositiveOffDiagonal(i + 1, j + 1, rows[i][j])
    for i in range(n):
        for j in range(i + 1, n):
            if (rows[i][j] == 0) != (rows[j][i] == 0):
                i0, j0 = (i, j) if rows[i][j] != 0 else (j, i)
                raise ZeroAsymmetry(i0 + 1, j0 + 1, rows[i0][j0])
    if labels is None:
        labels = tuple(str(i + 1) for i in range(n))
    else:
        labels = tuple(str(x) for x in labels)
        if len(labels) != n:
            raise ValueError("label count does not match matrix size")
    return GeneralizedCartanMatrix(labels, tuple(rows))


def parse_gcm(text: str) -> GeneralizedCartanMatrix:
    """Parse the inline form "2,-a;-b,2" (rows separated by semicolons)."""
    text = text.replace("−", "-").strip()
    rows = [[int(x) for x in row.split(",")] for row in text.split(";") if row.strip()]
    return validate_gcm(rows)


def gcm_from_dict(data: dict) -> GeneralizedCartanMatrix:
    """Build from the structured form {"labels": [...], "rows": [[...]]}."""
    return validate_gcm(data["rows"], data.get("labels"))


def gcm_from_file(path) -> GeneralizedCartanMatrix:
    with open(path, "r", encoding="utf-8") as fh:
        return gcm_from_dict(json.load(fh))


def rank_two(a: int, b: int) -> GeneralizedCartanMatrix:
    """The rank-two matrix with off-diagonal entries -a, -b."""
    if a < 0 or b < 0:
        raise ValueError("rank-two parameters must be non-negative")
    return validate_gcm([[2, -a], [-b, 2]])


_EXPONENT_TABLE = {0: 2, 1: 3, 2: 4, 3: 6}


def coxeter_exponent(gcm: GeneralizedCartanMatrix, i: int, j: int):
    """Order of r_i r_j: 2, 3, 4, 6 for a[i,j]*a[j,i] = 0, 1, 2, 3; None if infinite."""
    if i == j:
        raise ValueError("coxeter_exponent requires i != j")
    return _EXPONENT_TABLE.get(gcm.a(i, j) * gcm.a(j, i))


def is_finite_type(gcm: GeneralizedCartanMatrix, subset) -> bool:
    """True iff the parabolic subgroup on ``subset`` is finite.

    Criterion: every principal minor of the submatrix is strictly positive.
    All determinants are exact integers.
    """
    idx = sorted(set(subset))
    for i in idx:
        if not 1 <= i <= gcm.size:
            raise ValueError(f"index {i} out of range")
    for r in range(1, len(idx) + 1):
        for sub in combinations(idx, r):
            if intmat.det(gcm.submatrix(sub)) <= 0:
                return False
    return True


def spherical_poset(gcm: GeneralizedCartanMatrix) -> SphericalPoset:
    """All finite-type subsets with their inclusion covers.

    The result always contains the empty set and every singleton, and is
    downward closed.
    """
    members = []
    for r in range(gcm.size + 1):
        for sub in combinations(gcm.index_set, r):
            if is_finite_type(gcm, sub):
                members.append(sub)
    member_set = set(members)
    covers = []
    for sub in members:
        for sup in members:
            if len(sup) == len(sub) + 1 and set(sub) < set(sup):
                covers.append((sub, sup))
    members.sort(key=lambda s: (len(s), s))
    covers.sort()
    return SphericalPoset(tuple(members), tuple(covers))


def standard_realization(gcm: GeneralizedCartanMatrix) -> Realization:
    """Torus lattice of rank ``2n - rank(A)`` with independent roots.

    The coroots are the first ``n`` standard basis vectors.  The j-th root
    functional starts as column j of the matrix; when the matrix is singular
    the rows are completed to full row rank by standard basis covectors
    chosen greedily by lowest index, which appends the missing coordinates.
    The dual basis is fixed as the first ``n`` standard dual covectors.
    """
    n = gcm.size
    stacked = [list(row) for row in gcm.entries]
    r = intmat.rank(stacked)
    for k in range(n):
        if intmat.rank(stacked) == n:
            break
        cand = [1 if t == k else 0 for t in range(n)]
        if intmat.rank(stacked + [cand]) > intmat.rank(stacked):
            stacked.append(cand)
    torus_rank = 2 * n - r
    assert len(stacked) == torus_rank and intmat.rank(stacked) == n
    coroots = tuple(
        tuple(1 if t == i else 0 for t in range(torus_rank)) for i in range(n)
    )
    roots = tuple(
        tuple(stacked[k][j] for k in range(torus_rank)) for j in range(n)
    )
    dual = tuple(
        tuple(1 if t == i else 0 for t in range(torus_rank)) for i in range(n)
    )
    return Realization(gcm, torus_rank, coroots, roots, dual)


def derived_realization(gcm: GeneralizedCartanMatrix) -> Realization:
    """Rank-``n`` lattice spanned by the coroots (the semisimple subtorus).

    Unlike ``standard_realization`` the root functionals may become linearly
    dependent when the matrix is singular; the pairing identities still hold
    and all operators remain well defined.
    """
    n = gcm.size
    coroots = tuple(tuple(1 if t == i else 0 for t in range(n)) for i in range(n))
    roots = tuple(tuple(gcm.entries[k][j] for k in range(n)) for j in range(n))
    dual = coroots
    return Realization(gcm, n, coroots, roots, dual)
