"""The Weyl group of a generalized Cartan matrix, as integer matrices.

Elements act on the lattice spanned by the simple roots; column j of an
element's matrix holds the coordinates of the image of the j-th simple root.
This representation is faithful and crystallographic, so deduplication is
exact matrix equality and no word-problem solving is ever needed.  Every
column of a group element is a real root: its entries are all >= 0 or all
<= 0, which gives the integer-exact descent test used everywhere below.

Convention: ``i`` is a right descent of ``w`` iff ``w`` maps the i-th simple
root to a negative root.  Coset routines return minimal-length
representatives for that convention.  Infinite groups are only ever
materialized up to an explicit length bound.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import intmat
from .errors import NotInGroup, NotSpherical
from .gcm import GeneralizedCartanMatrix, is_finite_type

Matrix = intmat.Matrix

_DEFAULT_STRIP_BOUND = 10_000


@dataclass(frozen=True)
class WeylElement:
    """A group element with its length and canonical reduced word.

    Equality and hashing use only the matrix (the word is derived data).
    ``word`` is the lexicographically least reduced word for the element.
    """

    gcm: GeneralizedCartanMatrix
    matrix: Matrix
    length: int = field(compare=False)
    word: tuple[int, ...] = field(compare=False)

    def __repr__(self) -> str:
        return "W(e)" if self.length == 0 else f"W({','.join(map(str, self.word))})"


def reflection_matrix(gcm: GeneralizedCartanMatrix, i: int) -> Matrix:
    """Matrix of r_i: the j-th simple root maps to alpha_j - a[i,j] alpha_i."""
    n = gcm.size
    rows = []
    for k in range(n):
        if k == i - 1:
            rows.append(tuple((1 if j == k else 0) - gcm.a(i, j + 1) for j in range(n)))
        else:
            rows.append(tuple(1 if j == k else 0 for j in range(n)))
    return tuple(rows)


def identity_element(gcm: GeneralizedCartanMatrix) -> WeylElement:
    return WeylElement(gcm, intmat.identity(gcm.size), 0, ())


def simple_reflection(gcm: GeneralizedCartanMatrix, i: int) -> WeylElement:
    if not 1 <= i <= gcm.size:
        raise ValueError(f"generator index {i} out of range 1..{gcm.size}")
    return WeylElement(gcm, reflection_matrix(gcm, i), 1, (i,))


def _is_negative_column(matrix: Matrix, i: int) -> bool:
    return all(row[i - 1] <= 0 for row in matrix)


def right_descent(w: WeylElement, i: int) -> bool:
    """True iff multiplying by r_i on the right shortens ``w``."""
    return _is_negative_column(w.matrix, i)


def length_and_word(gcm: GeneralizedCartanMatrix, matrix,
                    max_steps: int = _DEFAULT_STRIP_BOUND):
    """Length and lexicographically least reduced word of a group matrix.

    Strips the least left descent repeatedly (equivalently, the least right
    descent of the inverse), which yields the lex-least word.  Raises
    NotInGroup if the matrix is not unimodular or stripping fails to reach
    the identity within ``max_steps``.
    """
    n = gcm.size
    matrix = tuple(tuple(int(x) for x in row) for row in matrix)
    if len(matrix) != n or any(len(row) != n for row in matrix):
        raise NotInGroup("matrix size does not match the index set")
    inv = intmat.integer_inverse(matrix)
    if inv is None:
        raise NotInGroup("matrix is not invertible over the integers")
    ident = intmat.identity(n)
    word = []
    steps = 0
    while inv != ident:
        i = next((i for i in range(1, n + 1) if _is_negative_column(inv, i)), None)
        if i is None:
            raise NotInGroup("matrix is not a product of simple reflections")
        word.append(i)
        inv = intmat.mat_mul(inv, reflection_matrix(gcm, i))
        steps += 1
        if steps > max_steps:
            raise NotInGroup(f"did not reach the identity within {max_steps} steps")
    return len(word), tuple(word)


def element_from_matrix(gcm: GeneralizedCartanMatrix, matrix) -> WeylElement:
    length, word = length_and_word(gcm, matrix)
    return WeylElement(gcm, tuple(tuple(int(x) for x in row) for row in matrix),
                       length, word)


def multiply(u: WeylElement, v: WeylElement) -> WeylElement:
    if u.gcm != v.gcm:
        raise ValueError("elements belong to different groups")
    return element_from_matrix(u.gcm, intmat.mat_mul(u.matrix, v.matrix))


def inverse(w: WeylElement) -> WeylElement:
    inv = intmat.integer_inverse(w.matrix)
    assert inv is not None
    return element_from_matrix(w.gcm, inv)


def from_word(gcm: GeneralizedCartanMatrix, word) -> WeylElement:
    """Product of simple reflections; the word need not be reduced."""
    m = intmat.identity(gcm.size)
    for i in word:
        if not 1 <= int(i) <= gcm.size:
            raise ValueError(f"generator index {i} out of range 1..{gcm.size}")
        m = intmat.mat_mul(m, reflection_matrix(gcm, int(i)))
    return element_from_matrix(gcm, m)


# Per-session enumeration memo, keyed by matrix.  Confined to one process;
# rebuild per session rather than sharing across threads without a lock.
_LEVELS: dict[GeneralizedCartanMatrix, list[list[WeylElement]]] = {}


def enumerate_by_length(gcm: GeneralizedCartanMatrix, max_len: int):
    """Lists W_0, ..., W_max_len of all elements of each exact length.

    Breadth-first closure under right multiplication by generators,
    deduplicated by matrix.  Levels past the end of a finite group are empty
    lists.
    """
    levels = _LEVELS.setdefault(gcm, [[identity_element(gcm)]])
    seen: set[Matrix] | None = None
    while len(levels) <= max_len:
        if seen is None:
            seen = {w.matrix for level in levels for w in level}
        nxt = []
        for w in levels[-1]:
            for i in range(1, gcm.size + 1):
                if right_descent(w, i):
                    continue
                m2 = intmat.mat_mul(w.matrix, reflection_matrix(gcm, i))
                if m2 in seen:
                    continue
                seen.add(m2)
                nxt.append(element_from_matrix(gcm, m2))
        nxt.sort(key=lambda w: w.word)
        levels.append(nxt)
    return [list(level) for level in levels[: max_len + 1]]


def bruhat_leq(v: WeylElement, w: WeylElement) -> bool:
    """Bruhat order test by the descent recursion."""
    if v.gcm != w.gcm:
        raise ValueError("elements belong to different groups")
    if v.length > w.length:
        return False
    if w.length == 0:
        return v.length == 0
    i = next(i for i in range(1, w.gcm.size + 1) if right_descent(w, i))
    s = simple_reflection(w.gcm, i)
    wri = multiply(w, s)
    if right_descent(v, i):
        return bruhat_leq(multiply(v, s), wri)
    return bruhat_leq(v, wri)


def min_coset_reps(gcm: GeneralizedCartanMatrix, subset, max_len: int):
    """All enumerated w with no right descent in ``subset``."""
    subset = sorted(set(subset))
    reps = []
    for level in enumerate_by_length(gcm, max_len):
        for w in level:
            if all(not right_descent(w, j) for j in subset):
                reps.append(w)
    return reps


def longest_element(gcm: GeneralizedCartanMatrix, subset) -> WeylElement:
    """The unique maximal-length element of a finite parabolic subgroup."""
    subset = sorted(set(subset))
    if not is_finite_type(gcm, subset):
        raise NotSpherical(f"subset {subset} generates an infinite group")
    level = [identity_element(gcm)]
    seen = {level[0].matrix}
    while True:
        nxt = []
        for w in level:
            for i in subset:
                if right_descent(w, i):
                    continue
                m2 = intmat.mat_mul(w.matrix, reflection_matrix(gcm, i))
                if m2 not in seen:
                    seen.add(m2)
                    nxt.append(element_from_matrix(gcm, m2))
        if not nxt:
            assert len(level) == 1
            return level[0]
        level = nxt


def to_dict(w: WeylElement) -> dict:
    """Interchange form; matrices are derived data and never serialized."""
    return {"word": list(w.word)}


def from_dict(gcm: GeneralizedCartanMatrix, data: dict) -> WeylElement:
    return from_word(gcm, data["word"])
