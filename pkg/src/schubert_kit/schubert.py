"""The free graded module on Schubert classes and its operator calculus.

A ``SchubertVector`` is a finite formal sum of basis classes indexed by
group elements, graded by twice the length.  The annihilation operator for
generator ``i`` sends the class of ``w`` to the class of ``w r_i`` when that
is shorter and to zero otherwise; composites along reduced words give the
full operator basis.  The coproduct of a basis class sums the tensors over
all length-additive factorizations of its element.

All operators here act by these combinatorial rules; no topology is ever
materialized.  Operations that lower degree are exact on any truncation,
and the coproduct of a class only needs elements of smaller length, so it
is always exact.
"""

from __future__ import annotations

from .errors import NotReduced
from .gcm import GeneralizedCartanMatrix
from .rings import ZZ
from .weyl import (
    WeylElement,
    enumerate_by_length,
    from_word,
    identity_element,
    inverse,
    min_coset_reps,
    multiply,
    right_descent,
    simple_reflection,
)


class SchubertVector:
    """Finite formal sum of Schubert classes with exact coefficients."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=None):
        self.ring = ring
        clean = {}
        for w, c in (coeffs or {}).items():
            c = ring.promote(c)
            if not ring.is_zero(c):
                clean[w] = c
        self.coeffs = clean

    @classmethod
    def zero(cls, ring):
        return cls(ring)

    @classmethod
    def basis(cls, ring, w: WeylElement):
        return cls(ring, {w: ring.one})

    def is_zero(self) -> bool:
        return not self.coeffs

    def coefficient(self, w: WeylElement):
        return self.coeffs.get(w, self.ring.zero)

    def support(self):
        return sorted(self.coeffs, key=lambda w: (w.length, w.word))

    def items(self):
        return [(w, self.coeffs[w]) for w in self.support()]

    def scale(self, c) -> "SchubertVector":
        c = self.ring.promote(c)
        return SchubertVector(
            self.ring, {w: self.ring.mul(c, x) for w, x in self.coeffs.items()}
        )

    def __add__(self, other: "SchubertVector") -> "SchubertVector":
        self._check(other)
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = self.ring.add(out.get(w, self.ring.zero), c)
        return SchubertVector(self.ring, out)

    def __sub__(self, other: "SchubertVector") -> "SchubertVector":
        return self + other.scale(-1)

    def __neg__(self) -> "SchubertVector":
        return self.scale(-1)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, SchubertVector)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("SchubertVector is not hashable")

    def _check(self, other):
        if self.ring != other.ring:
            raise ValueError("coefficient rings differ")

    def __repr__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for w, c in self.items():
            word = ",".join(map(str, w.word)) if w.length else "e"
            parts.append(f"{c}*d[{word}]")
        return " + ".join(parts)


class TensorVector:
    """Finite sum of ordered tensor pairs of Schubert classes."""

    __slots__ = ("ring", "coeffs")

    def __init__(self, ring, coeffs=None):
        self.ring = ring
        clean = {}
        for key, c in (coeffs or {}).items():
            c = ring.promote(c)
            if not ring.is_zero(c):
                clean[key] = c
        self.coeffs = clean

    def coefficient(self, u: WeylElement, v: WeylElement):
        return self.coeffs.get((u, v), self.ring.zero)

    def support(self):
        return sorted(
            self.coeffs, key=lambda p: (p[0].length, p[0].word, p[1].word)
        )

    def items(self):
        return [(p, self.coeffs[p]) for p in self.support()]

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TensorVector)
            and self.ring == other.ring
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        raise TypeError("TensorVector is not hashable")

    def __repr__(self) -> str:
        parts = []
        for (u, v), c in self.items():
            lw = ",".join(map(str, u.word)) if u.length else "e"
            rw = ",".join(map(str, v.word)) if v.length else "e"
            parts.append(f"{c}*d[{lw}](x)d[{rw}]")
        return " + ".join(parts) if parts else "0"


def nil_a(i: int, v: SchubertVector) -> SchubertVector:
    """The degree-lowering operator for generator ``i``, extended linearly."""
    out = {}
    ring = v.ring
    for w, c in v.coeffs.items():
        if right_descent(w, i):
            img = multiply(w, simple_reflection(w.gcm, i))
            out[img] = ring.add(out.get(img, ring.zero), c)
    return SchubertVector(ring, out)


def nil_aw(word, v: SchubertVector) -> SchubertVector:
    """Composite operator along a reduced word (rightmost letter acts first).

    Raises NotReduced if the word is not a reduced expression; composites
    along any two reduced words of the same element agree.
    """
    word = tuple(int(i) for i in word)
    if v.coeffs:
        gcm = next(iter(v.coeffs)).gcm
        if from_word(gcm, word).length != len(word):
            raise NotReduced(f"word {list(word)} is not reduced")
    out = v
    for i in reversed(word):
        out = nil_a(i, out)
        if out.is_zero():
            break
    return out


def l_functional(w: WeylElement, v: SchubertVector):
    """Coefficient of the class of ``w`` in ``v``."""
    return v.coefficient(w)


def peterson_coproduct(w: WeylElement, ring=ZZ) -> TensorVector:
    """Sum of tensors over all length-additive factorizations of ``w``.

    Computed by running the left factor over all elements of length at most
    ``l(w)`` and keeping those whose complementary factor has complementary
    length.  Exact: only lengths up to ``l(w)`` are ever touched.
    """
    out = {}
    for level in enumerate_by_length(w.gcm, w.length):
        for u in level:
            v = multiply(inverse(u), w)
            if u.length + v.length == w.length:
                out[(u, v)] = ring.one
    return TensorVector(ring, out)


def counit_collapse(t: TensorVector, side: str) -> SchubertVector:
    """Collapse one tensor factor at the identity (the counit)."""
    ring = t.ring
    out = {}
    for (u, v), c in t.coeffs.items():
        if side == "left" and u.length == 0:
            out[v] = ring.add(out.get(v, ring.zero), c)
        elif side == "right" and v.length == 0:
            out[u] = ring.add(out.get(u, ring.zero), c)
    return SchubertVector(ring, out)


def parabolic_basis(gcm: GeneralizedCartanMatrix, subset, max_len: int):
    """Schubert basis of the partial flag variety for ``subset``.

    Exactly the minimal coset representatives; each returned element is
    annihilated by every operator indexed by the subset.
    """
    return min_coset_reps(gcm, subset, max_len)


def schubert_to_jsonable(v: SchubertVector) -> list:
    return [
        {"word": list(w.word), "coefficient": v.ring.to_json(c)}
        for w, c in v.items()
    ]


def schubert_from_jsonable(gcm: GeneralizedCartanMatrix, ring, data) -> SchubertVector:
    acc = {}
    for entry in data:
        w = from_word(gcm, entry["word"])
        c = ring.promote(entry["coefficient"])
        acc[w] = ring.add(acc.get(w, ring.zero), c)
    return SchubertVector(ring, acc)


def tensor_to_jsonable(t: TensorVector) -> list:
    return [
        {
            "left_word": list(u.word),
            "right_word": list(v.word),
            "coefficient": t.ring.to_json(c),
        }
        for (u, v), c in t.items()
    ]


def basis_vector(gcm: GeneralizedCartanMatrix, ring, word) -> SchubertVector:
    """Convenience: the basis class of the element with the given word."""
    return SchubertVector.basis(ring, from_word(gcm, word))


def identity_vector(gcm: GeneralizedCartanMatrix, ring) -> SchubertVector:
    return SchubertVector.basis(ring, identity_element(gcm))
