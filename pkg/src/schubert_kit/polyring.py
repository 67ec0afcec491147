"""Polynomials on the torus character lattice and the operators on them.

``WeightRing`` models the cohomology of the classifying space of the torus:
a polynomial ring on degree-2 generators, one per lattice coordinate of a
chosen realization.  It carries the reflection action ``r_i(t) = t -
t(h_i) * alpha_i`` on linear forms, the divided difference operators
``(f - r_i f) / alpha_i`` with exact division, the characteristic
homomorphism into the Schubert basis, the ideal of generalized invariants
computed degreewise as a kernel, and the total Steenrod operation over a
prime field.

Internally everything is graded by polynomial degree; the topological
degree ``2d`` appears only at the interface.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product as iter_product
from math import comb

from . import linalg
from .errors import InexactDivision, NotHomogeneous
from .gcm import GeneralizedCartanMatrix, Realization, standard_realization
from .poincare import PoincareSeries
from .rings import QQ, ZZ
from .schubert import SchubertVector
from .weyl import enumerate_by_length


class GradedPolynomial:
    """Sparse multivariate polynomial with exact coefficients."""

    __slots__ = ("ring", "nvars", "terms")

    def __init__(self, ring, nvars, terms=None):
        self.ring = ring
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            c = ring.promote(c)
            if ring.is_zero(c):
                continue
            exps = tuple(int(e) for e in exps)
            if len(exps) != nvars or any(e < 0 for e in exps):
                raise ValueError(f"bad exponent vector {exps}")
            clean[exps] = c
        self.terms = clean

    @classmethod
    def zero(cls, ring, nvars):
        return cls(ring, nvars)

    @classmethod
    def constant(cls, ring, nvars, c):
        return cls(ring, nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, ring, nvars, k):
        exps = tuple(1 if t == k else 0 for t in range(nvars))
        return cls(ring, nvars, {exps: ring.one})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    def homogeneous_degree(self) -> int:
        """Common degree of all terms; raises NotHomogeneous otherwise."""
        degrees = {sum(e) for e in self.terms}
        if len(degrees) > 1:
            raise NotHomogeneous(f"mixed degrees {sorted(degrees)}")
        return degrees.pop() if degrees else 0

    def is_homogeneous(self) -> bool:
        return len({sum(e) for e in self.terms}) <= 1

    def constant_coefficient(self):
        return self.terms.get((0,) * self.nvars, self.ring.zero)

    def coefficient(self, exps):
        return self.terms.get(tuple(exps), self.ring.zero)

    def _check(self, other):
        if self.ring != other.ring or self.nvars != other.nvars:
            raise ValueError("polynomials live in different rings")

    def __add__(self, other):
        self._check(other)
        out = dict(self.terms)
        ring = self.ring
        for e, c in other.terms.items():
            out[e] = ring.add(out.get(e, ring.zero), c)
        return GradedPolynomial(ring, self.nvars, out)

    def __sub__(self, other):
        return self + (-other)

    def __neg__(self):
        ring = self.ring
        return GradedPolynomial(
            ring, self.nvars, {e: ring.neg(c) for e, c in self.terms.items()}
        )

    def scale(self, c):
        ring = self.ring
        c = ring.promote(c)
        return GradedPolynomial(
            ring, self.nvars, {e: ring.mul(c, x) for e, x in self.terms.items()}
        )

    def __mul__(self, other):
        if not isinstance(other, GradedPolynomial):
            return self.scale(other)
        self._check(other)
        ring = self.ring
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                prod = ring.mul(c1, c2)
                out[e] = ring.add(out.get(e, ring.zero), prod)
        return GradedPolynomial(ring, self.nvars, out)

    def __rmul__(self, other):
        return self.scale(other)

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        out = GradedPolynomial.constant(self.ring, self.nvars, 1)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, GradedPolynomial)
            and self.ring == other.ring
            and self.nvars == other.nvars
            and self.terms == other.terms
        )

    def __hash__(self):
        raise TypeError("GradedPolynomial is not hashable")

    def __repr__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e in sorted(self.terms, key=lambda e: (sum(e), e)):
            c = self.terms[e]
            mono = "*".join(
                f"t{k + 1}" if p == 1 else f"t{k + 1}^{p}"
                for k, p in enumerate(e)
                if p
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def monomial_exponents(nvars: int, degree: int):
    """All exponent vectors of the given total degree, lexicographic."""
    if nvars == 0:
        return [()] if degree == 0 else []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    rec((), degree, nvars)
    out.sort()
    return out


@dataclass(frozen=True)
class InvariantsReport:
    """Degreewise kernel/image dimensions of the characteristic map.

    ``per_degree`` rows are (topological degree 2d, dim of the kernel
    piece, dim of the image piece); the two always add up to the number of
    degree-d monomials.  ``factor_degrees`` lists the half-degrees d_i when
    the image series times (1 - t^2)^n factors as a product of terms
    (1 - t^{2 d_i}) within the truncation; ``factored`` is False when the
    greedy factorization fails (possibly because the series was truncated
    too early).
    """

    torus_rank: int
    per_degree: tuple[tuple[int, int, int], ...]
    series: PoincareSeries
    factor_degrees: tuple[int, ...] | None
    factored: bool


class WeightRing:
    """Polynomial model of the torus cohomology with its operator calculus.

    Holds a coefficient ring and a lattice realization; caches per-monomial
    characteristic-map images for the session (confine one instance to one
    thread, or guard it externally).
    """

    def __init__(self, gcm: GeneralizedCartanMatrix, ring,
                 realization: Realization | None = None):
        self.gcm = gcm
        self.ring = ring
        self.realization = realization if realization is not None else standard_realization(gcm)
        self.nvars = self.realization.torus_rank
        self._psi_cache: dict[tuple[int, ...], SchubertVector] = {}

    # -- constructors -------------------------------------------------

    def zero(self) -> GradedPolynomial:
        return GradedPolynomial.zero(self.ring, self.nvars)

    def one(self) -> GradedPolynomial:
        return GradedPolynomial.constant(self.ring, self.nvars, 1)

    def constant(self, c) -> GradedPolynomial:
        return GradedPolynomial.constant(self.ring, self.nvars, c)

    def gen(self, k: int) -> GradedPolynomial:
        """The k-th lattice coordinate as a degree-1 generator (1-based)."""
        if not 1 <= k <= self.nvars:
            raise ValueError(f"variable index {k} out of range 1..{self.nvars}")
        return GradedPolynomial.variable(self.ring, self.nvars, k - 1)

    def from_covector(self, coords) -> GradedPolynomial:
        terms = {}
        for k, c in enumerate(coords):
            if c:
                exps = tuple(1 if t == k else 0 for t in range(self.nvars))
                terms[exps] = c
        return GradedPolynomial(self.ring, self.nvars, terms)

    def coroot_dual(self, i: int) -> GradedPolynomial:
        """The fixed dual of the i-th coroot, as a linear polynomial."""
        return self.from_covector(self.realization.dual_basis[i - 1])

    def root(self, i: int) -> GradedPolynomial:
        """The i-th simple root, as a linear polynomial."""
        return self.from_covector(self.realization.root_functionals[i - 1])

    def monomial(self, exps, c=1) -> GradedPolynomial:
        return GradedPolynomial(self.ring, self.nvars, {tuple(exps): c})

    def from_terms(self, pairs) -> GradedPolynomial:
        acc = {}
        for exps, c in pairs:
            exps = tuple(int(e) for e in exps)
            acc[exps] = self.ring.add(acc.get(exps, self.ring.zero),
                                      self.ring.promote(c))
        return GradedPolynomial(self.ring, self.nvars, acc)

    # -- the reflection action ----------------------------------------

    def _act_in_ring(self, i, poly: GradedPolynomial, ring) -> GradedPolynomial:
        pairing = self.realization.coroots[i - 1]
        root_coords = self.realization.root_functionals[i - 1]
        nv = self.nvars
        alpha = GradedPolynomial(
            ring, nv,
            {tuple(1 if t == k else 0 for t in range(nv)): c
             for k, c in enumerate(root_coords) if c},
        )
        # images of the variables that actually move
        moved = {}
        for k, pk in enumerate(pairing):
            if pk:
                tk = GradedPolynomial.variable(ring, nv, k)
                moved[k] = tk - alpha.scale(pk)
        out = GradedPolynomial.zero(ring, nv)
        for exps, c in poly.terms.items():
            fixed = tuple(0 if k in moved else e for k, e in enumerate(exps))
            term = GradedPolynomial(ring, nv, {fixed: c})
            for k, img in moved.items():
                if exps[k]:
                    term = term * img ** exps[k]
            out = out + term
        return out

    def weyl_act(self, i: int, f: GradedPolynomial) -> GradedPolynomial:
        """The ring involution induced by the i-th simple reflection."""
        self._own(f)
        return self._act_in_ring(i, f, self.ring)

    # -- divided differences ------------------------------------------

    def divided_difference(self, i: int, f: GradedPolynomial) -> GradedPolynomial:
        """(f - r_i f) / alpha_i, with exact division.

        Over Z the quotient is verified integral; over a prime field the
        input is lifted to Z, divided there, and reduced back, which is the
        unique operator compatible with reduction of coefficients.  A
        nonzero remainder raises InexactDivision and means a bug, not bad
        input.
        """
        self._own(f)
        root_coords = self.realization.root_functionals[i - 1]
        if self.ring == QQ:
            num = f - self._act_in_ring(i, f, QQ)
            quot = _divide_by_linear(num.terms, root_coords)
            return GradedPolynomial(QQ, self.nvars, quot)
        # lift to integers (identity for Z; canonical representatives for F_p)
        lift = GradedPolynomial(ZZ, self.nvars,
                                {e: int(c) for e, c in f.terms.items()})
        num = lift - self._act_in_ring(i, lift, ZZ)
        quot = _divide_by_linear(
            {e: Fraction(c) for e, c in num.terms.items()}, root_coords
        )
        out = {}
        for e, c in quot.items():
            if c.denominator != 1:
                raise InexactDivision(
                    f"quotient coefficient {c} is not integral"
                )
            out[e] = c.numerator
        return GradedPolynomial(self.ring, self.nvars, out)

    def operator_word(self, word, f: GradedPolynomial) -> GradedPolynomial:
        """Composite divided difference along a word (rightmost acts first)."""
        out = f
        for i in reversed(tuple(word)):
            out = self.divided_difference(i, out)
            if out.is_zero():
                break
        return out

    # -- the characteristic homomorphism ------------------------------

    def characteristic_map(self, f: GradedPolynomial) -> SchubertVector:
        """Image of a homogeneous polynomial in the Schubert basis.

        The coefficient of the class of ``w`` (length d = deg f) is the
        degree-0 part of the composite divided difference along a reduced
        word of ``w``: evaluation against a cell factors through the
        operator for that cell, and the operators commute with the map, so
        the coefficient can be read off entirely on the polynomial side.
        """
        self._own(f)
        if f.is_zero():
            return SchubertVector.zero(self.ring)
        f.homogeneous_degree()
        acc = SchubertVector.zero(self.ring)
        for exps, c in f.terms.items():
            acc = acc + self._psi_monomial(exps).scale(c)
        return acc

    def _psi_monomial(self, exps) -> SchubertVector:
        cached = self._psi_cache.get(exps)
        if cached is not None:
            return cached
        d = sum(exps)
        mono = self.monomial(exps)
        out = {}
        for w in enumerate_by_length(self.gcm, d)[d]:
            g = self.operator_word(w.word, mono)
            c = g.constant_coefficient()
            if not self.ring.is_zero(c):
                out[w] = c
        vec = SchubertVector(self.ring, out)
        self._psi_cache[exps] = vec
        return vec

    # -- generalized invariants ----------------------------------------

    def _evaluation_matrix(self, half_degree: int):
        """Rows indexed by length-d elements, columns by degree-d monomials."""
        monos = monomial_exponents(self.nvars, half_degree)
        elements = enumerate_by_length(self.gcm, half_degree)[half_degree]
        columns = [self._psi_monomial(e) for e in monos]
        matrix = [
            [col.coefficient(w) for col in columns] for w in elements
        ]
        return monos, matrix

    def generalized_invariants(self, degree: int):
        """Kernel of the characteristic map in one topological degree.

        Returns (dimension, basis polynomials).  Requires a field.
        """
        half = self._half(degree)
        if not self.ring.is_field:
            raise ValueError("generalized invariants require field coefficients")
        monos, matrix = self._evaluation_matrix(half)
        basis = linalg.kernel_basis(matrix, len(monos), self.ring)
        polys = [
            GradedPolynomial(self.ring, self.nvars,
                             {e: c for e, c in zip(monos, vec)})
            for vec in basis
        ]
        return len(polys), polys

    def s_poincare(self, max_degree: int) -> InvariantsReport:
        """Image dimensions of the characteristic map, degree by degree.

        Also attempts the greedy factorization of the image series times
        (1 - t^2)^n as a product of terms (1 - t^{2 d_i}), peeling from the
        lowest degree; failure sets ``factored`` to False (the series may
        simply be truncated too early).
        """
        if not self.ring.is_field:
            raise ValueError("the image series requires field coefficients")
        half_max = self._half(max_degree)
        per_degree = []
        image_dims = []
        for d in range(half_max + 1):
            monos, matrix = self._evaluation_matrix(d)
            r = linalg.rank(matrix, self.ring)
            per_degree.append((2 * d, len(monos) - r, r))
            image_dims.append(r)
        factors, factored = _peel_factors(image_dims, self.nvars)
        return InvariantsReport(
            torus_rank=self.nvars,
            per_degree=tuple(per_degree),
            series=PoincareSeries.from_even_dims(image_dims),
            factor_degrees=factors,
            factored=factored,
        )

    # -- Steenrod ------------------------------------------------------

    def total_steenrod(self, f: GradedPolynomial) -> GradedPolynomial:
        """The ring endomorphism sending every generator t to t + t^p."""
        self._own(f)
        p = self._prime()
        out = {}
        for exps, c in f.terms.items():
            options = []
            for e in exps:
                options.append(
                    [(e + j * (p - 1), comb(e, j) % p) for j in range(e + 1)
                     if comb(e, j) % p]
                )
            for combo in iter_product(*options):
                e2 = tuple(x[0] for x in combo)
                coef = c
                for x in combo:
                    coef = coef * x[1] % p
                out[e2] = (out.get(e2, 0) + coef) % p
        return GradedPolynomial(self.ring, self.nvars, out)

    def steenrod_commutation_check(self, i: int, f: GradedPolynomial) -> bool:
        """Exact check of A_i(P(f)) = (1 + alpha_i^(p-1)) * P(A_i(f))."""
        p = self._prime()
        lhs = self.divided_difference(i, self.total_steenrod(f))
        factor = self.one() + self.root(i) ** (p - 1)
        rhs = factor * self.total_steenrod(self.divided_difference(i, f))
        return lhs == rhs

    # -- serialization ---------------------------------------------------

    def to_jsonable(self, f: GradedPolynomial) -> list:
        return [
            {"exponents": list(e), "coefficient": self.ring.to_json(f.terms[e])}
            for e in sorted(f.terms, key=lambda e: (sum(e), e))
        ]

    def from_jsonable(self, data) -> GradedPolynomial:
        return self.from_terms((d["exponents"], d["coefficient"]) for d in data)

    # -- internals -------------------------------------------------------

    def _own(self, f: GradedPolynomial):
        if f.ring != self.ring or f.nvars != self.nvars:
            raise ValueError("polynomial does not belong to this ring")

    def _half(self, degree: int) -> int:
        if degree < 0 or degree % 2:
            raise ValueError("topological degree must be even and non-negative")
        return degree // 2

    def _prime(self) -> int:
        if self.ring.char == 0:
            raise ValueError("Steenrod operations require a prime field")
        return self.ring.char


def _divide_by_linear(terms, alpha_coords):
    """Divide a Fraction-coefficient polynomial by a linear form, exactly.

    Long division in a pivot variable of the form; prefers a variable with
    unit coefficient so intermediate values stay small.  Raises
    InexactDivision when a remainder survives.
    """
    pivot = next(
        (k for k, c in enumerate(alpha_coords) if c in (1, -1)),
        next((k for k, c in enumerate(alpha_coords) if c), None),
    )
    if pivot is None:
        raise InexactDivision("division by the zero form")
    lead = Fraction(alpha_coords[pivot])
    work = {e: Fraction(c) for e, c in terms.items() if c}
    quot: dict[tuple[int, ...], Fraction] = {}
    while work:
        top = max(e[pivot] for e in work)
        if top == 0:
            raise InexactDivision(f"remainder {work} after division")
        e = max(e for e in work if e[pivot] == top)
        c = work.pop(e)
        qe = tuple(x - 1 if k == pivot else x for k, x in enumerate(e))
        qc = c / lead
        quot[qe] = quot.get(qe, Fraction(0)) + qc
        for k, ak in enumerate(alpha_coords):
            if not ak or k == pivot:
                continue
            target = tuple(x + 1 if t == k else x for t, x in enumerate(qe))
            val = work.get(target, Fraction(0)) - qc * ak
            if val:
                work[target] = val
            else:
                work.pop(target, None)
    return {e: c for e, c in quot.items() if c}


def _peel_factors(image_dims, nvars):
    """Greedy factorization of S(q) * (1-q)^n as a product of (1 - q^k)."""
    bound = len(image_dims) - 1
    f = list(image_dims)
    for _ in range(nvars):
        f = [f[j] - (f[j - 1] if j else 0) for j in range(len(f))]
    factors = []
    for k in range(1, bound + 1):
        while f[k] < 0:
            for j in range(k, bound + 1):
                f[j] += f[j - k]
            factors.append(k)
        if f[k] > 0:
            return None, False
    return tuple(factors), True
