import random

import pytest

from schubert_kit.errors import NotHomogeneous
from schubert_kit.gcm import derived_realization, rank_two, validate_gcm
from schubert_kit.linalg import kernel_basis
from schubert_kit.polyring import WeightRing, monomial_exponents
from schubert_kit.rings import GF, QQ, ZZ
from schubert_kit.schubert import SchubertVector, nil_a
from schubert_kit.weyl import simple_reflection

from conftest import AFFINE_A2

SAMPLE_ROWS = [
    [[2, -1], [-1, 2]],
    [[2, -2], [-3, 2]],
    [[2, -2], [-2, 2]],
    AFFINE_A2,
]


def random_poly(model, rng, deg, density=0.5):
    pairs = []
    for d in range(deg + 1):
        for exps in monomial_exponents(model.nvars, d):
            if rng.random() < density:
                pairs.append((exps, rng.randint(-4, 4)))
    return model.from_terms(pairs)


def random_homogeneous(model, rng, deg):
    exponents = monomial_exponents(model.nvars, deg)
    pairs = [(e, rng.randint(-4, 4)) for e in exponents if rng.random() < 0.7]
    if not all(c == 0 for _, c in pairs):
        return model.from_terms(pairs)
    return model.monomial(exponents[0])


def test_weyl_act_on_linear_forms():
    for rows in SAMPLE_ROWS:
        g = validate_gcm(rows)
        model = WeightRing(g, ZZ)
        for i in range(1, g.size + 1):
            for j in range(1, g.size + 1):
                # r_i(h_j*) = h_j* - delta_ij alpha_i
                expected = model.coroot_dual(j)
                if i == j:
                    expected = expected - model.root(i)
                assert model.weyl_act(i, model.coroot_dual(j)) == expected
                # r_i(alpha_j) = alpha_j - a_ij alpha_i
                expected = model.root(j) - model.root(i).scale(g.a(i, j))
                assert model.weyl_act(i, model.root(j)) == expected


def test_weyl_act_is_involution(rng):
    for rows in SAMPLE_ROWS:
        g = validate_gcm(rows)
        model = WeightRing(g, QQ)
        for _ in range(5):
            f = random_poly(model, rng, 3)
            for i in range(1, g.size + 1):
                assert model.weyl_act(i, model.weyl_act(i, f)) == f


def test_divided_difference_on_linear_forms(gcm_a23):
    model = WeightRing(gcm_a23, ZZ)
    for i in (1, 2):
        assert model.divided_difference(i, model.root(i)) == model.constant(2)
        assert model.divided_difference(i, model.coroot_dual(i)) == model.one()
        j = 3 - i
        assert model.divided_difference(i, model.coroot_dual(j)).is_zero()


@pytest.mark.parametrize("p", [2, 3, 5])
def test_divided_difference_pth_power(p):
    # over F_p: the operator sends (h_i*)^p to (-alpha_i)^(p-1)
    for rows in ([[2, -1], [-1, 2]], [[2, -2], [-2, 2]]):
        g = validate_gcm(rows)
        model = WeightRing(g, GF(p))
        for i in range(1, g.size + 1):
            lhs = model.divided_difference(i, model.coroot_dual(i) ** p)
            rhs = (-model.root(i)) ** (p - 1)
            assert lhs == rhs


def test_divided_difference_square_zero(rng):
    for rows in SAMPLE_ROWS:
        g = validate_gcm(rows)
        for ring in (ZZ, QQ, GF(2), GF(3)):
            model = WeightRing(g, ring)
            f = random_poly(model, rng, 4)
            for i in range(1, g.size + 1):
                dd = model.divided_difference
                assert dd(i, dd(i, f)).is_zero()


def test_twisted_leibniz(rng):
    for rows in SAMPLE_ROWS:
        g = validate_gcm(rows)
        for ring in (ZZ, GF(3)):
            model = WeightRing(g, ring)
            for _ in range(4):
                f = random_poly(model, rng, 3)
                h = random_poly(model, rng, 2)
                for i in range(1, g.size + 1):
                    lhs = model.divided_difference(i, f * h)
                    rhs = model.divided_difference(i, f) * model.weyl_act(i, h) + (
                        f * model.divided_difference(i, h)
                    )
                    assert lhs == rhs


def test_operator_word_independence(rng, gcm_a11, gcm_b2):
    # composite divided differences agree along both reduced words
    for g, w1, w2 in (
        (gcm_a11, (1, 2, 1), (2, 1, 2)),
        (gcm_b2, (1, 2, 1, 2), (2, 1, 2, 1)),
    ):
        model = WeightRing(g, QQ)
        for _ in range(5):
            f = random_poly(model, rng, 5)
            assert model.operator_word(w1, f) == model.operator_word(w2, f)


def test_characteristic_map_degree_two(gcm_a23, gcm_a11):
    for g in (gcm_a23, gcm_a11):
        model = WeightRing(g, ZZ)
        for i in range(1, g.size + 1):
            image = model.characteristic_map(model.coroot_dual(i))
            assert image == SchubertVector.basis(ZZ, simple_reflection(g, i))
            image = model.characteristic_map(model.root(i))
            expected = SchubertVector(
                ZZ,
                {
                    simple_reflection(g, j): g.a(j, i)
                    for j in range(1, g.size + 1)
                },
            )
            assert image == expected


def test_characteristic_map_degree_zero(gcm_a22):
    model = WeightRing(gcm_a22, QQ)
    image = model.characteristic_map(model.constant(7))
    from schubert_kit.weyl import identity_element

    assert image == SchubertVector(QQ, {identity_element(gcm_a22): 7})


def test_characteristic_map_rejects_inhomogeneous(gcm_a22):
    model = WeightRing(gcm_a22, QQ)
    with pytest.raises(NotHomogeneous):
        model.characteristic_map(model.one() + model.gen(1))


def test_characteristic_map_commutes_with_operators(rng):
    for rows in SAMPLE_ROWS[:3]:
        g = validate_gcm(rows)
        for ring in (QQ, GF(2)):
            model = WeightRing(g, ring)
            for deg in (1, 2, 3):
                f = random_homogeneous(model, rng, deg)
                for i in range(1, g.size + 1):
                    lhs = model.characteristic_map(model.divided_difference(i, f))
                    rhs = nil_a(i, model.characteristic_map(f))
                    assert lhs == rhs


def test_generalized_invariants_low_degrees(gcm_a11, gcm_a22):
    model = WeightRing(gcm_a11, QQ)
    assert model.generalized_invariants(0)[0] == 0
    assert model.generalized_invariants(2)[0] == 0
    # the kernel basis elements really map to zero
    model22 = WeightRing(gcm_a22, QQ)
    dim, polys = model22.generalized_invariants(2)
    assert dim == 1  # three generators, two independent images
    for f in polys:
        assert model22.characteristic_map(f).is_zero()


def test_generalized_invariants_requires_field(gcm_a22):
    model = WeightRing(gcm_a22, ZZ)
    with pytest.raises(ValueError):
        model.generalized_invariants(4)


def _w_invariants(model, degree):
    """Basis of W-invariant polynomials of one degree, by linear algebra."""
    monos = monomial_exponents(model.nvars, degree)
    rows = []
    for e in monos:
        f = model.monomial(e)
        row = []
        for i in range(1, model.gcm.size + 1):
            diff = model.weyl_act(i, f) - f
            for e2 in monos:
                row.append(diff.coefficient(e2))
        rows.append(row)
    cols = list(zip(*rows)) if rows else []
    vecs = kernel_basis([list(c) for c in cols] or [[0] * len(monos)],
                        len(monos), model.ring)
    return [
        model.from_terms([(e, c) for e, c in zip(monos, v)]) for v in vecs
    ]


def test_squares_of_invariants_lie_in_kernel(gcm_a22):
    # frobenius squares of invariants are annihilated by every operator
    model = WeightRing(gcm_a22, GF(2))
    for degree in (1, 2, 3):
        for f in _w_invariants(model, degree):
            sq = f * f
            if sq.is_zero():
                continue
            assert model.characteristic_map(sq).is_zero()


def test_dimension_split(gcm_a23, gcm_a22):
    for g in (gcm_a23, gcm_a22):
        for ring in (QQ, GF(2), GF(3)):
            model = WeightRing(g, ring)
            report = model.s_poincare(12)
            for deg, dim_j, dim_s in report.per_degree:
                count = len(monomial_exponents(model.nvars, deg // 2))
                assert dim_j + dim_s == count
                assert model.generalized_invariants(deg)[0] == dim_j


def test_s_series_rank_two_rational():
    for a, b in ((2, 2), (2, 3), (1, 5)):
        model = WeightRing(rank_two(a, b), QQ)
        report = model.s_poincare(16)
        assert [row[2] for row in report.per_degree] == [1] + [2] * 8
        assert report.per_degree[0][2] == 1


def test_s_series_factorization_rational(gcm_a23):
    report = WeightRing(gcm_a23, QQ).s_poincare(16)
    assert report.factored and report.factor_degrees == (2,)
    report = WeightRing(rank_two(1, 1), QQ).s_poincare(12)
    assert report.factored and report.factor_degrees == (2, 3)


def test_s_series_derived_realization_char_three(gcm_a22):
    # hand-checked: image dims 1,2,2,1,0,... and factors (1-q^2)(1-q^3)
    model = WeightRing(gcm_a22, GF(3), derived_realization(gcm_a22))
    report = model.s_poincare(16)
    assert [row[2] for row in report.per_degree] == [1, 2, 2, 1, 0, 0, 0, 0, 0]
    assert report.factored
    assert report.factor_degrees == (2, 3)
    assert len(report.factor_degrees) == model.nvars  # rank of the derived torus


def test_s_series_standard_realization_char_three(gcm_a22):
    # same image dims; the extra lattice direction adds a linear kernel factor
    model = WeightRing(gcm_a22, GF(3))
    report = model.s_poincare(16)
    assert [row[2] for row in report.per_degree] == [1, 2, 2, 1, 0, 0, 0, 0, 0]
    assert report.factored
    assert report.factor_degrees == (1, 2, 3)
    assert len(report.factor_degrees) == model.nvars


def test_total_steenrod_rules(gcm_a23):
    for p in (2, 3, 5):
        model = WeightRing(gcm_a23, GF(p))
        t = model.gen(1)
        assert model.total_steenrod(t) == t + t ** p
        u = model.gen(2)
        lhs = model.total_steenrod(t * u)
        assert lhs == (t + t ** p) * (u + u ** p)
    model2 = WeightRing(gcm_a23, GF(2))
    t = model2.gen(1)
    assert model2.total_steenrod(t * t) == t ** 2 + t ** 4


def test_steenrod_commutation(rng):
    for rows in SAMPLE_ROWS:
        g = validate_gcm(rows)
        for p in (2, 3, 5):
            model = WeightRing(g, GF(p))
            assert model.steenrod_commutation_check(1, model.coroot_dual(1))
            assert model.steenrod_commutation_check(1, model.constant(1))
            for _ in range(5):
                f = random_poly(model, rng, 3)
                for i in range(1, g.size + 1):
                    assert model.steenrod_commutation_check(i, f)


def test_steenrod_sides_on_dual_generator(gcm_a23):
    # both sides of the commutation identity equal 1 + alpha_i^(p-1)
    for p in (2, 3):
        model = WeightRing(gcm_a23, GF(p))
        for i in (1, 2):
            lhs = model.divided_difference(
                i, model.total_steenrod(model.coroot_dual(i))
            )
            assert lhs == model.one() + model.root(i) ** (p - 1)


def test_polynomial_serialization(gcm_a23):
    model = WeightRing(gcm_a23, QQ)
    f = model.from_terms([((1, 2), "1/3"), ((0, 0), 2)])
    data = model.to_jsonable(f)
    assert model.from_jsonable(data) == f
