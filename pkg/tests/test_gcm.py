import json

import pytest

from schubert_kit.errors import DiagonalNotTwo, PositiveOffDiagonal, ZeroAsymmetry
from schubert_kit.gcm import (
    coxeter_exponent,
    derived_realization,
    gcm_from_dict,
    gcm_from_file,
    is_finite_type,
    parse_gcm,
    rank_two,
    spherical_poset,
    standard_realization,
    validate_gcm,
)
from schubert_kit.intmat import identity, mat_mul
from schubert_kit.weyl import reflection_matrix

from conftest import AFFINE_A2


def test_validate_accepts_rank_two_hyperbolic():
    g = validate_gcm([[2, -2], [-2, 2]])
    assert g.a(1, 2) == -2 and g.a(2, 1) == -2


def test_validate_accepts_rank_one():
    g = validate_gcm([[2]])
    assert g.size == 1


def test_validate_rejections():
    with pytest.raises(ZeroAsymmetry):
        validate_gcm([[2, -1], [0, 2]])
    with pytest.raises(DiagonalNotTwo):
        validate_gcm([[1, -1], [-1, 2]])
    with pytest.raises(PositiveOffDiagonal):
        validate_gcm([[2, 1], [-1, 2]])
    with pytest.raises(ValueError):
        validate_gcm([[2, -1]])


def test_parse_inline_and_dict_agree():
    inline = parse_gcm("2,-2;-3,2")
    structured = gcm_from_dict({"labels": ["1", "2"], "rows": [[2, -2], [-3, 2]]})
    assert inline == structured


def test_parse_accepts_unicode_minus():
    assert parse_gcm("2,−2;−2,2") == rank_two(2, 2)


def test_gcm_file_roundtrip(tmp_path):
    g = validate_gcm(AFFINE_A2, labels=["x", "y", "z"])
    path = tmp_path / "gcm.json"
    path.write_text(json.dumps(g.to_dict()))
    assert gcm_from_file(path) == g


def _matrix_order(g, bound=100):
    m = mat_mul(reflection_matrix(g, 1), reflection_matrix(g, 2))
    cur = m
    for k in range(1, bound + 1):
        if cur == identity(g.size):
            return k
        cur = mat_mul(cur, m)
    return None


@pytest.mark.parametrize(
    "a,b",
    [(0, 0), (1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (2, 3), (1, 4), (3, 3)],
)
def test_coxeter_exponent_matches_matrix_order(a, b):
    g = rank_two(a, b)
    assert coxeter_exponent(g, 1, 2) == _matrix_order(g)


def test_coxeter_exponent_values():
    assert coxeter_exponent(rank_two(1, 1), 1, 2) == 3
    assert coxeter_exponent(rank_two(2, 2), 1, 2) is None
    assert coxeter_exponent(rank_two(0, 0), 1, 2) == 2
    assert coxeter_exponent(rank_two(2, 1), 1, 2) == 4
    assert coxeter_exponent(rank_two(3, 1), 1, 2) == 6
    with pytest.raises(ValueError):
        coxeter_exponent(rank_two(1, 1), 1, 1)


@pytest.mark.parametrize("a", range(1, 5))
@pytest.mark.parametrize("b", range(1, 5))
def test_finite_type_rank_two_calibration(a, b):
    g = rank_two(a, b)
    finite = is_finite_type(g, (1, 2))
    assert finite == (a * b < 4)
    assert finite == (coxeter_exponent(g, 1, 2) is not None)
    assert finite == (_matrix_order(g) is not None)


def test_finite_type_trivial_cases(gcm_affine_a2):
    assert is_finite_type(gcm_affine_a2, ())
    assert is_finite_type(gcm_affine_a2, (1,))
    assert not is_finite_type(gcm_affine_a2, (1, 2, 3))
    assert is_finite_type(gcm_affine_a2, (1, 2))


def test_finite_type_downward_closed(gcm_affine_a2, gcm_a22, gcm_a11):
    for g in (gcm_affine_a2, gcm_a22, gcm_a11):
        poset = spherical_poset(g)
        members = set(poset.subsets)
        for sub in members:
            for x in sub:
                assert tuple(sorted(set(sub) - {x})) in members


def test_spherical_poset_examples(gcm_a22, gcm_a11):
    assert spherical_poset(gcm_a22).subsets == ((), (1,), (2,))
    assert spherical_poset(gcm_a11).subsets == ((), (1,), (2,), (1, 2))
    assert spherical_poset(validate_gcm([[2]])).subsets == ((), (1,))


def test_spherical_poset_covers(gcm_a11):
    covers = set(spherical_poset(gcm_a11).covers)
    assert ((), (1,)) in covers
    assert ((1,), (1, 2)) in covers
    assert ((), (1, 2)) not in covers


def _pairing(real, i, j):
    return sum(x * y for x, y in zip(real.root_functionals[j], real.coroots[i]))


def test_standard_realization_nonsingular(gcm_a11):
    real = standard_realization(gcm_a11)
    assert real.torus_rank == 2
    assert real.root_functionals == ((2, -1), (-1, 2))
    assert real.coroots == ((1, 0), (0, 1))


def test_standard_realization_singular(gcm_a22):
    real = standard_realization(gcm_a22)
    assert real.torus_rank == 3  # 2*2 - rank 1


@pytest.mark.parametrize("rows", [[[2, -2], [-3, 2]], [[2, -2], [-2, 2]], AFFINE_A2])
def test_realization_pairings_exhaustive(rows):
    g = validate_gcm(rows)
    for real in (standard_realization(g), derived_realization(g)):
        for i in range(g.size):
            for j in range(g.size):
                assert _pairing(real, i, j) == g.a(i + 1, j + 1)
                dual = sum(
                    x * y for x, y in zip(real.dual_basis[i], real.coroots[j])
                )
                assert dual == (1 if i == j else 0)


def test_standard_realization_roots_independent(gcm_a22, gcm_affine_a2):
    from schubert_kit.intmat import rank

    for g in (gcm_a22, gcm_affine_a2):
        real = standard_realization(g)
        assert rank([list(r) for r in real.root_functionals]) == g.size
        assert rank([list(h) for h in real.coroots]) == g.size


def test_affine_a2_torus_rank(gcm_affine_a2):
    assert standard_realization(gcm_affine_a2).torus_rank == 4  # 2*3 - rank 2
