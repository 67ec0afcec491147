import pytest

from schubert_kit.errors import NotInGroup, NotSpherical
from schubert_kit.gcm import rank_two, validate_gcm
from schubert_kit.weyl import (
    bruhat_leq,
    enumerate_by_length,
    from_dict,
    from_word,
    identity_element,
    inverse,
    length_and_word,
    longest_element,
    min_coset_reps,
    multiply,
    simple_reflection,
    to_dict,
)

from conftest import B2_INSIDE_RANK3


def test_simple_reflection_matrix(gcm_a22):
    s1 = simple_reflection(gcm_a22, 1)
    # alpha_1 -> -alpha_1, alpha_2 -> alpha_2 + 2 alpha_1 (columns)
    assert s1.matrix == ((-1, 2), (0, 1))
    assert s1.length == 1 and s1.word == (1,)


def test_reflections_are_involutions(gcm_a23, gcm_affine_a2):
    for g in (gcm_a23, gcm_affine_a2):
        for i in range(1, g.size + 1):
            s = simple_reflection(g, i)
            assert multiply(s, s) == identity_element(g)


def test_braid_order_three(gcm_a11):
    s1 = simple_reflection(gcm_a11, 1)
    s2 = simple_reflection(gcm_a11, 2)
    prod = multiply(s1, s2)
    cubed = multiply(prod, multiply(prod, prod))
    assert cubed == identity_element(gcm_a11)


def test_multiply_lengths(gcm_a22, gcm_a11):
    w = from_word(gcm_a22, (1, 2, 1))
    assert w.length == 3
    braid = from_word(gcm_a11, (1, 2, 1, 2))
    assert braid.length == 2  # r1 r2 r1 r2 = r2 r1 in the order-3 braid group
    u = from_word(gcm_a22, (2, 1))
    assert multiply(u, identity_element(gcm_a22)) == u


def test_length_and_word_basics(gcm_a23):
    n = gcm_a23.size
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    assert length_and_word(gcm_a23, ident) == (0, ())
    s2 = simple_reflection(gcm_a23, 2)
    assert length_and_word(gcm_a23, s2.matrix) == (1, (2,))
    w = from_word(gcm_a23, (1, 2, 1, 2))
    assert length_and_word(gcm_a23, w.matrix) == (4, (1, 2, 1, 2))


def test_length_and_word_rejects_outsiders(gcm_a22):
    with pytest.raises(NotInGroup):
        length_and_word(gcm_a22, ((2, 0), (0, 2)))  # not unimodular
    with pytest.raises(NotInGroup):
        length_and_word(gcm_a22, ((1, 1), (0, 1)))  # unimodular, not in the group


def test_length_and_word_respects_step_bound(gcm_a22):
    deep = from_word(gcm_a22, (1, 2, 1, 2, 1))
    with pytest.raises(NotInGroup):
        length_and_word(gcm_a22, deep.matrix, max_steps=2)
    assert length_and_word(gcm_a22, deep.matrix, max_steps=5)[0] == 5


def test_canonical_word_is_lex_least(gcm_a11, gcm_b2):
    # both reduced words of the top element exist; the canonical one is least
    w0 = from_word(gcm_a11, (2, 1, 2))
    assert w0.word == (1, 2, 1)
    top = from_word(gcm_b2, (2, 1, 2, 1))
    assert top.word == (1, 2, 1, 2)


def _all_reduced_words(w):
    """Every reduced word, by peeling each left descent recursively."""
    if w.length == 0:
        return {()}
    out = set()
    for i in range(1, w.gcm.size + 1):
        shorter = multiply(simple_reflection(w.gcm, i), w)
        if shorter.length < w.length:
            out |= {(i,) + rest for rest in _all_reduced_words(shorter)}
    return out


def test_canonical_word_against_full_enumeration(gcm_a11, gcm_b2, gcm_affine_a2):
    for g, bound in ((gcm_a11, 3), (gcm_b2, 4), (gcm_affine_a2, 5)):
        for level in enumerate_by_length(g, bound):
            for w in level:
                words = _all_reduced_words(w)
                assert w.word == min(words)
                assert all(len(word) == w.length for word in words)


def test_enumerate_counts(gcm_a11, gcm_a22, gcm_affine_a2):
    assert [len(l) for l in enumerate_by_length(gcm_a11, 5)] == [1, 2, 2, 1, 0, 0]
    assert [len(l) for l in enumerate_by_length(gcm_a22, 6)] == [1, 2, 2, 2, 2, 2, 2]
    assert len(enumerate_by_length(gcm_affine_a2, 1)[1]) == 3


@pytest.mark.parametrize("a,b", [(2, 2), (2, 3), (1, 5)])
def test_noncompact_growth_is_two_per_length(a, b):
    levels = enumerate_by_length(rank_two(a, b), 10)
    assert [len(l) for l in levels] == [1] + [2] * 10


def test_exactly_one_length_change(gcm_affine_a2):
    for level in enumerate_by_length(gcm_affine_a2, 5):
        for w in level:
            for i in range(1, 4):
                up = multiply(w, simple_reflection(gcm_affine_a2, i))
                assert abs(up.length - w.length) == 1


def _subword_set(w):
    """Dynamic programming over the canonical word of w: collect every
    element some reduced word of which embeds as a subword."""
    reachable = {identity_element(w.gcm)}
    for i in w.word:
        s = simple_reflection(w.gcm, i)
        new = set()
        for u in reachable:
            u2 = multiply(u, s)
            if u2.length > u.length:
                new.add(u2)
        reachable |= new
    return reachable


def test_bruhat_trivial_cases(gcm_a22):
    e = identity_element(gcm_a22)
    w = from_word(gcm_a22, (1, 2, 1))
    assert bruhat_leq(e, w)
    assert not bruhat_leq(
        simple_reflection(gcm_a22, 1), simple_reflection(gcm_a22, 2)
    )
    for word in [(1, 2), (2, 1)]:
        assert bruhat_leq(from_word(gcm_a22, word), w)


@pytest.mark.parametrize("rows,max_len", [
    ([[2, -1], [-1, 2]], 3),
    ([[2, -2], [-2, 2]], 6),
    ([[2, -2], [-1, 2]], 4),
    ([[2, -1, -1], [-1, 2, -1], [-1, -1, 2]], 6),
])
def test_bruhat_matches_subword_oracle(rows, max_len):
    g = validate_gcm(rows)
    elems = [w for level in enumerate_by_length(g, max_len) for w in level]
    for w in elems:
        below = _subword_set(w)
        for v in elems:
            assert bruhat_leq(v, w) == (v in below)


def test_min_coset_reps(gcm_a22, gcm_a11):
    full = min_coset_reps(gcm_a22, (), 4)
    assert len(full) == 1 + 2 * 4
    reps = min_coset_reps(gcm_a22, (1,), 4)
    assert [w.length for w in reps] == [0, 1, 2, 3, 4]
    assert all(w.word[-1] == 2 for w in reps if w.length)
    assert len(min_coset_reps(gcm_a11, (1,), 3)) == 3  # |W| / |W_J| = 6 / 2


def test_longest_elements(gcm_a11, gcm_a22):
    assert longest_element(gcm_a11, (1,)) == simple_reflection(gcm_a11, 1)
    w0 = longest_element(gcm_a11, (1, 2))
    assert w0.length == 3
    b2 = validate_gcm(B2_INSIDE_RANK3)
    assert longest_element(b2, (1, 2)).length == 4
    with pytest.raises(NotSpherical):
        longest_element(gcm_a22, (1, 2))


def test_inverse_and_serialization(gcm_a23):
    w = from_word(gcm_a23, (1, 2, 1))
    assert multiply(w, inverse(w)) == identity_element(gcm_a23)
    assert inverse(w).length == w.length
    assert from_dict(gcm_a23, to_dict(w)) == w
    assert to_dict(w) == {"word": [1, 2, 1]}
