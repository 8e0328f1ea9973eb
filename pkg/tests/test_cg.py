import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from semimagic.cg import (
    CGIndex,
    cg_coefficient,
    cg_from_square,
    printed_reciprocity_rhs,
    reciprocity_check,
    regge_identity,
    regge_orbit_table,
    square_from_cg,
    symbolic_relation,
    transform_polynomial,
)
from semimagic.core import from_sextuple, sextuples_with_line_sum, upshift, validate_square
from semimagic.enumeration import binomial, multinomial, path_polynomial
from semimagic.errors import InvalidIndex
from semimagic.group import act, all_elements, element_from_slots, identity, orbit

from conftest import random_word_square

EXAMPLE = validate_square([[2, 5, 3], [4, 2, 4], [4, 3, 3]])
ROWSWAP = element_from_slots((3, 4, 5, 0, 1, 2))
SWAP12 = element_from_slots((1, 0, 2, 3, 4, 5))

sextuples = st.lists(st.integers(0, 5), min_size=6, max_size=6).map(upshift)


def c_from_sextuple(a):
    """The same sum rewritten in sextuple variables, as in the reciprocity proof."""
    a1, a2, a3, a4, a5, a6 = a
    return sum(
        (-1) ** t
        * binomial(a1 + a5, a2 + a5 - t)
        * binomial(a3 + a4, a2 + a4 - t)
        * binomial(a2 + a6, t)
        for t in range(0, sum(a) + 1)
    )


def test_square_from_cg():
    assert square_from_cg(CGIndex(8, 5, 3, 4, 2)) == EXAMPLE
    assert square_from_cg(CGIndex(2, 2, 1, 1, 1)).flat == (1,) * 9
    assert square_from_cg(CGIndex(0, 0, 0, 0, 0)).flat == (0,) * 9
    with pytest.raises(InvalidIndex):
        square_from_cg(CGIndex(2, 2, 3, 1, 1))


def test_cg_from_square():
    idx = cg_from_square(EXAMPLE)
    assert (idx.m, idx.n, idx.k, idx.i, idx.j, idx.m_prime) == (8, 5, 3, 4, 2, 4)
    assert idx.three_j_doubled == (8, 5, 7, 0, 1, -1)
    two_j = cg_from_square(from_sextuple((2, 2, 2, 0, 0, 0)))
    assert (two_j.m, two_j.n, two_j.k, two_j.i, two_j.j) == (4, 4, 2, 2, 2)
    zero = cg_from_square(from_sextuple((0,) * 6))
    assert (zero.m, zero.n, zero.k, zero.i, zero.j) == (0,) * 5


def test_dictionary_round_trip_and_three_j():
    for rho in range(9):
        for a in sextuples_with_line_sum(rho):
            M = from_sextuple(a)
            idx = cg_from_square(M)
            assert square_from_cg(idx) == M
            assert M.line_sum == idx.m + idx.n - idx.k
            j1, j2, j3, m1, m2, m3 = idx.three_j_doubled
            assert m1 + m2 + m3 == 0
            # third form of the dictionary, entries doubled
            doubled = [
                [-j1 + j2 + j3, j1 - j2 + j3, j1 + j2 - j3],
                [j1 - m1, j2 - m2, j3 - m3],
                [j1 + m1, j2 + m2, j3 + m3],
            ]
            assert doubled == [[2 * x for x in row] for row in M.entries]


def test_weight_bookkeeping():
    for a in sextuples_with_line_sum(6):
        M = from_sextuple(a)
        idx = cg_from_square(M)
        (_, _, _), (r21, r22, _), (r31, r32, _) = M.entries
        assert r21 + r22 == idx.i + idx.j
        assert r31 + r32 == (idx.m - idx.i) + (idx.n - idx.j)
        assert [x + y for x, y in zip(M.entries[1], M.entries[2])] == [
            M.line_sum - x for x in M.entries[0]
        ]


def test_cg_coefficient_values():
    assert cg_coefficient(from_sextuple((1, 1, 1, 0, 0, 0))) == 0
    assert cg_coefficient(from_sextuple((2, 2, 2, 0, 0, 0))) == -6
    assert cg_coefficient(from_sextuple((0,) * 6)) == 1
    assert cg_coefficient(EXAMPLE) == 15


def test_clamped_range_matches_full_sum():
    for rho in range(7):
        for a in sextuples_with_line_sum(rho):
            idx = cg_from_square(from_sextuple(a))
            m, n, k, i, j = idx.m, idx.n, idx.k, idx.i, idx.j
            full = sum(
                (-1) ** t * binomial(i + j - k, i - t) * binomial(m - i, k - t) * binomial(n - j, t)
                for t in range(-rho - 2, rho + 3)
            )
            assert cg_coefficient(a) == full == c_from_sextuple(a)


@pytest.mark.parametrize(
    "a, lhs",
    [((2, 2, 2, 0, 0, 0), -540), ((2, 3, 4, 0, 1, 0), -63000), ((1, 0, 0, 0, 0, 0), 1)],
)
def test_reciprocity_examples(a, lhs):
    l, r, v = reciprocity_check(a)
    assert l == r == lhs
    assert v == sum(path_polynomial(a).coeffs)
    assert multinomial(10, 3, 3, 4) == 4200


def test_reciprocity_exhaustive():
    for rho in range(9):
        for a in sextuples_with_line_sum(rho):
            l, r, _ = reciprocity_check(a)
            assert l == r


def test_reciprocity_random(rng):
    for _ in range(200):
        M = random_word_square(rng, 14)
        l, r, _ = reciprocity_check(M.sextuple)
        assert l == r


def test_printed_sign_off_by_parity_of_m0():
    # F(M,-1) = (-1)^(a2+m0) W C(M) holds only when m0 is even or C(M) = 0
    a = (1, 1, 2, 0, 0, 0)
    assert path_polynomial(a).coeffs == (12, 24)
    assert cg_coefficient(a) == 1 and multinomial(4, 1, 1, 2) == 12
    assert reciprocity_check(a)[0] == -12 and printed_reciprocity_rhs(a) == 12
    for rho in range(8):
        for a in sextuples_with_line_sum(rho):
            F = path_polynomial(a)(-1)
            assert printed_reciprocity_rhs(a) == (-1) ** min(a.top) * F


def test_transform_examples():
    a = (2, 3, 4, 0, 1, 0)
    target, rev = transform_polynomial(SWAP12, a)
    assert target.a == (3, 2, 4, 0, 1, 0) and not rev
    assert path_polynomial(target).coeffs == path_polynomial(a).coeffs
    target, rev = transform_polynomial(ROWSWAP, a)
    assert target.a == (2, 3, 2, 0, 1, 2) and rev
    assert path_polynomial(target).coeffs == (75600, 151200, 12600)
    assert transform_polynomial(identity(), a) == (upshift(a), False)


def test_transformation_law():
    G = all_elements()
    for rho in range(7):
        for a in sextuples_with_line_sum(rho):
            coeffs = path_polynomial(a).coeffs
            for g in G:
                target, rev = transform_polynomial(g, a)
                assert from_sextuple(target) == from_sextuple(_permuted(g, a))
                assert from_sextuple(target) == act(g, from_sextuple(a))
                got = path_polynomial(target).coeffs
                assert got == (coeffs[::-1] if rev else coeffs)
                assert abs(path_polynomial(target)(-1)) == abs(path_polynomial(a)(-1))


def _permuted(g, a):
    out = [0] * 6
    for t, x in enumerate(a):
        out[g.slot_perm[t]] = x
    return out


def test_target_is_image_square():
    rng = random.Random(5)
    for _ in range(100):
        M = random_word_square(rng, 10)
        g = rng.choice(all_elements())
        target, _ = transform_polynomial(g, M.sextuple)
        assert from_sextuple(target) == act(g, M)


def test_row_swap_formula():
    assert symbolic_relation(ROWSWAP) == (
        "multinom(rho; a1+a5, a2+a6, a3+a4)·C(M) = "
        "(-1)^{a2+a5}·multinom(rho; a4+a2, a5+a3, a6+a1)·C(M')"
    )
    assert symbolic_relation(identity()) == (
        "multinom(rho; a1+a5, a2+a6, a3+a4)·C(M) = multinom(rho; a1+a5, a2+a6, a3+a4)·C(M')"
    )


def test_worked_regge_identity():
    ident = regge_identity(ROWSWAP, (2, 3, 4, 0, 1, 0))
    assert ident.target.a == (2, 3, 2, 0, 1, 2)
    assert (ident.left_multinomial, ident.c_source) == (4200, 15)
    assert (ident.sign, ident.right_multinomial, ident.c_target) == (1, 2520, 25)
    assert ident.value == 63000
    # the sign predicted by the displayed formula
    assert ident.sign == (-1) ** (3 + 1)


def test_row_swap_tensor_form(rng):
    # multinom(m+n-k; k', n-j, m-i) c_{m,n,k}(i,j)
    #   = (-1)^i multinom(m+n-k; k, m-k, n-k) c_{m',n',k'}(i,j)
    for _ in range(100):
        M = random_word_square(rng, 12)
        idx = cg_from_square(M)
        m, n, k, i, j = idx.m, idx.n, idx.k, idx.i, idx.j
        kp, mp, np_ = i + j - k, n - k + i, m - k + j
        lhs = multinomial(m + n - k, kp, n - j, m - i) * cg_coefficient(M)
        other = square_from_cg(CGIndex(mp, np_, kp, i, j))
        rhs = (-1) ** i * multinomial(m + n - k, k, m - k, n - k) * cg_coefficient(other)
        assert lhs == rhs
        assert other == from_sextuple(regge_identity(ROWSWAP, M.sextuple).target)


def test_regge_identity_identity_element():
    ident = regge_identity(identity(), (2, 3, 4, 0, 1, 0))
    assert ident.target == ident.source and ident.sign == 1
    assert ident.left_multinomial == ident.right_multinomial


def test_regge_orbit_tables():
    table = regge_orbit_table((1, 1, 1, 0, 0, 0))
    assert len(table) == 72 and all(t.value == 0 and t.c_target == 0 for t in table)
    table = regge_orbit_table((3, 3, 3, 0, 0, 0))
    assert all(t.target == t.source for t in table)
    a = (3, 1, 0, 2, 1, 0)
    assert orbit(a).size == 72
    table = regge_orbit_table(a)
    assert len({t.target for t in table}) == 72


def test_stabilizer_identities_are_self_relations():
    a = upshift((1, 1, 0, 1, 0, 0))
    for t in regge_orbit_table(a):
        if t.g in orbit(a).stabilizer:
            assert t.target == a


@settings(max_examples=30, deadline=None)
@given(sextuples)
def test_every_identity_holds(a):
    for t in regge_orbit_table(a):
        assert t.left_multinomial * t.c_source == t.sign * t.right_multinomial * t.c_target


def test_constructor_rejects_false_identity():
    ident = regge_identity(ROWSWAP, (2, 3, 4, 0, 1, 0))
    from dataclasses import replace

    with pytest.raises(AssertionError):
        replace(ident, sign=-1)


def test_render_and_json():
    ident = regge_identity(ROWSWAP, (2, 3, 4, 0, 1, 0))
    text = ident.render()
    assert "4200·15 = 2520·25 = 63000" in text
    assert "c_{8,5,3}(4,2)" in text and "c_{6,7,3}(4,2)" in text
    obj = ident.to_json()
    assert obj["sign"] == 1 and obj["left_multinomial"] == "4200"
    assert obj["g"]["slots"] == [4, 5, 6, 1, 2, 3]
    assert cg_from_square(EXAMPLE).to_json()["three_j_doubled"] == [8, 5, 7, 0, 1, -1]
