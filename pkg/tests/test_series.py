import pytest

from walklabel.series import (
    RationalGF,
    coefficient,
    expand_rational,
    export_coefficients,
    f_numerator,
    poly_add,
    poly_mul,
    recover_numerator,
    transcription_diff,
    two_cycles_gf,
)
from walklabel.twocycles import count_two_cycles

X = {(1, 0, 0): 1}
Y = {(0, 1, 0): 1}
ONE = {(0, 0, 0): 1}


def test_poly_add_and_mul():
    assert poly_add({(0, 0, 0): 1}, {(0, 0, 0): -1}) == {}
    assert poly_mul(X, Y) == {(1, 1, 0): 1}
    square = poly_mul(poly_add(X, Y), poly_add(X, Y))
    assert square == {(2, 0, 0): 1, (1, 1, 0): 2, (0, 2, 0): 1}


def test_poly_mul_truncates_at_max_degree():
    cubic = poly_mul(poly_mul(X, X), X)
    assert poly_mul(cubic, cubic, max_degree=5) == {}


def test_coefficient_lookup():
    p = {(1, 2, 3): 7}
    assert coefficient(p, (1, 2, 3)) == 7
    assert coefficient(p, (0, 0, 0)) == 0


def test_export_ordering():
    p = {(0, 0, 2): 1, (1, 0, 0): 2, (0, 1, 1): 3}
    assert export_coefficients(p) == [(1, 0, 0, 2), (0, 0, 2, 1), (0, 1, 1, 3)]


def test_geometric_series():
    gf = RationalGF.make(ONE, [(poly_add(ONE, {(1, 0, 0): -1}), 1)])  # 1 / (1 - x)
    expansion = expand_rational(gf, 5)
    assert expansion == {(d, 0, 0): 1 for d in range(6)}


def test_two_variable_rational():
    # (1) / ((1 - x)(1 - y)) = sum x^i y^j
    gf = RationalGF.make(
        ONE,
        [(poly_add(ONE, {(1, 0, 0): -1}), 1), (poly_add(ONE, {(0, 1, 0): -1}), 1)],
    )
    expansion = expand_rational(gf, 3)
    assert all(coefficient(expansion, (i, j, 0)) == 1 for i in range(3) for j in range(3 - i))


def test_rational_gf_requires_unit_constant_terms():
    with pytest.raises(ValueError, match="constant term"):
        RationalGF.make(ONE, [(X, 1)])
    with pytest.raises(ValueError, match="multiplicity"):
        RationalGF.make(ONE, [(poly_add(ONE, X), 0)])


def test_numerator_shape():
    f = f_numerator()
    assert coefficient(f, (0, 0, 0)) == 13
    assert max(sum(e) for e in f) == 10
    assert len(f) == 166
    # symmetric under swapping the two outer variables
    assert all(f[(a, b, c)] == f[(c, b, a)] for (a, b, c) in f)


def test_expansion_matches_counts():
    expansion = expand_rational(two_cycles_gf(), 9)
    for a1 in range(2, 6):
        for a2 in range(2, 6):
            for a3 in range(2, 6):
                if a1 + a2 + a3 <= 9:
                    assert coefficient(expansion, (a1, a2, a3)) == count_two_cycles(a1, a2, a3)


def test_expansion_has_no_low_degree_terms():
    expansion = expand_rational(two_cycles_gf(), 8)
    for (a1, a2, a3), value in expansion.items():
        assert min(a1, a2, a3) >= 2 and value > 0


def test_recovered_numerator_matches_transcription():
    assert transcription_diff() == {}


def test_recover_numerator_directly():
    assert recover_numerator() == f_numerator()
    with pytest.raises(ValueError, match="parameter out of range"):
        recover_numerator(10)


def test_smallest_coefficient():
    expansion = expand_rational(two_cycles_gf(), 6)
    assert coefficient(expansion, (2, 2, 2)) == 208
