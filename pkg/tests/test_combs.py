import pytest

from walklabel import combs, oracle
from walklabel.graphs import comb, vertex_at


def test_count_matches_oracle_on_small_grid():
    for m in range(1, 5):
        for n in range(2, 13 // m + 1):
            for k in range(1, n + 1):
                g = comb(m, n, k)
                assert combs.count_comb(m, n, k) == oracle.count_labelings(g)


def test_single_tooth_is_a_path():
    for n in range(2, 8):
        for k in range(1, n + 1):
            assert combs.count_comb(1, n, k) == 2 ** (n - 1)


def test_mirror_symmetry():
    for m in range(1, 4):
        for n in range(2, 6):
            for k in range(1, n + 1):
                assert combs.count_comb(m, n, k) == combs.count_comb(m, n, n - k + 1)


def test_per_vertex_counts_sum_to_total():
    for m, n, k in [(2, 3, 1), (3, 3, 2), (2, 4, 2), (4, 2, 1)]:
        total = sum(
            combs.count_from_vertex(m, n, k, j, s)
            for j in range(1, m + 1)
            for s in range(1, n + 1)
        )
        assert total == combs.count_comb(m, n, k)


def test_per_vertex_counts_match_oracle():
    for m, n, k in [(2, 3, 2), (3, 2, 1), (2, 4, 1)]:
        g = comb(m, n, k)
        for j in range(1, m + 1):
            for s in range(1, n + 1):
                assert combs.count_from_vertex(m, n, k, j, s) == oracle.count_labelings_from(
                    g, vertex_at(g, (j, s))
                )


def test_t_spine_matches_oracle():
    for m, n, k in [(2, 2, 1), (3, 3, 2), (2, 5, 3), (4, 3, 1)]:
        g = comb(m, n, k)
        assert combs.t_spine(m, n, k) == oracle.count_labelings_from(g, vertex_at(g, (1, k)))


def test_spine_convolution_identity():
    for m in range(0, 7):
        for n in range(2, 6):
            for k in range(1, n + 1):
                assert combs.lemma_pac_check(m, n, k)


def test_corollary_comb_disagrees_with_theorem():
    rec = combs.corollary_comb(2)
    assert rec == (4, 8, False)
    assert rec.closed_form == oracle.count_labelings(comb(2, 2, 1))
    rec3 = combs.corollary_comb(3)
    assert rec3 == (24, 72, False)
    assert rec3.closed_form == oracle.count_labelings(comb(3, 2, 1))


def test_corollary_double_comb_agrees():
    for m in range(1, 5):
        rec = combs.corollary_double_comb(m)
        assert rec.agrees and rec.value == rec.closed_form
    assert combs.corollary_double_comb(2).value == 112


def test_oeis_comb_row_sequence():
    assert combs.oeis_comb_row_sequence(4) == [2, 8, 72, 960]
    assert combs.oeis_comb_row_sequence(0) == []


def test_parameter_validation():
    with pytest.raises(ValueError):
        combs.count_comb(0, 2, 1)
    with pytest.raises(ValueError):
        combs.count_comb(2, 2, 3)
    with pytest.raises(ValueError):
        combs.count_from_vertex(2, 2, 1, 3, 1)
    with pytest.raises(ValueError):
        combs.corollary_comb(0)


def test_a_term_block_positivity_boundary():
    for m, n, kp in [(2, 3, 2), (3, 4, 3), (1, 2, 1)]:
        for j in range(1, m + 1):
            for y in range(1, n + 1):
                block = combs.A_term(m, n, j, kp, y)
                # a cut beyond the spine position is impossible
                assert (block >= 1) == (y <= kp)
