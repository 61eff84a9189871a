"""Labeling counts for perfect m-ary trees.

Conventions: T(h, m) is the perfect m-ary tree of height h (all leaves at
depth h, every internal vertex with m children). t(h, m, k) counts the
labelings that start at a depth-k vertex; s(h, m, k) counts the ways to
finish labeling T(h, m) minus one depth-(k+1) subtree, given that exactly
the path from the root to the bereaved depth-k parent is labeled (the
recursive step the t recurrence consumes).

Each quantity has two independent evaluation paths: the mutual recurrences
(t_rec, s_rec) and fully expanded products (t_closed, s_closed). Tests hold
them equal and hold both equal to the brute-force oracle on small trees.

Sizes below are written with the geometric sums (m^a - m^b) // (m - 1),
which are exact for every m >= 2; all divisions in this module are exact
integer divisions by construction.
"""

from __future__ import annotations

from functools import cache

from .bigmath import binomial, multinomial

__all__ = [
    "alpha",
    "beta",
    "count_perfect_tree",
    "gamma",
    "oeis_tree_root_sequence",
    "s_closed",
    "s_rec",
    "t_closed",
    "t_rec",
]


def _check_hm(h: int, m: int, min_h: int = 0) -> None:
    if m < 2:
        raise ValueError(f"parameter out of range: m = {m} must be >= 2")
    if h < min_h:
        raise ValueError(f"parameter out of range: h = {h} must be >= {min_h}")


def _geo(m: int, a: int, b: int = 0) -> int:
    """(m^a - m^b) // (m - 1), the number of vertices at depths b..a-1."""
    return (m**a - m**b) // (m - 1)


def alpha(h: int, m: int) -> int:
    """Ways to interleave the m depth-(<= h) subtrees hanging off one root:
    multinomial of m blocks of (m^h - 1) / (m - 1) vertices each."""
    _check_hm(h, m, min_h=1)
    return multinomial([_geo(m, h)] * m)


def beta(h: int, m: int, k: int) -> int:
    """Interleaving factor at the bereaved depth-k vertex of T(h, m):
    m - 1 intact child subtrees of height h - k - 1 against the block of
    vertices outside the depth-k subtree that are still unlabeled."""
    _check_hm(h, m, min_h=1)
    if not 0 <= k <= h - 1:
        raise ValueError(f"parameter out of range: k = {k} must be in [0, {h - 1}]")
    return multinomial([_geo(m, h - k)] * (m - 1) + [_geo(m, h + 1, h - k + 1)])


def gamma(h: int, m: int, k: int) -> int:
    """Positions of the depth-k start's subtree among all non-root vertices:
    C((m^(h+1) - m)/(m - 1), (m^(h+1-k) - m)/(m - 1))."""
    _check_hm(h, m)
    if not 0 <= k <= h:
        raise ValueError(f"parameter out of range: k = {k} must be in [0, {h}]")
    return binomial(_geo(m, h + 1, 1), _geo(m, h + 1 - k, 1))


@cache
def _t0_table(h: int, m: int) -> tuple[int, ...]:
    """t(j, m, 0) for j = 0..h: root-started counts, built bottom-up."""
    values = [1]
    for j in range(1, h + 1):
        values.append(values[j - 1] ** m * multinomial([_geo(m, j)] * m))
    return tuple(values)


@cache
def s_rec(h: int, m: int, k: int) -> int:
    """Completion count after removing one depth-(k+1) subtree, by the
    mutual recurrence (bottom-up in k over the t(., m, 0) table)."""
    _check_hm(h, m, min_h=1)
    if not 0 <= k <= h - 1:
        raise ValueError(f"parameter out of range: k = {k} must be in [0, {h - 1}]")
    t0 = _t0_table(h, m)
    value = t0[h - 1] ** (m - 1) * multinomial([_geo(m, h)] * (m - 1))
    for j in range(1, k + 1):
        value = (
            t0[h - j - 1] ** (m - 1)
            * value
            * multinomial([_geo(m, h - j)] * (m - 1) + [_geo(m, h + 1, h - j + 1)])
        )
    return value


@cache
def t_rec(h: int, m: int, k: int) -> int:
    """Labelings of T(h, m) started at a depth-k vertex, by recurrence."""
    _check_hm(h, m)
    if not 0 <= k <= h:
        raise ValueError(f"parameter out of range: k = {k} must be in [0, {h}]")
    t0 = _t0_table(h, m)
    if k == 0:
        return t0[h]
    return (
        t0[h - k]
        * s_rec(h, m, k - 1)
        * binomial(_geo(m, h + 1) - 1, _geo(m, h - k + 1) - 1)
    )


def s_closed(h: int, m: int, k: int) -> int:
    """Product form of s_rec: prod over j of beta(h, m, j) times the alpha
    powers contributed by the m - 1 intact subtrees at each level."""
    _check_hm(h, m, min_h=1)
    if not 0 <= k <= h - 1:
        raise ValueError(f"parameter out of range: k = {k} must be in [0, {h - 1}]")
    value = 1
    for j in range(k + 1):
        value *= beta(h, m, j)
        for level in range(1, h - j):
            value *= alpha(level, m) ** ((m - 1) * m ** (h - 1 - j - level))
    return value


def t_closed(h: int, m: int, k: int) -> int:
    """Product form of t_rec."""
    _check_hm(h, m)
    if not 0 <= k <= h:
        raise ValueError(f"parameter out of range: k = {k} must be in [0, {h}]")
    value = gamma(h, m, k)
    for j in range(1, h - k + 1):
        value *= alpha(j, m) ** (m ** (h - k - j))
    for j in range(k):
        value *= beta(h, m, j)
        for level in range(1, h - j):
            value *= alpha(level, m) ** ((m - 1) * m ** (h - 1 - j - level))
    return value


def count_perfect_tree(h: int, m: int) -> int:
    """Total labelings of T(h, m): sum over start depths of m^k t(h, m, k)."""
    _check_hm(h, m)
    return sum(m**k * t_rec(h, m, k) for k in range(h + 1))


def oeis_tree_root_sequence(count: int) -> list[int]:
    """Root-started counts of perfect binary trees: t(h, 2, 0) for
    h = 0 .. count-1, the sequence exported for comparison against OEIS
    A056972 (offset: term h here is candidate A056972(h + 1))."""
    if count < 0:
        raise ValueError("parameter out of range: count must be >= 0")
    return [t_rec(h, 2, 0) for h in range(count)]
