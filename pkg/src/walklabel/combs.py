"""Labeling counts for combs: m copies of the path P_n, with consecutive
copies joined by an edge at position k.

t_spine(m, n, k) counts the labelings of the comb C(m, n, k) that start at
the spine vertex of the first tooth, position (1, k). A_term(m, n, j, kp, y)
is the building block for per-vertex counts: labelings in which the walk
starts on tooth j and the interleaving constraint is parameterized by the
effective spine position kp and a cut index y. count_from_vertex assembles
the per-start count for any (j, s) from these blocks, and count_comb is the
fully summed closed form, evaluated with exact rationals and asserted
integral.

Two compact product formulas for single columns are kept for reference:
corollary_double_comb agrees with count_comb, while corollary_comb does not
(already at m = 2 it yields 4 where the closed form and the brute-force
oracle both yield 8). Both return their value together with the comparison
so callers see the disagreement instead of inheriting it.
"""

from __future__ import annotations

from typing import NamedTuple

from .bigmath import Fraction, binomial, double_factorial, exact_int, factorial, multinomial

__all__ = [
    "A_term",
    "CorollaryComparison",
    "corollary_comb",
    "corollary_double_comb",
    "count_comb",
    "count_from_vertex",
    "lemma_pac_check",
    "oeis_comb_row_sequence",
    "t_spine",
]


def _check_mnk(m: int, n: int, k: int, min_m: int = 1) -> None:
    if m < min_m:
        raise ValueError(f"parameter out of range: m = {m} must be >= {min_m}")
    if n < 2:
        raise ValueError(f"parameter out of range: n = {n} must be >= 2")
    if not 1 <= k <= n:
        raise ValueError(f"parameter out of range: k = {k} must be in [1, {n}]")


def t_spine(m: int, n: int, k: int) -> int:
    """Labelings of C(m, n, k) starting at spine vertex (1, k); the empty
    comb (m = 0) contributes the neutral factor 1."""
    _check_mnk(m, n, k, min_m=0)
    if m == 0:
        return 1
    value = binomial(n - 1, k - 1) ** m
    for tooth in range(1, m):
        value *= binomial((tooth + 1) * n - 1, n - 1)
    return value


def A_term(m: int, n: int, j: int, kp: int, y: int) -> int:
    """Block count for a start on tooth j with effective spine position kp:
    the y-th cut of tooth j against the teeth on either side."""
    _check_mnk(m, n, kp)
    if not 1 <= j <= m:
        raise ValueError(f"parameter out of range: j = {j} must be in [1, {m}]")
    if not 1 <= y <= n:
        raise ValueError(f"parameter out of range: y = {y} must be in [1, {n}]")
    return (
        multinomial([(j - 1) * n, n - y, (m - j) * n])
        * binomial(n - y, n - kp)
        * t_spine(j - 1, n, kp)
        * t_spine(m - j, n, kp)
    )


def count_from_vertex(m: int, n: int, k: int, j: int, s: int) -> int:
    """Labelings of C(m, n, k) whose first label lands on vertex (j, s)."""
    _check_mnk(m, n, k)
    if not 1 <= j <= m:
        raise ValueError(f"parameter out of range: j = {j} must be in [1, {m}]")
    if not 1 <= s <= n:
        raise ValueError(f"parameter out of range: s = {s} must be in [1, {n}]")
    if s == k:
        return A_term(m, n, j, k, 1)
    if s < k:
        return sum(
            binomial(y - 2, k - s - 1) * A_term(m, n, j, k, y)
            for y in range(k - s + 1, k + 1)
        )
    # s > k: the tooth reversed, spine position n - k + 1
    kp = n - k + 1
    return sum(
        binomial(y - 2, s - k - 1) * A_term(m, n, j, kp, y)
        for y in range(s - k + 1, kp + 1)
    )


def count_comb(m: int, n: int, k: int) -> int:
    """Total labelings of C(m, n, k), by the summed closed form."""
    _check_mnk(m, n, k)
    prefactor = (
        Fraction(1, factorial(m - 1))
        * Fraction(2 * binomial(n - 1, k - 1), factorial(n)) ** (m - 1)
    )
    bracket = (
        Fraction(1, factorial(n - k))
        * sum(
            Fraction(2 ** (y - 2) * factorial(m * n - y), factorial(k - y))
            for y in range(2, k + 1)
        )
        + Fraction(1, factorial(k - 1))
        * sum(
            Fraction(2 ** (y - 2) * factorial(m * n - y), factorial(n - k + 1 - y))
            for y in range(2, n - k + 2)
        )
        + Fraction(factorial(m * n - 1), factorial(n - k) * factorial(k - 1))
    )
    return exact_int(prefactor * bracket, f"count_comb({m}, {n}, {k})")


def lemma_pac_check(m: int, n: int, k: int) -> bool:
    """Exact identity between the spine-count convolution and its product
    form: sum over j of t_spine(j)/((jn)!) * t_spine(m-j)/(((m-j)n)!)
    against (1/m!) (2 C(n-1, k-1) / n!)^m."""
    _check_mnk(m, n, k, min_m=0)
    lhs = sum(
        Fraction(t_spine(j, n, k), factorial(j * n))
        * Fraction(t_spine(m - j, n, k), factorial((m - j) * n))
        for j in range(m + 1)
    )
    rhs = Fraction(1, factorial(m)) * Fraction(2 * binomial(n - 1, k - 1), factorial(n)) ** m
    return lhs == rhs


class CorollaryComparison(NamedTuple):
    value: int
    closed_form: int
    agrees: bool


def corollary_comb(m: int) -> CorollaryComparison:
    """Compact product claimed for C(m, 2, 1): 2^(m-1) m (m-1)!!, compared
    against count_comb(m, 2, 1). The two disagree for every m >= 2; the
    closed form is the one the oracle confirms, so treat this value as a
    historical reference only."""
    if m < 1:
        raise ValueError(f"parameter out of range: m = {m} must be >= 1")
    value = 2 ** (m - 1) * m * double_factorial(m - 1)
    closed = count_comb(m, 2, 1)
    return CorollaryComparison(value, closed, value == closed)


def corollary_double_comb(m: int) -> CorollaryComparison:
    """Compact form for the double comb C(m, 3, 2):
    2^(m-1) (3m+1)! / (3^m (3m-1) m!), compared against count_comb."""
    if m < 1:
        raise ValueError(f"parameter out of range: m = {m} must be >= 1")
    value = exact_int(
        Fraction(2 ** (m - 1) * factorial(3 * m + 1), 3**m * (3 * m - 1) * factorial(m)),
        f"corollary_double_comb({m})",
    )
    closed = count_comb(m, 3, 2)
    return CorollaryComparison(value, closed, value == closed)


def oeis_comb_row_sequence(count: int) -> list[int]:
    """count_comb(m, 2, 1) for m = 1 .. count, the sequence exported for
    manual comparison against OEIS A151817."""
    if count < 0:
        raise ValueError("parameter out of range: count must be >= 0")
    return [count_comb(m, 2, 1) for m in range(1, count + 1)]
