"""Labeling counts for the two-cycle graphs S(a1, a2, a3): three internally
disjoint paths of a1, a2, a3 vertices whose row-1 and row-3 endpoints attach
to the two endpoints (junctions) of the middle row.

The per-start quantities follow the junction-order decomposition:

  term_A(a1, a2, a3)     labelings started at the left junction (2, 1).
  term_B(a1, a2, a3, s)  labelings started at middle vertex (2, s),
                         2 <= s <= a2 - 1, in which the left junction is
                         labeled before the right one.
  term_C(a1, a2, a3, s)  labelings started at top vertex (1, s),
                         1 <= s <= a1, same junction order constraint.

Reflections reduce everything else to these three: starting at the right
junction mirrors A, the red-first complement of B(s) is B(a2 + 1 - s), of
C(s) is C(a1 + 1 - s), and bottom-row starts are C with a1 and a3 swapped.
Summing,

  count = 2 A + 2 sum_s B(s) + 2 sum_s C(s) + 2 sum_s C_swapped(s).

term_B is stated for every interior start 2 <= s <= a2 - 1, including
s = 2; the brute-force oracle confirms that boundary (see the tests), which
the total above needs.

The q-sum prefixes in term_B and term_C count the interleavings of the two
stretches the walk labels in its own row before first descending to the
left junction: s - 2 vertices to the left of a middle start (s - 1 for a
top start) against q - s to the right, giving multinomial(q - s, s - 2) =
C(q - 2, s - 2) and multinomial(q - s, s - 1) = C(q - 1, s - 1). The
constrained brute-force oracle pins these down; the superficially plausible
alternatives multinomial(q - 2, s - 2) and multinomial(q - 1, s - 1) fail
it on every non-degenerate start (640 checks, see the tests).

All multinomials here go through bigmath.multinomial, which raises on a
negative part rather than clamping to zero, so a malformed term cannot
silently vanish. Empty sums are 0 (for a_i = 2 several inner ranges are
empty by design).
"""

from __future__ import annotations

from .bigmath import multinomial

__all__ = ["count_two_cycles", "term_A", "term_B", "term_C"]


def _m3(a: int, b: int, c: int) -> int:
    return multinomial((a, b, c))


def _m2(a: int, b: int) -> int:
    return multinomial((a, b))


def _check(a1: int, a2: int, a3: int) -> None:
    if min(a1, a2, a3) < 2:
        raise ValueError("parameter out of range: path lengths must all be >= 2")


def term_A(a1: int, a2: int, a3: int) -> int:
    """Labelings of S(a1, a2, a3) started at the left junction."""
    _check(a1, a2, a3)
    total = 0
    # walk reaches the right junction through the middle row
    for k in range(a1):
        for l in range(a3):
            total += (
                _m3(a2 - 2, k, l)
                * _m2(a1 - k, a3 - l)
                * 2 ** ((a1 - 1 - k) + (a3 - 1 - l))
            )
    for k in range(a3):
        total += _m3(a2 - 2, k, a1) * 2 ** (a3 - 1 - k)
    for k in range(a1):
        total += _m3(a2 - 2, k, a3) * 2 ** (a1 - 1 - k)
    total += _m3(a2 - 2, a1, a3)
    # walk reaches the right junction through the top row first
    for k in range(a1):
        for l in range(a2 - 2):
            total += (
                _m3(a3, k, l)
                * _m2(a1 - k, a2 - 2 - l)
                * 2 ** ((a1 - 1 - k) + (a2 - 3 - l))
            )
    for l in range(a2 - 2):
        total += _m3(a1, a3, l) * 2 ** (a2 - 3 - l)
    # or through the bottom row first
    for k in range(a3):
        for l in range(a2 - 2):
            total += (
                _m3(a1, k, l)
                * _m2(a3 - k, a2 - 2 - l)
                * 2 ** ((a3 - 1 - k) + (a2 - 3 - l))
            )
    return total


def term_B(a1: int, a2: int, a3: int, s: int) -> int:
    """Labelings started at middle vertex (2, s) with the left junction
    labeled before the right one."""
    _check(a1, a2, a3)
    if not 2 <= s <= a2 - 1:
        raise ValueError(f"parameter out of range: s = {s} must be in [2, {a2 - 1}]")
    total = 0
    # q = rightmost middle position labeled before the walk descends to the
    # left junction; the right junction is then reached through the middle
    for q in range(s, a2):
        prefix = _m2(q - s, s - 2)
        block = 0
        for k in range(a1):
            for l in range(a3):
                block += (
                    _m3(a2 - 1 - q, k, l)
                    * _m2(a1 - k, a3 - l)
                    * 2 ** ((a1 - 1 - k) + (a3 - 1 - l))
                )
        for k in range(a1):
            block += _m3(a2 - 1 - q, k, a3) * 2 ** (a1 - 1 - k)
        for k in range(a3):
            block += _m3(a2 - 1 - q, k, a1) * 2 ** (a3 - 1 - k)
        block += _m3(a2 - 1 - q, a1, a3)
        total += prefix * block
    # or reached around through the top or bottom row
    for q in range(s, a2 - 1):
        prefix = _m2(q - s, s - 2)
        block = 0
        for l in range(a2 - 1 - q):
            for k in range(a1):
                block += (
                    _m3(a3, k, l)
                    * _m2(a1 - k, a2 - 1 - q - l)
                    * 2 ** ((a1 - 1 - k) + (a2 - 2 - q - l))
                )
            for k in range(a3):
                block += (
                    _m3(a1, k, l)
                    * _m2(a3 - k, a2 - 1 - q - l)
                    * 2 ** ((a3 - 1 - k) + (a2 - 2 - q - l))
                )
            block += _m3(a3, a1, l) * 2 ** (a2 - 2 - q - l)
        total += prefix * block
    return total


def term_C(a1: int, a2: int, a3: int, s: int) -> int:
    """Labelings started at top vertex (1, s) with the left junction
    labeled before the right one. Bottom-row starts are the same function
    with a1 and a3 swapped."""
    _check(a1, a2, a3)
    if not 1 <= s <= a1:
        raise ValueError(f"parameter out of range: s = {s} must be in [1, {a1}]")
    total = 0
    for q in range(s, a1 + 1):
        prefix = _m2(q - s, s - 1)
        block = 0
        # right junction reached through the middle row
        for k in range(a1 - q):
            for l in range(a3):
                block += (
                    _m3(a2 - 2, k, l)
                    * _m2(a1 - q - k, a3 - l)
                    * 2 ** ((a1 - 1 - q - k) + (a3 - 1 - l))
                )
        for l in range(a3):
            block += _m3(a2 - 2, a1 - q, l) * 2 ** (a3 - 1 - l)
        for k in range(a1 - q):
            block += _m3(a2 - 2, k, a3) * 2 ** (a1 - 1 - q - k)
        block += _m3(a1 - q, a2 - 2, a3)
        # right junction reached around through the bottom row
        for l in range(a2 - 2):
            for k in range(a3):
                block += (
                    _m3(a1 - q, k, l)
                    * _m2(a2 - 2 - l, a3 - k)
                    * 2 ** ((a3 - 1 - k) + (a2 - 3 - l))
                )
        for l in range(a2 - 2):
            block += _m3(a1 - q, a3, l) * 2 ** (a2 - 3 - l)
        # or around through the rest of the top row
        for l in range(a2 - 2):
            for k in range(a1 - q):
                block += (
                    _m3(k, a3, l)
                    * _m2(a2 - 2 - l, a1 - q - k)
                    * 2 ** ((a1 - 1 - q - k) + (a2 - 3 - l))
                )
        total += prefix * block
    return total


def count_two_cycles(a1: int, a2: int, a3: int) -> int:
    """Total labelings of S(a1, a2, a3)."""
    _check(a1, a2, a3)
    total = 2 * term_A(a1, a2, a3)
    total += 2 * sum(term_B(a1, a2, a3, s) for s in range(2, a2))
    total += 2 * sum(term_C(a1, a2, a3, s) for s in range(1, a1 + 1))
    total += 2 * sum(term_C(a3, a2, a1, s) for s in range(1, a3 + 1))
    return total
