"""Exact integer and rational arithmetic shared by every counting module.

Counts are plain Python ints (arbitrary precision); exact non-integer
intermediates use fractions.Fraction, re-exported here as the canonical
rational type. The factorial cache below is unbounded and monotone (it only
ever gains entries); under free threading concurrent misses may compute a
value twice, but both writes store the same int, so results are identical to
sequential execution. Call ``factorial.cache_clear()`` if bounded memory
matters more than speed.
"""

from __future__ import annotations

import math
import sys
from fractions import Fraction
from functools import cache

__all__ = [
    "Fraction",
    "binomial",
    "double_factorial",
    "exact_int",
    "factorial",
    "from_decimal",
    "multinomial",
    "to_decimal",
]


@cache
def factorial(n: int) -> int:
    """n! for n >= 0."""
    if n < 0:
        raise ValueError("factorial of negative argument")
    return math.factorial(n)


def binomial(n: int, k: int) -> int:
    """C(n, k), defined as 0 whenever k < 0 or k > n.

    The zero convention makes boundary sums total; callers that must reject
    out-of-range arguments use multinomial instead.
    """
    if k < 0 or k > n or n < 0:
        return 0
    return math.comb(n, k)


def multinomial(parts: list[int] | tuple[int, ...]) -> int:
    """Multinomial coefficient (sum(parts))! / prod(part!).

    Unlike binomial there is no zero convention: a negative part raises,
    because the closed-form evaluators that call this must never silently
    zero out a malformed term.
    """
    total = 0
    out = 1
    for part in parts:
        if part < 0:
            raise ValueError(f"negative multinomial part: {part}")
        total += part
        out *= math.comb(total, part)
    return out


def double_factorial(n: int) -> int:
    """n!! = n (n-2) (n-4) ... down to 1 or 2, with (-1)!! = 0!! = 1."""
    if n < -1:
        raise ValueError("double factorial of argument below -1")
    out = 1
    while n > 1:
        out *= n
        n -= 2
    return out


def exact_int(value: Fraction | int, what: str = "value") -> int:
    """Collapse an exact rational to int, refusing non-integers loudly."""
    if isinstance(value, int):
        return value
    if value.denominator != 1:
        raise ValueError(f"formula integrality violated: {what} = {value}")
    return value.numerator


def to_decimal(n: int) -> str:
    """Serialize a count as a decimal string.

    Lifts the interpreter's int-to-str digit limit when the value is large
    enough to trip it (counts here routinely exceed 4300 digits).
    """
    needed = n.bit_length() // 3 + 16
    if hasattr(sys, "get_int_max_str_digits"):
        if sys.get_int_max_str_digits() not in (0,) and needed > sys.get_int_max_str_digits():
            sys.set_int_max_str_digits(needed)
    return str(n)


def from_decimal(text: str) -> int:
    """Parse a decimal count back to int (round-trips to_decimal output)."""
    text = text.strip()
    if hasattr(sys, "get_int_max_str_digits"):
        limit = sys.get_int_max_str_digits()
        if limit != 0 and len(text) >= limit:
            sys.set_int_max_str_digits(len(text) + 16)
    return int(text, 10)
