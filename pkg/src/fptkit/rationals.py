"""Rational parsing/formatting and small number-theory helpers.

All user-facing rationals travel as strings of the form "a/b" (or a bare
integer on input).  Decimals are rejected on purpose: every quantity in
this package is exact and floats would silently poison that.
"""

from __future__ import annotations

import re
from fractions import Fraction

from .errors import DomainError

_RATIO_RE = re.compile(r"^[+-]?\d+(?:/\d+)?$")


def parse_ratio(text: str) -> Fraction:
    """Parse "a/b" or a bare integer into a Fraction.

    Anything else (decimals, whitespace inside the token, empty string)
    raises DomainError.
    """
    token = text.strip()
    if not _RATIO_RE.match(token):
        raise DomainError(
            f"not a rational: {text!r} (expected 'a/b' or an integer; "
            "decimals are not accepted)"
        )
    if "/" in token:
        num, den = token.split("/")
        if int(den) == 0:
            raise DomainError(f"zero denominator in {text!r}")
        return Fraction(int(num), int(den))
    return Fraction(int(token))


def parse_ratio_list(text: str) -> tuple[Fraction, ...]:
    """Parse a comma-separated list of rationals; "" means the empty list."""
    if text.strip() == "":
        return ()
    return tuple(parse_ratio(item) for item in text.split(","))


def format_ratio(x: Fraction) -> str:
    """Render a rational as "a/b" in lowest terms, denominator always shown."""
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def is_prime(n: int) -> bool:
    # trial division; every prime in this package is tiny
    if n < 2:
        return False
    if n < 4:
        return True
    if n % 2 == 0:
        return False
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True
