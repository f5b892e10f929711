"""Exact extended-rational values: canonical fractions plus a point at infinity.

Tangle numbers live here.  The type is deliberately narrow: the move calculus
only ever needs translation by +1/-1 and the negative reciprocal, so that is
all it gets.  Everything is immutable and kept in canonical form, which makes
equality checks trivial and values safe to share across threads.

Python integers are arbitrary precision, so no overflow handling is needed
anywhere in this module; arithmetic is exact by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import gcd


class IndeterminateFormError(ValueError):
    """Raised for the meaningless form 0/0."""


class FractionParseError(ValueError):
    """Raised when a fraction string does not match the accepted grammar."""


@dataclass(frozen=True)
class ExtendedRational:
    """A fraction in lowest terms with a non-negative denominator.

    Canonical form: gcd(|numerator|, denominator) == 1, the sign lives in the
    numerator, zero is (0, 1), and the single point at infinity is (1, 0).
    Construct values through :func:`normalize`; the raw constructor asserts
    canonical form but does not repair it.
    """

    numerator: int
    denominator: int

    def __post_init__(self) -> None:
        # Debug-build canonical-form checks; normalize() is the public door.
        assert self.denominator >= 0
        if self.denominator == 0:
            assert self.numerator == 1
        else:
            assert gcd(abs(self.numerator), self.denominator) == 1

    @property
    def is_infinite(self) -> bool:
        return self.denominator == 0

    @property
    def is_zero(self) -> bool:
        return self.numerator == 0 and self.denominator != 0

    def sign(self) -> int:
        """Sign of a finite value as -1, 0 or +1."""
        if self.is_infinite:
            raise ValueError("infinity has no sign")
        return (self.numerator > 0) - (self.numerator < 0)

    def __neg__(self) -> ExtendedRational:
        if self.is_infinite:
            return self
        return ExtendedRational(-self.numerator, self.denominator)

    def __str__(self) -> str:
        if self.denominator == 0:
            return "inf"
        if self.denominator == 1:
            return str(self.numerator)
        return f"{self.numerator}/{self.denominator}"


ZERO = ExtendedRational(0, 1)
INFINITY = ExtendedRational(1, 0)


def normalize(numerator: int, denominator: int) -> ExtendedRational:
    """Reduce an integer pair to the canonical extended rational.

    Any (k, 0) with k != 0 canonicalizes to infinity; a negative denominator
    moves its sign into the numerator.  Raises IndeterminateFormError for 0/0.
    """
    if numerator == 0 and denominator == 0:
        raise IndeterminateFormError("0/0 is indeterminate")
    if denominator == 0:
        return INFINITY
    if denominator < 0:
        numerator, denominator = -numerator, -denominator
    g = gcd(abs(numerator), denominator)
    return ExtendedRational(numerator // g, denominator // g)


def twist_value(f: ExtendedRational, direction: int) -> ExtendedRational:
    """Return f + direction, where direction is +1 or -1; infinity is fixed."""
    if direction not in (1, -1):
        raise ValueError(f"twist direction must be +1 or -1, got {direction!r}")
    if f.is_infinite:
        return f
    # gcd(n + e*d, d) == gcd(n, d) == 1, so the result is already canonical.
    return ExtendedRational(f.numerator + direction * f.denominator, f.denominator)


def rotate_value(f: ExtendedRational) -> ExtendedRational:
    """Return -1/f, with rotate(0) = infinity and rotate(infinity) = 0."""
    if f.is_infinite:
        return ZERO
    if f.is_zero:
        return INFINITY
    if f.numerator > 0:
        return ExtendedRational(-f.denominator, f.numerator)
    return ExtendedRational(f.denominator, -f.numerator)


_FRACTION_RE = re.compile(r"-?\d+(?:/\d+)?")


def parse_fraction(text: str) -> ExtendedRational:
    """Parse the CLI fraction grammar: `p/q`, `p` (meaning p/1), or `inf`.

    An optional leading `-` is allowed on the numeric forms only.
    """
    s = text.strip()
    if s == "inf":
        return INFINITY
    if not _FRACTION_RE.fullmatch(s):
        raise FractionParseError(f"not a valid fraction: {text!r}")
    num, slash, den = s.partition("/")
    if not slash:
        return normalize(int(num), 1)
    return normalize(int(num), int(den))
