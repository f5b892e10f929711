"""The general Euclidean algorithm family with pluggable remainder signs.

Every division step writes a = b*q + eps*r with 0 <= r < b and eps = +1 or
-1.  When b does not divide a both signs are available: eps = +1 keeps the
floor quotient and positive remainder, eps = -1 takes one extra multiple of b
and the complementary remainder b - r.  A sign chooser picks between them,
which yields the classic variants as fixed policies:

* regular: always +1;
* least absolute remainders: the smaller of r and b - r, ties to +1;
* negative remainders: always -1 (the forced terminal step stays +1).

Step accounting counts every subtraction (the quotients summed) plus every
switch to the next working pair (equations minus one).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable


class Variant(str, Enum):
    REGULAR = "Regular"
    LEAST_ABSOLUTE = "LeastAbsolute"
    NEGATIVE = "Negative"
    CUSTOM = "Custom"


# Decides eps for the current pair (a, b); consulted only when b does not
# divide a, and must be deterministic in (a, b).
SignChooser = Callable[[int, int], int]


class InvalidInputError(ValueError):
    """Raised when a runner is given a pair outside x0 >= x1 >= 1."""


class WrongVariantError(ValueError):
    """Raised when an operation requires a trace of a different variant."""


@dataclass(frozen=True)
class EuclidStep:
    """One division equation a = b*quotient + epsilon*remainder."""

    a: int
    b: int
    quotient: int
    epsilon: int
    remainder: int

    def __post_init__(self) -> None:
        assert self.epsilon in (1, -1)
        assert self.quotient >= 1
        assert 0 <= self.remainder < self.b
        assert self.remainder != 0 or self.epsilon == 1
        assert self.a == self.b * self.quotient + self.epsilon * self.remainder


@dataclass(frozen=True)
class EuclidTrace:
    """An ordered, chained list of steps ending in the zero remainder."""

    steps: tuple[EuclidStep, ...]
    variant: Variant

    def __post_init__(self) -> None:
        assert self.steps
        assert self.steps[-1].remainder == 0
        for prev, cur in zip(self.steps, self.steps[1:]):
            assert prev.remainder != 0
            assert cur.a == prev.b and cur.b == prev.remainder


@dataclass(frozen=True)
class StepCount:
    subtractions: int
    swaps: int
    total: int


def always_positive(a: int, b: int) -> int:
    return 1


def always_negative(a: int, b: int) -> int:
    return -1


def least_absolute(a: int, b: int) -> int:
    """Pick the remainder of smaller magnitude; the exact tie goes positive.

    With 2r = b both remainders have the same magnitude, and the positive
    choice saves one subtraction; the following division is then forced
    terminal either way.
    """
    return 1 if 2 * (a % b) <= b else -1


def run_general(
    x0: int, x1: int, chooser: SignChooser, *, variant: Variant = Variant.CUSTOM
) -> EuclidTrace:
    """Run the division chain from (x0, x1) under a sign-choosing policy.

    Requires x0 >= x1 >= 1.  Forced divisions (b divides a) bypass the
    chooser and always close the trace with epsilon +1 and remainder 0.
    """
    if x1 < 1 or x0 < x1:
        raise InvalidInputError(f"need x0 >= x1 >= 1, got ({x0}, {x1})")
    steps: list[EuclidStep] = []
    a, b = x0, x1
    while True:
        q, r = divmod(a, b)
        if r == 0:
            steps.append(EuclidStep(a, b, q, 1, 0))
            return EuclidTrace(tuple(steps), variant)
        eps = chooser(a, b)
        if eps == 1:
            steps.append(EuclidStep(a, b, q, 1, r))
            a, b = b, r
        elif eps == -1:
            steps.append(EuclidStep(a, b, q + 1, -1, b - r))
            a, b = b, b - r
        else:
            raise ValueError(f"sign chooser must return +1 or -1, got {eps!r}")


def run_regular(x0: int, x1: int) -> EuclidTrace:
    """All remainders positive."""
    return run_general(x0, x1, always_positive, variant=Variant.REGULAR)


def run_lar(x0: int, x1: int) -> EuclidTrace:
    """Least absolute remainders, ties resolved to the positive side."""
    return run_general(x0, x1, least_absolute, variant=Variant.LEAST_ABSOLUTE)


def run_negative(x0: int, x1: int) -> EuclidTrace:
    """All non-terminal remainders negative."""
    return run_general(x0, x1, always_negative, variant=Variant.NEGATIVE)


def gcd_of(trace: EuclidTrace) -> int:
    """The divisor of the final, exact step: the gcd of the original pair."""
    return trace.steps[-1].b


def division_count(trace: EuclidTrace) -> int:
    """Number of division equations in the trace."""
    return len(trace.steps)


def step_count(trace: EuclidTrace) -> StepCount:
    """Subtraction/swap accounting: sum of quotients plus equations minus one."""
    subtractions = sum(step.quotient for step in trace.steps)
    swaps = len(trace.steps) - 1
    return StepCount(subtractions, swaps, subtractions + swaps)


def goodman_zaring_defect(lar_trace: EuclidTrace) -> int:
    """Count of negative remainders in a least-absolute-remainders trace.

    Equals the number of divisions saved relative to the regular run of the
    same pair.
    """
    if lar_trace.variant is not Variant.LEAST_ABSOLUTE:
        raise WrongVariantError(
            f"expected a {Variant.LEAST_ABSOLUTE.value} trace, got {lar_trace.variant.value}"
        )
    return sum(1 for step in lar_trace.steps if step.epsilon == -1)


def trace_to_dict(trace: EuclidTrace) -> dict:
    """JSON-ready form: variant tag plus steps as {a, b, q, eps, r} objects."""
    return {
        "variant": trace.variant.value,
        "steps": [
            {"a": s.a, "b": s.b, "q": s.quotient, "eps": s.epsilon, "r": s.remainder}
            for s in trace.steps
        ],
    }
