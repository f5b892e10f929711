"""Exhaustive enumeration of every general Euclidean trace for a pair.

This is the brute-force side of the minimality story: it walks the full
binary tree of remainder-sign choices (forced divisions have no branch) and
certifies, by inspection of every trace, which step total and division count
are actually minimal.  Nothing here consults the named variants, so the
result is an independent oracle for them.

Traces are generated lazily in depth-first order with the +1 branch first;
:func:`minimize` aggregates that same walk without materializing whole
traces, keeping memory constant apart from the retained witnesses.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .euclid import EuclidStep, EuclidTrace, InvalidInputError, Variant

DEFAULT_BOUND = 10_000
MAX_WITNESSES = 16


class BoundExceededError(ValueError):
    """Raised when a pair exceeds the configured enumeration ceiling."""


@dataclass(frozen=True)
class EnumerationResult:
    pair: tuple[int, int]
    traces_examined: int
    min_total_steps: int
    min_divisions: int
    witnesses_min_steps: tuple[EuclidTrace, ...]


def _check_pair(x0: int, x1: int, bound: int) -> None:
    if x1 < 1 or x0 < x1:
        raise InvalidInputError(f"need x0 >= x1 >= 1, got ({x0}, {x1})")
    if x0 > bound:
        raise BoundExceededError(
            f"x0 = {x0} exceeds the enumeration bound {bound}; raise the bound to proceed"
        )


def enumerate_all(x0: int, x1: int, *, bound: int = DEFAULT_BOUND) -> Iterator[EuclidTrace]:
    """Yield every distinct valid trace for (x0, x1) exactly once.

    Depth-first, +1 branch before -1, so the regular trace comes first and
    the order is reproducible.
    """
    _check_pair(x0, x1, bound)
    return _generate(x0, x1)


def _generate(x0: int, x1: int) -> Iterator[EuclidTrace]:
    # Explicit stack: entries are (a, b, entering_step) and a None sentinel
    # that pops the shared path when a subtree is done.  Recursion would
    # overflow on staircase pairs near the bound.
    path: list[EuclidStep] = []
    stack: list[tuple[int, int, EuclidStep | None] | None] = [(x0, x1, None)]
    while stack:
        entry = stack.pop()
        if entry is None:
            path.pop()
            continue
        a, b, enter = entry
        if enter is not None:
            path.append(enter)
        q, r = divmod(a, b)
        if r == 0:
            yield EuclidTrace(tuple(path) + (EuclidStep(a, b, q, 1, 0),), Variant.CUSTOM)
            continue
        stack.append(None)
        stack.append((b, b - r, EuclidStep(a, b, q + 1, -1, b - r)))
        stack.append(None)
        stack.append((b, r, EuclidStep(a, b, q, 1, r)))


def minimize(x0: int, x1: int, *, bound: int = DEFAULT_BOUND) -> EnumerationResult:
    """Aggregate the full enumeration into minima plus witnesses.

    Witness policy: the first MAX_WITNESSES traces attaining the minimal
    step total, in the same depth-first order enumerate_all uses.
    """
    _check_pair(x0, x1, bound)
    best_total = -1
    best_divisions = -1
    examined = 0
    witnesses: list[list[tuple[int, int, int, int, int]]] = []
    # Hot loop over up to millions of tree nodes: steps stay plain tuples
    # here and become EuclidStep objects only for the retained witnesses.
    path: list[tuple[int, int, int, int, int]] = []
    subtractions = 0
    stack: list[tuple[int, int, tuple[int, int, int, int, int] | None] | None] = [
        (x0, x1, None)
    ]
    while stack:
        entry = stack.pop()
        if entry is None:
            subtractions -= path.pop()[2]
            continue
        a, b, enter = entry
        if enter is not None:
            path.append(enter)
            subtractions += enter[2]
        q, r = divmod(a, b)
        if r == 0:
            examined += 1
            divisions = len(path) + 1
            total = subtractions + q + divisions - 1
            if best_total < 0 or total < best_total:
                best_total = total
                witnesses = [path + [(a, b, q, 1, 0)]]
            elif total == best_total and len(witnesses) < MAX_WITNESSES:
                witnesses.append(path + [(a, b, q, 1, 0)])
            if best_divisions < 0 or divisions < best_divisions:
                best_divisions = divisions
            continue
        stack.append(None)
        stack.append((b, b - r, (a, b, q + 1, -1, b - r)))
        stack.append(None)
        stack.append((b, r, (a, b, q, 1, r)))
    return EnumerationResult(
        pair=(x0, x1),
        traces_examined=examined,
        min_total_steps=best_total,
        min_divisions=best_divisions,
        witnesses_min_steps=tuple(
            EuclidTrace(tuple(EuclidStep(*s) for s in steps), Variant.CUSTOM)
            for steps in witnesses
        ),
    )
