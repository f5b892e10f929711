"""Tangle-number move calculus and Euclid-driven untangling plans.

A rational tangle is tracked purely through its number: a positive or
negative twist adds +1 or -1, a rotation maps the value to its negative
reciprocal (zero and infinity swap).  Untangling a value means driving it to
zero, and a Euclidean trace for the numerator/denominator pair reads off
directly as a move sequence: each equation contributes its quotient in
twists toward zero, followed by a rotation, except after the last equation.

Which Euclidean variant runs underneath is the planning policy.  Least
absolute remainders gives the same total as the regular variant but with the
fewest rotations; negative remainders keeps every twist in one direction for
start values of magnitude at least one.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, NamedTuple

from .euclid import Variant, run_lar, run_negative, run_regular
from .rationals import ExtendedRational, ZERO, rotate_value, twist_value


class Move(Enum):
    TWIST_POSITIVE = "T"
    TWIST_NEGATIVE = "-T"
    ROTATE = "R"


class MoveParseError(ValueError):
    """Raised for a token outside the move grammar, with its position."""

    def __init__(self, token: str, position: int):
        self.token = token
        self.position = position
        super().__init__(f"bad move token {token!r} at position {position}")


def parse_moves(text: str) -> tuple[Move, ...]:
    """Parse comma-separated move tokens T, -T, R; whitespace is ignored."""
    if not text.strip():
        return ()
    moves = []
    for position, raw in enumerate(text.split(","), start=1):
        token = raw.strip()
        try:
            moves.append(Move(token))
        except ValueError:
            raise MoveParseError(token, position) from None
    return tuple(moves)


def format_moves(moves: Iterable[Move]) -> str:
    return ",".join(move.value for move in moves)


@dataclass(frozen=True)
class TangleState:
    value: ExtendedRational


UNTANGLED = TangleState(ZERO)


class Stage(NamedTuple):
    """A run of same-direction twists tied back to one trace equation."""

    twist_count: int
    twist_direction: int
    trace_step_index: int


@dataclass(frozen=True)
class UntanglePlan:
    start: ExtendedRational
    moves: tuple[Move, ...]
    stages: tuple[Stage, ...]
    policy: Variant


@dataclass(frozen=True)
class PlanMetrics:
    twists: int
    rotations: int
    total: int


@dataclass(frozen=True)
class ReplayReport:
    """Replay of a move sequence: the start value, then one value per move."""

    start: ExtendedRational
    values: tuple[ExtendedRational, ...]
    final: ExtendedRational
    passed: bool


def apply_move(state: TangleState, move: Move) -> TangleState:
    if move is Move.TWIST_POSITIVE:
        return TangleState(twist_value(state.value, 1))
    if move is Move.TWIST_NEGATIVE:
        return TangleState(twist_value(state.value, -1))
    return TangleState(rotate_value(state.value))


def tangle_number(moves: Iterable[Move]) -> ExtendedRational:
    """Fold a move sequence from the untangled value 0."""
    state = UNTANGLED
    for move in moves:
        state = apply_move(state, move)
    return state.value


_RUNNERS = {
    Variant.REGULAR: run_regular,
    Variant.LEAST_ABSOLUTE: run_lar,
    Variant.NEGATIVE: run_negative,
}


def plan_untangle(f: ExtendedRational, policy: Variant) -> UntanglePlan:
    """Build a move sequence that drives f to zero under the given policy.

    Zero needs no moves and infinity a single rotation.  A magnitude below
    one starts with a rotation so the value becomes an ordered pair; from
    there the policy's Euclidean trace on (|numerator|, denominator) is read
    off stage by stage, twisting toward zero.  Negative starts mirror the
    positive construction automatically, since the twist direction is taken
    from the sign of the current value at each stage.
    """
    runner = _RUNNERS.get(policy)
    if runner is None:
        raise ValueError(f"unsupported planning policy: {policy!r}")
    moves: list[Move] = []
    stages: list[Stage] = []
    value = f
    if f.is_infinite:
        moves.append(Move.ROTATE)
        value = rotate_value(value)
    elif not f.is_zero:
        if abs(f.numerator) < f.denominator:
            moves.append(Move.ROTATE)
            value = rotate_value(value)
        trace = runner(abs(value.numerator), value.denominator)
        last = len(trace.steps) - 1
        for index, step in enumerate(trace.steps):
            direction = -value.sign()
            twist = Move.TWIST_POSITIVE if direction > 0 else Move.TWIST_NEGATIVE
            for _ in range(step.quotient):
                moves.append(twist)
                value = twist_value(value, direction)
            stages.append(Stage(step.quotient, direction, index))
            if index != last:
                moves.append(Move.ROTATE)
                value = rotate_value(value)
    assert value.is_zero
    return UntanglePlan(start=f, moves=tuple(moves), stages=tuple(stages), policy=policy)


def replay(start: ExtendedRational, moves: Iterable[Move]) -> ReplayReport:
    """Replay moves from a start value; passes iff the final value is zero."""
    values = [start]
    state = TangleState(start)
    for move in moves:
        state = apply_move(state, move)
        values.append(state.value)
    return ReplayReport(
        start=start,
        values=tuple(values),
        final=state.value,
        passed=state.value.is_zero,
    )


def verify_plan(f: ExtendedRational, plan: UntanglePlan) -> ReplayReport:
    """Replay a plan from f.  The plan must have been built for f."""
    if plan.start != f:
        raise ValueError(f"plan starts at {plan.start}, not {f}")
    return replay(f, plan.moves)


def plan_metrics(plan: UntanglePlan) -> PlanMetrics:
    rotations = sum(1 for move in plan.moves if move is Move.ROTATE)
    twists = len(plan.moves) - rotations
    return PlanMetrics(twists=twists, rotations=rotations, total=len(plan.moves))
