"""Labels, extremal decreasing sequences, and the two shift maps.

For a placement p containing the decreasing pattern k...21, the A-sequence
is the occurrence of k...21 whose value word is lexicographically smallest;
the B-sequence is the occurrence whose position word, read from the right
end, is smallest.  The A-shift cycles the dots of the A-sequence into an
occurrence of (k-1)...21k, strictly lowering the inversion number; the
B-shift does the same with the B-sequence and equals the A-shift conjugated
by the diagonal reflection.  Iterating either map reaches a placement that
avoids k...21.

Position sequences returned here are 1-based, like everything else in the
package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, Literal

from .core import InvariantViolation, Permutation, Placement, inverse_placement

ShiftOp = Literal["phi", "psi"]

_CACHE_SIZE = 1 << 19


def _require_k(k: int) -> None:
    if k < 2:
        raise ValueError(f"shift order k must be at least 2, got {k}")


def _label_values(word: tuple[int, ...]) -> tuple[int, ...]:
    # l_i = 1 + max label among later smaller letters (0 if none).
    n = len(word)
    out = [1] * n
    for i in range(n - 2, -1, -1):
        w = word[i]
        best = 0
        for m in range(i + 1, n):
            if word[m] < w and out[m] > best:
                best = out[m]
        out[i] = best + 1
    return tuple(out)


@dataclass(frozen=True)
class LabelSequence:
    """Per-position labels of a word: the length of the longest decreasing
    subsequence starting at each position."""

    labels: tuple[int, ...]

    def __len__(self) -> int:
        return len(self.labels)

    def __iter__(self) -> Iterator[int]:
        return iter(self.labels)

    def __getitem__(self, index: int) -> int:
        return self.labels[index]


def label_sequence(word: Iterable[int]) -> LabelSequence:
    """Labels of a word with distinct letters.

    >>> label_sequence((3, 7, 4, 9, 1, 8, 5, 6, 2)).labels
    (2, 3, 2, 4, 1, 3, 2, 2, 1)
    """
    values = tuple(int(x) for x in word)
    if len(set(values)) != len(values):
        raise InvariantViolation(f"letters must be distinct: {values}")
    return LabelSequence(_label_values(values))


def successor_sequence(word: Iterable[int], start_position: int) -> tuple[int, ...]:
    """Greedy label chain from a starting position: after a letter with
    label m, take the leftmost later letter with label m - 1, and so on
    down to label 1.  Returns the 1-based positions of the chain.

    >>> successor_sequence((3, 7, 4, 9, 1, 8, 5, 6, 2), 4)
    (4, 6, 7, 9)
    """
    values = tuple(int(x) for x in word)
    labels = label_sequence(values).labels
    if not 1 <= start_position <= len(values):
        raise ValueError(f"start position {start_position} out of range")
    positions = [start_position]
    for target in range(labels[start_position - 1] - 1, 0, -1):
        for m in range(positions[-1], len(values)):
            if labels[m] == target:
                positions.append(m + 1)
                break
    return tuple(positions)


def _column_budget(p: Placement) -> list[int]:
    # budget[v] = number of columns tall enough to hold a dot at height v.
    heights = p.board.column_heights
    n = p.size
    budget = [0] * (n + 1)
    for v in range(1, n + 1):
        budget[v] = sum(1 for h in heights if h >= v)
    return budget


def _rectangle_start(p: Placement, k: int) -> tuple[int, int, tuple[int, ...]] | None:
    """Lowest dot starting a valid occurrence of k...21, if any.

    A dot of value v can only start occurrences that end in a column of
    height >= v, and columns that tall form a prefix of the board.  So the
    whole occurrence lives in the word of the first budget[v] columns, and
    the dot starts one exactly when its label there reaches k.  Returns
    (value, column cap, labels of the capped word).
    """
    n = p.size
    values = p.perm.values
    budget = _column_budget(p)
    labels_by_cap: dict[int, tuple[int, ...]] = {}
    position_of = [0] * (n + 1)
    for i, v in enumerate(values, start=1):
        position_of[v] = i
    for v in range(1, n + 1):
        cap = budget[v]
        labels = labels_by_cap.get(cap)
        if labels is None:
            labels = _label_values(values[:cap])
            labels_by_cap[cap] = labels
        if labels[position_of[v] - 1] >= k:
            return v, cap, labels
    return None


@lru_cache(maxsize=_CACHE_SIZE)
def a_sequence(p: Placement, k: int) -> tuple[int, ...] | None:
    """Positions of the A-sequence, or None when p avoids k...21.

    The first value is chosen as low as possible among dots starting a
    valid occurrence, then each later value as low as possible subject to
    the prefix still completing to an occurrence.  This greedy choice
    realizes the lexicographically smallest value word.

    >>> a_sequence(Placement.square(Permutation((7, 4, 6, 3, 5, 2, 1))), 4)
    (2, 4, 6, 7)
    """
    _require_k(k)
    n = p.size
    if k > n:
        return None
    start = _rectangle_start(p, k)
    if start is None:
        return None
    value, cap, labels = start
    values = p.perm.values
    position_of = {v: i for i, v in enumerate(values, start=1)}
    positions = [position_of[value]]
    for remaining in range(k - 1, 0, -1):
        last = positions[-1]
        for v in range(1, value):
            i = position_of[v]
            if last < i <= cap and labels[i - 1] >= remaining:
                positions.append(i)
                value = v
                break
        else:  # pragma: no cover - the label bound guarantees an extension
            raise AssertionError("greedy A-sequence construction got stuck")
    return tuple(positions)


@lru_cache(maxsize=_CACHE_SIZE)
def a_sequence_leftmost(p: Placement, k: int) -> tuple[int, ...] | None:
    """The A-sequence built by the position-greedy rule: same first dot,
    then each later dot as far left as possible subject to the prefix still
    completing to an occurrence.  Kept separate from :func:`a_sequence` so
    the agreement of the two constructions stays checkable.
    """
    _require_k(k)
    n = p.size
    if k > n:
        return None
    start = _rectangle_start(p, k)
    if start is None:
        return None
    value, cap, labels = start
    values = p.perm.values
    positions = [values.index(value) + 1]
    for remaining in range(k - 1, 0, -1):
        for i in range(positions[-1] + 1, cap + 1):
            if values[i - 1] < value and labels[i - 1] >= remaining:
                positions.append(i)
                value = values[i - 1]
                break
        else:  # pragma: no cover - the label bound guarantees an extension
            raise AssertionError("greedy A-sequence construction got stuck")
    return tuple(positions)


@lru_cache(maxsize=_CACHE_SIZE)
def b_sequence(p: Placement, k: int) -> tuple[int, ...] | None:
    """Positions of the B-sequence, or None when p avoids k...21.

    The B-sequence is the reflection of the A-sequence of the reflected
    placement: positions here are the values along the A-sequence of the
    inverse placement.

    >>> b_sequence(Placement.square(Permutation((7, 4, 6, 3, 5, 2, 1))), 4)
    (1, 2, 4, 6)
    """
    reflected = inverse_placement(p)
    positions = a_sequence(reflected, k)
    if positions is None:
        return None
    return tuple(sorted(reflected.perm(i) for i in positions))


def _cycle_dots(p: Placement, positions: tuple[int, ...]) -> Placement:
    # The values along `positions` decrease; rotating them one step turns
    # the occurrence of k...21 into an occurrence of (k-1)...21k.
    values = list(p.perm.values)
    window = [values[i - 1] for i in positions]
    rotated = window[1:] + window[:1]
    for i, v in zip(positions, rotated):
        values[i - 1] = v
    return Placement(p.board, Permutation(tuple(values)))


@lru_cache(maxsize=_CACHE_SIZE)
def a_shift(p: Placement, k: int) -> Placement:
    """Cycle the A-sequence dots; placements avoiding k...21 are fixed.

    >>> str(a_shift(Placement.square(Permutation((7, 4, 6, 3, 5, 2, 1))), 4).perm)
    '7 3 6 2 5 1 4'
    """
    positions = a_sequence(p, k)
    if positions is None:
        return p
    return _cycle_dots(p, positions)


@lru_cache(maxsize=_CACHE_SIZE)
def b_shift(p: Placement, k: int) -> Placement:
    """Cycle the B-sequence dots; placements avoiding k...21 are fixed.

    Equivalently, reflect, A-shift, and reflect back.

    >>> str(b_shift(Placement.square(Permutation((7, 4, 6, 3, 5, 2, 1))), 4).perm)
    '4 3 6 2 5 7 1'
    """
    positions = b_sequence(p, k)
    if positions is None:
        return p
    return _cycle_dots(p, positions)


def _inversions(values: tuple[int, ...]) -> int:
    n = len(values)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if values[i] > values[j]
    )


def inversion_number(p: Placement) -> int:
    """Number of inversions of the placement's permutation.

    >>> inversion_number(Placement.square(Permutation((7, 4, 6, 3, 5, 2, 1))))
    18
    """
    return _inversions(p.perm.values)


@dataclass(frozen=True)
class ShiftStep:
    """One effective application of a shift map.

    Each step strictly lowers the inversion number, by at least k - 1 and
    by the same parity as k - 1, where k is the number of moved dots.
    """

    op: ShiftOp
    moved_positions: tuple[int, ...]
    perm_before: Permutation
    perm_after: Permutation
    inv_before: int
    inv_after: int

    def __post_init__(self) -> None:
        k = len(self.moved_positions)
        drop = self.inv_before - self.inv_after
        if self.inv_after >= self.inv_before:
            raise InvariantViolation("a shift step must lower the inversion number")
        if drop < k - 1 or (drop - (k - 1)) % 2 != 0:
            raise InvariantViolation(
                f"inversion drop {drop} incompatible with {k} moved dots"
            )


@dataclass(frozen=True)
class ShiftTrace:
    """A chained record of shift steps.

    ``total_steps`` counts every effective step taken; ``steps`` keeps the
    recorded prefix, which may be shorter when a recording cap was set.
    """

    k: int
    steps: tuple[ShiftStep, ...]
    total_steps: int

    def __post_init__(self) -> None:
        if self.total_steps < len(self.steps):
            raise InvariantViolation("total_steps cannot undercount recorded steps")
        for earlier, later in zip(self.steps, self.steps[1:]):
            if earlier.perm_after != later.perm_before:
                raise InvariantViolation("trace steps do not chain")


def _iterate_shift(
    p: Placement,
    k: int,
    op: ShiftOp,
    max_recorded_steps: int | None,
) -> tuple[Placement, ShiftTrace]:
    _require_k(k)
    single = a_shift if op == "phi" else b_shift
    sequence = a_sequence if op == "phi" else b_sequence
    steps: list[ShiftStep] = []
    total = 0
    current = p
    while True:
        positions = sequence(current, k)
        if positions is None:
            break
        nxt = single(current, k)
        if max_recorded_steps is None or len(steps) < max_recorded_steps:
            steps.append(
                ShiftStep(
                    op=op,
                    moved_positions=positions,
                    perm_before=current.perm,
                    perm_after=nxt.perm,
                    inv_before=_inversions(current.perm.values),
                    inv_after=_inversions(nxt.perm.values),
                )
            )
        total += 1
        current = nxt
    return current, ShiftTrace(k=k, steps=tuple(steps), total_steps=total)


def phi_star(
    p: Placement, k: int, max_recorded_steps: int | None = None
) -> tuple[Placement, ShiftTrace]:
    """Iterate the A-shift until the placement avoids k...21.

    Termination is guaranteed because every step lowers the inversion
    number.  ``max_recorded_steps`` bounds how many steps the trace keeps;
    pass 0 during bulk runs to keep only the step count.

    >>> done, trace = phi_star(Placement.square(Permutation((7, 4, 6, 3, 5, 2, 1))), 4)
    >>> str(done.perm), trace.total_steps
    ('3 2 6 1 5 7 4', 2)
    """
    return _iterate_shift(p, k, "phi", max_recorded_steps)


def psi_star(
    p: Placement, k: int, max_recorded_steps: int | None = None
) -> tuple[Placement, ShiftTrace]:
    """Iterate the B-shift until the placement avoids k...21.

    Reaches the same fixed point as :func:`phi_star`, in the same number
    of steps.

    >>> str(psi_star(Placement.square(Permutation((2, 1))), 2)[0].perm)
    '1 2'
    """
    return _iterate_shift(p, k, "psi", max_recorded_steps)
