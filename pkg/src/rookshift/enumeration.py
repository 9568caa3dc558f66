"""Exhaustive enumeration and the desk-scale verification harness.

Everything here counts exactly, by generating the relevant placements one
by one.  The verifiers re-derive the headline equinumerosity statements on
small boards: iterated A-shifting bijects the placements avoiding
(k-1)...21k onto those avoiding k...21, restricts to symmetric placements
on self-conjugate boards, and swapping an increasing prefix of a pattern
set for a decreasing one preserves the number of avoiding involutions.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .core import (
    Board,
    InvariantViolation,
    PatternSet,
    Permutation,
    Placement,
    admits_full_placement,
    avoids_all,
    conjugate_board,
    cycled_pattern,
    decreasing_pattern,
    is_symmetric,
)
from .shifts import phi_star


def enumerate_placements(board: Board) -> Iterator[Placement]:
    """All full placements on the board, in lexicographic order of the
    one-line notation.  Boards admitting none yield nothing.

    >>> [str(p.perm) for p in enumerate_placements(Board((3, 3, 1)))]
    ['2 3 1', '3 2 1']
    """
    if not admits_full_placement(board):
        return
    n = board.n_columns
    heights = board.column_heights
    used = [False] * (n + 1)
    chosen: list[int] = []

    def extend(column: int) -> Iterator[Placement]:
        if column > n:
            yield Placement(board, Permutation(tuple(chosen)))
            return
        for value in range(1, heights[column - 1] + 1):
            if not used[value]:
                used[value] = True
                chosen.append(value)
                yield from extend(column + 1)
                chosen.pop()
                used[value] = False

    yield from extend(1)


def enumerate_symmetric_placements(board: Board) -> Iterator[Placement]:
    """All symmetric placements on a self-conjugate board, in lexicographic
    order.  Pairs (i, v) and (v, i) are placed together, so this walks the
    involutions directly instead of filtering all placements."""
    if board != conjugate_board(board):
        raise InvariantViolation(f"board {board} is not self-conjugate")
    if not admits_full_placement(board):
        return
    n = board.n_columns
    heights = board.column_heights
    image = [0] * (n + 1)

    def extend(column: int) -> Iterator[Placement]:
        while column <= n and image[column]:
            column += 1
        if column > n:
            yield Placement(board, Permutation(tuple(image[1:])))
            return
        for value in range(column, heights[column - 1] + 1):
            if value == column:
                image[column] = column
                yield from extend(column + 1)
                image[column] = 0
            elif not image[value] and column <= heights[value - 1]:
                image[column], image[value] = value, column
                yield from extend(column + 1)
                image[column] = image[value] = 0

    yield from extend(1)


@dataclass(frozen=True)
class CountReport:
    """An avoidance count together with what was counted."""

    board: Board
    patterns: PatternSet
    symmetric_only: bool
    count: int

    def __post_init__(self) -> None:
        if self.count < 0:
            raise InvariantViolation("count cannot be negative")

    def to_json_dict(self) -> dict:
        return {
            "board": list(self.board.column_heights),
            "patterns": [list(t.values) for t in self.patterns],
            "symmetric_only": self.symmetric_only,
            "count": self.count,
        }


def count_avoiders(
    board: Board, patterns: PatternSet, symmetric_only: bool = False
) -> CountReport:
    """Count the placements on the board avoiding every given pattern.

    >>> count_avoiders(Board.square(4), PatternSet.of("321")).count
    14
    """
    source = (
        enumerate_symmetric_placements(board)
        if symmetric_only
        else enumerate_placements(board)
    )
    count = sum(1 for p in source if avoids_all(p, patterns))
    return CountReport(
        board=board, patterns=patterns, symmetric_only=symmetric_only, count=count
    )


def verify_bwx_bijection(board: Board, k: int) -> bool:
    """Check that iterated A-shifting maps the placements avoiding
    (k-1)...21k bijectively onto those avoiding k...21."""
    source_avoided = PatternSet.of(cycled_pattern(k))
    target_avoided = PatternSet.of(decreasing_pattern(k))
    targets = {
        p for p in enumerate_placements(board) if avoids_all(p, target_avoided)
    }
    images = set()
    domain_size = 0
    for p in enumerate_placements(board):
        if not avoids_all(p, source_avoided):
            continue
        domain_size += 1
        images.add(phi_star(p, k, max_recorded_steps=0)[0])
    return len(images) == domain_size and images == targets


def verify_involution_transfer(board: Board, k: int) -> bool:
    """On a self-conjugate board, check that iterated A-shifting restricts
    to a bijection between the symmetric avoiders of the two patterns."""
    source_avoided = PatternSet.of(cycled_pattern(k))
    target_avoided = PatternSet.of(decreasing_pattern(k))
    targets = {
        p
        for p in enumerate_symmetric_placements(board)
        if avoids_all(p, target_avoided)
    }
    images = set()
    domain_size = 0
    for p in enumerate_symmetric_placements(board):
        if not avoids_all(p, source_avoided):
            continue
        domain_size += 1
        image = phi_star(p, k, max_recorded_steps=0)[0]
        if not is_symmetric(image):
            return False
        images.add(image)
    return len(images) == domain_size and images == targets


def _swap_prefix(pattern: Permutation, k: int) -> Permutation:
    values = pattern.values
    if len(values) < k or values[:k] != tuple(range(1, k + 1)):
        raise InvariantViolation(
            f"pattern {pattern} does not start with the increasing prefix 1..{k}"
        )
    return Permutation(tuple(range(k, 0, -1)) + values[k:])


@dataclass(frozen=True)
class WilfReport:
    """Counts of avoiding involutions before and after the prefix swap."""

    n: int
    k: int
    patterns: PatternSet
    swapped_patterns: PatternSet
    count: int
    swapped_count: int

    @property
    def equal(self) -> bool:
        return self.count == self.swapped_count

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "k": self.k,
            "patterns": [list(t.values) for t in self.patterns],
            "swapped_patterns": [list(t.values) for t in self.swapped_patterns],
            "count": self.count,
            "swapped_count": self.swapped_count,
            "equal": self.equal,
        }


def verify_wilf_set(n: int, patterns: PatternSet, k: int) -> WilfReport:
    """Count involutions of length n avoiding a pattern set, against the
    count for the set with each increasing prefix 1..k replaced by k...21.

    Every pattern must literally start with the values 1, 2, ..., k; the
    patterns may have different lengths.

    >>> verify_wilf_set(6, PatternSet.of("1234"), 4).swapped_count
    51
    """
    if k < 2:
        raise ValueError(f"prefix length k must be at least 2, got {k}")
    swapped = PatternSet(tuple(_swap_prefix(t, k) for t in patterns))
    board = Board.square(n)
    count = count_avoiders(board, patterns, symmetric_only=True).count
    swapped_count = count_avoiders(board, swapped, symmetric_only=True).count
    return WilfReport(
        n=n,
        k=k,
        patterns=patterns,
        swapped_patterns=swapped,
        count=count,
        swapped_count=swapped_count,
    )


def motzkin(n: int) -> int:
    """The n-th Motzkin number.

    M_n counts, among other things, the involutions of length n avoiding
    any one of the patterns 1234, 4321, 2143, 3214.

    >>> [motzkin(n) for n in range(9)]
    [1, 1, 2, 4, 9, 21, 51, 127, 323]
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    for j in range(n // 2 + 1):
        numerator = math.factorial(n)
        denominator = math.factorial(j) * math.factorial(j + 1) * math.factorial(n - 2 * j)
        term, remainder = divmod(numerator, denominator)
        if remainder:  # pragma: no cover - the summands are always integral
            raise ArithmeticError("Motzkin summand is not integral")
        total += term
    return total


_MOTZKIN_WITNESSES = ("1234", "4321", "2143", "3214")


@dataclass(frozen=True)
class MotzkinReport:
    """Involution-avoidance counts for the four Motzkin witness patterns,
    one row per length n, next to the closed-form values."""

    rows: tuple[dict, ...]

    @property
    def all_equal(self) -> bool:
        return all(row["equal"] for row in self.rows)

    def to_json_dict(self) -> dict:
        return {"rows": list(self.rows), "all_equal": self.all_equal}


def verify_motzkin_identities(n_max: int) -> MotzkinReport:
    """Count involutions avoiding each witness pattern for all lengths up
    to n_max and compare with the closed form."""
    if n_max < 0:
        raise ValueError("n_max must be nonnegative")
    rows = []
    for n in range(n_max + 1):
        board = Board.square(n)
        expected = motzkin(n)
        counts = {
            text: count_avoiders(board, PatternSet.of(text), symmetric_only=True).count
            for text in _MOTZKIN_WITNESSES
        }
        rows.append(
            {
                "n": n,
                "motzkin": expected,
                "counts": counts,
                "equal": all(c == expected for c in counts.values()),
            }
        )
    return MotzkinReport(rows=tuple(rows))


def ferrers_boards(n: int) -> Iterator[Board]:
    """All boards with n columns and c_1 = n, in lexicographic order.

    Only these boards can carry full placements, though not all of them
    do; filter with :func:`rookshift.core.admits_full_placement` for the
    ones that can.  The empty board is the single board for n = 0.

    >>> [str(b) for b in ferrers_boards(2)]
    ['2,1', '2,2']
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        yield Board(())
        return

    def extend(heights: list[int]) -> Iterator[Board]:
        if len(heights) == n:
            yield Board(tuple(heights))
            return
        for h in range(1, heights[-1] + 1):
            heights.append(h)
            yield from extend(heights)
            heights.pop()

    yield from extend([n])
