"""Rook placements on Ferrers boards: value types, reflection, containment.

Conventions used throughout the package:

- Permutations are 1-based and written in one-line notation, so
  ``Permutation((4, 3, 1, 2))`` sends 1 to 4.  A short permutation doubles
  as a pattern.
- A board is a weakly decreasing tuple of positive column heights, columns
  read left to right.  Cell (i, j) means column i, row j, both counted from
  the bottom-left corner; the cell lies in the board iff j <= c_i.
- A placement puts the dot of column i in row perm(i).  Full placements
  (one dot per row and one per column) force the board to have as many
  rows as columns, i.e. c_1 = n.

Containment on a board is the rectangular variant: an occurrence of a
pattern must fit in a rectangular sub-board, which amounts to asking that
the column of the occurrence's last dot reaches the height of its highest
dot.  On square boards this is classical permutation-pattern containment.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator


class InvariantViolation(ValueError):
    """Raised when a value fails one of its structural invariants."""


def _int_tuple(seq: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(x) for x in seq)


@dataclass(frozen=True)
class Permutation:
    """A permutation of {1, ..., n} in one-line notation (n >= 0 allowed).

    >>> p = Permutation((4, 3, 1, 2))
    >>> p(1), p(4), len(p)
    (4, 2, 4)
    >>> str(p.inverse())
    '3 4 2 1'
    """

    values: tuple[int, ...]

    def __post_init__(self) -> None:
        values = _int_tuple(self.values)
        object.__setattr__(self, "values", values)
        if sorted(values) != list(range(1, len(values) + 1)):
            raise InvariantViolation(f"not a permutation of 1..{len(values)}: {values}")

    @classmethod
    def parse(cls, text: str) -> "Permutation":
        """Parse one-line notation: space- or comma-separated values.

        A bare digit string such as ``"321"`` is accepted as shorthand for
        patterns whose values are all single digits.

        >>> Permutation.parse("7 4 6 3 5 2 1") == Permutation.parse("7,4,6,3,5,2,1")
        True
        >>> Permutation.parse("321").values
        (3, 2, 1)
        """
        stripped = text.strip()
        if not stripped:
            return cls(())
        fields = stripped.replace(",", " ").split()
        if len(fields) == 1 and len(fields[0]) > 1 and fields[0].isdigit():
            fields = list(fields[0])
        try:
            values = tuple(int(f) for f in fields)
        except ValueError:
            raise ValueError(f"cannot parse permutation from {text!r}") from None
        return cls(values)

    def __str__(self) -> str:
        return " ".join(str(v) for v in self.values)

    def __len__(self) -> int:
        return len(self.values)

    def __call__(self, position: int) -> int:
        """Image of a 1-based position."""
        if not 1 <= position <= len(self.values):
            raise ValueError(f"position {position} out of range 1..{len(self.values)}")
        return self.values[position - 1]

    def position_of(self, value: int) -> int:
        """1-based position carrying ``value``."""
        try:
            return self.values.index(value) + 1
        except ValueError:
            raise ValueError(f"value {value} not in permutation") from None

    def inverse(self) -> "Permutation":
        out = [0] * len(self.values)
        for i, v in enumerate(self.values, start=1):
            out[v - 1] = i
        return Permutation(tuple(out))

    def is_involution(self) -> bool:
        return self.values == self.inverse().values


@dataclass(frozen=True)
class Board:
    """A Ferrers board given by weakly decreasing positive column heights.

    >>> Board((4, 3, 2, 2)).n_columns
    4
    >>> Board.parse("4,3,2,2") == Board((4, 3, 2, 2))
    True
    """

    column_heights: tuple[int, ...]

    def __post_init__(self) -> None:
        heights = _int_tuple(self.column_heights)
        object.__setattr__(self, "column_heights", heights)
        if any(h < 1 for h in heights):
            raise InvariantViolation(f"column heights must be positive: {heights}")
        if any(a < b for a, b in zip(heights, heights[1:])):
            raise InvariantViolation(f"column heights must weakly decrease: {heights}")

    @classmethod
    def parse(cls, text: str) -> "Board":
        stripped = text.strip()
        if not stripped:
            return cls(())
        try:
            heights = tuple(int(f) for f in stripped.split(","))
        except ValueError:
            raise ValueError(f"cannot parse board from {text!r}") from None
        return cls(heights)

    def __str__(self) -> str:
        return ",".join(str(h) for h in self.column_heights)

    def __len__(self) -> int:
        return len(self.column_heights)

    @property
    def n_columns(self) -> int:
        return len(self.column_heights)

    @classmethod
    def square(cls, n: int) -> "Board":
        if n < 0:
            raise InvariantViolation("board size must be nonnegative")
        return cls((n,) * n)


@dataclass(frozen=True)
class Placement:
    """A full rook placement: the dot of column i sits in row perm(i)."""

    board: Board
    perm: Permutation

    def __post_init__(self) -> None:
        heights = self.board.column_heights
        n = len(heights)
        if len(self.perm) != n:
            raise InvariantViolation(
                f"permutation length {len(self.perm)} != board width {n}"
            )
        if n and heights[0] != n:
            raise InvariantViolation(
                f"full placements need as many rows as columns; c_1={heights[0]}, n={n}"
            )
        for i, v in enumerate(self.perm.values, start=1):
            if v > heights[i - 1]:
                raise InvariantViolation(
                    f"dot ({i}, {v}) lies outside column of height {heights[i - 1]}"
                )

    @classmethod
    def square(cls, perm: Permutation) -> "Placement":
        return cls(Board.square(len(perm)), perm)

    @property
    def size(self) -> int:
        return len(self.perm)


@dataclass(frozen=True)
class PatternSet:
    """A nonempty set of nonempty patterns, kept in a canonical order."""

    patterns: tuple[Permutation, ...]

    def __post_init__(self) -> None:
        patterns = tuple(self.patterns)
        if not patterns:
            raise InvariantViolation("pattern set must be nonempty")
        if any(len(t) == 0 for t in patterns):
            raise InvariantViolation("patterns must be nonempty")
        ordered = tuple(sorted(set(patterns), key=lambda t: (len(t), t.values)))
        object.__setattr__(self, "patterns", ordered)

    @classmethod
    def of(cls, *patterns: Permutation | str) -> "PatternSet":
        return cls(
            tuple(t if isinstance(t, Permutation) else Permutation.parse(t) for t in patterns)
        )

    def __iter__(self) -> Iterator[Permutation]:
        return iter(self.patterns)

    def __len__(self) -> int:
        return len(self.patterns)


def decreasing_pattern(k: int) -> Permutation:
    """The pattern k...21.

    >>> decreasing_pattern(4).values
    (4, 3, 2, 1)
    """
    if k < 1:
        raise ValueError("pattern length must be at least 1")
    return Permutation(tuple(range(k, 0, -1)))


def cycled_pattern(k: int) -> Permutation:
    """The pattern (k-1)...21k: the decreasing pattern with its top letter
    moved to the end.

    >>> cycled_pattern(4).values
    (3, 2, 1, 4)
    >>> cycled_pattern(2).values
    (1, 2)
    """
    if k < 2:
        raise ValueError("needs k >= 2")
    return Permutation(tuple(range(k - 1, 0, -1)) + (k,))


def conjugate_board(board: Board) -> Board:
    """Transpose a board: row lengths become column heights.

    >>> conjugate_board(Board((4, 3, 2, 2))).column_heights
    (4, 4, 2, 1)
    """
    heights = board.column_heights
    if not heights:
        return board
    return Board(
        tuple(sum(1 for h in heights if h >= j) for j in range(1, heights[0] + 1))
    )


def inverse_placement(p: Placement) -> Placement:
    """Reflect a placement across the main diagonal.

    The board is conjugated and the permutation inverted; applying the
    reflection twice gives back the original placement.
    """
    return Placement(conjugate_board(p.board), p.perm.inverse())


def _matches_pattern(window: tuple[int, ...], pattern: tuple[int, ...]) -> bool:
    # Same relative order; both entry lists are duplicate-free.
    for a in range(len(window)):
        for b in range(a + 1, len(window)):
            if (window[a] < window[b]) != (pattern[a] < pattern[b]):
                return False
    return True


def _occurrences(p: Placement, tau: Permutation) -> Iterator[tuple[int, ...]]:
    k = len(tau)
    if k == 0:
        raise InvariantViolation("pattern must be nonempty")
    n = p.size
    if k > n:
        return
    heights = p.board.column_heights
    values = p.perm.values
    pattern = tau.values
    for combo in itertools.combinations(range(1, n + 1), k):
        window = tuple(values[i - 1] for i in combo)
        if heights[combo[-1] - 1] >= max(window) and _matches_pattern(window, pattern):
            yield combo


def contains(p: Placement, tau: Permutation) -> bool:
    """Does the placement contain the pattern, in the board sense?

    >>> p = Placement(Board((4, 3, 2, 2)), Permutation((4, 3, 1, 2)))
    >>> contains(p, Permutation((1, 2)))
    True
    >>> contains(p, Permutation((2, 1)))
    False
    """
    return next(_occurrences(p, tau), None) is not None


def find_occurrences(
    p: Placement, tau: Permutation, limit: int | None = None
) -> list[tuple[int, ...]]:
    """All occurrences of ``tau`` as sorted position tuples, in lexicographic
    order, optionally truncated to the first ``limit`` of them.

    >>> find_occurrences(Placement.square(Permutation((3, 2, 1))), Permutation((2, 1)))
    [(1, 2), (1, 3), (2, 3)]
    """
    if limit is not None and limit < 0:
        raise ValueError("limit must be nonnegative")
    it = _occurrences(p, tau)
    if limit is not None:
        return list(itertools.islice(it, limit))
    return list(it)


def avoids_all(p: Placement, patterns: PatternSet) -> bool:
    """True iff the placement contains none of the patterns."""
    return not any(contains(p, tau) for tau in patterns)


def admits_full_placement(board: Board) -> bool:
    """Can the board carry a full rook placement?

    Needs as many rows as columns and, column by column, enough headroom:
    c_i >= n + 1 - i.  The condition is a Hall-type criterion; rows j with
    height at least j form a prefix of columns, so matching rows to columns
    greedily from the top row works exactly when it holds.

    >>> admits_full_placement(Board((2, 1)))
    True
    >>> admits_full_placement(Board((3, 1, 1)))
    False
    """
    heights = board.column_heights
    n = len(heights)
    if n == 0:
        return True
    if heights[0] != n:
        return False
    return all(heights[i] >= n - i for i in range(n))


def is_symmetric(p: Placement) -> bool:
    """True iff the placement equals its own diagonal reflection.

    The board must be self-conjugate and the permutation an involution.

    >>> is_symmetric(Placement(Board((2, 1)), Permutation((2, 1))))
    True
    """
    return p.board == conjugate_board(p.board) and p.perm.is_involution()
