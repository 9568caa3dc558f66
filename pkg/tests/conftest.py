"""Shared helpers and independent oracles for the test suite.

The oracles here deliberately avoid the library's own algorithms: they
enumerate occurrences or placements by brute force and pick extremal ones
directly from the definitions, so that agreement with the fast code is
meaningful.
"""

from __future__ import annotations

import itertools

from rookshift import Board, Permutation, Placement


def all_permutations(n):
    """Yield every Permutation of 1..n in lexicographic order."""
    for values in itertools.permutations(range(1, n + 1)):
        yield Permutation(values)


def square_placements(n):
    """Yield every full placement on the n x n board."""
    for perm in all_permutations(n):
        yield Placement.square(perm)


def all_boards(n):
    """Yield every Ferrers board with n columns and first column height n.

    Enumerated here independently of enumeration.ferrers_boards: weakly
    decreasing tuples (n, c_2, ..., c_n) with 1 <= c_i <= n.
    """
    if n == 0:
        yield Board(())
        return

    def rec(prefix, remaining):
        if remaining == 0:
            yield Board(tuple(prefix))
            return
        for h in range(1, prefix[-1] + 1):
            yield from rec(prefix + [h], remaining - 1)

    yield from rec([n], n - 1)


def board_placements(board):
    """Yield full placements on ``board`` by filtering all permutations."""
    heights = board.column_heights
    n = board.n_columns
    for perm in all_permutations(n):
        if all(perm(i) <= heights[i - 1] for i in range(1, n + 1)):
            yield Placement(board, perm)


def classical_contains(word, pattern):
    """Plain order-isomorphic containment of ``pattern`` in ``word``.

    Independent of the board machinery: scans subsequences directly.
    """
    k = len(pattern)
    for combo in itertools.combinations(range(len(word)), k):
        window = [word[i] for i in combo]
        if all(
            (window[a] < window[b]) == (pattern[a] < pattern[b])
            for a in range(k)
            for b in range(a + 1, k)
        ):
            return True
    return False


def brute_occurrences(placement, k):
    """All valid occurrences of k...21 in ``placement`` as position tuples."""
    heights = placement.board.column_heights
    values = placement.perm.values
    n = placement.size
    out = []
    for combo in itertools.combinations(range(1, n + 1), k):
        window = [values[i - 1] for i in combo]
        if all(a > b for a, b in zip(window, window[1:])) and heights[
            combo[-1] - 1
        ] >= window[0]:
            out.append(combo)
    return out


def lexmin_a_oracle(placement, k):
    """A-sequence by definition: occurrence with the smallest value word.

    Value words are compared left to right in occurrence order, i.e. from
    the largest letter down to the smallest.
    """
    occs = brute_occurrences(placement, k)
    if not occs:
        return None
    values = placement.perm.values
    return min(occs, key=lambda occ: tuple(values[i - 1] for i in occ))


def revmin_b_oracle(placement, k):
    """B-sequence by its direct characterisation on positions.

    Among all occurrences, minimise the position word read from the right
    end: the last position first, then the second to last, and so on.
    """
    occs = brute_occurrences(placement, k)
    if not occs:
        return None
    return min(occs, key=lambda occ: tuple(reversed(occ)))


def brute_admits(board):
    """Whether any full placement exists, by trying all permutations."""
    n = board.n_columns
    heights = board.column_heights
    if n == 0:
        return True
    for values in itertools.permutations(range(1, n + 1)):
        if all(values[i] <= heights[i] for i in range(n)):
            return True
    return False


def brute_label(word, index):
    """Longest strictly decreasing subsequence starting at ``index``.

    Subset-based: checks every subsequence through position ``index``
    rather than reusing the library's recurrence.
    """
    n = len(word)
    best = 1
    for r in range(2, n - index + 1):
        for combo in itertools.combinations(range(index, n), r):
            if combo[0] != index:
                continue
            window = [word[i] for i in combo]
            if all(a > b for a, b in zip(window, window[1:])):
                best = max(best, r)
    return best


def count_square_avoiders(n, patterns, involutions_only=False):
    """Count avoiders on the square board by direct filtering.

    Uses classical containment only, independent of the enumeration module.
    """
    total = 0
    for values in itertools.permutations(range(1, n + 1)):
        if involutions_only:
            inverse = [0] * n
            for i, v in enumerate(values, start=1):
                inverse[v - 1] = i
            if tuple(inverse) != values:
                continue
        if not any(classical_contains(values, pat.values) for pat in patterns):
            total += 1
    return total


def assert_occurrence(placement, positions, k):
    """Check that ``positions`` really is a k...21 occurrence in ``placement``."""
    values = placement.perm.values
    window = [values[i - 1] for i in positions]
    assert len(positions) == k
    assert list(positions) == sorted(positions)
    assert all(a > b for a, b in zip(window, window[1:]))
    assert placement.board.column_heights[positions[-1] - 1] >= window[0]
