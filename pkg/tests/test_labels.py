"""Tests for letter labels and successor sequences."""

from __future__ import annotations

import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from rookshift import InvariantViolation, label_sequence, successor_sequence
from conftest import brute_label


class TestLabelSequence:
    def test_frozen_nine_letter_word(self):
        assert label_sequence((3, 7, 4, 9, 1, 8, 5, 6, 2)).labels == (
            2, 3, 2, 4, 1, 3, 2, 2, 1,
        )

    def test_frozen_seven_letter_word(self):
        assert label_sequence((7, 4, 6, 3, 5, 2, 1)).labels == (5, 4, 4, 3, 3, 2, 1)

    def test_frozen_eight_letter_word(self):
        assert label_sequence((3, 7, 4, 8, 1, 5, 6, 2)).labels == (
            2, 3, 2, 3, 1, 2, 2, 1,
        )

    def test_trivial_words(self):
        assert label_sequence(()).labels == ()
        assert label_sequence((5,)).labels == (1,)
        assert label_sequence((1, 2, 3)).labels == (1, 1, 1)
        assert label_sequence((3, 2, 1)).labels == (3, 2, 1)

    def test_distinct_letters_required(self):
        with pytest.raises(InvariantViolation):
            label_sequence((1, 2, 1))

    def test_sequence_protocol(self):
        ls = label_sequence((2, 3, 1))
        assert len(ls) == 3
        assert list(ls) == [2, 2, 1]
        assert ls[1] == 2

    def test_matches_brute_force_exhaustive(self):
        for n in range(7):
            for word in itertools.permutations(range(1, n + 1)):
                labels = label_sequence(word).labels
                for i in range(n):
                    assert labels[i] == brute_label(word, i)

    def test_invariants_exhaustive(self):
        for n in range(1, 8):
            for word in itertools.permutations(range(1, n + 1)):
                labels = label_sequence(word).labels
                assert labels[-1] == 1
                for i in range(n):
                    has_smaller_later = any(
                        word[j] < word[i] for j in range(i + 1, n)
                    )
                    assert (labels[i] == 1) == (not has_smaller_later)
                    for j in range(i + 1, n):
                        if word[i] > word[j]:
                            assert labels[i] > labels[j]

    def test_same_label_letters_increase(self):
        # Letters sharing a label always form an increasing subsequence.
        for n in range(1, 9):
            for word in itertools.permutations(range(1, n + 1)):
                labels = label_sequence(word).labels
                last_seen: dict[int, int] = {}
                for letter, label in zip(word, labels):
                    if label in last_seen:
                        assert last_seen[label] < letter
                    last_seen[label] = letter

    @given(st.lists(st.integers(-50, 50), max_size=9, unique=True))
    def test_matches_brute_force_random_words(self, word):
        labels = label_sequence(tuple(word)).labels
        assert labels == tuple(brute_label(tuple(word), i) for i in range(len(word)))

    @given(st.lists(st.integers(-1000, 1000), max_size=10, unique=True))
    def test_labels_depend_only_on_relative_order(self, word):
        ranks = {v: r for r, v in enumerate(sorted(word), start=1)}
        compressed = tuple(ranks[v] for v in word)
        assert label_sequence(tuple(word)).labels == label_sequence(compressed).labels


class TestSuccessorSequence:
    def test_frozen_example_seven_letters(self):
        # From 7 the labels descend 5, 4, 3, 2, 1 along positions 1 2 4 6 7,
        # picking the leftmost candidate at each level.
        assert successor_sequence((7, 4, 6, 3, 5, 2, 1), 1) == (1, 2, 4, 6, 7)

    def test_frozen_example_nine_letters(self):
        assert successor_sequence((3, 7, 4, 9, 1, 8, 5, 6, 2), 4) == (4, 6, 7, 9)

    def test_label_one_start(self):
        assert successor_sequence((2, 1), 2) == (2,)

    def test_start_position_out_of_range(self):
        with pytest.raises(ValueError):
            successor_sequence((2, 1), 0)
        with pytest.raises(ValueError):
            successor_sequence((2, 1), 3)

    def test_exhaustive_properties(self):
        # From any start the values strictly decrease, the labels step down
        # by exactly one, and each hop is the leftmost available one.
        for n in range(1, 7):
            for word in itertools.permutations(range(1, n + 1)):
                labels = label_sequence(word).labels
                for start in range(1, n + 1):
                    chain = successor_sequence(word, start)
                    assert chain[0] == start
                    assert len(chain) == labels[start - 1]
                    values = [word[i - 1] for i in chain]
                    assert all(a > b for a, b in zip(values, values[1:]))
                    chain_labels = [labels[i - 1] for i in chain]
                    assert chain_labels == list(
                        range(labels[start - 1], 0, -1)
                    )
                    for prev, nxt in zip(chain, chain[1:]):
                        for mid in range(prev + 1, nxt):
                            # No earlier letter could have continued the chain.
                            assert not (
                                word[mid - 1] < word[prev - 1]
                                and labels[mid - 1] == labels[prev - 1] - 1
                            )
