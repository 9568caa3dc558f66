"""Acceptance battery: one test per criterion, exhaustive at desk scale.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one summary line
per criterion next to pytest's own pass/fail report.  Every check is exact;
the few with runtime budgets assert those too.
"""

from __future__ import annotations

import itertools
import time

from rookshift import (
    Board,
    Permutation,
    Placement,
    a_sequence,
    a_sequence_leftmost,
    a_shift,
    b_sequence,
    b_shift,
    conjugate_board,
    enumerate_placements,
    ferrers_boards,
    global_commutation_check,
    inversion_number,
    label_sequence,
    local_commutation_check,
    motzkin,
    normal_form,
    phi_star,
    psi_star,
    verify_bwx_bijection,
    verify_involution_transfer,
    verify_motzkin_identities,
    verify_wilf_set,
    PatternSet,
)
from conftest import classical_contains, revmin_b_oracle, square_placements

SQUARE_N = 7
SQUARE_KS = (2, 3, 4, 5)
BOARD_N = 6
BOARD_KS = (2, 3, 4)


def _clear_shift_caches():
    for fn in (a_sequence, a_sequence_leftmost, b_sequence, a_shift, b_shift):
        fn.cache_clear()


def _report(number, name):
    print(f"criterion {number} ({name}): PASS")


def board_universe(n_max):
    for n in range(n_max + 1):
        for board in ferrers_boards(n):
            yield board


def test_criterion_1_worked_examples():
    _clear_shift_caches()
    started = time.perf_counter()

    p = Placement.square(Permutation((7, 4, 6, 3, 5, 2, 1)))
    done, trace = phi_star(p, 4)
    assert str(done.perm) == "3 2 6 1 5 7 4"
    assert trace.total_steps == 2
    assert psi_star(p, 4)[0] == done

    q = Placement.square(Permutation((7, 6, 4, 2, 5, 3, 1)))
    assert str(phi_star(q, 4)[0].perm) == "4 2 1 7 5 3 6"

    long = Placement.square(
        Permutation.parse("17 21 20 16 19 18 13 15 11 14 12 8 10 9 7 4 2 6 5 3 1")
    )
    assert str(a_shift(long, 12).perm) == (
        "16 21 20 15 19 18 13 14 11 12 10 8 9 7 6 4 2 5 3 1 17"
    )
    assert str(b_shift(long, 12).perm) == (
        "17 20 19 16 18 15 13 14 11 12 10 8 9 7 4 2 21 6 5 3 1"
    )

    assert label_sequence((3, 7, 4, 9, 1, 8, 5, 6, 2)).labels == (
        2, 3, 2, 4, 1, 3, 2, 2, 1,
    )

    elapsed = time.perf_counter() - started
    assert elapsed < 1.0, f"worked examples took {elapsed:.2f}s"
    _report(1, "worked examples")


def test_criterion_2_global_commutation():
    _clear_shift_caches()
    started = time.perf_counter()
    cases = 0
    for n in range(SQUARE_N + 1):
        for p in square_placements(n):
            for k in SQUARE_KS:
                assert global_commutation_check(p, k), (p, k)
                cases += 1
    for board in board_universe(BOARD_N):
        for p in enumerate_placements(board):
            for k in BOARD_KS:
                assert global_commutation_check(p, k), (p, k)
                cases += 1
    elapsed = time.perf_counter() - started
    assert elapsed < 120.0, f"commutation sweep took {elapsed:.1f}s"
    assert cases > 23000 + 34000
    _report(2, f"global commutation, {cases} cases in {elapsed:.1f}s")


def test_criterion_3_local_commutation():
    checked = 0
    for n in range(SQUARE_N + 1):
        for p in square_placements(n):
            for k in SQUARE_KS:
                report = local_commutation_check(p, k)
                assert report.holds and report.both_still_contain, (p, k)
                checked += report.applicable
    for board in board_universe(BOARD_N):
        for p in enumerate_placements(board):
            for k in BOARD_KS:
                report = local_commutation_check(p, k)
                assert report.holds and report.both_still_contain, (p, k)
                checked += report.applicable
    assert checked > 10000
    _report(3, f"local commutation, {checked} applicable cases")


def test_criterion_4_confluence():
    strategies = [("always-phi", None), ("always-psi", None), ("alternate", None)]
    strategies += [("random", seed) for seed in range(20)]
    cases = 0
    for p in square_placements(6):
        for k in (2, 3):
            outcomes = {
                normal_form(p, k, name, seed=seed) for name, seed in strategies
            }
            assert len(outcomes) == 1, (p, k, outcomes)
            cases += 1
    _report(4, f"confluence, {len(strategies)} strategies on {cases} runs")


def drop_correction(values, positions):
    """The correction sum: letters strictly between consecutive moved dots
    whose value lies strictly between the occurrence's end values."""
    top = values[positions[0] - 1]
    total = 0
    for left, right in zip(positions, positions[1:]):
        low = values[right - 1]
        total += sum(
            1 for i in range(left + 1, right) if low < values[i - 1] < top
        )
    return total


def test_criterion_5_inversion_drop_formula():
    steps = 0
    for p in square_placements(6):
        for k in (2, 3):
            positions = a_sequence(p, k)
            if positions is None:
                continue
            drop = inversion_number(p) - inversion_number(a_shift(p, k))
            expected = k - 1 + 2 * drop_correction(p.perm.values, positions)
            assert drop == expected, (p, k)
            steps += 1
    assert steps > 1000
    _report(5, f"inversion-drop formula, {steps} single steps")


def test_criterion_6_bwx_bijection():
    boards = 0
    for board in board_universe(BOARD_N):
        for k in BOARD_KS:
            assert verify_bwx_bijection(board, k), (board, k)
        boards += 1
    assert boards == 352
    _report(6, f"pattern-class bijection on {boards} boards")


def test_criterion_7_involution_transfer_and_wilf_sets():
    symmetric_boards = 0
    for board in board_universe(BOARD_N):
        if conjugate_board(board) != board:
            continue
        symmetric_boards += 1
        for k in BOARD_KS:
            assert verify_involution_transfer(board, k), (board, k)

    wilf_runs = 0
    sets_and_ks = [
        (("1234",), (2, 3, 4)),
        (("123",), (2, 3)),
        (("1234", "1243"), (2,)),
        (("12345",), (2, 3, 4, 5)),
    ]
    for texts, ks in sets_and_ks:
        patterns = PatternSet.of(*texts)
        for k in ks:
            for n in range(9):
                report = verify_wilf_set(n, patterns, k)
                assert report.equal, (texts, k, n, report)
                wilf_runs += 1
    _report(
        7,
        f"involution transfer on {symmetric_boards} boards, "
        f"{wilf_runs} prefix-swap counts",
    )


def test_criterion_8_motzkin_identities():
    started = time.perf_counter()
    report = verify_motzkin_identities(8)
    assert report.all_equal
    assert [row["motzkin"] for row in report.rows] == [
        1, 1, 2, 4, 9, 21, 51, 127, 323,
    ]

    brute = 0
    pattern = (1, 2, 3, 4)
    for values in itertools.permutations(range(1, 9)):
        inverse = [0] * 8
        for i, v in enumerate(values, start=1):
            inverse[v - 1] = i
        if tuple(inverse) != values:
            continue
        if not classical_contains(values, pattern):
            brute += 1
    assert brute == motzkin(8) == 323

    elapsed = time.perf_counter() - started
    assert elapsed < 300.0, f"Motzkin checks took {elapsed:.1f}s"
    _report(8, f"Motzkin identities to n=8, brute-force cross-check in {elapsed:.1f}s")


def _label_map(values):
    labels = label_sequence(values).labels
    return {v: labels[i] for i, v in enumerate(values)}


def _assert_battery(p, k, check_labels):
    """All structural facts about one placement and one pattern length."""
    a = a_sequence(p, k)
    b = b_sequence(p, k)
    assert (a is None) == (b is None)
    assert a_sequence_leftmost(p, k) == a  # the two definitions agree
    if a is None:
        return False
    assert b == revmin_b_oracle(p, k)

    values = p.perm.values
    a_vals = [values[i - 1] for i in a]
    b_vals = [values[i - 1] for i in b]
    common = set(a_vals) & set(b_vals)

    in_a = [t for t, v in enumerate(a_vals) if v in common]
    in_b = [t for t, v in enumerate(b_vals) if v in common]
    if common:
        # The shared letters form one contiguous block in each sequence.
        assert in_a == list(range(in_a[0], in_a[-1] + 1))
        assert in_b == list(range(in_b[0], in_b[-1] + 1))

    if check_labels:
        labels = _label_map(values)
        assert [labels[v] for v in a_vals] == list(range(k, 0, -1))

    if a == b:
        return True

    # Sharing either extreme letter forces the sequences to coincide.
    assert a_vals[-1] not in common
    assert b_vals[0] not in common

    psi_p = b_shift(p, k)
    phi_p = a_shift(p, k)
    new_a_pos = a_sequence(psi_p, k)
    new_b_pos = b_sequence(phi_p, k)
    assert new_a_pos is not None and new_b_pos is not None
    new_a = [psi_p.perm(i) for i in new_a_pos]
    new_b = [phi_p.perm(i) for i in new_b_pos]

    # The new A-sequence starts with the same largest letter.
    assert new_a[0] == a_vals[0]

    if common:
        s, e = in_a[0], in_a[-1]
        sb, eb = in_b[0], in_b[-1]
        assert e - s == eb - sb
        # A keeps strictly more letters after the shared block,
        # B strictly more before it.
        assert (k - 1 - e) > (k - 1 - eb)
        assert sb > s
        # A's letters outside the shared block survive the B-shift.
        assert new_a[: s + 1] == a_vals[: s + 1]
        tail = k - 1 - e
        assert new_a[-tail:] == a_vals[e + 1 :]
        # The new B-sequence keeps its outer letters and takes over the
        # first post-intersection A-letter.
        assert new_b[:sb] == b_vals[:sb]
        assert new_b[eb] == a_vals[e + 1]
        b_tail = k - 1 - eb
        if b_tail:
            assert new_b[-b_tail:] == b_vals[eb + 1 :]
        # The two new sequences share identical middles, as values
        # and as positions.
        assert new_a[s + 1 : e + 1] == new_b[sb : sb + (e - s)]
        assert new_a_pos[s + 1 : e + 1] == new_b_pos[sb : sb + (e - s)]
    else:
        # Disjoint sequences leave each other alone.
        assert new_a_pos == a
        assert new_b_pos == b

    if check_labels:
        before = _label_map(values)
        after_psi = _label_map(psi_p.perm.values)
        # The B-shift leaves every A-letter's label alone.
        for v in a_vals:
            assert after_psi[v] == before[v]
        # Every B-letter below the largest keeps its label too.
        for v in b_vals[1:]:
            assert after_psi[v] == before[v]
        # No letter at or below the largest B-letter gains label.
        for v in range(1, b_vals[0] + 1):
            assert after_psi[v] <= before[v]
    return True


def test_criterion_9_property_suites():
    square_cases = 0
    for n in range(SQUARE_N + 1):
        for p in square_placements(n):
            # Letters sharing a label must appear in increasing order.
            word = p.perm.values
            labels = label_sequence(word).labels
            last_at: dict[int, int] = {}
            for letter, label in zip(word, labels):
                if label in last_at:
                    assert last_at[label] < letter
                last_at[label] = letter
            for k in range(2, n + 1):
                if _assert_battery(p, k, check_labels=True):
                    square_cases += 1
    board_cases = 0
    for board in board_universe(BOARD_N):
        for p in enumerate_placements(board):
            for k in BOARD_KS:
                if _assert_battery(p, k, check_labels=False):
                    board_cases += 1
    assert square_cases > 10000 and board_cases > 10000
    _report(
        9,
        f"property suites, {square_cases} square and {board_cases} board cases",
    )
