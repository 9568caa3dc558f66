"""Shift words, normal forms, and the confluence of the two shift maps.

Treating the A-shift and the B-shift as rewrite rules gives an abstract
rewriting system on placements.  The system is confluent: when the A- and
B-sequences of a placement differ, the two shifts commute and both images
still contain the pattern, so every maximal chain of shifts ends in the
same placement after the same number of effective steps.  The functions
here apply arbitrary shift words, reduce to normal form under a choice of
strategy, and export the reachable rewrite graph.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from typing import Callable, Iterable, Literal, Union

from .core import InvariantViolation, Placement, inverse_placement
from .shifts import (
    ShiftOp,
    ShiftStep,
    ShiftTrace,
    _inversions,
    _require_k,
    a_sequence,
    a_shift,
    b_sequence,
    b_shift,
    phi_star,
)

StrategyName = Literal["always-phi", "always-psi", "alternate", "random"]
Strategy = Union[StrategyName, "ShiftProgram"]

_STRATEGY_NAMES = ("always-phi", "always-psi", "alternate", "random")


@dataclass(frozen=True)
class ShiftProgram:
    """A word over the two shift operations, applied right to left.

    ``ShiftProgram(("phi", "psi"))`` denotes the composite that B-shifts
    first and A-shifts second, like reading the composition of functions.
    """

    ops: tuple[ShiftOp, ...]

    def __post_init__(self) -> None:
        if any(op not in ("phi", "psi") for op in self.ops):
            raise InvariantViolation(f"unknown shift op in program: {self.ops}")

    @classmethod
    def parse(cls, text: str) -> "ShiftProgram":
        fields = text.replace(",", " ").split()
        return cls(tuple(fields))  # type: ignore[arg-type]

    def __str__(self) -> str:
        return " ".join(self.ops)

    def __len__(self) -> int:
        return len(self.ops)

    def application_order(self) -> tuple[ShiftOp, ...]:
        return tuple(reversed(self.ops))


@dataclass(frozen=True)
class RewriteNode:
    """A placement seen as a node of the rewrite graph."""

    placement: Placement
    is_normal: bool
    minimal_steps: int

    def __post_init__(self) -> None:
        if self.minimal_steps < 0:
            raise InvariantViolation("minimal_steps must be nonnegative")
        if self.is_normal != (self.minimal_steps == 0):
            raise InvariantViolation("normal forms are exactly the 0-step nodes")


def _single(op: ShiftOp) -> Callable[[Placement, int], Placement]:
    return a_shift if op == "phi" else b_shift


def apply_program(
    p: Placement, k: int, program: ShiftProgram
) -> tuple[Placement, ShiftTrace]:
    """Apply a shift word right to left.  Operations landing on a placement
    that avoids k...21 pass through without effect and are not recorded."""
    _require_k(k)
    steps: list[ShiftStep] = []
    current = p
    for op in program.application_order():
        sequence = a_sequence if op == "phi" else b_sequence
        positions = sequence(current, k)
        if positions is None:
            continue
        nxt = _single(op)(current, k)
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
        current = nxt
    return current, ShiftTrace(k=k, steps=tuple(steps), total_steps=len(steps))


def _strategy_op(strategy: Strategy, seed: int | None) -> Callable[[int], ShiftOp]:
    if isinstance(strategy, ShiftProgram):
        prefix = strategy.application_order()

        def from_program(step: int) -> ShiftOp:
            # After the given prefix runs out, keep A-shifting; the end
            # result does not depend on the choice.
            return prefix[step] if step < len(prefix) else "phi"

        return from_program
    if strategy == "always-phi":
        return lambda step: "phi"
    if strategy == "always-psi":
        return lambda step: "psi"
    if strategy == "alternate":
        return lambda step: "phi" if step % 2 == 0 else "psi"
    if strategy == "random":
        if seed is None:
            raise ValueError("the random strategy requires a seed")
        rng = random.Random(seed)
        return lambda step: rng.choice(("phi", "psi"))
    raise ValueError(f"unknown strategy {strategy!r}; expected one of {_STRATEGY_NAMES}")


def normal_form(
    p: Placement,
    k: int,
    strategy: Strategy = "always-phi",
    *,
    seed: int | None = None,
) -> tuple[Placement, int]:
    """Reduce to the unique placement avoiding k...21, counting the steps.

    The result and the step count are independent of the strategy; the
    strategy only picks which of the two shifts fires at each step.

    >>> from .core import Permutation
    >>> done, steps = normal_form(Placement.square(Permutation((7, 6, 4, 2, 5, 3, 1))), 4, "always-psi")
    >>> str(done.perm), steps
    ('4 2 1 7 5 3 6', 2)
    """
    _require_k(k)
    choose = _strategy_op(strategy, seed)
    current = p
    steps = 0
    while a_sequence(current, k) is not None:
        current = _single(choose(steps))(current, k)
        steps += 1
    return current, steps


@dataclass(frozen=True)
class LocalCommutationReport:
    """Outcome of the one-step commutation check at a single placement.

    ``applicable`` is True when the A- and B-sequences exist and differ;
    the other two fields are vacuously True otherwise.
    """

    applicable: bool
    holds: bool
    both_still_contain: bool


def local_commutation_check(p: Placement, k: int) -> LocalCommutationReport:
    """Check that distinct A- and B-sequences make the two shifts commute,
    with both one-step images still containing k...21."""
    _require_k(k)
    a_positions = a_sequence(p, k)
    if a_positions is None or a_positions == b_sequence(p, k):
        return LocalCommutationReport(applicable=False, holds=True, both_still_contain=True)
    after_a = a_shift(p, k)
    after_b = b_shift(p, k)
    holds = b_shift(after_a, k) == a_shift(after_b, k)
    both = a_sequence(after_a, k) is not None and a_sequence(after_b, k) is not None
    return LocalCommutationReport(applicable=True, holds=holds, both_still_contain=both)


def global_commutation_check(p: Placement, k: int) -> bool:
    """Does fully A-shifting commute with the diagonal reflection?"""
    _require_k(k)
    reflected_first = phi_star(inverse_placement(p), k, max_recorded_steps=0)[0]
    reflected_last = inverse_placement(phi_star(p, k, max_recorded_steps=0)[0])
    return reflected_first == reflected_last


def build_rewrite_graph(
    seeds: Iterable[Placement], k: int
) -> tuple[dict[Placement, RewriteNode], list[tuple[Placement, Placement, str]]]:
    """Close a set of seed placements under both shifts.

    Returns the nodes keyed by placement and the labeled edges; an edge is
    labeled ``both`` when the two shifts agree on its source.
    """
    _require_k(k)
    pending = list(seeds)
    seen: set[Placement] = set()
    edges: list[tuple[Placement, Placement, str]] = []
    while pending:
        p = pending.pop()
        if p in seen:
            continue
        seen.add(p)
        if a_sequence(p, k) is None:
            continue
        after_a = a_shift(p, k)
        after_b = b_shift(p, k)
        if after_a == after_b:
            edges.append((p, after_a, "both"))
        else:
            edges.append((p, after_a, "phi"))
            edges.append((p, after_b, "psi"))
        pending.append(after_a)
        pending.append(after_b)

    depth: dict[Placement, int] = {}

    def minimal_steps(p: Placement) -> int:
        # Confluence makes every maximal chain from p equally long, so the
        # straight A-shift chain measures them all.
        chain: list[Placement] = []
        current = p
        while current not in depth and a_sequence(current, k) is not None:
            chain.append(current)
            current = a_shift(current, k)
        base = depth.get(current, 0)
        for offset, q in enumerate(reversed(chain), start=1):
            depth[q] = base + offset
        return depth.get(p, 0)

    nodes = {
        p: RewriteNode(
            placement=p,
            is_normal=a_sequence(p, k) is None,
            minimal_steps=minimal_steps(p),
        )
        for p in seen
    }
    return nodes, edges


def _node_labels(nodes: Iterable[Placement]) -> dict[Placement, str]:
    nodes = list(nodes)
    by_perm: dict[str, int] = {}
    for p in nodes:
        by_perm[str(p.perm)] = by_perm.get(str(p.perm), 0) + 1
    labels = {}
    for p in nodes:
        text = str(p.perm)
        # Seeds on different boards can share a one-line notation; keep the
        # labels unambiguous in that case.
        if by_perm[text] > 1:
            text = f"{text} on {p.board}"
        labels[p] = text
    return labels


def export_graph(seeds: Iterable[Placement], k: int, format: str = "dot") -> str:
    """Serialize the rewrite graph reachable from the seeds.

    ``format`` is ``"dot"`` or ``"json"``.  Output is deterministic: nodes
    are sorted lexicographically by label, edges by source, label, and
    target.  Normal forms have no outgoing edges; in DOT they are drawn
    with a double border.
    """
    nodes, edges = build_rewrite_graph(seeds, k)
    labels = _node_labels(nodes)
    sorted_nodes = sorted(nodes, key=lambda p: labels[p])
    sorted_edges = sorted(edges, key=lambda e: (labels[e[0]], e[2], labels[e[1]]))
    if format == "dot":
        lines = ["digraph {"]
        for p in sorted_nodes:
            attrs = " [peripheries=2]" if nodes[p].is_normal else ""
            lines.append(f'  "{labels[p]}"{attrs};')
        for src, dst, kind in sorted_edges:
            lines.append(f'  "{labels[src]}" -> "{labels[dst]}" [label="{kind}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if format == "json":
        payload = {
            "k": k,
            "nodes": [
                {
                    "label": labels[p],
                    "perm": list(p.perm.values),
                    "board": list(p.board.column_heights),
                    "is_normal": nodes[p].is_normal,
                    "minimal_steps": nodes[p].minimal_steps,
                }
                for p in sorted_nodes
            ],
            "edges": [
                {"source": labels[src], "target": labels[dst], "label": kind}
                for src, dst, kind in sorted_edges
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    raise ValueError(f"unknown graph format {format!r}; expected 'dot' or 'json'")
