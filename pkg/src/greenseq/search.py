"""Green/red bookkeeping on framed matrices, sequence verification, and search.

A framed matrix starts with the identity attached below, so every column index
begins green. Searching for a maximal green sequence expands only currently
green indices (every prefix of a maximal green sequence must be green);
green-to-red search expands all directions. Exhaustion at a depth bound is
never a nonexistence claim: sequence length is not bounded by the matrix.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import cached_property
from typing import Sequence

from .coherence import ColumnSign
from .errors import (
    GreenSeqError,
    IndexOutOfRange,
    InternalSignViolation,
    InvalidInputSequence,
    NonNegativityViolation,
    ShapeViolation,
)
from .matrices import (
    ExchangeMatrix,
    ExtendedMatrix,
    Rows,
    _mutate_rows,
    check_entry_bounds,
    frame,
    mutate,
    mutate_sequence,
)
from .quiver import decompose

TARGET_MGS = "mgs"
TARGET_G2R = "g2r"
DEFAULT_SEARCH_DEPTH = 10

_TARGET_ALIASES = {
    "mgs": TARGET_MGS,
    "maximal-green": TARGET_MGS,
    "g2r": TARGET_G2R,
    "green-to-red": TARGET_G2R,
}


def _canonical_target(target: str) -> str:
    try:
        return _TARGET_ALIASES[target]
    except KeyError:
        raise ValueError(f"unknown target {target!r}; expected 'mgs' or 'g2r'") from None


def _column_classes(rows: Rows, n: int) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Green and red column indices (1-based, ascending) of the attached block
    of a framed state. A zero or mixed column is an internal error."""
    greens = []
    reds = []
    for j in range(n):
        pos = neg = False
        for i in range(n, 2 * n):
            v = rows[i][j]
            if v > 0:
                pos = True
            elif v < 0:
                neg = True
        if pos and not neg:
            greens.append(j + 1)
        elif neg and not pos:
            reds.append(j + 1)
        else:
            kind = "mixed" if (pos and neg) else "zero"
            raise InternalSignViolation(f"column {j + 1} of the C-matrix is {kind}")
    return tuple(greens), tuple(reds)


@dataclass(frozen=True)
class GreenState:
    """A framed matrix reached from frame(B) by the recorded history."""

    ext: ExtendedMatrix
    history: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "history", tuple(self.history))
        if self.ext.m != self.ext.n:
            raise ShapeViolation("green state requires a framed matrix (m == n)")

    @classmethod
    def initial(cls, B: ExchangeMatrix) -> "GreenState":
        return cls(frame(B), ())

    def apply(self, k: int) -> "GreenState":
        return GreenState(mutate(self.ext, k), self.history + (k,))

    @cached_property
    def _classes(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        return _column_classes(self.ext.data.entries, self.ext.n)

    @property
    def greens(self) -> frozenset[int]:
        return frozenset(self._classes[0])

    @property
    def reds(self) -> frozenset[int]:
        return frozenset(self._classes[1])

    @property
    def all_red(self) -> bool:
        return not self._classes[0]


def green_indices(state: GreenState) -> tuple[frozenset[int], frozenset[int]]:
    """Green and red column indices of the state's C-matrix."""
    return state.greens, state.reds


@dataclass(frozen=True)
class SequenceVerdict:
    """Outcome of replaying a sequence on a framed matrix.

    first_violation is (step, index, sign): for a green-sequence failure the
    step whose index was red when mutated; for a sequence that is green but
    not green-to-red, the number of steps taken and the first index left green.
    """

    is_green_sequence: bool
    is_green_to_red: bool
    first_violation: tuple[int, int, ColumnSign] | None = None

    @property
    def is_maximal_green(self) -> bool:
        return self.is_green_sequence and self.is_green_to_red


def verify_sequence(B: ExchangeMatrix, seq: Sequence[int]) -> SequenceVerdict:
    """Replay seq on frame(B) and report green / green-to-red / maximal flags."""
    seq = tuple(seq)
    n = B.n
    for k in seq:
        if not (1 <= k <= n):
            raise IndexOutOfRange(f"direction {k} out of range 1..{n}")
    rows = frame(B).data.entries
    is_green = True
    violation = None
    for step, k in enumerate(seq, start=1):
        greens, _ = _column_classes(rows, n)
        if is_green and k not in greens:
            is_green = False
            violation = (step, k, ColumnSign.RED)
        rows = _mutate_rows(rows, k - 1)
        check_entry_bounds(rows)
    greens, _ = _column_classes(rows, n)
    is_g2r = not greens
    if is_green and not is_g2r and violation is None:
        violation = (len(seq), greens[0], ColumnSign.GREEN)
    return SequenceVerdict(is_green, is_g2r, violation)


@dataclass(frozen=True)
class SearchOutcome:
    """Result of a bounded search: found / exhausted / out_of_budget."""

    status: str
    sequence: tuple[int, ...] | None
    depth: int
    states_visited: int
    elapsed: float
    blocks: tuple[frozenset[int], ...] | None = None
    failed_block: frozenset[int] | None = None

    @property
    def found(self) -> bool:
        return self.status == "found"

    @property
    def exhausted(self) -> bool:
        return self.status == "exhausted"

    @property
    def out_of_budget(self) -> bool:
        return self.status == "out_of_budget"

    def __str__(self) -> str:
        if self.found:
            seq = ",".join(map(str, self.sequence))
            head = f"found ({seq}) at length {len(self.sequence)}"
        elif self.exhausted:
            head = f"exhausted to depth {self.depth}"
        else:
            head = f"out of budget at depth {self.depth}"
        return f"{head}; {self.states_visited} states in {self.elapsed * 1000:.1f} ms"


class _Budget:
    def __init__(self, max_states: int | None, time_budget: float | None):
        self.max_states = max_states
        self.deadline = None if time_budget is None else time.perf_counter() + time_budget

    def exceeded(self, states: int) -> bool:
        if self.max_states is not None and states > self.max_states:
            return True
        return self.deadline is not None and time.perf_counter() > self.deadline


def _check_green_persistence(
    parent_greens: tuple[int, ...], k: int, child_greens: tuple[int, ...]
) -> None:
    # every green index other than the one mutated must stay green
    child = set(child_greens)
    for j in parent_greens:
        if j != k and j not in child:
            raise InternalSignViolation(
                f"green index {j} turned non-green after mutating green index {k}"
            )


def find_sequence(
    B: ExchangeMatrix,
    target: str = TARGET_MGS,
    max_depth: int = DEFAULT_SEARCH_DEPTH,
    strategy: str = "bfs",
    *,
    max_states: int | None = None,
    time_budget: float | None = None,
) -> SearchOutcome:
    """Search for a maximal green ('mgs') or green-to-red ('g2r') sequence.

    BFS returns the lexicographically least among the shortest qualifying
    sequences; iddfs trades memory for repeated work. States are deduplicated
    on the exact framed matrix. ExhaustedToDepth means no qualifying sequence
    of length <= max_depth exists; it says nothing about longer ones.
    """
    target = _canonical_target(target)
    if max_depth < 0:
        raise ValueError("max_depth must be >= 0")
    if strategy not in ("bfs", "iddfs"):
        raise ValueError(f"unknown strategy {strategy!r}; expected 'bfs' or 'iddfs'")
    start = time.perf_counter()
    n = B.n
    if n == 0:
        return SearchOutcome("found", (), max_depth, 1, time.perf_counter() - start)
    rows0 = frame(B).data.entries
    budget = _Budget(max_states, time_budget)
    if strategy == "bfs":
        return _search_bfs(rows0, n, target, max_depth, budget, start)
    return _search_iddfs(rows0, n, target, max_depth, budget, start)


def _expansions(greens: tuple[int, ...], n: int, target: str) -> Sequence[int]:
    return greens if target == TARGET_MGS else range(1, n + 1)


def _search_bfs(rows0, n, target, max_depth, budget, start) -> SearchOutcome:
    greens0, _ = _column_classes(rows0, n)
    states = 1
    if not greens0:
        return SearchOutcome("found", (), max_depth, states, time.perf_counter() - start)
    seen = {rows0}
    frontier = [(rows0, (), greens0)]
    for depth in range(1, max_depth + 1):
        nxt = []
        for rows, seq, greens in frontier:
            if budget.exceeded(states):
                return SearchOutcome(
                    "out_of_budget", None, depth - 1, states, time.perf_counter() - start
                )
            last = seq[-1] if seq else 0
            for k in _expansions(greens, n, target):
                if k == last:
                    continue
                child = _mutate_rows(rows, k - 1)
                if child in seen:
                    continue
                check_entry_bounds(child)
                seen.add(child)
                states += 1
                child_greens, _ = _column_classes(child, n)
                if target == TARGET_MGS:
                    _check_green_persistence(greens, k, child_greens)
                if not child_greens:
                    return SearchOutcome(
                        "found", seq + (k,), max_depth, states, time.perf_counter() - start
                    )
                nxt.append((child, seq + (k,), child_greens))
        frontier = nxt
        if not frontier:
            break
    return SearchOutcome("exhausted", None, max_depth, states, time.perf_counter() - start)


def _search_iddfs(rows0, n, target, max_depth, budget, start) -> SearchOutcome:
    greens0, _ = _column_classes(rows0, n)
    states = 1
    if not greens0:
        return SearchOutcome("found", (), max_depth, states, time.perf_counter() - start)
    for limit in range(1, max_depth + 1):
        seen = {rows0: 0}
        stack = [(rows0, (), greens0)]
        while stack:
            rows, seq, greens = stack.pop()
            depth = len(seq)
            if depth == limit:
                continue
            if budget.exceeded(states):
                return SearchOutcome(
                    "out_of_budget", None, limit - 1, states, time.perf_counter() - start
                )
            children = []
            last = seq[-1] if seq else 0
            for k in _expansions(greens, n, target):
                if k == last:
                    continue
                child = _mutate_rows(rows, k - 1)
                if seen.get(child, max_depth + 1) <= depth + 1:
                    continue
                check_entry_bounds(child)
                seen[child] = depth + 1
                states += 1
                child_greens, _ = _column_classes(child, n)
                if target == TARGET_MGS:
                    _check_green_persistence(greens, k, child_greens)
                if not child_greens:
                    return SearchOutcome(
                        "found", seq + (k,), max_depth, states, time.perf_counter() - start
                    )
                children.append((child, seq + (k,), child_greens))
            stack.extend(reversed(children))
    return SearchOutcome("exhausted", None, max_depth, states, time.perf_counter() - start)


def _lower_left(B: ExchangeMatrix, split_n: int) -> None:
    m = B.n - split_n
    if split_n < 1 or m < 1:
        raise ShapeViolation("split must leave both diagonal blocks nonempty")
    e = B.b.entries
    for i in range(split_n, B.n):
        for j in range(split_n):
            if e[i][j] < 0:
                raise NonNegativityViolation(
                    f"lower-left block has a negative entry at ({i + 1},{j + 1})"
                )


def _require(verdict: SequenceVerdict, target: str, label: str) -> None:
    ok = verdict.is_maximal_green if target == TARGET_MGS else verdict.is_green_to_red
    if not ok:
        wanted = "maximal green" if target == TARGET_MGS else "green-to-red"
        raise InvalidInputSequence(f"{label} is not a {wanted} sequence of its block")


def compose_mgs(
    B: ExchangeMatrix,
    split_n: int,
    seq1: Sequence[int],
    seq2: Sequence[int],
    target: str = TARGET_MGS,
) -> tuple[int, ...]:
    """Concatenate block sequences into one for the whole matrix.

    Requires the lower-left block of B (rows split_n+1.., columns 1..split_n)
    to be nonnegative. With target 'mgs' both inputs must be maximal green on
    their diagonal blocks and the result is maximal green on B; with 'g2r'
    green-to-red inputs give a green-to-red result.
    """
    target = _canonical_target(target)
    _lower_left(B, split_n)
    top = B.principal_submatrix(range(1, split_n + 1))
    bottom = B.principal_submatrix(range(split_n + 1, B.n + 1))
    _require(verify_sequence(top, seq1), target, "first sequence")
    _require(verify_sequence(bottom, seq2), target, "second sequence")
    result = tuple(seq1) + tuple(k + split_n for k in seq2)
    if target == TARGET_MGS:
        assert verify_sequence(B, result).is_maximal_green
    else:
        assert verify_sequence(B, result).is_green_to_red
    return result


def split_mgs(
    B: ExchangeMatrix, split_n: int, seq: Sequence[int]
) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Invert compose_mgs: cut a prefix-low/suffix-high maximal green sequence
    of B into maximal green sequences of the two diagonal blocks."""
    _lower_left(B, split_n)
    seq = tuple(seq)
    boundary = len(seq)
    for pos, k in enumerate(seq):
        if not (1 <= k <= B.n):
            raise IndexOutOfRange(f"direction {k} out of range 1..{B.n}")
        if k > split_n:
            boundary = pos
            break
    for k in seq[boundary:]:
        if k <= split_n:
            raise ShapeViolation(
                "sequence must list all low indices before all high indices"
            )
    if not verify_sequence(B, seq).is_maximal_green:
        raise InvalidInputSequence("sequence is not maximal green on the full matrix")
    seq1 = seq[:boundary]
    seq2 = tuple(k - split_n for k in seq[boundary:])
    assert verify_sequence(B.principal_submatrix(range(1, split_n + 1)), seq1).is_maximal_green
    assert verify_sequence(
        B.principal_submatrix(range(split_n + 1, B.n + 1)), seq2
    ).is_maximal_green
    return seq1, seq2


def reduce_and_search(
    B: ExchangeMatrix,
    max_depth_per_block: int = DEFAULT_SEARCH_DEPTH,
    strategy: str = "bfs",
    target: str = TARGET_MGS,
    *,
    max_states: int | None = None,
    time_budget: float | None = None,
) -> SearchOutcome:
    """Decompose into irreducible blocks, search each, and compose the results.

    Blocks are searched independently at the per-block depth; success on every
    block yields a qualifying sequence for the whole matrix (block sequences
    concatenated along the sink-first order, mapped back to original labels).
    Failure reports the first block that exhausted its depth.
    """
    target = _canonical_target(target)
    start = time.perf_counter()
    decomposition = decompose(B)
    blocks = decomposition.blocks
    if not blocks:
        return SearchOutcome("found", (), max_depth_per_block, 0, time.perf_counter() - start, blocks)
    relabeled = B.permuted(decomposition.permutation)
    total_states = 0
    sequences: list[tuple[int, ...]] = []
    sizes = [len(block) for block in blocks]
    offset = 0
    for block, size in zip(blocks, sizes):
        sub = relabeled.principal_submatrix(range(offset + 1, offset + size + 1))
        outcome = find_sequence(
            sub,
            target,
            max_depth_per_block,
            strategy,
            max_states=max_states,
            time_budget=time_budget,
        )
        total_states += outcome.states_visited
        if not outcome.found:
            return SearchOutcome(
                outcome.status,
                None,
                max_depth_per_block,
                total_states,
                time.perf_counter() - start,
                blocks,
                failed_block=block,
            )
        sequences.append(outcome.sequence)
        offset += size

    combined = sequences[0]
    prefix = sizes[0]
    for seq, size in zip(sequences[1:], sizes[1:]):
        cut = relabeled.principal_submatrix(range(1, prefix + size + 1))
        combined = compose_mgs(cut, prefix, combined, seq, target)
        prefix += size

    mapped = tuple(decomposition.permutation[k - 1] for k in combined)
    final = verify_sequence(B, mapped)
    if not (final.is_maximal_green if target == TARGET_MGS else final.is_green_to_red):
        raise GreenSeqError("composed sequence failed re-verification; this is a bug")
    return SearchOutcome(
        "found", mapped, max_depth_per_block, total_states, time.perf_counter() - start, blocks
    )
