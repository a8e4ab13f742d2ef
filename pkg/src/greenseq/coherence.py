"""Column sign-coherence predicates and bounded-depth uniform-coherence checks.

The uniform property quantifies over all mutation sequences, so checkers here
enumerate exhaustively up to a configurable depth (with dedup of visited
states) and report the depth in their verdict; VerifiedToDepth is evidence,
not a proof for unbounded depth.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Iterator

from .errors import (
    IndexOutOfRange,
    NonNegativityViolation,
    NotSignCoherentInput,
    ShapeViolation,
)
from .matrices import (
    ExchangeMatrix,
    IntMatrix,
    Rows,
    _mutate_rows,
    check_entry_bounds,
    matmul,
)

DEFAULT_DEPTH = 6


class ColumnSign(Enum):
    GREEN = "green"
    RED = "red"
    ZERO = "zero"
    MIXED = "mixed"


def column_sign(M: IntMatrix, j: int) -> ColumnSign:
    """Sign of the j-th column (1-based): GREEN if all entries >= 0 with one > 0,
    RED if all <= 0 with one < 0, ZERO if all zero, MIXED otherwise."""
    if not (1 <= j <= M.cols):
        raise IndexOutOfRange(f"column {j} outside 1..{M.cols}")
    pos = neg = False
    for row in M.entries:
        v = row[j - 1]
        if v > 0:
            pos = True
        elif v < 0:
            neg = True
    if pos and neg:
        return ColumnSign.MIXED
    if pos:
        return ColumnSign.GREEN
    if neg:
        return ColumnSign.RED
    return ColumnSign.ZERO


def column_sign_coherent(M: IntMatrix) -> bool:
    """True iff no column mixes positive and negative entries."""
    return _first_mixed(M.entries, 0) is None


def row_sign_coherent(M: IntMatrix) -> bool:
    return column_sign_coherent(M.transpose())


def _first_mixed(rows: Rows, first_row: int) -> tuple[int, int] | None:
    """First mixed column among rows[first_row:], as 1-based (row, column).

    The row reported is the one whose sign conflicts with an earlier nonzero
    entry in the same column, counted from first_row.
    """
    if len(rows) <= first_row:
        return None
    for j in range(len(rows[0])):
        sign = 0
        for i in range(first_row, len(rows)):
            v = rows[i][j]
            if v == 0:
                continue
            s = 1 if v > 0 else -1
            if sign == 0:
                sign = s
            elif s != sign:
                return (i - first_row + 1, j + 1)
    return None


@dataclass(frozen=True)
class Counterexample:
    """Mutation sequence whose replay violates the property, with the 1-based
    (row, column) of the offending entry inside the watched block."""

    sequence: tuple[int, ...]
    row: int
    column: int


@dataclass(frozen=True)
class CoherenceVerdict:
    depth: int
    counterexample: Counterexample | None = None

    @property
    def verified(self) -> bool:
        return self.counterexample is None

    def __str__(self) -> str:
        if self.verified:
            return f"verified to depth {self.depth}"
        c = self.counterexample
        return (
            f"counterexample at sequence {c.sequence} "
            f"(row {c.row}, column {c.column})"
        )


def _bfs_states(rows0: Rows, n: int, depth: int) -> Iterator[tuple[Rows, tuple[int, ...]]]:
    """All distinct states reachable by mutation sequences of length <= depth
    over directions 1..n, yielded with a witness sequence (shortest, bfs order)."""
    seen = {rows0}
    frontier = [(rows0, ())]
    yield rows0, ()
    for _ in range(depth):
        nxt = []
        for rows, seq in frontier:
            last = seq[-1] if seq else 0
            for k in range(1, n + 1):
                if k == last:
                    continue
                child = _mutate_rows(rows, k - 1)
                if child in seen:
                    continue
                check_entry_bounds(child)
                seen.add(child)
                entry = (child, seq + (k,))
                nxt.append(entry)
                yield entry
        frontier = nxt


def check_uniform_sign_coherence(
    B1: ExchangeMatrix,
    B2: IntMatrix,
    depth: int = DEFAULT_DEPTH,
    *,
    assume_closure_laws: bool = False,
) -> CoherenceVerdict:
    """Check that B2 stays column sign-coherent under every mutation sequence
    of B1 up to the given depth, with B2 stacked below B1.

    Returns the first counterexample found (sequence plus mixed-column
    position inside the attached block) or VerifiedToDepth. With
    assume_closure_laws=True, nonnegative or rank <= 1 attachments are
    accepted without enumeration; the default keeps the exhaustive route
    so the closure laws can be tested against it independently.
    """
    if B2.cols != B1.n and B2.rows > 0:
        raise ShapeViolation(f"attached block must have {B1.n} columns, got {B2.cols}")
    hit = _first_mixed(B2.entries, 0)
    if hit is not None:
        raise NotSignCoherentInput(
            f"attached block has a mixed column {hit[1]} before any mutation"
        )
    if assume_closure_laws and (B2.is_nonnegative or matrix_rank_exact(B2) <= 1):
        return CoherenceVerdict(depth)
    n = B1.n
    rows0 = B1.b.entries + B2.entries
    for rows, seq in _bfs_states(rows0, n, depth):
        hit = _first_mixed(rows, n)
        if hit is not None:
            return CoherenceVerdict(depth, Counterexample(seq, hit[0], hit[1]))
    return CoherenceVerdict(depth)


def scaling_commutation_check(
    B1: ExchangeMatrix, B2: IntMatrix, P: IntMatrix, k: int
) -> bool:
    """Evaluate both sides of the scaling commutation law and compare:
    mutating with the attached block pre-multiplied by a nonnegative P equals
    pre-multiplying after the mutation."""
    n = B1.n
    if B2.cols != n and B2.rows > 0:
        raise ShapeViolation(f"attached block must have {n} columns, got {B2.cols}")
    if P.cols != B2.rows:
        raise ShapeViolation(f"scaling matrix must have {B2.rows} columns, got {P.cols}")
    if not P.is_nonnegative:
        raise NonNegativityViolation("scaling matrix must be nonnegative")
    if not column_sign_coherent(B2):
        raise NotSignCoherentInput("attached block must be column sign-coherent")
    if not (1 <= k <= n):
        raise IndexOutOfRange(f"direction {k} out of range 1..{n}")

    scaled = matmul(P, B2)
    left = _mutate_rows(B1.b.entries + scaled.entries, k - 1)
    check_entry_bounds(left)
    direct = _mutate_rows(B1.b.entries + B2.entries, k - 1)
    check_entry_bounds(direct)
    lower = matmul(P, IntMatrix._wrap(direct[n:]))
    right = direct[:n] + lower.entries
    return left == right


def block_invariance_check(
    B: ExchangeMatrix, split_n: int, depth: int = DEFAULT_DEPTH
) -> CoherenceVerdict:
    """Check that the lower-right block of B stays fixed under every mutation
    sequence of length <= depth in the first split_n directions.

    The counterexample reports the first changed entry, 1-based within the
    lower-right block.
    """
    m = B.n - split_n
    if split_n < 1 or m < 1:
        raise ShapeViolation("split must leave both diagonal blocks nonempty")

    def corner(rows: Rows) -> tuple[tuple[int, ...], ...]:
        return tuple(row[split_n:] for row in rows[split_n:])

    original = corner(B.b.entries)
    for rows, seq in _bfs_states(B.b.entries, split_n, depth):
        current = corner(rows)
        if current != original:
            for r in range(m):
                for c in range(m):
                    if current[r][c] != original[r][c]:
                        return CoherenceVerdict(depth, Counterexample(seq, r + 1, c + 1))
    return CoherenceVerdict(depth)


def matrix_rank_exact(M: IntMatrix) -> int:
    """Rank over the rationals, by exact fraction elimination."""
    rows = [[Fraction(v) for v in row] for row in M.entries]
    rank = 0
    for col in range(M.cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col] != 0), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        lead = rows[rank]
        for r in range(rank + 1, len(rows)):
            f = rows[r][col] / lead[col]
            if f:
                rows[r] = [a - f * b for a, b in zip(rows[r], lead)]
        rank += 1
    return rank
