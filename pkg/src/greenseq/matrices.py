"""Exact integer matrices, skew-symmetrizer certification, and mutation.

All values are immutable; mutation returns a new matrix. Storage indexing
is 0-based, but every user-facing index (mutation directions, sequence
entries, vertex and column numbers in verdicts) is 1-based.

Arithmetic is exact. By default every entry is checked against the signed
64-bit range and a violation raises ArithmeticOverflow; call
``set_unbounded_entries(True)`` to allow arbitrary-precision entries.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd, lcm
from typing import Iterable, Iterator, Sequence

from .errors import (
    ArithmeticOverflow,
    IndexOutOfRange,
    NotSkewSymmetrizable,
    ShapeViolation,
)

INT64_MIN = -(2**63)
INT64_MAX = 2**63 - 1

_unbounded_entries = False

Rows = tuple[tuple[int, ...], ...]


def set_unbounded_entries(flag: bool) -> None:
    """Toggle arbitrary-precision entries (default: checked 64-bit)."""
    global _unbounded_entries
    _unbounded_entries = bool(flag)


def entries_unbounded() -> bool:
    return _unbounded_entries


def check_entry_bounds(rows: Rows) -> None:
    """Raise ArithmeticOverflow if any entry left the 64-bit range (checked mode)."""
    if _unbounded_entries:
        return
    for i, row in enumerate(rows):
        for j, v in enumerate(row):
            if v < INT64_MIN or v > INT64_MAX:
                raise ArithmeticOverflow(
                    f"entry at row {i + 1}, column {j + 1} left the 64-bit range"
                )


class IntMatrix:
    """Immutable exact-integer matrix backed by a tuple of row tuples."""

    __slots__ = ("entries",)

    def __init__(self, rows: Iterable[Iterable[int]]):
        entries = tuple(tuple(row) for row in rows)
        width = len(entries[0]) if entries else 0
        for i, row in enumerate(entries):
            if len(row) != width:
                raise ShapeViolation(f"ragged matrix: row {i + 1} has {len(row)} entries, expected {width}")
            for j, v in enumerate(row):
                if isinstance(v, bool) or not isinstance(v, int):
                    raise TypeError(f"entry at row {i + 1}, column {j + 1} is not an integer: {v!r}")
        check_entry_bounds(entries)
        object.__setattr__(self, "entries", entries)

    def __setattr__(self, name, value):
        raise AttributeError("IntMatrix is immutable")

    @classmethod
    def _wrap(cls, entries: Rows) -> "IntMatrix":
        # internal fast path: entries already normalized and bounds-checked
        m = object.__new__(cls)
        object.__setattr__(m, "entries", entries)
        return m

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls._wrap(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls._wrap(tuple((0,) * cols for _ in range(rows)))

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    @property
    def is_nonnegative(self) -> bool:
        return all(v >= 0 for row in self.entries for v in row)

    def __getitem__(self, key: tuple[int, int]) -> int:
        i, j = key
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexOutOfRange(f"entry ({i}, {j}) out of bounds for {self.rows}x{self.cols}")
        return self.entries[i][j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i]

    def column(self, j: int) -> tuple[int, ...]:
        return tuple(row[j] for row in self.entries)

    def transpose(self) -> "IntMatrix":
        return IntMatrix._wrap(tuple(zip(*self.entries)) if self.entries else ())

    def submatrix(self, row_idx: Sequence[int], col_idx: Sequence[int]) -> "IntMatrix":
        """Submatrix on the given 0-based row and column indices, in the order given."""
        return IntMatrix._wrap(tuple(tuple(self.entries[i][j] for j in col_idx) for i in row_idx))

    def permuted(self, order: Sequence[int]) -> "IntMatrix":
        """Simultaneous row/column reorder of a square matrix; order is 0-based."""
        if not self.is_square:
            raise ShapeViolation("permuted requires a square matrix")
        return self.submatrix(order, order)

    def to_lists(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def __iter__(self) -> Iterator[tuple[int, ...]]:
        return iter(self.entries)

    def __eq__(self, other) -> bool:
        return isinstance(other, IntMatrix) and self.entries == other.entries

    def __hash__(self) -> int:
        return hash(self.entries)

    def __repr__(self) -> str:
        return f"IntMatrix({self.to_lists()!r})"

    def __str__(self) -> str:
        return format_rows(self.entries)


def format_rows(rows: Iterable[Iterable[int]], pad: int = 0) -> str:
    """Right-aligned grid rendering of integer rows."""
    rows = [tuple(r) for r in rows]
    if not rows or not rows[0]:
        return ""
    width = max(max(len(str(v)) for v in row) for row in rows)
    width = max(width, pad)
    return "\n".join(" ".join(str(v).rjust(width) for v in row) for row in rows)


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    """Exact integer matrix product."""
    if a.cols != b.rows:
        raise ShapeViolation(f"cannot multiply {a.rows}x{a.cols} by {b.rows}x{b.cols}")
    bt = b.transpose().entries
    out = tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a.entries)
    check_entry_bounds(out)
    return IntMatrix._wrap(out)


@dataclass(frozen=True)
class ExchangeMatrix:
    """Square skew-symmetrizable matrix together with a certified symmetrizer.

    The symmetrizer is a tuple of positive integers s with s[i]*b[i][j] ==
    -s[j]*b[j][i] for all i, j, reduced so the collective gcd is 1.
    """

    b: IntMatrix
    symmetrizer: tuple[int, ...]

    def __post_init__(self):
        b = self.b
        if not b.is_square:
            raise ShapeViolation(f"exchange matrix must be square, got {b.rows}x{b.cols}")
        s = tuple(self.symmetrizer)
        object.__setattr__(self, "symmetrizer", s)
        if len(s) != b.rows:
            raise ShapeViolation(f"symmetrizer length {len(s)} does not match size {b.rows}")
        if any(isinstance(x, bool) or not isinstance(x, int) or x < 1 for x in s):
            raise NotSkewSymmetrizable("symmetrizer entries must be positive integers")
        if s and reduce(gcd, s) != 1:
            raise NotSkewSymmetrizable("symmetrizer must be gcd-reduced")
        for i in range(b.rows):
            for j in range(b.rows):
                if s[i] * b.entries[i][j] != -s[j] * b.entries[j][i]:
                    raise NotSkewSymmetrizable(
                        f"symmetrizer does not certify: fails at ({i + 1},{j + 1})"
                    )

    @property
    def n(self) -> int:
        return self.b.rows

    def principal_submatrix(self, vertices: Iterable[int]) -> "ExchangeMatrix":
        """Induced exchange matrix on the given 1-based vertices (ascending)."""
        idx = sorted(set(vertices))
        if not all(1 <= v <= self.n for v in idx):
            raise IndexOutOfRange(f"vertices must lie in 1..{self.n}")
        sub = self.b.submatrix([v - 1 for v in idx], [v - 1 for v in idx])
        return find_symmetrizer(sub)

    def permuted(self, order: Sequence[int]) -> "ExchangeMatrix":
        """Relabel vertices so new index p holds old vertex order[p-1] (1-based)."""
        if sorted(order) != list(range(1, self.n + 1)):
            raise ShapeViolation("order must be a permutation of 1..n")
        zero_based = [v - 1 for v in order]
        b = self.b.permuted(zero_based)
        s = tuple(self.symmetrizer[i] for i in zero_based)
        return ExchangeMatrix(b, s)


@dataclass(frozen=True)
class ExtendedMatrix:
    """(m+n) x n integer matrix whose top n x n principal part is skew-symmetrizable."""

    data: IntMatrix
    n: int
    symmetrizer: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "symmetrizer", tuple(self.symmetrizer))
        if self.data.cols != self.n:
            raise ShapeViolation(f"expected {self.n} columns, got {self.data.cols}")
        if self.data.rows < self.n:
            raise ShapeViolation("extended matrix must contain its principal part")
        s = self.symmetrizer
        if len(s) != self.n or any(x < 1 for x in s):
            raise NotSkewSymmetrizable("symmetrizer must list one positive integer per principal row")
        e = self.data.entries
        for i in range(self.n):
            for j in range(self.n):
                if s[i] * e[i][j] != -s[j] * e[j][i]:
                    raise NotSkewSymmetrizable(
                        f"principal part not certified by symmetrizer at ({i + 1},{j + 1})"
                    )

    @property
    def m(self) -> int:
        return self.data.rows - self.n

    @property
    def principal(self) -> IntMatrix:
        return IntMatrix._wrap(self.data.entries[: self.n])

    @property
    def attached(self) -> IntMatrix:
        return IntMatrix._wrap(self.data.entries[self.n :])

    def principal_exchange(self) -> ExchangeMatrix:
        return ExchangeMatrix(self.principal, self.symmetrizer)

    def __str__(self) -> str:
        top = format_rows(self.data.entries[: self.n])
        if self.m == 0:
            return top
        bottom = format_rows(self.data.entries[self.n :])
        width = max((len(line) for line in (top + "\n" + bottom).splitlines()), default=0)
        return top + "\n" + "-" * width + "\n" + bottom


def find_symmetrizer(b: IntMatrix | Iterable[Iterable[int]]) -> ExchangeMatrix:
    """Certify a square integer matrix as skew-symmetrizable.

    Propagates the ratios s[j]/s[i] = -b[i][j]/b[j][i] along nonzero entries of
    each connected component of the nonzero pattern, checks consistency around
    cycles, and scales each component to minimal positive integers.

    Raises NotSkewSymmetrizable on a sign-pattern violation (b[i][j]*b[j][i] > 0,
    or exactly one of the pair zero) or an inconsistent ratio around a cycle.
    """
    if not isinstance(b, IntMatrix):
        b = IntMatrix(b)
    if not b.is_square:
        raise ShapeViolation(f"expected a square matrix, got {b.rows}x{b.cols}")
    n = b.rows
    e = b.entries
    for i in range(n):
        for j in range(i, n):
            x, y = e[i][j], e[j][i]
            if x * y > 0 or ((x == 0) != (y == 0)):
                raise NotSkewSymmetrizable(
                    f"sign pattern violation at ({i + 1},{j + 1}): {x} vs {y}"
                )

    ratio: list[Fraction | None] = [None] * n
    scale = [0] * n
    for root in range(n):
        if ratio[root] is not None:
            continue
        ratio[root] = Fraction(1)
        component = [root]
        stack = [root]
        while stack:
            i = stack.pop()
            for j in range(n):
                if e[i][j] == 0:
                    continue
                r = ratio[i] * Fraction(-e[i][j], e[j][i])
                if ratio[j] is None:
                    ratio[j] = r
                    component.append(j)
                    stack.append(j)
                elif ratio[j] != r:
                    raise NotSkewSymmetrizable(
                        f"inconsistent ratio around a cycle through {i + 1} and {j + 1}"
                    )
        denom = reduce(lcm, (ratio[v].denominator for v in component), 1)
        nums = [ratio[v].numerator * (denom // ratio[v].denominator) for v in component]
        g = reduce(gcd, nums)
        for v, num in zip(component, nums):
            scale[v] = num // g

    return ExchangeMatrix(b, tuple(scale))


def frame(B: ExchangeMatrix) -> ExtendedMatrix:
    """Stack the identity below B, producing the (2n) x n framed matrix."""
    rows = B.b.entries + IntMatrix.identity(B.n).entries
    return ExtendedMatrix(IntMatrix._wrap(rows), B.n, B.symmetrizer)


def stack_attached(B: ExchangeMatrix, attached: IntMatrix) -> ExtendedMatrix:
    """Stack arbitrary integer rows below B."""
    if attached.cols != B.n and attached.rows > 0:
        raise ShapeViolation(f"attached rows must have {B.n} columns, got {attached.cols}")
    return ExtendedMatrix(IntMatrix._wrap(B.b.entries + attached.entries), B.n, B.symmetrizer)


def as_extended(B: ExchangeMatrix) -> ExtendedMatrix:
    """View a square exchange matrix as an extended matrix with no attached rows."""
    return ExtendedMatrix(B.b, B.n, B.symmetrizer)


def _mutate_rows(rows: Rows, k0: int) -> Rows:
    """Mutation in direction k0 (0-based) applied to every row; no validation."""
    rowk = rows[k0]
    out = []
    for i, row in enumerate(rows):
        if i == k0:
            out.append(tuple(-v for v in row))
            continue
        bik = row[k0]
        if bik == 0:
            out.append(row)
            continue
        new = list(row)
        new[k0] = -bik
        if bik > 0:
            for j, bkj in enumerate(rowk):
                if bkj > 0:
                    new[j] = row[j] + bik * bkj
        else:
            for j, bkj in enumerate(rowk):
                if bkj < 0:
                    new[j] = row[j] - bik * bkj
        out.append(tuple(new))
    return tuple(out)


def mutate(M: ExtendedMatrix, k: int) -> ExtendedMatrix:
    """Mutate M in direction k (1-based, within the principal part).

    Returns a new matrix; M is unchanged and the symmetrizer carries over.
    """
    if not (1 <= k <= M.n):
        raise IndexOutOfRange(f"direction {k} out of range 1..{M.n}")
    rows = _mutate_rows(M.data.entries, k - 1)
    check_entry_bounds(rows)
    return ExtendedMatrix(IntMatrix._wrap(rows), M.n, M.symmetrizer)


def mutate_sequence(M: ExtendedMatrix, seq: Sequence[int]) -> ExtendedMatrix:
    """Apply the sequence left to right: the first listed index mutates first."""
    for k in seq:
        M = mutate(M, k)
    return M


def trace_sequence(M: ExtendedMatrix, seq: Sequence[int]) -> list[ExtendedMatrix]:
    """All intermediate matrices of mutate_sequence, starting with M itself."""
    states = [M]
    for k in seq:
        M = mutate(M, k)
        states.append(M)
    return states
