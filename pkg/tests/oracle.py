"""Independent reference implementations used as test oracles.

Everything here is deliberately naive and kept separate from the library so
the two routes cannot share a bug: mutation is the literal sgn/max formula,
and searches are plain enumerations without pruning or dedup.
"""

from itertools import product


def sgn(x):
    return (x > 0) - (x < 0)


def naive_mutate(rows, k):
    """Literal mutation rule at 1-based direction k on a list-of-lists matrix."""
    k0 = k - 1
    m = len(rows)
    n = len(rows[0])
    out = []
    for i in range(m):
        new_row = []
        for j in range(n):
            if i == k0 or j == k0:
                new_row.append(-rows[i][j])
            else:
                new_row.append(rows[i][j] + sgn(rows[i][k0]) * max(rows[i][k0] * rows[k0][j], 0))
        out.append(new_row)
    return out


def naive_replay(rows, seq):
    rows = [list(r) for r in rows]
    for k in seq:
        rows = naive_mutate(rows, k)
    return rows


def naive_framed(b):
    n = len(b)
    return [list(row) for row in b] + [[1 if i == j else 0 for j in range(n)] for i in range(n)]


def c_part(rows, n):
    return [row[:] for row in rows[n:]]


def column_is_green(c, j):
    col = [row[j - 1] for row in c]
    return all(v >= 0 for v in col) and any(v > 0 for v in col)


def column_is_red(c, j):
    col = [row[j - 1] for row in c]
    return all(v <= 0 for v in col) and any(v < 0 for v in col)


def naive_verdict(b, seq):
    """(is_green, is_green_to_red) of a sequence by literal replay."""
    n = len(b)
    rows = naive_framed(b)
    is_green = True
    for k in seq:
        if not column_is_green(c_part(rows, n), k):
            is_green = False
        rows = naive_mutate(rows, k)
    c = c_part(rows, n)
    is_g2r = all(v <= 0 for row in c for v in row)
    return is_green, is_g2r


def enumerate_shortest(b, target, max_depth):
    """Shortest qualifying sequence by full enumeration (no pruning, no dedup).

    Returns the lexicographically least among the shortest, or None.
    """
    n = len(b)
    for length in range(0, max_depth + 1):
        for seq in product(range(1, n + 1), repeat=length):
            is_green, is_g2r = naive_verdict(b, seq)
            ok = (is_green and is_g2r) if target == "mgs" else is_g2r
            if ok:
                return seq
    return None
