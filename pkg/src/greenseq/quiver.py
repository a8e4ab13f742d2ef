"""Underlying quiver of an exchange matrix: reachability, irreducibility, blocks.

Vertices are 1-based throughout. The quiver of B has an arrow i -> j exactly
when b[i][j] > 0, weighted by that entry.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import IndexOutOfRange, ShapeViolation, SizeLimit
from .matrices import ExchangeMatrix

DEFINITION_METHOD_MAX = 12


@dataclass(frozen=True)
class QuiverGraph:
    """Weighted digraph on vertices 1..n with at most one arrow per ordered pair."""

    n: int
    arrows: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "arrows", tuple(sorted(tuple(a) for a in self.arrows)))
        seen = set()
        for src, dst, weight in self.arrows:
            if not (1 <= src <= self.n and 1 <= dst <= self.n):
                raise IndexOutOfRange(f"arrow ({src},{dst}) outside 1..{self.n}")
            if weight < 1:
                raise ShapeViolation(f"arrow ({src},{dst}) must have positive weight")
            if (src, dst) in seen:
                raise ShapeViolation(f"duplicate arrow ({src},{dst})")
            seen.add((src, dst))

    def successors_map(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for src, dst, _ in self.arrows:
            adj[src].append(dst)
        return adj

    def predecessors_map(self) -> dict[int, list[int]]:
        adj: dict[int, list[int]] = {v: [] for v in range(1, self.n + 1)}
        for src, dst, _ in self.arrows:
            adj[dst].append(src)
        return adj


class QuiverClass(NamedTuple):
    connected: bool
    acyclic: bool


@dataclass(frozen=True)
class BlockDecomposition:
    """Disjoint irreducible blocks covering 1..n, listed sink components first.

    ``permutation`` lists the original vertices block by block; relabeling by it
    puts every cross-block entry below the diagonal at a nonnegative value.
    """

    blocks: tuple[frozenset[int], ...]
    permutation: tuple[int, ...]


def underlying_quiver(B: ExchangeMatrix) -> QuiverGraph:
    """Quiver with an arrow i -> j of weight b[i][j] for every positive entry."""
    arrows = []
    e = B.b.entries
    for i in range(B.n):
        for j in range(B.n):
            if e[i][j] > 0:
                arrows.append((i + 1, j + 1, e[i][j]))
    return QuiverGraph(B.n, tuple(arrows))


def _reach(adj: dict[int, list[int]], start: int) -> frozenset[int]:
    seen = {start}
    stack = [start]
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return frozenset(seen)


def reachability_sets(Q: QuiverGraph, a: int) -> tuple[frozenset[int], frozenset[int]]:
    """Predecessors and successors of a, both including a itself."""
    if not (1 <= a <= Q.n):
        raise IndexOutOfRange(f"vertex {a} outside 1..{Q.n}")
    return _reach(Q.predecessors_map(), a), _reach(Q.successors_map(), a)


def classify(Q: QuiverGraph) -> QuiverClass:
    """Connectivity of the underlying undirected graph and acyclicity of the digraph."""
    succ = Q.successors_map()
    undirected: dict[int, set[int]] = {v: set() for v in range(1, Q.n + 1)}
    for src, dst, _ in Q.arrows:
        undirected[src].add(dst)
        undirected[dst].add(src)
    connected = True
    if Q.n > 0:
        seen = {1}
        stack = [1]
        while stack:
            v = stack.pop()
            for w in undirected[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        connected = len(seen) == Q.n

    # Kahn's algorithm: the digraph is acyclic iff every vertex drains out.
    indeg = {v: 0 for v in range(1, Q.n + 1)}
    for src, dst, _ in Q.arrows:
        indeg[dst] += 1
    queue = [v for v in indeg if indeg[v] == 0]
    drained = 0
    while queue:
        v = queue.pop()
        drained += 1
        for w in succ[v]:
            indeg[w] -= 1
            if indeg[w] == 0:
                queue.append(w)
    return QuiverClass(connected=connected, acyclic=drained == Q.n)


def _tarjan_components(Q: QuiverGraph) -> list[frozenset[int]]:
    adj = Q.successors_map()
    index: dict[int, int] = {}
    low: dict[int, int] = {}
    on_stack: set[int] = set()
    stack: list[int] = []
    components: list[frozenset[int]] = []
    counter = 0

    for start in range(1, Q.n + 1):
        if start in index:
            continue
        index[start] = low[start] = counter
        counter += 1
        stack.append(start)
        on_stack.add(start)
        work = [(start, iter(adj[start]))]
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(adj[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                component = set()
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    component.add(w)
                    if w == v:
                        break
                components.append(frozenset(component))
    return components


def _topo_order(
    components: list[frozenset[int]], Q: QuiverGraph, reverse: bool
) -> list[frozenset[int]]:
    """Topological order of the condensation; ties broken by smallest vertex.

    With reverse=True the condensation arrows are flipped, listing sink
    components of the original digraph first.
    """
    comp_of = {}
    for ci, comp in enumerate(components):
        for v in comp:
            comp_of[v] = ci
    edges: set[tuple[int, int]] = set()
    for src, dst, _ in Q.arrows:
        a, b = comp_of[src], comp_of[dst]
        if a != b:
            edges.add((b, a) if reverse else (a, b))
    out_adj: dict[int, list[int]] = {ci: [] for ci in range(len(components))}
    indeg = {ci: 0 for ci in range(len(components))}
    for a, b in edges:
        out_adj[a].append(b)
        indeg[b] += 1
    heap = [(min(components[ci]), ci) for ci in indeg if indeg[ci] == 0]
    heapq.heapify(heap)
    order = []
    while heap:
        _, ci = heapq.heappop(heap)
        order.append(components[ci])
        for cj in out_adj[ci]:
            indeg[cj] -= 1
            if indeg[cj] == 0:
                heapq.heappush(heap, (min(components[cj]), cj))
    return order


def strongly_connected_components(Q: QuiverGraph) -> list[frozenset[int]]:
    """SCC vertex sets in topological order of the condensation, sources first."""
    return _topo_order(_tarjan_components(Q), Q, reverse=False)


def is_irreducible(B: ExchangeMatrix, method: str = "cycle") -> bool:
    """Test irreducibility of B.

    method="definition" enumerates all bipartitions {I, J} of the index set and
    looks for a nonnegative submatrix on rows I, columns J (reducible when one
    exists); it is limited to n <= 12. method="cycle" checks that both endpoints
    of every arrow lie in one strongly connected component. The two methods
    agree on connected matrices; on disconnected input the definition method is
    the authoritative reading and can differ from the cycle method.
    """
    n = B.n
    if method == "definition":
        if n > DEFINITION_METHOD_MAX:
            raise SizeLimit(
                f"definition method enumerates 2^n bipartitions; n={n} exceeds {DEFINITION_METHOD_MAX}"
            )
        e = B.b.entries
        for mask in range(1, (1 << n) - 1):
            rows = [i for i in range(n) if mask >> i & 1]
            cols = [j for j in range(n) if not (mask >> j & 1)]
            if all(e[i][j] >= 0 for i in rows for j in cols):
                return False
        return True
    if method == "cycle":
        Q = underlying_quiver(B)
        comp_of = {}
        for comp in _tarjan_components(Q):
            for v in comp:
                comp_of[v] = comp
        return all(comp_of[src] is comp_of[dst] for src, dst, _ in Q.arrows)
    raise ValueError(f"unknown method {method!r}; expected 'definition' or 'cycle'")


def decompose(B: ExchangeMatrix) -> BlockDecomposition:
    """Partition into irreducible blocks, ordered so the relabeled matrix keeps
    every below-diagonal cross-block entry nonnegative (sink components first)."""
    Q = underlying_quiver(B)
    blocks = tuple(_topo_order(_tarjan_components(Q), Q, reverse=True))
    permutation = tuple(v for block in blocks for v in sorted(block))
    e = B.b.entries
    for r in range(B.n):
        for c in range(r):
            assert e[permutation[r] - 1][permutation[c] - 1] >= 0 or _same_block(
                blocks, permutation[r], permutation[c]
            ), "block order violates the nonnegative cross-block condition"
    return BlockDecomposition(blocks=blocks, permutation=permutation)


def _same_block(blocks: Iterable[frozenset[int]], a: int, b: int) -> bool:
    return any(a in block and b in block for block in blocks)
