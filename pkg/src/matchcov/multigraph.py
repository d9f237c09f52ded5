"""Loop-free multigraph on dense integer vertex ids.

Instances are immutable after construction: every operation returns a new
graph. Parallel edges are distinct edge ids with equal endpoint pairs, so
edge id i always means position i of the edge list handed to the
constructor. Bitmask adjacency over the underlying simple graph backs the
perfect-matching and connectivity kernels that the rest of the library
leans on.
"""
from __future__ import annotations

from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    EdgeOutOfRangeError,
    EmptyShoreError,
    LoopEdgeError,
    VertexOutOfRangeError,
)

VertexLabels = tuple[frozenset[int], ...]


class Multigraph:
    """n vertices (0..n-1) plus an ordered tuple of undirected edges.

    Optional vertex labels track provenance through contractions: label i is
    the set of original vertices that vertex i stands for.
    """

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: Optional[VertexLabels] = None,
    ):
        if n < 0:
            raise VertexOutOfRangeError(f"vertex count {n} is negative")
        norm = []
        for u, v in edges:
            if u == v:
                raise LoopEdgeError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise VertexOutOfRangeError(f"edge ({u}, {v}) outside 0..{n - 1}")
            norm.append((u, v) if u < v else (v, u))
        self.n = n
        self.edges: tuple[tuple[int, int], ...] = tuple(norm)
        if labels is not None:
            labels = tuple(labels)
            if len(labels) != n:
                raise VertexOutOfRangeError("label tuple length != n")
        self.labels = labels

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return len(self.edges)

    def endpoints(self, e: int) -> tuple[int, int]:
        if not (0 <= e < len(self.edges)):
            raise EdgeOutOfRangeError(f"edge id {e} outside 0..{len(self.edges) - 1}")
        return self.edges[e]

    @cached_property
    def _mult(self) -> dict[tuple[int, int], int]:
        mult: dict[tuple[int, int], int] = {}
        for pair in self.edges:
            mult[pair] = mult.get(pair, 0) + 1
        return mult

    def multiplicity(self, u: int, v: int) -> int:
        if u > v:
            u, v = v, u
        return self._mult.get((u, v), 0)

    @cached_property
    def parallel_classes(self) -> dict[tuple[int, int], tuple[int, ...]]:
        """Endpoint pair -> ascending edge ids realizing it."""
        classes: dict[tuple[int, int], list[int]] = {}
        for e, pair in enumerate(self.edges):
            classes.setdefault(pair, []).append(e)
        return {pair: tuple(ids) for pair, ids in classes.items()}

    @cached_property
    def adj_masks(self) -> tuple[int, ...]:
        """Underlying-simple adjacency as one bitmask per vertex."""
        masks = [0] * self.n
        for u, v in self.edges:
            masks[u] |= 1 << v
            masks[v] |= 1 << u
        return tuple(masks)

    @cached_property
    def degrees(self) -> tuple[int, ...]:
        """Degree with multiplicity, per vertex."""
        deg = [0] * self.n
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return tuple(deg)

    def degree(self, v: int) -> int:
        if not (0 <= v < self.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")
        return self.degrees[v]

    def neighbors(self, v: int) -> frozenset[int]:
        if not (0 <= v < self.n):
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")
        return frozenset(_bits(self.adj_masks[v]))

    @cached_property
    def incident(self) -> tuple[tuple[int, ...], ...]:
        """Ascending edge ids touching each vertex."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for e, (u, v) in enumerate(self.edges):
            inc[u].append(e)
            inc[v].append(e)
        return tuple(tuple(ids) for ids in inc)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def max_degree(self) -> int:
        return max(self.degrees, default=0)

    def min_degree(self) -> int:
        return min(self.degrees, default=0)

    def is_simple(self) -> bool:
        return all(c == 1 for c in self._mult.values())

    def __eq__(self, other) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return (
            self.n == other.n
            and self.edges == other.edges
            and self.labels == other.labels
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges, self.labels))

    def __repr__(self) -> str:
        return f"Multigraph(n={self.n}, m={self.m})"

    # -- connectivity kernels ----------------------------------------------

    def component_mask(self, start: int, within: Optional[int] = None) -> int:
        """Bitmask of the component of `start` inside the induced mask."""
        if within is None:
            within = self.full_mask
        adj = self.adj_masks
        seen = 1 << start
        frontier = seen
        while frontier:
            v = (frontier & -frontier).bit_length() - 1
            frontier &= frontier - 1
            new = adj[v] & within & ~seen
            seen |= new
            frontier |= new
        return seen

    def component_masks(self, within: Optional[int] = None) -> list[int]:
        if within is None:
            within = self.full_mask
        out = []
        rest = within
        while rest:
            v = (rest & -rest).bit_length() - 1
            comp = self.component_mask(v, within)
            out.append(comp)
            rest &= ~comp
        return out

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == self.full_mask

    def is_bipartite(self) -> bool:
        return self.two_coloring() is not None

    def two_coloring(self) -> Optional[tuple[int, ...]]:
        """0/1 coloring with adjacent vertices distinct, or None."""
        color = [-1] * self.n
        adj = self.adj_masks
        for s in range(self.n):
            if color[s] != -1:
                continue
            color[s] = 0
            stack = [s]
            while stack:
                v = stack.pop()
                for u in _bits(adj[v]):
                    if color[u] == -1:
                        color[u] = 1 - color[v]
                        stack.append(u)
                    elif color[u] == color[v]:
                        return None
        return tuple(color)

    # -- perfect matching kernel --------------------------------------------

    @cached_property
    def _pm_memo(self) -> dict[int, bool]:
        return {0: True}

    def has_pm_mask(self, mask: int) -> bool:
        """Does the induced subgraph on `mask` have a perfect matching?

        Memoized per graph; repeated queries (every edge, every vertex pair)
        share subproblems, which is what keeps the covered-graph predicates
        fast at desk scale.
        """
        memo = self._pm_memo
        hit = memo.get(mask)
        if hit is not None:
            return hit
        adj = self.adj_masks
        # Iterative DFS with an explicit stack of (mask, candidate-set).
        stack = [(mask, None)]
        while stack:
            cur, cand = stack[-1]
            if cand is None:
                hit = memo.get(cur)
                if hit is not None:
                    stack.pop()
                    continue
                v = (cur & -cur).bit_length() - 1
                cand = adj[v] & cur
                stack[-1] = (cur, cand)
            if cand == 0:
                memo[cur] = False
                stack.pop()
                continue
            v_bit = cur & -cur
            u_bit = cand & -cand
            stack[-1] = (cur, cand ^ u_bit)
            child = cur ^ v_bit ^ u_bit
            known = memo.get(child)
            if known is None:
                stack.append((child, None))
            elif known:
                # Propagate success: everything on the stack succeeds.
                for frame_mask, _ in stack:
                    memo[frame_mask] = True
                return True
        return memo[mask]

    def has_perfect_matching(self) -> bool:
        return self.has_pm_mask(self.full_mask)

    # -- derived graphs ------------------------------------------------------

    def delete_edges(self, edge_ids: Iterable[int]) -> "Multigraph":
        drop = set(edge_ids)
        for e in drop:
            if not (0 <= e < len(self.edges)):
                raise EdgeOutOfRangeError(f"edge id {e} outside 0..{len(self.edges) - 1}")
        kept = tuple(pair for e, pair in enumerate(self.edges) if e not in drop)
        return Multigraph(self.n, kept, self.labels)

    def underlying_simple(self) -> "Multigraph":
        seen = set()
        kept = []
        for pair in self.edges:
            if pair not in seen:
                seen.add(pair)
                kept.append(pair)
        return Multigraph(self.n, kept, self.labels)

    def contract(self, shore: Iterable[int]) -> tuple["Multigraph", dict[int, int]]:
        """Contract the shore to a single (last) vertex.

        Kept vertices preserve relative order at ids 0..k-1; the contracted
        vertex is k. Internal shore edges vanish. Returns the new graph and
        the edge provenance map (old edge id -> new edge id, surviving edges
        only).
        """
        x = set(shore)
        if not x or len(x) >= self.n:
            raise EmptyShoreError("shore must be a nonempty proper vertex subset")
        for v in x:
            if not (0 <= v < self.n):
                raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")
        kept = [v for v in range(self.n) if v not in x]
        remap = {v: i for i, v in enumerate(kept)}
        cvx = len(kept)
        new_edges = []
        provenance: dict[int, int] = {}
        for e, (u, v) in enumerate(self.edges):
            if u in x and v in x:
                continue
            nu = cvx if u in x else remap[u]
            nv = cvx if v in x else remap[v]
            provenance[e] = len(new_edges)
            new_edges.append((nu, nv))
        base = self.labels
        if base is None:
            base = tuple(frozenset([v]) for v in range(self.n))
        new_labels = tuple(base[v] for v in kept) + (
            frozenset().union(*(base[v] for v in sorted(x))),
        )
        return Multigraph(cvx + 1, new_edges, new_labels), provenance

    def induced(self, keep: Sequence[int]) -> "Multigraph":
        """Induced subgraph on `keep`, renumbered in the given order."""
        remap = {}
        for i, v in enumerate(keep):
            if not (0 <= v < self.n):
                raise VertexOutOfRangeError(f"vertex {v} outside 0..{self.n - 1}")
            remap[v] = i
        kept_edges = [
            (remap[u], remap[v])
            for (u, v) in self.edges
            if u in remap and v in remap
        ]
        labels = None
        if self.labels is not None:
            labels = tuple(self.labels[v] for v in keep)
        return Multigraph(len(keep), kept_edges, labels)

    def relabeled(self, perm: Sequence[int]) -> "Multigraph":
        """Image under vertex permutation (perm[v] is the new id of v)."""
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        labels = None
        if self.labels is not None:
            inv = [0] * self.n
            for v,w in enumerate(perm):
                inv[w] = v
            labels = tuple(self.labels[inv[i]] for i in range(self.n))
        return Multigraph(self.n, edges, labels)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bits(mask: int) -> list[int]:
    """Ascending vertex ids set in a bitmask."""
    return list(_bits(mask))


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


def new_multigraph(
    n: int,
    edges: Iterable[tuple[int, int]],
    labels: Optional[VertexLabels] = None,
) -> Multigraph:
    """Constructor alias used by callers that prefer a function."""
    return Multigraph(n, edges, labels)


def vertex_connectivity(g: Multigraph) -> int:
    """Minimum vertices whose removal disconnects g or leaves one vertex.

    Returns 0 for disconnected or trivial graphs.
    """
    from itertools import combinations

    n = g.n
    if n <= 1:
        return 0
    if not g.is_connected():
        return 0
    simple = g.underlying_simple()
    full = simple.full_mask
    for k in range(1, n):
        if n - k <= 1:
            return k
        for cut in combinations(range(n), k):
            within = full & ~mask_of(cut)
            start = (within & -within).bit_length() - 1
            if simple.component_mask(start, within) != within:
                return k
    return n - 1
