"""Maximum matchings, perfect matching enumeration, and Tutte violators.

The general engine is augmenting-path search with blossom shrinking on the
underlying simple graph; parallel edges never change matchability, so a
matched pair is lifted back to the lowest edge id of its parallel class.
Perfect-matching existence queries go through the memoized bitmask kernel
on the graph object instead, which amortizes across the thousands of
related queries the covered-graph predicates make.
"""
from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Iterator, Optional

from .errors import BoundExceededError, VertexOutOfRangeError
from .multigraph import Multigraph, bits, mask_of

_PM_ENUM_MAX_N = int(os.environ.get("MATCHCOV_MAX_PM_ENUM_N", "24"))


@dataclass(frozen=True)
class Matching:
    edge_ids: tuple[int, ...]
    covered: frozenset[int]

    def __len__(self) -> int:
        return len(self.edge_ids)


@dataclass(frozen=True)
class TutteViolator:
    vertices: frozenset[int]
    odd_component_count: int


def _blossom_max_matching(n: int, adj: list[list[int]]) -> list[int]:
    """match[v] = partner or -1; classic O(V^3) blossom shrinking."""
    match = [-1] * n
    p = [-1] * n
    base = list(range(n))
    used = [False] * n
    blossom = [False] * n

    def lca(a: int, b: int) -> int:
        used_path = [False] * n
        while True:
            a = base[a]
            used_path[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used_path[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int) -> None:
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> bool:
        for i in range(n):
            used[i] = False
            p[i] = -1
            base[i] = i
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    for i in range(n):
                        blossom[i] = False
                    mark_path(v, curbase, to)
                    mark_path(to, curbase, v)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        return False

    for v in range(n):
        if match[v] == -1:
            find_path(v)
    return match


def _adjacency_lists(g: Multigraph, skip: frozenset[int] = frozenset()) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for v in range(g.n):
        if v in skip:
            continue
        adj[v] = [u for u in bits(g.adj_masks[v]) if u not in skip]
    return adj


def max_matching(g: Multigraph) -> Matching:
    """A maximum-cardinality matching, lifted to lowest parallel edge ids."""
    match = _blossom_max_matching(g.n, _adjacency_lists(g))
    edge_ids = []
    for v in range(g.n):
        u = match[v]
        if u > v:
            edge_ids.append(g.parallel_classes[(v, u)][0])
    covered = frozenset(v for v in range(g.n) if match[v] != -1)
    return Matching(tuple(sorted(edge_ids)), covered)


def matching_number(g: Multigraph) -> int:
    return len(max_matching(g).edge_ids)


def has_perfect_matching(g: Multigraph) -> bool:
    if g.n % 2:
        return False
    return g.has_pm_mask(g.full_mask)


def odd_components_count(g: Multigraph, s) -> int:
    s_mask = mask_of(s)
    for v in bits(s_mask):
        if v >= g.n:
            raise VertexOutOfRangeError(f"vertex {v} outside 0..{g.n - 1}")
    within = g.full_mask & ~s_mask
    return sum(1 for comp in g.component_masks(within) if comp.bit_count() % 2)


def find_tutte_violator(g: Multigraph) -> Optional[TutteViolator]:
    """A vertex set S with more than |S| odd components outside it.

    None when the graph has a perfect matching. The set is extracted
    Gallai-Edmonds style: S is the neighborhood of the vertices missable by
    some maximum matching.
    """
    if has_perfect_matching(g):
        return None
    nu = matching_number(g)
    missable = []
    for v in range(g.n):
        adj = _adjacency_lists(g, skip=frozenset([v]))
        match = _blossom_max_matching(g.n, adj)
        size = sum(1 for w in range(g.n) if match[w] != -1) // 2
        if size == nu:
            missable.append(v)
    d_mask = mask_of(missable)
    a_mask = 0
    for v in missable:
        a_mask |= g.adj_masks[v]
    a_mask &= ~d_mask
    s = frozenset(bits(a_mask))
    return TutteViolator(s, odd_components_count(g, s))


def enumerate_perfect_matchings(g: Multigraph) -> Iterator[Matching]:
    """All perfect matchings as edge-id sets; parallel edges are distinct.

    Deterministic order: always match the lowest uncovered vertex, trying
    its incident edge slots in ascending edge id order.
    """
    if g.n > _PM_ENUM_MAX_N:
        raise BoundExceededError(
            f"perfect matching enumeration capped at {_PM_ENUM_MAX_N} vertices"
        )
    if g.n % 2:
        return
    full = g.full_mask
    incident = g.incident
    edges = g.edges
    chosen: list[int] = []

    def rec(mask: int) -> Iterator[Matching]:
        if mask == 0:
            yield Matching(tuple(sorted(chosen)), frozenset(range(g.n)))
            return
        v = (mask & -mask).bit_length() - 1
        # Cheap feasibility cut keeps dense graphs from thrashing.
        if not g.has_pm_mask(mask):
            return
        for e in incident[v]:
            a, b = edges[e]
            u = b if a == v else a
            if not (mask >> u) & 1:
                continue
            chosen.append(e)
            yield from rec(mask ^ (1 << v) ^ (1 << u))
            chosen.pop()

    yield from rec(full)


def perfect_matchings(g: Multigraph) -> tuple[Matching, ...]:
    """Cached tuple of all perfect matchings (see enumerate_perfect_matchings)."""
    cached = getattr(g, "_pm_list_cache", None)
    if cached is None:
        cached = tuple(enumerate_perfect_matchings(g))
        g._pm_list_cache = cached
    return cached


def has_pm_containing(g: Multigraph, e: int) -> bool:
    u, v = g.endpoints(e)
    return g.has_pm_mask(g.full_mask & ~(1 << u) & ~(1 << v))


def has_pm_avoiding_vertices(g: Multigraph, u: int, v: int) -> bool:
    """Perfect matching of G - u - v (the bicriticality primitive)."""
    for w in (u, v):
        if not (0 <= w < g.n):
            raise VertexOutOfRangeError(f"vertex {w} outside 0..{g.n - 1}")
    if u == v:
        raise VertexOutOfRangeError("vertices must be distinct")
    return g.has_pm_mask(g.full_mask & ~(1 << u) & ~(1 << v))
