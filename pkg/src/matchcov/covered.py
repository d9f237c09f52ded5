"""Matching covered graphs and their removable structure.

A graph is matching covered when it is connected, has at least two
vertices, and every edge lies in some perfect matching. An edge e is
removable when G - e stays matching covered; a doubleton {e, f} is
removable when G - e - f is matching covered but neither single deletion
is. Removable classes are the singles plus the doubletons.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Optional, Union

from .errors import NotMatchingCoveredError
from .multigraph import Multigraph, vertex_connectivity


@dataclass(frozen=True)
class Single:
    edge: int


@dataclass(frozen=True)
class Doubleton:
    edges: tuple[int, int]


RemovableClass = Union[Single, Doubleton]


def is_matching_covered(g: Multigraph) -> bool:
    if g.n < 2 or g.n % 2:
        return False
    if not g.is_connected():
        return False
    full = g.full_mask
    for (u, v) in g.parallel_classes:
        if not g.has_pm_mask(full & ~(1 << u) & ~(1 << v)):
            return False
    return True


def _require_mc(g: Multigraph) -> None:
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("graph is not matching covered")


def is_removable_edge(g: Multigraph, e: int) -> bool:
    _require_mc(g)
    return _removable_unchecked(g, e)


def _removable_unchecked(g: Multigraph, e: int) -> bool:
    return is_matching_covered(g.delete_edges([e]))


def removable_edges(g: Multigraph) -> tuple[int, ...]:
    """Ascending edge ids removable one at a time."""
    _require_mc(g)
    cached = getattr(g, "_removable_cache", None)
    if cached is None:
        cached = tuple(e for e in range(g.m) if _removable_unchecked(g, e))
        g._removable_cache = cached
    return cached


def removable_doubletons(g: Multigraph) -> tuple[tuple[int, int], ...]:
    """Pairs {e, f}, neither removable alone, with G - e - f matching covered."""
    _require_mc(g)
    cached = getattr(g, "_doubleton_cache", None)
    if cached is not None:
        return cached
    removable = set(removable_edges(g))
    non_removable = [e for e in range(g.m) if e not in removable]
    out = []
    for e, f in combinations(non_removable, 2):
        if is_matching_covered(g.delete_edges([e, f])):
            out.append((e, f))
    cached = tuple(out)
    g._doubleton_cache = cached
    return cached


def removable_classes(g: Multigraph) -> tuple[RemovableClass, ...]:
    singles = tuple(Single(e) for e in removable_edges(g))
    doubletons = tuple(Doubleton(pair) for pair in removable_doubletons(g))
    return singles + doubletons


def is_bicritical(g: Multigraph) -> bool:
    """G - u - v has a perfect matching for every vertex pair; needs n >= 4."""
    if g.n < 4 or g.n % 2:
        return False
    full = g.full_mask
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.has_pm_mask(full & ~(1 << u) & ~(1 << v)):
                return False
    return True


def is_brick(g: Multigraph) -> bool:
    """3-connected and bicritical."""
    return is_bicritical(g) and vertex_connectivity(g) >= 3


def is_minimal_mc(g: Multigraph) -> bool:
    """Matching covered with no removable edge."""
    if not is_matching_covered(g):
        return False
    for e in range(g.m):
        if _removable_unchecked(g, e):
            return False
    return True


def is_near_bipartite(g: Multigraph) -> Optional[tuple[int, int]]:
    """A pair {e, f} whose removal leaves a bipartite matching covered graph.

    None when no pair works (in particular for bipartite input). Pairs are
    screened by 2-colorability before the covered test, cheapest first.
    """
    _require_mc(g)
    if g.is_bipartite():
        return None
    for e, f in combinations(range(g.m), 2):
        h = g.delete_edges([e, f])
        if h.is_bipartite() and is_matching_covered(h):
            return (e, f)
    return None


def has_two_nonadjacent_removable_edges(g: Multigraph) -> bool:
    rem = removable_edges(g)
    for e, f in combinations(rem, 2):
        a, b = g.endpoints(e)
        c, d = g.endpoints(f)
        if len({a, b, c, d}) == 4:
            return True
    return False
