"""Bipartite matching covered graphs: P-sets, removability certificates,
tightness by shore balance, and barrier contractions.

Everything here fixes the bipartition (A, B) as the two color classes with
vertex 0 in A; inputs must be connected bipartite matching covered graphs.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Optional

from .covered import is_matching_covered, removable_edges
from .errors import (
    BarrierTrivialError,
    BoundExceededError,
    NotABarrierError,
    NotBipartiteMCError,
)
from .cuts import edge_cut, is_barrier
from .multigraph import Multigraph, bits, mask_of

_PSET_MAX_N = int(os.environ.get("MATCHCOV_MAX_PSET_N", "14"))


def bipartition(g: Multigraph) -> tuple[frozenset[int], frozenset[int]]:
    """(A, B) color classes, vertex 0 in A; requires bipartite MC input."""
    if not is_matching_covered(g):
        raise NotBipartiteMCError("graph is not matching covered")
    coloring = g.two_coloring()
    if coloring is None:
        raise NotBipartiteMCError("graph is not bipartite")
    a = frozenset(v for v in range(g.n) if coloring[v] == coloring[0])
    b = frozenset(range(g.n)) - a
    return a, b


@dataclass(frozen=True)
class PSet:
    vertices: frozenset[int]
    # Which single-crossing direction holds: edges from X's A-side out, and
    # edges into X's B-side from outside. At least one is True.
    out_of_a: bool
    into_b: bool


def _crossing_counts(g: Multigraph, x: frozenset[int], a: frozenset[int]) -> tuple[int, int]:
    xm = mask_of(x)
    out_a = 0
    in_b = 0
    for (u, v) in g.edges:
        u_in, v_in = (xm >> u) & 1, (xm >> v) & 1
        if u_in == v_in:
            continue
        inside, outside = (u, v) if u_in else (v, u)
        if inside in a:
            out_a += 1
        else:
            in_b += 1
    return out_a, in_b


def is_P_set(g: Multigraph, x) -> Optional[PSet]:
    """PSet record when X is balanced with a single crossing one way."""
    a, b = bipartition(g)
    x = frozenset(x)
    if not x or len(x) >= g.n:
        return None
    if len(x & a) != len(x & b):
        return None
    out_a, in_b = _crossing_counts(g, x, a)
    if out_a == 1 or in_b == 1:
        return PSet(x, out_a == 1, in_b == 1)
    return None


def all_P_sets(g: Multigraph) -> Iterator[PSet]:
    """Stream of P-sets in (size, sorted vertices) order."""
    if g.n > _PSET_MAX_N:
        raise BoundExceededError(f"P-set enumeration capped at {_PSET_MAX_N} vertices")
    a, b = bipartition(g)
    a_sorted, b_sorted = sorted(a), sorted(b)
    found = []
    for k in range(1, min(len(a), len(b)) + 1):
        if 2 * k >= g.n:
            break
        for xa in combinations(a_sorted, k):
            for xb in combinations(b_sorted, k):
                p = is_P_set(g, xa + xb)
                if p is not None:
                    found.append(p)
    found.sort(key=lambda p: (len(p.vertices), sorted(p.vertices)))
    yield from found


def minimum_P_set(g: Multigraph) -> Optional[PSet]:
    for p in all_P_sets(g):
        return p
    return None


@dataclass(frozen=True)
class RemovabilityCertificate:
    """Witness that edge uv is non-removable: a proper matching covered
    subgraph G[A1 + B1] with u in A1, v outside B1, and uv the only edge
    from A1 to B minus B1."""

    a1: frozenset[int]
    b1: frozenset[int]


def _certificate_search(
    g: Multigraph, e: int, a: frozenset[int], b: frozenset[int]
) -> Optional[RemovabilityCertificate]:
    u, v = g.endpoints(e)
    if u in b:
        u, v = v, u
    a_rest = sorted(a)
    b_rest = sorted(b - {v})
    for ka in range(1, len(a)):
        for a1 in combinations(a_rest, ka):
            if u not in a1:
                continue
            a1set = frozenset(a1)
            # E[A1, B - B1] = {uv} forces B1 to contain every other
            # B-neighbor of A1 except v; b1 must also keep |B1| = |A1| for
            # the subgraph to be coverable, so search same-size subsets.
            for b1 in combinations(b_rest, ka):
                b1set = frozenset(b1)
                crossing = [
                    (x, y)
                    for (x, y) in g.edges
                    if (x in a1set and y in b - b1set) or (y in a1set and x in b - b1set)
                ]
                if len(crossing) != g.multiplicity(u, v):
                    continue
                if not all(set(pair) == {u, v} for pair in crossing):
                    continue
                sub = g.induced(sorted(a1set | b1set))
                if is_matching_covered(sub):
                    return RemovabilityCertificate(a1set, b1set)
    return None


def is_removable_bipartite(g: Multigraph, e: int) -> tuple[bool, Optional[RemovabilityCertificate]]:
    """(removable?, non-removability certificate when not removable).

    The direct deletion test decides removability; the certificate is found
    by subset search over same-size class pairs and is None exactly when the
    edge is removable.
    """
    a, b = bipartition(g)
    removable = is_matching_covered(g.delete_edges([e]))
    if removable:
        return True, None
    cert = _certificate_search(g, e, a, b)
    if cert is None:
        # Try the mirrored orientation: the roles of A and B are symmetric.
        cert = _certificate_search(g, e, b, a)
        if cert is not None:
            cert = RemovabilityCertificate(cert.a1, cert.b1)
    return False, cert


def is_tight_bipartite(g: Multigraph, x) -> bool:
    """Shore balance test: |X cap A| and |X cap B| differ by one and every
    boundary edge touches the majority side of X."""
    a, b = bipartition(g)
    x = frozenset(x)
    if not x or len(x) >= g.n:
        return False
    xa, xb = len(x & a), len(x & b)
    if abs(xa - xb) != 1:
        return False
    major = (x & a) if xa > xb else (x & b)
    for e in edge_cut(g, x).boundary:
        u, v = g.endpoints(e)
        inside = u if u in x else v
        if inside not in major:
            return False
    return True


@dataclass(frozen=True)
class BarrierContraction:
    graph: Multigraph
    barrier_vertices: frozenset[int]  # ids in the contracted graph
    component_map: dict[int, frozenset[int]]  # contracted id -> original vertices


def barrier_contraction(g: Multigraph, barrier) -> BarrierContraction:
    """Contract every nontrivial odd component of G - B to one vertex.

    The result is bipartite with B as one class when B is a barrier of a
    matching covered graph. Vertex order: B ascending, then trivial
    components ascending, then contracted components by least original
    vertex.
    """
    b = frozenset(barrier)
    if len(b) < 2:
        raise BarrierTrivialError("barrier contraction needs |B| >= 2")
    if not is_barrier(g, b):
        raise NotABarrierError(f"{sorted(b)} is not a barrier")
    within = g.full_mask & ~mask_of(b)
    comps = g.component_masks(within)
    if any(c.bit_count() % 2 == 0 for c in comps):
        raise NotABarrierError("even component outside the barrier")
    singles = []
    big = []
    for c in comps:
        if c.bit_count() == 1:
            singles.append(c.bit_length() - 1)
        else:
            big.append(sorted(bits(c)))
    big.sort(key=lambda vs: vs[0])
    order = sorted(b) + sorted(singles)
    remap = {v: i for i, v in enumerate(order)}
    comp_of = {}
    for idx, vs in enumerate(big):
        for v in vs:
            comp_of[v] = len(order) + idx
    total = len(order) + len(big)
    edges = []
    for (u, v) in g.edges:
        nu = remap.get(u, comp_of.get(u))
        nv = remap.get(v, comp_of.get(v))
        if nu == nv:
            continue
        edges.append((nu, nv))
    h = Multigraph(total, edges)
    if not h.is_bipartite():
        raise NotABarrierError("contraction is not bipartite; input was not a barrier of a matching covered graph")
    component_map = {remap[v]: frozenset([v]) for v in order}
    for idx, vs in enumerate(big):
        component_map[len(order) + idx] = frozenset(vs)
    return BarrierContraction(h, frozenset(remap[v] for v in sorted(b)), component_map)


def w_set(bc: BarrierContraction) -> frozenset[int]:
    """Non-barrier vertices of the contraction incident to removable edges."""
    h = bc.graph
    rem = removable_edges(h)
    out = set()
    for e in rem:
        u, v = h.endpoints(e)
        for w in (u, v):
            if w not in bc.barrier_vertices:
                out.add(w)
    return frozenset(out)
