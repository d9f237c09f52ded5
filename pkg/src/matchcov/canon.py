"""Canonical forms, isomorphism, and automorphisms for multigraphs.

Canonical labeling runs iterative color refinement and then backtracks over
individualizations of the first smallest non-singleton cell, taking the
lexicographically least edge encoding over all discrete leaves. Edge
multiplicities are folded into the initial invariant, the refinement
signatures, and the leaf encoding, so two multigraphs share a canonical
form exactly when they are isomorphic as multigraphs.

The only search pruning is the twin test: if two cell members have
identical multiplicity rows, their transposition is an automorphism and
one branch is skipped. That keeps complete and near-complete graphs linear
instead of factorial without touching correctness.
"""
from __future__ import annotations

from .multigraph import Multigraph


def _initial_colors(g: Multigraph) -> tuple[int, ...]:
    keys = []
    for v in range(g.n):
        incident_mults = sorted(
            cnt for (a, b), cnt in g._mult.items() if a == v or b == v
        )
        keys.append((g.degrees[v], tuple(incident_mults)))
    order = sorted(set(keys))
    rank = {k: i for i, k in enumerate(order)}
    return tuple(rank[k] for k in keys)


def _refine(g: Multigraph, colors: tuple[int, ...]) -> tuple[int, ...]:
    n = g.n
    mult = g._mult
    adj = [sorted(g.neighbors(v)) for v in range(n)]
    while True:
        sigs = []
        for v in range(n):
            around = sorted(
                (colors[u], mult[(v, u) if v < u else (u, v)]) for u in adj[v]
            )
            sigs.append((colors[v], tuple(around)))
        order = sorted(set(sigs))
        rank = {s: i for i, s in enumerate(order)}
        new_colors = tuple(rank[s] for s in sigs)
        if len(order) == len(set(colors)):
            return new_colors
        colors = new_colors


def _individualize(colors: tuple[int, ...], v: int) -> tuple[int, ...]:
    # v gets a class of its own, placed just before the rest of its old cell.
    pairs = [(c, 1) for c in colors]
    pairs[v] = (colors[v], 0)
    order = sorted(set(pairs))
    rank = {p: i for i, p in enumerate(order)}
    return tuple(rank[p] for p in pairs)


def _encode(g: Multigraph, position: tuple[int, ...]) -> bytes:
    triples = sorted(
        (min(position[u], position[v]), max(position[u], position[v]), cnt)
        for (u, v), cnt in g._mult.items()
    )
    out = bytearray([g.n])
    for i, j, cnt in triples:
        out += bytes((i, j, min(cnt, 255)))
    return bytes(out)


def _twins(g: Multigraph, u: int, w: int) -> bool:
    mult = g._mult
    for x in range(g.n):
        if x == u or x == w:
            continue
        a = mult.get((u, x) if u < x else (x, u), 0)
        b = mult.get((w, x) if w < x else (x, w), 0)
        if a != b:
            return False
    return True


def canonical_labeling(g: Multigraph) -> tuple[tuple[int, ...], bytes]:
    """(position permutation old->new, canonical byte form)."""
    n = g.n
    if n == 0:
        return (), bytes([0])
    best: list = [None, None]

    def rec(colors: tuple[int, ...]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colors):
            cells.setdefault(c, []).append(v)
        target = None
        for c in sorted(cells):
            if len(cells[c]) > 1:
                if target is None or len(cells[c]) < len(cells[target]):
                    target = c
        if target is None:
            cand = _encode(g, colors)
            if best[1] is None or cand < best[1]:
                best[0] = colors
                best[1] = cand
            return
        reps: list[int] = []
        for v in cells[target]:
            if any(_twins(g, v, w) for w in reps):
                continue
            reps.append(v)
            rec(_refine(g, _individualize(colors, v)))

    rec(_refine(g, _initial_colors(g)))
    return best[0], best[1]


def canonical_form(g: Multigraph) -> bytes:
    cached = getattr(g, "_canon_cache", None)
    if cached is None:
        cached = canonical_labeling(g)[1]
        g._canon_cache = cached
    return cached


def is_isomorphic(g: Multigraph, h: Multigraph) -> bool:
    if g.n != h.n or g.m != h.m:
        return False
    if sorted(g.degrees) != sorted(h.degrees):
        return False
    return canonical_form(g) == canonical_form(h)


def automorphisms(g: Multigraph) -> list[tuple[int, ...]]:
    """All color-respecting adjacency-preserving vertex permutations.

    Intended for the small graphs (wheels, splice factors) where orbit
    reductions happen; the full list is materialized.
    """
    n = g.n
    if n == 0:
        return [()]
    colors = _refine(g, _initial_colors(g))
    by_color: dict[int, list[int]] = {}
    for v, c in enumerate(colors):
        by_color.setdefault(c, []).append(v)
    mult = g._mult

    out: list[tuple[int, ...]] = []
    image = [-1] * n
    used = [False] * n

    def extend(v: int) -> None:
        if v == n:
            out.append(tuple(image))
            return
        for w in by_color[colors[v]]:
            if used[w]:
                continue
            ok = True
            for u in range(v):
                a = mult.get((u, v) if u < v else (v, u), 0)
                iu, iw = image[u], w
                b = mult.get((iu, iw) if iu < iw else (iw, iu), 0)
                if a != b:
                    ok = False
                    break
            if ok:
                used[w] = True
                image[v] = w
                extend(v + 1)
                used[w] = False
                image[v] = -1

    extend(0)
    return out


def vertex_orbits(g: Multigraph) -> list[frozenset[int]]:
    parent = list(range(g.n))

    def find(a: int) -> int:
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for perm in automorphisms(g):
        for v, w in enumerate(perm):
            ra, rb = find(v), find(w)
            if ra != rb:
                parent[ra] = rb
    groups: dict[int, set[int]] = {}
    for v in range(g.n):
        groups.setdefault(find(v), set()).add(v)
    return [frozenset(s) for s in sorted(groups.values(), key=min)]
