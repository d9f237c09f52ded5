"""Exhaustive graph enumeration at desk scale.

Connected simple graphs are generated by vertex augmentation: every
connected graph on k+1 vertices arises from a connected graph on k
vertices by attaching a new vertex to a nonempty subset (every connected
graph has a non-cutvertex, so connected intermediates suffice). Duplicates
are removed per level by canonical form. Multigraph sweeps lay multiplicity
vectors over simple underlying graphs.
"""
from __future__ import annotations

import os
from functools import lru_cache
from itertools import product
from typing import Iterator

from .canon import canonical_form
from .errors import BoundExceededError
from .multigraph import Multigraph

_ENUM_MAX_N = int(os.environ.get("MATCHCOV_MAX_ENUM_N", "10"))


@lru_cache(maxsize=None)
def _connected_level(n: int, min_degree: int, target_n: int) -> tuple[Multigraph, ...]:
    """Connected graphs on n vertices feeding a target_n enumeration.

    min_degree prunes augmentations that can never recover: a vertex gains
    at most one edge per future vertex, so deg(v) + (target_n - n) must
    reach min_degree already.
    """
    if n == 1:
        return (Multigraph(1, []),)
    out: dict[bytes, Multigraph] = {}
    slack = target_n - n
    for parent in _connected_level(n - 1, min_degree, target_n):
        pedges = parent.edges
        pdeg = parent.degrees
        for attach_mask in range(1, 1 << (n - 1)):
            if attach_mask.bit_count() + slack < min_degree:
                continue
            attach = [v for v in range(n - 1) if (attach_mask >> v) & 1]
            ok = True
            for v in range(n - 1):
                bonus = 1 if (attach_mask >> v) & 1 else 0
                if pdeg[v] + bonus + slack < min_degree:
                    ok = False
                    break
            if not ok:
                continue
            g = Multigraph(n, pedges + tuple((v, n - 1) for v in attach))
            key = canonical_form(g)
            if key not in out:
                out[key] = g
    return tuple(out[k] for k in sorted(out))


def enumerate_connected_graphs(n: int, min_degree: int = 0) -> Iterator[Multigraph]:
    """All connected simple graphs on n vertices with the degree floor.

    Deterministic: one representative per isomorphism class, ordered by
    canonical form.
    """
    if n > _ENUM_MAX_N:
        raise BoundExceededError(
            f"connected-graph enumeration capped at {_ENUM_MAX_N} vertices "
            f"(override via MATCHCOV_MAX_ENUM_N)"
        )
    if n < 1:
        return
    for g in _connected_level(n, min_degree, n):
        if min(g.degrees) >= min_degree:
            yield g


def multiplicity_sweep(g: Multigraph, mult_bound: int) -> Iterator[Multigraph]:
    """All multigraphs over g with per-edge multiplicity 1..mult_bound.

    Labeled sweep in lexicographic vector order, the all-ones vector first;
    isomorphic duplicates are NOT removed (verdicts downstream are
    isomorphism-invariant, and deduplication would cost more than it saves
    at desk scale).
    """
    base = g.edges
    for vec in product(range(1, mult_bound + 1), repeat=len(base)):
        edges = []
        for pair, cnt in zip(base, vec):
            edges.extend([pair] * cnt)
        yield Multigraph(g.n, tuple(edges))


def enumerate_multigraphs(
    n: int, mult_bound: int, min_degree: int = 0
) -> Iterator[Multigraph]:
    """Connected multigraphs on n vertices up to isomorphism, multiplicity
    <= mult_bound.

    Underlying simple graphs come out canonically ordered; multiplicity
    vectors in lexicographic order on top of each, deduplicated per base
    (isomorphic multigraphs always share an underlying simple graph, so a
    per-base seen set suffices).
    """
    for simple in enumerate_connected_graphs(n, min_degree=0):
        seen: set[bytes] = set()
        for g in multiplicity_sweep(simple, mult_bound):
            if min_degree and g.min_degree() < min_degree:
                continue
            key = canonical_form(g)
            if key in seen:
                continue
            seen.add(key)
            yield g


def clear_enumeration_cache() -> None:
    _connected_level.cache_clear()
