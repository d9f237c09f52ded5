"""Tight cut decomposition into bricks and braces.

Splitting a matching covered graph along a nontrivial tight cut yields two
smaller matching covered graphs (the shore contractions); iterating until
no nontrivial tight cut remains produces a list of bricks (nonbipartite)
and braces (bipartite) whose multiset, up to isomorphism, does not depend
on the cuts chosen. The default policy picks the lexicographically least
tight shore; a seeded policy shuffles the choice to let callers check the
independence claim.
"""
from __future__ import annotations

import os
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Optional

from .canon import canonical_form
from .covered import is_matching_covered
from .cuts import contractions, edge_cut, is_separating, is_tight
from .errors import BoundExceededError, NotMatchingCoveredError
from .matching import perfect_matchings
from .multigraph import Multigraph, bits, mask_of

_SOLID_MAX_N = int(os.environ.get("MATCHCOV_MAX_SOLID_N", "14"))


@dataclass(frozen=True)
class DecompResult:
    components: tuple[tuple[Multigraph, str], ...]  # (graph, "brick" | "brace")
    cut_shores: tuple[frozenset[int], ...]  # shores used, in recursion order

    def tags(self) -> tuple[str, ...]:
        return tuple(tag for _, tag in self.components)


def nontrivial_tight_shores(g: Multigraph) -> tuple[frozenset[int], ...]:
    """Every tight shore X with 3 <= |X| <= n - 3, one per cut.

    Each cut {X, complement} is reported through the shore containing
    vertex 0; order is (size, sorted vertex tuple).
    """
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("tight cuts live in matching covered graphs")
    pms = perfect_matchings(g)
    found = []
    n = g.n
    for size in range(3, n - 2, 2):
        for combo in combinations(range(1, n), size - 1):
            shore = (0,) + combo
            boundary = set(edge_cut(g, shore).boundary)
            ok = True
            for pm in pms:
                if sum(1 for e in pm.edge_ids if e in boundary) != 1:
                    ok = False
                    break
            if ok:
                found.append(frozenset(shore))
    found.sort(key=lambda x: (len(x), sorted(x)))
    return tuple(found)


def find_nontrivial_tight_cut(
    g: Multigraph, rng: Optional[random.Random] = None
) -> Optional[frozenset[int]]:
    """Least nontrivial tight shore, or a seeded-random one; None if none."""
    shores = nontrivial_tight_shores(g)
    if not shores:
        return None
    if rng is None:
        return shores[0]
    return shores[rng.randrange(len(shores))]


def tight_cut_decomposition(
    g: Multigraph, seed: Optional[int] = None
) -> DecompResult:
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("decomposition is defined on matching covered graphs")
    rng = random.Random(seed) if seed is not None else None
    components: list[tuple[Multigraph, str]] = []
    shores: list[frozenset[int]] = []

    def rec(h: Multigraph) -> None:
        shore = find_nontrivial_tight_cut(h, rng)
        if shore is None:
            tag = "brace" if h.is_bipartite() else "brick"
            components.append((h, tag))
            return
        shores.append(shore)
        a, b = contractions(h, shore)
        rec(a)
        rec(b)

    rec(g)
    return DecompResult(tuple(components), tuple(shores))


def brick_count(g: Multigraph) -> int:
    return sum(1 for _, tag in tight_cut_decomposition(g).components if tag == "brick")


def is_near_brick(g: Multigraph) -> bool:
    return brick_count(g) == 1


def is_brace(g: Multigraph) -> bool:
    """Bipartite matching covered with no nontrivial tight cut."""
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("braces are matching covered")
    if not g.is_bipartite():
        return False
    return not nontrivial_tight_shores(g)


def is_solid(g: Multigraph) -> bool:
    """Every separating cut is tight."""
    if g.n > _SOLID_MAX_N:
        raise BoundExceededError(f"solidity check capped at {_SOLID_MAX_N} vertices")
    if not is_matching_covered(g):
        raise NotMatchingCoveredError("solidity is defined on matching covered graphs")
    n = g.n
    for size in range(3, n - 2, 2):
        for combo in combinations(range(1, n), size - 1):
            shore = frozenset((0,) + combo)
            if is_separating(g, shore) and not is_tight(g, shore):
                return False
    return True


def decomposition_multiset(g: Multigraph, seed: Optional[int] = None) -> tuple[bytes, ...]:
    """Sorted canonical forms of the components' underlying simple graphs.

    Parallel edges created by contraction depend on the order in which cuts
    are split, so the component list is only unique up to multiplicities;
    comparisons therefore happen on the underlying simple graphs.
    """
    result = tight_cut_decomposition(g, seed)
    return tuple(sorted(canonical_form(h.underlying_simple()) for h, _ in result.components))
