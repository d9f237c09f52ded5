"""Wheels, splicing, the wheel-like predicate, and the recursive family of
odd-wheel splices with membership certificates.

Conventions fixed here and relied on by the test suite and the CLI:

* ``make_wheel`` puts the rim on vertices 0..k-1 (cycle edges first, in rim
  order) and the hub last, at index k; spoke i appears ``mults[i]`` times,
  grouped by rim vertex, after the rim edges.
* A splice of G at u with H at v keeps G's surviving vertices first (original
  relative order), then H's.  theta maps boundary edge ids of v in H to
  boundary edge ids of u in G; each mapped pair fuses to a single new edge.
* Certificates serialize theta as a permutation of boundary slot indices,
  slots sorted by edge id.
"""
from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Optional, Union

from .canon import canonical_form, vertex_orbits
from .covered import is_brick, is_removable_edge, removable_doubletons
from .errors import (
    BadSpecError,
    BoundExceededError,
    ConditionViolatedError,
    DegreeMismatchError,
    NotABijectionError,
    NotABrickError,
    NotOddWheelsError,
)
from .multigraph import Multigraph

_GFAMILY_MAX_N = int(os.environ.get("MATCHCOV_MAX_GFAMILY_N", "14"))


@dataclass(frozen=True)
class WheelSpec:
    """Rim length k plus per-spoke multiplicities (index i = rim vertex i)."""

    k: int
    mults: tuple[int, ...]

    def __post_init__(self):
        if self.k < 3:
            raise BadSpecError(f"rim length must be >= 3, got {self.k}")
        if len(self.mults) != self.k:
            raise BadSpecError(f"need {self.k} spoke multiplicities, got {len(self.mults)}")
        if any(m < 1 for m in self.mults):
            raise BadSpecError("spoke multiplicities must be positive")


def make_wheel(spec: WheelSpec) -> tuple[Multigraph, int]:
    """Build the wheel and return (graph, hub vertex)."""
    k = spec.k
    edges = [(i, (i + 1) % k) for i in range(k)]
    for i, m in enumerate(spec.mults):
        edges.extend([(i, k)] * m)
    return Multigraph(k + 1, edges), k


def simple_wheel(k: int) -> tuple[Multigraph, int]:
    return make_wheel(WheelSpec(k, (1,) * k))


def odd_wheel_rim(g: Multigraph, hub: int) -> Optional[tuple[int, ...]]:
    """Rim cycle order when g is an odd wheel with the given hub, else None.

    Parallel edges are allowed anywhere; only the underlying shape is tested.
    """
    n = g.n
    if not (0 <= hub < n) or n < 4 or n % 2 != 0:
        return None
    others = [w for w in range(n) if w != hub]
    if any(g.multiplicity(hub, w) == 0 for w in others):
        return None
    rim_adj = {}
    for w in others:
        nbrs = [x for x in others if x != w and g.multiplicity(w, x) > 0]
        if len(nbrs) != 2:
            return None
        rim_adj[w] = nbrs
    start = others[0]
    cycle = [start]
    prev, cur = None, start
    while True:
        step = [x for x in rim_adj[cur] if x != prev]
        nxt = step[0] if prev is not None else min(step)
        if nxt == start:
            break
        cycle.append(nxt)
        prev, cur = cur, nxt
    if len(cycle) != n - 1:
        return None
    return tuple(cycle)


def boundary_slots(g: Multigraph, v: int) -> tuple[int, ...]:
    """Edge ids incident with v, ascending; the slot order for bijections."""
    return tuple(g.incident[v])


def _validate_theta(g: Multigraph, u: int, h: Multigraph, v: int, theta: dict[int, int]) -> None:
    du, dv = g.degree(u), h.degree(v)
    if du != dv:
        raise DegreeMismatchError(f"degree {du} at u vs {dv} at v")
    dom = set(boundary_slots(h, v))
    cod = set(boundary_slots(g, u))
    if set(theta.keys()) != dom or set(theta.values()) != cod or len(set(theta.values())) != len(theta):
        raise NotABijectionError("theta must biject the boundary of v onto the boundary of u")


def splice(g: Multigraph, u: int, h: Multigraph, v: int, theta: dict[int, int]) -> Multigraph:
    """Glue g - u to h - v, fusing each boundary edge e of v with theta(e)."""
    _validate_theta(g, u, h, v, theta)

    def remap_g(w: int) -> int:
        return w if w < u else w - 1

    def remap_h(y: int) -> int:
        base = g.n - 1
        return base + (y if y < v else y - 1)

    edges = []
    for e, (a, b) in enumerate(g.edges):
        if u in (a, b):
            continue
        edges.append((remap_g(a), remap_g(b)))
    for e, (a, b) in enumerate(h.edges):
        if v in (a, b):
            continue
        edges.append((remap_h(a), remap_h(b)))
    for e in boundary_slots(h, v):
        a, b = h.endpoints(e)
        y = b if a == v else a
        f = theta[e]
        c, d = g.endpoints(f)
        x = d if c == u else c
        edges.append((remap_g(x), remap_h(y)))
    return Multigraph(g.n + h.n - 2, edges)


def max_degree_set(g: Multigraph) -> frozenset[int]:
    top = g.max_degree()
    return frozenset(v for v in range(g.n) if g.degrees[v] == top)


def is_wheel_like(g: Multigraph) -> frozenset[int]:
    """All hubs h with |R and boundary(h)| = 1 for every removable class R.

    Empty set means not wheel-like.  Scans removable edges incrementally so
    the frequent negative case (two nonadjacent removable edges) exits before
    any doubleton work.
    """
    if not is_brick(g):
        raise NotABrickError("wheel-likeness is defined for bricks")
    cands = set(range(g.n))
    for e in range(g.m):
        if is_removable_edge(g, e):
            cands &= set(g.endpoints(e))
            if not cands:
                return frozenset()
    for (e, f) in removable_doubletons(g):
        eu, ev = g.endpoints(e)
        fu, fv = g.endpoints(f)
        cands &= {eu, ev} ^ {fu, fv}
        if not cands:
            return frozenset()
    return frozenset(cands)


def hub_edges_removable(g: Multigraph, h: int) -> bool:
    return all(is_removable_edge(g, e) for e in g.incident[h])


def check_odd_wheel_splice(
    g: Multigraph,
    hub_g: int,
    u: int,
    h: Multigraph,
    hub_h: int,
    v: int,
    theta: dict[int, int],
) -> tuple[bool, tuple[str, ...]]:
    """Evaluate the three syntactic splice conditions for two odd wheels.

    Returns (all hold, violated condition ids).  Condition 1: exactly one
    splice vertex is its wheel's hub and the hub-side wheel has >= 6
    vertices.  Condition 2: all parallels sit at the hubs.  Condition 3: the
    two rim edges at the non-hub splice vertex land on distinct,
    non-adjacent rim vertices of the hub-side wheel.
    """
    rim_g = odd_wheel_rim(g, hub_g)
    rim_h = odd_wheel_rim(h, hub_h)
    if rim_g is None or rim_h is None:
        raise NotOddWheelsError("both inputs must be odd wheels with the designated hubs")
    _validate_theta(g, u, h, v, theta)

    violations = []
    u_is_hub = u == hub_g
    v_is_hub = v == hub_h
    if u_is_hub == v_is_hub:
        violations.append("1")
    else:
        hub_side = g if u_is_hub else h
        if hub_side.n < 6:
            violations.append("1")

    for graph, hub in ((g, hub_g), (h, hub_h)):
        if any(
            len(ids) > 1 and hub not in pair
            for pair, ids in graph.parallel_classes.items()
        ):
            violations.append("2")
            break

    if u_is_hub != v_is_hub:
        if u_is_hub:
            rim_graph, rim_hub, rim_v = h, hub_h, v
            hub_graph, hub_vertex = g, u
            to_hub_side = dict(theta)
        else:
            rim_graph, rim_hub, rim_v = g, hub_g, u
            hub_graph, hub_vertex = h, v
            to_hub_side = {f: e for e, f in theta.items()}
        rim_edges = [
            e
            for e in boundary_slots(rim_graph, rim_v)
            if rim_hub not in rim_graph.endpoints(e)
        ]
        ok3 = False
        if len(rim_edges) == 2:
            landing = []
            for e in rim_edges:
                f = to_hub_side[e]
                a, b = hub_graph.endpoints(f)
                landing.append(b if a == hub_vertex else a)
            x, y = landing
            ok3 = x != y and hub_graph.multiplicity(x, y) == 0
        if not ok3:
            violations.append("3")

    return (not violations, tuple(violations))


# ---------------------------------------------------------------------------
# The recursive splice family.


def is_k4_plus(g: Multigraph) -> bool:
    """Underlying K4 with all parallels on a single endpoint pair."""
    if g.n != 4:
        return False
    if any(g.multiplicity(a, b) == 0 for a in range(4) for b in range(a + 1, 4)):
        return False
    fat = [pair for pair, ids in g.parallel_classes.items() if len(ids) > 1]
    return len(fat) <= 1


def g1_hub_designations(g: Multigraph) -> frozenset[int]:
    """Hubs h making g an odd wheel with parallels only at h; empty when g is
    not a wheel-like odd wheel of that shape (the base family membership
    test)."""
    shapes = set()
    for hub in range(g.n):
        if odd_wheel_rim(g, hub) is None:
            continue
        if all(hub in pair for pair, ids in g.parallel_classes.items() if len(ids) > 1):
            shapes.add(hub)
    if not shapes:
        return frozenset()
    if not is_brick(g) or not is_wheel_like(g):
        return frozenset()
    return frozenset(shapes)


def is_g1_member(g: Multigraph) -> bool:
    return bool(g1_hub_designations(g))


def family_splice_violations(
    gj: Multigraph, u: int, hw: Multigraph, v: int, theta: dict[int, int]
) -> tuple[str, ...]:
    """Violated conditions for extending the family by splicing gj with the
    odd wheel hw.  Ids: "size" (result must have >= 8 vertices), "1", "2".

    The caller guarantees hw is a base-family member; gj is the built left
    graph.
    """
    violations = []
    if gj.n + hw.n - 2 < 8:
        violations.append("size")

    u_g = max_degree_set(gj)
    u_h = max_degree_set(hw)
    if hw.n == 4 and hw.is_simple():
        if u in u_g:
            violations.append("1")
    elif is_k4_plus(hw):
        if v not in u_h:
            violations.append("1")
    else:
        if (u in u_g) + (v in u_h) != 1:
            violations.append("1")

    if hw.n == 4 and u not in u_g:
        for e in boundary_slots(hw, v):
            if is_removable_edge(hw, e):
                continue
            a, b = gj.endpoints(theta[e])
            if a in u_g or b in u_g:
                violations.append("2")
                break

    return tuple(violations)


@dataclass(frozen=True)
class WheelLeaf:
    spec: WheelSpec


@dataclass(frozen=True)
class SpliceNode:
    left: "GCertificate"
    wheel: WheelSpec
    u: int
    v: int
    theta: tuple[int, ...]


GCertificate = Union[WheelLeaf, SpliceNode]


def _theta_from_slots(g: Multigraph, u: int, h: Multigraph, v: int, perm: tuple[int, ...]) -> dict[int, int]:
    slots_g = boundary_slots(g, u)
    slots_h = boundary_slots(h, v)
    if sorted(perm) != list(range(len(slots_h))) or len(slots_g) != len(slots_h):
        raise NotABijectionError("theta permutation does not match the boundary sizes")
    return {slots_h[i]: slots_g[perm[i]] for i in range(len(slots_h))}


def build_from_certificate(cert: GCertificate, check: bool = False) -> Multigraph:
    if check:
        ok, report = verify_certificate(cert)
        if not ok:
            raise ConditionViolatedError("; ".join(report))
    if isinstance(cert, WheelLeaf):
        return make_wheel(cert.spec)[0]
    left = build_from_certificate(cert.left)
    wheel, _hub = make_wheel(cert.wheel)
    theta = _theta_from_slots(left, cert.u, wheel, cert.v, cert.theta)
    return splice(left, cert.u, wheel, cert.v, theta)


def _verify(cert: GCertificate, path: str, report: list[str]) -> Optional[Multigraph]:
    if isinstance(cert, WheelLeaf):
        if cert.spec.k % 2 == 0:
            report.append(f"{path}: rim length must be odd")
            return None
        wheel, _hub = make_wheel(cert.spec)
        if not is_g1_member(wheel):
            report.append(f"{path}: leaf wheel is not a wheel-like odd wheel")
            return None
        return wheel

    left = _verify(cert.left, path + ".left", report)
    if cert.wheel.k % 2 == 0:
        report.append(f"{path}: spliced wheel rim length must be odd")
        return None
    wheel, _hub = make_wheel(cert.wheel)
    if not is_g1_member(wheel):
        report.append(f"{path}: spliced wheel is not a wheel-like odd wheel")
        return None
    if left is None:
        return None
    if not (0 <= cert.u < left.n and 0 <= cert.v < wheel.n):
        report.append(f"{path}: splice vertex out of range")
        return None
    try:
        theta = _theta_from_slots(left, cert.u, wheel, cert.v, cert.theta)
        _validate_theta(left, cert.u, wheel, cert.v, theta)
    except (DegreeMismatchError, NotABijectionError) as exc:
        report.append(f"{path}: {exc}")
        return None
    for cond in family_splice_violations(left, cert.u, wheel, cert.v, theta):
        if cond == "size":
            report.append(f"{path}: splice result has fewer than 8 vertices")
        else:
            report.append(f"{path}: family condition {cond} violated")
    return splice(left, cert.u, wheel, cert.v, theta)


def verify_certificate(cert: GCertificate) -> tuple[bool, tuple[str, ...]]:
    report: list[str] = []
    _verify(cert, "root", report)
    return (not report, tuple(report))


def theta_class_matrices(
    row_sums: tuple[int, ...], col_sums: tuple[int, ...]
) -> Iterator[tuple[tuple[int, ...], ...]]:
    """All nonnegative integer matrices with the given row and column sums.

    A bijection between two boundaries, taken up to swaps of parallel copies,
    is exactly such a matrix over the parallel classes on each side.
    """
    if sum(row_sums) != sum(col_sums):
        return
    cols = len(col_sums)

    def rows(r: int, caps: tuple[int, ...], acc: tuple) -> Iterator[tuple]:
        if r == len(row_sums):
            yield acc
            return
        target = row_sums[r]

        def fill(j: int, left: int, row: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
            if j == cols:
                if left == 0:
                    yield row
                return
            hi = min(left, caps[j])
            lo = max(0, left - sum(caps[j + 1 :]))
            for t in range(lo, hi + 1):
                yield from fill(j + 1, left - t, row + (t,))

        for row in fill(0, target, ()):
            new_caps = tuple(c - t for c, t in zip(caps, row))
            yield from rows(r + 1, new_caps, acc + (row,))

    yield from rows(0, tuple(col_sums), ())


def boundary_classes(g: Multigraph, v: int) -> list[list[int]]:
    """Parallel classes of the boundary of v: edge-id lists grouped by the
    other endpoint, ordered by that endpoint."""
    groups: dict[int, list[int]] = {}
    for e in boundary_slots(g, v):
        a, b = g.endpoints(e)
        other = b if a == v else a
        groups.setdefault(other, []).append(e)
    return [groups[w] for w in sorted(groups)]


def theta_from_class_matrix(
    g: Multigraph, u: int, h: Multigraph, v: int, matrix: tuple[tuple[int, ...], ...]
) -> dict[int, int]:
    """Concrete slot bijection realizing a class-assignment matrix.

    Rows index the classes at v in h, columns the classes at u in g; entry
    (i, j) says how many v-slots of class i map into class j.  Slots are
    consumed in ascending edge-id order on both sides.
    """
    h_classes = boundary_classes(h, v)
    g_classes = boundary_classes(g, u)
    taken = [0] * len(g_classes)
    theta: dict[int, int] = {}
    for i, row in enumerate(matrix):
        pos = 0
        for j, t in enumerate(row):
            for _ in range(t):
                theta[h_classes[i][pos]] = g_classes[j][taken[j]]
                pos += 1
                taken[j] += 1
    return theta


def _g1_catalog(max_n: int, k3_cap: int, cap: int) -> list[tuple[Multigraph, int, WheelSpec]]:
    """Base-family wheels up to max_n vertices: (graph, hub, spec) per
    distinct multiplicity vector up to rim rotation/reflection."""
    out = []
    k = 3
    while k + 1 <= max_n:
        top = k3_cap if k == 3 else cap
        seen = set()
        for mults in product(range(1, top + 1), repeat=k):
            orbit = []
            for s in range(k):
                rot = tuple(mults[(s + i) % k] for i in range(k))
                orbit.append(rot)
                orbit.append(rot[::-1])
            key = min(orbit)
            if key in seen:
                continue
            seen.add(key)
            spec = WheelSpec(k, key)
            wheel, hub = make_wheel(spec)
            out.append((wheel, hub, spec))
        k += 2
    return out


def g_family_closure(
    max_n: int, k3_cap: int = 3, cap: int = 2, splice_cap: Optional[int] = None
) -> dict[bytes, tuple[Multigraph, GCertificate]]:
    """Forward closure of the splice family up to max_n vertices.

    Returns canonical form -> (graph, certificate), first certificate found
    under a deterministic sweep.  Multiplicity caps bound the recorded base
    wheels (per spoke: k3_cap on 3-wheels, cap on longer rims); the family
    is infinite in the multiplicity direction, so some cap is forced.

    Wheels taking part in splice steps are catalogued separately, with
    per-spoke multiplicities up to splice_cap (default: the leaf caps).  A
    splice deletes the vertex carrying a heavy spoke, so a simple result on
    max_n vertices can factor through wheels whose multiplicities exceed
    any sensible leaf cap; splice_cap = max_n - 3 makes the closure
    complete for simple members (a surviving endpoint of a spoke of
    multiplicity m keeps degree at least m + 2).
    """
    if max_n > _GFAMILY_MAX_N:
        raise BoundExceededError(f"family closure capped at {_GFAMILY_MAX_N} vertices")
    leaves = _g1_catalog(max_n, k3_cap, cap)
    if splice_cap is None:
        sk3, sc = k3_cap, cap
    else:
        sk3 = sc = splice_cap
    # Only wheels small enough to splice inside max_n (smallest partner has
    # four vertices) belong in the splice catalog.
    base = [
        (w, h, s)
        for w, h, s in _g1_catalog(max_n, sk3, sc)
        if w.n + 4 - 2 <= max_n
    ]
    members: dict[bytes, tuple[Multigraph, GCertificate]] = {}
    for wheel, _hub, spec in leaves:
        key = canonical_form(wheel)
        if key not in members:
            members[key] = (wheel, WheelLeaf(spec))
    frontier: list[tuple[Multigraph, GCertificate]] = []
    frontier_seen: set[bytes] = set()
    for wheel, _hub, spec in base:
        key = canonical_form(wheel)
        if key not in frontier_seen:
            frontier_seen.add(key)
            frontier.append((wheel, WheelLeaf(spec)))

    while frontier:
        next_frontier: list[tuple[Multigraph, GCertificate]] = []
        for left, left_cert in frontier:
            for wheel, _hub, spec in base:
                n_out = left.n + wheel.n - 2
                if n_out < 8 or n_out > max_n:
                    continue
                u_reps = sorted({min(orbit) for orbit in _orbit_sets(left)})
                v_reps = sorted({min(orbit) for orbit in _orbit_sets(wheel)})
                for u in u_reps:
                    du = left.degree(u)
                    for v in v_reps:
                        if wheel.degree(v) != du:
                            continue
                        h_classes = boundary_classes(wheel, v)
                        g_classes = boundary_classes(left, u)
                        row_sums = tuple(len(c) for c in h_classes)
                        col_sums = tuple(len(c) for c in g_classes)
                        for matrix in theta_class_matrices(row_sums, col_sums):
                            theta = theta_from_class_matrix(left, u, wheel, v, matrix)
                            if family_splice_violations(left, u, wheel, v, theta):
                                continue
                            built = splice(left, u, wheel, v, theta)
                            key = canonical_form(built)
                            if key in members:
                                continue
                            perm = _slot_permutation(left, u, wheel, v, theta)
                            cert = SpliceNode(left_cert, spec, u, v, perm)
                            members[key] = (built, cert)
                            next_frontier.append((built, cert))
        frontier = next_frontier
    return members


def _orbit_sets(g: Multigraph) -> list[frozenset[int]]:
    return vertex_orbits(g)


def _slot_permutation(
    g: Multigraph, u: int, h: Multigraph, v: int, theta: dict[int, int]
) -> tuple[int, ...]:
    slots_g = boundary_slots(g, u)
    slots_h = boundary_slots(h, v)
    pos_g = {e: i for i, e in enumerate(slots_g)}
    return tuple(pos_g[theta[e]] for e in slots_h)


def search_G_certificate(g: Multigraph, max_n: Optional[int] = None) -> Optional[GCertificate]:
    """Certificate for membership in the splice family, by forward closure.

    Complete within the closure's vertex bound and multiplicity caps; None
    means no certificate exists inside those bounds.
    """
    if not is_brick(g):
        raise NotABrickError("certificate search expects a brick")
    bound = g.n if max_n is None else max_n
    members = g_family_closure(bound)
    hit = members.get(canonical_form(g))
    return hit[1] if hit else None


# --- certificate serialization ---------------------------------------------


def cert_to_obj(cert: GCertificate):
    if isinstance(cert, WheelLeaf):
        return {"wheel": {"k": cert.spec.k, "mults": list(cert.spec.mults)}}
    return {
        "splice": {
            "left": cert_to_obj(cert.left),
            "wheel": {"k": cert.wheel.k, "mults": list(cert.wheel.mults)},
            "u": cert.u,
            "v": cert.v,
            "theta": list(cert.theta),
        }
    }


def cert_from_obj(obj) -> GCertificate:
    if not isinstance(obj, dict) or len(obj) != 1:
        raise BadSpecError("certificate node must be a one-key object")
    if "wheel" in obj:
        w = obj["wheel"]
        return WheelLeaf(WheelSpec(int(w["k"]), tuple(int(m) for m in w["mults"])))
    if "splice" in obj:
        s = obj["splice"]
        w = s["wheel"]
        return SpliceNode(
            left=cert_from_obj(s["left"]),
            wheel=WheelSpec(int(w["k"]), tuple(int(m) for m in w["mults"])),
            u=int(s["u"]),
            v=int(s["v"]),
            theta=tuple(int(t) for t in s["theta"]),
        )
    raise BadSpecError("certificate node must be 'wheel' or 'splice'")
