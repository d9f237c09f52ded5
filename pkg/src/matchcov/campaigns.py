"""Exhaustive verification campaigns over small matching covered graphs.

Each campaign enumerates a bounded graph family, evaluates one structural
claim on every member, and returns a report dict with a stable field order
so that identical parameters reproduce identical bytes (wall clock aside).
An empty counterexample list means the claim survived the sweep; campaigns
never decide claims analytically when an enumeration can check them.
"""
from __future__ import annotations

import itertools
import json
import os
import random
import time
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .bipartite import RemovabilityCertificate, bipartition, is_removable_bipartite, minimum_P_set
from .canon import canonical_form
from .covered import (
    Single,
    has_two_nonadjacent_removable_edges,
    is_bicritical,
    is_brick,
    is_matching_covered,
    is_near_bipartite,
    is_removable_edge,
    removable_classes,
    removable_edges,
)
from .decomposition import decomposition_multiset, is_solid, nontrivial_tight_shores
from .errors import BoundExceededError, UnknownCampaignError
from .generate import enumerate_connected_graphs, multiplicity_sweep
from .graphio import format_mg
from .matching import matching_number
from .multigraph import Multigraph
from .wheels import (
    WheelSpec,
    boundary_classes,
    check_odd_wheel_splice,
    g_family_closure,
    is_wheel_like,
    make_wheel,
    odd_wheel_rim,
    splice,
    build_from_certificate,
    theta_class_matrices,
    theta_from_class_matrix,
    verify_certificate,
)
from .zoo import complete_graph, prism_graph

SCHEMA_VERSION = 1

# Reports embed one verdict row per graph while the population is small
# enough to read; beyond this the rows are dropped and only counted.
VERDICT_CAP = 2000

_CORPUS_MAX_N = int(os.environ.get("MATCHCOV_MAX_CORPUS_N", "10"))


# -- report plumbing ---------------------------------------------------------


def _counterexample(g: Multigraph, **fields) -> dict:
    rec: dict = {"mg": format_mg(g)}
    rec.update(fields)
    return rec


def _finish(
    campaign: str,
    parameters: dict,
    graphs_checked: int,
    counterexamples: list[dict],
    summary: dict,
    verdicts: Optional[list[dict]],
    started: float,
) -> dict:
    counterexamples = sorted(counterexamples, key=lambda r: r["mg"])
    body = dict(summary)
    body["status"] = "pass" if not counterexamples else "fail"
    report = {
        "schema": SCHEMA_VERSION,
        "campaign": campaign,
        "parameters": parameters,
        "graphs_checked": graphs_checked,
        "summary": body,
        "counterexamples": counterexamples,
    }
    if verdicts is not None:
        if len(verdicts) <= VERDICT_CAP:
            report["verdicts"] = verdicts
        else:
            report["verdicts_omitted"] = len(verdicts)
    report["wall_clock_seconds"] = round(time.monotonic() - started, 3)
    return report


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2)


# -- worker-pool plumbing ----------------------------------------------------
#
# Workers take (n, edges) payloads and rebuild the graph: Multigraph caches
# are per-instance, so nothing useful would survive pickling anyway.


def _payload(g: Multigraph) -> tuple[int, tuple]:
    return (g.n, g.edges)


def _rebuild(payload: tuple[int, tuple]) -> Multigraph:
    return Multigraph(payload[0], payload[1])


def _pmap(worker: Callable, payloads: Sequence, jobs: Optional[int]) -> list:
    payloads = list(payloads)
    jobs = jobs or 1
    if jobs > 1 and len(payloads) >= 4 * jobs:
        import multiprocessing

        ctx = multiprocessing.get_context("fork")
        chunk = max(1, len(payloads) // (8 * jobs))
        with ctx.Pool(processes=jobs) as pool:
            return pool.map(worker, payloads, chunksize=chunk)
    return [worker(p) for p in payloads]


def _stream_pmap(
    worker: Callable, payloads: Iterable, jobs: Optional[int], chunk: int = 20000
) -> Iterator[tuple]:
    """(payload, verdict) pairs in input order, bounded memory."""
    buf: list = []
    for p in payloads:
        buf.append(p)
        if len(buf) >= chunk:
            yield from zip(buf, _pmap(worker, buf, jobs))
            buf = []
    if buf:
        yield from zip(buf, _pmap(worker, buf, jobs))


# -- shared populations ------------------------------------------------------


def _simple_bricks(max_n: int) -> Iterator[Multigraph]:
    # Bricks are 3-connected, so the degree floor loses nothing.
    for n in range(4, max_n + 1, 2):
        for g in enumerate_connected_graphs(n, min_degree=3):
            if is_brick(g):
                yield g


def _bipartite_mc_simple(n: int) -> Iterator[Multigraph]:
    # A degree-1 vertex forces every perfect matching through its one edge,
    # so its neighbour could carry no other covered edge; with n >= 4 that
    # kills matching coverage, hence the floor of 2.
    for g in enumerate_connected_graphs(n, min_degree=2 if n >= 4 else 1):
        if g.is_bipartite() and is_matching_covered(g):
            yield g


def _first_removable(g: Multigraph) -> Optional[int]:
    # Parallel copies are removable in any matching covered graph on >= 4
    # vertices, so trying them first makes the common refutation cheap.
    order = sorted(range(g.m), key=lambda e: (g.multiplicity(*g.endpoints(e)) == 1, e))
    for e in order:
        if is_removable_edge(g, e):
            return e
    return None


def _canon_hex(g: Multigraph) -> str:
    return canonical_form(g).hex()


# =============================================================================
# thm-1.1: every simple brick has at least max-degree many removable classes,
# and (K4 and the prism aside) at least max-degree - 2 removable edges.
# =============================================================================


def _thm11_worker(payload):
    g = _rebuild(payload)
    classes = removable_classes(g)
    singles = sum(1 for c in classes if isinstance(c, Single))
    return (len(classes), singles, g.max_degree())


def run_thm_1_1(max_n: int = 8, jobs: int = 1) -> dict:
    started = time.monotonic()
    bricks = list(_simple_bricks(max_n))
    exempt = {canonical_form(complete_graph(4)), canonical_form(prism_graph())}
    results = _pmap(_thm11_worker, [_payload(g) for g in bricks], jobs)

    counterexamples: list[dict] = []
    verdicts: list[dict] = []
    by_n: dict[int, int] = {}
    exempt_seen = 0
    for g, (n_classes, n_singles, delta) in zip(bricks, results):
        by_n[g.n] = by_n.get(g.n, 0) + 1
        is_exempt = canonical_form(g) in exempt
        exempt_seen += is_exempt
        ok_classes = n_classes >= delta
        ok_edges = is_exempt or n_singles >= delta - 2
        verdicts.append(
            {
                "canon": _canon_hex(g),
                "n": g.n,
                "delta": delta,
                "classes": n_classes,
                "singles": n_singles,
            }
        )
        if not (ok_classes and ok_edges):
            counterexamples.append(
                _counterexample(
                    g,
                    delta=delta,
                    classes=n_classes,
                    singles=n_singles,
                    failed="classes" if not ok_classes else "edges",
                )
            )
    summary = {
        "bricks_by_n": {str(k): by_n[k] for k in sorted(by_n)},
        "exempt_from_edge_count": exempt_seen,
    }
    return _finish(
        "thm-1.1",
        {"max_n": max_n, "population": "simple bricks"},
        len(bricks),
        counterexamples,
        summary,
        verdicts,
        started,
    )


# =============================================================================
# thm-1.4: a minimal matching covered graph on >= 4 vertices has minimum
# degree 2 or 3.  Simple graphs to max_n, multigraphs to mult_n.
# =============================================================================


def _thm14_worker(payload):
    g = _rebuild(payload)
    if not is_matching_covered(g):
        return None
    if _first_removable(g) is not None:
        return ("reducible",)
    return ("minimal", g.min_degree())


def _thm14_population(max_n: int, mult_n: int, mult_bound: int) -> Iterator[tuple[int, tuple]]:
    # The claim concerns graphs on at least four vertices (K2 is matching
    # covered and minimal but has minimum degree 1), and matching covered
    # graphs on >= 4 vertices have no degree-1 vertex.
    for n in range(4, max_n + 1, 2):
        for g in enumerate_connected_graphs(n, min_degree=2):
            yield _payload(g)
    for n in range(4, mult_n + 1, 2):
        # Multiplicities never add neighbours, and a vertex with a single
        # neighbour pins every perfect matching to that pair, so bases with
        # a degree-1 vertex cannot sweep to anything matching covered.
        for base in enumerate_connected_graphs(n, min_degree=2):
            for g in multiplicity_sweep(base, mult_bound):
                if g.is_simple():
                    continue  # simple sweep member already covered above
                yield _payload(g)


def run_thm_1_4(max_n: int = 8, mult_n: int = 6, mult_bound: int = 2, jobs: int = 1) -> dict:
    started = time.monotonic()
    counterexamples: list[dict] = []
    minimal_found: list[dict] = []
    checked = 0
    mc_count = 0
    for payload, verdict in _stream_pmap(
        _thm14_worker, _thm14_population(max_n, mult_n, mult_bound), jobs
    ):
        checked += 1
        if verdict is None:
            continue
        mc_count += 1
        if verdict[0] != "minimal":
            continue
        g = _rebuild(payload)
        delta = verdict[1]
        minimal_found.append({"canon": _canon_hex(g), "n": g.n, "m": g.m, "delta": delta})
        if delta not in (2, 3):
            counterexamples.append(_counterexample(g, delta=delta))
    minimal_found.sort(key=lambda r: (r["n"], r["canon"]))
    summary = {
        "matching_covered": mc_count,
        "minimal": len(minimal_found),
        "minimal_examples": minimal_found,
    }
    return _finish(
        "thm-1.4",
        {"max_n": max_n, "mult_n": mult_n, "mult_bound": mult_bound, "min_n": 4},
        checked,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# thm-1.3: every wheel-like brick in the desk-scale populations admits a
# family certificate found by forward closure.
# =============================================================================


def _wheel_like_population(max_n: int, mult_n: int, mult_bound: int) -> Iterator[Multigraph]:
    for g in _simple_bricks(max_n):
        if is_wheel_like(g):
            yield g
    seen: set[bytes] = set()
    for n in range(4, mult_n + 1, 2):
        for base in enumerate_connected_graphs(n, min_degree=3):
            if not is_brick(base):
                continue
            for g in multiplicity_sweep(base, mult_bound):
                if g.is_simple():
                    continue
                key = canonical_form(g)
                if key in seen:
                    continue
                seen.add(key)
                if is_wheel_like(g):
                    yield g


def run_thm_1_3(max_n: int = 8, mult_n: int = 6, mult_bound: int = 2, jobs: int = 1) -> dict:
    started = time.monotonic()
    graphs = list(_wheel_like_population(max_n, mult_n, mult_bound))
    bound = max([g.n for g in graphs], default=4)
    # Leaf caps cover the multigraph slice; the splice catalog needs spokes
    # up to bound - 3, since a splice deletes the vertex carrying a heavy
    # spoke and the surviving endpoint keeps degree m + 2 <= bound - 1.
    splice_cap = max(mult_bound, bound - 3)
    closure = g_family_closure(
        bound,
        k3_cap=max(3, mult_bound),
        cap=max(2, mult_bound),
        splice_cap=splice_cap,
    )

    counterexamples: list[dict] = []
    verdicts: list[dict] = []
    for g in graphs:
        key = canonical_form(g)
        entry = closure.get(key)
        if entry is None:
            counterexamples.append(_counterexample(g, failed="no certificate in closure"))
            continue
        _, cert = entry
        ok, problems = verify_certificate(cert)
        if not ok:
            counterexamples.append(_counterexample(g, failed="certificate rejected", detail=list(problems)))
            continue
        built = build_from_certificate(cert)
        if canonical_form(built) != key:
            counterexamples.append(_counterexample(g, failed="certificate builds a different graph"))
            continue
        verdicts.append({"canon": key.hex(), "n": g.n, "m": g.m, "certified": True})
    summary = {
        "wheel_like_bricks": len(graphs),
        "closure_size": len(closure),
        "closure_bound": bound,
        "splice_cap": splice_cap,
    }
    return _finish(
        "thm-1.3",
        {"max_n": max_n, "mult_n": mult_n, "mult_bound": mult_bound},
        len(graphs),
        counterexamples,
        summary,
        verdicts,
        started,
    )


# =============================================================================
# lemma-2.16: in a bipartite matching covered graph an edge is non-removable
# exactly when a same-size pair (A1, B1) isolates it as the only crossing
# into the B-remainder with G[A1 + B1] matching covered.
# =============================================================================


def _certificate_holds(g: Multigraph, e: int, cert: RemovabilityCertificate) -> bool:
    """Re-derive the certificate conditions from scratch."""
    u, v = g.endpoints(e)
    a1, b1 = cert.a1, cert.b1
    if v in a1:
        u, v = v, u
    if u not in a1 or v in b1 or v in a1 or u in b1:
        return False
    if len(a1) != len(b1) or not b1:
        return False
    a, b = bipartition(g)
    if u in b:
        a, b = b, a
    if not (a1 <= a and b1 <= b):
        return False
    rest = b - b1
    crossing = [
        ee
        for ee in range(g.m)
        for (x, y) in [g.endpoints(ee)]
        if (x in a1 and y in rest) or (y in a1 and x in rest)
    ]
    if len(crossing) != g.multiplicity(u, v):
        return False
    if not all(set(g.endpoints(ee)) == {u, v} for ee in crossing):
        return False
    return is_matching_covered(g.induced(sorted(a1 | b1)))


def _sample_bipartite_mc(n: int, samples: int, seed: int) -> list[Multigraph]:
    rng = random.Random(seed)
    half = n // 2
    probs = (0.35, 0.45, 0.55, 0.65)
    found: dict[bytes, Multigraph] = {}
    attempts = 0
    cap = max(1, samples) * 400
    while len(found) < samples and attempts < cap:
        p = probs[attempts % len(probs)]
        attempts += 1
        edges = tuple(
            (x, half + y) for x in range(half) for y in range(half) if rng.random() < p
        )
        g = Multigraph(n, edges)
        if not g.is_connected() or not is_matching_covered(g):
            continue
        found.setdefault(canonical_form(g), g)
    return list(found.values())


def _lemma216_check(g: Multigraph, counterexamples: list[dict]) -> tuple[int, int]:
    """Returns (edges tested, certificates seen)."""
    certs = 0
    for e in range(g.m):
        removable, cert = is_removable_bipartite(g, e)
        if removable and cert is not None:
            counterexamples.append(
                _counterexample(g, edge=list(g.endpoints(e)), failed="certificate for removable edge")
            )
        elif not removable:
            if cert is None:
                counterexamples.append(
                    _counterexample(g, edge=list(g.endpoints(e)), failed="no certificate found")
                )
            elif not _certificate_holds(g, e, cert):
                counterexamples.append(
                    _counterexample(
                        g,
                        edge=list(g.endpoints(e)),
                        failed="certificate does not satisfy the conditions",
                        a1=sorted(cert.a1),
                        b1=sorted(cert.b1),
                    )
                )
            else:
                certs += 1
    return g.m, certs


def run_lemma_2_16(
    max_n: int = 8,
    sample_n: int = 10,
    samples: int = 200,
    seed: int = 0,
    mult_n: int = 6,
    mult_bound: int = 2,
    jobs: int = 1,
) -> dict:
    started = time.monotonic()
    counterexamples: list[dict] = []
    checked = 0
    edges_tested = 0
    certs_validated = 0

    populations: list[tuple[str, Iterable[Multigraph]]] = []
    for n in range(4, max_n + 1, 2):
        populations.append((f"exhaustive n={n}", _bipartite_mc_simple(n)))

    def _multi_slice() -> Iterator[Multigraph]:
        seen: set[bytes] = set()
        for n in range(2, mult_n + 1, 2):
            floor = 1 if n == 2 else 2
            for base in enumerate_connected_graphs(n, min_degree=floor):
                if not base.is_bipartite():
                    continue
                for g in multiplicity_sweep(base, mult_bound):
                    if g.is_simple() and g.n >= 4:
                        continue
                    if g.m < 2 or not is_matching_covered(g):
                        continue
                    key = canonical_form(g)
                    if key not in seen:
                        seen.add(key)
                        yield g

    populations.append((f"multigraphs n<={mult_n}", _multi_slice()))
    sampled = _sample_bipartite_mc(sample_n, samples, seed)
    populations.append((f"sampled n={sample_n}", sampled))

    slice_counts: dict[str, int] = {}
    for name, graphs in populations:
        count = 0
        for g in graphs:
            count += 1
            checked += 1
            m, certs = _lemma216_check(g, counterexamples)
            edges_tested += m
            certs_validated += certs
        slice_counts[name] = count

    summary = {
        "slices": slice_counts,
        "edges_tested": edges_tested,
        "certificates_validated": certs_validated,
        "sampled_graphs": len(sampled),
    }
    return _finish(
        "lemma-2.16",
        {
            "max_n": max_n,
            "sample_n": sample_n,
            "samples": samples,
            "seed": seed,
            "mult_n": mult_n,
            "mult_bound": mult_bound,
        },
        checked,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# lemma-2.17: bipartite matching covered, minimum degree >= 3: every edge
# inside a minimum P-set's induced subgraph is removable.
# =============================================================================


def _lemma217_population(max_n: int, mult_n: int, mult_bound: int) -> Iterator[Multigraph]:
    for n in range(4, max_n + 1, 2):
        for g in enumerate_connected_graphs(n, min_degree=3):
            if g.is_bipartite() and is_matching_covered(g):
                yield g
    seen: set[bytes] = set()
    for n in range(4, mult_n + 1, 2):
        for base in enumerate_connected_graphs(n, min_degree=2):
            if not base.is_bipartite():
                continue
            for g in multiplicity_sweep(base, mult_bound):
                if g.is_simple() or g.min_degree() < 3:
                    continue
                if not is_matching_covered(g):
                    continue
                key = canonical_form(g)
                if key not in seen:
                    seen.add(key)
                    yield g


def run_lemma_2_17(max_n: int = 8, mult_n: int = 6, mult_bound: int = 2, jobs: int = 1) -> dict:
    started = time.monotonic()
    counterexamples: list[dict] = []
    checked = 0
    with_pset = 0
    inside_edges = 0
    for g in _lemma217_population(max_n, mult_n, mult_bound):
        checked += 1
        pset = minimum_P_set(g)
        if pset is None:
            continue
        with_pset += 1
        x = pset.vertices
        for e in range(g.m):
            u, v = g.endpoints(e)
            if u in x and v in x:
                inside_edges += 1
                if not is_removable_edge(g, e):
                    counterexamples.append(
                        _counterexample(
                            g, edge=[u, v], p_set=sorted(x), failed="induced edge not removable"
                        )
                    )
    summary = {
        "with_p_set": with_pset,
        "without_p_set": checked - with_pset,
        "induced_edges_tested": inside_edges,
    }
    return _finish(
        "lemma-2.17",
        {"max_n": max_n, "mult_n": mult_n, "mult_bound": mult_bound, "min_degree": 3},
        checked,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# lemma-2.18: bipartite matching covered with one side all of degree >= 3:
# either two nonadjacent removable edges exist, or some degree-2 vertex in
# the other side coexists with a vertex of degree >= 4 all of whose edges
# are removable.
# =============================================================================


def _lemma218_fallback(g: Multigraph, b_side: frozenset[int]) -> bool:
    rem = set(removable_edges(g))
    if not any(g.degree(v) == 2 for v in b_side):
        return False
    for u in range(g.n):
        if g.degree(u) >= 4 and all(e in rem for e in g.incident[u]):
            return True
    return False


def run_lemma_2_18(max_n: int = 8, mult_n: int = 6, mult_bound: int = 2, jobs: int = 1) -> dict:
    started = time.monotonic()
    counterexamples: list[dict] = []
    checked = 0
    orientations = 0
    via_pair = 0
    via_fallback = 0

    def graphs() -> Iterator[Multigraph]:
        for n in range(4, max_n + 1, 2):
            yield from _bipartite_mc_simple(n)
        seen: set[bytes] = set()
        for n in range(4, mult_n + 1, 2):
            for base in enumerate_connected_graphs(n, min_degree=2):
                if not base.is_bipartite():
                    continue
                for g in multiplicity_sweep(base, mult_bound):
                    if g.is_simple():
                        continue
                    if not is_matching_covered(g):
                        continue
                    key = canonical_form(g)
                    if key not in seen:
                        seen.add(key)
                        yield g

    for g in graphs():
        checked += 1
        a, b = bipartition(g)
        pair = None
        for a_side, b_side in ((a, b), (b, a)):
            if not all(g.degree(x) >= 3 for x in a_side):
                continue
            orientations += 1
            if pair is None:
                pair = has_two_nonadjacent_removable_edges(g)
            if pair:
                via_pair += 1
                continue
            if _lemma218_fallback(g, b_side):
                via_fallback += 1
                continue
            counterexamples.append(
                _counterexample(g, a_side=sorted(a_side), failed="no pair and no fallback pattern")
            )
    summary = {
        "orientations_tested": orientations,
        "satisfied_by_pair": via_pair,
        "satisfied_by_fallback": via_fallback,
    }
    return _finish(
        "lemma-2.18",
        {"max_n": max_n, "mult_n": mult_n, "mult_bound": mult_bound},
        checked,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# lemma-3.6: a brick on six vertices is wheel-like exactly when its
# underlying simple graph is the 5-wheel and all parallels sit at the hub.
# =============================================================================


def _w5_with_hub_parallels(g: Multigraph) -> bool:
    simple = g.underlying_simple()
    hubs = [v for v in range(g.n) if simple.degree(v) == g.n - 1]
    if len(hubs) != 1:
        return False
    h = hubs[0]
    if odd_wheel_rim(simple, h) is None:
        return False
    return all(
        h in pair for pair, cls in g.parallel_classes.items() if len(cls) > 1
    )


def _lemma36_canon_worker(payload):
    return canonical_form(_rebuild(payload))


def _lemma36_verdict_worker(payload):
    g = _rebuild(payload)
    if not is_brick(g):
        return None
    return (bool(is_wheel_like(g)), _w5_with_hub_parallels(g))


def run_lemma_3_6(mult_bound: int = 2, jobs: int = 1) -> dict:
    started = time.monotonic()
    bases = [g for g in enumerate_connected_graphs(6, min_degree=3) if is_brick(g)]
    raw = 0
    unique: dict[bytes, tuple[int, tuple]] = {}
    for base in bases:
        batch = []
        for g in multiplicity_sweep(base, mult_bound):
            raw += 1
            batch.append(_payload(g))
        for payload, key in zip(batch, _pmap(_lemma36_canon_worker, batch, jobs)):
            unique.setdefault(key, payload)

    payloads = [unique[k] for k in sorted(unique)]
    results = _pmap(_lemma36_verdict_worker, payloads, jobs)

    counterexamples: list[dict] = []
    wheel_like_count = 0
    non_bricks = 0
    for payload, verdict in zip(payloads, results):
        if verdict is None:
            non_bricks += 1
            continue
        wl, rhs = verdict
        wheel_like_count += wl
        if wl != rhs:
            g = _rebuild(payload)
            counterexamples.append(
                _counterexample(g, wheel_like=wl, w5_hub_parallels=rhs, failed="equivalence")
            )
    summary = {
        "simple_brick_bases": len(bases),
        "labelled_sweep": raw,
        "distinct_multigraphs": len(payloads),
        "non_bricks": non_bricks,
        "wheel_like": wheel_like_count,
    }
    return _finish(
        "lemma-3.6",
        {"n": 6, "mult_bound": mult_bound},
        len(payloads),
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# lemma-3.9: a splice of two odd wheels that is a brick is wheel-like exactly
# when the three splice conditions hold.  The theta space is quotiented by
# parallel-copy swaps (class matrices) and by the wheel symmetries fixing
# the splice vertices; a canonical-form cache collapses isomorphic results.
# =============================================================================


def _wheel_bracelets(k: int, mult_bound: int, doubles: int) -> list[tuple[int, ...]]:
    """Hub multiplicity vectors up to rotation and reflection."""
    out = set()
    for vec in itertools.product(range(1, mult_bound + 1), repeat=k):
        if sum(1 for x in vec if x > 1) > doubles:
            continue
        forms = []
        for r in range(k):
            rot = vec[r:] + vec[:r]
            forms.append(rot)
            forms.append(rot[::-1])
        out.add(min(forms))
    return sorted(out)


def _vector_stabilizer(k: int, vec: tuple[int, ...]) -> list[tuple[int, ...]]:
    """Dihedral rim maps sigma (as tuples: i -> sigma[i]) with vec[sigma[i]] == vec[i]."""
    maps = []
    for r in range(k):
        for flip in (False, True):
            if flip:
                sigma = tuple((r - i) % k for i in range(k))
            else:
                sigma = tuple((r + i) % k for i in range(k))
            if all(vec[sigma[i]] == vec[i] for i in range(k)):
                maps.append(sigma)
    return maps


def _class_actions(k: int, vec: tuple[int, ...], vertex: int) -> list[tuple[int, ...]]:
    """Permutations induced on the boundary classes at `vertex` by the wheel
    symmetries fixing it.  Classes are keyed by the other endpoint in
    ascending order, matching boundary_classes."""
    hub = k
    if vertex == hub:
        keys = list(range(k))
    else:
        keys = sorted({(vertex - 1) % k, (vertex + 1) % k, hub})
    index = {w: i for i, w in enumerate(keys)}
    actions = []
    for sigma in _vector_stabilizer(k, vec):
        if vertex != hub and sigma[vertex] != vertex:
            continue
        ext = {w: (sigma[w] if w < k else hub) for w in keys}
        actions.append(tuple(index[ext[w]] for w in keys))
    seen = sorted(set(actions))
    return seen


def _transformed_matrix(matrix, rperm, cperm, transpose):
    src = tuple(zip(*matrix)) if transpose else matrix
    r = len(src)
    c = len(src[0])
    out = [[0] * c for _ in range(r)]
    for i in range(r):
        row = src[i]
        orow = out[rperm[i]]
        for j in range(c):
            orow[cperm[j]] = row[j]
    return tuple(tuple(row) for row in out)


def _orbit_minimal(matrix, transforms) -> bool:
    for rperm, cperm, transpose in transforms:
        if _transformed_matrix(matrix, rperm, cperm, transpose) < matrix:
            return False
    return True


def _rim_position_reps(k: int, vec: tuple[int, ...]) -> list[int]:
    stab = _vector_stabilizer(k, vec)
    seen: set[int] = set()
    reps = []
    for p in range(k):
        if p in seen:
            continue
        orbit = {sigma[p] for sigma in stab}
        seen |= orbit
        reps.append(min(orbit))
    return reps


def run_lemma_3_9(
    wheels: tuple[int, ...] = (3, 5, 7),
    mult_bound: int = 2,
    doubles: int = 2,
    jobs: int = 1,
) -> dict:
    started = time.monotonic()
    for k in wheels:
        if k < 3 or k % 2 == 0:
            raise ValueError(f"odd wheel rim length expected, got {k}")

    # Splice-site catalogue: (k, vec, vertex, degree at the vertex).
    sites: list[tuple[int, tuple[int, ...], int]] = []
    for k in sorted(wheels):
        for vec in _wheel_bracelets(k, mult_bound, doubles):
            sites.append((k, vec, k))  # the hub
            for p in _rim_position_reps(k, vec):
                sites.append((k, vec, p))

    def site_degree(site) -> int:
        k, vec, vertex = site
        return sum(vec) if vertex == k else 2 + vec[vertex]

    counterexamples: list[dict] = []
    cache: dict[bytes, tuple[bool, Optional[bool]]] = {}
    matrices_total = 0
    reps_total = 0
    bricks = 0
    non_bricks = 0
    wheel_like_count = 0
    conditions_true = 0
    tasks = 0

    for i, sg in enumerate(sites):
        for sh in sites[i:]:
            if site_degree(sg) != site_degree(sh):
                continue
            tasks += 1
            kg, vg, u = sg
            kh, vh, v = sh
            gw, hub_g = make_wheel(WheelSpec(kg, vg))
            hw, hub_h = make_wheel(WheelSpec(kh, vh))
            col_sums = tuple(len(c) for c in boundary_classes(gw, u))
            row_sums = tuple(len(c) for c in boundary_classes(hw, v))
            g_actions = _class_actions(kg, vg, u)
            h_actions = _class_actions(kh, vh, v)
            transforms = [
                (rp, cp, False) for rp in h_actions for cp in g_actions
            ]
            if sg == sh:
                transforms += [(rp, cp, True) for rp in h_actions for cp in g_actions]
            for matrix in theta_class_matrices(row_sums, col_sums):
                matrices_total += 1
                if not _orbit_minimal(matrix, transforms):
                    continue
                reps_total += 1
                theta = theta_from_class_matrix(gw, u, hw, v, matrix)
                result = splice(gw, u, hw, v, theta)
                conds_ok, violations = check_odd_wheel_splice(
                    gw, hub_g, u, hw, hub_h, v, theta
                )
                key = canonical_form(result)
                verdict = cache.get(key)
                if verdict is None:
                    brick = is_brick(result)
                    wl = bool(is_wheel_like(result)) if brick else None
                    verdict = (brick, wl)
                    cache[key] = verdict
                brick, wl = verdict
                if not brick:
                    non_bricks += 1
                    continue
                bricks += 1
                wheel_like_count += bool(wl)
                conditions_true += conds_ok
                if wl != conds_ok:
                    counterexamples.append(
                        _counterexample(
                            result,
                            left={"k": kg, "mults": list(vg), "vertex": u},
                            right={"k": kh, "mults": list(vh), "vertex": v},
                            matrix=[list(r) for r in matrix],
                            wheel_like=bool(wl),
                            conditions=bool(conds_ok),
                            violations=list(violations),
                        )
                    )
    summary = {
        "splice_sites": len(sites),
        "tasks": tasks,
        "theta_matrices": matrices_total,
        "orbit_representatives": reps_total,
        "brick_results": bricks,
        "non_brick_results": non_bricks,
        "wheel_like": wheel_like_count,
        "conditions_true": conditions_true,
        "distinct_results": len(cache),
    }
    return _finish(
        "lemma-3.9",
        {
            "wheels": sorted(wheels),
            "mult_bound": mult_bound,
            "doubles": doubles,
        },
        reps_total,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# prop-3.13: a bicritical graph with no removable edge has at least four
# vertices of degree three.
# =============================================================================


def _prop313_worker(payload):
    g = _rebuild(payload)
    if not is_bicritical(g):
        return None
    if _first_removable(g) is not None:
        return ("reducible",)
    deg3 = sum(1 for v in range(g.n) if g.degree(v) == 3)
    return ("irreducible", deg3)


def run_prop_3_13(max_n: int = 8, jobs: int = 1) -> dict:
    started = time.monotonic()
    counterexamples: list[dict] = []
    checked = 0
    bicritical_count = 0
    irreducible: list[dict] = []

    def payloads():
        # Bicritical graphs on >= 4 vertices have minimum degree 3: deleting
        # the two neighbours of a degree-2 vertex strands it.
        for n in range(4, max_n + 1, 2):
            for g in enumerate_connected_graphs(n, min_degree=3):
                yield _payload(g)

    for payload, verdict in _stream_pmap(_prop313_worker, payloads(), jobs):
        checked += 1
        if verdict is None:
            continue
        bicritical_count += 1
        if verdict[0] != "irreducible":
            continue
        g = _rebuild(payload)
        deg3 = verdict[1]
        irreducible.append({"canon": _canon_hex(g), "n": g.n, "degree_three": deg3})
        if deg3 < 4:
            counterexamples.append(_counterexample(g, degree_three=deg3))
    irreducible.sort(key=lambda r: (r["n"], r["canon"]))
    summary = {
        "bicritical": bicritical_count,
        "without_removable_edge": len(irreducible),
        "examples": irreducible,
    }
    return _finish(
        "prop-3.13",
        {"max_n": max_n, "population": "connected simple, min degree 3"},
        checked,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# decomp-unique: the multiset of bricks and braces is independent of the
# order in which nontrivial tight cuts are split.
# =============================================================================


def _decomp_worker(payload):
    (n, edges), seeds = payload
    g = Multigraph(n, edges)
    if not is_matching_covered(g):
        return None
    if not nontrivial_tight_shores(g):
        return ("trivial",)
    baseline = decomposition_multiset(g, seed=0)
    for s in range(1, seeds):
        other = decomposition_multiset(g, seed=s)
        if other != baseline:
            return ("mismatch", s, [x.hex() for x in baseline], [x.hex() for x in other])
    return ("stable", len(baseline))


def run_decomp_unique(max_n: int = 8, seeds: int = 20, jobs: int = 1) -> dict:
    started = time.monotonic()
    counterexamples: list[dict] = []
    checked = 0
    with_cut = 0
    mc_count = 0

    def payloads():
        for n in range(6, max_n + 1, 2):
            for g in enumerate_connected_graphs(n, min_degree=2):
                yield (_payload(g), seeds)

    for payload, verdict in _stream_pmap(_decomp_worker, payloads(), jobs, chunk=4000):
        checked += 1
        if verdict is None:
            continue
        mc_count += 1
        if verdict[0] == "trivial":
            continue
        with_cut += 1
        if verdict[0] == "mismatch":
            g = Multigraph(*payload[0])
            counterexamples.append(
                _counterexample(
                    g, seed=verdict[1], baseline=verdict[2], other=verdict[3]
                )
            )
    summary = {
        "matching_covered": mc_count,
        "with_nontrivial_tight_cut": with_cut,
        "seeds_per_graph": seeds,
    }
    return _finish(
        "decomp-unique",
        {"max_n": max_n, "seeds": seeds, "population": "connected simple"},
        checked,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# figure searches
# =============================================================================


def _fig_r8_worker(payload):
    g = _rebuild(payload)
    if has_two_nonadjacent_removable_edges(g):
        return False
    return is_near_bipartite(g) is not None


def run_fig_r8(jobs: int = 1) -> dict:
    """The unique 8-vertex simple near-bipartite brick without two
    nonadjacent removable edges."""
    started = time.monotonic()
    bricks = [g for n in (8,) for g in enumerate_connected_graphs(n, min_degree=3) if is_brick(g)]
    flags = _pmap(_fig_r8_worker, [_payload(g) for g in bricks], jobs)
    candidates = [g for g, f in zip(bricks, flags) if f]
    counterexamples: list[dict] = []
    if len(candidates) != 1:
        for g in candidates:
            counterexamples.append(_counterexample(g, failed="candidate count != 1"))
        if not candidates:
            counterexamples.append({"mg": "", "failed": "no candidate found"})
    summary = {
        "bricks_n8": len(bricks),
        "candidates": len(candidates),
        "candidate_canon": sorted(_canon_hex(g) for g in candidates),
        "candidate_mg": sorted(format_mg(g) for g in candidates),
    }
    return _finish(
        "fig-r8",
        {"n": 8, "population": "simple bricks"},
        len(bricks),
        counterexamples,
        summary,
        None,
        started,
    )


def _has_robust_cut(g: Multigraph) -> bool:
    from .cuts import is_robust

    half = list(range(1, g.n))
    for size in range(3, g.n - 2, 2):
        for rest in itertools.combinations(half, size - 1):
            # Anchoring vertex 0 walks each complementary pair once.
            if is_robust(g, (0,) + rest):
                return True
            comp = frozenset(range(g.n)) - {0} - set(rest)
            if is_robust(g, comp):
                return True
    return False


def run_fig_nonsolid_6(jobs: int = 1) -> dict:
    """Simple six-vertex nonsolid bricks other than the prism: none is
    wheel-like, and each carries a robust cut."""
    started = time.monotonic()
    prism_key = canonical_form(prism_graph())
    counterexamples: list[dict] = []
    candidates: list[dict] = []
    bricks = 0
    for g in enumerate_connected_graphs(6, min_degree=3):
        if not is_brick(g):
            continue
        bricks += 1
        if canonical_form(g) == prism_key or is_solid(g):
            continue
        wl = bool(is_wheel_like(g))
        robust = _has_robust_cut(g)
        candidates.append(
            {"canon": _canon_hex(g), "m": g.m, "robust_cut": robust, "mg": format_mg(g)}
        )
        if wl:
            counterexamples.append(_counterexample(g, failed="nonsolid candidate is wheel-like"))
        if not robust:
            counterexamples.append(_counterexample(g, failed="nonsolid brick without a robust cut"))
    if not candidates:
        counterexamples.append({"mg": "", "failed": "no nonsolid candidate found"})
    candidates.sort(key=lambda r: (r["m"], r["canon"]))
    summary = {
        "six_vertex_bricks": bricks,
        "candidates": len(candidates),
        "candidate_list": candidates,
    }
    return _finish(
        "fig-nonsolid-6",
        {"n": 6, "population": "simple bricks", "excluded": "prism"},
        bricks,
        counterexamples,
        summary,
        None,
        started,
    )


def run_fig_g3(max_n: int = 10, jobs: int = 1) -> dict:
    """A third-generation family member that is a brick but not wheel-like."""
    started = time.monotonic()
    closure = g_family_closure(max_n)

    def depth(cert) -> int:
        d = 1
        node = cert
        while hasattr(node, "left"):
            d += 1
            node = node.left
        return d

    candidates: list[dict] = []
    gen3 = 0
    for key in sorted(closure):
        g, cert = closure[key]
        if depth(cert) != 3:
            continue
        gen3 += 1
        if is_brick(g) and not is_wheel_like(g):
            candidates.append({"canon": key.hex(), "n": g.n, "m": g.m, "mg": format_mg(g)})
    counterexamples: list[dict] = []
    if not candidates:
        counterexamples.append({"mg": "", "failed": "no non-wheel-like third-generation brick"})
    summary = {
        "closure_size": len(closure),
        "third_generation": gen3,
        "non_wheel_like_bricks": len(candidates),
        "examples": candidates[:10],
    }
    return _finish(
        "fig-g3",
        {"max_n": max_n},
        gen3,
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# single-graph analysis (the `analyze` command body)
# =============================================================================


def analyze_graph(g: Multigraph) -> dict:
    from .cuts import _BARRIER_MAX_N, maximal_barriers
    from .decomposition import _SOLID_MAX_N

    report: dict = {
        "schema": SCHEMA_VERSION,
        "n": g.n,
        "m": g.m,
        "min_degree": g.min_degree() if g.n else 0,
        "max_degree": g.max_degree() if g.n else 0,
        "bipartite": g.is_bipartite(),
        "matching_number": matching_number(g),
    }
    skipped: list[str] = []
    mc = is_matching_covered(g)
    report["matching_covered"] = mc
    if not mc:
        report["status"] = "not matching covered"
        report["skipped"] = skipped
        return report

    report["bicritical"] = is_bicritical(g)
    brick = is_brick(g)
    report["brick"] = brick
    if g.is_bipartite():
        from .decomposition import is_brace

        report["brace"] = is_brace(g)
    else:
        report["brace"] = False
    if g.n <= _SOLID_MAX_N:
        report["solid"] = is_solid(g)
    else:
        report["solid"] = None
        skipped.append(f"solid: n > {_SOLID_MAX_N}")

    classes = removable_classes(g)
    report["removable_singles"] = sorted(
        list(g.endpoints(c.edge)) for c in classes if isinstance(c, Single)
    )
    report["removable_doubletons"] = sorted(
        sorted(list(g.endpoints(e)) for e in c.edges)
        for c in classes
        if not isinstance(c, Single)
    )
    # minimality is about single-edge deletions; a doubleton does not count
    report["minimal"] = not any(isinstance(c, Single) for c in classes)

    if brick:
        report["wheel_like_hubs"] = sorted(is_wheel_like(g))
    else:
        report["wheel_like_hubs"] = []

    if g.n <= _BARRIER_MAX_N:
        report["maximal_barriers"] = sorted(sorted(b.vertices) for b in maximal_barriers(g))
    else:
        report["maximal_barriers"] = None
        skipped.append(f"barriers: n > {_BARRIER_MAX_N}")

    report["status"] = "ok"
    report["skipped"] = skipped
    return report


# =============================================================================
# corpus ingestion: re-run a campaign's per-graph claim over supplied graphs
# =============================================================================
#
# Each check appends counterexample records for g or declines the graph when
# the claim's hypotheses do not apply (returning False).


def _corpus_thm_1_1(g, ctx, out) -> bool:
    if not g.is_simple() or not is_brick(g):
        return False
    classes = removable_classes(g)
    singles = sum(1 for c in classes if isinstance(c, Single))
    delta = g.max_degree()
    exempt = canonical_form(g) in ctx["exempt"]
    if len(classes) < delta or (not exempt and singles < delta - 2):
        out.append(_counterexample(g, delta=delta, classes=len(classes), singles=singles))
    return True


def _corpus_thm_1_4(g, ctx, out) -> bool:
    if g.n < 4 or not is_matching_covered(g):
        return False
    if _first_removable(g) is not None:
        return True
    if g.min_degree() not in (2, 3):
        out.append(_counterexample(g, delta=g.min_degree()))
    return True


def _corpus_thm_1_3(g, ctx, out) -> bool:
    if not is_brick(g) or not is_wheel_like(g):
        return False
    closure = ctx.get("closure")
    if closure is None or ctx["closure_bound"] < g.n:
        closure = g_family_closure(max(g.n, 8))
        ctx["closure"] = closure
        ctx["closure_bound"] = max(g.n, 8)
    key = canonical_form(g)
    entry = closure.get(key)
    if entry is None:
        out.append(_counterexample(g, failed="no certificate in closure"))
        return True
    ok, problems = verify_certificate(entry[1])
    if not ok:
        out.append(_counterexample(g, failed="certificate rejected", detail=list(problems)))
    elif canonical_form(build_from_certificate(entry[1])) != key:
        out.append(_counterexample(g, failed="certificate builds a different graph"))
    return True


def _corpus_lemma_2_16(g, ctx, out) -> bool:
    if not g.is_bipartite() or g.m < 2 or not is_matching_covered(g):
        return False
    _lemma216_check(g, out)
    return True


def _corpus_lemma_2_17(g, ctx, out) -> bool:
    if not g.is_bipartite() or g.min_degree() < 3 or not is_matching_covered(g):
        return False
    pset = minimum_P_set(g)
    if pset is None:
        return True
    x = pset.vertices
    for e in range(g.m):
        u, v = g.endpoints(e)
        if u in x and v in x and not is_removable_edge(g, e):
            out.append(
                _counterexample(g, edge=[u, v], p_set=sorted(x), failed="induced edge not removable")
            )
    return True


def _corpus_lemma_2_18(g, ctx, out) -> bool:
    if not g.is_bipartite() or not is_matching_covered(g):
        return False
    a, b = bipartition(g)
    applied = False
    for a_side, b_side in ((a, b), (b, a)):
        if not all(g.degree(x) >= 3 for x in a_side):
            continue
        applied = True
        if has_two_nonadjacent_removable_edges(g):
            continue
        if not _lemma218_fallback(g, b_side):
            out.append(
                _counterexample(g, a_side=sorted(a_side), failed="no pair and no fallback pattern")
            )
    return applied


def _corpus_lemma_3_6(g, ctx, out) -> bool:
    if g.n != 6 or not is_brick(g):
        return False
    wl = bool(is_wheel_like(g))
    rhs = _w5_with_hub_parallels(g)
    if wl != rhs:
        out.append(_counterexample(g, wheel_like=wl, w5_hub_parallels=rhs, failed="equivalence"))
    return True


def _corpus_prop_3_13(g, ctx, out) -> bool:
    if not is_bicritical(g):
        return False
    if _first_removable(g) is not None:
        return True
    deg3 = sum(1 for v in range(g.n) if g.degree(v) == 3)
    if deg3 < 4:
        out.append(_counterexample(g, degree_three=deg3))
    return True


def _corpus_decomp_unique(g, ctx, out) -> bool:
    if not is_matching_covered(g) or not nontrivial_tight_shores(g):
        return False
    baseline = decomposition_multiset(g, seed=0)
    for s in range(1, ctx["seeds"]):
        if decomposition_multiset(g, seed=s) != baseline:
            out.append(_counterexample(g, seed=s))
            return True
    return True


CORPUS_CHECKS: dict[str, Callable] = {
    "thm-1.1": _corpus_thm_1_1,
    "thm-1.3": _corpus_thm_1_3,
    "thm-1.4": _corpus_thm_1_4,
    "lemma-2.16": _corpus_lemma_2_16,
    "lemma-2.17": _corpus_lemma_2_17,
    "lemma-2.18": _corpus_lemma_2_18,
    "lemma-3.6": _corpus_lemma_3_6,
    "prop-3.13": _corpus_prop_3_13,
    "decomp-unique": _corpus_decomp_unique,
}


def run_corpus(name: str, graphs: Sequence[Multigraph], source: str = "corpus", seeds: int = 20) -> dict:
    if name not in CORPUS_CHECKS:
        known = ", ".join(sorted(CORPUS_CHECKS))
        raise UnknownCampaignError(
            f"campaign {name!r} has no corpus mode (supported: {known})"
        )
    started = time.monotonic()
    for g in graphs:
        if g.n > _CORPUS_MAX_N:
            raise BoundExceededError(
                f"corpus graph on {g.n} vertices exceeds the ingestion cap {_CORPUS_MAX_N}"
            )
    check = CORPUS_CHECKS[name]
    ctx = {
        "seeds": seeds,
        "exempt": {canonical_form(complete_graph(4)), canonical_form(prism_graph())},
    }
    counterexamples: list[dict] = []
    applied = 0
    skipped = 0
    for g in graphs:
        if check(g, ctx, counterexamples):
            applied += 1
        else:
            skipped += 1
    summary = {"applied": applied, "skipped_hypotheses": skipped}
    return _finish(
        name,
        {"corpus": source, "graphs": len(graphs), "seeds": seeds},
        len(graphs),
        counterexamples,
        summary,
        None,
        started,
    )


# =============================================================================
# registry
# =============================================================================

CAMPAIGNS: dict[str, tuple[Callable[..., dict], dict, str]] = {
    "thm-1.1": (
        run_thm_1_1,
        {"max_n": 8, "jobs": 1},
        "simple bricks: removable classes reach the maximum degree",
    ),
    "thm-1.3": (
        run_thm_1_3,
        {"max_n": 8, "mult_n": 6, "mult_bound": 2, "jobs": 1},
        "wheel-like bricks admit family certificates from forward closure",
    ),
    "thm-1.4": (
        run_thm_1_4,
        {"max_n": 8, "mult_n": 6, "mult_bound": 2, "jobs": 1},
        "minimal matching covered graphs have minimum degree 2 or 3",
    ),
    "lemma-2.16": (
        run_lemma_2_16,
        {
            "max_n": 8,
            "sample_n": 10,
            "samples": 200,
            "seed": 0,
            "mult_n": 6,
            "mult_bound": 2,
            "jobs": 1,
        },
        "bipartite non-removability is equivalent to an (A1, B1) certificate",
    ),
    "lemma-2.17": (
        run_lemma_2_17,
        {"max_n": 8, "mult_n": 6, "mult_bound": 2, "jobs": 1},
        "minimum P-set interiors consist of removable edges",
    ),
    "lemma-2.18": (
        run_lemma_2_18,
        {"max_n": 8, "mult_n": 6, "mult_bound": 2, "jobs": 1},
        "degree-3 side forces a removable pair or the degree-2/degree-4 pattern",
    ),
    "lemma-3.6": (
        run_lemma_3_6,
        {"mult_bound": 2, "jobs": 1},
        "six-vertex bricks: wheel-like means 5-wheel with hub parallels",
    ),
    "lemma-3.9": (
        run_lemma_3_9,
        {"wheels": (3, 5, 7), "mult_bound": 2, "doubles": 2, "jobs": 1},
        "odd-wheel splices: wheel-like equals the three splice conditions",
    ),
    "prop-3.13": (
        run_prop_3_13,
        {"max_n": 8, "jobs": 1},
        "edge-irreducible bicritical graphs carry four degree-3 vertices",
    ),
    "decomp-unique": (
        run_decomp_unique,
        {"max_n": 8, "seeds": 20, "jobs": 1},
        "tight cut decompositions agree across random cut orders",
    ),
    "fig-r8": (
        run_fig_r8,
        {"jobs": 1},
        "the unique 8-vertex near-bipartite brick without a removable pair",
    ),
    "fig-nonsolid-6": (
        run_fig_nonsolid_6,
        {"jobs": 1},
        "six-vertex nonsolid non-prism bricks: not wheel-like, robust cuts exist",
    ),
    "fig-g3": (
        run_fig_g3,
        {"max_n": 10, "jobs": 1},
        "a third-generation family brick that is not wheel-like",
    ),
}


def run_campaign(name: str, **params) -> dict:
    if name not in CAMPAIGNS:
        known = ", ".join(sorted(CAMPAIGNS))
        raise UnknownCampaignError(f"unknown campaign {name!r} (known: {known})")
    runner, defaults, _ = CAMPAIGNS[name]
    kwargs = dict(defaults)
    for key, value in params.items():
        if value is None:
            continue
        if key not in defaults:
            raise UnknownCampaignError(f"campaign {name!r} takes no parameter {key!r}")
        kwargs[key] = value
    return runner(**kwargs)
