"""Text formats: graph6 for simple graphs, .mg for multigraphs.

.mg is a plain edge list: a header line "n m" followed by m lines "u v"
with 0-based vertex ids; parallel edges are repeated lines. graph6 follows
the standard 6-bit packing of the upper triangle in column-major order,
with strict length and padding validation.
"""
from __future__ import annotations

from .errors import MalformedGraph6Error, NotSimpleError, ParseError
from .multigraph import Multigraph


def _g6_size(text: str) -> tuple[int, int]:
    """(n, index of first payload char)."""
    if not text:
        raise MalformedGraph6Error("empty graph6 string")
    c = ord(text[0])
    if c == 126:  # '~'
        if len(text) >= 2 and ord(text[1]) == 126:
            if len(text) < 8:
                raise MalformedGraph6Error("truncated long-form size")
            vals = [ord(ch) - 63 for ch in text[2:8]]
            if any(not 0 <= v <= 63 for v in vals):
                raise MalformedGraph6Error("size characters out of range")
            n = 0
            for v in vals:
                n = (n << 6) | v
            return n, 8
        if len(text) < 4:
            raise MalformedGraph6Error("truncated medium-form size")
        vals = [ord(ch) - 63 for ch in text[1:4]]
        if any(not 0 <= v <= 63 for v in vals):
            raise MalformedGraph6Error("size characters out of range")
        n = 0
        for v in vals:
            n = (n << 6) | v
        if n < 63:
            raise MalformedGraph6Error("medium-form size below 63")
        return n, 4
    n = c - 63
    if not 0 <= n <= 62:
        raise MalformedGraph6Error(f"size character {text[0]!r} out of range")
    return n, 1


def decode_graph6(text: str) -> Multigraph:
    text = text.strip()
    if text.startswith(">>graph6<<"):
        text = text[len(">>graph6<<"):]
    n, start = _g6_size(text)
    nbits = n * (n - 1) // 2
    payload = text[start:]
    expected = (nbits + 5) // 6
    if len(payload) != expected:
        raise MalformedGraph6Error(
            f"payload length {len(payload)}, expected {expected} for n={n}"
        )
    bits = []
    for ch in payload:
        v = ord(ch) - 63
        if not 0 <= v <= 63:
            raise MalformedGraph6Error(f"payload character {ch!r} out of range")
        for k in range(5, -1, -1):
            bits.append((v >> k) & 1)
    if any(bits[nbits:]):
        raise MalformedGraph6Error("nonzero padding bits")
    edges = []
    idx = 0
    for j in range(1, n):
        for i in range(j):
            if bits[idx]:
                edges.append((i, j))
            idx += 1
    return Multigraph(n, edges)


def encode_graph6(g: Multigraph) -> str:
    if not g.is_simple():
        raise NotSimpleError("graph6 encodes simple graphs only")
    n = g.n
    if n <= 62:
        head = chr(n + 63)
    elif n <= 258047:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    else:
        raise MalformedGraph6Error("graph too large for graph6")
    present = set(g.edges)
    bits = []
    for j in range(1, n):
        for i in range(j):
            bits.append(1 if (i, j) in present else 0)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        v = 0
        for b in bits[k : k + 6]:
            v = (v << 1) | b
        chars.append(chr(v + 63))
    return head + "".join(chars)


def parse_mg(text: str) -> Multigraph:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise ParseError("empty .mg input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"header must be 'n m', got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise ParseError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"edge line must be 'u v', got {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise ParseError(f"non-integer edge line {ln!r}") from exc
    return Multigraph(n, edges)


def format_mg(g: Multigraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph_text(text: str) -> Multigraph:
    """Sniff .mg versus graph6: a two-integer first line means .mg."""
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty graph input")
    first = stripped.splitlines()[0].split()
    if len(first) == 2 and all(p.lstrip("-").isdigit() for p in first):
        return parse_mg(text)
    try:
        return decode_graph6(stripped.splitlines()[0])
    except MalformedGraph6Error as exc:
        raise ParseError(f"input is neither .mg nor graph6: {exc}") from exc
