"""Graph exchange formats: line-oriented text, graph6, and inline literals.

The text format is the package's native one::

    # optional comments
    graph <n>
    <u> <v>

Edge lines may repeat (duplicates collapse); self-loops are a parse error.
graph6 follows the wire format used by nauty and friends.  Inline literals
are single-line strings ``"n; u-v,u-v,..."`` meant for command lines.
"""

from __future__ import annotations

from .errors import ParseError
from .graphs import Graph


def parse_graph_text(text):
    """Parse the native text format, reporting 1-based line numbers on errors."""
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "graph":
                raise ParseError("expected header 'graph <n>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"vertex count {parts[1]!r} is not an integer", lineno) from None
            if n < 1:
                raise ParseError("vertex count must be at least 1", lineno)
            continue
        if len(parts) != 2:
            raise ParseError("expected edge line '<u> <v>'", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError("edge endpoints must be integers", lineno) from None
        if u == v:
            raise ParseError(f"self-loop {u} {v} not allowed", lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"edge ({u}, {v}) out of range for {n} vertices", lineno)
        edges.append((u, v))
    if n is None:
        raise ParseError("missing 'graph <n>' header")
    return Graph.from_edges(n, edges)


def graph_to_text(g):
    lines = [f"graph {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"


def parse_inline(spec):
    """Parse an inline literal such as ``"4; 0-1,1-2,2-3"`` (edges optional)."""
    head, _, tail = spec.partition(";")
    try:
        n = int(head.strip())
    except ValueError:
        raise ParseError(f"inline literal needs a leading vertex count, got {head.strip()!r}") from None
    if n < 1:
        raise ParseError("vertex count must be at least 1")
    edges = []
    tail = tail.strip()
    if tail:
        for part in tail.split(","):
            ends = part.strip().split("-")
            if len(ends) != 2:
                raise ParseError(f"bad inline edge {part.strip()!r}, expected 'u-v'")
            try:
                u, v = int(ends[0]), int(ends[1])
            except ValueError:
                raise ParseError(f"bad inline edge {part.strip()!r}, endpoints must be integers") from None
            if u == v:
                raise ParseError(f"self-loop {u}-{v} not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise ParseError(f"inline edge ({u}, {v}) out of range for {n} vertices")
            edges.append((u, v))
    return Graph.from_edges(n, edges)


def graph_to_inline(g):
    body = ",".join(f"{u}-{v}" for u, v in g.edges())
    return f"{g.n}; {body}" if body else f"{g.n};"


# graph6: printable bytes 63..126, six data bits per byte, pairs ordered
# (0,1),(0,2),(1,2),(0,3),... i.e. column by column of the upper triangle.

_G6_HEADER = ">>graph6<<"


def parse_graph6(text):
    s = text.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER):]
    if not s:
        raise ParseError("empty graph6 string")
    data = []
    for ch in s:
        val = ord(ch) - 63
        if not 0 <= val <= 63:
            raise ParseError(f"invalid graph6 character {ch!r}")
        data.append(val)
    if data[0] != 63:
        n, idx = data[0], 1
    elif len(data) >= 2 and data[1] != 63:
        if len(data) < 4:
            raise ParseError("truncated graph6 size field")
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        idx = 4
    else:
        if len(data) < 8:
            raise ParseError("truncated graph6 size field")
        n = 0
        for val in data[2:8]:
            n = (n << 6) | val
        idx = 8
    if n < 1:
        raise ParseError("graph6 string encodes an empty graph")
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - idx != nbytes:
        raise ParseError(
            f"graph6 body has {len(data) - idx} data characters, expected {nbytes}"
        )
    bits = data[idx:]
    edges = []
    pos = 0
    for k in range(1, n):
        for i in range(k):
            if (bits[pos // 6] >> (5 - pos % 6)) & 1:
                edges.append((i, k))
            pos += 1
    return Graph.from_edges(n, edges)


def graph_to_graph6(g):
    n = g.n
    if n <= 62:
        out = [n + 63]
    elif n <= 258047:
        out = [126, 63 + (n >> 12), 63 + ((n >> 6) & 63), 63 + (n & 63)]
    else:
        raise ValueError("graph too large for this graph6 writer")
    nbits = n * (n - 1) // 2
    bits = [0] * ((nbits + 5) // 6)
    pos = 0
    for k in range(1, n):
        for i in range(k):
            if g.has_edge(i, k):
                bits[pos // 6] |= 1 << (5 - pos % 6)
            pos += 1
    out.extend(b + 63 for b in bits)
    return "".join(chr(c) for c in out)
