"""Edge-list text and graph6 encodings with bit-exact round-trips."""

from __future__ import annotations

from thetadim.errors import FormatError, GraphInputError
from thetadim.graphs import Graph, build_graph

_G6_HEADER = ">>graph6<<"


def write_edge_list(g: Graph) -> str:
    """Render a graph as ``n <count>`` followed by one edge per line."""
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse edge-list text.

    The first line may be ``n <count>``; lines starting with ``#`` are
    ignored.  Without an explicit count, n is one past the largest
    endpoint mentioned.
    """
    n: int | None = None
    edges: list[tuple[int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None and not edges and parts[0] == "n":
            if len(parts) != 2 or not parts[1].isdigit():
                raise FormatError(f"line {lineno}: malformed vertex count")
            n = int(parts[1])
            continue
        if len(parts) != 2:
            raise FormatError(f"line {lineno}: expected two endpoints, got {line!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise FormatError(f"line {lineno}: non-integer endpoint in {line!r}") from exc
        edges.append((u, v))
    if n is None:
        if not edges:
            raise FormatError("empty edge list and no vertex count")
        n = max(max(e) for e in edges) + 1
    try:
        return build_graph(n, edges)
    except GraphInputError as exc:
        raise FormatError(str(exc)) from exc


def _pair_bits(g: Graph) -> list[int]:
    # upper triangle in column-major order: x01, x02, x12, x03, x13, x23, ...
    bits = []
    for j in range(1, g.n):
        for i in range(j):
            bits.append(1 if g.has_edge(i, j) else 0)
    return bits


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(n + 63)
    if n <= 258047:
        return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    raise FormatError(f"graph6 size field for n={n} not supported")


def to_graph6(g: Graph) -> str:
    """Standard graph6 encoding (no header, no trailing newline)."""
    bits = _pair_bits(g)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for k in range(0, len(bits), 6):
        val = 0
        for b in bits[k : k + 6]:
            val = (val << 1) | b
        chars.append(chr(val + 63))
    return _encode_n(g.n) + "".join(chars)


def from_graph6(line: str) -> Graph:
    """Decode one graph6 line; strict about length and zero padding."""
    s = line.strip()
    if s.startswith(_G6_HEADER):
        s = s[len(_G6_HEADER) :].strip()
    if not s:
        raise FormatError("empty graph6 line")
    if s[0] == ":":
        raise FormatError("sparse6 input is not supported")
    vals = []
    for ch in s:
        v = ord(ch) - 63
        if not (0 <= v <= 63):
            raise FormatError(f"graph6 character {ch!r} out of range")
        vals.append(v)
    if vals[0] == 63:
        if len(vals) < 4 or vals[1] == 63:
            raise FormatError("unsupported or truncated graph6 size field")
        n = (vals[1] << 12) | (vals[2] << 6) | (vals[3] << 0)
        vals = vals[4:]
    else:
        n = vals[0]
        vals = vals[1:]
    if n < 1:
        raise FormatError("graph6 graph must have at least one vertex")
    nbits = n * (n - 1) // 2
    expect = (nbits + 5) // 6
    if len(vals) != expect:
        raise FormatError(f"graph6 body has {len(vals)} chars, expected {expect}")
    bits = []
    for v in vals:
        for s6 in (5, 4, 3, 2, 1, 0):
            bits.append((v >> s6) & 1)
    if any(bits[nbits:]):
        raise FormatError("nonzero padding bits in graph6 body")
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return build_graph(n, edges)


def read_graph6_lines(text: str) -> list[Graph]:
    """Decode a graph6 stream, one graph per non-empty line."""
    graphs = []
    for raw in text.splitlines():
        if raw.strip():
            graphs.append(from_graph6(raw))
    return graphs
