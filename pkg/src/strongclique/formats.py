"""Text formats: graph6 (one graph per line) and a plain edge-list format.

graph6 packs the upper triangle of the adjacency matrix column by column,
bit order (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ..., six bits per
printable byte (offset 63).  Both the short header (n <= 62) and the 4-byte
header (n <= 258047) are supported.  Round trips are bit-exact; parsers fail
with byte offsets rather than guessing.

The edge-list format is: a header line "n m" followed by m lines "u v" with
0-based labels.  Written output is normalized: u < v, edges sorted.
"""

from __future__ import annotations

from .errors import FormatError, InputError
from .graphs import Graph

_MAX_LONG_N = 258047  # largest vertex count of the 4-byte graph6 header


def parse_graph6(text: str) -> Graph:
    """Decode a single graph6 line (leading ">>graph6<<" header allowed)."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise FormatError("empty graph6 string", offset=0)
    data = []
    for i, ch in enumerate(s):
        b = ord(ch)
        if not (63 <= b <= 126):
            raise FormatError(f"invalid graph6 byte {b!r}", offset=i)
        data.append(b - 63)
    if data[0] <= 62:
        n, pos = data[0], 1
    else:
        if data[0] != 63 or len(data) < 4:
            raise FormatError("truncated graph6 size header", offset=0)
        if data[1] == 63:
            raise FormatError("graph6 8-byte size header not supported",
                              offset=1)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(data) - pos != nbytes:
        raise FormatError(
            f"graph6 body for n={n} needs {nbytes} bytes, got {len(data) - pos}",
            offset=pos)
    adj = [0] * n
    bit = 0
    for k in range(pos, len(data)):
        group = data[k]
        for shift in range(5, -1, -1):
            if bit >= nbits:
                if group >> shift & 1:
                    raise FormatError("nonzero padding bits", offset=k)
                continue
            if group >> shift & 1:
                i, j = _bit_to_pair(bit)
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit += 1
    return Graph(n, tuple(adj))


def write_graph6(g: Graph) -> str:
    if g.n > _MAX_LONG_N:
        raise InputError(f"graph too large for graph6 writer: n={g.n}")
    if g.n <= 62:
        head = [g.n + 63]
    else:
        head = [126, (g.n >> 12) + 63, (g.n >> 6 & 63) + 63, (g.n & 63) + 63]
    nbits = g.n * (g.n - 1) // 2
    body = [0] * ((nbits + 5) // 6)
    bit = 0
    for j in range(1, g.n):
        col = g.adj[j]
        for i in range(j):
            if col >> i & 1:
                body[bit // 6] |= 1 << (5 - bit % 6)
            bit += 1
    return "".join(chr(b) for b in head) + "".join(chr(b + 63) for b in body)


def _bit_to_pair(bit: int) -> tuple[int, int]:
    # Column-major upper triangle: column j holds bits for rows 0..j-1.
    j = 1
    while j * (j - 1) // 2 + j <= bit:
        j += 1
    i = bit - j * (j - 1) // 2
    return i, j


def parse_graph6_lines(text: str) -> list[Graph]:
    """Decode one graph per non-empty line; errors carry the line number."""
    out = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            out.append(parse_graph6(line))
        except FormatError as exc:
            raise FormatError(f"bad graph6 input: {exc}", line=lineno) from exc
    return out


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    rows = [(i + 1, ln.strip()) for i, ln in enumerate(lines)
            if ln.strip() and not ln.lstrip().startswith("#")]
    if not rows:
        raise FormatError("empty edge-list input", line=1)
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
        raise FormatError(f"expected header 'n m', got {header!r}", line=lineno)
    n, m = int(parts[0]), int(parts[1])
    if n < 0 or m < 0:
        raise FormatError("negative counts in header", line=lineno)
    if len(rows) - 1 != m:
        raise FormatError(f"header promises {m} edges, found {len(rows) - 1}",
                          line=lineno)
    adj = [0] * n
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 2 or not all(p.lstrip("-").isdigit() for p in parts):
            raise FormatError(f"expected edge 'u v', got {row!r}", line=lineno)
        u, v = int(parts[0]), int(parts[1])
        if u == v:
            raise FormatError(f"self-loop {u} {v}", line=lineno)
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"label out of range in edge {u} {v} (n={n})",
                              line=lineno)
        if adj[u] >> v & 1:
            raise FormatError(f"duplicate edge {u} {v}", line=lineno)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def write_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
