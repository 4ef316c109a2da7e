"""graph6 encoding and decoding for graphs of up to 32 vertices.

The format packs the upper triangle of the adjacency matrix, read column by
column with increasing column index, into 6-bit groups offset by 63.  Only
plain graph6 is supported; sparse6 (':' or ';') and digraph6 ('&') inputs are
rejected.  The optional ``>>graph6<<`` stream header is tolerated and
stripped.
"""

from __future__ import annotations

from .graph import Graph

GRAPH6_CAP = 32

_HEADER = ">>graph6<<"


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _triangle_pairs(n: int):
    for v in range(1, n):
        for u in range(v):
            yield u, v


def to_graph6(g: Graph) -> str:
    """Encode a graph as a graph6 string (no trailing newline)."""
    if g.n > GRAPH6_CAP:
        raise Graph6Error(f"order {g.n} exceeds the {GRAPH6_CAP}-vertex cap")
    out = [chr(63 + g.n)]
    group = 0
    width = 0
    for u, v in _triangle_pairs(g.n):
        group = (group << 1) | (g.adj[u] >> v & 1)
        width += 1
        if width == 6:
            out.append(chr(63 + group))
            group, width = 0, 0
    if width:
        out.append(chr(63 + (group << (6 - width))))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode one graph6 string; raises :class:`Graph6Error` on bad input."""
    if text.startswith(_HEADER):
        text = text[len(_HEADER):]
    text = text.strip("\n\r")
    if not text:
        raise Graph6Error("empty graph6 string")
    if text[0] in ":;":
        raise Graph6Error("sparse6 input is not supported, only graph6")
    if text[0] == "&":
        raise Graph6Error("digraph6 input is not supported, only graph6")
    first = ord(text[0])
    if first == 126:
        raise Graph6Error(
            f"multi-byte order header implies n > {GRAPH6_CAP} (unsupported)"
        )
    if not 63 <= first <= 126:
        raise Graph6Error(f"malformed header byte {text[0]!r}")
    n = first - 63
    if n > GRAPH6_CAP:
        raise Graph6Error(f"order {n} exceeds the {GRAPH6_CAP}-vertex cap")

    nbits = n * (n - 1) // 2
    ngroups = (nbits + 5) // 6
    body = text[1:]
    if len(body) < ngroups:
        raise Graph6Error(
            f"truncated bit vector: need {ngroups} data characters, got {len(body)}"
        )
    if len(body) > ngroups:
        raise Graph6Error(f"trailing garbage after {ngroups} data characters")

    bitstream = 0
    for ch in body:
        code = ord(ch)
        if not 63 <= code <= 126:
            raise Graph6Error(f"invalid data character {ch!r}")
        bitstream = (bitstream << 6) | (code - 63)

    pad = ngroups * 6 - nbits
    if bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits (trailing garbage)")
    bitstream >>= pad

    adj = [0] * n
    pos = nbits
    for u, v in _triangle_pairs(n):
        pos -= 1
        if bitstream >> pos & 1:
            adj[u] |= 1 << v
            adj[v] |= 1 << u
    return Graph.from_adj(tuple(adj))
