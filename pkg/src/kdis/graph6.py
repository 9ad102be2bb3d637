"""graph6 encoding and decoding for graphs on at most 64 vertices."""

from __future__ import annotations

from typing import Iterable, Iterator, TextIO

from kdis.errors import Graph6Error
from kdis.graph import MAX_VERTICES, Graph

HEADER = ">>graph6<<"


def _size_bytes(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    return "~" + "".join(chr(63 + (n >> shift & 63)) for shift in (12, 6, 0))


def graph6_encode(g: Graph) -> str:
    """Encode ``g`` as a graph6 string (no header, no newline)."""
    out = [_size_bytes(g.n)]
    acc = nbits = 0
    for j in range(1, g.n):
        row = g.adj[j]
        for i in range(j):
            acc = acc << 1 | (row >> i & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(63 + acc))
                acc = nbits = 0
    if nbits:
        out.append(chr(63 + (acc << (6 - nbits))))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    """Decode one graph6 line.

    A leading ``>>graph6<<`` and surrounding whitespace are ignored. Raises
    :class:`Graph6Error` with the byte offset of the first problem.
    """
    s = text.strip()
    base = 0
    if s.startswith(HEADER):
        s = s[len(HEADER):]
        base = len(HEADER)
    if not s:
        raise Graph6Error("empty graph6 string", base)
    for pos, ch in enumerate(s):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"invalid graph6 character {ch!r}", base + pos)

    if s[0] != "~":
        n, pos = ord(s[0]) - 63, 1
    else:
        if len(s) > 1 and s[1] == "~":
            raise Graph6Error("8-byte size header: graph too large", base + 1)
        if len(s) < 4:
            raise Graph6Error("truncated size header", base + len(s))
        n = 0
        for ch in s[1:4]:
            n = n << 6 | (ord(ch) - 63)
        pos = 4
        if n < 63:
            raise Graph6Error("extended size header used for n <= 62", base + 1)
    if n > MAX_VERTICES:
        raise Graph6Error(f"{n} vertices exceeds capacity {MAX_VERTICES}", base)

    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = s[pos:]
    if len(body) < nbytes:
        raise Graph6Error(f"truncated bit vector: need {nbytes} bytes, got {len(body)}", base + len(s))
    if len(body) > nbytes:
        raise Graph6Error("trailing data after bit vector", base + pos + nbytes)

    rows = [0] * n
    bit = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[bit // 6]) - 63
            if byte >> (5 - bit % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            bit += 1
    if nbytes and bit % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - bit % 6)) - 1)
        if pad:
            raise Graph6Error("non-zero padding bits", base + pos + nbytes - 1)
    return Graph(n, tuple(rows))


def read_graph6(stream: TextIO | Iterable[str]) -> Iterator[Graph]:
    """Yield graphs from graph6 lines, skipping blank lines."""
    for line in stream:
        if line.strip():
            yield graph6_decode(line)


def write_graph6(graphs: Iterable[Graph], stream: TextIO) -> int:
    count = 0
    for g in graphs:
        stream.write(graph6_encode(g) + "\n")
        count += 1
    return count
