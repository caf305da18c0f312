"""graph6 line format: printable 6-bit packing of the upper triangle.

The encoding follows the standard format description: a length header
(value + 63), then the column-major upper-triangle bit vector packed into
6-bit groups, each offset by 63. One graph per line.
"""

from __future__ import annotations

from .core import Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


_HEADER = b">>graph6<<"


def encode_graph6(g: Graph) -> bytes:
    n = g.n
    out = bytearray()
    if n <= 62:
        out.append(n + 63)
    elif n <= 258047:
        out.append(126)
        out += bytes((((n >> 12) & 63) + 63, ((n >> 6) & 63) + 63, (n & 63) + 63))
    else:
        raise Graph6Error("order too large for this encoder")
    acc = 0
    nbits = 0
    for col in range(1, n):
        colmask = g.masks[col]
        for row in range(col):
            acc = (acc << 1) | ((colmask >> row) & 1)
            nbits += 1
            if nbits == 6:
                out.append(acc + 63)
                acc = 0
                nbits = 0
    if nbits:
        out.append((acc << (6 - nbits)) + 63)
    return bytes(out)


def decode_graph6(line: bytes | str) -> Graph:
    if isinstance(line, str):
        line = line.encode("ascii", errors="replace")
    data = line.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    if not data:
        raise Graph6Error("empty graph6 line")
    for b in data:
        if not 63 <= b <= 126:
            raise Graph6Error(f"non-printable byte {b} in graph6 line")
    if data[0] == 126:
        if len(data) >= 2 and data[1] == 126:
            if len(data) < 8:
                raise Graph6Error("truncated length header")
            vals = [b - 63 for b in data[2:8]]
            n = 0
            for v in vals:
                n = (n << 6) | v
            body = data[8:]
        else:
            if len(data) < 4:
                raise Graph6Error("truncated length header")
            vals = [b - 63 for b in data[1:4]]
            n = (vals[0] << 12) | (vals[1] << 6) | vals[2]
            body = data[4:]
    else:
        n = data[0] - 63
        body = data[1:]
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    if len(body) < nbytes:
        raise Graph6Error("graph6 body shorter than the order requires")
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage after graph6 body")
    bitstream = 0
    for b in body:
        bitstream = (bitstream << 6) | (b - 63)
    pad = 6 * nbytes - nbits
    if bitstream & ((1 << pad) - 1):
        raise Graph6Error("nonzero padding bits")
    bitstream >>= pad
    masks = [0] * n
    pos = nbits - 1
    for col in range(1, n):
        for row in range(col):
            if (bitstream >> pos) & 1:
                masks[row] |= 1 << col
                masks[col] |= 1 << row
            pos -= 1
    return Graph(n, tuple(masks))


def iter_graph6(lines, *, min_degree: int = 0):
    """Decode a stream of graph6 lines.

    Yields ``(lineno, Graph, None)`` for good lines and
    ``(lineno, None, message)`` for bad ones; blank lines are skipped.
    """
    for lineno, raw in enumerate(lines, start=1):
        if isinstance(raw, str):
            raw = raw.encode("ascii", errors="replace")
        raw = raw.strip()
        if not raw:
            continue
        try:
            g = decode_graph6(raw)
        except Graph6Error as exc:
            yield lineno, None, str(exc)
            continue
        if min_degree and any(d < min_degree for d in g.degrees()):
            continue
        yield lineno, g, None
