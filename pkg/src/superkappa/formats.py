"""graph6 and JSON edge-list serialization.

graph6: optional ">>graph6<<" header, 6-bit big-endian packing of the
adjacency upper triangle in column order (0,1),(0,2),(1,2),(0,3),...,
each 6-bit group offset by 63. Writes are canonical: no header, single
trailing newline, long-form size prefix only above 62 vertices.
"""

from __future__ import annotations

import json

from .errors import FormatError, InputError
from .graph import Graph

_HEADER = ">>graph6<<"


def write_graph6(G):
    if G.n > 258047:
        raise InputError("graph6 writer supports up to 258047 vertices")
    out = []
    n = G.n
    if n <= 62:
        out.append(chr(n + 63))
    else:
        bits18 = f"{n:018b}"
        out.append(chr(126))
        out.extend(chr(int(bits18[i : i + 6], 2) + 63) for i in range(0, 18, 6))
    bits = []
    for col in range(1, n):
        for row in range(col):
            bits.append("1" if (row, col) in G.edges else "0")
    while len(bits) % 6:
        bits.append("0")
    for i in range(0, len(bits), 6):
        out.append(chr(int("".join(bits[i : i + 6]), 2) + 63))
    return "".join(out) + "\n"


def parse_graph6(text):
    data = text.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER) :]
    if not data:
        raise FormatError("empty graph6 string", offset=0)
    pos = 0
    first = ord(data[0])
    if first == 126:
        if len(data) >= 2 and ord(data[1]) == 126:
            raise FormatError("graph6 sizes above 2^18 are not supported", offset=0)
        if len(data) < 4:
            raise FormatError("truncated long-form length prefix", offset=len(data))
        n = 0
        for i in range(1, 4):
            c = ord(data[i]) - 63
            if not (0 <= c <= 63):
                raise FormatError(f"invalid length byte {data[i]!r}", offset=i)
            n = (n << 6) | c
        pos = 4
    else:
        n = first - 63
        if not (0 <= n <= 62):
            raise FormatError(f"invalid length byte {data[0]!r}", offset=0)
        pos = 1
    need = n * (n - 1) // 2
    need_bytes = (need + 5) // 6
    body = data[pos:]
    if len(body) < need_bytes:
        raise FormatError(
            f"need {need_bytes} data bytes for n={n}, found {len(body)}",
            offset=pos + len(body),
        )
    if len(body) > need_bytes:
        raise FormatError("trailing garbage after graph data", offset=pos + need_bytes)
    bits = []
    for i, ch in enumerate(body):
        c = ord(ch) - 63
        if not (0 <= c <= 63):
            raise FormatError(f"invalid data byte {ch!r}", offset=pos + i)
        bits.append(f"{c:06b}")
    bitstring = "".join(bits)
    if any(b == "1" for b in bitstring[need:]):
        raise FormatError("nonzero padding bits", offset=pos + need_bytes - 1)
    edges = []
    k = 0
    for col in range(1, n):
        for row in range(col):
            if bitstring[k] == "1":
                edges.append((row, col))
            k += 1
    return Graph(n, edges)


# -- JSON edge lists ---------------------------------------------------------


def write_edgelist_json(G, meta=None):
    doc = {
        "n": G.n,
        "edges": sorted([u, v] for u, v in G.edges),
    }
    if G.labels is not None:
        doc["labels"] = list(G.labels)
    if meta:
        doc["meta"] = meta
    return json.dumps(doc, separators=(",", ":"), sort_keys=True) + "\n"


def parse_edgelist_json(text):
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(f"invalid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise FormatError("document must be a JSON object")
    if "n" not in doc or not isinstance(doc["n"], int) or doc["n"] < 0:
        raise FormatError("field 'n' must be a non-negative integer")
    n = doc["n"]
    edges_field = doc.get("edges")
    if not isinstance(edges_field, list):
        raise FormatError("field 'edges' must be a list of [u,v] pairs")
    seen = set()
    edges = []
    for item in edges_field:
        if not (isinstance(item, list) and len(item) == 2 and all(isinstance(x, int) for x in item)):
            raise FormatError(f"field 'edges': bad entry {item!r}")
        u, v = item
        if u == v:
            raise FormatError(f"field 'edges': self-loop [{u},{v}]")
        if not (0 <= u < n and 0 <= v < n):
            raise FormatError(f"field 'edges': endpoint out of range in [{u},{v}]")
        key = (min(u, v), max(u, v))
        if key in seen:
            raise FormatError(f"field 'edges': duplicate pair [{u},{v}]")
        seen.add(key)
        edges.append(key)
    labels = doc.get("labels")
    if labels is not None:
        if not (isinstance(labels, list) and len(labels) == n and all(isinstance(s, str) for s in labels)):
            raise FormatError("field 'labels' must be a list of n strings")
    return Graph(n, edges, labels=labels)


def load_graph_file(path):
    """Read a graph file, sniffing graph6 vs JSON edge list."""
    with open(path) as fh:
        text = fh.read()
    stripped = text.lstrip()
    if stripped.startswith("{"):
        return parse_edgelist_json(text)
    return parse_graph6(text)
