"""graph6 / digraph6 and the JSON edge-list format."""
from __future__ import annotations

import json

import numpy as np

from ..errors import ArglabError, MalformedGraph6, MalformedJson
from .graph import Digraph, Graph, digraph_from_arcs, from_edges

_HEADER = b">>graph6<<"
_D_HEADER = b">>digraph6<<"


def _encode_n(n: int) -> bytes:
    if n < 0:
        raise ValueError("negative order")
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126] + [((n >> s) & 63) + 63 for s in (12, 6, 0)])
    if n <= 68719476735:
        return bytes([126, 126] + [((n >> s) & 63) + 63 for s in (30, 24, 18, 12, 6, 0)])
    raise ValueError("order too large for graph6")


def _decode_n(data: bytes) -> tuple[int, bytes]:
    if not data:
        raise MalformedGraph6("empty input")
    if data[0] != 126:
        return data[0] - 63, data[1:]
    if len(data) > 1 and data[1] == 126:
        width, body = 6, data[2:]
    else:
        width, body = 3, data[1:]
    if len(body) < width:
        raise MalformedGraph6("truncated order field")
    n = 0
    for b in body[:width]:
        n = (n << 6) | (b - 63)
    return n, body[width:]


def _pack(bits: list[int]) -> bytes:
    bits = bits + [0] * (-len(bits) % 6)
    out = bytearray()
    for i in range(0, len(bits), 6):
        v = 0
        for b in bits[i : i + 6]:
            v = (v << 1) | b
        out.append(v + 63)
    return bytes(out)


def _unpack(body: bytes, nbits: int) -> list[int]:
    need = (nbits + 5) // 6
    if len(body) != need:
        raise MalformedGraph6(f"expected {need} data bytes, got {len(body)}")
    bits = []
    for b in body:
        v = b - 63
        bits.extend((v >> s) & 1 for s in range(5, -1, -1))
    return bits[:nbits]


def _check_range(data: bytes) -> None:
    for i, b in enumerate(data):
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b} at offset {i} outside 63..126", i)


def graph6_encode(g: Graph) -> bytes:
    n = g.n
    a = g.adjacency
    bits = [int(a[i, j]) for j in range(1, n) for i in range(j)]
    return _encode_n(n) + _pack(bits)


def graph6_decode(data: bytes | str) -> Graph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_HEADER):
        data = data[len(_HEADER):]
    _check_range(data)
    n, body = _decode_n(data)
    bits = _unpack(body, n * (n - 1) // 2)
    a = np.zeros((n, n), dtype=np.uint8)
    k = 0
    for j in range(1, n):
        for i in range(j):
            a[i, j] = a[j, i] = bits[k]
            k += 1
    return Graph(a)


def digraph6_encode(g: Digraph) -> bytes:
    n = g.n
    return b"&" + _encode_n(n) + _pack(g.adjacency.reshape(-1).astype(int).tolist())


def digraph6_decode(data: bytes | str) -> Digraph:
    if isinstance(data, str):
        data = data.encode("ascii", errors="replace")
    data = data.strip()
    if data.startswith(_D_HEADER):
        data = data[len(_D_HEADER):]
    if not data.startswith(b"&"):
        raise MalformedGraph6("digraph6 data must start with '&'")
    data = data[1:]
    _check_range(data)
    n, body = _decode_n(data)
    bits = _unpack(body, n * n)
    try:
        return Digraph(np.array(bits, dtype=np.uint8).reshape(n, n))
    except ArglabError as exc:
        raise MalformedGraph6(str(exc)) from exc


def graph_json_encode(g: Graph) -> str:
    return json.dumps({"n": g.n, "edges": [list(e) for e in g.edges()]}, separators=(",", ":"))


def _int(v) -> bool:
    return isinstance(v, int) and not isinstance(v, bool)


def _load(text: str | bytes | dict) -> dict:
    if isinstance(text, dict):
        return text
    try:
        obj = json.loads(text)
    except (json.JSONDecodeError, UnicodeDecodeError) as exc:
        raise MalformedJson(f"not JSON: {exc}") from exc
    if not isinstance(obj, dict):
        raise MalformedJson("top level must be an object")
    return obj


def _pairs(obj: dict, key: str) -> tuple[int, list]:
    n = obj.get("n")
    pairs = obj.get(key)
    if not _int(n) or n < 0:
        raise MalformedJson("'n' must be a non-negative integer")
    if not isinstance(pairs, list):
        raise MalformedJson(f"'{key}' must be a list")
    for e in pairs:
        if not (isinstance(e, list) and len(e) == 2 and all(_int(v) for v in e)):
            raise MalformedJson(f"bad entry {e!r} in '{key}'", e)
    return n, pairs


def graph_json_decode(text: str | bytes | dict) -> Graph:
    n, edges = _pairs(_load(text), "edges")
    try:
        return from_edges(n, edges)
    except ArglabError as exc:
        raise MalformedJson(str(exc), exc.witness) from exc


def digraph_json_encode(g: Digraph) -> str:
    return json.dumps({"n": g.n, "arcs": [list(e) for e in g.arcs()]}, separators=(",", ":"))


def digraph_json_decode(text: str | bytes | dict) -> Digraph:
    n, arcs = _pairs(_load(text), "arcs")
    try:
        return digraph_from_arcs(n, arcs)
    except ArglabError as exc:
        raise MalformedJson(str(exc), exc.witness) from exc


def load_graph(data: bytes | str) -> Graph:
    """Decode JSON or graph6, chosen by the first non-blank byte."""
    if isinstance(data, str):
        data = data.encode()
    stripped = data.strip()
    if stripped.startswith(b"{"):
        return graph_json_decode(stripped)
    return graph6_decode(stripped)
