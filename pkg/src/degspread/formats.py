"""Graph serialization: graph6 (header-less), plain edge lists, and DOT export."""

from __future__ import annotations

from .graphcore import MAX_VERTICES, Graph


class Graph6Error(ValueError):
    """Malformed graph6 input."""


def _encode_n(n: int) -> str:
    if n <= 62:
        return chr(63 + n)
    if n <= 258047:
        return "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0))
    raise ValueError(f"n={n} too large for the supported graph6 size encodings")


def _decode_n(s: str) -> tuple[int, int]:
    """Return (n, chars consumed)."""
    if not s:
        raise Graph6Error("empty graph6 string")
    if s[0] != "~":
        return ord(s[0]) - 63, 1
    if len(s) < 4 or s[1] == "~":
        raise Graph6Error("unsupported or truncated graph6 size prefix")
    n = 0
    for c in s[1:4]:
        n = n << 6 | (ord(c) - 63)
    return n, 4


def graph6_encode(g: Graph) -> str:
    """Encode as header-less graph6: size prefix, then the upper triangle column by column."""
    bits = []
    for v in range(1, g.n):
        row = g.adj[v]
        for u in range(v):
            bits.append(row >> u & 1)
    while len(bits) % 6:
        bits.append(0)
    chars = []
    for j in range(0, len(bits), 6):
        word = 0
        for b in bits[j:j + 6]:
            word = word << 1 | b
        chars.append(chr(63 + word))
    return _encode_n(g.n) + "".join(chars)


def graph6_decode(s: str, *, max_vertices: int = MAX_VERTICES) -> Graph:
    s = s.strip()
    n, used = _decode_n(s)
    if n < 1:
        raise Graph6Error(f"decoded vertex count {n} is not positive")
    body = s[used:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(body) != need:
        raise Graph6Error(f"expected {need} payload characters for n={n}, got {len(body)}")
    bits = []
    for c in body:
        word = ord(c) - 63
        if not 0 <= word < 64:
            raise Graph6Error(f"character {c!r} outside the graph6 alphabet")
        bits.extend(word >> s6 & 1 for s6 in (5, 4, 3, 2, 1, 0))
    rows = [0] * n
    idx = 0
    for v in range(1, n):
        for u in range(v):
            if bits[idx]:
                rows[u] |= 1 << v
                rows[v] |= 1 << u
            idx += 1
    if any(bits[idx:]):
        raise Graph6Error("nonzero padding bits")
    return Graph._trusted(n, tuple(rows), max_vertices=max_vertices)


def format_edge_list(g: Graph) -> str:
    """One "u v" line per edge, 0-based, u < v."""
    return "\n".join(f"{u} {v}" for u, v in g.edges())


def parse_edge_list(text: str, n: int | None = None, *, max_vertices: int = MAX_VERTICES) -> Graph:
    """Parse "u v" lines; n defaults to one past the largest vertex mentioned."""
    edges = []
    top = -1
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'u v', got {raw!r}")
        u, v = int(parts[0]), int(parts[1])
        edges.append((u, v))
        top = max(top, u, v)
    if n is None:
        if top < 0:
            raise ValueError("empty edge list and no vertex count given")
        n = top + 1
    return Graph.from_edges(n, edges, max_vertices=max_vertices)


def to_dot(g: Graph, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    isolated = [v for v in range(g.n) if g.adj[v] == 0]
    for v in isolated:
        lines.append(f"  {v};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines)
