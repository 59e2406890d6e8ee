"""Simple undirected graphs on vertex set 0..n-1, stored as adjacency bitsets.

Python integers give multi-word bitset rows for free, so any order is
representable; the exact algorithms elsewhere in the library guarantee their
contracts only at desk scale (n <= 16 for subset scans, n <= 8 for built-in
enumeration).  Graphs are immutable: every edit returns a new Graph.

Also houses the graph6 and edge-list interchange formats, canonical forms and
isomorph-free enumeration of small graphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

from .errors import (
    DuplicateEdge,
    EdgeNotPresent,
    LoopEdge,
    MalformedGraph6,
    ParseError,
    SizeLimitExceeded,
    VertexOutOfRange,
)

ENUMERATION_LIMIT = 8
CANONICAL_LIMIT = 10


class Edge(NamedTuple):
    """An undirected edge, normalised so u < v."""

    u: int
    v: int


def edge(a: int, b: int) -> Edge:
    if a == b:
        raise LoopEdge(f"loop at vertex {a}")
    return Edge(a, b) if a < b else Edge(b, a)


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def bit_count(mask: int) -> int:
    return mask.bit_count()


def mask_of(vertices: Iterable[int]) -> int:
    out = 0
    for v in vertices:
        out |= 1 << v
    return out


@dataclass(frozen=True)
class VertexSet:
    """A subset of the vertices of a graph of order ``n``, stored as a bitset."""

    mask: int
    n: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.n:
            raise VertexOutOfRange(f"vertex set {bin(self.mask)} not within [0, {self.n})")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        return cls(mask_of(vertices), n)

    def vertices(self) -> tuple[int, ...]:
        return tuple(iter_bits(self.mask))

    def __len__(self) -> int:
        return bit_count(self.mask)

    def __iter__(self) -> Iterator[int]:
        return iter_bits(self.mask)

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and bool(self.mask >> v & 1)

    def __repr__(self) -> str:
        return f"VertexSet({list(self.vertices())}, n={self.n})"


class Graph:
    """Immutable simple graph: ``adj[v]`` is the neighbour bitset of v."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: tuple[int, ...]):
        self.n = n
        self.adj = adj

    # -- constructors ------------------------------------------------------

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        adj = [0] * n
        for a, b in edges:
            if not (0 <= a < n and 0 <= b < n):
                raise VertexOutOfRange(f"edge ({a},{b}) outside [0,{n})")
            if a == b:
                raise LoopEdge(f"loop at vertex {a}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> "Graph":
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    @classmethod
    def star(cls, leaves: int) -> "Graph":
        return cls.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])

    @classmethod
    def complete_bipartite(cls, a: int, b: int) -> "Graph":
        return cls.from_edges(a + b, [(i, a + j) for i in range(a) for j in range(b)])

    @classmethod
    def petersen(cls) -> "Graph":
        outer = [(i, (i + 1) % 5) for i in range(5)]
        inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
        spokes = [(i, i + 5) for i in range(5)]
        return cls.from_edges(10, outer + inner + spokes)

    # -- basic accessors ---------------------------------------------------

    @property
    def m(self) -> int:
        return sum(bit_count(row) for row in self.adj) // 2

    def degree(self, v: int) -> int:
        return bit_count(self.adj[v])

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adj[a] >> b & 1)

    def edges(self) -> list[Edge]:
        return [
            Edge(u, v) for u in range(self.n) for v in iter_bits(self.adj[u]) if u < v
        ]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return tuple(iter_bits(self.adj[v]))

    def vertex_set(self, vertices: Iterable[int]) -> VertexSet:
        return VertexSet.of(vertices, self.n)

    def full_mask(self) -> int:
        return (1 << self.n) - 1

    # -- edits (copy-on-write) ---------------------------------------------

    def add_edge(self, a: int, b: int) -> "Graph":
        e = edge(a, b)
        adj = list(self.adj)
        adj[e.u] |= 1 << e.v
        adj[e.v] |= 1 << e.u
        return Graph(self.n, tuple(adj))

    def add_vertex(self, neighbor_mask: int = 0) -> "Graph":
        """Append vertex ``n`` adjacent to the vertices of ``neighbor_mask``."""
        v = self.n
        adj = [row | (neighbor_mask >> i & 1) << v for i, row in enumerate(self.adj)]
        adj.append(neighbor_mask)
        return Graph(v + 1, tuple(adj))

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


# ---------------------------------------------------------------------------
# graph6 interchange format
# ---------------------------------------------------------------------------

_G6_HEADER = b">>graph6<<"


def _g6_encode_order(n: int) -> bytes:
    if n <= 62:
        return bytes([n + 63])
    if n <= 258047:
        return bytes([126, (n >> 12) + 63, (n >> 6 & 63) + 63, (n & 63) + 63])
    if n <= 68719476735:
        return bytes([126, 126] + [(n >> s & 63) + 63 for s in range(30, -6, -6)])
    raise MalformedGraph6(f"order {n} too large for graph6")


def _g6_decode_order(data: bytes) -> tuple[int, int]:
    """Return (n, number of bytes consumed)."""
    if not data:
        raise MalformedGraph6("empty graph6 line")
    if data[0] != 126:
        return data[0] - 63, 1
    if len(data) >= 2 and data[1] != 126:
        if len(data) < 4:
            raise MalformedGraph6("truncated 4-byte order field")
        n = 0
        for b in data[1:4]:
            n = n << 6 | (b - 63)
        return n, 4
    if len(data) < 8:
        raise MalformedGraph6("truncated 8-byte order field")
    n = 0
    for b in data[2:8]:
        n = n << 6 | (b - 63)
    return n, 8


def parse_graph6(data: bytes | str) -> Graph:
    """Decode one graph6 line (optional ``>>graph6<<`` header tolerated)."""
    if isinstance(data, str):
        data = data.encode("ascii")
    data = data.strip()
    if data.startswith(_G6_HEADER):
        data = data[len(_G6_HEADER):]
    for b in data:
        if not 63 <= b <= 126:
            raise MalformedGraph6(f"byte {b} outside graph6 range [63,126]")
    n, used = _g6_decode_order(data)
    body = data[used:]
    nbits = n * (n - 1) // 2
    expected = (nbits + 5) // 6
    if len(body) != expected:
        raise MalformedGraph6(
            f"graph6 body has {len(body)} bytes, expected {expected} for n={n}"
        )
    bits = 0
    for b in body:
        bits = bits << 6 | (b - 63)
    pad = expected * 6 - nbits
    if pad and bits & ((1 << pad) - 1):
        raise MalformedGraph6("nonzero padding bits")
    bits >>= pad
    adj = [0] * n
    pos = nbits - 1  # bits arrive most-significant first
    for j in range(1, n):
        for i in range(j):
            if bits >> pos & 1:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            pos -= 1
    return Graph(n, tuple(adj))


def emit_graph6(g: Graph) -> bytes:
    """Encode under the current labelling (inverse of parse_graph6)."""
    n = g.n
    out = bytearray(_g6_encode_order(n))
    bits = 0
    nbits = 0
    for j in range(1, n):
        col = g.adj[j]
        for i in range(j):
            bits = bits << 1 | (col >> i & 1)
            nbits += 1
    pad = (-nbits) % 6
    bits <<= pad
    for shift in range(nbits + pad - 6, -6, -6):
        out.append((bits >> shift & 63) + 63)
    return bytes(out)


def read_graph6_stream(lines: Iterable[str | bytes]) -> Iterator[Graph]:
    """Parse a stream of graph6 lines, skipping blanks and a header line."""
    for line in lines:
        if isinstance(line, bytes):
            line = line.decode("ascii")
        line = line.strip()
        if not line or line == _G6_HEADER.decode():
            continue
        yield parse_graph6(line)


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then one "u v" line per edge
# ---------------------------------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    lines = [ln for ln in (raw.strip() for raw in text.splitlines()) if ln]
    if not lines:
        raise ParseError("empty edge-list input")
    head = lines[0].split()
    if len(head) != 2:
        raise ParseError(f"expected 'n m' header, got {lines[0]!r}")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise ParseError(f"non-integer header {lines[0]!r}") from exc
    if n < 0 or m < 0:
        raise ParseError("negative n or m")
    if len(lines) - 1 != m:
        raise ParseError(f"header announces {m} edges but {len(lines) - 1} lines follow")
    adj = [0] * n
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise ParseError(f"bad edge line {ln!r}")
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError as exc:
            raise ParseError(f"non-integer edge line {ln!r}") from exc
        if not (0 <= a < n and 0 <= b < n):
            raise VertexOutOfRange(f"edge ({a},{b}) outside [0,{n})")
        if a == b:
            raise LoopEdge(f"loop at vertex {a}")
        if adj[a] >> b & 1:
            raise DuplicateEdge(f"edge ({a},{b}) listed twice")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return Graph(n, tuple(adj))


def emit_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{e.u} {e.v}" for e in g.edges()]
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# elementary operations
# ---------------------------------------------------------------------------

def neighborhood(g: Graph, s: VertexSet | int) -> VertexSet:
    """N(S): the union of the neighbourhoods of S.  May intersect S."""
    mask = s.mask if isinstance(s, VertexSet) else s
    out = 0
    for v in iter_bits(mask):
        out |= g.adj[v]
    return VertexSet(out, g.n)


def delete_vertices(g: Graph, s: VertexSet | Iterable[int]) -> tuple[Graph, tuple[int, ...]]:
    """Remove the vertices of S; survivors are relabelled order-preservingly.

    Returns ``(h, vmap)`` where ``vmap[new_label] = old_label``, so
    certificates computed in h can be lifted back to g.
    """
    mask = s.mask if isinstance(s, VertexSet) else mask_of(s)
    keep = [v for v in range(g.n) if not mask >> v & 1]
    index = {old: new for new, old in enumerate(keep)}
    adj = [0] * len(keep)
    for new, old in enumerate(keep):
        row = g.adj[old] & ~mask
        for w in iter_bits(row):
            adj[new] |= 1 << index[w]
    return Graph(len(keep), tuple(adj)), tuple(keep)


def delete_edge(g: Graph, e: tuple[int, int]) -> Graph:
    a, b = e
    if not g.has_edge(a, b):
        raise EdgeNotPresent(f"edge ({a},{b}) not in graph")
    adj = list(g.adj)
    adj[a] &= ~(1 << b)
    adj[b] &= ~(1 << a)
    return Graph(g.n, tuple(adj))


def isolated_count(g: Graph) -> int:
    """i(G): the number of degree-zero vertices."""
    return sum(1 for row in g.adj if row == 0)


def component_masks(g: Graph) -> list[int]:
    """Connected components as bitsets, ordered by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            grown = 0
            for u in iter_bits(frontier):
                grown |= g.adj[u]
            frontier = grown & ~comp
            comp |= grown
        comps.append(comp)
        seen |= comp
    return comps


def components(g: Graph) -> list[tuple[int, ...]]:
    return [tuple(iter_bits(mask)) for mask in component_masks(g)]


def odd_components(g: Graph) -> int:
    """Number of connected components of odd order."""
    return sum(1 for mask in component_masks(g) if bit_count(mask) & 1)


def is_connected(g: Graph) -> bool:
    return len(component_masks(g)) <= 1


def is_independent(g: Graph, s: VertexSet | int) -> bool:
    mask = s.mask if isinstance(s, VertexSet) else s
    return all(g.adj[v] & mask == 0 for v in iter_bits(mask))


def min_degree(g: Graph) -> tuple[int, int]:
    """(delta, witness vertex of minimum degree, smallest index on ties)."""
    if g.n == 0:
        return 0, -1
    best = min(range(g.n), key=lambda v: (g.degree(v), v))
    return g.degree(best), best


def is_claw_free(g: Graph) -> bool:
    """True iff no induced K_{1,3}."""
    for v in range(g.n):
        nbrs = g.neighbors(v)
        if len(nbrs) < 3:
            continue
        for a, b, c in itertools.combinations(nbrs, 3):
            if not (g.has_edge(a, b) or g.has_edge(a, c) or g.has_edge(b, c)):
                return False
    return True


def vertex_connectivity(g: Graph) -> int:
    """Exact kappa(G); n-1 for complete graphs, 0 when disconnected or n <= 1."""
    n = g.n
    if n <= 1:
        return 0
    if not is_connected(g):
        return 0
    if g.m == n * (n - 1) // 2:
        return n - 1
    for size in range(n - 1):
        for cut in itertools.combinations(range(n), size):
            h, _ = delete_vertices(g, cut)
            if h.n >= 2 and not is_connected(h):
                return size
    return n - 1


def is_bipartite_with(g: Graph, a_mask: int, b_mask: int) -> bool:
    """True iff (A, B) partitions V and every edge joins A to B."""
    if a_mask & b_mask or (a_mask | b_mask) != g.full_mask():
        return False
    return all(g.adj[v] & a_mask == 0 for v in iter_bits(a_mask)) and all(
        g.adj[v] & b_mask == 0 for v in iter_bits(b_mask)
    )


def bipartitions(g: Graph) -> Iterator[tuple[int, int]]:
    """All ordered splits (A, B) certifying g bipartite.

    Each connected component is 2-coloured (if possible) and every choice of
    which colour class lands in A is produced, so both orientations appear.
    """
    comps = component_masks(g)
    sides = []
    for comp in comps:
        root = (comp & -comp).bit_length() - 1
        color = {root: 0}
        queue = [root]
        ok = True
        while queue and ok:
            u = queue.pop()
            for w in iter_bits(g.adj[u] & comp):
                if w not in color:
                    color[w] = color[u] ^ 1
                    queue.append(w)
                elif color[w] == color[u]:
                    ok = False
                    break
        if not ok:
            return
        part0 = mask_of(v for v, c in color.items() if c == 0)
        sides.append((part0, comp ^ part0))
    for flips in itertools.product((0, 1), repeat=len(sides)):
        a = b = 0
        for (p0, p1), flip in zip(sides, flips):
            a |= p1 if flip else p0
            b |= p0 if flip else p1
        yield a, b


# ---------------------------------------------------------------------------
# canonical forms and isomorph-free enumeration
# ---------------------------------------------------------------------------

def _canonical_order(g: Graph) -> tuple[int, ...]:
    """A vertex order whose adjacency bit-string is lexicographically minimal.

    Level-by-level minimisation: every partial order in the frontier realises
    the same minimal prefix of the bit-string, so taking the globally minimal
    next chunk over the whole frontier is exact.  Each frontier entry carries
    the chunk value of every unused vertex so extending costs O(n), and
    candidates that are twins of an already-evaluated one (identical adjacency
    outside the pair, so that the transposition is an automorphism) are
    skipped, which keeps the frontier small on highly symmetric graphs.
    """
    n = g.n
    if n <= 1:
        return tuple(range(n))
    adj = g.adj
    rng = range(n)
    # twins[v]: vertices w for which swapping v and w is an automorphism;
    # skipping a candidate with a smaller unused twin never loses the minimum.
    twins = [0] * n
    for v in rng:
        row = adj[v]
        key = row | 1 << v
        for w in range(v + 1, n):
            if adj[w] == row or adj[w] | 1 << w == key:
                twins[v] |= 1 << w
                twins[w] |= 1 << v
    # entry: (partial order, used bitmask, chunk-so-far per vertex)
    entries: list[tuple[tuple[int, ...], int, list[int]]] = [((), 0, [0] * n)]
    for level in rng:
        best = None
        winners: list[tuple[tuple[int, ...], int, list[int], int]] = []
        for entry in entries:
            used = entry[1]
            chunks = entry[2]
            free = ~used
            for v in rng:
                if used >> v & 1:
                    continue
                if twins[v] & free & ((1 << v) - 1):
                    continue
                c = chunks[v]
                if best is None or c < best:
                    best = c
                    winners = [(entry[0], used, chunks, v)]
                elif c == best:
                    winners.append((entry[0], used, chunks, v))
        entries = [
            (
                partial + (v,),
                used | 1 << v,
                [chunks[w] << 1 | (adj[w] >> v & 1) for w in rng],
            )
            for partial, used, chunks, v in winners
        ]
    return entries[0][0]


def relabel(g: Graph, order: tuple[int, ...]) -> Graph:
    """Graph with new label i for old vertex order[i]."""
    index = {old: new for new, old in enumerate(order)}
    adj = [0] * g.n
    for new, old in enumerate(order):
        for w in iter_bits(g.adj[old]):
            adj[new] |= 1 << index[w]
    return Graph(g.n, tuple(adj))


def canonical_form(g: Graph) -> bytes:
    """Canonical graph6 bytes: minimal adjacency bit-string over relabellings."""
    if g.n > CANONICAL_LIMIT:
        raise SizeLimitExceeded(f"canonical_form supports n <= {CANONICAL_LIMIT}, got {g.n}")
    return emit_graph6(relabel(g, _canonical_order(g)))


def _twin_pairs(g: Graph) -> list[tuple[int, int]]:
    """Vertex pairs whose transposition is an automorphism."""
    pairs = []
    for v in range(g.n):
        row = g.adj[v]
        key = row | 1 << v
        for w in range(v + 1, g.n):
            if g.adj[w] == row or g.adj[w] | 1 << w == key:
                pairs.append((v, w))
    return pairs


def _normalize_mask(mask: int, pairs: list[tuple[int, int]]) -> int:
    """Push mask bits toward smaller twin positions; dedups isomorphic extensions."""
    changed = True
    while changed:
        changed = False
        for v, w in pairs:
            if mask >> w & 1 and not mask >> v & 1:
                mask ^= (1 << v) | (1 << w)
                changed = True
    return mask


def _cache_path(n: int):
    import os
    from pathlib import Path

    root = os.environ.get("SACHS_LAB_CACHE")
    base = Path(root) if root else Path.home() / ".cache" / "sachslab"
    return base / f"enum{n}.g6"


@lru_cache(maxsize=None)
def _enumerated(n: int) -> tuple[str, ...]:
    if n > ENUMERATION_LIMIT:
        raise SizeLimitExceeded(f"built-in enumeration supports n <= {ENUMERATION_LIMIT}")
    if n == 0:
        return (emit_graph6(Graph.empty(0)).decode("ascii"),)
    if n == 1:
        return (emit_graph6(Graph.empty(1)).decode("ascii"),)
    cache = _cache_path(n)
    if n >= 7 and cache.is_file():
        lines = tuple(cache.read_text().split())
        if lines:
            return lines
    seen: set[str] = set()
    for parent6 in _enumerated(n - 1):
        parent = parse_graph6(parent6)
        pairs = _twin_pairs(parent)
        masks_done: set[int] = set()
        for nbr_mask in range(1 << (n - 1)):
            norm = _normalize_mask(nbr_mask, pairs) if pairs else nbr_mask
            if norm in masks_done:
                continue
            masks_done.add(norm)
            g = parent.add_vertex(norm)
            seen.add(canonical_form(g).decode("ascii"))
    out = tuple(sorted(seen))
    if n >= 7:
        try:
            cache.parent.mkdir(parents=True, exist_ok=True)
            cache.write_text("\n".join(out) + "\n")
        except OSError:
            pass
    return out


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One representative per isomorphism class of order-n graphs (n <= 8)."""
    for g6 in _enumerated(n):
        yield parse_graph6(g6)


def enumerate_graph6(n: int) -> tuple[str, ...]:
    """The canonical graph6 strings behind enumerate_graphs, cached."""
    return _enumerated(n)
