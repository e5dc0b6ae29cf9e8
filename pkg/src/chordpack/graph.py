"""Bitset-backed simple graphs: construction, I/O, and basic parameters.

Vertices are 0-indexed integers below 64 so that a neighbourhood fits in a
single machine word and the search kernels can run on plain ints.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional


from .errors import (
    BadCharError,
    BadHeaderError,
    BadLengthError,
    EmptySetError,
    OutOfRangeError,
    SelfLoopError,
    TooLargeError,
)

MAX_VERTICES = 64
INFINITY = math.inf

# exact isomorphism testing is only meant for small graphs
ISO_MAX_VERTICES = 12


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    """Simple undirected graph on ``n`` <= 64 vertices.

    ``adj[v]`` is the neighbour bitset of vertex ``v``.  Instances are
    immutable and hashable; all operations below are pure functions.
    """

    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not (1 <= self.n <= MAX_VERTICES):
            raise OutOfRangeError(f"vertex count {self.n} outside 1..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise OutOfRangeError("adjacency length does not match vertex count")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise OutOfRangeError(f"adjacency row {v} has bits >= n")
            if row & (1 << v):
                raise SelfLoopError(f"vertex {v} has a self-loop")
        for v in range(self.n):
            for u in bits(self.adj[v]):
                if not self.adj[u] & (1 << v):
                    raise OutOfRangeError(f"asymmetric adjacency at ({v},{u})")

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] & (1 << v))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u]) if u < v]

    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def edge_count_within(self, mask: int) -> int:
        """Number of edges with both endpoints inside ``mask``."""
        return sum((self.adj[v] & mask).bit_count() for v in bits(mask)) // 2

    def degree_within(self, v: int, mask: int) -> int:
        return (self.adj[v] & mask).bit_count()

    def non_edges(self) -> list[tuple[int, int]]:
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not self.adj[u] & (1 << v)
        ]

    def with_edge(self, u: int, v: int) -> "Graph":
        if u == v:
            raise SelfLoopError("cannot add a loop")
        rows = list(self.adj)
        rows[u] |= 1 << v
        rows[v] |= 1 << u
        return Graph(self.n, tuple(rows))


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; duplicate edges collapse."""
    if not (1 <= n <= MAX_VERTICES):
        raise OutOfRangeError(f"vertex count {n} outside 1..{MAX_VERTICES}")
    rows = [0] * n
    for u, v in edges:
        if u == v:
            raise SelfLoopError(f"loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise OutOfRangeError(f"edge ({u},{v}) outside 0..{n - 1}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.n, tuple((~g.adj[v] & full) & ~(1 << v) for v in range(g.n)))


def induced(g: Graph, s: int) -> Graph:
    """Induced subgraph on bitset ``s``, relabelled in increasing order."""
    if not s:
        raise EmptySetError("induced subgraph on empty vertex set")
    if s & ~g.full_mask:
        raise OutOfRangeError("vertex set has bits >= n")
    verts = list(bits(s))
    index = {v: i for i, v in enumerate(verts)}
    rows = [0] * len(verts)
    for v in verts:
        for u in bits(g.adj[v] & s):
            rows[index[v]] |= 1 << index[u]
    return Graph(len(verts), tuple(rows))


# ---------------------------------------------------------------------------
# graph6 encoding (bytes 63..126, column-major upper triangle)
# ---------------------------------------------------------------------------


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        header = chr(n + 63)
    else:
        header = chr(126) + "".join(
            chr(((n >> shift) & 0x3F) + 63) for shift in (12, 6, 0)
        )
    bitstream = []
    for j in range(1, n):
        for i in range(j):
            bitstream.append((g.adj[i] >> j) & 1)
    while len(bitstream) % 6:
        bitstream.append(0)
    chars = []
    for i in range(0, len(bitstream), 6):
        group = 0
        for b in bitstream[i : i + 6]:
            group = (group << 1) | b
        chars.append(chr(group + 63))
    return header + "".join(chars)


def parse_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<") :]
    if not s:
        raise BadHeaderError("empty graph6 record")
    for ch in s:
        if not (63 <= ord(ch) <= 126):
            raise BadCharError(f"byte {ord(ch)} outside 63..126")
    if ord(s[0]) == 126:
        if len(s) < 4 or ord(s[1]) == 126:
            raise BadHeaderError("unsupported or truncated long-form header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        payload = s[4:]
    else:
        n = ord(s[0]) - 63
        payload = s[1:]
    if not (1 <= n <= MAX_VERTICES):
        raise BadHeaderError(f"order {n} outside supported range 1..{MAX_VERTICES}")
    nbits = n * (n - 1) // 2
    want = (nbits + 5) // 6
    if len(payload) != want:
        raise BadLengthError(f"payload has {len(payload)} chars, expected {want}")
    bitstream = []
    for ch in payload:
        group = ord(ch) - 63
        for shift in range(5, -1, -1):
            bitstream.append((group >> shift) & 1)
    rows = [0] * n
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bitstream[pos]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            pos += 1
    return Graph(n, tuple(rows))


# ---------------------------------------------------------------------------
# edge-list text format: first line "n m", then m lines "u v"
# ---------------------------------------------------------------------------


def parse_edgelist(text: str) -> Graph:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise BadHeaderError("empty edge-list text")
    try:
        n, m = (int(tok) for tok in lines[0].split())
    except ValueError as exc:
        raise BadHeaderError("first line must be 'n m'") from exc
    if len(lines) - 1 != m:
        raise BadLengthError(f"expected {m} edge lines, found {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        try:
            u, v = (int(tok) for tok in ln.split())
        except ValueError as exc:
            raise BadCharError(f"bad edge line: {ln!r}") from exc
        edges.append((u, v))
    return from_edge_list(n, edges)


def to_edgelist(g: Graph) -> str:
    edges = g.edges()
    out = [f"{g.n} {len(edges)}"]
    out.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(out) + "\n"


# ---------------------------------------------------------------------------
# parameters
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DegreeSummary:
    delta: int
    sigma2: float  # INFINITY when the graph is complete
    alpha: int


def minimum_degree(g: Graph) -> int:
    return min(row.bit_count() for row in g.adj)


def sigma2(g: Graph) -> float:
    """Minimum degree sum over nonadjacent pairs; INFINITY if complete."""
    best = INFINITY
    degs = [row.bit_count() for row in g.adj]
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not g.adj[u] & (1 << v):
                s = degs[u] + degs[v]
                if s < best:
                    best = s
    return best


def independence_number(g: Graph) -> int:
    """Exact independence number by branch and bound with colouring bounds.

    An independent set of g is a clique of the complement; uses the standard
    greedy-colouring upper bound on the complement.
    """
    full = g.full_mask
    cadj = tuple((~g.adj[v] & full) & ~(1 << v) for v in range(g.n))
    best = 0

    def expand(size: int, cand: int) -> None:
        nonlocal best
        if not cand:
            if size > best:
                best = size
            return
        order: list[int] = []
        col: list[int] = []
        uncoloured = cand
        colour = 0
        while uncoloured:
            colour += 1
            avail = uncoloured
            while avail:
                v = (avail & -avail).bit_length() - 1
                avail &= ~(cadj[v] | (1 << v))
                uncoloured &= ~(1 << v)
                order.append(v)
                col.append(colour)
        for i in range(len(order) - 1, -1, -1):
            if size + col[i] <= best:
                return
            v = order[i]
            expand(size + 1, cand & cadj[v])
            cand &= ~(1 << v)

    expand(0, full)
    return best


def degree_summary(g: Graph) -> DegreeSummary:
    return DegreeSummary(
        delta=minimum_degree(g), sigma2=sigma2(g), alpha=independence_number(g)
    )


# ---------------------------------------------------------------------------
# complete multipartite recognition
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class MultipartiteProfile:
    """Part sizes when the graph is complete multipartite, else absent."""

    part_sizes: Optional[tuple[int, ...]]  # sorted ascending, or None

    @property
    def present(self) -> bool:
        return self.part_sizes is not None


def _components(g: Graph) -> list[int]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen & (1 << v):
            continue
        comp = 1 << v
        frontier = 1 << v
        while frontier:
            nxt = 0
            for u in bits(frontier):
                nxt |= g.adj[u] & ~comp
            comp |= nxt
            frontier = nxt
        seen |= comp
        comps.append(comp)
    return comps


def multipartite_profile(g: Graph) -> MultipartiteProfile:
    """Recognise complete multipartite graphs via complement components.

    The graph is complete multipartite iff every component of the complement
    is a clique; the parts are exactly those components.
    """
    comp = complement(g)
    sizes = []
    for cmask in _components(comp):
        for v in bits(cmask):
            if (comp.adj[v] & cmask) != cmask & ~(1 << v):
                return MultipartiteProfile(None)
        sizes.append(cmask.bit_count())
    return MultipartiteProfile(tuple(sorted(sizes)))


# ---------------------------------------------------------------------------
# exact isomorphism at small order
# ---------------------------------------------------------------------------


def _joint_refine(g: Graph, h: Graph) -> Optional[tuple[list[int], list[int]]]:
    """Refine degree colourings of both graphs with a shared colour ranking.

    Returns None as soon as the colour multisets diverge (not isomorphic).
    """
    gc = [g.degree(v) for v in range(g.n)]
    hc = [h.degree(v) for v in range(h.n)]
    while True:
        gsig = [
            (gc[v], tuple(sorted(gc[u] for u in bits(g.adj[v])))) for v in range(g.n)
        ]
        hsig = [
            (hc[v], tuple(sorted(hc[u] for u in bits(h.adj[v])))) for v in range(h.n)
        ]
        if sorted(gsig) != sorted(hsig):
            return None
        ranking = {sig: i for i, sig in enumerate(sorted(set(gsig)))}
        new_gc = [ranking[s] for s in gsig]
        new_hc = [ranking[s] for s in hsig]
        if new_gc == gc and new_hc == hc:
            return gc, hc
        gc, hc = new_gc, new_hc


def isomorphic(g: Graph, h: Graph, max_n: int = ISO_MAX_VERTICES) -> bool:
    """Exact isomorphism test (refinement + backtracking), small n only."""
    if g.n > max_n or h.n > max_n:
        raise TooLargeError(f"isomorphism test limited to n <= {max_n}")
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    refined = _joint_refine(g, h)
    if refined is None:
        return False
    gc, hc = refined
    n = g.n
    mapping = [-1] * n
    used = 0

    def backtrack(v: int) -> bool:
        nonlocal used
        if v == n:
            return True
        for w in range(n):
            if used & (1 << w) or hc[w] != gc[v]:
                continue
            ok = True
            for u in range(v):
                if g.has_edge(v, u) != h.has_edge(w, mapping[u]):
                    ok = False
                    break
            if ok:
                mapping[v] = w
                used |= 1 << w
                if backtrack(v + 1):
                    return True
                used &= ~(1 << w)
        return False

    return backtrack(0)
