"""Exact search for disjoint chorded-cycle packings and mixed packings."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .errors import BadParamsError
from .graph import Graph, bits, mask_of
from .cycles import (
    ChordedCycleCert,
    chord_count,
    hamiltonian_cycle,
    spanning_chorded_cycle,
    verify_chorded_cycle,
)

PLAIN = "plain"
CHORDED = "chorded"

STATUS_PACKED = "packed"
STATUS_NONE = "none"
STATUS_BUDGET = "budget"

UNLIMITED_NODES = 1 << 62


@dataclass(frozen=True)
class SolveBudget:
    """Search-node cap and branching-order policy for one solve."""

    max_nodes: int = UNLIMITED_NODES
    deterministic: bool = True

    def __post_init__(self) -> None:
        if self.max_nodes < 1:
            raise BadParamsError("max_nodes must be >= 1")


@dataclass(frozen=True)
class PackedCycle:
    cert: ChordedCycleCert
    kind: str  # PLAIN or CHORDED

    def to_json_obj(self) -> dict:
        obj = self.cert.to_json_obj()
        obj["kind"] = self.kind
        return obj


@dataclass(frozen=True)
class PackingCert:
    cycles: tuple[PackedCycle, ...]

    @property
    def vertex_mask(self) -> int:
        m = 0
        for c in self.cycles:
            m |= c.cert.vertex_mask
        return m

    def to_json_obj(self) -> list:
        return [c.to_json_obj() for c in self.cycles]


@dataclass
class SolveResult:
    status: str  # STATUS_PACKED / STATUS_NONE / STATUS_BUDGET
    certificate: Optional[PackingCert]
    nodes_explored: int

    def to_json_obj(self) -> dict:
        return {
            "status": self.status,
            "cycles": self.certificate.to_json_obj() if self.certificate else [],
            "nodes_explored": self.nodes_explored,
        }


class _BudgetStop(Exception):
    pass


def _plain_cycle_cert(g: Graph, s: int) -> Optional[ChordedCycleCert]:
    """A spanning cycle of s packaged as a certificate (chords may be empty)."""
    seq = hamiltonian_cycle(g, s)
    if seq is None:
        return None
    m = len(seq)
    cycle_edges = {
        (min(seq[i], seq[(i + 1) % m]), max(seq[i], seq[(i + 1) % m]))
        for i in range(m)
    }
    chords = frozenset(
        (u, v)
        for u in bits(s)
        for v in bits(g.adj[u] & s)
        if u < v and (u, v) not in cycle_edges
    )
    return ChordedCycleCert(seq, chords)


def _candidate_sets(free: int, v: int, min_size: int, max_size: int) -> Iterator[int]:
    others = [u for u in bits(free) if u != v]
    for size in range(min_size, max_size + 1):
        for combo in combinations(others, size - 1):
            yield (1 << v) | mask_of(combo)


def _solve_mixed(g: Graph, r: int, k: int, budget: SolveBudget) -> SolveResult:
    nodes = 0
    max_nodes = budget.max_nodes

    def recurse(free: int, r_left: int, k_left: int) -> Optional[list[PackedCycle]]:
        nonlocal nodes
        nodes += 1
        if nodes > max_nodes:
            raise _BudgetStop
        if r_left == 0 and k_left == 0:
            return []
        need = 3 * r_left + 4 * k_left
        if free.bit_count() < need:
            return None
        v = (free & -free).bit_length() - 1
        # v belongs to some cycle of the packing: try every vertex set
        # through v that carries a spanning (chorded) cycle
        min_size = 3 if r_left else 4
        max_size = free.bit_count() - (need - min_size)
        for s in _candidate_sets(free, v, min_size, max_size):
            size = s.bit_count()
            if k_left and size >= 4:
                cert = spanning_chorded_cycle(g, s)
                if cert is not None:
                    rest = recurse(free & ~s, r_left, k_left - 1)
                    if rest is not None:
                        return [PackedCycle(cert, CHORDED)] + rest
            if r_left:
                cert = _plain_cycle_cert(g, s)
                if cert is not None:
                    rest = recurse(free & ~s, r_left - 1, k_left)
                    if rest is not None:
                        return [PackedCycle(cert, PLAIN)] + rest
        # or v belongs to no cycle
        return recurse(free & ~(1 << v), r_left, k_left)

    try:
        found = recurse(g.full_mask, r, k)
    except _BudgetStop:
        return SolveResult(STATUS_BUDGET, None, nodes)
    if found is None:
        return SolveResult(STATUS_NONE, None, nodes)
    return SolveResult(STATUS_PACKED, PackingCert(tuple(found)), nodes)


def pack_mixed(
    g: Graph, r: int, k: int, budget: SolveBudget = SolveBudget()
) -> SolveResult:
    """r disjoint plain cycles plus k disjoint chorded cycles, exactly.

    STATUS_NONE is a proof of non-existence (full exhaustion); a node-cap
    stop is reported separately so callers never mistake it for a proof.
    """
    if r < 0 or k < 0 or r + k < 1:
        raise BadParamsError("need r, k >= 0 and r + k >= 1")
    return _solve_mixed(g, r, k, budget)


def pack_chorded(g: Graph, k: int, budget: SolveBudget = SolveBudget()) -> SolveResult:
    """k pairwise disjoint chorded cycles, exactly."""
    if k < 1:
        raise BadParamsError("need k >= 1")
    return _solve_mixed(g, 0, k, budget)


def verify_packing(g: Graph, cert: PackingCert, r: int, k: int) -> bool:
    """Re-verify a packing certificate independently of the solver."""
    kinds = [c.kind for c in cert.cycles]
    if kinds.count(PLAIN) != r or kinds.count(CHORDED) != k:
        return False
    used = 0
    for c in cert.cycles:
        m = c.cert.vertex_mask
        if used & m:
            return False
        used |= m
        if c.kind == CHORDED:
            if not verify_chorded_cycle(g, c.cert):
                return False
        else:
            seq = c.cert.order
            if len(seq) < 3 or len(set(seq)) != len(seq):
                return False
            if not all(
                g.has_edge(seq[i], seq[(i + 1) % len(seq)]) for i in range(len(seq))
            ):
                return False
    return True


# ---------------------------------------------------------------------------
# minimum-total-vertex collections of m disjoint chorded cycles
# ---------------------------------------------------------------------------


def _collections_with_total(
    g: Graph, m: int, total: int, counter: list[int], max_nodes: int
) -> Iterator[tuple[int, ...]]:
    """All collections of m disjoint chorded-cycle vertex sets with the given
    total vertex count, each collection ordered by increasing minimum vertex."""

    def recurse(
        free: int, m_left: int, t_left: int, min_anchor: int
    ) -> Iterator[tuple[int, ...]]:
        counter[0] += 1
        if counter[0] > max_nodes:
            raise _BudgetStop
        if m_left == 0:
            if t_left == 0:
                yield ()
            return
        max_size = t_left - 4 * (m_left - 1)
        if max_size < 4:
            return
        anchors = [a for a in bits(free) if a >= min_anchor]
        for a in anchors:
            allowed = free & ~((1 << a) - 1)  # vertices >= a only
            for s in _candidate_sets(allowed, a, 4, max_size):
                if spanning_chorded_cycle(g, s) is None:
                    continue
                for rest in recurse(free & ~s, m_left - 1, t_left - s.bit_count(), a + 1):
                    yield (s,) + rest

    yield from recurse(g.full_mask, m, total, 0)


def min_vertex_collections(
    g: Graph, m: int, budget: SolveBudget = SolveBudget()
) -> tuple[Optional[int], list[tuple[int, ...]], int]:
    """(minimum total, all collections at that total, nodes) for m cycles.

    Iterative deepening on the total vertex count; returns (None, [], nodes)
    when no m-collection exists at all.
    """
    if m < 0:
        raise BadParamsError("need m >= 0")
    counter = [0]
    if m == 0:
        return 0, [()], 0
    try:
        for total in range(4 * m, g.n + 1):
            found = list(_collections_with_total(g, m, total, counter, budget.max_nodes))
            if found:
                return total, found, counter[0]
    except _BudgetStop:
        raise
    return None, [], counter[0]


def min_vertex_collection(
    g: Graph, m: int, budget: SolveBudget = SolveBudget()
) -> Optional[tuple[PackingCert, int]]:
    """One minimum-total-vertex collection of m disjoint chorded cycles."""
    total, collections, _ = min_vertex_collections(g, m, budget)
    if total is None:
        return None
    sets = collections[0]
    cycles = tuple(
        PackedCycle(spanning_chorded_cycle(g, s), CHORDED) for s in sets
    )
    return PackingCert(cycles), total


def collection_chord_total(g: Graph, sets: tuple[int, ...]) -> int:
    """Total chord count of a collection; independent of the cyclic orders
    chosen, since every spanning cycle of a set leaves the same number of
    induced non-cycle edges."""
    return sum(chord_count(g, s) for s in sets)
