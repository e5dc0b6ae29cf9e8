"""Generators and recognizers for the two sharpness families.

Family one is the complete bipartite graph with parts 3k-1 and n-3k+1
(defined for n >= 6k-2); family two is the complete tripartite graph with
parts 3k-2, 3k-2 and 1, of order 6k-3.  Both have minimum nonadjacent
degree sum 6k-2 and neither packs k disjoint chorded cycles.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .errors import BadParamsError, BudgetExceededError
from .graph import Graph, from_edge_list, multipartite_profile
from .packing import STATUS_BUDGET, STATUS_PACKED, SolveBudget, pack_chorded

G1 = "G1"
G2 = "G2"
NEITHER = "NEITHER"


@dataclass(frozen=True)
class ExtremalTag:
    kind: str  # G1 / G2 / NEITHER
    params: Optional[tuple[int, ...]]  # (n, k) for G1, (k,) for G2


def complete_multipartite(parts: list[int]) -> Graph:
    n = sum(parts)
    edges = []
    offset = 0
    for size in parts:
        block = range(offset, offset + size)
        for u in block:
            for v in range(offset + size, n):
                edges.append((u, v))
        offset += size
    return from_edge_list(n, edges)


def gen_g1(n: int, k: int) -> Graph:
    """Complete bipartite graph with parts 3k-1 and n-3k+1."""
    if k < 2 or n < 6 * k - 2:
        raise BadParamsError(f"need k >= 2 and n >= 6k-2, got n={n}, k={k}")
    return complete_multipartite([3 * k - 1, n - 3 * k + 1])


def gen_g2(k: int) -> Graph:
    """Complete tripartite graph with parts 3k-2, 3k-2, 1 (order 6k-3)."""
    if k < 2:
        raise BadParamsError(f"need k >= 2, got k={k}")
    return complete_multipartite([3 * k - 2, 3 * k - 2, 1])


def recognize(g: Graph, k: int) -> ExtremalTag:
    """Classify g against the two families for the given k.

    Complete multipartite graphs are determined by their part-size multiset,
    so recognition reduces to the complement-component profile.
    """
    profile = multipartite_profile(g)
    if not profile.present:
        return ExtremalTag(NEITHER, None)
    sizes = profile.part_sizes
    n = g.n
    if k >= 2:
        g1_parts = tuple(sorted((3 * k - 1, n - 3 * k + 1)))
        if n >= 6 * k - 2 and len(sizes) == 2 and sizes == g1_parts:
            return ExtremalTag(G1, (n, k))
        if n == 6 * k - 3 and sizes == (1, 3 * k - 2, 3 * k - 2):
            return ExtremalTag(G2, (k,))
    return ExtremalTag(NEITHER, None)


def edge_maximality_check(
    g: Graph, k: int, budget: SolveBudget = SolveBudget()
) -> bool:
    """True iff adding any non-edge creates k disjoint chorded cycles."""
    non_edges = g.non_edges()
    if not non_edges:
        raise BadParamsError("graph is complete; no non-edges to test")
    for u, v in non_edges:
        result = pack_chorded(g.with_edge(u, v), k, budget)
        if result.status == STATUS_BUDGET:
            raise BudgetExceededError(f"budget hit while testing non-edge ({u},{v})")
        if result.status != STATUS_PACKED:
            return False
    return True
