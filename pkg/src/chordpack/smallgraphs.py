"""Isomorphism-free enumeration of small graphs by orderly generation.

A graph is canonical when no relabelling yields a lexicographically greater
upper-triangle code (column-major, as in graph6).  Deleting the last vertex
of a canonical graph leaves a canonical graph, so every class on n vertices
is reached exactly once by extending each canonical (n-1)-vertex graph with
one new last vertex and keeping the extensions that pass the canonicity test.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator

from .errors import TooLargeError
from .graph import Graph

ENUM_MAX_VERTICES = 8

# isomorphism-class totals for cross-checks
KNOWN_CLASS_COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def _column_codes(adj: tuple[int, ...], n: int) -> list[int]:
    """Column j's code: bits a[0][j]..a[j-1][j], first row most significant."""
    codes = []
    for j in range(1, n):
        c = 0
        for i in range(j):
            c = (c << 1) | ((adj[i] >> j) & 1)
        codes.append(c)
    return codes


def is_canonical(adj: tuple[int, ...], n: int) -> bool:
    """True iff the identity labelling maximises the upper-triangle code.

    Backtracks over labellings, following only permutations whose code equals
    the identity prefix and rejecting as soon as a greater column appears.
    """
    own = _column_codes(adj, n)
    placed: list[int] = []

    def descend(depth: int) -> bool:
        """Returns False when some extension beats the identity code."""
        if depth == n:
            return True
        target = own[depth - 1] if depth >= 1 else 0
        for v in range(n):
            if v in placed:
                continue
            if depth == 0:
                placed.append(v)
                if not descend(1):
                    return False
                placed.pop()
                continue
            c = 0
            row = adj[v]
            for u in placed:
                c = (c << 1) | ((row >> u) & 1)
            if c > target:
                return False
            if c == target:
                placed.append(v)
                if not descend(depth + 1):
                    return False
                placed.pop()
        return True

    return descend(0)


def _extensions(adj: tuple[int, ...], n: int) -> Iterator[tuple[int, ...]]:
    """All graphs formed by appending vertex n with an arbitrary back-mask."""
    for mask in range(1 << n):
        rows = [adj[v] | (((mask >> v) & 1) << n) for v in range(n)]
        rows.append(mask)
        yield tuple(rows)


@lru_cache(maxsize=None)
def canonical_graphs(n: int) -> tuple[Graph, ...]:
    """One canonical representative per isomorphism class on n vertices."""
    if not (1 <= n <= ENUM_MAX_VERTICES):
        raise TooLargeError(f"built-in enumerator limited to n <= {ENUM_MAX_VERTICES}")
    if n == 1:
        return (Graph(1, (0,)),)
    out = []
    for parent in canonical_graphs(n - 1):
        for adj in _extensions(parent.adj, n - 1):
            if is_canonical(adj, n):
                out.append(Graph(n, adj))
    return tuple(out)


def automorphism_count(adj: tuple[int, ...], n: int) -> int:
    """Number of labellings reproducing the identity code exactly.

    For a canonical graph this equals the automorphism group order.
    """
    own = _column_codes(adj, n)
    placed: list[int] = []
    count = 0

    def descend(depth: int) -> None:
        nonlocal count
        if depth == n:
            count += 1
            return
        target = own[depth - 1] if depth >= 1 else 0
        for v in range(n):
            if v in placed:
                continue
            if depth == 0:
                placed.append(v)
                descend(1)
                placed.pop()
                continue
            c = 0
            row = adj[v]
            for u in placed:
                c = (c << 1) | ((row >> u) & 1)
            if c == target:
                placed.append(v)
                descend(depth + 1)
                placed.pop()
        return

    descend(0)
    return count
