"""Optimal (k-1)-collections and instance-level audits of structural lemmas.

A collection is optimal when it is lexicographically best for (minimum total
vertices, maximum total chords, maximum longest-path length in the
remainder).  The audits re-check the conclusions of the structural lemmas on
such a state; a violation would indicate an implementation bug, so every
audit surfaces full witnesses.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator, Optional

from .errors import (
    NoCollectionError,
    NotSpanningError,
    PreconditionError,
    TooLargeError,
)
from .graph import Graph, bits, induced, mask_of, multipartite_profile, to_graph6
from .cycles import (
    ChordedCycleCert,
    PathCert,
    contains_chorded_cycle,
    longest_path_within,
    spanning_chorded_cycle,
    spanning_path_endpoints,
    verify_chorded_cycle,
)
from .packing import SolveBudget, collection_chord_total, min_vertex_collections

RCEDGES = "RCEDGES"
C4BOUNDS = "C4BOUNDS"
NOC5 = "NOC5"
UVNHD = "UVNHD"
P2P3 = "P2P3"
HOPS = "HOPS"
PCHORDS = "PCHORDS"

ALL_LEMMAS = (RCEDGES, C4BOUNDS, NOC5, UVNHD, P2P3, HOPS, PCHORDS)

AUDIT_MAX_EXHAUSTIVE = 12
AUDIT_SAMPLE_PATHS = 2000


@dataclass(frozen=True)
class CollectionState:
    """An optimal (k-1)-collection with its remainder bookkeeping."""

    graph: Graph
    collection: tuple[ChordedCycleCert, ...]
    remainder_mask: int
    longest_path: PathCert
    endpoint_set: int  # vertices of the path that end some spanning path of it
    metric: tuple[int, int, int]  # (total vertices, total chords, path length)

    def __post_init__(self) -> None:
        g = self.graph
        used = 0
        chord_total = 0
        for cert in self.collection:
            m = cert.vertex_mask
            if used & m:
                raise PreconditionError("collection cycles overlap")
            used |= m
            if not verify_chorded_cycle(g, cert):
                raise PreconditionError("invalid chorded-cycle certificate")
            chord_total += len(cert.chords)
            incidence: dict[int, int] = {}
            for u, v in cert.chords:
                incidence[u] = incidence.get(u, 0) + 1
                incidence[v] = incidence.get(v, 0) + 1
            if any(c >= 2 for c in incidence.values()):
                raise PreconditionError("cycle vertex incident to two chords")
        if self.remainder_mask != g.full_mask & ~used:
            raise PreconditionError("remainder mask inconsistent with collection")
        if contains_chorded_cycle(g, forbidden=used):
            raise PreconditionError("remainder contains a chorded cycle")
        if self.longest_path.vertex_mask & ~self.remainder_mask:
            raise PreconditionError("longest path leaves the remainder")
        expect = (used.bit_count(), chord_total, len(self.longest_path.order))
        if self.metric != expect:
            raise PreconditionError(f"metric {self.metric} != recomputed {expect}")

    @property
    def collection_mask(self) -> int:
        return self.graph.full_mask & ~self.remainder_mask

    @property
    def two_degree_set(self) -> int:
        """Remainder vertices with exactly two remainder neighbours."""
        g, r = self.graph, self.remainder_mask
        return mask_of(v for v in bits(r) if (g.adj[v] & r).bit_count() == 2)

    @property
    def path_spans_remainder(self) -> bool:
        return self.longest_path.vertex_mask == self.remainder_mask


@dataclass
class LemmaAuditReport:
    lemma_id: str
    applicable: bool
    instances_checked: int
    violations: list[dict] = field(default_factory=list)

    def to_json_obj(self) -> dict:
        return {
            "lemma": self.lemma_id,
            "applicable": self.applicable,
            "instances_checked": self.instances_checked,
            "violations": self.violations,
        }


def optimal_collection(
    g: Graph, k: int, budget: SolveBudget = SolveBudget()
) -> CollectionState:
    """Exact lexicographic optimum over all (k-1)-collections.

    Enumerates every minimum-total-vertex collection, keeps the ones with
    maximum total chords, then maximum longest remainder path; ties broken
    by the smallest collection representation so results are deterministic.
    """
    if k < 2:
        raise PreconditionError("need k >= 2")
    total, collections, _ = min_vertex_collections(g, k - 1, budget)
    if total is None:
        raise NoCollectionError(f"no {k - 1} disjoint chorded cycles exist")
    best_chords = max(collection_chord_total(g, sets) for sets in collections)
    shortlist = [
        sets
        for sets in collections
        if collection_chord_total(g, sets) == best_chords
    ]
    scored = []
    for sets in shortlist:
        used = 0
        for s in sets:
            used |= s
        r = g.full_mask & ~used
        path = longest_path_within(g, r) if r else PathCert(())
        scored.append((len(path.order), sets, r, path))
    best_len = max(item[0] for item in scored)
    finalists = [item for item in scored if item[0] == best_len]
    finalists.sort(key=lambda item: tuple(sorted(item[1])))
    _, sets, r, path = finalists[0]
    certs = tuple(spanning_chorded_cycle(g, s) for s in sorted(sets))
    endpoint = spanning_path_endpoints(g, path) if path.order else 0
    return CollectionState(
        graph=g,
        collection=certs,
        remainder_mask=r,
        longest_path=path,
        endpoint_set=endpoint,
        metric=(total, best_chords, len(path.order)),
    )


# ---------------------------------------------------------------------------
# path enumeration helpers over the remainder
# ---------------------------------------------------------------------------


def _all_paths(g: Graph, mask: int) -> list[tuple[int, ...]]:
    """All simple paths within mask, one orientation each (first <= last)."""
    out: list[tuple[int, ...]] = []
    seq: list[int] = []

    def dfs(at: int, used: int) -> None:
        seq.append(at)
        if seq[0] <= seq[-1]:
            out.append(tuple(seq))
        for w in bits(g.adj[at] & mask & ~used):
            dfs(w, used | (1 << w))
        seq.pop()

    for v in bits(mask):
        dfs(v, 1 << v)
    return out


def _sampled_paths(g: Graph, mask: int, rng: random.Random, count: int) -> list[tuple[int, ...]]:
    """Seeded random-walk sample of simple paths within mask."""
    verts = list(bits(mask))
    out = set()
    for _ in range(count):
        v = rng.choice(verts)
        seq = [v]
        used = 1 << v
        while True:
            nbrs = list(bits(g.adj[seq[-1]] & mask & ~used))
            if not nbrs or rng.random() < 0.25:
                break
            w = rng.choice(nbrs)
            seq.append(w)
            used |= 1 << w
        if seq[0] > seq[-1]:
            seq.reverse()
        out.add(tuple(seq))
    return sorted(out)


def _spanning_paths(g: Graph, mask: int) -> list[tuple[int, ...]]:
    return [p for p in _all_paths(g, mask) if len(p) == mask.bit_count()]


# ---------------------------------------------------------------------------
# individual lemma audits
# ---------------------------------------------------------------------------


def _witness(state: CollectionState, **data) -> dict:
    out = {"graph6": to_graph6(state.graph)}
    out.update(data)
    return out


def _is_k33(g: Graph, s: int) -> bool:
    sub = induced(g, s)
    return multipartite_profile(sub).part_sizes == (3, 3)


def _is_k34(g: Graph, s: int) -> bool:
    sub = induced(g, s)
    return multipartite_profile(sub).part_sizes == (3, 4)


def _audit_rcedges(state: CollectionState) -> tuple[int, list[dict]]:
    g, r = state.graph, state.remainder_mask
    checked = 0
    violations = []
    for cert in state.collection:
        s = cert.vertex_mask
        size = s.bit_count()
        for v in bits(r):
            t = (g.adj[v] & s).bit_count()
            if t < 3:
                continue
            checked += 1
            ok = True
            if t >= 4:
                ok = t == 4 and size == 4 and g.edge_count_within(s) == 6
            else:  # t == 3
                if size == 4:
                    non_nbr = s & ~g.adj[v]
                    c = (non_nbr & -non_nbr).bit_length() - 1
                    ok = non_nbr.bit_count() == 1 and any(
                        c in e for e in cert.chords
                    )
                elif size == 5:
                    chord_ends = mask_of(x for e in cert.chords for x in e)
                    ok = len(cert.chords) == 1 and not (chord_ends & g.adj[v])
                elif size == 6:
                    ok = _is_k33(g, s) and _is_k34(g, s | (1 << v))
                else:
                    ok = False
            if not ok:
                violations.append(
                    _witness(state, vertex=v, cycle=list(cert.order), edges_to_cycle=t)
                )
    return checked, violations


def _audit_c4bounds(
    state: CollectionState, paths: list[tuple[int, ...]]
) -> tuple[int, list[dict]]:
    g = state.graph
    checked = 0
    violations = []
    long_paths = [p for p in paths if len(p) >= 4]
    for cert in state.collection:
        s = cert.vertex_mask
        is_k4 = s.bit_count() == 4 and g.edge_count_within(s) == 6
        seen_sets = set()
        for q in long_paths:
            qset = frozenset(q)
            if qset not in seen_sets:
                seen_sets.add(qset)
                for f in combinations(sorted(qset), 4):
                    checked += 1
                    total = sum((g.adj[u] & s).bit_count() for u in f)
                    if total > 12:
                        violations.append(
                            _witness(state, subset=list(f), cycle=list(cert.order))
                        )
            if is_k4:
                for v in (q[0], q[-1]):
                    if (g.adj[v] & s).bit_count() >= 3:
                        checked += 1
                        qtotal = sum((g.adj[u] & s).bit_count() for u in q)
                        bad = qtotal > 12 or (
                            qtotal == 12 and (g.adj[v] & s).bit_count() != 4
                        )
                        if bad:
                            violations.append(
                                _witness(
                                    state,
                                    path=list(q),
                                    endpoint=v,
                                    cycle=list(cert.order),
                                )
                            )
    return checked, violations


def _audit_noc5(state: CollectionState) -> tuple[int, list[dict]]:
    g, r = state.graph, state.remainder_mask
    checked = 0
    violations = []
    rv = list(bits(r))
    for cert in state.collection:
        s = cert.vertex_mask
        heavy = [v for v in rv if (g.adj[v] & s).bit_count() >= 3]
        for v1, v2 in combinations(heavy, 2):
            checked += 1
            if s.bit_count() not in (4, 6):
                violations.append(
                    _witness(state, pair=[v1, v2], cycle=list(cert.order))
                )
    return checked, violations


def _audit_uvnhd(state: CollectionState) -> tuple[int, list[dict]]:
    g, r = state.graph, state.remainder_mask
    checked = 0
    violations = []
    for cert in state.collection:
        s = cert.vertex_mask
        if s.bit_count() != 6:
            continue
        for u in bits(r):
            if (g.adj[u] & s).bit_count() != 3:
                continue
            for v in bits(g.adj[u] & r):
                if not g.adj[v] & s:
                    continue
                checked += 1
                if g.adj[u] & g.adj[v] & s:
                    violations.append(
                        _witness(state, edge=[u, v], cycle=list(cert.order))
                    )
    return checked, violations


def _audit_p2p3(
    state: CollectionState, paths: list[tuple[int, ...]]
) -> tuple[int, list[dict]]:
    g = state.graph
    checked = 0
    violations = []
    masks = [mask_of(p) for p in paths]
    for i, u_path in enumerate(paths):
        u1, u2 = u_path[0], u_path[-1]
        ends = (1 << u1) | (1 << u2)
        for j, w_path in enumerate(paths):
            if masks[i] & masks[j]:
                continue
            checked += 1
            total = sum((g.adj[e] & masks[j]).bit_count() for e in bits(ends))
            if total > 3:
                violations.append(
                    _witness(state, path_u=list(u_path), path_w=list(w_path))
                )
    return checked, violations


def _hop_pairs(g: Graph, q: tuple[int, ...]) -> list[tuple[int, int]]:
    pos = {v: i for i, v in enumerate(q)}
    s = mask_of(q)
    out = []
    for u in q:
        for v in bits(g.adj[u] & s):
            if u < v and abs(pos[u] - pos[v]) > 1:
                out.append((min(pos[u], pos[v]), max(pos[u], pos[v])))
    return sorted(set(out))


def _audit_hops(state: CollectionState) -> tuple[int, list[dict]]:
    g, r = state.graph, state.remainder_mask
    if not state.path_spans_remainder:
        return 0, []
    checked = 0
    violations = []
    for q in _spanning_paths(g, r):
        hop_list = _hop_pairs(g, q)
        incident = set()
        for i, j in hop_list:
            incident.add(i)
            incident.add(j)
        m = len(q)
        for i, j in hop_list:
            checked += 1
            bad = False
            if i + 2 < m and i + 1 in incident and i + 2 in incident:
                bad = True
            if j - 2 >= 0 and j - 1 in incident and j - 2 in incident:
                bad = True
            if bad:
                violations.append(
                    _witness(state, spanning_path=list(q), hop=[q[i], q[j]])
                )
    return checked, violations


def _remainder_is_path(g: Graph, r: int) -> bool:
    size = r.bit_count()
    if g.edge_count_within(r) != size - 1:
        return False
    return bool(_spanning_paths(g, r))


def _audit_pchords(state: CollectionState) -> tuple[int, list[dict]]:
    g, r = state.graph, state.remainder_mask
    if not state.path_spans_remainder or _remainder_is_path(g, r):
        return 0, []
    checked = 0
    violations = []
    for p in bits(state.endpoint_set):
        checked += 1
        if (g.adj[p] & r).bit_count() != 2:
            violations.append(_witness(state, endpoint=p))
    return checked, violations


_NEEDS_PATHS = {C4BOUNDS, P2P3}


def audit_lemma(
    state: CollectionState,
    lemma_id: str,
    strict: bool = True,
    seed: int = 0,
) -> LemmaAuditReport:
    """Audit one lemma's conclusion on the given optimal state.

    Quantifier domains are enumerated exhaustively while the remainder is
    small; beyond that the path domains are sampled with a seeded generator,
    which strict mode refuses.
    """
    if lemma_id not in ALL_LEMMAS:
        raise PreconditionError(f"unknown lemma id {lemma_id!r}")
    g, r = state.graph, state.remainder_mask
    paths: list[tuple[int, ...]] = []
    if lemma_id in _NEEDS_PATHS or lemma_id == HOPS:
        if r.bit_count() > AUDIT_MAX_EXHAUSTIVE:
            if strict:
                raise TooLargeError(
                    "strict mode refuses sampled audits; remainder too large"
                )
            rng = random.Random(seed)
            paths = _sampled_paths(g, r, rng, AUDIT_SAMPLE_PATHS)
        else:
            paths = _all_paths(g, r)

    if lemma_id == RCEDGES:
        checked, violations = _audit_rcedges(state)
    elif lemma_id == C4BOUNDS:
        checked, violations = _audit_c4bounds(state, paths)
    elif lemma_id == NOC5:
        checked, violations = _audit_noc5(state)
    elif lemma_id == UVNHD:
        checked, violations = _audit_uvnhd(state)
    elif lemma_id == P2P3:
        checked, violations = _audit_p2p3(state, paths)
    elif lemma_id == HOPS:
        checked, violations = _audit_hops(state)
    else:
        checked, violations = _audit_pchords(state)
    return LemmaAuditReport(
        lemma_id=lemma_id,
        applicable=checked > 0,
        instances_checked=checked,
        violations=violations,
    )


def audit_all(
    state: CollectionState, strict: bool = True, seed: int = 0
) -> list[LemmaAuditReport]:
    return [audit_lemma(state, lemma, strict=strict, seed=seed) for lemma in ALL_LEMMAS]


# ---------------------------------------------------------------------------
# remainder classification and off-path bipartite census
# ---------------------------------------------------------------------------

K22 = "K_{2,2}"
K23 = "K_{2,3}"
OTHER = "OTHER"


def remainder_profile(state: CollectionState) -> str:
    """Isomorphism class of the remainder when the longest path spans it."""
    if not state.path_spans_remainder:
        raise NotSpanningError("longest path does not span the remainder")
    profile = multipartite_profile(induced(state.graph, state.remainder_mask))
    if profile.part_sizes == (2, 2):
        return K22
    if profile.part_sizes == (2, 3):
        return K23
    return OTHER


@dataclass(frozen=True)
class OffPathCensus:
    """The split of the non-path structure into the two bipartition sides."""

    side_a: int  # collection neighbours of the path endpoint
    side_b: int  # remaining collection vertices plus degree-two remainder set
    complete_bipartite: bool
    separated: bool  # no vertex of G sees both sides

    @property
    def holds(self) -> bool:
        return self.complete_bipartite and self.separated


def offpath_census(state: CollectionState) -> OffPathCensus:
    """Bipartition census for states whose longest path misses part of R."""
    if state.path_spans_remainder:
        raise NotSpanningError("census applies only when the path misses R vertices")
    g = state.graph
    cmask = state.collection_mask
    p = state.longest_path.order[0]
    side_a = g.adj[p] & cmask
    side_b = (cmask & ~side_a) | state.two_degree_set
    complete = True
    for a in bits(side_a):
        if (g.adj[a] & side_b) != side_b:
            complete = False
        if g.adj[a] & side_a:
            complete = False
    for b in bits(side_b):
        if g.adj[b] & side_b & ~(1 << b):
            complete = False
    separated = True
    outside = g.full_mask & ~(side_a | side_b)
    for v in bits(outside):
        if g.adj[v] & side_a and g.adj[v] & side_b:
            separated = False
    return OffPathCensus(side_a, side_b, complete, separated)
