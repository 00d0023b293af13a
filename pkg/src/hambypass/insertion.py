"""Constructive path/cycle moves: partners, multi-insertion, cycle ladders, good cycles.

A *partner* of a path ``Q = y_1..y_s`` on a disjoint path ``P = x_1..x_t`` is an
arc ``x_i -> x_{i+1}`` of ``P`` with ``x_i -> y_1`` and ``y_s -> x_{i+1}``, so that
``Q`` can be spliced in between.  These moves are composed by
:func:`constructive_bypass` into a bypass builder that falls back to exact
search when none of them applies.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import Digraph
from .search import (
    Certificate,
    SearchBudgetExceeded,
    find_cycle_of_length,
    find_ham_bypass,
    iter_cycles,
    verify_certificate,
)

DEFAULT_STAGE2_BUDGET = 2000


@dataclass(frozen=True)
class Partner:
    path: tuple[int, ...]
    arc_index: int
    inserted: tuple[int, ...]

    def extended(self) -> tuple[int, ...]:
        i = self.arc_index
        return self.path[: i + 1] + self.inserted + self.path[i + 1:]


def _is_path(D: Digraph, seq: Sequence[int]) -> bool:
    return len(set(seq)) == len(seq) and all(D.has_arc(u, v) for u, v in zip(seq, seq[1:]))


def _check_disjoint(D: Digraph, P: Sequence[int], Q: Sequence[int]) -> None:
    if len(P) < 2:
        raise ValueError("the host path needs at least two vertices")
    if not Q:
        raise ValueError("nothing to insert")
    if set(P) & set(Q):
        raise ValueError(f"paths overlap in {sorted(set(P) & set(Q))}")
    if not _is_path(D, P):
        raise ValueError(f"{tuple(P)} is not a path of the digraph")
    if not _is_path(D, Q):
        raise ValueError(f"{tuple(Q)} is not a path of the digraph")


def _partner_index(D: Digraph, P: Sequence[int], head: int, tail: int) -> int | None:
    for i in range(len(P) - 1):
        if D.has_arc(P[i], head) and D.has_arc(tail, P[i + 1]):
            return i
    return None


def find_partner(D: Digraph, P: Sequence[int], Q: Sequence[int] | int) -> Partner | None:
    """Smallest-index partner of ``Q`` (a vertex or a path) on ``P``."""
    Q = (Q,) if isinstance(Q, int) else tuple(Q)
    P = tuple(P)
    _check_disjoint(D, P, Q)
    i = _partner_index(D, P, Q[0], Q[-1])
    return None if i is None else Partner(P, i, Q)


def partner_collection(D: Digraph, P: Sequence[int], Q: Sequence[int]) -> list[tuple[int, int, int]] | None:
    """Split ``Q`` into consecutive segments that each have a partner on ``P``.

    Returns ``(start, stop, arc_index)`` triples covering ``Q[start:stop]``,
    or None when no such segmentation exists.  Prefix DP over ``Q``; among
    valid segmentations the one whose first segments are longest wins.
    """
    s = len(Q)
    # best[j]: a segmentation of the suffix Q[j:], as (stop, arc_index) for its first piece
    best: list[tuple[int, int] | None] = [None] * (s + 1)
    reachable = [False] * (s + 1)
    reachable[s] = True
    for j in range(s - 1, -1, -1):
        for stop in range(s, j, -1):
            if not reachable[stop]:
                continue
            i = _partner_index(D, P, Q[j], Q[stop - 1])
            if i is not None:
                best[j] = (stop, i)
                reachable[j] = True
                break
    if not reachable[0]:
        return None
    segments = []
    j = 0
    while j < s:
        stop, i = best[j]
        segments.append((j, stop, i))
        j = stop
    return segments


def multi_insert(D: Digraph, P: Sequence[int], Q: Sequence[int]) -> tuple[int, ...] | None:
    """An ``(x_1, x_t)``-path on ``V(P) | V(Q)``, built from a partner collection of ``Q``."""
    P, Q = tuple(P), tuple(Q)
    _check_disjoint(D, P, Q)
    segments = partner_collection(D, P, Q)
    if segments is None:
        return None
    # Segments sharing a partner arc are merged together with everything
    # between them: x_i -> head(first) and tail(last) -> x_{i+1} still hold,
    # and Q itself supplies the arcs in between.
    merged: list[list[int]] = []  # [start, stop, arc_index]
    for start, stop, i in segments:
        for pos, seg in enumerate(merged):
            if seg[2] == i:
                merged[pos:] = [[seg[0], stop, i]]
                break
        else:
            merged.append([start, stop, i])
    by_arc = {i: Q[start:stop] for start, stop, i in merged}
    path: list[int] = []
    for idx, x in enumerate(P):
        path.append(x)
        if idx in by_arc:
            path.extend(by_arc[idx])
    result = tuple(path)
    if not (_is_path(D, result) and len(result) == len(P) + len(Q)
            and result[0] == P[0] and result[-1] == P[-1]):
        raise AssertionError(f"multi-insertion produced an invalid path {result}")
    return result


def extend_cycle_ladder(D: Digraph, C: Sequence[int], x: int) -> list[Certificate]:
    """Cycles of every length ``2..m+1`` realisable on ``V(C) | {x}``.

    A cycle ``x -> c_j -> .. -> c_{j+k-2} -> x`` of length ``k`` exists as soon
    as some ``j`` has both end arcs; when ``d(x, C) >= m+1`` pigeonhole
    guarantees one for every ``k``.  Lengths the pattern misses are retried by
    exhaustive search inside ``V(C) | {x}``.
    """
    C = tuple(C)
    m = len(C)
    if x in C:
        raise ValueError(f"vertex {x} lies on the cycle")
    if not verify_certificate(D, Certificate("cycle", C, k=m)):
        raise ValueError(f"{C} is not a cycle of the digraph")
    found: dict[int, Certificate] = {m: _normalized_cycle(C)}
    for k in range(2, m + 2):
        if k in found:
            continue
        for j in range(m):
            seg = tuple(C[(j + t) % m] for t in range(k - 1))
            if D.has_arc(x, seg[0]) and D.has_arc(seg[-1], x):
                found[k] = _normalized_cycle((x,) + seg)
                break
    local = list(C) + [x]
    sub = D.induced(local)
    for k in range(2, m + 2):
        if k not in found:
            cert = find_cycle_of_length(sub, k)
            if cert is not None:
                found[k] = _normalized_cycle(tuple(local[v] for v in cert.order))
    return [found[k] for k in sorted(found)]


def _normalized_cycle(seq: Sequence[int]) -> Certificate:
    i = seq.index(min(seq))
    seq = tuple(seq[i:]) + tuple(seq[:i])
    return Certificate("cycle", seq, k=len(seq))


def _bypass_from_cycle(D: Digraph, C: Sequence[int], y: int) -> Certificate | None:
    """Bypass through ``y`` and an (n-1)-cycle using two consecutive cycle vertices.

    ``y -> c_i, y -> c_{i+1}`` gives ``y, c_{i+1}, .., c_i`` closed by ``y -> c_i``;
    ``c_i -> y, c_{i+1} -> y`` gives ``c_{i+1}, .., c_i, y`` closed by ``c_{i+1} -> y``.
    """
    m = len(C)
    for i in range(m):
        a, b = C[i], C[(i + 1) % m]
        around = tuple(C[(i + 1 + t) % m] for t in range(m))  # c_{i+1} .. c_i
        if D.has_arc(y, a) and D.has_arc(y, b):
            return Certificate("bypass", (y,) + around)
        if D.has_arc(a, y) and D.has_arc(b, y):
            return Certificate("bypass", around + (y,))
    return None


def good_cycle_scan(D: Digraph, *, budget: int | None = None) -> Certificate | None:
    """Bypass built from an (n-1)-cycle whose missing vertex has degree at least n."""
    n = D.n
    if n < 4:
        raise ValueError(f"good-cycle scan needs order at least 4, got {n}")
    for y in range(n):
        if D.degree(y) < n:
            continue
        rest = [v for v in range(n) if v != y]
        cert = find_cycle_of_length(D.induced(rest), n - 1, budget=budget)
        if cert is None:
            continue
        C = tuple(rest[v] for v in cert.order)
        bypass = _bypass_from_cycle(D, C, y)
        # d(y) >= n forces two cyclically consecutive out- or in-neighbours
        assert bypass is not None and verify_certificate(D, bypass)
        return bypass
    return None


def _insertion_moves(D: Digraph, C: tuple[int, ...], y: int) -> Certificate | None:
    m = len(C)
    cert = _bypass_from_cycle(D, C, y)
    if cert is not None:
        return cert
    # y spliced into the path obtained by cutting C at c_i -> c_{i+1}; needs c_{i+1} -> c_i
    for i in range(m):
        a, b = C[i], C[(i + 1) % m]
        if not D.has_arc(b, a):
            continue
        P = tuple(C[(i + 1 + t) % m] for t in range(m))
        partner = _partner_index(D, P, y, y)
        if partner is not None:
            return Certificate("bypass", Partner(P, partner, (y,)).extended())
    # y -> c_s and y -> c_t: route C[c_s, c_t] through the rest of C by multi-insertion
    outs = [i for i in range(m) if D.has_arc(y, C[i])]
    ins = [i for i in range(m) if D.has_arc(C[i], y)]
    for s in outs:
        for t in outs:
            path = _route(D, C, s, t)
            if path is not None:
                return Certificate("bypass", (y,) + path)
    for s in ins:
        for t in ins:
            path = _route(D, C, s, t)
            if path is not None:
                return Certificate("bypass", path + (y,))
    return None


def _route(D: Digraph, C: tuple[int, ...], s: int, t: int) -> tuple[int, ...] | None:
    """Path from ``C[s]`` to ``C[t]`` on all of ``V(C)`` via the Multi-Insertion Lemma."""
    m = len(C)
    if s == t:
        return None
    span = (t - s) % m
    P = tuple(C[(s + j) % m] for j in range(span + 1))
    Q = tuple(C[(t + 1 + j) % m] for j in range(m - span - 1))
    if not Q:
        return P
    if len(P) < 2:
        return None
    return multi_insert(D, P, Q)


def constructive_bypass(D: Digraph, *, stage2_budget: int = DEFAULT_STAGE2_BUDGET,
                        budget: int | None = None) -> tuple[Certificate | None, str]:
    """Bypass via good cycle, then insertion moves on (n-1)-cycles, then exact search.

    Returns ``(certificate, method)`` with method ``good-cycle``, ``insertion``
    or ``fallback-exact``; the certificate is None only when exact search
    proves no bypass exists.  Order 3 has no (n-1)-cycle machinery to speak
    of and goes straight to exact search.
    """
    n = D.n
    if n < 4:
        return find_ham_bypass(D, budget=budget), "fallback-exact"
    cert = good_cycle_scan(D, budget=budget)
    if cert is not None:
        return cert, "good-cycle"
    tried = 0
    try:
        for cyc in iter_cycles(D, n - 1, budget=budget):
            y = next(v for v in range(n) if v not in cyc)
            cert = _insertion_moves(D, cyc, y)
            if cert is not None:
                assert verify_certificate(D, cert), cert
                return cert, "insertion"
            tried += 1
            if tried >= stage2_budget:
                break
    except SearchBudgetExceeded:
        pass
    return find_ham_bypass(D, budget=budget), "fallback-exact"
