"""Generators for the named bypass-free and extremal digraph families.

Vertex numbering per family:

* ``D0``: independent part ``A`` is ``0 .. (n-1)/2``, part ``B`` follows.
* ``D1``: the shared vertex is ``0``; the ``K*_{n-k}`` block is ``0 .. n-k-1``
  and the ``K*_{k+1}`` block is ``0`` together with ``n-k .. n-1``.
* ``T5``: ``x_1 .. x_4, y`` map to ``0 .. 4``.
* ``D7``: ``x_1 .. x_6, y`` map to ``0 .. 6``.
* ``DnChords``: ``x_1 .. x_n`` map to ``0 .. n-1``.
* ``KstarPQ``: parts ``0 .. p-1`` and ``p .. p+q-1``; the ``minus-arc`` variant
  drops ``0 -> p``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .digraph import (
    ISOMORPHISM_ORDER_CAP,
    CapabilityError,
    Digraph,
    DigraphError,
    are_isomorphic,
    build_digraph,
    complete_digraph,
    directed_cycle,
)

FAMILIES = ("D0", "D1", "T5", "C3", "Cn", "KstarPQ", "KstarPQminusArc", "D7", "DnChords", "CompleteKstar")

# arc list of the order-5 tournament, in x_1..x_4, y notation
T5_ARCS = (
    ("x1", "x2"), ("x2", "x3"), ("x3", "x4"),
    ("x4", "x1"), ("x1", "y"), ("x3", "y"), ("y", "x2"), ("y", "x4"), ("x1", "x3"), ("x2", "x4"),
)


class FamilyError(DigraphError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int | None = None
    k: int | None = None
    p: int | None = None
    q: int | None = None
    b_arcs: tuple[tuple[int, int], ...] = field(default=())
    variant: str = "chain"


def _kstar_pq(p: int, q: int) -> list[tuple[int, int]]:
    arcs = []
    for u in range(p):
        for v in range(p, p + q):
            arcs += [(u, v), (v, u)]
    return arcs


def generate(spec: FamilySpec) -> Digraph:
    f = spec.family
    n = spec.n
    if f == "C3":
        return directed_cycle(3)
    if f == "Cn":
        if n is None or n < 2:
            raise FamilyError("Cn needs n >= 2")
        return directed_cycle(n)
    if f == "CompleteKstar":
        if n is None or n < 1:
            raise FamilyError("CompleteKstar needs n >= 1")
        return complete_digraph(n)
    if f == "T5":
        index = {"x1": 0, "x2": 1, "x3": 2, "x4": 3, "y": 4}
        return build_digraph(5, [(index[u], index[v]) for u, v in T5_ARCS])
    if f == "D7":
        x = list(range(6))
        y = 6
        arcs = [(x[i], x[(i + 1) % 6]) for i in range(6)]
        arcs += [(y, x[0]), (y, x[2]), (y, x[4])]
        arcs += [(x[1], y), (x[3], y), (x[5], y)]
        arcs += [(x[0], x[2]), (x[2], x[4]), (x[4], x[0])]
        return build_digraph(7, arcs)
    if f == "D0":
        if n is None or n < 5 or n % 2 == 0:
            raise FamilyError(f"D0 needs odd n >= 5, got {n}")
        a = (n + 1) // 2
        arcs = []
        for u in range(a):
            for v in range(a, n):
                arcs += [(u, v), (v, u)]
        for u, v in spec.b_arcs:
            if not (a <= u < n and a <= v < n):
                raise FamilyError(f"B-arc ({u}, {v}) must join vertices of B = [{a}, {n - 1}]")
            arcs.append((u, v))
        return build_digraph(n, arcs)
    if f == "D1":
        k = spec.k
        if n is None or n < 4:
            raise FamilyError(f"D1 needs n >= 4, got {n}")
        if k is None or not 1 <= k <= n - 2:
            raise FamilyError(f"D1 needs k in [1, {n - 2}], got {k}")
        first = range(n - k)
        second = [0] + list(range(n - k, n))
        arcs = [(u, v) for u in first for v in first if u != v]
        arcs += [(u, v) for u in second for v in second if u != v]
        return build_digraph(n, arcs)
    if f in ("KstarPQ", "KstarPQminusArc"):
        p, q = spec.p, spec.q
        if p is None or q is None or p < 1 or q < 1:
            raise FamilyError("KstarPQ needs p, q >= 1")
        arcs = _kstar_pq(p, q)
        if f == "KstarPQminusArc":
            arcs.remove((0, p))
        return build_digraph(p + q, arcs)
    if f == "DnChords":
        if n is None or n < 5:
            raise FamilyError(f"DnChords needs n >= 5, got {n}")
        if spec.variant not in ("chain", "wrap"):
            raise FamilyError(f"DnChords variant must be 'chain' or 'wrap', got {spec.variant!r}")
        arcs = [(i, (i + 1) % n) for i in range(n)]
        # chords x_1x_3, x_3x_5, ... on odd (1-based) positions
        last = n - 1 if spec.variant == "chain" else n - 2
        i = 0
        while i + 2 <= last:
            arcs.append((i, i + 2))
            i += 2
        if spec.variant == "wrap":
            arcs.append((i, 0))
        return build_digraph(n, arcs)
    raise FamilyError(f"unknown family {f!r}")


def is_tournament(D: Digraph) -> bool:
    return all(D.a(x, y) == 1 for x, y in itertools.combinations(range(D.n), 2))


def d0_b_choices(n: int) -> Iterator[tuple[tuple[int, int], ...]]:
    """Every arc subset inside ``B`` for D0 of order ``n``."""
    a = (n + 1) // 2
    pairs = [(u, v) for u in range(a, n) for v in range(a, n) if u != v]
    for mask in range(1 << len(pairs)):
        yield tuple(p for i, p in enumerate(pairs) if mask >> i & 1)


def _is_d0(D: Digraph) -> bool:
    # an independent set of size (n+1)/2 joined both ways to everything else
    n = D.n
    if n < 5 or n % 2 == 0:
        return False
    a = (n + 1) // 2
    full = (1 << n) - 1
    for A in itertools.combinations(range(n), a):
        amask = sum(1 << v for v in A)
        bmask = full & ~amask
        if all(D.out_mask(u) == bmask and D.in_mask(u) == bmask for u in A):
            return True
    return False


def family_candidates(n: int) -> Iterator[tuple[str, FamilySpec]]:
    """Every parameter instantiation of the fixed-shape families at order ``n``."""
    if n == 3:
        yield "C3", FamilySpec("C3")
    if n == 5:
        yield "T5", FamilySpec("T5")
    if n == 7:
        yield "D7", FamilySpec("D7")
    if n >= 4:
        for k in range(1, n - 1):
            yield f"D1(n={n},k={k})", FamilySpec("D1", n=n, k=k)
    for p in range(1, n // 2 + 1):
        q = n - p
        if q >= 1:
            yield f"KstarPQ({p},{q})", FamilySpec("KstarPQ", p=p, q=q)
    for p in range(1, n):
        q = n - p
        if p * q >= 1 and not (p == 1 and q == 1):
            yield f"KstarPQminusArc({p},{q})", FamilySpec("KstarPQminusArc", p=p, q=q)
    if n >= 5:
        for variant in ("chain", "wrap"):
            yield f"DnChords(n={n},{variant})", FamilySpec("DnChords", n=n, variant=variant)
    if n >= 2:
        yield f"Cn({n})", FamilySpec("Cn", n=n)
    yield f"CompleteKstar({n})", FamilySpec("CompleteKstar", n=n)


def recognize_exception(D: Digraph, families: tuple[str, ...] | None = None) -> str | None:
    """Tag of the first named family ``D`` is isomorphic to, or None.

    ``families`` restricts the search to the given family names.
    """
    if D.n > ISOMORPHISM_ORDER_CAP:
        raise CapabilityError(f"family recognition is capped at order {ISOMORPHISM_ORDER_CAP}, got {D.n}")
    if (families is None or "D0" in families) and _is_d0(D):
        return f"D0(n={D.n})"
    for tag, spec in family_candidates(D.n):
        if families is not None and spec.family not in families:
            continue
        if are_isomorphic(D, generate(spec)):
            return tag
    return None
