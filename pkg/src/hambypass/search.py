"""Exact backtracking search for cycles, Hamiltonian paths, bypasses and D(n,k).

Every search explores successors in ascending vertex order, so the first
structure found is deterministic.  Searches accept an optional node-expansion
``budget``; running out raises :class:`SearchBudgetExceeded` instead of
reporting absence.

D(n,k) is the digraph obtained from a directed n-cycle by reversing k-1
consecutive arcs.  With cycle order ``v_0 .. v_{n-1}`` and block offset ``o``,
the arcs at cycle positions ``o, o+1, .., o+k-2`` (mod n) point backwards.
Search results always use ``o = n-k+1`` so that D(n,2) reads as a Hamiltonian
path ``v_0 .. v_{n-1}`` plus the arc ``v_0 -> v_{n-1}``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .digraph import Digraph, _bits


class SearchBudgetExceeded(RuntimeError):
    """The node-expansion budget ran out before the search was decided."""


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget: int | None):
        self.left = budget

    def tick(self) -> None:
        if self.left is not None:
            self.left -= 1
            if self.left < 0:
                raise SearchBudgetExceeded("node-expansion budget exhausted")


KINDS = ("cycle", "hampath", "bypass", "dnk")


@dataclass(frozen=True)
class Certificate:
    kind: str
    order: tuple[int, ...]
    k: int | None = None
    offset: int | None = None

    def arcs(self) -> list[tuple[int, int]]:
        """Arcs the certificate asserts are present in the host digraph."""
        seq = self.order
        m = len(seq)
        if self.kind == "hampath":
            return [(seq[i], seq[i + 1]) for i in range(m - 1)]
        if self.kind == "cycle":
            return [(seq[i], seq[(i + 1) % m]) for i in range(m)]
        if self.kind == "bypass":
            return [(seq[i], seq[i + 1]) for i in range(m - 1)] + [(seq[0], seq[-1])]
        if self.kind == "dnk":
            out = []
            for j in range(m):
                u, v = seq[j], seq[(j + 1) % m]
                out.append((v, u) if (j - self.offset) % m < self.k - 1 else (u, v))
            return out
        raise ValueError(f"unknown certificate kind {self.kind!r}")

    def to_text(self) -> str:
        kind = self.kind if self.kind in ("bypass", "hampath") else f"{self.kind}:{self.k}"
        text = f"kind={kind} order={','.join(map(str, self.order))}"
        if self.kind == "dnk":
            text += f" offset={self.offset}"
        return text


def parse_certificate(text: str) -> Certificate:
    fields = {}
    for token in text.split():
        key, sep, value = token.partition("=")
        if not sep:
            raise ValueError(f"malformed certificate token {token!r}")
        fields[key] = value
    try:
        kind = fields["kind"]
        order = tuple(int(v) for v in fields["order"].split(",") if v != "")
    except (KeyError, ValueError) as exc:
        raise ValueError(f"malformed certificate {text!r}: {exc}") from None
    name, _, k = kind.partition(":")
    if name not in KINDS:
        raise ValueError(f"unknown certificate kind {kind!r}")
    offset = int(fields["offset"]) if "offset" in fields else None
    return Certificate(name, order, int(k) if k else None, offset)


def verify_certificate(D: Digraph, cert: Certificate) -> bool:
    """Check a certificate against ``D`` using only its encoded arcs and shape."""
    seq = cert.order
    m = len(seq)
    if len(set(seq)) != m or any(not isinstance(v, int) or not 0 <= v < D.n for v in seq):
        return False
    if cert.kind == "cycle":
        if cert.k is None or m != cert.k or m < 2:
            return False
    elif cert.kind == "hampath":
        if m != D.n:
            return False
    elif cert.kind == "bypass":
        if m != D.n or m < 3:
            return False
    elif cert.kind == "dnk":
        if cert.k is None or cert.offset is None or m != D.n or m < 3:
            return False
        if not 2 <= cert.k <= m or not 0 <= cert.offset < m:
            return False
    else:
        return False
    return all(D.has_arc(u, v) for u, v in cert.arcs())


# ---- cycles ------------------------------------------------------------------


def iter_cycles(D: Digraph, k: int, *, budget: int | None = None) -> Iterator[tuple[int, ...]]:
    """Every directed cycle on exactly ``k`` vertices, each listed once from its minimum vertex."""
    if not 2 <= k <= D.n:
        raise ValueError(f"cycle length must lie in [2, {D.n}], got {k}")
    tick = _Budget(budget).tick
    out = D._out
    for start in range(D.n):
        allowed = ((1 << D.n) - 1) & ~((1 << (start + 1)) - 1)
        path = [start]

        def walk(u: int, used: int) -> Iterator[tuple[int, ...]]:
            tick()
            if len(path) == k:
                if out[u] >> start & 1:
                    yield tuple(path)
                return
            for v in _bits(out[u] & allowed & ~used):
                path.append(v)
                yield from walk(v, used | 1 << v)
                path.pop()

        yield from walk(start, 1 << start)


def find_cycle_of_length(D: Digraph, k: int, *, budget: int | None = None) -> Certificate | None:
    for cyc in iter_cycles(D, k, budget=budget):
        return Certificate("cycle", cyc, k=k)
    return None


def find_ham_cycle(D: Digraph, *, budget: int | None = None) -> Certificate | None:
    if D.n < 2:
        return None
    return find_cycle_of_length(D, D.n, budget=budget)


# ---- Hamiltonian paths ---------------------------------------------------------


def _ham_paths_from(D: Digraph, s: int, tick, end_mask: int | None = None) -> Iterator[list[int]]:
    """Hamiltonian paths starting at ``s``; ``end_mask`` restricts the final vertex."""
    n = D.n
    full = (1 << n) - 1
    out = D._out
    path = [s]

    def walk(u: int, used: int) -> Iterator[list[int]]:
        tick()
        if used == full:
            if end_mask is None or end_mask >> u & 1:
                yield path
            return
        rest = full & ~used
        cand = out[u] & rest
        for v in _bits(cand):
            # the designated end vertex may only be entered last
            if end_mask is not None and end_mask.bit_count() == 1 and end_mask >> v & 1 and rest != 1 << v:
                continue
            path.append(v)
            yield from walk(v, used | 1 << v)
            path.pop()

    yield from walk(s, 1 << s)


def find_ham_path(D: Digraph, s: int | None = None, t: int | None = None, *,
                  budget: int | None = None) -> Certificate | None:
    if s is not None and s == t and D.n > 1:
        raise ValueError("start and end of a Hamiltonian path must differ")
    tick = _Budget(budget).tick
    starts = range(D.n) if s is None else [s]
    end_mask = None if t is None else 1 << t
    for start in starts:
        if t is not None and start == t and D.n > 1:
            continue
        for path in _ham_paths_from(D, start, tick, end_mask):
            return Certificate("hampath", tuple(path))
    return None


# ---- bypasses and D(n,k) ---------------------------------------------------------


def find_ham_bypass(D: Digraph, *, budget: int | None = None) -> Certificate | None:
    """Hamiltonian path ``x_1 .. x_n`` together with the arc ``x_1 -> x_n``."""
    if D.n < 3:
        raise ValueError(f"a Hamiltonian bypass needs at least 3 vertices, got {D.n}")
    tick = _Budget(budget).tick
    for s in range(D.n):
        ends = D._out[s]
        if not ends:
            continue
        for path in _ham_paths_from(D, s, tick, ends):
            return Certificate("bypass", tuple(path))
    return None


def find_dnk(D: Digraph, k: int, *, budget: int | None = None) -> Certificate | None:
    """A spanning D(n,k), reported with reversed block at offset ``n-k+1``."""
    n = D.n
    if n < 3:
        raise ValueError(f"D(n,k) needs at least 3 vertices, got {n}")
    if not 2 <= k <= n:
        raise ValueError(f"k must lie in [2, {n}], got {k}")
    tick = _Budget(budget).tick
    offset = n - k + 1
    full = (1 << n) - 1
    # step j joins position j to j+1 (mod n); backward steps form the block
    backward = [(j - offset) % n < k - 1 for j in range(n)]
    out, inn = D._out, D._in
    seq: list[int] = []

    def walk(u: int, used: int) -> Iterator[list[int]]:
        tick()
        j = len(seq) - 1
        if used == full:
            first = seq[0]
            ok = inn[u] >> first & 1 if backward[j] else out[u] >> first & 1
            if ok:
                yield seq
            return
        cand = (inn[u] if backward[j] else out[u]) & full & ~used
        for v in _bits(cand):
            seq.append(v)
            yield from walk(v, used | 1 << v)
            seq.pop()

    for s in range(n):
        seq.append(s)
        for found in walk(s, 1 << s):
            return Certificate("dnk", tuple(found), k=k, offset=offset)
        seq.pop()
    return None


def bypass_as_dnk(cert: Certificate) -> Certificate:
    return Certificate("dnk", cert.order, k=2, offset=len(cert.order) - 1)
