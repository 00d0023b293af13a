"""Immutable loop-free digraphs on vertices ``0..n-1``.

Adjacency is held as one out-neighbour bitmask and one in-neighbour bitmask
per vertex, so degree queries are popcounts and reachability is a handful of
integer ORs.  Vertex ``x_i`` of the usual 1-based notation is index ``i - 1``.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

ISOMORPHISM_ORDER_CAP = 10


class DigraphError(ValueError):
    """Invalid construction input (loop, out-of-range endpoint, bad order)."""


class DigraphFormatError(DigraphError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapabilityError(RuntimeError):
    """Request exceeds a documented size cap."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Digraph:
    __slots__ = ("n", "_out", "_in")

    def __init__(self, n: int, out_masks: Sequence[int]):
        # Trusted fast path: callers guarantee len(out_masks) == n and no loops.
        self.n = n
        self._out = tuple(out_masks)
        inn = [0] * n
        for u, row in enumerate(self._out):
            for v in _bits(row):
                inn[v] |= 1 << u
        self._in = tuple(inn)

    # ---- adjacency ---------------------------------------------------------

    def has_arc(self, u: int, v: int) -> bool:
        return bool(self._out[u] >> v & 1)

    def out_mask(self, u: int) -> int:
        return self._out[u]

    def in_mask(self, u: int) -> int:
        return self._in[u]

    def successors(self, u: int) -> list[int]:
        return list(_bits(self._out[u]))

    def predecessors(self, u: int) -> list[int]:
        return list(_bits(self._in[u]))

    def arcs(self) -> list[tuple[int, int]]:
        """All arcs in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in _bits(self._out[u])]

    @property
    def arc_count(self) -> int:
        return sum(row.bit_count() for row in self._out)

    @property
    def adj(self) -> tuple[tuple[bool, ...], ...]:
        return tuple(
            tuple(bool(row >> v & 1) for v in range(self.n)) for row in self._out
        )

    def a(self, x: int, y: int) -> int:
        """Number of arcs between ``x`` and ``y`` (0, 1 or 2)."""
        return (self._out[x] >> y & 1) + (self._out[y] >> x & 1)

    def adjacent(self, x: int, y: int) -> bool:
        return bool((self._out[x] | self._in[x]) >> y & 1)

    # ---- degrees -----------------------------------------------------------

    def out_degree(self, x: int) -> int:
        return self._out[x].bit_count()

    def in_degree(self, x: int) -> int:
        return self._in[x].bit_count()

    def degree(self, x: int) -> int:
        return self._out[x].bit_count() + self._in[x].bit_count()

    def degree_to(self, x: int, vertices: Iterable[int]) -> int:
        """d(x, S): arcs between ``x`` and the vertex set ``S`` in either direction."""
        mask = 0
        for v in vertices:
            mask |= 1 << v
        return (self._out[x] & mask).bit_count() + (self._in[x] & mask).bit_count()

    # ---- derived digraphs --------------------------------------------------

    def reverse(self) -> Digraph:
        return Digraph(self.n, self._in)

    def relabel(self, perm: Sequence[int]) -> Digraph:
        """Image under the vertex map ``u -> perm[u]``."""
        out = [0] * self.n
        for u, v in self.arcs():
            out[perm[u]] |= 1 << perm[v]
        return Digraph(self.n, out)

    def induced(self, vertices: Sequence[int]) -> Digraph:
        """Induced subdigraph; vertex ``vertices[i]`` becomes ``i``."""
        index = {v: i for i, v in enumerate(vertices)}
        out = [0] * len(vertices)
        for i, u in enumerate(vertices):
            for v in _bits(self._out[u]):
                j = index.get(v)
                if j is not None:
                    out[i] |= 1 << j
        return Digraph(len(vertices), out)

    def with_arcs(self, add: Iterable[tuple[int, int]] = (), remove: Iterable[tuple[int, int]] = ()) -> Digraph:
        out = list(self._out)
        for u, v in add:
            _check_arc(self.n, u, v)
            out[u] |= 1 << v
        for u, v in remove:
            out[u] &= ~(1 << v)
        return Digraph(self.n, out)

    # ---- dunder ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Digraph):
            return NotImplemented
        return self.n == other.n and self._out == other._out

    def __hash__(self) -> int:
        return hash((self.n, self._out))

    def __repr__(self) -> str:
        return f"Digraph(n={self.n}, arcs={self.arcs()})"


def _check_arc(n: int, u: int, v: int) -> None:
    if not (0 <= u < n and 0 <= v < n):
        raise DigraphError(f"arc ({u}, {v}) has an endpoint outside [0, {n - 1}]")
    if u == v:
        raise DigraphError(f"loop arc ({u}, {u}) is not allowed")


def build_digraph(n: int, arcs: Iterable[tuple[int, int]]) -> Digraph:
    """Digraph on ``n`` vertices with the given arcs; duplicates collapse."""
    if n < 1:
        raise DigraphError(f"order must be at least 1, got {n}")
    out = [0] * n
    for u, v in arcs:
        _check_arc(n, u, v)
        out[u] |= 1 << v
    return Digraph(n, out)


def complete_digraph(n: int) -> Digraph:
    full = (1 << n) - 1
    return Digraph(n, [full & ~(1 << u) for u in range(n)])


def directed_cycle(n: int) -> Digraph:
    return build_digraph(n, [(i, (i + 1) % n) for i in range(n)])


def directed_path(n: int) -> Digraph:
    return build_digraph(n, [(i, i + 1) for i in range(n - 1)])


@dataclass(frozen=True)
class DegreeProfile:
    out_degree: tuple[int, ...]
    in_degree: tuple[int, ...]

    @property
    def degree(self) -> tuple[int, ...]:
        return tuple(o + i for o, i in zip(self.out_degree, self.in_degree))

    @property
    def min_out(self) -> int:
        return min(self.out_degree)

    @property
    def min_in(self) -> int:
        return min(self.in_degree)

    @property
    def min_semi(self) -> int:
        return min(self.min_out, self.min_in)

    @property
    def min_degree(self) -> int:
        return min(self.degree)


def degree_profile(D: Digraph) -> DegreeProfile:
    return DegreeProfile(
        tuple(D.out_degree(x) for x in range(D.n)),
        tuple(D.in_degree(x) for x in range(D.n)),
    )


# ---- reachability ------------------------------------------------------------


def reachable_mask(D: Digraph, source: int, *, backward: bool = False, avoid: int = 0) -> int:
    """Bitmask of vertices reachable from ``source`` (including it).

    Vertices in the ``avoid`` mask are treated as deleted.
    """
    rows = D._in if backward else D._out
    seen = 1 << source
    frontier = seen
    while frontier:
        nxt = 0
        for u in _bits(frontier):
            nxt |= rows[u]
        nxt &= ~seen & ~avoid
        seen |= nxt
        frontier = nxt
    return seen


def is_strong(D: Digraph) -> bool:
    full = (1 << D.n) - 1
    return reachable_mask(D, 0) == full and reachable_mask(D, 0, backward=True) == full


def is_strong_avoiding(D: Digraph, avoid: int) -> bool:
    """Strong connectivity of ``D`` minus the vertices in ``avoid``."""
    keep = ((1 << D.n) - 1) & ~avoid
    if not keep:
        return False
    root = (keep & -keep).bit_length() - 1
    return (
        reachable_mask(D, root, avoid=avoid) == keep
        and reachable_mask(D, root, backward=True, avoid=avoid) == keep
    )


def is_strongly_2_connected(D: Digraph) -> bool:
    """Strong, with at least three vertices, and strong after deleting any one vertex."""
    if D.n < 3 or not is_strong(D):
        return False
    return all(is_strong_avoiding(D, 1 << v) for v in range(D.n))


def first_unreachable_pair(D: Digraph) -> tuple[int, int] | None:
    for x in range(D.n):
        reach = reachable_mask(D, x)
        for y in range(D.n):
            if not reach >> y & 1:
                return (x, y)
    return None


# ---- dominated pairs ---------------------------------------------------------


@dataclass(frozen=True)
class DominatedPair:
    x: int
    y: int
    common_in: tuple[int, ...]
    common_out: tuple[int, ...]
    adjacency_count: int


def dominated_nonadjacent_pairs(D: Digraph, mode: str = "in") -> list[DominatedPair]:
    """Non-adjacent pairs ``x < y`` sharing an in-neighbour, an out-neighbour, or either."""
    if mode not in ("in", "out", "either"):
        raise ValueError(f"mode must be 'in', 'out' or 'either', got {mode!r}")
    pairs = []
    for x, y in itertools.combinations(range(D.n), 2):
        if D.adjacent(x, y):
            continue
        cin = D._in[x] & D._in[y]
        cout = D._out[x] & D._out[y]
        keep = {"in": cin, "out": cout, "either": cin | cout}[mode]
        if keep:
            pairs.append(DominatedPair(x, y, tuple(_bits(cin)), tuple(_bits(cout)), 0))
    return pairs


# ---- isomorphism -------------------------------------------------------------


def find_isomorphism(D1: Digraph, D2: Digraph, cap: int = ISOMORPHISM_ORDER_CAP) -> tuple[int, ...] | None:
    """A permutation ``p`` with ``u -> v`` in D1 iff ``p[u] -> p[v]`` in D2, or None.

    Backtracking over vertices of D1 in order, restricted to targets with the
    same (out, in) degree and consistent with every already-mapped vertex.
    """
    if D1.n != D2.n:
        return None
    n = D1.n
    if n > cap:
        raise CapabilityError(f"isomorphism test is capped at order {cap}, got {n}")
    if D1.arc_count != D2.arc_count:
        return None
    sig1 = [(D1.out_degree(v), D1.in_degree(v)) for v in range(n)]
    sig2 = [(D2.out_degree(v), D2.in_degree(v)) for v in range(n)]
    if sorted(sig1) != sorted(sig2):
        return None
    candidates = [[w for w in range(n) if sig2[w] == sig1[v]] for v in range(n)]
    # most constrained vertices first
    order = sorted(range(n), key=lambda v: len(candidates[v]))
    perm = [-1] * n
    used = 0

    def extend(depth: int) -> bool:
        nonlocal used
        if depth == n:
            return True
        u = order[depth]
        for w in candidates[u]:
            if used >> w & 1:
                continue
            ok = True
            for prev in order[:depth]:
                pw = perm[prev]
                if D1.has_arc(u, prev) != D2.has_arc(w, pw) or D1.has_arc(prev, u) != D2.has_arc(pw, w):
                    ok = False
                    break
            if ok:
                perm[u] = w
                used |= 1 << w
                if extend(depth + 1):
                    return True
                used &= ~(1 << w)
                perm[u] = -1
        return False

    return tuple(perm) if extend(0) else None


def are_isomorphic(D1: Digraph, D2: Digraph, cap: int = ISOMORPHISM_ORDER_CAP) -> bool:
    return find_isomorphism(D1, D2, cap) is not None


# ---- text format -------------------------------------------------------------


def to_text(D: Digraph) -> str:
    lines = [f"n {D.n}"]
    lines.extend(f"{u} {v}" for u, v in D.arcs())
    return "\n".join(lines) + "\n"


def from_text(text: str) -> Digraph:
    n = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise DigraphFormatError("expected header 'n <order>'", lineno)
            try:
                n = int(parts[1])
            except ValueError:
                raise DigraphFormatError(f"order {parts[1]!r} is not an integer", lineno) from None
            if n < 1:
                raise DigraphFormatError(f"order must be at least 1, got {n}", lineno)
            continue
        if len(parts) != 2:
            raise DigraphFormatError(f"expected '<u> <v>', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise DigraphFormatError(f"non-integer endpoint in {line!r}", lineno) from None
        try:
            _check_arc(n, u, v)
        except DigraphError as exc:
            raise DigraphFormatError(str(exc), lineno) from None
        arcs.append((u, v))
    if n is None:
        raise DigraphFormatError("missing header 'n <order>'")
    return build_digraph(n, arcs)


def to_structured(D: Digraph) -> dict:
    return {"n": D.n, "arcs": [list(a) for a in D.arcs()]}


def from_structured(data: dict) -> Digraph:
    try:
        return build_digraph(int(data["n"]), [(int(u), int(v)) for u, v in data["arcs"]])
    except (KeyError, TypeError) as exc:
        raise DigraphFormatError(f"malformed structured digraph: {exc}") from None
