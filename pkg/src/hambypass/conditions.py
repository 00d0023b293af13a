"""Degree conditions as checkable predicates with self-certifying witnesses.

Every condition quantifies a set of named inequalities ``lhs >= rhs`` over
vertices or vertex pairs.  A failing report carries the first failing
witness in lexicographic order; :func:`recheck_witness` re-evaluates the
named inequality from scratch so a report can be audited independently.

Condition tokens::

    nash-williams  ghouila-houri  woodall  meyniel  meyniel-minus-one  thm5
    bgl-star  thm12-hypothesis  thm13  thm14  oriented  strong
    min-out:k  min-in:k  min-semi:k
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, Sequence

from .digraph import Digraph, first_unreachable_pair, is_strong, reachable_mask

SIMPLE_TOKENS = (
    "nash-williams",
    "ghouila-houri",
    "woodall",
    "meyniel",
    "meyniel-minus-one",
    "thm5",
    "bgl-star",
    "thm12-hypothesis",
    "thm13",
    "thm14",
    "oriented",
    "strong",
)
PARAM_TOKENS = ("min-out", "min-in", "min-semi")


class UnknownConditionError(ValueError):
    pass


@dataclass(frozen=True)
class Condition:
    name: str
    k: int | None = None

    @property
    def token(self) -> str:
        return self.name if self.k is None else f"{self.name}:{self.k}"

    def __str__(self) -> str:
        return self.token


def parse_condition(token: str) -> Condition:
    token = token.strip().lower()
    name, sep, arg = token.partition(":")
    if name in SIMPLE_TOKENS and not sep:
        return Condition(name)
    if name in PARAM_TOKENS and sep:
        try:
            return Condition(name, int(arg))
        except ValueError:
            raise UnknownConditionError(f"bad threshold in condition {token!r}") from None
    raise UnknownConditionError(f"unknown condition {token!r}")


def parse_conditions(text: str) -> list[Condition]:
    return [parse_condition(t) for t in text.split(",") if t.strip()]


@dataclass(frozen=True)
class Witness:
    vertices: tuple[int, ...]
    inequality: str
    lhs: int
    rhs: int
    k: int | None = None

    def __str__(self) -> str:
        vs = ",".join(map(str, self.vertices))
        return f"({vs}) {self.inequality}: {self.lhs} < {self.rhs}"


@dataclass(frozen=True)
class ConditionReport:
    condition: Condition
    holds: bool
    witness: Witness | None = None

    def __bool__(self) -> bool:
        return self.holds

    def to_text(self) -> str:
        if self.holds:
            return f"{self.condition.token}: holds"
        return f"{self.condition.token}: fails witness={self.witness}"


# ---- named inequalities ------------------------------------------------------
# each maps (D, vertices, k) -> (lhs, rhs); the inequality holds iff lhs >= rhs


def _min_cross(D: Digraph, x: int, y: int) -> int:
    return min(D.out_degree(x) + D.in_degree(y), D.in_degree(x) + D.out_degree(y))


INEQUALITIES: dict[str, Callable[[Digraph, tuple[int, ...], int | None], tuple[int, int]]] = {
    "2d+(x) >= n": lambda D, v, k: (2 * D.out_degree(v[0]), D.n),
    "2d-(x) >= n": lambda D, v, k: (2 * D.in_degree(v[0]), D.n),
    "d(x) >= n": lambda D, v, k: (D.degree(v[0]), D.n),
    "d(x) >= n-1": lambda D, v, k: (D.degree(v[0]), D.n - 1),
    "2d+(x) >= n-2": lambda D, v, k: (2 * D.out_degree(v[0]), D.n - 2),
    "2d-(x) >= n-2": lambda D, v, k: (2 * D.in_degree(v[0]), D.n - 2),
    "d+(x)+d-(y) >= n": lambda D, v, k: (D.out_degree(v[0]) + D.in_degree(v[1]), D.n),
    "d(x)+d(y) >= 2n-1": lambda D, v, k: (D.degree(v[0]) + D.degree(v[1]), 2 * D.n - 1),
    "d(x)+d(y) >= 2n-2": lambda D, v, k: (D.degree(v[0]) + D.degree(v[1]), 2 * D.n - 2),
    "min{d(x),d(y)} >= n-1": lambda D, v, k: (min(D.degree(v[0]), D.degree(v[1])), D.n - 1),
    "min{d+(x)+d-(y),d-(x)+d+(y)} >= n": lambda D, v, k: (_min_cross(D, *v), D.n),
    "min{d+(x)+d-(y),d-(x)+d+(y)} >= n-1": lambda D, v, k: (_min_cross(D, *v), D.n - 1),
    "d+(x) >= k": lambda D, v, k: (D.out_degree(v[0]), k),
    "d-(x) >= k": lambda D, v, k: (D.in_degree(v[0]), k),
    "1 >= a(x,y)": lambda D, v, k: (1, D.a(*v)),
    "y reachable from x": lambda D, v, k: (reachable_mask(D, v[0]) >> v[1] & 1, 1),
}


def recheck_witness(D: Digraph, report: ConditionReport) -> bool:
    """True iff the witness of a failing report still fails its inequality on ``D``."""
    w = report.witness
    if w is None:
        return False
    lhs, rhs = INEQUALITIES[w.inequality](D, w.vertices, w.k)
    return lhs < rhs and (lhs, rhs) == (w.lhs, w.rhs)


# ---- quantifier scopes -------------------------------------------------------


def _vertices(D: Digraph) -> Iterator[tuple[int, ...]]:
    for x in range(D.n):
        yield (x,)


def _nonadjacent(D: Digraph) -> Iterator[tuple[int, ...]]:
    for x, y in itertools.combinations(range(D.n), 2):
        if not D.adjacent(x, y):
            yield (x, y)


def _nonadjacent_common_in(D: Digraph) -> Iterator[tuple[int, ...]]:
    for x, y in _nonadjacent(D):
        if D.in_mask(x) & D.in_mask(y):
            yield (x, y)


def _nonadjacent_common_either(D: Digraph) -> Iterator[tuple[int, ...]]:
    for x, y in _nonadjacent(D):
        if D.in_mask(x) & D.in_mask(y) or D.out_mask(x) & D.out_mask(y):
            yield (x, y)


def _no_arc_ordered(D: Digraph) -> Iterator[tuple[int, ...]]:
    for x in range(D.n):
        for y in range(D.n):
            if x != y and not D.has_arc(x, y):
                yield (x, y)


def _all_pairs(D: Digraph) -> Iterator[tuple[int, ...]]:
    return iter(itertools.combinations(range(D.n), 2))


# condition name -> (scope, inequalities checked in order for each scoped tuple)
_SPECS: dict[str, tuple[Callable[[Digraph], Iterator[tuple[int, ...]]], tuple[str, ...]]] = {
    "nash-williams": (_vertices, ("2d+(x) >= n", "2d-(x) >= n")),
    "ghouila-houri": (_vertices, ("d(x) >= n",)),
    "woodall": (_no_arc_ordered, ("d+(x)+d-(y) >= n",)),
    "meyniel": (_nonadjacent, ("d(x)+d(y) >= 2n-1",)),
    "meyniel-minus-one": (_nonadjacent, ("d(x)+d(y) >= 2n-2",)),
    "thm5": (_vertices, ("d(x) >= n-1", "2d+(x) >= n-2", "2d-(x) >= n-2")),
    "bgl-star": (_nonadjacent_common_in, ("min{d(x),d(y)} >= n-1", "d(x)+d(y) >= 2n-1")),
    "thm13": (_nonadjacent_common_either, ("min{d+(x)+d-(y),d-(x)+d+(y)} >= n",)),
    "thm14": (_nonadjacent_common_either, ("d(x)+d(y) >= 2n-1", "min{d+(x)+d-(y),d-(x)+d+(y)} >= n-1")),
    "min-out": (_vertices, ("d+(x) >= k",)),
    "min-in": (_vertices, ("d-(x) >= k",)),
    "min-semi": (_vertices, ("d+(x) >= k", "d-(x) >= k")),
    "oriented": (_all_pairs, ("1 >= a(x,y)",)),
}

# conjunctions, evaluated left to right (cheap degree bounds first)
COMPOSITES: dict[str, tuple[Condition, ...]] = {
    "thm12-hypothesis": (Condition("min-out", 2), Condition("min-in", 3), Condition("strong"), Condition("bgl-star")),
}


def check_condition(D: Digraph, c: Condition | str) -> ConditionReport:
    if isinstance(c, str):
        c = parse_condition(c)
    if c.name in COMPOSITES:
        for part in COMPOSITES[c.name]:
            sub = check_condition(D, part)
            if not sub.holds:
                return ConditionReport(c, False, sub.witness)
        return ConditionReport(c, True)
    if c.name == "strong":
        pair = None if is_strong(D) else first_unreachable_pair(D)
        if pair is None:
            return ConditionReport(c, True)
        return ConditionReport(c, False, Witness(pair, "y reachable from x", 0, 1))
    try:
        scope, checks = _SPECS[c.name]
    except KeyError:
        raise UnknownConditionError(f"unknown condition {c.token!r}") from None
    if c.name in PARAM_TOKENS and c.k is None:
        raise UnknownConditionError(f"condition {c.name!r} needs a threshold, e.g. {c.name}:2")
    for verts in scope(D):
        for name in checks:
            lhs, rhs = INEQUALITIES[name](D, verts, c.k)
            if lhs < rhs:
                return ConditionReport(c, False, Witness(verts, name, lhs, rhs, c.k))
    return ConditionReport(c, True)


def holds(D: Digraph, c: Condition | str) -> bool:
    return check_condition(D, c).holds


def holds_all(D: Digraph, conditions: Sequence[Condition | str]) -> bool:
    return all(check_condition(D, c).holds for c in conditions)


def thm9_threshold(n: int) -> int:
    """Integer semi-degree bound ``ceil((n-3)/2)`` for the oriented-graph D(n,3) theorem."""
    return -(-(n - 3) // 2)
