"""Exhaustive and sampled verification of theorem statements over small digraphs.

Exhaustive mode walks every labeled loop-free digraph of order ``n`` (arc-set
bitmask ascending, bit ``i`` is the ``i``-th ordered pair in lexicographic
order) and keeps the strong ones.  Sampled mode draws seeded random digraphs,
optionally rejection-sampled towards a target condition.
"""
from __future__ import annotations

import functools
import json
import random
import time
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Iterator, Sequence

from .conditions import Condition, holds_all, parse_condition
from .digraph import (
    CapabilityError,
    Digraph,
    from_text,
    is_strong,
    is_strongly_2_connected,
    are_isomorphic,
    to_text,
)
from .families import recognize_exception
from .search import (
    Certificate,
    SearchBudgetExceeded,
    find_cycle_of_length,
    find_dnk,
    find_ham_bypass,
    find_ham_cycle,
    verify_certificate,
)

EXHAUSTIVE_ORDER_CAP = 5
DEFAULT_REJECTION_BUDGET = 10**6
ISO_DEDUPE_CAP = 7


class BudgetExhausted(RuntimeError):
    pass


# ---- enumeration -------------------------------------------------------------


def _row_tables(n: int) -> list[tuple[int, list[int]]]:
    """Per vertex ``u``: bit offset into the arc mask and a table chunk -> out-row."""
    tables = []
    others_per_u = [[v for v in range(n) if v != u] for u in range(n)]
    for u, others in enumerate(others_per_u):
        table = []
        for chunk in range(1 << (n - 1)):
            row = 0
            for b, v in enumerate(others):
                if chunk >> b & 1:
                    row |= 1 << v
            table.append(row)
        tables.append((u * (n - 1), table))
    return tables


@functools.lru_cache(maxsize=None)
def _strong_rows(n: int) -> tuple[tuple[int, ...], ...]:
    if n == 1:
        return ((0,),)
    tables = _row_tables(n)
    chunk_mask = (1 << (n - 1)) - 1
    full = (1 << n) - 1
    found = []
    for mask in range(1 << (n * (n - 1))):
        rows = [table[mask >> off & chunk_mask] for off, table in tables]
        # forward and backward closure from vertex 0
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            u = 0
            f = frontier
            while f:
                if f & 1:
                    nxt |= rows[u]
                f >>= 1
                u += 1
            frontier = nxt & ~seen
            seen |= nxt
        if seen != full:
            continue
        inn = [0] * n
        for u, row in enumerate(rows):
            v = 0
            while row:
                if row & 1:
                    inn[v] |= 1 << u
                row >>= 1
                v += 1
        seen = 1
        frontier = 1
        while frontier:
            nxt = 0
            u = 0
            f = frontier
            while f:
                if f & 1:
                    nxt |= inn[u]
                f >>= 1
                u += 1
            frontier = nxt & ~seen
            seen |= nxt
        if seen == full:
            found.append(tuple(rows))
    return tuple(found)


def enumerate_strong_digraphs(n: int, filter: Sequence[Condition | str] = ()) -> Iterator[Digraph]:
    """Every labeled strong digraph of order ``n`` passing all ``filter`` conditions."""
    if n < 1:
        raise ValueError(f"order must be at least 1, got {n}")
    if n > EXHAUSTIVE_ORDER_CAP:
        raise CapabilityError(
            f"exhaustive enumeration is capped at order {EXHAUSTIVE_ORDER_CAP}; use sampled mode for n={n}"
        )
    conds = [parse_condition(c) if isinstance(c, str) else c for c in filter]
    for rows in _strong_rows(n):
        D = Digraph(n, rows)
        if not conds or holds_all(D, conds):
            yield D


def count_labeled_candidates(n: int) -> int:
    return 1 << (n * (n - 1))


# ---- sampling ----------------------------------------------------------------


@dataclass
class SampleStats:
    attempts: int = 0
    accepted: int = 0

    @property
    def acceptance_rate(self) -> float:
        return self.accepted / self.attempts if self.attempts else 0.0


def random_digraph(n: int, p: float, rng: random.Random) -> Digraph:
    out = [0] * n
    for u in range(n):
        for v in range(n):
            if u != v and rng.random() < p:
                out[u] |= 1 << v
    return Digraph(n, out)


def sample_digraphs(n: int, count: int, seed: int, arc_probability: float = 0.5,
                    condition: Sequence[Condition | str] = (), *, strong: bool = False,
                    rejection_budget: int = DEFAULT_REJECTION_BUDGET,
                    stats: SampleStats | None = None) -> Iterator[Digraph]:
    """Reproducible stream of ``count`` random digraphs.

    With ``condition`` (and/or ``strong``) each emission is rejection-sampled
    until it passes; ``rejection_budget`` attempts without success raise
    :class:`BudgetExhausted`.
    """
    if count < 1:
        raise ValueError("count must be at least 1")
    conds = [parse_condition(c) if isinstance(c, str) else c for c in condition]
    rng = random.Random(seed)
    stats = stats if stats is not None else SampleStats()
    for _ in range(count):
        for _attempt in range(rejection_budget):
            stats.attempts += 1
            D = random_digraph(n, arc_probability, rng)
            if strong and not is_strong(D):
                continue
            if conds and not holds_all(D, conds):
                continue
            stats.accepted += 1
            yield D
            break
        else:
            raise BudgetExhausted(
                f"no digraph passed {[c.token for c in conds]} in {rejection_budget} attempts "
                f"(acceptance so far {stats.accepted}/{stats.attempts})"
            )


# ---- conclusions -------------------------------------------------------------


def _cycle(D: Digraph, k: int, budget) -> Certificate | None:
    return find_cycle_of_length(D, k, budget=budget) if 2 <= k <= D.n else None


def _first(*finders: Callable[[Digraph, int | None], Certificate | None]):
    def find(D: Digraph, budget: int | None = None) -> Certificate | None:
        for f in finders:
            cert = f(D, budget)
            if cert is not None:
                return cert
        return None

    return find


CONCLUSIONS: dict[str, Callable[[Digraph, int | None], Certificate | None]] = {
    "hamiltonian": lambda D, budget=None: find_ham_cycle(D, budget=budget),
    "bypass": lambda D, budget=None: find_ham_bypass(D, budget=budget),
    "dnk:3": lambda D, budget=None: find_dnk(D, 3, budget=budget),
    "pre-hamiltonian": lambda D, budget=None: _cycle(D, D.n - 1, budget),
    "pre-hamiltonian-or-n-2": _first(
        lambda D, budget: _cycle(D, D.n - 1, budget), lambda D, budget: _cycle(D, D.n - 2, budget)
    ),
}


def conclusion_certificate(D: Digraph, conclusion: str, budget: int | None = None) -> Certificate | None:
    """Verified certificate for ``conclusion`` on ``D``, or None when absent."""
    name, _, arg = conclusion.partition(":")
    if name == "dnk" and arg:
        cert = find_dnk(D, int(arg), budget=budget)
    elif name == "cycle" and arg:
        cert = _cycle(D, int(arg), budget)
    else:
        try:
            find = CONCLUSIONS[conclusion]
        except KeyError:
            raise ValueError(f"unknown conclusion {conclusion!r}") from None
        cert = find(D, budget)
    if cert is not None and not verify_certificate(D, cert):
        raise AssertionError(f"search returned an invalid certificate {cert.to_text()}")
    return cert


def conclusion_holds(D: Digraph, conclusion: str, budget: int | None = None) -> bool:
    return conclusion_certificate(D, conclusion, budget) is not None


# ---- theorems ----------------------------------------------------------------


def _is_directed_cycle(D: Digraph) -> bool:
    return D.arc_count == D.n and is_strong(D)


def _bipartite_half(D: Digraph, minus_arc: bool) -> bool:
    from .families import FamilySpec, generate

    n = D.n
    if n % 2 or n < 2:
        return False
    h = n // 2
    if are_isomorphic(D, generate(FamilySpec("KstarPQ", p=h, q=h))):
        return True
    return minus_arc and are_isomorphic(D, generate(FamilySpec("KstarPQminusArc", p=h, q=h)))


_THM7_FAMILIES = ("D0", "D1", "T5", "C3")


def _thm7_exception(D: Digraph) -> bool:
    # D1's gluing of K*_2 with K*_2 also exists at order 3 and has no bypass
    if D.n == 3:
        from .families import FamilySpec, generate

        return are_isomorphic(D, generate(FamilySpec("KstarPQ", p=1, q=2))) or recognize_exception(D, ("C3",)) is not None
    return recognize_exception(D, _THM7_FAMILIES) is not None


@dataclass(frozen=True)
class Theorem:
    name: str
    min_order: int
    hypothesis: tuple[Condition, ...]
    conclusion: str
    structural: Callable[[Digraph], bool] | None = None
    exception: Callable[[Digraph], bool] | None = None
    description: str = ""

    def hypothesis_holds(self, D: Digraph) -> bool:
        if D.n < self.min_order:
            return False
        if self.structural is not None and not self.structural(D):
            return False
        return holds_all(D, self.hypothesis)

    def is_exception(self, D: Digraph) -> bool:
        return self.exception is not None and self.exception(D)


def _conds(*tokens: str) -> tuple[Condition, ...]:
    return tuple(parse_condition(t) for t in tokens)


THEOREMS: dict[str, Theorem] = {
    t.name: t
    for t in [
        Theorem("thm1", 2, _conds("nash-williams"), "hamiltonian",
                description="semi-degrees >= n/2 => Hamiltonian"),
        Theorem("thm2", 2, _conds("strong", "ghouila-houri"), "hamiltonian",
                description="strong, d(x) >= n => Hamiltonian"),
        Theorem("thm3", 2, _conds("woodall"), "hamiltonian",
                description="d+(x)+d-(y) >= n when x-/->y => Hamiltonian"),
        Theorem("thm4", 2, _conds("strong", "meyniel"), "hamiltonian",
                description="strong, Meyniel => Hamiltonian"),
        Theorem("thm6", 3, _conds("strong"), "bypass",
                structural=lambda D: is_strongly_2_connected(D) and min(D.degree(x) for x in range(D.n)) >= D.n - 1,
                exception=lambda D: recognize_exception(D, ("D0",)) is not None,
                description="strongly 2-connected, min degree >= n-1 => bypass unless D0"),
        Theorem("thm7", 3, _conds("strong", "meyniel-minus-one"), "bypass",
                exception=_thm7_exception,
                description="strong, d(x)+d(y) >= 2n-2 => bypass unless D0, D1, T5, C3"),
        Theorem("thm8", 4, _conds("strong", "meyniel"), "dnk:3",
                description="strong, Meyniel => D(n,3)"),
        Theorem("thm10", 2, _conds("strong", "bgl-star"), "hamiltonian",
                description="strong, (*) => Hamiltonian"),
        Theorem("thm11", 3, _conds("min-semi:2", "strong", "bgl-star"), "pre-hamiltonian",
                exception=lambda D: _bipartite_half(D, minus_arc=True),
                description="strong, semi-degree >= 2, (*) => (n-1)-cycle unless K*_{n/2,n/2} (minus an arc)"),
        Theorem("thm12", 4, _conds("thm12-hypothesis"), "bypass",
                description="strong, d+ >= 2, d- >= 3, (*) => bypass"),
        Theorem("thm13", 3, _conds("strong", "thm13"), "hamiltonian",
                description="strong, two-sided cross-degree >= n on dominated pairs => Hamiltonian"),
        Theorem("thm14", 3, _conds("strong", "thm14"), "hamiltonian",
                description="strong, degree-sum and cross-degree bounds on dominated pairs => Hamiltonian"),
        Theorem("thm15", 4, _conds("strong", "thm13"), "pre-hamiltonian",
                structural=lambda D: not _is_directed_cycle(D),
                exception=lambda D: _bipartite_half(D, minus_arc=False),
                description="as thm13, not a cycle => (n-1)-cycle unless K*_{n/2,n/2}"),
        Theorem("thm16", 4, _conds("strong", "thm14"), "pre-hamiltonian-or-n-2",
                structural=lambda D: not _is_directed_cycle(D),
                description="as thm14, not a cycle => (n-1)- or (n-2)-cycle"),
    ]
}


def get_theorem(name: str) -> Theorem:
    try:
        return THEOREMS[name.lower()]
    except KeyError:
        raise ValueError(f"unknown theorem {name!r}; choose from {', '.join(THEOREMS)}") from None


# ---- verdicts ----------------------------------------------------------------


@dataclass
class Verdict:
    claim: str
    hypothesis: list[str]
    conclusion: str
    orders: list[int]
    mode: str
    seed: int | None = None
    count: int | None = None
    instances_checked: int = 0
    hypothesis_hits: int = 0
    exceptions: int = 0
    unknown: int = 0
    violations: list[str] = field(default_factory=list)
    complete: bool = True
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return self.complete and not self.violations and not self.unknown

    def key(self) -> tuple:
        """Everything except wall-clock time, for determinism comparisons."""
        d = asdict(self)
        d.pop("elapsed")
        return tuple((k, json.dumps(v, sort_keys=True)) for k, v in sorted(d.items()))

    def merge(self, other: Verdict) -> Verdict:
        return Verdict(
            self.claim, self.hypothesis, self.conclusion,
            sorted(set(self.orders) | set(other.orders)), self.mode, self.seed, self.count,
            self.instances_checked + other.instances_checked,
            self.hypothesis_hits + other.hypothesis_hits,
            self.exceptions + other.exceptions,
            self.unknown + other.unknown,
            self.violations + other.violations,
            self.complete and other.complete,
            self.elapsed + other.elapsed,
        )

    def to_text(self) -> str:
        lines = [
            f"claim: {self.claim}",
            f"hypothesis: {' & '.join(self.hypothesis) or '-'}",
            f"conclusion: {self.conclusion}",
            f"orders: {','.join(map(str, self.orders))}",
            f"mode: {self.mode}" + (f" count={self.count} seed={self.seed}" if self.mode == "sample" else ""),
            f"instances_checked: {self.instances_checked}",
            f"hypothesis_hits: {self.hypothesis_hits}",
            f"exceptions: {self.exceptions}",
            f"unknown: {self.unknown}",
            f"complete: {'yes' if self.complete else 'no'}",
            f"violations: {len(self.violations)}",
            f"elapsed: {self.elapsed:.3f}s",
        ]
        for i, text in enumerate(self.violations):
            lines.append(f"# violation {i}")
            lines.append(text.rstrip("\n"))
        return "\n".join(lines) + "\n"

    def to_structured(self) -> str:
        return json.dumps(asdict(self), indent=2, sort_keys=True)


def _instances(orders: Iterable[int], mode: str, count: int | None, seed: int | None,
               arc_probability: float) -> Iterator[Digraph]:
    for n in orders:
        if mode == "exhaustive":
            yield from enumerate_strong_digraphs(n)
        elif mode == "sample":
            if seed is None or count is None:
                raise ValueError("sampled mode needs an explicit count and seed")
            yield from sample_digraphs(n, count, seed + n, arc_probability, strong=True)
        else:
            raise ValueError(f"unknown mode {mode!r}")


def _dedupe(digraphs: list[Digraph]) -> list[Digraph]:
    kept: list[Digraph] = []
    for D in digraphs:
        if D.n > ISO_DEDUPE_CAP or not any(are_isomorphic(D, K) for K in kept):
            kept.append(D)
    return kept


def _run(claim: str, hypothesis: Callable[[Digraph], bool], hyp_tokens: list[str], conclusion: str,
         exception: Callable[[Digraph], bool] | None, orders: Sequence[int], mode: str,
         count: int | None, seed: int | None, budget: int | None, search_budget: int | None,
         arc_probability: float, dedupe_iso: bool,
         on_certificate: Callable[[Digraph, Certificate], None] | None = None) -> Verdict:
    orders = list(orders)
    if mode == "exhaustive":
        for n in orders:
            if n > EXHAUSTIVE_ORDER_CAP:
                raise CapabilityError(
                    f"exhaustive mode is capped at order {EXHAUSTIVE_ORDER_CAP}; use sampled mode for n={n}"
                )
    verdict = Verdict(claim, hyp_tokens, conclusion, orders, mode,
                      seed if mode == "sample" else None, count if mode == "sample" else None)
    start = time.perf_counter()
    bad: list[Digraph] = []
    for D in _instances(orders, mode, count, seed, arc_probability):
        if budget is not None and verdict.instances_checked >= budget:
            verdict.complete = False
            break
        verdict.instances_checked += 1
        if not hypothesis(D):
            continue
        verdict.hypothesis_hits += 1
        try:
            cert = conclusion_certificate(D, conclusion, search_budget)
        except SearchBudgetExceeded:
            verdict.unknown += 1
            continue
        if cert is not None:
            if on_certificate is not None:
                on_certificate(D, cert)
            continue
        if exception is not None and exception(D):
            verdict.exceptions += 1
            continue
        bad.append(D)
    if dedupe_iso:
        bad = _dedupe(bad)
    verdict.violations = [to_text(D) for D in bad]
    verdict.elapsed = time.perf_counter() - start
    return verdict


def run_theorem_suite(theorem: str | Theorem, orders: Sequence[int], mode: str = "exhaustive", *,
                      count: int | None = None, seed: int | None = None, budget: int | None = None,
                      search_budget: int | None = None, arc_probability: float = 0.5,
                      dedupe_iso: bool = False,
                      on_certificate: Callable[[Digraph, Certificate], None] | None = None) -> Verdict:
    """Check ``theorem`` on every instance passing its hypothesis.

    ``on_certificate`` receives each instance together with the verified
    certificate of its conclusion, for independent auditing.
    """
    t = theorem if isinstance(theorem, Theorem) else get_theorem(theorem)
    return _run(t.name, t.hypothesis_holds, [c.token for c in t.hypothesis], t.conclusion,
                t.exception, orders, mode, count, seed, budget, search_budget, arc_probability,
                dedupe_iso, on_certificate)


def hunt_counterexample(hypothesis: Sequence[Condition | str], conclusion: str, orders: Sequence[int],
                        mode: str = "exhaustive", *, count: int | None = None, seed: int | None = None,
                        budget: int | None = None, search_budget: int | None = None,
                        arc_probability: float = 0.5, dedupe_iso: bool = False,
                        claim: str = "hunt",
                        on_certificate: Callable[[Digraph, Certificate], None] | None = None) -> Verdict:
    """Digraphs passing every hypothesis condition but lacking ``conclusion``.

    Instances are strong digraphs; ``strong`` need not be listed.
    """
    conds = [parse_condition(c) if isinstance(c, str) else c for c in hypothesis]
    return _run(claim, lambda D: holds_all(D, conds), [c.token for c in conds], conclusion, None,
                orders, mode, count, seed, budget, search_budget, arc_probability, dedupe_iso, on_certificate)


CONJECTURE_HYPOTHESIS = ("strong", "min-out:2", "min-in:2", "bgl-star")
PROBLEM_HYPOTHESES = {"thm13": ("strong", "thm13"), "thm14": ("strong", "thm14")}


def replay_violation(text: str, hypothesis: Callable[[Digraph], bool], conclusion: str) -> bool:
    """True iff the serialized digraph still passes the hypothesis and fails the conclusion."""
    D = from_text(text)
    return hypothesis(D) and not conclusion_holds(D, conclusion)
