"""Brute-force oracles that share no code with the search routines under test.

They operate on plain arc sets so a bug in the bitmask representation cannot
leak into the expected values.
"""
import itertools

# filled by test_acceptance, printed by conftest at the end of the session
ACCEPTANCE_LINES: list[str] = []


def arc_set(D):
    return {(u, v) for u in range(D.n) for v in range(D.n) if u != v and D.has_arc(u, v)}


def closure(n, arcs):
    """Floyd-Warshall transitive closure as an n x n boolean table."""
    reach = [[i == j or (i, j) in arcs for j in range(n)] for i in range(n)]
    for k in range(n):
        for i in range(n):
            if reach[i][k]:
                for j in range(n):
                    if reach[k][j]:
                        reach[i][j] = True
    return reach


def strong_oracle(n, arcs):
    reach = closure(n, arcs)
    return all(all(row) for row in reach)


def count_strong_oracle(n):
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    total = 0
    for bits in itertools.product((0, 1), repeat=len(pairs)):
        arcs = {p for p, b in zip(pairs, bits) if b}
        total += strong_oracle(n, arcs)
    return total


def bypass_oracle(n, arcs):
    """Any cyclic vertex order with exactly one reversed position, by full enumeration.

    The first vertex is pinned to 0 since rotating a cyclic order gives the same
    subdigraph; every one of the n arc positions may carry the reversal.
    """
    if n < 3:
        return False
    for rest in itertools.permutations(range(1, n)):
        seq = (0,) + rest
        for j in range(n):
            ok = True
            for i in range(n):
                u, v = seq[i], seq[(i + 1) % n]
                need = (v, u) if i == j else (u, v)
                if need not in arcs:
                    ok = False
                    break
            if ok:
                return True
    return False


def cycle_length_oracle(n, arcs, k):
    for combo in itertools.permutations(range(n), k):
        if combo[0] != min(combo):
            continue
        if all((combo[i], combo[(i + 1) % k]) in arcs for i in range(k)):
            return True
    return False


def ham_path_oracle(n, arcs, s=None, t=None):
    for seq in itertools.permutations(range(n)):
        if s is not None and seq[0] != s:
            continue
        if t is not None and seq[-1] != t:
            continue
        if all((seq[i], seq[i + 1]) in arcs for i in range(n - 1)):
            return True
    return False


def dnk_oracle(n, arcs, k):
    for rest in itertools.permutations(range(1, n)):
        seq = (0,) + rest
        for off in range(n):
            ok = True
            for i in range(n):
                u, v = seq[i], seq[(i + 1) % n]
                need = (v, u) if (i - off) % n < k - 1 else (u, v)
                if need not in arcs:
                    ok = False
                    break
            if ok:
                return True
    return False


def iso_oracle(n1, arcs1, n2, arcs2):
    if n1 != n2:
        return False
    for perm in itertools.permutations(range(n1)):
        if {(perm[u], perm[v]) for u, v in arcs1} == arcs2:
            return True
    return False


def certificate_oracle(n, arcs, kind, order, k=None, offset=None):
    """Independent re-check of a certificate against a plain arc set."""
    m = len(order)
    if len(set(order)) != m or not all(0 <= v < n for v in order):
        return False
    ring = [(order[i], order[(i + 1) % m]) for i in range(m)]
    if kind == "cycle":
        need = ring if m == k else None
    elif kind == "hampath":
        need = ring[:-1] if m == n else None
    elif kind == "bypass":
        need = ring[:-1] + [(order[0], order[-1])] if m == n else None
    elif kind == "dnk":
        flipped = {(offset + t) % m for t in range(k - 1)}
        need = [(b, a) if i in flipped else (a, b) for i, (a, b) in enumerate(ring)] if m == n else None
    else:
        need = None
    return need is not None and all(a in arcs for a in need)
