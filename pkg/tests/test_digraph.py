import random

import pytest
from hypothesis import given, settings, strategies as st

from hambypass import (
    CapabilityError,
    DigraphError,
    are_isomorphic,
    build_digraph,
    complete_digraph,
    degree_profile,
    directed_cycle,
    directed_path,
    dominated_nonadjacent_pairs,
    find_isomorphism,
    from_text,
    is_strong,
    to_text,
)
from hambypass.digraph import (
    DigraphFormatError,
    from_structured,
    is_strongly_2_connected,
    to_structured,
)
from hambypass.families import FamilySpec, generate
from oracles import arc_set, iso_oracle, strong_oracle
from strategies import digraphs


def test_build_triangle(c3):
    assert c3.n == 3
    assert c3.arc_count == 3
    assert c3.arcs() == [(0, 1), (1, 2), (2, 0)]


def test_build_single_vertex():
    D = build_digraph(1, [])
    assert D.n == 1 and D.arc_count == 0


def test_duplicates_collapse():
    assert build_digraph(2, [(0, 1), (0, 1)]).arc_count == 1


@pytest.mark.parametrize("arcs", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_build_rejects(arcs):
    with pytest.raises(DigraphError):
        build_digraph(3, arcs)


def test_degrees_c3(c3):
    prof = degree_profile(c3)
    assert prof.out_degree == prof.in_degree == (1, 1, 1)
    assert prof.degree == (2, 2, 2)


def test_degrees_complete():
    prof = degree_profile(complete_digraph(4))
    assert prof.out_degree == prof.in_degree == (3,) * 4
    assert prof.degree == (6,) * 4


def test_degrees_d7():
    prof = degree_profile(generate(FamilySpec("D7")))
    # x_2, x_4, x_6 are indices 1, 3, 5
    assert [prof.in_degree[i] for i in (1, 3, 5)] == [1, 1, 1]


def test_is_strong_examples(c3, path3):
    assert is_strong(c3)
    assert not is_strong(path3)
    assert is_strong(build_digraph(1, []))


def test_d7_strong_matches_closure():
    D = generate(FamilySpec("D7"))
    assert strong_oracle(7, arc_set(D)) is True
    assert is_strong(D)


def test_dominated_pairs_complete():
    K = complete_digraph(4)
    for mode in ("in", "out", "either"):
        assert dominated_nonadjacent_pairs(K, mode) == []


def test_dominated_pairs_bipartite():
    K = generate(FamilySpec("KstarPQ", p=2, q=2))
    pairs = dominated_nonadjacent_pairs(K, "in")
    # frozen from a brute-force scan of all pairs
    assert [(p.x, p.y) for p in pairs] == [(0, 1), (2, 3)]
    assert pairs[0].common_in == (2, 3)


def test_dominated_pairs_d7():
    D = generate(FamilySpec("D7"))
    assert dominated_nonadjacent_pairs(D, "in") == []
    # x_2, x_4, x_6 all point into y, so they pair up through a common out-neighbour
    assert [(p.x, p.y) for p in dominated_nonadjacent_pairs(D, "either")] == [(1, 3), (1, 5), (3, 5)]


def test_dominated_pairs_bad_mode(c3):
    with pytest.raises(ValueError):
        dominated_nonadjacent_pairs(c3, "sideways")


def test_reverse_examples(c3):
    assert c3.reverse().arcs() == [(0, 2), (1, 0), (2, 1)]
    assert complete_digraph(4).reverse() == complete_digraph(4)


def test_isomorphism_examples(c3):
    relabeled = c3.relabel([2, 0, 1])
    perm = find_isomorphism(c3, relabeled)
    assert perm is not None
    assert c3.relabel(perm) == relabeled
    assert are_isomorphic(c3, c3.reverse())
    K22 = generate(FamilySpec("KstarPQ", p=2, q=2))
    K4_minus = complete_digraph(4).with_arcs(remove=[(0, 1), (1, 0), (2, 3), (3, 2)])
    assert iso_oracle(4, arc_set(K22), 4, arc_set(K4_minus))
    assert are_isomorphic(K22, K4_minus)


def test_isomorphism_order_mismatch_and_cap():
    assert not are_isomorphic(directed_cycle(3), directed_cycle(4))
    with pytest.raises(CapabilityError):
        are_isomorphic(directed_cycle(11), directed_cycle(11))


def test_strongly_2_connected():
    assert is_strongly_2_connected(complete_digraph(4))
    assert not is_strongly_2_connected(directed_cycle(4))


@given(digraphs())
def test_arc_count_equals_degree_sums(D):
    prof = degree_profile(D)
    assert sum(prof.out_degree) == sum(prof.in_degree) == D.arc_count


@given(digraphs())
def test_reverse_involution_and_degree_swap(D):
    R = D.reverse()
    assert R.reverse() == D
    for x in range(D.n):
        assert R.out_degree(x) == D.in_degree(x)
        assert R.degree(x) == D.degree(x)


@given(digraphs(), st.randoms(use_true_random=False))
def test_strong_invariant_under_relabeling(D, r):
    perm = list(range(D.n))
    r.shuffle(perm)
    assert is_strong(D.relabel(perm)) == is_strong(D) == strong_oracle(D.n, arc_set(D))


@given(digraphs())
def test_either_mode_is_union(D):
    either = {(p.x, p.y) for p in dominated_nonadjacent_pairs(D, "either")}
    ins = {(p.x, p.y) for p in dominated_nonadjacent_pairs(D, "in")}
    outs = {(p.x, p.y) for p in dominated_nonadjacent_pairs(D, "out")}
    assert either == ins | outs


@settings(max_examples=60)
@given(digraphs(max_n=5), digraphs(max_n=5))
def test_isomorphism_matches_permutation_oracle(D1, D2):
    assert are_isomorphic(D1, D2) == iso_oracle(D1.n, arc_set(D1), D2.n, arc_set(D2))


def test_isomorphism_equivalence_relation():
    r = random.Random(7)
    pool = []
    for _ in range(12):
        n = 4
        out = [sum(1 << v for v in range(n) if v != u and r.random() < 0.5) for u in range(n)]
        D = build_digraph(n, [(u, v) for u in range(n) for v in range(n) if out[u] >> v & 1])
        pool.append(D)
        perm = list(range(n))
        r.shuffle(perm)
        pool.append(D.relabel(perm))
    for A in pool:
        assert are_isomorphic(A, A)
        for B in pool:
            assert are_isomorphic(A, B) == are_isomorphic(B, A)
            for C in pool[:6]:
                if are_isomorphic(A, B) and are_isomorphic(B, C):
                    assert are_isomorphic(A, C)


@given(digraphs())
def test_text_round_trip(D):
    text = to_text(D)
    assert from_text(text) == D
    assert to_text(from_text(text)) == text
    assert from_structured(to_structured(D)) == D


def test_text_format_exact(c3):
    assert to_text(c3) == "n 3\n0 1\n1 2\n2 0\n"
    assert from_text("# comment\nn 3\n2 0\n0 1\n1 2\n") == c3


@pytest.mark.parametrize("text, line", [
    ("n x\n", 1),
    ("n 3\n0 1\n0 0\n", 3),
    ("n 3\n0 5\n", 2),
    ("n 3\n0 1 2\n", 2),
    ("0 1\n", 1),
])
def test_text_format_errors(text, line):
    with pytest.raises(DigraphFormatError) as info:
        from_text(text)
    assert info.value.line == line


def test_directed_path_not_strong():
    assert not is_strong(directed_path(4))
