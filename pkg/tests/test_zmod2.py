import random

import pytest

from sidh_torsion.zmod2 import (Subgroup, canonical_rep, cyclic_reps, image_mod, kernel_mod,
                                mat_vec, subgroups_of_order, vec_order)

MODULI = [1, 2, 3, 4, 5, 6, 8, 9, 12, 16, 25, 65]


def closure(gens, n):
    S, frontier = {(0, 0)}, [(0, 0)]
    while frontier:
        v = frontier.pop()
        for g in gens:
            w = ((v[0] + g[0]) % n, (v[1] + g[1]) % n)
            if w not in S:
                S.add(w)
                frontier.append(w)
    return S


@pytest.mark.parametrize("n", MODULI)
def test_span_kernel_image_brute(n):
    rng = random.Random(n)
    allv = [(x, y) for x in range(n) for y in range(n)]
    for _ in range(40):
        gens = [(rng.randrange(n), rng.randrange(n)) for _ in range(rng.randrange(3))]
        H = Subgroup.span(gens, n)
        S = closure(gens, n)
        assert set(H.elements()) == S and H.order == len(S)
        assert H.is_cyclic() == any(vec_order(v, n) == len(S) for v in S)
        M = tuple(tuple(rng.randrange(n) for _ in range(2)) for _ in range(2))
        assert set(kernel_mod(M, n).elements()) == {v for v in allv if mat_vec(M, v, n) == (0, 0)}
        assert set(image_mod(M, n).elements()) == {mat_vec(M, v, n) for v in allv}


@pytest.mark.parametrize("n", MODULI)
def test_cyclic_reps_are_distinct_and_canonical(n):
    reps = cyclic_reps(n)
    assert len({frozenset(Subgroup.span([r], n).elements()) for r in reps}) == len(reps)
    assert all(canonical_rep(r, n) == r for r in reps)
    for x in range(n):
        for y in range(n):
            if vec_order((x, y), n) == n:
                c = canonical_rep((x, y), n)
                assert c in reps and Subgroup.span([c], n) == Subgroup.span([(x, y)], n)


def test_cyclic_count_is_psi():
    # number of cyclic subgroups of order n in (Z/n)^2 is n * prod(1 + 1/q)
    assert [len(cyclic_reps(n)) for n in (3, 5, 16, 65)] == [4, 6, 24, 84]


@pytest.mark.parametrize("n,k", [(4, 2), (4, 4), (8, 4), (12, 12), (9, 9)])
def test_subgroups_of_order(n, k):
    subs = subgroups_of_order(n, k)
    assert len(set(subs)) == len(subs) and all(s.order == k for s in subs)
    allv = [(x, y) for x in range(n) for y in range(n)]
    # brute count: distinct closures of 2-generator sets with the right size
    seen = set()
    for a in allv:
        for b in allv:
            S = frozenset(closure([a, b], n))
            if len(S) == k:
                seen.add(S)
    assert len(seen) == len(subs)
