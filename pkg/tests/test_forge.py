import pytest

from sidh_torsion import published as pub
from sidh_torsion.errors import NotSmooth, Obstruction
from sidh_torsion.forge import (forge_prime, forge_prime_hits, forge_triple, is_powersmooth,
                                triple_legs, verify_gaussian_triple, verify_insecure_primes,
                                verify_order_example)
from sidh_torsion.numbertheory import GaussianInteger


def test_forge_prime_published():
    r = forge_prime(pub.FORGE_A, pub.FORGE_B)
    assert r.check() and r.c == 53 and r.m == 1 and str(r.p) == pub.FORGE_P_C53
    assert str(r.D) == pub.FORGE_D


def test_forge_prime_continuation_reaches_355():
    hits = forge_prime_hits(pub.FORGE_A, pub.FORGE_B, c_start=227, c_max=400, effort=1)
    h = next(hits)
    assert (h.c, h.m) == (254, 16)
    h = forge_prime(pub.FORGE_A, pub.FORGE_B, c_start=300, c_max=400, effort=1)
    assert h.c == 355 and h.m == 5 and str(h.p) == pub.FORGE_P_C355


def test_obstruction():
    with pytest.raises(Obstruction):
        forge_prime(2, 5)


def test_small_triple():
    t = forge_triple(GaussianInteger(2, 1), 1)
    assert (t.A, t.B, t.d, t.f, t.p) == (3, 5, 4, 4, 59) and t.check()
    assert triple_legs(GaussianInteger(2, 1), 2) == (25, 7, 24)


def test_triple_not_smooth():
    with pytest.raises(NotSmooth):
        forge_triple(GaussianInteger(1000003, 2), 1, smooth_bound=5)


def test_is_powersmooth():
    assert is_powersmooth(2**3 * 3 * 5, 8) and not is_powersmooth(2**4 * 3, 8)


def test_reports_detect_mutation():
    ok = {c.name: c.passed for c in verify_insecure_primes(["D", "prime_c53"])}
    assert ok == {"D": True, "prime_c53": True}
    bad = verify_insecure_primes(["prime_c53"], values={"FORGE_P_C53": str(int(pub.FORGE_P_C53) + 4)})
    assert not bad[0].passed
    assert all(c.passed for c in verify_order_example())
    mutated = list(pub.ORDER_SMALL_FACTORS)
    mutated[-1] += 2
    assert not all(c.passed for c in verify_order_example({"ORDER_SMALL_FACTORS": mutated}))


def test_gaussian_triple_structure():
    checks = {c.name: c.passed for c in verify_gaussian_triple()}
    for name in ("norm_is_5^105", "legs_match", "pythagorean", "A_smooth", "prime_f214", "prime_f222"):
        assert checks[name], name
