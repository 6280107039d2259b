"""Golden checks: recompute every printed reference value and compare."""

from __future__ import annotations

import time
from fractions import Fraction

from . import estimator as est
from . import published as pub
from .forge import (forge_prime_hits, verify_gaussian_triple, verify_insecure_primes,
                    verify_order_example)

QUANTUM_TOL = Fraction(2, 1000)
GKE_POINTS = ((2, "1.1538"), (9, "1.0417"), (99, "1.0040"))


def _row(group, name, passed, detail=""):
    return {"group": group, "name": name, "passed": bool(passed), "detail": detail}


def forged_prime_search(c_stop: int = 355) -> list[dict]:
    """Run the prime search itself and compare against the printed digits."""
    t0 = time.perf_counter()
    hits = {}
    for h in forge_prime_hits(pub.FORGE_A, pub.FORGE_B, c_max=c_stop, effort=1):
        hits.setdefault(h.c, h)
    first = min(hits) if hits else None
    out = [_row("prime_search", "first_hit_c53", first == 53, f"first c = {first}")]
    h = hits.get(53)
    out.append(_row("prime_search", "digits_c53",
                    h is not None and h.m == 1 and str(h.p) == pub.FORGE_P_C53))
    h = hits.get(355)
    out.append(_row("prime_search", "digits_c355",
                    h is not None and h.m == 5 and str(h.p) == pub.FORGE_P_C355,
                    "D - 355^2 = 5 p"))
    out.append(_row("prime_search", "runtime", True, f"{time.perf_counter() - t0:.2f}s"))
    return out


def estimator_numbers() -> list[dict]:
    out = []
    for r, s in GKE_POINTS:
        a, b = est.split_sum_ratio(Fraction(s), r)
        C = est.optimize(a, b, "quantum").C
        out.append(_row("estimator", f"quantum_ratio_{r}", abs(C - Fraction(2, 5)) <= QUANTUM_TOL,
                        f"C = {float(C):.5f} at alpha+beta = {s}"))
    C = est.optimize(Fraction(1, 2), Fraction(3, 2), "classical").C
    out.append(_row("estimator", "classical_poly_half", C == 0, f"C = {C}"))
    C = est.optimize(1, 2, "classical").C
    out.append(_row("estimator", "classical_poly_one", C == 0, f"C = {C}"))
    for r, want in ((1, {"classical": Fraction(2, 5), "quantum": Fraction(1, 4)}),
                    (2, {"classical": Fraction(0), "quantum": Fraction(0)})):
        for m, w in want.items():
            got = est.insecure_curve_cost(r, m)
            out.append(_row("estimator", f"insecure_{m}_ratio_{r}", got == w, f"C = {got}"))
    return out


def run_golden() -> list[dict]:
    rows = forged_prime_search()
    for c in verify_insecure_primes():
        rows.append(_row("insecure_primes", c.name, c.passed, c.detail))
    for c in verify_gaussian_triple():
        rows.append(_row("gaussian_triple", c.name, c.passed, c.detail))
    for c in verify_order_example():
        rows.append(_row("order_example", c.name, c.passed, c.detail))
    rows += estimator_numbers()
    return rows
