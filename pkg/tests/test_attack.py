from fractions import Fraction

import pytest

from sidh_torsion.attack import (AttackKnobs, NormEquationSolution, attack_e_primes, floor_power,
                                 mitm_isogeny, run_full_attack, solve_norm_equation)
from sidh_torsion.errors import BudgetExhausted, EffortExhausted
from sidh_torsion.fieldcurve import isogeny_from_kernel_point, starting_curve, torsion_basis
from sidh_torsion.sidh import brute_force_recover, keygen


def test_floor_power():
    assert floor_power(16, Fraction(1, 2)) == 4
    assert floor_power(10, Fraction(1, 2)) == 3
    assert floor_power(2**216, Fraction(1, 4)) == 2**54


def test_knob_validation():
    with pytest.raises(ValueError):
        AttackKnobs(delta=Fraction(3, 2))
    with pytest.raises(ValueError):
        AttackKnobs(g=0)


@pytest.mark.parametrize("p,A,B,want", [(3119, 16, 65, (0, 0, 1, 63, 1)),
                                         (59, 3, 5, (0, 0, 1, 4, 1))])
def test_norm_equation(p, A, B, want):
    sol = solve_norm_equation(p, A, B, AttackKnobs())
    assert sol.check() and (sol.a, sol.b, sol.c, sol.d, sol.e) == want


def test_norm_equation_with_split_knobs():
    stats = {}
    sol = solve_norm_equation(3119, 8, 65, AttackKnobs(Fraction(1, 4), 0, Fraction(1, 2), g=2),
                              A=16, e_primes=[2, 3], stats=stats)
    assert sol.check() and sol.A_prime == 8
    assert stats["e_tried"] >= 1


def test_norm_equation_budget():
    with pytest.raises((BudgetExhausted, EffortExhausted)):
        solve_norm_equation(3119, 16, 17, AttackKnobs(), budget=1, e_primes=[2])


def test_planted_solution_residual():
    sol = NormEquationSolution(0, 0, 7, 66, 4, 16, 3119, 65)
    assert sol.residual() == 0 and sol.check()


def test_e_primes(inst3119):
    assert attack_e_primes(inst3119) == [2, 3]


def test_mitm_finds_planted():
    E = starting_curve(59)
    P, Q = torsion_basis(E, 4, seed=7)
    phi = isogeny_from_kernel_point(E, P + Q, 4)
    eta = mitm_isogeny(E, phi.codomain, 4)
    assert eta is not None and eta.codomain == phi.codomain and eta.degree == 4


def test_mitm_reports_none():
    E = starting_curve(59)
    P, _ = torsion_basis(E, 3, seed=1)
    target = isogeny_from_kernel_point(E, P, 3).codomain
    assert mitm_isogeny(E, target, 2) is None


def test_attack_small(inst59):
    for seed in range(5):
        sec, pk = keygen(inst59, seed)
        res = run_full_attack(inst59, pk, AttackKnobs())
        assert res.secret == sec == brute_force_recover(inst59, pk)[0]
        assert res.report["kernels_verified"] >= 1
