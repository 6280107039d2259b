import random

import pytest

from sidh_torsion.attack import AttackKnobs, solve_norm_equation
from sidh_torsion.endo import ThetaCoefficients, eval_frobenius, eval_iota, eval_theta, tau_matrix
from sidh_torsion.errors import WrongCurve
from sidh_torsion.fieldcurve import Curve, starting_curve
from sidh_torsion.sidh import keygen


@pytest.mark.parametrize("p", [59, 3119])
def test_iota_frobenius_relations(p):
    E = starting_curve(p)
    rng = random.Random(p)
    for _ in range(20):
        P, Q = E.random_point(rng), E.random_point(rng)
        assert eval_iota(eval_iota(P)) == -P
        assert eval_iota(P + Q) == eval_iota(P) + eval_iota(Q)
        # pi^2 = [-p] and iota pi = -pi iota
        assert eval_frobenius(eval_frobenius(P)) == -p * P
        assert eval_iota(eval_frobenius(P)) == -eval_frobenius(eval_iota(P))


@pytest.mark.parametrize("abc", [(0, 0, 1), (1, 0, 0), (0, 1, 0), (1, 2, 3), (2, -1, 5)])
def test_theta_squares_to_minus_degree(abc):
    # theta has reduced trace zero, so theta^2 = -deg(theta)
    p = 59
    E = starting_curve(p)
    th = ThetaCoefficients(*abc)
    rng = random.Random(1)
    for _ in range(10):
        P = E.random_point(rng)
        assert eval_theta(th, eval_theta(th, P)) == -th.degree(p) * P


def test_iota_rejects_other_curves():
    E = Curve.from_ints(0, 1, 59)
    with pytest.raises(WrongCurve):
        eval_iota(E.random_point(random.Random(0)))


def test_tau_matrix_determinant(inst3119):
    sol = solve_norm_equation(3119, 16, 65, AttackKnobs())
    for seed in range(5):
        _, pk = keygen(inst3119, seed)
        (a, b), (c, d) = tau_matrix(inst3119, pk, sol)
        # deg tau = B^2 e, so det = 0 mod B
        assert (a * d - b * c) % 65 == 0
