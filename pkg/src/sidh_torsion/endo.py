"""Endomorphisms of E0: y^2 = x^3 + x and the tau-action matrix."""

from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

from .errors import WrongCurve
from .fieldcurve import Curve, Fp2, Point, bidim_dlog

if TYPE_CHECKING:
    from .attack import NormEquationSolution
    from .sidh import PublicKey, SidhInstance


@dataclass(frozen=True)
class ThetaCoefficients:
    """theta = a*iota*pi + b*pi + c*iota."""

    a: int
    b: int
    c: int

    def degree(self, p: int) -> int:
        return p * self.a**2 + p * self.b**2 + self.c**2


def _is_e0(E: Curve) -> bool:
    return E.a == 1 and E.b.is_zero()


def eval_iota(P: Point) -> Point:
    """(x, y) -> (-x, i*y)."""
    if not _is_e0(P.curve):
        raise WrongCurve("iota is only defined on y^2 = x^3 + x")
    if P.is_identity():
        return P
    i = Fp2(0, 1, P.curve.p)
    return Point(P.curve, -P.x, i * P.y)


def eval_frobenius(P: Point) -> Point:
    """(x, y) -> (x^p, y^p). Lands on the conjugate curve, which is E itself
    whenever E is defined over F_p."""
    E = P.curve
    target = E if (E.a.c1 == 0 and E.b.c1 == 0) else Curve(E.a.conjugate(), E.b.conjugate())
    if P.is_identity():
        return target.identity()
    return Point(target, P.x.conjugate(), P.y.conjugate())


def eval_theta(coeffs: ThetaCoefficients, P: Point) -> Point:
    if not _is_e0(P.curve):
        raise WrongCurve("theta is only defined on y^2 = x^3 + x")
    piP = eval_frobenius(P)
    return coeffs.a * eval_iota(piP) + coeffs.b * piP + coeffs.c * eval_iota(P)


def tau_matrix(instance: "SidhInstance", pubkey: "PublicKey",
               solution: "NormEquationSolution", degree: int | None = None
               ) -> tuple[tuple[int, int], tuple[int, int]]:
    """Matrix of tau = phi theta phi^ + [d] on the basis (imgP, imgQ) of
    E_A[B]. Column k holds the coordinates of tau applied to basis vector k.

    Only public data is used: tau(phi(S)) = phi([deg phi] theta(S) + [d] S),
    and the right side is known once [deg phi] theta(S) + [d] S is written in
    the basis (P_B, Q_B)."""
    B = instance.B
    deg = solution.A_prime if degree is None else degree
    theta = ThetaCoefficients(solution.a, solution.b, solution.c)
    cols = []
    for S in (instance.PB, instance.QB):
        R = deg * eval_theta(theta, S) + solution.d * S
        cols.append(bidim_dlog(R, instance.PB, instance.QB, B))
    (u1, v1), (u2, v2) = cols
    return ((u1 % B, u2 % B), (v1 % B, v2 % B))
