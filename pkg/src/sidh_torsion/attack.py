"""Torsion-point key recovery.

Offline: find (a, b, c, d, e) with A'^2 (p a^2 + p b^2 + c^2) + d^2 = B^2 e.
Online: with theta = a*iota*pi + b*pi + c*iota, the endomorphism
tau = phi' theta phi'^ + [d] of the codomain E' has degree B^2 e and its
action on E'[B] is computable from the public key. Splitting tau as
psi' o eta o psi (degrees B, e, B) gives tau everywhere, and
ker(tau - [d]) on E'[A'] is the kernel of the dual of phi'.
"""

from __future__ import annotations

import heapq
import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Sequence

from .endo import tau_matrix
from .errors import (BudgetExhausted, FactoringTimeout, InvalidInstance, NoCandidateSurvives,
                     NotInSpan)
from .fieldcurve import (Curve, IsogenyChain, bidim_dlog, dual, identity_chain, iso_chain,
                         isogeny_from_kernel_point, isogeny_from_subgroup, isomorphisms,
                         torsion_basis, velu_step)
from .numbertheory import (cornacchia_sum_two_squares, factor, iroot, primes_up_to, sqrt_mod)
from .sidh import PublicKey, Secret, SidhInstance, make_secret, verify_kernel
from .zmod2 import (Subgroup, canonical_rep, cyclic_reps, image_mod, kernel_mod,
                    subgroups_of_order, vec_order)

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class NormEquationSolution:
    a: int
    b: int
    c: int
    d: int
    e: int
    A_prime: int
    p: int
    B: int

    def residual(self) -> int:
        lhs = self.A_prime**2 * (self.p * self.a**2 + self.p * self.b**2 + self.c**2) + self.d**2
        return lhs - self.B**2 * self.e

    def check(self) -> bool:
        return self.residual() == 0 and math.gcd(self.d, self.B) == 1 and self.e >= 1

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("a", "b", "c", "d", "e", "A_prime", "p", "B")}


@dataclass(frozen=True)
class AttackKnobs:
    """delta, gamma, epsilon in [0, 1]; g is the explicit divisor of A that
    plays the role of A^gamma."""

    delta: Fraction = Fraction(0)
    gamma: Fraction = Fraction(0)
    epsilon: Fraction = Fraction(0)
    g: int = 1

    def __post_init__(self):
        for name in ("delta", "gamma", "epsilon"):
            v = Fraction(getattr(self, name))
            if not 0 <= v <= 1:
                raise ValueError(f"{name} must lie in [0, 1]")
            object.__setattr__(self, name, v)
        if self.g < 1:
            raise ValueError("g must be positive")


def floor_power(A: int, x: Fraction) -> int:
    """floor(A^x), exactly."""
    x = Fraction(x)
    return iroot(A**x.numerator, x.denominator)


def _smooth_ascending(primes: Sequence[int], limit: int) -> Iterator[int]:
    primes = sorted(set(primes))
    heap, seen = [1], {1}
    while heap:
        v = heapq.heappop(heap)
        yield v
        for q in primes:
            w = v * q
            if w <= limit and w not in seen:
                seen.add(w)
                heapq.heappush(heap, w)


def solve_norm_equation(p: int, A_prime: int, B: int, knobs: AttackKnobs,
                        budget: int = 10**6, A: Optional[int] = None,
                        e_primes: Optional[Sequence[int]] = None,
                        e_smooth_bound: int = 2**16,
                        stats: Optional[dict] = None) -> NormEquationSolution:
    """Search for a solution: smooth e ascending, d = d0 + A'^2 d', the
    smallest c for each d, and Cornacchia on the remainder.

    A is the full degree used for the ranges A^delta and A^epsilon
    (default A' * g). d' starts at 0 and a zero remainder (a = b = 0) is
    accepted."""
    if math.gcd(A_prime, B) != 1:
        raise ValueError("A' and B must be coprime")
    if p % 4 != 3:
        raise ValueError("p must be 3 mod 4")
    A = A_prime * knobs.g if A is None else A
    st = stats if stats is not None else {}
    st.update(e_tried=0, d_iterations=0, max_d_iterations_per_e=0, cornacchia_calls=0)
    e_max = floor_power(A, knobs.epsilon)
    d_range = floor_power(A, knobs.delta)
    mod = A_prime * A_prime
    if e_primes is None:
        e_primes = primes_up_to(min(e_smooth_bound, max(e_max, 2)))
    mod_fac = factor(mod)
    A2_inv = pow(mod, -1, p)
    spent = 0
    for e in _smooth_ascending(e_primes, e_max):
        roots = sqrt_mod(e * B * B % mod, mod, mod_fac)
        if not roots:
            continue
        st["e_tried"] += 1
        d0 = min(r if r > 0 else mod for r in roots)
        bound = e * B * B
        per_e = 0
        for dp in range(d_range + 1):
            d = d0 + mod * dp
            if d * d >= bound:
                break
            per_e += 1
            spent += 1
            if spent > budget:
                raise BudgetExhausted("search budget exhausted")
            if math.gcd(d, B) != 1:
                continue
            target = bound - d * d
            croots = sqrt_mod(target * A2_inv % p, p)
            if not croots:
                continue
            c = min(croots)
            rest = target - c * c * mod
            if rest < 0:
                continue
            quot, r = divmod(rest, mod * p)
            if r:
                continue
            st["cornacchia_calls"] += 1
            try:
                ab = cornacchia_sum_two_squares(quot, factor(quot, rho_budget=10**6) if quot else None)
            except FactoringTimeout:
                continue
            if ab is None:
                continue
            sol = NormEquationSolution(ab[0], ab[1], c, d, e, A_prime, p, B)
            if not sol.check():
                raise AssertionError("norm equation identity failed")
            st["d_iterations"] += per_e
            st["max_d_iterations_per_e"] = max(st["max_d_iterations_per_e"], per_e)
            return sol
        st["d_iterations"] += per_e
        st["max_d_iterations_per_e"] = max(st["max_d_iterations_per_e"], per_e)
    raise BudgetExhausted("no solution for these knobs")


# ------------------------------------------------------------ meet in middle

def _prime_list(e: int) -> list[int]:
    out = []
    for q, k in factor(e):
        out += [q] * k
    return out


def _split(primes: list[int]) -> tuple[list[int], list[int]]:
    left, right, pl, pr = [], [], 1, 1
    for q in sorted(primes, reverse=True):
        if pl <= pr:
            left.append(q)
            pl *= q
        else:
            right.append(q)
            pr *= q
    return sorted(left), sorted(right)


def _walks(E: Curve, primes: list[int], stats: dict) -> list[IsogenyChain]:
    layer = [identity_chain(E)]
    stats["mitm_nodes"] = stats.get("mitm_nodes", 0) + 1
    for ell in primes:
        nxt = []
        for chain in layer:
            cur = chain.codomain
            P, Q = torsion_basis(cur, ell)
            for K in [Q] + [P + k * Q for k in range(ell)]:
                step = velu_step(cur, K, ell)
                nxt.append(chain.then(IsogenyChain(cur, step.codomain, (step,), ell)))
        stats["mitm_nodes"] += len(nxt)
        layer = nxt
    return layer


def mitm_candidates(E1: Curve, E2: Curve, e: int, stats: Optional[dict] = None
                    ) -> Iterator[IsogenyChain]:
    """Every degree-e isogeny E1 -> E2 reachable by composing prime steps
    (up to the automorphism ambiguity, which is enumerated)."""
    st = stats if stats is not None else {}
    left, right = _split(_prime_list(e))
    table: dict = {}
    for w in _walks(E1, left, st):
        table.setdefault(w.codomain.j_invariant(), []).append(w)
    auts2 = isomorphisms(E2, E2)
    finals = [None] if len(auts2) <= 2 else auts2
    for w2 in _walks(E2, right, st):
        Y = w2.codomain
        matches = table.get(Y.j_invariant(), [])
        if not matches:
            continue
        back = dual(w2)
        for w1 in matches:
            X = w1.codomain
            for u in isomorphisms(X, Y):
                eta = w1.then(iso_chain(X, Y, u)).then(back)
                for v in finals:
                    yield eta if v is None else eta.then(iso_chain(E2, E2, v))


def mitm_isogeny(E1: Curve, E2: Curve, e: int) -> Optional[IsogenyChain]:
    return next(mitm_candidates(E1, E2, e), None)


# ------------------------------------------------------------- online phase

@dataclass
class AttackResult:
    secret: Secret
    kernel: object
    solution: NormEquationSolution
    report: dict = field(default_factory=dict)


def _points(vecs, P, Q):
    return [x * P + y * Q for x, y in vecs]


def _phi_prime_kernels(instance: SidhInstance, Ep: Curve, Pp, Qp, sol: NormEquationSolution,
                       report: dict) -> Iterator[tuple[int, int]]:
    """Generators (mod A') of ker phi' in the basis ([g]P_A, [g]Q_A)."""
    B, Ap, d = instance.B, sol.A_prime, sol.d
    g = instance.A // Ap
    pub = PublicKey(Ep, Pp, Qp)
    M = tau_matrix(instance, pub, sol)
    kerM = kernel_mod(M, B)
    img = image_mod(M, B)
    if img.order not in (B, B // 2 if B % 2 == 0 else B) or kerM.order * img.order != B * B:
        report["invariant_violations"] = report.get("invariant_violations", 0) + 1
        return
    psi_kers = [kerM] if kerM.order == B else [H for H in subgroups_of_order(B, B)
                                                if H.issubset(kerM)]
    chi_kers = [img] if img.order == B else [H for H in subgroups_of_order(B, B)
                                              if img.issubset(H)]
    S, T = torsion_basis(Ep, Ap)
    gPA, gQA = g * instance.PA, g * instance.QA
    seen = set()
    for Hpsi in psi_kers:
        psi = isogeny_from_subgroup(Ep, [(X, B) for X in _points(Hpsi.gens(), Pp, Qp)])
        psiS, psiT = psi(S), psi(T)
        for Hchi in chi_kers:
            chi = isogeny_from_subgroup(Ep, [(X, B) for X in _points(Hchi.gens(), Pp, Qp)])
            chiS, chiT = chi(S), chi(T)
            for eta in mitm_candidates(psi.codomain, chi.codomain, sol.e, report):
                report["eta_candidates"] = report.get("eta_candidates", 0) + 1
                try:
                    c1 = bidim_dlog(B * eta(psiS), chiS, chiT, Ap)
                    c2 = bidim_dlog(B * eta(psiT), chiS, chiT, Ap)
                except NotInSpan:
                    continue
                N = ((c1[0] - d, c2[0]), (c1[1], c2[1] - d))
                Z = kernel_mod(N, Ap)
                if Z.order < Ap:
                    continue
                if Z.order == Ap and Z.is_cyclic():
                    cands = [Z.generator()]
                else:
                    report["degenerate_kernels"] = report.get("degenerate_kernels", 0) + 1
                    cands = [r for r in cyclic_reps(Ap) if Z.contains(r)]
                for r in cands:
                    K = r[0] * S + r[1] * T
                    rho = isogeny_from_kernel_point(Ep, K, Ap)
                    rP, rQ = rho(Pp), rho(Qp)
                    for u in isomorphisms(rho.codomain, instance.E0):
                        fix = iso_chain(rho.codomain, instance.E0, u)
                        if fix(rP) != Ap * instance.PB or fix(rQ) != Ap * instance.QB:
                            continue
                        imgs = [bidim_dlog(fix(rho(X)), gPA, gQA, Ap) for X in (S, T)]
                        H = Subgroup.span(imgs, Ap)
                        if H.order != Ap or not H.is_cyclic():
                            continue
                        gen = canonical_rep(H.generator(), Ap)
                        if gen not in seen:
                            seen.add(gen)
                            yield gen


def _lift_kernels(kp: tuple[int, int], A: int, Ap: int) -> list[tuple[int, int]]:
    g = A // Ap
    out = []
    for s in range(g):
        for r in range(g):
            v = ((kp[0] + Ap * s) % A, (kp[1] + Ap * r) % A)
            if vec_order(v, A) == A:
                rep = canonical_rep(v, A)
                if rep not in out:
                    out.append(rep)
    return out


def recover_secret(instance: SidhInstance, pubkey: PublicKey, solution: NormEquationSolution,
                   knobs: AttackKnobs, report: Optional[dict] = None) -> AttackResult:
    if instance.mode != "classic":
        raise InvalidInstance("the attack needs an instance with rational torsion bases")
    rep = report if report is not None else {}
    A, B, g = instance.A, instance.B, knobs.g
    if A % g or solution.A_prime != A // g:
        raise ValueError("solution was not solved for A' = A / g")
    if not solution.check():
        raise ValueError("invalid norm equation solution")
    Ap = A // g
    rep.setdefault("prefix_guesses", 0)
    rep.setdefault("kernels_verified", 0)
    if Ap == 1:
        guesses = [(None, pubkey.curve, pubkey.imgP, pubkey.imgQ)]
    else:
        guesses = []
        ginv = pow(g, -1, B)
        if g == 1:
            guesses.append((None, pubkey.curve, pubkey.imgP, pubkey.imgQ))
        else:
            P, Q = torsion_basis(pubkey.curve, g)
            for s, t in cyclic_reps(g):
                rho = isogeny_from_kernel_point(pubkey.curve, s * P + t * Q, g)
                guesses.append(((s, t), rho.codomain, ginv * rho(pubkey.imgP),
                                ginv * rho(pubkey.imgQ)))
    for guess, Ep, Pp, Qp in guesses:
        rep["prefix_guesses"] += 1
        if Ap == 1:
            kernels = [(1, 0)]
        else:
            kernels = _phi_prime_kernels(instance, Ep, Pp, Qp, solution, rep)
        for kp in kernels:
            for s, t in _lift_kernels(kp, A, Ap):
                rep["kernels_verified"] += 1
                if verify_kernel(instance, pubkey, s, t):
                    secret = make_secret(s, t, A)
                    return AttackResult(secret, s * instance.PA + t * instance.QA, solution, rep)
    raise NoCandidateSurvives("no candidate kernel matches the public key")


def attack_e_primes(instance: SidhInstance) -> list[int]:
    """Primes usable in e: the l-torsion must be rational, and l must not
    divide B."""
    return [q for q in factor(instance.p + 1).primes if instance.B % q]


def run_full_attack(instance: SidhInstance, pubkey: PublicKey, knobs: AttackKnobs,
                    solution: Optional[NormEquationSolution] = None,
                    budget: int = 10**6) -> AttackResult:
    if instance.mode != "classic":
        raise InvalidInstance("forged instances are construction-only")
    if instance.A % knobs.g:
        raise ValueError("g must divide A")
    report: dict = {}
    Ap = instance.A // knobs.g
    if solution is None:
        stats: dict = {}
        solution = solve_norm_equation(instance.p, Ap, instance.B, knobs, budget=budget,
                                       A=instance.A, e_primes=attack_e_primes(instance),
                                       stats=stats)
        report.update(stats)
    result = recover_secret(instance, pubkey, solution, knobs, report)
    return result
