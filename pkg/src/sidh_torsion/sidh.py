"""Toy SIDH: instances, key generation, shared secrets and an exhaustive
key-recovery baseline."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Optional

from .errors import InvalidInstance, NotFound
from .fieldcurve import (Curve, Fp2, Point, curve_order_check, isogeny_from_kernel_point,
                         isomorphisms, starting_curve, torsion_basis, weil_pairing)
from .numbertheory import is_probable_prime
from .zmod2 import canonical_rep, cyclic_reps, vec_order

SCHEMA = "sidh-torsion/1"


@dataclass(frozen=True)
class SidhInstance:
    p: int
    A: int
    B: int
    f: int
    E0: Curve
    PA: Optional[Point]
    QA: Optional[Point]
    PB: Optional[Point]
    QB: Optional[Point]
    mode: str = "classic"
    seed: int = 0

    def to_json(self) -> dict:
        pts = {k: (None if getattr(self, k) is None else getattr(self, k).to_json())
               for k in ("PA", "QA", "PB", "QB")}
        return {"schema": SCHEMA, "p": str(self.p), "A": str(self.A), "B": str(self.B),
                "f": str(self.f), "mode": self.mode, "seed": self.seed,
                "E0": self.E0.to_json(), **pts}

    @classmethod
    def from_json(cls, data: dict) -> "SidhInstance":
        E0 = Curve.from_json(data["E0"])
        pts = {k: (None if data.get(k) is None and data.get("mode") == "forged"
                   else Point.from_json(E0, data[k])) for k in ("PA", "QA", "PB", "QB")}
        return cls(int(data["p"]), int(data["A"]), int(data["B"]), int(data["f"]), E0,
                   mode=data.get("mode", "classic"), seed=int(data.get("seed", 0)), **pts)


@dataclass(frozen=True)
class Secret:
    """Kernel generator [s]P + [t]Q of order n, in canonical form."""

    s: int
    t: int
    n: int

    @property
    def x(self) -> Optional[int]:
        """The scalar x in P + [x]Q, when the secret has that shape."""
        return self.t if self.s == 1 else None

    def to_json(self) -> dict:
        return {"s": str(self.s), "t": str(self.t), "n": str(self.n)}


@dataclass(frozen=True)
class PublicKey:
    curve: Curve
    imgP: Point
    imgQ: Point

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "curve": self.curve.to_json(),
                "imgP": self.imgP.to_json(), "imgQ": self.imgQ.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "PublicKey":
        E = Curve.from_json(data["curve"])
        return cls(E, Point.from_json(E, data["imgP"]), Point.from_json(E, data["imgQ"]))


def build_instance(p: int, A: int, B: int, f: Optional[int] = None, seed: int = 0,
                   mode: str = "classic") -> SidhInstance:
    if p % 4 != 3 or not is_probable_prime(p):
        raise InvalidInstance("p must be a prime congruent to 3 mod 4")
    if math.gcd(A, B) != 1:
        raise InvalidInstance("A and B must be coprime")
    E0 = starting_curve(p)
    if mode == "forged":
        return SidhInstance(p, A, B, f or 0, E0, None, None, None, None, "forged", seed)
    if mode != "classic":
        raise InvalidInstance(f"unknown mode {mode!r}")
    if (p + 1) % (A * B):
        raise InvalidInstance("A*B must divide p+1")
    cof = (p + 1) // (A * B)
    if f is not None and f != cof:
        raise InvalidInstance(f"A*B*f = {A * B * f} but p+1 = {p + 1}")
    PA, QA = torsion_basis(E0, A, seed)
    PB, QB = torsion_basis(E0, B, seed + 1)
    return SidhInstance(p, A, B, cof, E0, PA, QA, PB, QB, "classic", seed)


def check_instance(inst: SidhInstance) -> bool:
    return curve_order_check(inst.E0)


def _side(inst: SidhInstance, side: str):
    if inst.mode != "classic":
        raise InvalidInstance("forged instances carry no torsion bases")
    if side == "A":
        return inst.A, inst.PA, inst.QA, inst.PB, inst.QB
    if side == "B":
        return inst.B, inst.PB, inst.QB, inst.PA, inst.QA
    raise ValueError("side must be 'A' or 'B'")


def public_key_for(inst: SidhInstance, secret: Secret, side: str = "A") -> PublicKey:
    n, P, Q, R, S = _side(inst, side)
    K = secret.s * P + secret.t * Q
    phi = isogeny_from_kernel_point(inst.E0, K, n)
    return PublicKey(phi.codomain, phi(R), phi(S))


def make_secret(s: int, t: int, n: int) -> Secret:
    s, t = canonical_rep((s, t), n)
    return Secret(s, t, n)


def keygen(inst: SidhInstance, seed: int, side: str = "A") -> tuple[Secret, PublicKey]:
    """Secret kernel <P + [x]Q> with x uniform mod the side's degree."""
    n = _side(inst, side)[0]
    x = random.Random(seed).randrange(n)
    secret = make_secret(1, x, n)
    return secret, public_key_for(inst, secret, side)


def shared_secret(inst: SidhInstance, own: Secret, peer: PublicKey) -> Fp2:
    K = own.s * peer.imgP + own.t * peer.imgQ
    return isogeny_from_kernel_point(peer.curve, K, own.n).codomain.j_invariant()


def pairing_check(inst: SidhInstance, pk: PublicKey) -> bool:
    B = inst.B
    return weil_pairing(pk.imgP, pk.imgQ, B) == weil_pairing(inst.PB, inst.QB, B) ** inst.A


def verify_kernel(inst: SidhInstance, pk: PublicKey, s: int, t: int) -> bool:
    """Does <[s]P_A + [t]Q_A> give the published curve and torsion images,
    up to an isomorphism of the codomain?"""
    if vec_order((s, t), inst.A) != inst.A:
        return False
    K = s * inst.PA + t * inst.QA
    phi = isogeny_from_kernel_point(inst.E0, K, inst.A)
    if phi.codomain.j_invariant() != pk.curve.j_invariant():
        return False
    P, Q = phi(inst.PB), phi(inst.QB)
    for u in isomorphisms(phi.codomain, pk.curve):
        u2 = u * u
        u3 = u2 * u
        ok = True
        for X, Y in ((P, pk.imgP), (Q, pk.imgQ)):
            if X.is_identity() or Y.is_identity():
                ok = ok and X.is_identity() and Y.is_identity()
            else:
                ok = ok and u2 * X.x == Y.x and u3 * X.y == Y.y
        if ok:
            return True
    return False


def brute_force_recover(inst: SidhInstance, pk: PublicKey, limit: int = 2**20
                        ) -> tuple[Secret, Point]:
    """Try every cyclic subgroup of order A."""
    if inst.A == 1:
        return Secret(1, 0, 1), inst.E0.identity()
    reps = cyclic_reps(inst.A)
    if len(reps) > limit:
        raise ValueError("too many subgroups for exhaustive search")
    for s, t in reps:
        if verify_kernel(inst, pk, s, t):
            return Secret(s, t, inst.A), s * inst.PA + t * inst.QA
    raise NotFound("no kernel matches the public key")
