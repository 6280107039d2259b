"""Generators of weak parameters: primes p that make E0 insecure for given
(A, B), and Pythagorean pairs B^2 = A^2 + d^2 with p = A*B*f - 1."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional, Sequence, Union

from . import published as pub
from .errors import EffortExhausted, NoPrimeFound, NotSmooth, Obstruction
from .numbertheory import (GaussianInteger, cornacchia_sum_two_squares, factor, gaussian_triple,
                           is_probable_prime, is_smooth, primes_up_to)

DEFAULT_C_MAX = 10**4
DEFAULT_SPLIT_BOUND = 10**4


@dataclass(frozen=True)
class ForgedPrimeResult:
    p: int
    a: int
    b: int
    c: int
    d: int
    e: int
    D: int
    m: int
    A: int
    B: int

    def check(self) -> bool:
        return (self.A**2 * self.D + self.d**2 == self.B**2 * self.e
                and self.D == self.p * (self.a**2 + self.b**2) + self.c**2
                and self.p % 4 == 3 and is_probable_prime(self.p))

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("p", "a", "b", "c", "d", "e", "D", "m")}


def _split_small(n: int, bound: int) -> tuple[int, int]:
    """n = small * rest with small built from primes <= bound."""
    small = 1
    for q in primes_up_to(bound):
        while n % q == 0:
            n //= q
            small *= q
    return small, n


def forge_prime_hits(A: int, B: int, e_start: int = 1, c_max: int = DEFAULT_C_MAX,
                     effort: int = 16, c_start: int = 1,
                     split_bound: int = DEFAULT_SPLIT_BOUND) -> Iterator[ForgedPrimeResult]:
    """All hits for c in [c_start, c_max], for square e from e_start on."""
    if math.gcd(A, B) != 1:
        raise ValueError("A and B must be coprime")
    mod = A * A
    k = math.isqrt(e_start)
    if k * k != e_start:
        raise ValueError("e must be a square")
    for _ in range(effort):
        e = k * k
        d = k * B % mod
        D, r = divmod(B * B * e - d * d, mod)
        if r:
            raise AssertionError("B^2 e - d^2 not divisible by A^2")
        if D % 4 == 2:
            raise Obstruction(f"D = {D} is 2 mod 4")
        for c in range(c_start, c_max + 1):
            n = D - c * c
            if n <= 0:
                break
            m, q = _split_small(n, split_bound)
            if q % 4 != 3 or not is_probable_prime(q):
                continue
            ab = cornacchia_sum_two_squares(m, factor(m))
            if ab is None:
                continue
            x, y = ab
            yield ForgedPrimeResult(q, y, x, c, d, e, D, m, A, B)
        k += 1
        c_start = 1


def forge_prime(A: int, B: int, e_start: int = 1, c_max: int = DEFAULT_C_MAX,
                effort: int = 16, c_start: int = 1) -> ForgedPrimeResult:
    """First c with D - c^2 = p * m, p prime = 3 mod 4, m a sum of two squares."""
    for hit in forge_prime_hits(A, B, e_start, c_max, effort, c_start):
        if not hit.check():
            raise AssertionError("forged prime identities failed")
        return hit
    raise EffortExhausted("no prime found in the c range")


@dataclass(frozen=True)
class TripleParams:
    A: int
    B: int
    d: int
    f: int
    p: int

    def check(self) -> bool:
        return (self.B**2 - self.A**2 - self.d**2 == 0 and math.gcd(self.A, self.B) == 1
                and self.p == self.A * self.B * self.f - 1 and self.p % 4 == 3)

    def to_json(self) -> dict:
        return {k: str(getattr(self, k)) for k in ("A", "B", "d", "f", "p")}


def is_powersmooth(n: int, bound: int) -> bool:
    if not is_smooth(n, bound):
        return False
    return all(q**k <= bound for q, k in factor(n))


GaussInput = Union[GaussianInteger, Sequence[tuple[GaussianInteger, int]]]


def _gauss_z(w: GaussInput, k: int) -> GaussianInteger:
    if isinstance(w, GaussianInteger):
        return w**k
    z = GaussianInteger(1, 0)
    for wi, ei in w:
        z = z * wi**ei
    return z**k


def triple_legs(w: GaussInput, k: int = 1) -> tuple[int, int, int]:
    return gaussian_triple(_gauss_z(w, k))


def triple_primes(A: int, B: int, f_max: int, f_start: int = 1) -> Iterator[int]:
    for f in range(f_start, f_max + 1):
        p = A * B * f - 1
        if p % 4 == 3 and is_probable_prime(p):
            yield f


def forge_triple(w: GaussInput, k: int = 1, smooth_bound: int = 2**30, f_max: int = 1000,
                 mode: str = "smooth") -> TripleParams:
    """B = N(z) for z = w^k; A is whichever leg passes the smoothness test
    (the smaller one if both do); f is the first cofactor making
    A*B*f - 1 a prime congruent to 3 mod 4."""
    B, x, y = triple_legs(w, k)
    test = is_smooth if mode == "smooth" else is_powersmooth
    legs = [(L, o) for L, o in ((x, y), (y, x)) if L > 0 and test(L, smooth_bound)]
    if not legs:
        raise NotSmooth("neither leg is smooth enough")
    A, d = min(legs)
    for f in triple_primes(A, B, f_max):
        params = TripleParams(A, B, d, f, A * B * f - 1)
        assert params.check()
        return params
    raise NoPrimeFound(f"no cofactor f <= {f_max} gives a prime")


# ------------------------------------------------------------- verification

@dataclass(frozen=True)
class Check:
    name: str
    passed: bool
    detail: str = ""


def _prime_3mod4(n: int) -> bool:
    return n % 4 == 3 and is_probable_prime(n)


def _is_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


PRIME_CLAIMS = ("D", "prime_c53", "prime_c355", "triple_17_60", "triple_powersmooth")


def verify_insecure_primes(claims: Optional[Sequence[str]] = None,
                      values: Optional[dict] = None) -> list[Check]:
    """Recompute the printed insecure-prime examples. values overrides the
    stored constants by name (used for mutation tests)."""
    v = {k: getattr(pub, k) for k in dir(pub) if k.isupper()}
    v.update(values or {})
    claims = PRIME_CLAIMS if claims is None else claims
    out = []
    A, B = v["FORGE_A"], v["FORGE_B"]
    d = B % (A * A)
    D = (B * B - d * d) // (A * A)
    for name in claims:
        if name == "D":
            out.append(Check(name, D == int(v["FORGE_D"]), "D = (B^2 - d^2)/A^2"))
        elif name == "prime_c53":
            p = int(v["FORGE_P_C53"])
            ok = D - 53**2 == p and _prime_3mod4(p)
            out.append(Check(name, ok, "D - 53^2 is the printed prime, 3 mod 4"))
        elif name == "prime_c355":
            p = int(v["FORGE_P_C355"])
            ok = D - 355**2 == 5 * p and _prime_3mod4(p)
            out.append(Check(name, ok, "D - 355^2 = 5 * printed prime, 3 mod 4"))
        elif name in ("triple_17_60", "triple_powersmooth"):
            key = "SEVENTEEN" if name == "triple_17_60" else "POWERSMOOTH"
            Bt, At = v[f"{key}_B"], pub.product_of(v[f"{key}_A_FACTORS"])
            f = v[f"{key}_COFACTOR"]
            out.append(Check(f"{name}_pythagorean",
                             _is_square(Bt * Bt - At * At) and math.gcd(At, Bt) == 1,
                             "B^2 - A^2 is a square and gcd(A, B) = 1"))
            out.append(Check(f"{name}_prime", _prime_3mod4(f * At * Bt - 1),
                             f"{f}AB - 1 prime, 3 mod 4"))
        else:
            raise ValueError(f"unknown claim {name!r}")
    return out


def verify_gaussian_triple(values: Optional[dict] = None) -> list[Check]:
    """The B = 5^105 triple built from z = (2+i)^105."""
    v = {k: getattr(pub, k) for k in dir(pub) if k.isupper()}
    v.update(values or {})
    B, x, y = gaussian_triple(GaussianInteger(2, 1) ** 105)
    A = pub.product_of(v["GAUSS_A_FACTORS"])
    d = pub.product_of(v["GAUSS_D_FACTORS"])
    out = [
        Check("norm_is_5^105", B == v["GAUSS_B"]),
        Check("legs_match", {A, d} == {x, y}, "A, d are |Re z^2|, |Im z^2|"),
        Check("pythagorean", A * A + d * d == B * B),
        Check("A_smooth", is_smooth(A, 2**30), "largest factor < 2^30"),
    ]
    for f in v["GAUSS_COFACTORS"]:
        out.append(Check(f"prime_f{f}", _prime_3mod4(f * A * B - 1), f"{f}AB - 1 prime, 3 mod 4"))
    return out


def verify_order_example(values: Optional[dict] = None) -> list[Check]:
    v = {k: getattr(pub, k) for k in dir(pub) if k.isupper()}
    v.update(values or {})
    A, B, p = v["ORDER_A"], v["ORDER_B"], v["ORDER_P"]
    d = B % (A * A)
    target, r = divmod(B * B - d * d, A * A)
    small = v["ORDER_SMALL_FACTORS"]
    big = int(v["ORDER_LARGE_FACTOR"])
    a, b, c, z = (Fraction(int(v[k]), int(v["ORDER_RATIONAL_Z"]))
                  for k in ("ORDER_RATIONAL_A", "ORDER_RATIONAL_B", "ORDER_RATIONAL_C",
                            "ORDER_RATIONAL_Z"))
    return [
        Check("p_prime_3mod4", _prime_3mod4(p)),
        Check("factor_product", r == 0 and pub.product_of(small) * big == target,
              "product of printed factors equals (B^2 - d^2)/A^2"),
        Check("factors_prime", all(is_probable_prime(q) for q in small + [big])),
        Check("rational_solution", p * a * a + p * b * b + c * c == target,
              "p a^2 + p b^2 + c^2 = (B^2 - d^2)/A^2"),
    ]
