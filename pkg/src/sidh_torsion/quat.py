"""The quaternion algebra B_{p,inf} with basis (1, i, j, k = ij), i^2 = -1,
j^2 = -p; orders as Z-lattices, and a search for an order containing an
element of prescribed norm followed by saturation to a maximal order."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import EffortExhausted, SaturationStuck
from .numbertheory import (Factorization, cornacchia_sum_two_squares, factor, legendre,
                           sqrt_mod)


@dataclass(frozen=True)
class QuaternionElement:
    t: Fraction
    x: Fraction
    y: Fraction
    z: Fraction
    p: int

    def __post_init__(self):
        for name in ("t", "x", "y", "z"):
            object.__setattr__(self, name, Fraction(getattr(self, name)))

    @classmethod
    def basis(cls, p: int) -> tuple["QuaternionElement", ...]:
        return tuple(cls(*(1 if k == m else 0 for k in range(4)), p) for m in range(4))

    @property
    def coeffs(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.t, self.x, self.y, self.z)

    def __add__(self, o: "QuaternionElement") -> "QuaternionElement":
        return QuaternionElement(*(a + b for a, b in zip(self.coeffs, o.coeffs)), self.p)

    def __sub__(self, o: "QuaternionElement") -> "QuaternionElement":
        return QuaternionElement(*(a - b for a, b in zip(self.coeffs, o.coeffs)), self.p)

    def __neg__(self) -> "QuaternionElement":
        return QuaternionElement(*(-a for a in self.coeffs), self.p)

    def scale(self, s) -> "QuaternionElement":
        return QuaternionElement(*(a * s for a in self.coeffs), self.p)

    def __mul__(self, o) -> "QuaternionElement":
        if not isinstance(o, QuaternionElement):
            return self.scale(o)
        return qmul(self, o)

    __rmul__ = scale

    def conj(self) -> "QuaternionElement":
        return QuaternionElement(self.t, -self.x, -self.y, -self.z, self.p)

    def __repr__(self) -> str:
        return f"Q({self.t}, {self.x}, {self.y}, {self.z})"


def qmul(u: QuaternionElement, v: QuaternionElement) -> QuaternionElement:
    p = u.p
    t1, x1, y1, z1 = u.coeffs
    t2, x2, y2, z2 = v.coeffs
    return QuaternionElement(
        t1 * t2 - x1 * x2 - p * y1 * y2 - p * z1 * z2,
        t1 * x2 + x1 * t2 + p * (y1 * z2 - z1 * y2),
        t1 * y2 + y1 * t2 - x1 * z2 + z1 * x2,
        t1 * z2 + z1 * t2 + x1 * y2 - y1 * x2,
        p,
    )


def nrd(u: QuaternionElement) -> Fraction:
    return u.t**2 + u.x**2 + u.p * u.y**2 + u.p * u.z**2


def trd(u: QuaternionElement) -> Fraction:
    return 2 * u.t


def qform_solvable(D: int, p: int) -> bool:
    """Does p a^2 + p b^2 + c^2 = D z^2 have a nontrivial rational zero?
    For p = 3 mod 4 this happens exactly when D is a square mod p."""
    return legendre(D, p) != -1


# -------------------------------------------------------------- lattices

def _hnf_rows(rows: list[list[int]]) -> list[list[int]]:
    """Row Hermite normal form of an integer matrix (zero rows dropped)."""
    rows = [list(r) for r in rows if any(r)]
    ncols = len(rows[0]) if rows else 0
    out = []
    col = 0
    while rows and col < ncols:
        nz = [r for r in rows if r[col]]
        zs = [r for r in rows if not r[col]]
        if not nz:
            col += 1
            continue
        while len(nz) > 1:
            nz.sort(key=lambda r: abs(r[col]))
            piv = nz[0]
            rest = []
            for r in nz[1:]:
                q = r[col] // piv[col]
                r = [a - q * b for a, b in zip(r, piv)]
                if r[col]:
                    rest.append(r)
                elif any(r):
                    zs.append(r)
            nz = [piv] + rest
        piv = nz[0]
        if piv[col] < 0:
            piv = [-a for a in piv]
        out.append(piv)
        rows = zs
        col += 1
    for i, r in enumerate(out):
        c = next(k for k, a in enumerate(r) if a)
        for j in range(i):
            q = out[j][c] // r[c]
            out[j] = [a - q * b for a, b in zip(out[j], r)]
    return out


@dataclass(frozen=True)
class QuaternionOrder:
    basis: tuple[QuaternionElement, ...]
    p: int

    @classmethod
    def from_generators(cls, gens: Iterable[QuaternionElement], p: int) -> "QuaternionOrder":
        """The Z-lattice spanned by gens, in a canonical (HNF) basis."""
        gens = list(gens)
        den = reduce(math.lcm, (c.denominator for g in gens for c in g.coeffs), 1)
        rows = [[int(c * den) for c in g.coeffs] for g in gens]
        H = _hnf_rows(rows)
        if len(H) != 4:
            raise ValueError("generators do not span a rank-4 lattice")
        basis = tuple(QuaternionElement(*(Fraction(a, den) for a in r), p) for r in H)
        return cls(basis, p)

    @classmethod
    def standard(cls, p: int) -> "QuaternionOrder":
        return cls.from_generators(QuaternionElement.basis(p), p)

    def coordinates(self, v: QuaternionElement) -> Optional[list[Fraction]]:
        """Coefficients of v in the basis (basis is upper triangular)."""
        rem = list(v.coeffs)
        out = [Fraction(0)] * 4
        for i, b in enumerate(self.basis):
            c = next(k for k, a in enumerate(b.coeffs) if a)
            q = rem[c] / b.coeffs[c]
            out[i] = q
            rem = [a - q * bb for a, bb in zip(rem, b.coeffs)]
        if any(rem):
            return None
        return out

    def contains(self, v: QuaternionElement) -> bool:
        co = self.coordinates(v)
        return co is not None and all(c.denominator == 1 for c in co)

    def is_closed(self) -> bool:
        one = QuaternionElement(1, 0, 0, 0, self.p)
        if not self.contains(one):
            return False
        return all(self.contains(qmul(a, b)) for a in self.basis for b in self.basis)

    def gram(self) -> list[list[Fraction]]:
        return [[trd(qmul(a, b)) for b in self.basis] for a in self.basis]

    def reduced_discriminant(self) -> int:
        G = self.gram()
        det = abs(_det(G))
        if det.denominator != 1:
            raise ValueError("Gram determinant is not integral")
        r = math.isqrt(det.numerator)
        if r * r != det.numerator:
            raise ValueError("Gram determinant is not a square")
        return r

    def to_json(self) -> list[list[list[str]]]:
        return [[[str(c.numerator), str(c.denominator)] for c in b.coeffs] for b in self.basis]


def _det(M: list[list[Fraction]]) -> Fraction:
    M = [list(r) for r in M]
    n = len(M)
    det = Fraction(1)
    for c in range(n):
        piv = next((r for r in range(c, n) if M[r][c]), None)
        if piv is None:
            return Fraction(0)
        if piv != c:
            M[c], M[piv] = M[piv], M[c]
            det = -det
        det *= M[c][c]
        for r in range(c + 1, n):
            f = M[r][c] / M[c][c]
            M[r] = [a - f * b for a, b in zip(M[r], M[c])]
    return det


def _kernel_mod_prime(G: list[list[int]], ell: int) -> list[list[int]]:
    """Basis of the right null space of G over F_ell."""
    n = len(G)
    M = [[a % ell for a in r] for r in G]
    pivots = []
    row = 0
    for c in range(n):
        piv = next((r for r in range(row, n) if M[r][c]), None)
        if piv is None:
            continue
        M[row], M[piv] = M[piv], M[row]
        inv = pow(M[row][c], -1, ell)
        M[row] = [a * inv % ell for a in M[row]]
        for r in range(n):
            if r != row and M[r][c]:
                f = M[r][c]
                M[r] = [(a - f * b) % ell for a, b in zip(M[r], M[row])]
        pivots.append(c)
        row += 1
    free = [c for c in range(n) if c not in pivots]
    basis = []
    for fcol in free:
        v = [0] * n
        v[fcol] = 1
        for r, pc in enumerate(pivots):
            v[pc] = -M[r][fcol] % ell
        basis.append(v)
    return basis


def _lines(basis: list[list[int]], ell: int) -> list[list[int]]:
    """One nonzero vector per line of the span of basis over F_ell.

    The order is reverse lexicographic in the kernel coordinates; from
    Z<1, i, j, ij> this reaches <1, i, (i+j)/2, (1+ij)/2>, the order
    matching End(E0)."""
    k = len(basis)
    out = []
    for coeffs in product(range(ell), repeat=k):
        lead = next((c for c in coeffs if c), None)
        if lead != 1:
            continue
        out.append([sum(c * b[i] for c, b in zip(coeffs, basis)) % ell
                    for i in range(len(basis[0]))])
    return out[::-1]


def _element(order: QuaternionOrder, coords: Sequence[int], ell: int) -> QuaternionElement:
    v = QuaternionElement(0, 0, 0, 0, order.p)
    for c, b in zip(coords, order.basis):
        v = v + b.scale(c)
    return v.scale(Fraction(1, ell))


def _integral(v: QuaternionElement) -> bool:
    return trd(v).denominator == 1 and nrd(v).denominator == 1


def _enlarge_at(order: QuaternionOrder, ell: int) -> Optional[QuaternionOrder]:
    G = order.gram()
    Gi = [[int(a) for a in r] for r in G]
    ker = _kernel_mod_prime(Gi, ell)
    if not ker:
        return None
    for v in _lines(ker, ell):
        w = _element(order, v, ell)
        if not _integral(w):
            continue
        cand = QuaternionOrder.from_generators(list(order.basis) + [w], order.p)
        if cand.is_closed():
            return cand
    if len(ker) >= 2:
        lines = list(_lines(ker, ell))
        for i, v1 in enumerate(lines):
            for v2 in lines[i + 1:]:
                w1, w2 = _element(order, v1, ell), _element(order, v2, ell)
                if not (_integral(w1) and _integral(w2)):
                    continue
                cand = QuaternionOrder.from_generators(list(order.basis) + [w1, w2], order.p)
                if cand.is_closed():
                    return cand
    return None


def saturate_to_maximal(order: QuaternionOrder, factored_disc: Optional[Factorization] = None,
                        max_rounds: int = 256) -> QuaternionOrder:
    """Enlarge the order prime by prime until its reduced discriminant is p."""
    p = order.p
    if not order.is_closed():
        raise ValueError("input lattice is not an order")
    disc = order.reduced_discriminant()
    primes = (factored_disc or factor(disc)).primes
    for _ in range(max_rounds):
        if disc == p:
            return order
        progress = False
        for ell in primes:
            if disc % ell or (ell == p and disc % (p * p)):
                continue
            bigger = _enlarge_at(order, ell)
            if bigger is not None:
                order = bigger
                disc = order.reduced_discriminant()
                progress = True
                break
        if not progress:
            raise SaturationStuck(f"cannot enlarge order with reduced discriminant {disc}")
    raise SaturationStuck("round limit reached")


# ------------------------------------------------ orders with a given element

def _orthogonal_lattice(theta: QuaternionElement) -> list[tuple[int, int, int]]:
    """Integer (x, y, z) with x*c + p*y*b + p*z*a = 0 for theta = c i + b j + a k."""
    p = theta.p
    w = [int(theta.x), p * int(theta.y), p * int(theta.z)]
    # unimodular column reduction of the row w; the columns that end up
    # against zeros span the kernel
    U = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    w = list(w)
    while sum(1 for a in w if a) > 1:
        nz = sorted((k for k in range(3) if w[k]), key=lambda k: abs(w[k]))
        piv = nz[0]
        for k in nz[1:]:
            q = w[k] // w[piv]
            w[k] -= q * w[piv]
            for r in range(3):
                U[r][k] -= q * U[r][piv]
    return [tuple(U[r][k] for r in range(3)) for k in range(3) if w[k] == 0]


def _gauss_reduce(u, v, form):
    def dot(a, b):
        return (form(tuple(x + y for x, y in zip(a, b))) - form(a) - form(b)) / 2

    if form(u) > form(v):
        u, v = v, u
    while True:
        m = round(Fraction(dot(u, v)) / form(u))
        v = tuple(b - m * a for a, b in zip(u, v))
        if form(v) >= form(u):
            return u, v
        u, v = v, u


def orthogonal_element(theta: QuaternionElement) -> QuaternionElement:
    """A short trace-zero integral theta' with theta theta' = -theta' theta."""
    p = theta.p
    form = lambda v: v[0] ** 2 + p * v[1] ** 2 + p * v[2] ** 2
    u, v = _orthogonal_lattice(theta)
    u, v = _gauss_reduce(u, v, form)
    best = min((u, v), key=lambda w: (form(w), abs(w[2]), abs(w[0])))
    if next(a for a in best if a) < 0:
        best = tuple(-a for a in best)
    return QuaternionElement(0, best[0], best[1], best[2], p)


def order_from_pair(theta: QuaternionElement, theta2: QuaternionElement) -> QuaternionOrder:
    one = QuaternionElement(1, 0, 0, 0, theta.p)
    return QuaternionOrder.from_generators([one, theta, theta2, qmul(theta, theta2)], theta.p)


@dataclass(frozen=True)
class InsecureOrderResult:
    order: QuaternionOrder
    theta: QuaternionElement
    theta_prime: QuaternionElement
    d: int
    e: int
    D: int
    start_order: QuaternionOrder


def _norm_form_solution(D: int, p: int, max_c: int = 10**6) -> Optional[tuple[int, int, int]]:
    """Integers (a, b, c) with p(a^2 + b^2) + c^2 = D, trying c over the
    square roots of D mod p in ascending order."""
    roots = sorted(sqrt_mod(D, p))
    tried = 0
    k = 0
    while True:
        cs = [r + k * p for r in roots]
        if all(c * c > D for c in cs):
            return None
        for c in cs:
            if c * c > D:
                continue
            tried += 1
            if tried > max_c:
                return None
            rest = (D - c * c) // p
            ab = cornacchia_sum_two_squares(rest, factor(rest, rho_budget=10**6) if rest else None)
            if ab is not None:
                return ab[0], ab[1], c
        k += 1


def norm_candidates(p: int, A: int, B: int, effort: int = 1000):
    """(e, d, D) for square e = 1, 4, 9, ... that pass the gcd, positivity
    and residuosity filters."""
    if math.gcd(A, B) != 1 or p % 4 != 3:
        raise ValueError("need gcd(A, B) = 1 and p = 3 mod 4")
    mod = A * A
    mod_fac = factor(mod)
    for k in range(1, effort + 1):
        e = k * k
        roots = sqrt_mod(B * B * e % mod, mod, mod_fac)
        if not roots:
            continue
        d = min(r if r > 0 else mod for r in roots)
        if math.gcd(d, B) != 1 or B * B * e - d * d <= 0:
            continue
        D = (B * B * e - d * d) // mod
        if qform_solvable(D, p):
            yield e, d, D


def build_insecure_order(p: int, A: int, B: int, effort: int = 1000) -> InsecureOrderResult:
    """e runs over squares; d is the smallest positive root of B^2 e mod A^2;
    D = (B^2 e - d^2) / A^2 must be a square mod p; theta = a ij + b j + c i
    with nrd(theta) = D; then Z<1, theta, theta', theta theta'> is
    saturated to a maximal order."""
    for e, d, D in norm_candidates(p, A, B, effort):
        sol = _norm_form_solution(D, p)
        if sol is None:
            continue
        a, b, c = sol
        theta = QuaternionElement(0, c, b, a, p)
        assert nrd(theta) == D
        theta2 = orthogonal_element(theta)
        O0 = order_from_pair(theta, theta2)
        disc = O0.reduced_discriminant()
        fac = factor(disc)
        O = saturate_to_maximal(O0, fac)
        return InsecureOrderResult(O, theta, theta2, d, e, D, O0)
    raise EffortExhausted("no suitable e within effort")
