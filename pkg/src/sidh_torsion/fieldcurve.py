"""F_p^2 = F_p(i) arithmetic, short Weierstrass curves, Velu isogeny chains,
the Weil pairing and two-dimensional discrete logarithms."""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from typing import Callable, Iterable, Optional, Sequence, Union

from .errors import BadKernelOrder, NotInSpan, TorsionUnavailable
from .numbertheory import Factorization, crt, factor, is_probable_prime

VELU_PRIME_CAP = 2**16


class Fp2:
    """c0 + c1*i with i^2 = -1, for a prime p = 3 mod 4."""

    __slots__ = ("c0", "c1", "p")

    def __init__(self, c0: int, c1: int, p: int):
        self.c0 = c0 % p
        self.c1 = c1 % p
        self.p = p

    @classmethod
    def of(cls, v: Union["Fp2", int], p: int) -> "Fp2":
        return v if isinstance(v, Fp2) else cls(v, 0, p)

    def _lift(self, o) -> "Fp2":
        return o if isinstance(o, Fp2) else Fp2(o, 0, self.p)

    def __add__(self, o) -> "Fp2":
        o = self._lift(o)
        return Fp2(self.c0 + o.c0, self.c1 + o.c1, self.p)

    __radd__ = __add__

    def __sub__(self, o) -> "Fp2":
        o = self._lift(o)
        return Fp2(self.c0 - o.c0, self.c1 - o.c1, self.p)

    def __rsub__(self, o) -> "Fp2":
        return self._lift(o) - self

    def __neg__(self) -> "Fp2":
        return Fp2(-self.c0, -self.c1, self.p)

    def __mul__(self, o) -> "Fp2":
        if isinstance(o, int):
            return Fp2(self.c0 * o, self.c1 * o, self.p)
        a, b, c, d = self.c0, self.c1, o.c0, o.c1
        return Fp2(a * c - b * d, a * d + b * c, self.p)

    __rmul__ = __mul__

    def norm(self) -> int:
        return (self.c0 * self.c0 + self.c1 * self.c1) % self.p

    def inverse(self) -> "Fp2":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in F_p^2")
        t = pow(n, -1, self.p)
        return Fp2(self.c0 * t, -self.c1 * t, self.p)

    def __truediv__(self, o) -> "Fp2":
        return self * self._lift(o).inverse()

    def __rtruediv__(self, o) -> "Fp2":
        return self._lift(o) * self.inverse()

    def __pow__(self, k: int) -> "Fp2":
        if k < 0:
            return self.inverse() ** (-k)
        result, base = Fp2(1, 0, self.p), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, o) -> bool:
        if isinstance(o, int):
            return self.c1 == 0 and self.c0 == o % self.p
        return isinstance(o, Fp2) and self.p == o.p and self.c0 == o.c0 and self.c1 == o.c1

    def __hash__(self) -> int:
        return hash((self.c0, self.c1, self.p))

    def __bool__(self) -> bool:
        return bool(self.c0 or self.c1)

    def __repr__(self) -> str:
        return f"Fp2({self.c0}, {self.c1})"

    def is_zero(self) -> bool:
        return not (self.c0 or self.c1)

    def conjugate(self) -> "Fp2":
        """The p-power Frobenius."""
        return Fp2(self.c0, -self.c1, self.p)

    def is_square(self) -> bool:
        if self.is_zero():
            return True
        n = self.norm()
        return pow(n, (self.p - 1) // 2, self.p) == 1

    def sqrt(self) -> Optional["Fp2"]:
        """A square root, or None. The norm map reduces this to two square
        roots in F_p."""
        p = self.p
        if self.is_zero():
            return Fp2(0, 0, p)
        a0, a1 = self.c0, self.c1
        e = (p + 1) // 4
        if a1 == 0:
            r = pow(a0, e, p)
            if r * r % p == a0:
                return Fp2(r, 0, p)
            r = pow(-a0 % p, e, p)
            return Fp2(0, r, p)
        s = pow((a0 * a0 + a1 * a1) % p, e, p)
        if s * s % p != (a0 * a0 + a1 * a1) % p:
            return None
        half = pow(2, -1, p)
        for t in ((a0 + s) * half % p, (a0 - s) * half % p):
            x0 = pow(t, e, p)
            if x0 * x0 % p == t and x0:
                x1 = a1 * pow(2 * x0, -1, p) % p
                cand = Fp2(x0, x1, p)
                if cand * cand == self:
                    return cand
        return None

    def to_json(self) -> list[str]:
        return [str(self.c0), str(self.c1)]

    @classmethod
    def from_json(cls, data: Sequence, p: int) -> "Fp2":
        return cls(int(data[0]), int(data[1]), p)


# ---------------------------------------------------------------- polynomials

def _ptrim(f: list[Fp2]) -> list[Fp2]:
    while f and f[-1].is_zero():
        f.pop()
    return f


def _pmul(f: list[Fp2], g: list[Fp2], p: int) -> list[Fp2]:
    if not f or not g:
        return []
    out = [Fp2(0, 0, p) for _ in range(len(f) + len(g) - 1)]
    for i, a in enumerate(f):
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return _ptrim(out)


def _pdivmod(f: list[Fp2], g: list[Fp2], p: int) -> tuple[list[Fp2], list[Fp2]]:
    f = list(f)
    if len(f) < len(g):
        return [], f
    inv = g[-1].inverse()
    q = [Fp2(0, 0, p) for _ in range(len(f) - len(g) + 1)]
    while len(f) >= len(g) and f:
        c = f[-1] * inv
        k = len(f) - len(g)
        q[k] = c
        for i, b in enumerate(g):
            f[k + i] = f[k + i] - c * b
        _ptrim(f)
    return _ptrim(q), f


def _pgcd(f: list[Fp2], g: list[Fp2], p: int) -> list[Fp2]:
    while g:
        f, g = g, _pdivmod(f, g, p)[1]
    if f:
        inv = f[-1].inverse()
        f = [c * inv for c in f]
    return f


def _ppowmod(base: list[Fp2], k: int, mod: list[Fp2], p: int) -> list[Fp2]:
    result = [Fp2(1, 0, p)]
    base = _pdivmod(base, mod, p)[1]
    while k:
        if k & 1:
            result = _pdivmod(_pmul(result, base, p), mod, p)[1]
        base = _pdivmod(_pmul(base, base, p), mod, p)[1]
        k >>= 1
    return result


def poly_roots(coeffs: Sequence[Fp2], p: int, seed: int = 0) -> list[Fp2]:
    """Distinct roots in F_p^2 of the polynomial (coefficients low to high),
    by Cantor-Zassenhaus equal-degree splitting."""
    f = _ptrim(list(coeffs))
    if len(f) <= 1:
        return []
    q = p * p
    x = [Fp2(0, 0, p), Fp2(1, 0, p)]
    xq = _ppowmod(x, q, f, p)
    diff = list(xq) + [Fp2(0, 0, p)] * max(0, 2 - len(xq))
    diff[1] = diff[1] - Fp2(1, 0, p)
    g = _pgcd(f, _ptrim(diff), p)
    rng = random.Random(seed)
    roots: list[Fp2] = []
    stack = [g] if len(g) > 1 else []
    while stack:
        h = stack.pop()
        if len(h) == 2:
            roots.append(-h[0] / h[1])
            continue
        while True:
            delta = Fp2(rng.randrange(p), rng.randrange(p), p)
            t = _ppowmod([delta, Fp2(1, 0, p)], (q - 1) // 2, h, p)
            t = list(t) + [Fp2(0, 0, p)] * max(0, 1 - len(t))
            t[0] = t[0] - Fp2(1, 0, p)
            s = _pgcd(h, _ptrim(t), p)
            if 1 < len(s) < len(h):
                stack += [s, _pdivmod(h, s, p)[0]]
                break
    return sorted(roots, key=lambda r: (r.c0, r.c1))


def nth_roots(c: Fp2, k: int) -> list[Fp2]:
    p = c.p
    return poly_roots([-c] + [Fp2(0, 0, p)] * (k - 1) + [Fp2(1, 0, p)], p)


# --------------------------------------------------------------------- curves

@dataclass(frozen=True)
class Curve:
    """y^2 = x^3 + a*x + b over F_p^2."""

    a: Fp2
    b: Fp2

    @property
    def p(self) -> int:
        return self.a.p

    @classmethod
    def from_ints(cls, a: int, b: int, p: int) -> "Curve":
        return cls(Fp2(a, 0, p), Fp2(b, 0, p))

    def discriminant_zero(self) -> bool:
        return (4 * self.a**3 + 27 * self.b**2).is_zero()

    def j_invariant(self) -> Fp2:
        a3 = 4 * self.a**3
        return 1728 * a3 / (a3 + 27 * self.b**2)

    def rhs(self, x: Fp2) -> Fp2:
        return x * x * x + self.a * x + self.b

    def identity(self) -> "Point":
        return Point(self, None, None)

    def point(self, x, y) -> "Point":
        P = Point(self, Fp2.of(x, self.p), Fp2.of(y, self.p))
        if not self.contains(P):
            raise ValueError("point not on curve")
        return P

    def contains(self, P: "Point") -> bool:
        return P.x is None or P.y * P.y == self.rhs(P.x)

    def random_point(self, rng: random.Random) -> "Point":
        p = self.p
        while True:
            x = Fp2(rng.randrange(p), rng.randrange(p), p)
            y = self.rhs(x).sqrt()
            if y is not None:
                if rng.randrange(2):
                    y = -y
                return Point(self, x, y)

    def to_json(self) -> dict:
        return {"p": str(self.p), "a": self.a.to_json(), "b": self.b.to_json()}

    @classmethod
    def from_json(cls, data: dict) -> "Curve":
        p = int(data["p"])
        return cls(Fp2.from_json(data["a"], p), Fp2.from_json(data["b"], p))


def starting_curve(p: int) -> Curve:
    """E0: y^2 = x^3 + x."""
    return Curve.from_ints(1, 0, p)


class Point:
    __slots__ = ("curve", "x", "y")

    def __init__(self, curve: Curve, x: Optional[Fp2], y: Optional[Fp2]):
        self.curve = curve
        self.x = x
        self.y = y

    def is_identity(self) -> bool:
        return self.x is None

    def __eq__(self, o) -> bool:
        if not isinstance(o, Point) or self.curve != o.curve:
            return False
        if self.x is None or o.x is None:
            return self.x is None and o.x is None
        return self.x == o.x and self.y == o.y

    def __hash__(self) -> int:
        return hash((self.x, self.y))

    def __repr__(self) -> str:
        return "Point(O)" if self.x is None else f"Point({self.x}, {self.y})"

    def __neg__(self) -> "Point":
        if self.x is None:
            return self
        return Point(self.curve, self.x, -self.y)

    def __add__(self, o: "Point") -> "Point":
        if self.x is None:
            return o
        if o.x is None:
            return self
        if self.x == o.x:
            if self.y == -o.y:
                return self.curve.identity()
            lam = (3 * self.x * self.x + self.curve.a) / (2 * self.y)
        else:
            lam = (o.y - self.y) / (o.x - self.x)
        x3 = lam * lam - self.x - o.x
        return Point(self.curve, x3, lam * (self.x - x3) - self.y)

    def __sub__(self, o: "Point") -> "Point":
        return self + (-o)

    def __rmul__(self, k: int) -> "Point":
        if k < 0:
            return (-k) * (-self)
        result = self.curve.identity()
        base = self
        while k:
            if k & 1:
                result = result + base
            base = base + base
            k >>= 1
        return result

    def to_json(self):
        if self.x is None:
            return None
        return [self.x.to_json(), self.y.to_json()]

    @classmethod
    def from_json(cls, curve: Curve, data) -> "Point":
        if data is None:
            return curve.identity()
        return curve.point(Fp2.from_json(data[0], curve.p), Fp2.from_json(data[1], curve.p))


def _fac(n: int | Factorization) -> Factorization:
    return n if isinstance(n, Factorization) else factor(n)


def point_order(P: Point, multiple: int | Factorization) -> int:
    """Exact order of P, given some multiple of it."""
    fac = _fac(multiple)
    n = fac.value
    if not (n * P).is_identity():
        raise ValueError("given multiple does not kill the point")
    for q, e in fac:
        for _ in range(e):
            if ((n // q) * P).is_identity():
                n //= q
            else:
                break
    return n


def has_exact_order(P: Point, n: int | Factorization) -> bool:
    fac = _fac(n)
    if not (fac.value * P).is_identity():
        return False
    return all(not ((fac.value // q) * P).is_identity() for q, _ in fac)


def curve_order_check(E: Curve, seed: int = 0, samples: int = 20) -> bool:
    """True iff #E(F_p^2) = (p+1)^2, tested on random points."""
    p = E.p
    if E.discriminant_zero():
        return False
    rng = random.Random(seed)
    fac = factor(p + 1)
    witness = False
    for _ in range(samples):
        R = E.random_point(rng)
        if not ((p + 1) * R).is_identity():
            return False
        witness = witness or has_exact_order(R, fac)
    tries = 0
    while not witness and tries < 200:
        witness = has_exact_order(E.random_point(rng), fac)
        tries += 1
    return witness


# -------------------------------------------------------------- Weil pairing

def _miller(P: Point, R1: Point, R2: Point, n: int) -> Fp2:
    """f_{n,P}(R1) / f_{n,P}(R2) with div f = n(P) - n(O)."""
    E = P.curve
    a = E.a
    num = Fp2(1, 0, E.p)
    den = Fp2(1, 0, E.p)
    T = P

    def line(T: Point, U: Point, R: Point) -> tuple[Fp2, Fp2]:
        # line through T and U, divided by the vertical at T+U, at R
        if T.x is None or U.x is None:
            return Fp2(1, 0, E.p), Fp2(1, 0, E.p)
        if T.x == U.x and T.y == -U.y:
            return R.x - T.x, Fp2(1, 0, E.p)
        if T == U:
            lam = (3 * T.x * T.x + a) / (2 * T.y)
        else:
            lam = (U.y - T.y) / (U.x - T.x)
        x3 = lam * lam - T.x - U.x
        return R.y - T.y - lam * (R.x - T.x), R.x - x3

    for bit in bin(n)[3:]:
        l1, v1 = line(T, T, R1)
        l2, v2 = line(T, T, R2)
        num = num * num * l1 * v2
        den = den * den * v1 * l2
        T = T + T
        if bit == "1":
            l1, v1 = line(T, P, R1)
            l2, v2 = line(T, P, R2)
            num = num * l1 * v2
            den = den * v1 * l2
            T = T + P
    if den.is_zero() or num.is_zero():
        raise ZeroDivisionError("degenerate Miller evaluation")
    return num / den


def weil_pairing(P: Point, Q: Point, n: int, seed: int = 0) -> Fp2:
    """e_n(P, Q) by Miller's algorithm with a random shift point."""
    E = P.curve
    one = Fp2(1, 0, E.p)
    if P.is_identity() or Q.is_identity() or n == 1:
        return one
    rng = random.Random(seed)
    for _ in range(64):
        S = E.random_point(rng)
        try:
            fP = _miller(P, Q + S, S, n)
            fQ = _miller(Q, P - S, -S, n)
        except ZeroDivisionError:
            continue
        if any(X.is_identity() for X in (Q + S, P - S)):
            continue
        return fP / fQ
    raise RuntimeError("no usable shift point for the Weil pairing")


def _mult_order(z: Fp2, fac: Factorization) -> int:
    n = fac.value
    for q, e in fac:
        for _ in range(e):
            if z ** (n // q) == 1:
                n //= q
            else:
                break
    return n


def _bsgs(h: Fp2, g: Fp2, n: int) -> int:
    """x in [0, n) with g^x = h, g of order n."""
    m = math.isqrt(n) + 1
    table = {}
    cur = Fp2(1, 0, g.p)
    for j in range(m):
        table.setdefault(cur, j)
        cur = cur * g
    step = g ** (-m)
    gamma = h
    for i in range(m + 1):
        if gamma in table:
            return (i * m + table[gamma]) % n
        gamma = gamma * step
    raise NotInSpan("discrete log does not exist")


def dlog_fp2(h: Fp2, g: Fp2, n: int | Factorization) -> int:
    """Pohlig-Hellman discrete log of h to base g (g of order n)."""
    fac = _fac(n)
    N = fac.value
    residues, moduli = [], []
    for q, e in fac:
        gq = g ** (N // q)
        x = 0
        for k in range(e):
            hk = (h * g ** (-x)) ** (N // q ** (k + 1))
            x += _bsgs(hk, gq, q) * q**k
        residues.append(x)
        moduli.append(q**e)
    return crt(residues, moduli) if moduli else 0


def bidim_dlog(R: Point, P: Point, Q: Point, n: int) -> tuple[int, int]:
    """(u, v) mod n with R = [u]P + [v]Q."""
    if n == 1:
        return 0, 0
    fac = factor(n)
    zeta = weil_pairing(P, Q, n)
    if _mult_order(zeta, fac) != n:
        raise NotInSpan("basis pairing is not a primitive n-th root of unity")
    u = dlog_fp2(weil_pairing(R, Q, n), zeta, fac)
    v = dlog_fp2(weil_pairing(P, R, n), zeta, fac)
    if u * P + v * Q != R:
        raise NotInSpan("point is not in the span of the basis")
    return u, v


def torsion_basis(E: Curve, n: int, seed: int = 0) -> tuple[Point, Point]:
    """A basis of E[n], n | p+1, with pairing of exact order n."""
    p = E.p
    if (p + 1) % n:
        raise TorsionUnavailable(f"{n} does not divide p+1 = {p + 1}")
    if n == 1:
        return E.identity(), E.identity()
    fac = factor(n)
    cof = (p + 1) // n
    rng = random.Random(seed)
    while True:
        P = cof * E.random_point(rng)
        if has_exact_order(P, fac):
            break
    while True:
        Q = cof * E.random_point(rng)
        if has_exact_order(Q, fac) and _mult_order(weil_pairing(P, Q, n), fac) == n:
            return P, Q


# ------------------------------------------------------------------ isogenies

@dataclass(frozen=True)
class VeluStep:
    domain: Curve
    codomain: Curve
    degree: int
    generator: Point
    data: tuple = field(repr=False, compare=False)

    def __call__(self, P: Point) -> Point:
        if P.x is None:
            return self.codomain.identity()
        x, y = P.x, P.y
        X, dX = x, Fp2(1, 0, x.p)
        for xq, vq, uq in self.data:
            if x == xq:
                return self.codomain.identity()
            t = (x - xq).inverse()
            t2 = t * t
            X = X + vq * t + uq * t2
            dX = dX - vq * t2 - 2 * uq * t2 * t
        return Point(self.codomain, X, y * dX)


@dataclass(frozen=True)
class IsoStep:
    """(x, y) -> (u^2 x, u^3 y)."""

    domain: Curve
    codomain: Curve
    u: Fp2
    degree: int = 1

    def __call__(self, P: Point) -> Point:
        if P.x is None:
            return self.codomain.identity()
        u2 = self.u * self.u
        return Point(self.codomain, u2 * P.x, u2 * self.u * P.y)


Step = Union[VeluStep, IsoStep]


@dataclass(frozen=True)
class IsogenyChain:
    domain: Curve
    codomain: Curve
    steps: tuple
    degree: int

    def __call__(self, P: Point) -> Point:
        return evaluate(self, P)

    def then(self, other: "IsogenyChain") -> "IsogenyChain":
        """other after self."""
        if other.domain != self.codomain:
            raise ValueError("chains do not compose")
        return IsogenyChain(self.domain, other.codomain, self.steps + other.steps,
                            self.degree * other.degree)

    def to_json(self) -> dict:
        steps = []
        for s in self.steps:
            if isinstance(s, VeluStep):
                steps.append({"degree": s.degree, "kernel": s.generator.to_json()})
            else:
                steps.append({"iso": s.u.to_json()})
        return {"domain": self.domain.to_json(), "degree": str(self.degree), "steps": steps}


def identity_chain(E: Curve) -> IsogenyChain:
    return IsogenyChain(E, E, (), 1)


def iso_chain(E: Curve, E2: Curve, u: Fp2) -> IsogenyChain:
    return IsogenyChain(E, E2, (IsoStep(E, E2, u),), 1)


def evaluate(chain: IsogenyChain, P: Point) -> Point:
    if P.curve != chain.domain:
        raise ValueError("point is not on the chain's domain")
    for s in chain.steps:
        P = s(P)
    return P


def velu_step(E: Curve, G: Point, ell: int) -> VeluStep:
    """Isogeny with kernel <G>, G of prime order ell."""
    if ell == 2:
        pts = [G]
    else:
        pts = [G]
        for _ in range((ell - 1) // 2 - 1):
            pts.append(pts[-1] + G)
    p = E.p
    v = Fp2(0, 0, p)
    w = Fp2(0, 0, p)
    data = []
    for Q in pts:
        gx = 3 * Q.x * Q.x + E.a
        gy = -2 * Q.y
        vq = gx if ell == 2 else 2 * gx
        uq = gy * gy
        v = v + vq
        w = w + uq + Q.x * vq
        data.append((Q.x, vq, uq))
    cod = Curve(E.a - 5 * v, E.b - 7 * w)
    return VeluStep(E, cod, ell, G, tuple(data))


def _prime_sequence(fac: Factorization, order: Optional[Sequence[int]]) -> list[int]:
    primes = fac.primes if order is None else list(order)
    if sorted(primes) != fac.primes:
        raise ValueError("prime order must list each prime factor once")
    seq = []
    d = fac.as_dict()
    for q in primes:
        seq += [q] * d[q]
    return seq


def isogeny_from_kernel_point(E: Curve, K: Point, n: int,
                              prime_order: Optional[Sequence[int]] = None,
                              max_prime: int = VELU_PRIME_CAP) -> IsogenyChain:
    """Chain of prime-degree Velu steps with kernel <K>, K of order n."""
    if K.curve != E:
        raise ValueError("kernel point not on E")
    fac = factor(n)
    if not has_exact_order(K, fac):
        raise BadKernelOrder(f"kernel point does not have exact order {n}")
    if fac.factors and fac.primes[-1] > max_prime:
        raise ValueError(f"prime {fac.primes[-1]} exceeds Velu cap {max_prime}")
    steps = []
    cur = E
    rest = n
    for ell in _prime_sequence(fac, prime_order):
        rest //= ell
        step = velu_step(cur, rest * K, ell)
        K = step(K)
        steps.append(step)
        cur = step.codomain
    return IsogenyChain(E, cur, tuple(steps), n)


def isogeny_from_subgroup(E: Curve, gens: Iterable[tuple[Point, int]]) -> IsogenyChain:
    """Isogeny whose kernel is generated by the given (point, multiple of its
    order) pairs; the subgroup need not be cyclic."""
    chain = identity_chain(E)
    for G, n in gens:
        G = evaluate(chain, G)
        m = point_order(G, n)
        if m > 1:
            chain = chain.then(isogeny_from_kernel_point(chain.codomain, G, m))
    return chain


def isomorphisms(E: Curve, E2: Curve) -> list[Fp2]:
    """All u with (x, y) -> (u^2 x, u^3 y) an isomorphism E -> E2."""
    if E.j_invariant() != E2.j_invariant():
        return []
    if E.a.is_zero():
        us = nth_roots(E2.b / E.b, 6)
    elif E.b.is_zero():
        us = nth_roots(E2.a / E.a, 4)
    else:
        r = (E2.b * E.a) / (E.b * E2.a)
        s = r.sqrt()
        us = [] if s is None else [s, -s]
    return [u for u in us if u**4 * E.a == E2.a and u**6 * E.b == E2.b]


def _dual_step(step: Step, seed: int = 0) -> IsogenyChain:
    if isinstance(step, IsoStep):
        return iso_chain(step.codomain, step.domain, step.u.inverse())
    ell = step.degree
    E = step.domain
    P, Q = torsion_basis(E, ell, seed)
    img = step(P)
    if img.is_identity():
        img = step(Q)
    raw = velu_step(step.codomain, img, ell)
    rng = random.Random(seed + 1)
    tests = [E.random_point(rng) for _ in range(2)]
    for u in isomorphisms(raw.codomain, E):
        fix = IsoStep(raw.codomain, E, u)
        if all(fix(raw(step(T))) == ell * T for T in tests):
            return IsogenyChain(step.codomain, E, (raw, fix), ell)
    raise RuntimeError("dual isogeny normalisation failed")


def dual(chain: IsogenyChain, seed: int = 0) -> IsogenyChain:
    """The dual isogeny, normalised so that dual(phi) o phi = [deg phi]."""
    out = identity_chain(chain.codomain)
    for s in reversed(chain.steps):
        out = out.then(_dual_step(s, seed))
    return out


def j_invariant(E: Curve) -> Fp2:
    return E.j_invariant()
