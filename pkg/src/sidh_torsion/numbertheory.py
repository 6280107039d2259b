"""Integer arithmetic used everywhere else: primality, factoring, modular
square roots, sums of two squares, smoothness and Gaussian integers."""

from __future__ import annotations

import logging
import math
import random
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import FactoringTimeout, NotPrimitive

log = logging.getLogger(__name__)

DEFAULT_TRIAL_BOUND = 10**6
DEFAULT_RHO_BUDGET = 10**9
MR_ROUNDS = 64
MR_SEED = 0x5EED

_DET_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


@lru_cache(maxsize=8)
def primes_up_to(n: int) -> tuple[int, ...]:
    """All primes <= n (sieve of Eratosthenes)."""
    if n < 2:
        return ()
    sieve = bytearray([1]) * (n + 1)
    sieve[0] = sieve[1] = 0
    for q in range(2, math.isqrt(n) + 1):
        if sieve[q]:
            sieve[q * q :: q] = bytes(len(range(q * q, n + 1, q)))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = primes_up_to(1000)


def _mr_witness(n: int, a: int, d: int, s: int) -> bool:
    """True if a proves n composite."""
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return False
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return False
    return True


def is_probable_prime(n: int) -> bool:
    """Miller-Rabin. Exact below 2^64 (and well beyond, with the fixed
    prime bases); 64 seeded random rounds above that."""
    if n < 2:
        return False
    for q in _SMALL_PRIMES:
        if n == q:
            return True
        if n % q == 0:
            return False
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    if any(_mr_witness(n, a, d, s) for a in _DET_BASES):
        return False
    if n < 3317044064679887385961981:
        return True
    rng = random.Random(MR_SEED)
    return not any(_mr_witness(n, rng.randrange(2, n - 1), d, s) for _ in range(MR_ROUNDS))


def iroot(n: int, k: int) -> int:
    """Floor of the k-th root of n >= 0."""
    if n < 0 or k < 1:
        raise ValueError("iroot needs n >= 0 and k >= 1")
    if n < 2 or k == 1:
        return n
    if k == 2:
        return math.isqrt(n)
    x = 1 << ((n.bit_length() + k - 1) // k)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            break
        x = y
    while x**k > n:
        x -= 1
    while (x + 1) ** k <= n:
        x += 1
    return x


@dataclass(frozen=True)
class Factorization:
    value: int
    factors: tuple[tuple[int, int], ...]

    def __post_init__(self):
        prod = 1
        last = 1
        for q, e in self.factors:
            if q <= last or e < 1:
                raise ValueError(f"malformed factor list {self.factors}")
            last = q
            prod *= q**e
        if prod != self.value:
            raise ValueError("factors do not multiply to value")

    @classmethod
    def from_dict(cls, value: int, d: dict[int, int]) -> "Factorization":
        return cls(value, tuple(sorted((q, e) for q, e in d.items() if e)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.factors)

    @property
    def primes(self) -> list[int]:
        return [q for q, _ in self.factors]

    def validate(self) -> bool:
        return all(is_probable_prime(q) for q, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


class _RhoBudget:
    def __init__(self, budget: int):
        self.left = budget

    def spend(self, k: int):
        self.left -= k
        if self.left < 0:
            raise FactoringTimeout("rho iteration budget exhausted")


def _brent(n: int, budget: _RhoBudget, seed: int = 1) -> int:
    """A nontrivial factor of the odd composite n."""
    rng = random.Random(seed ^ n)
    while True:
        y, c, m = rng.randrange(1, n), rng.randrange(1, n), 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                steps = min(m, r - k)
                budget.spend(steps)
                for _ in range(steps):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                budget.spend(1)
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def _split_rho(n: int, out: dict[int, int], budget: _RhoBudget):
    stack = [n]
    while stack:
        m = stack.pop()
        if m == 1:
            continue
        if is_probable_prime(m):
            out[m] = out.get(m, 0) + 1
            continue
        r = math.isqrt(m)
        if r * r == m:
            stack += [r, r]
            continue
        g = _brent(m, budget)
        stack += [g, m // g]


def _trial(n: int, bound: int, out: dict[int, int]) -> int:
    """Divide out primes <= bound; returns the cofactor."""
    for q in primes_up_to(bound):
        if q * q > n:
            # everything below q is gone, so n is 1 or prime
            if n > 1:
                out[n] = out.get(n, 0) + 1
            return 1
        if n % q == 0:
            e = 0
            while n % q == 0:
                n //= q
                e += 1
            out[q] = out.get(q, 0) + e
    return n


def factor(
    n: int,
    hints: Optional[Iterable[int] | Factorization] = None,
    trial_bound: int = DEFAULT_TRIAL_BOUND,
    rho_budget: int = DEFAULT_RHO_BUDGET,
) -> Factorization:
    """Factor n >= 1. Hints are claimed prime factors; each one is used only
    after it is checked to divide n and to be prime."""
    if n < 1:
        raise ValueError("factor needs n >= 1")
    out: dict[int, int] = {}
    m = n
    if hints is not None:
        claimed = hints.primes if isinstance(hints, Factorization) else list(hints)
        for q in claimed:
            q = int(q)
            if q > 1 and m % q == 0 and is_probable_prime(q):
                while m % q == 0:
                    m //= q
                    out[q] = out.get(q, 0) + 1
            else:
                log.warning("ignoring unverified factor hint %s", q)
    if m > 1:
        m = _trial(m, trial_bound, out)
    if m > 1:
        _split_rho(m, out, _RhoBudget(rho_budget))
    return Factorization.from_dict(n, out)


def is_smooth(n: int, bound: int, trial_bound: int = DEFAULT_TRIAL_BOUND,
              rho_budget: Optional[int] = None) -> bool:
    """True iff every prime factor of n is <= bound.

    Trial division runs to min(bound, trial_bound). If bound is larger than
    that, the leftover cofactor is split with a rho budget proportional to
    sqrt(bound); running out of budget is reported as not smooth."""
    if n < 1:
        raise ValueError("is_smooth needs n >= 1")
    cap = min(bound, trial_bound)
    m = n
    for q in primes_up_to(cap):
        if m == 1:
            return True
        if m % q == 0:
            while m % q == 0:
                m //= q
    if m == 1:
        return True
    if m <= bound and is_probable_prime(m):
        return True
    if bound <= cap:
        return False
    if rho_budget is None:
        rho_budget = 64 * math.isqrt(bound) + 10**4
    pending = [m]
    budget = _RhoBudget(rho_budget)
    try:
        while pending:
            x = pending.pop()
            if x == 1:
                continue
            if is_probable_prime(x):
                if x > bound:
                    return False
                continue
            r = math.isqrt(x)
            if r * r == x:
                pending += [r, r]
                continue
            g = _brent(x, budget)
            pending += [g, x // g]
    except FactoringTimeout:
        return False
    return True


def legendre(a: int, p: int) -> int:
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_prime(a: int, p: int) -> Optional[int]:
    """One square root of a modulo the prime p, or None."""
    a %= p
    if a == 0 or p == 2:
        return a
    if legendre(a, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while legendre(z, p) != -1:
        z += 1
    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


def _unit_roots_prime_power(u: int, q: int, k: int) -> list[int]:
    """Square roots of a unit u modulo q^k."""
    mod = q**k
    u %= mod
    if q == 2:
        if k == 1:
            return [1]
        if k == 2:
            return [1, 3] if u % 4 == 1 else []
        if u % 8 != 1:
            return []
        y = 1
        for i in range(3, k):
            if (y * y - u) % (1 << (i + 1)):
                y += 1 << (i - 1)
        half = 1 << (k - 1)
        return sorted({y % mod, -y % mod, (y + half) % mod, (-y + half) % mod})
    y = sqrt_mod_prime(u, q)
    if y is None:
        return []
    pk = q
    for _ in range(1, k):
        pk *= q
        y = (y - (y * y - u) * pow(2 * y, -1, pk)) % pk
    return sorted({y % mod, -y % mod})


def _roots_prime_power(a: int, q: int, k: int) -> list[int]:
    mod = q**k
    a %= mod
    if a == 0:
        step = q ** ((k + 1) // 2)
        return list(range(0, mod, step))
    v = 0
    while a % q == 0:
        a //= q
        v += 1
    if v % 2:
        return []
    base = _unit_roots_prime_power(a, q, k - v)
    lift = q ** (k - v)
    scale = q ** (v // 2)
    out = set()
    for y0 in base:
        for t in range(scale):
            out.add(scale * (y0 + lift * t) % mod)
    return sorted(out)


def crt(residues: Sequence[int], moduli: Sequence[int]) -> int:
    x, m = 0, 1
    for r, n in zip(residues, moduli):
        t = (r - x) * pow(m, -1, n) % n
        x += m * t
        m *= n
    return x % m


def sqrt_mod(a: int, m: int, factorization: Optional[Factorization] = None) -> set[int]:
    """Every x in [0, m) with x^2 = a (mod m)."""
    if m < 1:
        raise ValueError("modulus must be positive")
    if m == 1:
        return {0}
    fac = factorization or factor(m)
    moduli, root_lists = [], []
    for q, k in fac:
        roots = _roots_prime_power(a, q, k)
        if not roots:
            return set()
        moduli.append(q**k)
        root_lists.append(roots)
    return {crt(combo, moduli) for combo in product(*root_lists)}


@dataclass(frozen=True)
class GaussianInteger:
    re: int
    im: int

    def __add__(self, o: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re + o.re, self.im + o.im)

    def __sub__(self, o: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re - o.re, self.im - o.im)

    def __mul__(self, o: "GaussianInteger") -> "GaussianInteger":
        return GaussianInteger(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    def __pow__(self, k: int) -> "GaussianInteger":
        result, base = GaussianInteger(1, 0), self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def conj(self) -> "GaussianInteger":
        return GaussianInteger(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def __str__(self) -> str:
        sign = "+" if self.im >= 0 else "-"
        return f"{self.re}{sign}{abs(self.im)}i"

    @classmethod
    def parse(cls, text: str) -> "GaussianInteger":
        """Parse forms like '2+1i', '2+i', '-3-4i', '5'."""
        s = text.replace(" ", "")
        if not s.endswith("i"):
            return cls(int(s), 0)
        body = s[:-1]
        cut = max(body.rfind("+"), body.rfind("-"))
        if cut <= 0:
            re_part, im_part = "0", body
        else:
            re_part, im_part = body[:cut], body[cut:]
        if im_part in ("", "+"):
            im_part = "1"
        elif im_part == "-":
            im_part = "-1"
        return cls(int(re_part), int(im_part))


def gaussian_prime_above(q: int) -> GaussianInteger:
    """a+bi with a^2+b^2 = q for a prime q = 2 or q = 1 mod 4."""
    if q == 2:
        return GaussianInteger(1, 1)
    if q % 4 != 1:
        raise ValueError(f"{q} is inert in Z[i]")
    z = 2
    while legendre(z, q) != -1:
        z += 1
    r = pow(z, (q - 1) // 4, q)
    a, b = q, r
    bound = math.isqrt(q)
    while b > bound:
        a, b = b, a % b
    c = math.isqrt(q - b * b)
    return GaussianInteger(b, c)


def cornacchia_sum_two_squares(n: int, factorization: Optional[Factorization] = None
                               ) -> Optional[tuple[int, int]]:
    """(x, y) with x^2 + y^2 = n and x <= y, taking the smallest x among all
    representations; None if n is not a sum of two squares."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return (0, 0)
    fac = factorization or factor(n)
    base = GaussianInteger(1, 0)
    choices: list[list[GaussianInteger]] = []
    for q, e in fac:
        if q == 2:
            base = base * GaussianInteger(1, 1) ** e
        elif q % 4 == 3:
            if e % 2:
                return None
            base = base * GaussianInteger(q ** (e // 2), 0)
        else:
            pi = gaussian_prime_above(q)
            pc = pi.conj()
            choices.append([pi**k * pc ** (e - k) for k in range(e + 1)])
    best = None
    for combo in product(*choices):
        z = base
        for w in combo:
            z = z * w
        x, y = sorted((abs(z.re), abs(z.im)))
        if best is None or x < best[0]:
            best = (x, y)
    return best


def gaussian_triple(z: GaussianInteger) -> tuple[int, int, int]:
    """(N(z), |Re z^2|, |Im z^2|), a Pythagorean triple B^2 = A^2 + d^2."""
    if math.gcd(z.re, z.im) != 1:
        raise NotPrimitive(f"gcd({z.re}, {z.im}) != 1")
    w = z * z
    return z.norm(), abs(w.re), abs(w.im)


def divisors(fac: Factorization) -> list[int]:
    out = [1]
    for q, e in fac:
        out = [d * q**k for d in out for k in range(e + 1)]
    return sorted(out)


def smooth_numbers(limit: int, primes: Sequence[int]) -> list[int]:
    """Ascending list of integers in [1, limit] built from the given primes."""
    out = [1]
    for q in sorted(set(primes)):
        extra = []
        for d in out:
            v = d * q
            while v <= limit:
                extra.append(v)
                v *= q
        out += extra
    return sorted(out)
