"""Subgroups of (Z/n)^2 and 2x2 linear algebra mod n.

A subgroup H is stored as the lattice L = H + nZ^2 in Hermite normal form:
L is spanned by the rows (a, b) and (0, c) with a | n, c | n, 0 <= b < c.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .numbertheory import crt, divisors, factor

Vec = tuple[int, int]
Mat = tuple[tuple[int, int], tuple[int, int]]


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    x0, x1, y0, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


@dataclass(frozen=True)
class Subgroup:
    n: int
    a: int
    b: int
    c: int

    @classmethod
    def span(cls, gens: Iterable[Vec], n: int) -> "Subgroup":
        vecs = [(x % n, y % n) for x, y in gens] + [(n, 0), (0, n)]
        # pivot on the first coordinate
        g, pivot = 0, (0, 0)
        rest = []
        for v in vecs:
            if v[0] == 0:
                rest.append(v)
                continue
            if g == 0:
                g, pivot = v[0], v
                continue
            d, s, t = _xgcd(g, v[0])
            new_pivot = (d, s * pivot[1] + t * v[1])
            # the other combination has first coordinate 0
            rest.append((0, (v[0] // d) * pivot[1] - (g // d) * v[1]))
            g, pivot = d, new_pivot
        c = 0
        for _, y in rest:
            c = math.gcd(c, y)
        c = abs(c)
        a = abs(g)
        b = pivot[1] if g > 0 else -pivot[1]
        return cls(n, a, b % c, c)

    @property
    def order(self) -> int:
        return self.n * self.n // (self.a * self.c)

    def gens(self) -> list[Vec]:
        n = self.n
        return [(self.a % n, self.b % n), (0, self.c % n)]

    def contains(self, v: Vec) -> bool:
        x, y = v[0] % self.n, v[1] % self.n
        if x % self.a:
            return False
        return (y - (x // self.a) * self.b) % self.c == 0

    def issubset(self, other: "Subgroup") -> bool:
        return all(other.contains(g) for g in self.gens())

    def is_cyclic(self) -> bool:
        n = self.n
        for q in factor(n).primes:
            m = n // q
            if self.contains((m, 0)) and self.contains((0, m)):
                return False
        return True

    def elements(self) -> list[Vec]:
        n = self.n
        out = set()
        (x1, y1), (x2, y2) = self.gens()
        for s in range(n // self.a):
            for t in range(n // self.c):
                out.add(((s * x1 + t * x2) % n, (s * y1 + t * y2) % n))
        return sorted(out)

    def generator(self) -> Vec:
        """An element of maximal order; generates H when H is cyclic."""
        n = self.n
        (x1, y1), (x2, y2) = self.gens()
        best, best_order = (0, 0), 1
        for k in range(n):
            for v in (((x1 + k * x2) % n, (y1 + k * y2) % n), ((k * x1 + x2) % n, (k * y1 + y2) % n)):
                o = vec_order(v, n)
                if o > best_order:
                    best, best_order = v, o
                    if o == self.order:
                        return best
        return best


def vec_order(v: Vec, n: int) -> int:
    return n // math.gcd(n, v[0], v[1])


def subgroups_of_order(n: int, k: int) -> list[Subgroup]:
    """All subgroups of (Z/n)^2 of order k."""
    if (n * n) % k:
        return []
    out = []
    for a in divisors(factor(n)):
        if (n * n // k) % a:
            continue
        c = n * n // k // a
        if n % c:
            continue
        for b in range(c):
            if ((n // a) * b) % c == 0:
                out.append(Subgroup(n, a, b, c))
    return out


def cyclic_reps(n: int) -> list[Vec]:
    """One primitive generator per cyclic subgroup of order n, as the
    projective line over Z/n: (1, x) and (l*y, 1) locally at each l^k."""
    if n == 1:
        return [(1, 0)]
    local: list[list[Vec]] = []
    moduli = []
    for q, e in factor(n):
        m = q**e
        reps = [(1, x) for x in range(m)] + [(q * y, 1) for y in range(m // q)]
        local.append(reps)
        moduli.append(m)
    out = []
    for combo in product(*local):
        s = crt([v[0] for v in combo], moduli)
        t = crt([v[1] for v in combo], moduli)
        out.append((s, t))
    return out


def canonical_rep(v: Vec, n: int) -> Vec:
    """The cyclic_reps representative of the subgroup generated by v,
    which must have order n."""
    if n == 1:
        return (1, 0)
    if vec_order(v, n) != n:
        raise ValueError("vector is not primitive")
    parts_s, parts_t, moduli = [], [], []
    for q, e in factor(n):
        m = q**e
        s, t = v[0] % m, v[1] % m
        if s % q:
            s, t = 1, t * pow(s, -1, m) % m
        else:
            s, t = s * pow(t, -1, m) % m, 1
        parts_s.append(s)
        parts_t.append(t)
        moduli.append(m)
    return crt(parts_s, moduli), crt(parts_t, moduli)


def mat_vec(M: Mat, v: Vec, n: int) -> Vec:
    return ((M[0][0] * v[0] + M[0][1] * v[1]) % n, (M[1][0] * v[0] + M[1][1] * v[1]) % n)


def _snf(M: Mat) -> tuple[list[list[int]], list[list[int]], list[list[int]]]:
    """Smith form D = U M V of an integer 2x2 matrix, with U, V unimodular."""
    D = [list(M[0]), list(M[1])]
    U = [[1, 0], [0, 1]]
    V = [[1, 0], [0, 1]]

    def row_op(i, j, q):  # row i -= q * row j
        for X in (D, U):
            X[i] = [X[i][k] - q * X[j][k] for k in range(2)]

    def col_op(i, j, q):  # col i -= q * col j
        for X in (D, V):
            for r in range(2):
                X[r][i] -= q * X[r][j]

    def swap_rows():
        for X in (D, U):
            X[0], X[1] = X[1], X[0]

    def swap_cols():
        for X in (D, V):
            for r in range(2):
                X[r][0], X[r][1] = X[r][1], X[r][0]

    while True:
        entries = [(abs(D[r][c]), r, c) for r in range(2) for c in range(2) if D[r][c]]
        if not entries:
            return D, U, V
        _, r, c = min(entries)
        if r:
            swap_rows()
        if c:
            swap_cols()
        done = True
        if D[1][0]:
            row_op(1, 0, D[1][0] // D[0][0])
            done = done and D[1][0] == 0
        if D[0][1]:
            col_op(1, 0, D[0][1] // D[0][0])
            done = done and D[0][1] == 0
        if not done:
            continue
        if D[1][1] % D[0][0]:
            row_op(0, 1, -1)  # row 0 += row 1, pulls D[1][1] into the top row
            continue
        if D[0][0] < 0:
            row_op(0, 0, 2)
        if D[1][1] < 0:
            row_op(1, 1, 2)
        return D, U, V


def _inv_unimodular(V: list[list[int]]) -> list[list[int]]:
    det = V[0][0] * V[1][1] - V[0][1] * V[1][0]
    return [[V[1][1] * det, -V[0][1] * det], [-V[1][0] * det, V[0][0] * det]]


def kernel_mod(M: Mat, n: int) -> Subgroup:
    """{v in (Z/n)^2 : M v = 0 mod n}."""
    D, _, V = _snf(M)
    gens = []
    for i in range(2):
        mult = n // math.gcd(D[i][i], n)
        gens.append((V[0][i] * mult, V[1][i] * mult))
    return Subgroup.span(gens, n)


def image_mod(M: Mat, n: int) -> Subgroup:
    """Column span of M mod n."""
    return Subgroup.span([(M[0][0], M[1][0]), (M[0][1], M[1][1])], n)
