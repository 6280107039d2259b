"""Asymptotic cost model for the torsion-point attack.

Everything is exponent arithmetic over Fractions: A = p^alpha, B = p^beta,
cost O*(A^C). The knob optimum is an exact LP solved by vertex enumeration;
a grid search is kept alongside as an independent check.
"""

from __future__ import annotations

import csv
import io
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Sequence, Union

from .attack import AttackKnobs

Num = Union[int, float, str, Fraction]
HALF = Fraction(1, 2)
MODELS = ("classical", "quantum")


def Q(x: Num) -> Fraction:
    """Exact rational; floats go through their decimal repr so 0.4 means 2/5."""
    if isinstance(x, float):
        return Fraction(repr(x))
    return Fraction(x)


def _check_model(model: str) -> None:
    if model not in MODELS:
        raise ValueError(f"model must be one of {MODELS}")


@dataclass(frozen=True)
class CostPoint:
    alpha: Fraction
    beta: Fraction
    model: str
    C: Fraction
    knobs: AttackKnobs

    def row(self) -> list[str]:
        k = self.knobs
        return [str(self.alpha), str(self.beta), self.model, str(self.C),
                str(k.delta), str(k.gamma), str(k.epsilon)]


def feasible(alpha: Num, beta: Num, knobs: AttackKnobs, strict: bool = True) -> bool:
    """Does the d-search produce a solution? strict=False gives the closure."""
    a, b = Q(alpha), Q(beta)
    d, g, e = knobs.delta, knobs.gamma, knobs.epsilon
    lhs = 2 * b + a * e
    rhs = max(4 * a - 4 * a * g + 2 * a * d, 2 + 2 * a - 2 * a * d - 2 * a * g)
    return lhs > rhs if strict else lhs >= rhs


def cost(knobs: AttackKnobs, model: str) -> Fraction:
    _check_model(model)
    d, g, e = knobs.delta, knobs.gamma, knobs.epsilon
    if model == "classical":
        return max(d, g + e / 2)
    return max(d / 2, (g + e) / 2)


# ------------------------------------------------------------------ exact LP

Row = tuple[tuple[Fraction, ...], Fraction]


def _solve(rows: Sequence[Row]) -> Optional[tuple[Fraction, ...]]:
    """Square system a.x = b by Gauss-Jordan; None if singular."""
    n = len(rows)
    m = [list(a) + [b] for a, b in rows]
    for col in range(n):
        piv = next((r for r in range(col, n) if m[r][col] != 0), None)
        if piv is None:
            return None
        m[col], m[piv] = m[piv], m[col]
        inv = 1 / m[col][col]
        m[col] = [v * inv for v in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(row[n] for row in m)


def _solve_float(rows) -> Optional[list[float]]:
    n = len(rows)
    m = [list(a) + [b] for a, b in rows]
    for col in range(n):
        piv = max(range(col, n), key=lambda r: abs(m[r][col]))
        if abs(m[piv][col]) < 1e-12:
            return None
        m[col], m[piv] = m[piv], m[col]
        for r in range(n):
            if r != col:
                f = m[r][col] / m[col][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return [m[i][n] / m[i][i] for i in range(n)]


def _lp_min(rows: Sequence[Row], nvars: int, key) -> Optional[tuple[Fraction, ...]]:
    """Minimise key(x) over {x : a.x >= b for all rows} (assumed bounded)
    by trying every vertex. Ties break on key, which should be a tuple."""
    best, best_key = None, None
    frows = [([float(c) for c in a], float(b)) for a, b in rows]
    for idx in itertools.combinations(range(len(rows)), nvars):
        # float screen first; exact arithmetic only for plausible vertices
        xf = _solve_float([frows[i] for i in idx])
        if xf is None or any(sum(c * v for c, v in zip(a, xf)) < b - 1e-9 for a, b in frows):
            continue
        x = _solve([rows[i] for i in idx])
        if x is None:
            continue
        if all(sum(c * v for c, v in zip(a, x)) >= b for a, b in rows):
            k = key(x)
            if best_key is None or k < best_key:
                best, best_key = x, k
    return best


def _cost_rows(model: str, t: Fraction) -> list[Row]:
    """cost(delta, gamma, epsilon) <= t, for rows whose 4th variable is free."""
    z, o = Fraction(0), Fraction(1)
    if model == "classical":
        return [((-o, z, z, z), -t), ((z, -o, -HALF, z), -t)]
    return [((-HALF, z, z, z), -t), ((z, -HALF, -HALF, z), -t)]


def _unit_box() -> list[Row]:
    z, o = Fraction(0), Fraction(1)
    return [((o, z, z, z), z), ((z, o, z, z), z), ((z, z, o, z), z),
            ((-o, z, z, z), -o), ((z, -o, z, z), -o), ((z, z, -o, z), -o)]


def _knob_rows(alpha: Optional[Fraction], beta: Fraction, model: str,
               cap: Fraction) -> list[Row]:
    """Rows over (delta, gamma, epsilon, C). alpha=None is the alpha -> oo
    limit at fixed ratio; beta then holds beta/alpha."""
    z, o = Fraction(0), Fraction(1)
    if alpha is None:
        r = beta
        feas = [((-2 * o, 4 * o, o, z), 4 - 2 * r),
                ((2 * o, 2 * o, o, z), 2 - 2 * r)]
    else:
        a, b = alpha, beta
        feas = [((-2 * a, 4 * a, a, z), 4 * a - 2 * b),
                ((2 * a, 2 * a, a, z), 2 + 2 * a - 2 * b)]
    if model == "classical":
        costs = [((-o, z, z, o), z), ((z, -o, -HALF, o), z)]
    else:
        costs = [((-HALF, z, z, o), z), ((z, -HALF, -HALF, o), z)]
    bounds = [((o, z, z, z), z), ((z, o, z, z), z), ((z, z, o, z), z),
              ((-o, z, z, z), -o), ((z, -o, z, z), -o), ((z, z, -o, z), -o),
              ((z, z, z, -o), -cap)]
    return feas + costs + bounds


def _best_knobs(alpha: Optional[Fraction], beta: Fraction, model: str
                ) -> Optional[tuple[Fraction, AttackKnobs]]:
    x = _lp_min(_knob_rows(alpha, beta, model, HALF), 4, lambda v: (v[3], v[0], v[1], v[2]))
    if x is None:
        return None
    return x[3], AttackKnobs(x[0], x[1], x[2])


def optimize(alpha: Num, beta: Num, model: str) -> CostPoint:
    """Smallest cost exponent over the closure of the feasible knob region.
    C = 1/2 with zero knobs means the generic claw-finding bound wins."""
    _check_model(model)
    a, b = Q(alpha), Q(beta)
    if a <= 0 or b <= 0:
        raise ValueError("alpha and beta must be positive")
    found = _best_knobs(a, b, model)
    if found is None or found[0] >= HALF:
        return CostPoint(a, b, model, HALF, AttackKnobs())
    return CostPoint(a, b, model, found[0], found[1])


def min_ratio(model: str, target: Num) -> Fraction:
    """Smallest beta/alpha >= 1 at which cost <= target is reachable, letting
    alpha grow freely (the 2/alpha term of the second constraint vanishes)."""
    _check_model(model)
    t = Q(target)
    z, o = Fraction(0), Fraction(1)
    # variables (delta, gamma, epsilon, ratio)
    rows: list[Row] = [((-2 * o, 4 * o, o, 2 * o), Fraction(4)),
                       ((2 * o, 2 * o, o, 2 * o), Fraction(2))]
    rows += _cost_rows(model, t) + _unit_box() + [((z, z, z, o), o), ((z, z, z, -o), Fraction(-8))]
    x = _lp_min(rows, 4, lambda v: (v[3], v[0], v[1], v[2]))
    return x[3]


def optimize_grid(alpha: Num, beta: Num, model: str, step: Num = Fraction(1, 1000)) -> Fraction:
    """Reference optimum: bisection on C over a grid, gamma on a grid, and
    for each gamma the admissible delta interval solved exactly."""
    _check_model(model)
    a, b, h = Q(alpha), Q(beta), Q(step)
    n = int(HALF / h)

    def ok(C: Fraction) -> bool:
        dmax = C if model == "classical" else 2 * C
        gmax = C if model == "classical" else 2 * C
        for i in range(int(min(gmax, 1) / h) + 1):
            g = i * h
            e = 2 * (C - g) if model == "classical" else 2 * C - g
            e = min(e, Fraction(1))
            # c1: 2 a d <= 2b + a e - 4a + 4a g ; c2: 2 a d >= 2 + 2a - 2a g - 2b - a e
            hi = (2 * b + a * e - 4 * a + 4 * a * g) / (2 * a)
            lo = (2 + 2 * a - 2 * a * g - 2 * b - a * e) / (2 * a)
            if max(lo, 0) <= min(hi, dmax, 1):
                return True
        return False

    lo, hi = 0, n
    if not ok(hi * h):
        return HALF
    while lo < hi:
        mid = (lo + hi) // 2
        if ok(mid * h):
            hi = mid
        else:
            lo = mid + 1
    return lo * h


def min_beta(alpha: Num, model: str, target: Num) -> Optional[Fraction]:
    """Smallest beta at which cost <= target is reachable (closure)."""
    _check_model(model)
    a, t = Q(alpha), Q(target)
    z, o = Fraction(0), Fraction(1)
    # variables (delta, gamma, epsilon, beta); C is fixed to t
    rows: list[Row] = [((-2 * a, 4 * a, a, 2 * o), 4 * a),
                       ((2 * a, 2 * a, a, 2 * o), 2 + 2 * a)]
    rows += _cost_rows(model, t) + _unit_box() + [((z, z, z, o), z), ((z, z, z, -o), Fraction(-8))]
    x = _lp_min(rows, 4, lambda v: (v[3], v[0], v[1], v[2]))
    return None if x is None else x[3]


# ------------------------------------------------------- closed-form families

FAMILIES = ("sum", "ratio", "small_alpha")


def boundary_point(family: str, model: str, C: Num, alpha: Optional[Num] = None
                   ) -> tuple[Fraction, Fraction, AttackKnobs]:
    """(alpha, beta, knobs) on the edge of one closed-form region at cost C.

    sum: alpha = 1/2, minimal alpha + beta.
    ratio: alpha = 1/(1+delta), minimal beta/alpha.
    small_alpha: any alpha below 1/(1+delta), beta = 1 + alpha(1 - 2 delta).
    """
    _check_model(model)
    C = Q(C)
    delta = C if model == "classical" else 2 * C
    if family == "sum":
        a = HALF
        if model == "classical":
            knobs = AttackKnobs(delta, 0, 2 * delta)
        else:
            knobs = AttackKnobs(delta, delta, 0)
        b = Fraction(3, 2) - delta
    elif family == "ratio":
        a = 1 / (1 + delta)
        knobs = AttackKnobs(delta, delta, 0)
        b = a * (2 - delta)
    elif family == "small_alpha":
        if alpha is None:
            raise ValueError("small_alpha needs alpha")
        a = Q(alpha)
        if a >= 1 / (1 + delta):
            raise ValueError("alpha must be below 1/(1+delta)")
        knobs = AttackKnobs(delta, delta, 0)
        b = 1 + a * (1 - 2 * delta)
    else:
        raise ValueError(f"family must be one of {FAMILIES}")
    return a, b, knobs


def closed_form_ratio(C: Num, model: str) -> tuple[Fraction, Fraction]:
    """(beta/alpha, alpha + beta) at the corner of the balanced family."""
    C = Q(C)
    k = C if model == "classical" else 2 * C
    return 2 - k, (3 - k) / (1 + k)


def level_set_sum(ratio: Num, C: Num, model: str) -> Fraction:
    """alpha + beta on the small-alpha level set of cost C."""
    _check_model(model)
    r, C = Q(ratio), Q(C)
    k = 2 * C if model == "classical" else 4 * C
    m = C if model == "classical" else 2 * C
    return 1 + 2 * (1 - m) / (r - 1 + k)


def level_set_start(C: Num, model: str) -> Fraction:
    """Ratio above which the small-alpha family applies."""
    C = Q(C)
    return 2 - C if model == "classical" else 2 - 2 * C


def split_sum_ratio(total: Num, ratio: Num) -> tuple[Fraction, Fraction]:
    s, r = Q(total), Q(ratio)
    a = s / (1 + r)
    return a, s - a


# ------------------------------------------------------ perfect-solver bounds

def min_e_bound(alpha: Num, beta: Num) -> Fraction:
    """Exponent (base p) of the smallest e we expect to exist."""
    a, b = Q(alpha), Q(beta)
    return max(Fraction(0), (3 * a + 1 - 2 * b) / 2)


@dataclass(frozen=True)
class SolverCost:
    C: Optional[Fraction]
    boundary: bool = False

    def __str__(self) -> str:
        if self.C is None:
            return "boundary" if self.boundary else "none"
        return str(self.C)


def perfect_solver_cost(alpha: Num, beta: Num, model: str) -> SolverCost:
    """Cost given an oracle for the norm equation. C=None means no attack;
    boundary flags an equality case of the deciding threshold."""
    _check_model(model)
    a, b = Q(alpha), Q(beta)
    if 2 * b > 1 + 3 * a:
        return SolverCost(Fraction(0))
    thresholds = [1 + a] if model == "classical" else [1 + a, 1]
    for t in thresholds:
        if 2 * b > t:
            return SolverCost(HALF)
    on_edge = any(2 * b == t for t in [1 + 3 * a] + thresholds)
    return SolverCost(None, on_edge)


def gke_threshold(kind: str, k_max: int = 1000) -> int:
    """Smallest party count k (A = p^(1/k), B = p^((k-1)/k)) for which a
    perfect solver gives the named attack."""
    for k in range(2, k_max + 1):
        a, b = Fraction(1, k), Fraction(k - 1, k)
        if kind == "polynomial":
            hit = perfect_solver_cost(a, b, "classical").C == 0
        elif kind == "classical":
            hit = perfect_solver_cost(a, b, "classical").C is not None
        elif kind == "quantum":
            hit = perfect_solver_cost(a, b, "quantum").C is not None
        else:
            raise ValueError(kind)
        if hit:
            return k
    raise ValueError("no threshold below k_max")


def insecure_curve_cost(ratio: Num, model: str) -> Fraction:
    _check_model(model)
    r = Q(ratio)
    if model == "classical":
        return min(max((2 - r) * Fraction(2, 5), Fraction(0)), Fraction(2, 5))
    return min(max((2 - r) / 4, Fraction(0)), Fraction(1, 4))


# -------------------------------------------------------------------- figures

def _frange(lo: Fraction, hi: Fraction, step: Fraction) -> Iterable[Fraction]:
    n = int((hi - lo) / step)
    for i in range(n + 1):
        yield lo + i * step


def _pool_map(fn, items, threads: int):
    if threads <= 1:
        return [fn(*it) for it in items]
    from concurrent.futures import ProcessPoolExecutor
    with ProcessPoolExecutor(threads) as ex:
        return list(ex.map(fn, *zip(*items), chunksize=8))


def figure_rows(fig: int, step: Num = Fraction(1, 20), threads: int = 1) -> list[list]:
    """Header row then data rows for figures 1 to 5."""
    h = Q(step)
    if fig == 1:
        head = ["alpha", "beta", "alpha_plus_beta", "beta_over_alpha", "model", "C",
                "delta", "gamma", "epsilon"]
        items = [(HALF, s - HALF, m) for m in MODELS
                 for s in _frange(Fraction(1), Fraction(3), h)]
        pts = _pool_map(optimize, items, threads)
        rows = [[p.alpha, p.beta, p.alpha + p.beta, p.beta / p.alpha, p.model, p.C,
                 p.knobs.delta, p.knobs.gamma, p.knobs.epsilon] for p in pts]
    elif fig == 2:
        head = ["model", "C", "ratio_closed_form", "sum_closed_form", "ratio_model"]
        items = [(m, C) for m in MODELS for C in _frange(Fraction(0), HALF, h)]
        lp = _pool_map(min_ratio, items, threads)
        rows = [[m, C, *closed_form_ratio(C, m), r] for (m, C), r in zip(items, lp)]
    elif fig == 3:
        head = ["model", "C", "beta_over_alpha", "alpha_plus_beta"]
        rows = []
        for m in MODELS:
            for C in (Fraction(1, 2), Fraction(2, 5), Fraction(3, 10), Fraction(1, 5),
                      Fraction(1, 10)):
                start = max(Fraction(1), level_set_start(C, m))
                for r in _frange(start, Fraction(8), h):
                    if r == start and r != 1:
                        continue
                    rows.append([m, C, r, level_set_sum(r, C, m)])
    elif fig == 4:
        head = ["panel", "region", "alpha", "beta_min"]
        rows = []
        regions = [("polynomial", "classical", Fraction(0)),
                   ("classical_improvement", "classical", HALF),
                   ("quantum_improvement", "quantum", HALF)]
        alphas = list(_frange(Fraction(0), Fraction(3), h))
        items = [(a, m, t) for _, m, t in regions for a in alphas if a > 0]
        betas = iter(_pool_map(min_beta, items, threads))
        for name, _, _ in regions:
            for a in alphas:
                if a > 0:
                    rows.append(["current", name, a, next(betas)])
        perfect = {"polynomial": lambda a: (1 + 3 * a) / 2,
                   "classical_improvement": lambda a: (1 + a) / 2,
                   "quantum_improvement": lambda a: HALF}
        for name, f in perfect.items():
            for a in alphas:
                rows.append(["perfect_solver", name, a, f(a)])
    elif fig == 5:
        head = ["beta_over_alpha", "model", "C"]
        rows = [[r, m, insecure_curve_cost(r, m)] for m in MODELS
                for r in _frange(Fraction(1), Fraction(4), h)]
    else:
        raise ValueError("figure id must be 1..5")
    return [head] + [[str(v) for v in row] for row in rows]


def emit_figure(fig: int, step: Num = Fraction(1, 20), threads: int = 1) -> str:
    buf = io.StringIO()
    csv.writer(buf, lineterminator="\n").writerows(figure_rows(fig, step, threads))
    return buf.getvalue()


GKE_PARTIES = (3, 10, 100)


def application_numbers(C: Num = Fraction(2, 5)) -> list[dict]:
    """Group key exchange with k parties: the alpha+beta at which the
    quantum attack reaches cost C, plus what optimize gives there."""
    out = []
    for k in GKE_PARTIES:
        r = Fraction(k - 1)
        s = level_set_sum(r, C, "quantum")
        a, b = split_sum_ratio(s, r)
        out.append({"parties": k, "beta_over_alpha": r, "alpha_plus_beta": s,
                    "C": optimize(a, b, "quantum").C})
    return out
