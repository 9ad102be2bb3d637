"""Closed-form bound evaluators and positivity sweeps.

The f0..f3 expressions are written with plain arithmetic operators on the
quantity ``C = c**k``, so the same code evaluates Python floats, numpy arrays
(for sweeps) and mpmath numbers (for high-precision re-checks).
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from typing import Callable, Sequence

import mpmath
import numpy as np

from kdis.errors import DomainError

EPSILON = 0.053
BETA = 0.8
POSITIVITY_SLACK = 1e-9
HIGH_PRECISION_DIGITS = 40


# ------------------------------------------------------- classical formulas

def moon_moser(n: int) -> int:
    """Maximum number of maximal independent sets in an n-vertex graph."""
    if n < 1:
        raise DomainError("defined for n >= 1")
    if n == 1:
        # the n = 1 (mod 3) branch needs a K4 or two K2s, i.e. n >= 4
        return 1
    q, r = divmod(n, 3)
    if r == 0:
        return 3**q
    if r == 1:
        return 4 * 3 ** (q - 1)
    return 2 * 3**q


def tree_formula(n: int) -> int:
    """Maximum number of maximal independent sets in an n-vertex tree."""
    if n < 1:
        raise DomainError("defined for n >= 1")
    if n % 2 == 0:
        return 2 ** (n // 2 - 1) + 1
    return 2 ** (n // 2)


def triangle_free_formula(n: int) -> int:
    if n < 4:
        raise DomainError("the triangle-free formula is stated for n >= 4")
    if n % 2 == 0:
        return 2 ** (n // 2)
    return 5 * 2 ** ((n - 5) // 2)


@dataclass(frozen=True)
class PrintedValue:
    value: Fraction
    integral: bool


def connected_formula_printed(n: int) -> PrintedValue:
    """The connected-graph formula evaluated literally, case by case.

    Returned as an exact rational with a flag, since the n = 1 (mod 3) case
    is not an integer.
    """
    if n < 1:
        raise DomainError("defined for n >= 1")
    q, r = divmod(n, 3)
    if r == 0:
        value = Fraction(2, 3) * 3**q + Fraction(1, 2) * 2**q
    elif r == 1:
        value = Fraction(3**q) + Fraction(1, 2) * 3**q
    else:
        value = Fraction(4, 3) * 3**q + Fraction(4, 3) * 3**q
    return PrintedValue(value, value.denominator == 1)


# ---------------------------------------------------------------- constants

def c_of_k(k, epsilon=EPSILON):
    """c**k = (2 + eps) ** (1 / (1 + eps + 1/k)); works elementwise on arrays."""
    return (2 + epsilon) ** (1 / (1 + epsilon + 1 / k))


@dataclass(frozen=True)
class BoundParams:
    k: int
    epsilon: float = EPSILON
    beta: float = BETA

    def __post_init__(self):
        if self.k < 3:
            raise DomainError("k must be at least 3")
        if self.epsilon <= 0:
            raise DomainError("epsilon must be positive")
        if not 0 < self.beta <= 1:
            raise DomainError("beta must lie in (0, 1]")

    @property
    def ck(self) -> float:
        return c_of_k(self.k, self.epsilon)

    @property
    def c(self) -> float:
        return self.ck ** (1 / self.k)

    @property
    def B(self) -> float:
        return self.beta * self.k


def improved_upper(k: int) -> float:
    """2.053 ** (1 / (1.053 + 1/k)), the improved bound on zeta_k ** k."""
    return c_of_k(k, EPSILON)


def nagy_upper(k: int) -> float:
    return 2 ** (k / (k + 1))


def construction_rate(k: int, t: int, m_value: int) -> float:
    """t ** (k / m): the lower bound on zeta_k ** k given t k-DISes on m vertices."""
    if m_value < 1:
        raise DomainError("m must be positive")
    return t ** (k / m_value)


def nagy_degree_bound(k: int, delta: int, n: int) -> float:
    """((k + delta) / k) ** (n / (delta + 1))."""
    if delta < k:
        raise DomainError("needs delta >= k")
    return ((k + delta) / k) ** (n / (delta + 1))


# ------------------------------------------------------------- f0 .. f3

def f0(k, epsilon=EPSILON, beta=BETA):
    C = c_of_k(k, epsilon)
    e, b = epsilon, beta
    return (
        C * C
        - C ** ((k - 1) / k)
        - (1 + e) * (b * k - 1) / (k - 1) * C ** ((k - 2) / k)
        - (1 + e) * (1 + e - b) * (k / (k - 1))
    )


def f1(k, epsilon=EPSILON, beta=BETA):
    C = c_of_k(k, epsilon)
    e, b = epsilon, beta
    return C * C - C - (1 + e) * b * C - (1 + e) * (1 + e - b) * (1 + 1 / 1000)


def f2(k, epsilon=EPSILON, beta=BETA):
    C = c_of_k(k, epsilon)
    e, b = epsilon, beta
    return (
        C * C
        - C
        - (1 + e - b) * (b * k - 1) / (k - 1) * C
        - (1 + e - b) * (1 + e) * k / (k - 1)
        - (1 + e) * (k * (1 + e) - 1) / (k - 1) * C ** (1 - b)
    )


def f3(k, epsilon=EPSILON, beta=BETA):
    C = c_of_k(k, epsilon)
    e, b = epsilon, beta
    return (
        C * C
        - C
        - (1 + e - b) * b * C
        - (1 + e - b) * (1 + e + 2 / 1000)
        - (1 + e) * (1 + e * (1 + 1 / 1000)) * C ** (1 - b)
    )


FUNCTIONS: dict[str, Callable] = {"f0": f0, "f1": f1, "f2": f2, "f3": f3}


def evaluate_high_precision(name: str, k: int, epsilon: float = EPSILON, beta: float = BETA) -> mpmath.mpf:
    with mpmath.workdps(HIGH_PRECISION_DIGITS):
        return FUNCTIONS[name](mpmath.mpf(k), mpmath.mpf(epsilon), mpmath.mpf(beta))


def pair_bound_rhs(k: int, delta: int, s: int, epsilon: float = EPSILON, beta: float = BETA) -> float:
    """Lower bound on E / c**(n - delta - k) at integer degree and small-component total.

    c^(2k) - [c^(k-1) + s(B-1)/(k(k-1)) c^(k-2) + s(2d-s-B)/(k(k-1))
              + (d-s)(d-s-1)/(k(k-1)) c^(k-B)]
    """
    C = c_of_k(k, epsilon)
    B = beta * k
    kk = k * (k - 1)
    return C * C - (
        C ** ((k - 1) / k)
        + s * (B - 1) / kk * C ** ((k - 2) / k)
        + s * (2 * delta - s - B) / kk
        + (delta - s) * (delta - s - 1) / kk * C ** ((k - B) / k)
    )


def pair_bound_min(k: int, epsilon: float = EPSILON, beta: float = BETA) -> tuple[float, int, int]:
    """Minimum of :func:`pair_bound_rhs` over integer k <= delta <= (1+eps)k and admissible s.

    Admissible s is either delta itself or any integer below delta - beta*k.
    Returns ``(value, delta, s)`` at the minimum.
    """
    B = beta * k
    ds = np.arange(k, math.floor((1 + epsilon) * k) + 1)
    s_max = int(ds[-1])
    d_grid, s_grid = np.meshgrid(ds, np.arange(s_max + 1), indexing="ij")
    ok = (s_grid < d_grid - B) | (s_grid == d_grid)
    vals = np.where(ok, pair_bound_rhs(k, d_grid.astype(np.float64), s_grid.astype(np.float64), epsilon, beta), np.inf)
    i, j = np.unravel_index(int(np.argmin(vals)), vals.shape)
    return float(vals[i, j]), int(d_grid[i, j]), int(s_grid[i, j])


# ----------------------------------------------------------------- sweeps

@dataclass
class SweepReport:
    function: str
    k_lo: int
    k_hi: int
    epsilon: float
    beta: float
    min_value: float
    argmin_k: int
    all_positive: bool
    nonpositive_count: int
    first_nonpositive_k: int | None
    last_nonpositive_k: int | None
    reevaluated: int

    def to_dict(self) -> dict:
        return asdict(self)


def sweep_values(name: str, k_lo: int, k_hi: int, epsilon: float = EPSILON, beta: float = BETA) -> tuple[np.ndarray, np.ndarray]:
    """Double-precision values of ``name`` at every integer k in [k_lo, k_hi]."""
    if name not in FUNCTIONS:
        raise DomainError(f"unknown function {name!r}")
    if k_lo < 3 or k_hi < k_lo:
        raise DomainError("need 3 <= k_lo <= k_hi")
    ks = np.arange(k_lo, k_hi + 1, dtype=np.int64)
    with np.errstate(all="ignore"):
        vals = FUNCTIONS[name](ks.astype(np.float64), epsilon, beta)
    return ks, np.asarray(vals, dtype=np.float64)


def _sweep_chunk(args: tuple[str, int, int, float, float]) -> tuple[float, int, int, int | None, int | None, int]:
    name, lo, hi, epsilon, beta = args
    ks, vals = sweep_values(name, lo, hi, epsilon, beta)
    vals = vals.copy()
    # values too close to zero to trust in double precision are redone at higher precision
    suspect = np.flatnonzero(np.abs(vals) <= POSITIVITY_SLACK)
    for i in suspect:
        vals[i] = float(evaluate_high_precision(name, int(ks[i]), epsilon, beta))
    bad = np.flatnonzero(~(vals > 0))
    i = int(np.argmin(vals))
    return (
        float(vals[i]),
        int(ks[i]),
        len(bad),
        int(ks[bad[0]]) if len(bad) else None,
        int(ks[bad[-1]]) if len(bad) else None,
        len(suspect),
    )


def sweep_positivity(
    name: str,
    k_lo: int,
    k_hi: int,
    epsilon: float = EPSILON,
    beta: float = BETA,
    jobs: int = 1,
) -> SweepReport:
    """Evaluate ``name`` at every integer k in range and report min, argmin and positivity.

    Values are positive when they exceed 1e-9 in double precision, or when a
    40-digit re-evaluation of a value within 1e-9 of zero is positive.
    """
    if k_lo < 3 or k_hi < k_lo:
        raise DomainError("need 3 <= k_lo <= k_hi")
    edges = np.linspace(k_lo, k_hi + 1, num=max(1, jobs) + 1).astype(np.int64)
    tasks = [(name, int(a), int(b) - 1, epsilon, beta) for a, b in zip(edges[:-1], edges[1:]) if b > a]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(_sweep_chunk, tasks))
    else:
        parts = [_sweep_chunk(t) for t in tasks]
    min_value, argmin_k = min((p[0], p[1]) for p in parts)
    firsts = [p[3] for p in parts if p[3] is not None]
    lasts = [p[4] for p in parts if p[4] is not None]
    nonpositive = sum(p[2] for p in parts)
    return SweepReport(
        function=name,
        k_lo=k_lo,
        k_hi=k_hi,
        epsilon=epsilon,
        beta=beta,
        min_value=min_value,
        argmin_k=argmin_k,
        all_positive=nonpositive == 0,
        nonpositive_count=nonpositive,
        first_nonpositive_k=min(firsts) if firsts else None,
        last_nonpositive_k=max(lasts) if lasts else None,
        reevaluated=sum(p[5] for p in parts),
    )


# ------------------------------------------------- auxiliary inequalities

def remark_inequality(epsilon: float, k: int) -> bool:
    """2**eps > (1 + eps/2) ** (1 + 1/k)."""
    if k < 1:
        raise DomainError("k must be positive")
    with mpmath.workdps(HIGH_PRECISION_DIGITS):
        e = mpmath.mpf(epsilon)
        return bool(mpmath.power(2, e) > mpmath.power(1 + e / 2, 1 + mpmath.mpf(1) / k))


def appendix_condition(epsilon: float, k: int) -> bool:
    """1 + eps + 1/k <= (2 + eps) ln(2 + eps)."""
    if epsilon < 0 or k < 1:
        raise DomainError("needs eps >= 0 and k >= 1")
    with mpmath.workdps(HIGH_PRECISION_DIGITS):
        e = mpmath.mpf(epsilon)
        return bool(1 + e + mpmath.mpf(1) / k <= (2 + e) * mpmath.log(2 + e))


def f_eps(epsilon, k):
    """(2 + eps) ** (1 / (1 + eps + 1/k)) as a function of eps."""
    return c_of_k(k, epsilon)


def f_eps_monotone_check(k: int, grid: Sequence[float]) -> bool:
    """Whether f_eps is non-increasing along the sorted ``grid``."""
    if k < 3:
        raise DomainError("k must be at least 3")
    pts = sorted(grid)
    if pts and pts[0] < 0:
        raise DomainError("grid must be non-negative")
    with mpmath.workdps(HIGH_PRECISION_DIGITS):
        vals = [f_eps(mpmath.mpf(e), mpmath.mpf(k)) for e in pts]
    return all(b <= a for a, b in zip(vals, vals[1:]))


def ck_crossover(threshold: float = 1.98, epsilon: float = EPSILON, k_hi: int = 10**6) -> int | None:
    """Smallest k in [3, k_hi] with c**k > threshold, or None."""
    ks = np.arange(3, k_hi + 1, dtype=np.float64)
    above = np.flatnonzero(c_of_k(ks, epsilon) > threshold)
    return int(ks[above[0]]) if len(above) else None
