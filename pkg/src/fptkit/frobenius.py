"""Frobenius nu-invariants of line arrangements over F_p.

For f the defining polynomial of an arrangement of distinct lines through
the origin, nu(q) is the largest N with f^N outside the ideal (x^q, y^q),
q = p^e.  Writing f = y^a * prod (x - lam_i y)^{a_i} and g(t) =
prod (t - lam_i)^{a_i}, the expansion f^N = sum_u c_u x^u y^{N d - u} has
c_u equal to the t^u coefficient of g^N, so membership reduces to a window
scan over one truncated univariate power: f^N stays outside the ideal iff
some u with max(0, N d - q + 1) <= u <= min(q - 1, N deg g) has c_u != 0.

N = 0 always stays outside, the window is empty once N d > 2(q - 1), and
the property is monotone in N (the ideal is integrally stable under the
partial order here), so nu is found by binary search and re-verified by
direct probes at nu and nu + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .errors import DomainError, OracleBudgetError
from .kernels import polymul_mod, truncated_power
from .rationals import is_prime
from .thresholds import MultiplicityProfile, hara_monsky_lower
from .slopes import INF, format_slope, normalize_slopes, slope_key


@dataclass(frozen=True)
class OracleBudget:
    """Work cap for nu computations: e <= max_e and p * d * q <= max_ops."""

    max_e: int = 5
    max_ops: int = 10**8


DEFAULT_BUDGET = OracleBudget()


@dataclass(frozen=True)
class LineArrangement:
    """Distinct lines through the origin of A^2 over F_p, with multiplicities.

    Slopes are residues mod p or INF for the line y = 0; lines are stored
    sorted by slope so equal arrangements compare and hash equal.
    """

    p: int
    slopes: tuple
    mults: tuple[int, ...]

    def __init__(self, p, slopes, mults):
        p = int(p)
        if not is_prime(p):
            raise DomainError(f"{p} is not prime")
        slopes = normalize_slopes(tuple(slopes), p)
        mults = tuple(int(a) for a in mults)
        if len(slopes) != len(mults):
            raise DomainError(f"{len(slopes)} slopes for {len(mults)} mults")
        if len(slopes) == 0:
            raise DomainError("an arrangement needs at least one line")
        if any(a <= 0 for a in mults):
            raise DomainError(f"multiplicities must be positive: {mults}")
        order = sorted(range(len(slopes)), key=lambda i: slope_key(slopes[i]))
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "slopes", tuple(slopes[i] for i in order))
        object.__setattr__(self, "mults", tuple(mults[i] for i in order))

    @classmethod
    def all_rational_lines(cls, p: int, mult: int = 1) -> "LineArrangement":
        """All p + 1 lines rational over F_p, each with the same weight."""
        return cls(p, tuple(range(p)) + (INF,), (mult,) * (p + 1))

    @property
    def degree(self) -> int:
        return sum(self.mults)

    @property
    def line_count(self) -> int:
        return len(self.mults)

    @property
    def inf_mult(self) -> int:
        for s, a in zip(self.slopes, self.mults):
            if s is INF:
                return a
        return 0

    def profile(self) -> MultiplicityProfile:
        return MultiplicityProfile(self.mults)

    def describe(self) -> str:
        lines = ", ".join(
            f"{format_slope(s)}^{a}" for s, a in zip(self.slopes, self.mults)
        )
        return f"p={self.p}: {lines}"


@dataclass(frozen=True)
class NuRecord:
    p: int
    e: int
    q: int
    nu: int


@dataclass(frozen=True)
class ThresholdBracket:
    """fpt lies in (lower, upper]; the width is exactly 1/q."""

    p: int
    e: int
    q: int
    nu: int
    lower: Fraction
    upper: Fraction


@dataclass(frozen=True)
class FPurityCheck:
    """Outcome of scanning e = 1..e_max for ceil(lam*(q-1)) <= nu(q)."""

    holds: bool
    witness_e: int | None
    e_max: int
    records: tuple[NuRecord, ...]


def _budgeted_q(arr: LineArrangement, e: int, budget: OracleBudget) -> int:
    if e < 1:
        raise DomainError(f"e must be a positive integer, got {e}")
    if e > budget.max_e:
        raise OracleBudgetError(
            f"e={e} exceeds the budget cap e<={budget.max_e} "
            f"(limiting q={arr.p}^{e})",
            q=arr.p**e,
            estimate=None,
            limit=budget.max_e,
        )
    q = arr.p**e
    estimate = arr.p * arr.degree * q
    if estimate > budget.max_ops:
        raise OracleBudgetError(
            f"work estimate p*d*q = {estimate} exceeds {budget.max_ops} "
            f"(limiting q={q})",
            q=q,
            estimate=estimate,
            limit=budget.max_ops,
        )
    return q


@lru_cache(maxsize=128)
def _dehomogenized(arr: LineArrangement) -> tuple[int, ...]:
    """Coefficients of g(t) = prod (t - lam)^mult over the finite slopes."""
    p = arr.p
    g = [1]
    for s, a in zip(arr.slopes, arr.mults):
        if s is INF:
            continue
        factor = truncated_power([(-s) % p, 1], a, p)
        g = polymul_mod(g, factor, p)
    return tuple(g)


def _outside_ideal(arr: LineArrangement, n: int, q: int) -> bool:
    """True when f^n is not in (x^q, y^q); exact for any n >= 0."""
    if n == 0:
        return True
    d = arr.degree
    if n * d > 2 * (q - 1):
        return False
    g = _dehomogenized(arr)
    deg_g = len(g) - 1
    lo = max(0, n * d - q + 1)
    hi = min(q - 1, n * deg_g)
    if lo > hi:
        return False
    coeffs = truncated_power(list(g), n, arr.p, trunc=hi + 1)
    return any(coeffs[u] for u in range(lo, hi + 1))


def power_in_frobenius_ideal(
    arr: LineArrangement, n: int, e: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Is f^n in (x^q, y^q) for q = p^e?"""
    if n < 0:
        raise DomainError("the exponent must be non-negative")
    q = _budgeted_q(arr, e, budget)
    return not _outside_ideal(arr, n, q)


def nu(
    arr: LineArrangement, e: int, budget: OracleBudget = DEFAULT_BUDGET
) -> NuRecord:
    """nu(q) = max{N : f^N not in (x^q, y^q)}, q = p^e, by binary search."""
    q = _budgeted_q(arr, e, budget)
    d = arr.degree
    lo, hi = 0, 2 * (q - 1) // d + 1  # hi has an empty window, always inside
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if _outside_ideal(arr, mid, q):
            lo = mid
        else:
            hi = mid
    if not _outside_ideal(arr, lo, q) or _outside_ideal(arr, lo + 1, q):
        raise AssertionError(
            f"membership probes contradict nu={lo} for {arr.describe()}"
        )
    return NuRecord(p=arr.p, e=e, q=q, nu=lo)


def fpt_bracket(
    arr: LineArrangement, e: int, budget: OracleBudget = DEFAULT_BUDGET
) -> ThresholdBracket:
    """Enclose the F-pure threshold in (nu/q, (nu+1)/q]."""
    rec = nu(arr, e, budget)
    return ThresholdBracket(
        p=rec.p,
        e=rec.e,
        q=rec.q,
        nu=rec.nu,
        lower=Fraction(rec.nu, rec.q),
        upper=Fraction(rec.nu + 1, rec.q),
    )


def sharply_fpure_at(
    arr: LineArrangement,
    lam: Fraction,
    e_max: int,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> FPurityCheck:
    """Search e <= e_max for a Frobenius splitting witness at coefficient lam.

    (A^2, lam*f) is sharply F-pure iff ceil(lam*(q-1)) <= nu(q) for some
    q = p^e; the check reports the least witnessing e within the horizon.
    """
    lam = Fraction(lam)
    if not 0 < lam <= 1:
        raise DomainError("the coefficient must lie in (0,1]")
    if e_max < 1:
        raise DomainError("e_max must be at least 1")
    records = []
    witness = None
    for e in range(1, e_max + 1):
        rec = nu(arr, e, budget)
        records.append(rec)
        if math.ceil(lam * (rec.q - 1)) <= rec.nu:
            witness = e
            break
    return FPurityCheck(
        holds=witness is not None,
        witness_e=witness,
        e_max=e_max,
        records=tuple(records),
    )


def verify_hm_bound(
    arr: LineArrangement, e: int, budget: OracleBudget = DEFAULT_BUDGET
) -> bool:
    """Check the computable face of the lower bound: (nu+1)/q >= (2p-l+2)/(dp).

    The F-pure threshold sits in (nu/q, (nu+1)/q] and dominates the bound,
    so the upper end of any bracket must too.
    """
    bound = hara_monsky_lower(arr.profile(), arr.p)
    rec = nu(arr, e, budget)
    return Fraction(rec.nu + 1, rec.q) >= bound


def apply_projective_change(arr: LineArrangement, matrix) -> LineArrangement:
    """Relabel slopes by an invertible matrix acting on P^1(F_p).

    (x, y) -> (a x + b y, c x + d y) sends x^q, y^q to combinations of
    x^q, y^q, so nu is unchanged; tests lean on that invariance.
    """
    a, b, c, d = (int(v) % arr.p for v in matrix)
    p = arr.p
    if (a * d - b * c) % p == 0:
        raise DomainError("matrix is singular mod p")
    new_slopes = []
    for s in arr.slopes:
        if s is INF:
            new_slopes.append(INF if c == 0 else (a * pow(c, -1, p)) % p)
        else:
            den = (c * s + d) % p
            if den == 0:
                new_slopes.append(INF)
            else:
                new_slopes.append(((a * s + b) * pow(den, -1, p)) % p)
    return LineArrangement(p, tuple(new_slopes), arr.mults)
