"""Log canonical thresholds and related bounds for line arrangements.

A reduced-to-the-origin line arrangement is described by its multiplicity
profile (a_1, ..., a_l); the pair (A^2, lam * arrangement) is klt iff every
lam*a_i < 1 and lam*d < 2, where d = sum a_i.  The log canonical threshold
is min(2/d, 1/max a_i), attained without Frobenius input; the F-pure
threshold sits between the characteristic-p lower bound implemented in
`hara_monsky_lower` and the lct.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .coeffsets import CoeffSet, dset_below, min_positive
from .errors import DomainError
from .rationals import format_ratio, is_prime
from .slopes import INF


@dataclass(frozen=True)
class MultiplicityProfile:
    """Positive integer multiplicities of the lines, order preserved."""

    mults: tuple[int, ...]

    def __init__(self, mults):
        mults = tuple(int(a) for a in mults)
        if len(mults) == 0:
            raise DomainError("a profile needs at least one line")
        if any(a <= 0 for a in mults):
            raise DomainError(f"multiplicities must be positive: {mults}")
        object.__setattr__(self, "mults", mults)

    @property
    def degree(self) -> int:
        return sum(self.mults)

    @property
    def line_count(self) -> int:
        return len(self.mults)

    @property
    def max_mult(self) -> int:
        return max(self.mults)

    @property
    def degenerate(self) -> bool:
        """True when one line carries at least half the degree."""
        return 2 * self.max_mult >= self.degree

    def scaled(self, k: int) -> "MultiplicityProfile":
        if k <= 0:
            raise DomainError("scale factor must be positive")
        return MultiplicityProfile(tuple(k * a for a in self.mults))


@dataclass(frozen=True)
class WeightedArrangement:
    """Lines with positive rational weights; slopes optional until needed."""

    weights: tuple[Fraction, ...]
    slopes: tuple | None = None

    def __init__(self, weights, slopes=None):
        weights = tuple(Fraction(w) for w in weights)
        if len(weights) == 0:
            raise DomainError("an arrangement needs at least one line")
        if any(w <= 0 for w in weights):
            raise DomainError("weights must be positive")
        if slopes is not None:
            slopes = tuple(slopes)
            if len(slopes) != len(weights):
                raise DomainError(
                    f"{len(slopes)} slopes for {len(weights)} weights"
                )
            for s in slopes:
                if s is not INF and not isinstance(s, int):
                    raise DomainError(f"bad slope token {s!r}")
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "slopes", slopes)

    @property
    def total(self) -> Fraction:
        return sum(self.weights, Fraction(0))

    def common_denominator(self) -> int:
        return math.lcm(*(w.denominator for w in self.weights))


@dataclass(frozen=True)
class T0Report:
    """Smallest positive gap 2/d - lambda, with its witness, if any exists."""

    value: Fraction | None
    witness_d: int | None
    witness_lambda: Fraction | None
    vacuous: bool
    lambda_source: str


def lct_line_arrangement(profile: MultiplicityProfile) -> Fraction:
    return min(Fraction(2, profile.degree), Fraction(1, profile.max_mult))


def fpt_degenerate(profile: MultiplicityProfile) -> Fraction | None:
    """In the degenerate case the F-pure threshold is exactly 1/max_mult.

    Dropping all other lines only raises the threshold, and a single
    a-fold line has threshold 1/a in every characteristic; the boundary
    computation on the heaviest line turns that into an equality.
    Returns None for non-degenerate profiles, where no closed form holds.
    """
    if profile.degenerate:
        return Fraction(1, profile.max_mult)
    return None


def hara_monsky_lower(profile: MultiplicityProfile, p: int) -> Fraction:
    """Lower bound (2p - l + 2) / (d p) for the F-pure threshold.

    Valid for non-degenerate profiles of l distinct lines in
    characteristic p; always strictly below the lct 2/d.
    """
    if profile.degenerate:
        raise DomainError(
            "lower bound needs a non-degenerate profile; use fpt_degenerate"
        )
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    return Fraction(2 * p - profile.line_count + 2, profile.degree * p)


def klt_weighted(arr: WeightedArrangement) -> bool:
    return all(w < 1 for w in arr.weights) and arr.total < 2


def klt_scaled(profile: MultiplicityProfile, lam: Fraction) -> bool:
    lam = Fraction(lam)
    if lam <= 0:
        raise DomainError("scaling coefficient must be positive")
    return lam * profile.max_mult < 1 and lam * profile.degree < 2


def _t0_search(candidate_for_d, d_max: int, source: str) -> T0Report:
    best = None
    for d in range(3, d_max + 1):
        lam = candidate_for_d(d)
        if lam is None:
            continue
        gap = Fraction(2, d) - lam
        if best is None or gap < best[0]:
            best = (gap, d, lam)
    if best is None:
        return T0Report(
            value=None,
            witness_d=None,
            witness_lambda=None,
            vacuous=True,
            lambda_source=source,
        )
    gap, d, lam = best
    return T0Report(
        value=gap,
        witness_d=d,
        witness_lambda=lam,
        vacuous=False,
        lambda_source=source,
    )


def t0_from_lambdas(lams) -> T0Report:
    """t0 for an explicit finite list of coefficients in (0,1]."""
    lams = tuple(Fraction(x) for x in lams)
    if len(lams) == 0:
        raise DomainError("empty coefficient list")
    if any(not 0 < x <= 1 for x in lams):
        raise DomainError("coefficients must lie in (0,1]")
    d_max = math.floor(Fraction(2) / min(lams))

    def candidate(d):
        below = [x for x in lams if x < Fraction(2, d)]
        return max(below) if below else None

    source = "list:" + ",".join(format_ratio(x) for x in sorted(lams))
    return _t0_search(candidate, d_max, source)


def t0_from_dset(coeffs: CoeffSet) -> T0Report:
    """t0 with coefficients drawn from the full derived set D(coeffs).

    For each d only the largest element of D(coeffs) below 2/d matters,
    and d cannot exceed 2/min_positive(coeffs) or the gap would need a
    positive lambda below the smallest one there is.
    """
    d_max = math.floor(Fraction(2) / min_positive(coeffs))

    def candidate(d):
        positives = dset_below(coeffs, Fraction(2, d)).positives
        return positives[-1] if positives else None

    return _t0_search(candidate, d_max, f"D({coeffs})")
