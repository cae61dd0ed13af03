"""Pairs on the line and the cone correspondence, plus the certifier.

A weighted point configuration on P^1 is klt iff every coefficient is
below 1, and log Fano iff additionally the total degree is below 2.  The
cone over it is the weighted line arrangement with the same coefficients,
and log Fano upstairs matches klt at the cone point; that transfer is what
turns the planar certificates into statements about pairs on the line.

`certify_sfr` runs the certificate cascade for (A^2, sum q_i L_i) at a
given prime: boundary reduction, the degenerate closed form, the
characteristic-p lower bound, and optional Frobenius escalation.  Every
certificate carries the data needed to recheck it by hand.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import DomainError, OracleBudgetError
from .frobenius import DEFAULT_BUDGET, LineArrangement, OracleBudget
from .frobenius import nu as frobenius_nu
from .rationals import format_ratio, is_prime
from .thresholds import (
    MultiplicityProfile,
    WeightedArrangement,
    hara_monsky_lower,
    klt_weighted,
)

STRONGLY_F_REGULAR = "strongly_F_regular"
NOT_KLT = "not_klt"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class P1Pair:
    """Distinct marked points on P^1 with positive rational coefficients."""

    coeffs: tuple[Fraction, ...]

    def __init__(self, coeffs):
        coeffs = tuple(Fraction(c) for c in coeffs)
        if len(coeffs) == 0:
            raise DomainError("a pair needs at least one marked point")
        if any(c <= 0 for c in coeffs):
            raise DomainError("coefficients must be positive")
        object.__setattr__(self, "coeffs", coeffs)

    @property
    def total(self) -> Fraction:
        return sum(self.coeffs, Fraction(0))


@dataclass(frozen=True)
class P1Classification:
    klt: bool
    log_fano: bool
    total: Fraction


def classify_p1(pair: P1Pair) -> P1Classification:
    """klt iff all coefficients < 1; log Fano iff klt and total < 2."""
    klt = all(c < 1 for c in pair.coeffs)
    return P1Classification(
        klt=klt, log_fano=klt and pair.total < 2, total=pair.total
    )


def sharply_fpure_A1(coeffs) -> bool:
    """Sharp F-purity for coefficients piled on one point of A^1: total <= 1.

    Characteristic-free: t^ceil(total*(q-1)) divides outside (t^q) exactly
    when total <= 1 in the limit, for every prime.
    """
    coeffs = tuple(Fraction(c) for c in coeffs)
    if len(coeffs) == 0:
        raise DomainError("empty coefficient list")
    if any(c <= 0 for c in coeffs):
        raise DomainError("coefficients must be positive")
    return sum(coeffs, Fraction(0)) <= 1


def cone_transfer(pair: P1Pair) -> WeightedArrangement:
    """Cone over the marked P^1: one line per point, same coefficients."""
    return WeightedArrangement(weights=pair.coeffs)


@dataclass(frozen=True)
class Certificate:
    verdict: str
    reason: str
    p: int
    details: dict


def certify_sfr(
    arr: WeightedArrangement,
    p: int,
    e_max: int = 0,
    budget: OracleBudget = DEFAULT_BUDGET,
) -> Certificate:
    """Certificate cascade for strong F-regularity of (A^2, sum q_i L_i).

    Rules, in order, writing the boundary as (1/c) * G for the integral
    arrangement G with multiplicities b_i = q_i * c:

    (a) boundary_reduction: dropping the heaviest line leaves total <= 1.
    (b) degenerate_lemma:   G degenerate and 1/c < 1/max(b_i), the exact
                            threshold of a degenerate arrangement.
    (c) hara_monsky_rule:   1/c below the lower bound (2p - l + 2)/(d_G p).
    (d) oracle_escalation:  nu(G, e)/p^e > 1/c for some e <= e_max
                            (needs slopes; off by default).

    Each rule certifies the coefficient vector sits strictly below the
    F-pure threshold, which is what strong F-regularity needs here.
    """
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")
    if e_max < 0:
        raise DomainError("e_max must be >= 0")
    if e_max > 0 and arr.slopes is None:
        raise DomainError("oracle escalation needs slopes on the arrangement")

    total = arr.total
    details: dict = {
        "weights": [format_ratio(w) for w in arr.weights],
        "total": format_ratio(total),
    }

    if not klt_weighted(arr):
        if any(w >= 1 for w in arr.weights):
            details["violation"] = "a weight is >= 1"
        else:
            details["violation"] = "total is >= 2"
        return Certificate(
            verdict=NOT_KLT, reason=NOT_KLT, p=p, details=details
        )

    heaviest = max(arr.weights)
    rest = total - heaviest
    if rest <= 1:
        details["dropped_weight"] = format_ratio(heaviest)
        details["remaining_total"] = format_ratio(rest)
        return Certificate(
            verdict=STRONGLY_F_REGULAR,
            reason="boundary_reduction",
            p=p,
            details=details,
        )

    c = arr.common_denominator()
    mults = tuple(int(w * c) for w in arr.weights)
    profile = MultiplicityProfile(mults)
    lam = Fraction(1, c)
    details["c"] = c
    details["integral_mults"] = list(mults)
    details["lambda"] = format_ratio(lam)

    # backstop: klt plus all drop-one totals > 1 forces max weight < total/2,
    # so a degenerate integral model cannot actually reach this point
    if profile.degenerate:
        fpt = Fraction(1, profile.max_mult)
        details["fpt"] = format_ratio(fpt)
        if lam < fpt:
            return Certificate(
                verdict=STRONGLY_F_REGULAR,
                reason="degenerate_lemma",
                p=p,
                details=details,
            )
        details["note"] = "lambda is not below the degenerate threshold"
        return Certificate(
            verdict=INCONCLUSIVE, reason=INCONCLUSIVE, p=p, details=details
        )

    hm = hara_monsky_lower(profile, p)
    details["hm_lower_bound"] = format_ratio(hm)
    if lam < hm:
        return Certificate(
            verdict=STRONGLY_F_REGULAR,
            reason="hara_monsky_rule",
            p=p,
            details=details,
        )

    if e_max > 0:
        line_arr = LineArrangement(p, arr.slopes, mults)
        for e in range(1, e_max + 1):
            try:
                rec = frobenius_nu(line_arr, e, budget)
            except OracleBudgetError as exc:
                details["note"] = f"oracle budget exhausted at e={e}: {exc}"
                return Certificate(
                    verdict=INCONCLUSIVE,
                    reason=INCONCLUSIVE,
                    p=p,
                    details=details,
                )
            ratio = Fraction(rec.nu, rec.q)
            if ratio > lam:
                details["e"] = e
                details["q"] = rec.q
                details["nu"] = rec.nu
                details["nu_over_q"] = format_ratio(ratio)
                return Certificate(
                    verdict=STRONGLY_F_REGULAR,
                    reason="oracle_escalation",
                    p=p,
                    details=details,
                )
        details["note"] = f"no Frobenius witness up to e_max={e_max}"
    else:
        details["note"] = "all closed-form rules exhausted"
    return Certificate(
        verdict=INCONCLUSIVE, reason=INCONCLUSIVE, p=p, details=details
    )
