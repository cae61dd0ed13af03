"""Independent brute-force reference implementations for the test suite.

Everything recomputes library outputs by a different route: closures by
rounds of addition, set membership by scanning all reduced fractions with
bounded denominator, maxima by exhaustive multiset recursion, polynomial
powers by naive repeated multiplication with no truncation.  Slow on
purpose; the point is that none of the library's shortcuts appear here.
"""

from __future__ import annotations

from fractions import Fraction

F = Fraction


def closure_sums(elements, cap=F(1)) -> set[Fraction]:
    """All sums of finite multisets of `elements` that stay <= cap."""
    out = {F(0)}
    frontier = {F(0)}
    while frontier:
        nxt = set()
        for s in frontier:
            for a in elements:
                t = s + a
                if t <= cap and t not in out:
                    out.add(t)
                    nxt.add(t)
        frontier = nxt
    return out


def dset_member(plus: set[Fraction], v: Fraction) -> bool:
    """Membership in the derived set, given a precomputed closure."""
    v = F(v)
    if not 0 <= v <= 1:
        return False
    if v == 1:
        return F(1) in plus
    m = 1
    while True:
        f = 1 - m * (1 - v)
        if f < 0:
            return False
        if f in plus:
            return True
        m += 1


def bounded_fractions(max_den: int):
    """All reduced fractions in [0,1] with denominator <= max_den."""
    seen = set()
    for d in range(1, max_den + 1):
        for n in range(0, d + 1):
            x = F(n, d)
            if x not in seen:
                seen.add(x)
                yield x


def dset_bounded(elements, max_den: int, below=None) -> set[Fraction]:
    """Derived-set members with bounded denominator, by membership scan."""
    plus = closure_sums(elements)
    out = set()
    for x in bounded_fractions(max_den):
        if below is not None and x >= below:
            continue
        if dset_member(plus, x):
            out.add(x)
    return out


def qmax_brute(elements, max_den: int):
    """Exhaustive constrained-sum maximum over bounded-denominator members.

    Enumerates every non-decreasing tuple of derived-set members with total
    below 2 and keeps the admissible ones (all drop-one subtotals > 1);
    tuples shorter than 3 can never be admissible since entries are < 1.
    Returns (best_total, lexicographically smallest witness).
    """
    pool = sorted(
        x for x in dset_bounded(elements, max_den) if 0 < x < 1
    )
    best_total = None
    best_parts = None

    def admissible(parts, total):
        return all(total - x > 1 for x in set(parts))

    def rec(start, parts, total):
        nonlocal best_total, best_parts
        if len(parts) >= 3 and admissible(parts, total):
            key = tuple(parts)
            if (
                best_total is None
                or total > best_total
                or (total == best_total and key < best_parts)
            ):
                best_total = total
                best_parts = key
        for i in range(start, len(pool)):
            x = pool[i]
            if total + x >= 2:
                break
            parts.append(x)
            rec(i, parts, total + x)
            parts.pop()

    rec(0, [], F(0))
    return best_total, best_parts


def t0_brute(lams):
    """Double loop over d and lambda; smallest positive gap with witness."""
    lams = [F(x) for x in lams]
    positive = [x for x in lams if x > 0]
    if not positive:
        return None
    d_top = int(F(2) / min(positive))
    best = None
    for d in range(3, d_top + 1):
        for lam in positive:
            gap = F(2, d) - lam
            if gap > 0 and (best is None or gap < best[0]):
                best = (gap, d, lam)
    return best


def naive_polymul(a, b, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        for j, bj in enumerate(b):
            out[i + j] += ai * bj
    return [c % p for c in out]


def naive_power(base, n, p):
    out = [1]
    for _ in range(n):
        out = naive_polymul(out, base, p)
    return out


def naive_outside_frobenius(finite_slopes_mults, inf_mult, p, n, q) -> bool:
    """Full expansion of f^n with no truncation, then a window scan.

    finite_slopes_mults: iterable of (slope residue, multiplicity).
    True iff f^n is NOT in (x^q, y^q).
    """
    if n == 0:
        return True
    g = [1]
    d = inf_mult
    for lam, a in finite_slopes_mults:
        d += a
        for _ in range(a):
            g = naive_polymul(g, [(-lam) % p, 1], p)
    h = naive_power(g, n, p)
    for u, c in enumerate(h):
        if c != 0 and u <= q - 1 and n * d - u <= q - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % f for f in range(2, int(n**0.5) + 1))


def primes_between(lo: int, hi: int):
    """Primes p with lo < p < hi."""
    return [n for n in range(lo + 1, hi) if is_prime(n)]
