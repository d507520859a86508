"""Numerical data attached to a positive weight vector and an integer target.

Given a weight vector mu with positive rational entries indexed by a finite
nonempty set (positions 0..delta-1 here) and an integer upsilon, there is a
unique pair (alpha, rho) with alpha integral and rho rational such that

  (a) 0 < rho_p <= mu_p for every p;
  (b) I := {p : rho_p = mu_p} is nonempty;
  (c) upsilon <= |alpha| < upsilon + |I|;
  (d) mu_p * (alpha_p + 1) - rho_p is the same for every p.

The common value in (d) is called the *level* here.  Conditions (a) and (d)
pin alpha_p and rho_p once the level c is known:

  mu_p * alpha_p <= c < mu_p * (alpha_p + 1),   rho_p = mu_p*(alpha_p+1) - c,

so alpha_p is the integer part of c / mu_p, and p lies in I exactly when c
is an integer multiple of mu_p.  The step function F(c) := sum_p
floor(c / mu_p) increases only at such multiples, jumping by |I(c)|, and
condition (c) says precisely that c is the unique breakpoint with
F(c-) < upsilon <= F(c); equivalently, c is the smallest value with
F(c) >= upsilon.  ``associated_data`` locates that breakpoint by a galloping
binary search; ``scan_oracle`` finds it by a deliberately naive linear scan
and is kept as an independent cross-check.

All arithmetic is exact.  A rational mu is cleared to an integer vector
first; by homogeneity (scaling mu by t > 0 keeps alpha and I, scales rho and
the level by t) the result is rescaled back.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm


@dataclass(frozen=True)
class NumericalData:
    """The solution (alpha, rho, I) plus the common level of condition (d)."""

    alpha: tuple[int, ...]
    rho: tuple[Fraction, ...]
    I: frozenset[int]
    level: Fraction

    @property
    def alpha_total(self) -> int:
        return sum(self.alpha)


def _clean_mu(mu):
    entries = tuple(Fraction(m) for m in mu)
    if not entries:
        raise ValueError("the index set must be nonempty")
    if any(m <= 0 for m in entries):
        raise ValueError("all mu entries must be positive")
    return entries


def _integer_scaled(mu):
    """Return (m, t) with m = t*mu integral and t a positive integer."""
    t = lcm(*(f.denominator for f in mu)) if len(mu) > 1 else mu[0].denominator
    return [int(f * t) for f in mu], t


def _data_from_breakpoint(m, t, c):
    alpha = tuple(c // mp for mp in m)
    rho = tuple(Fraction(mp * (a + 1) - c, t) for mp, a in zip(m, alpha))
    members = frozenset(p for p, mp in enumerate(m) if c % mp == 0)
    return NumericalData(alpha, rho, members, Fraction(c, t))


def associated_data(mu, upsilon: int) -> NumericalData:
    """Solve for the unique (alpha, rho, I) attached to (mu, upsilon)."""
    mu = _clean_mu(mu)
    m, t = _integer_scaled(mu)

    def jumps(c):
        return sum(c // mp for mp in m)

    # bracket the smallest integer c with jumps(c) >= upsilon
    if jumps(0) >= upsilon:
        hi, lo, step = 0, -1, 1
        while jumps(lo) >= upsilon:
            hi = lo
            step *= 2
            lo -= step
    else:
        lo, hi = 0, 1
        while jumps(hi) < upsilon:
            lo = hi
            hi *= 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if jumps(mid) >= upsilon:
            hi = mid
        else:
            lo = mid
    return _data_from_breakpoint(m, t, hi)


def verify_conditions(mu, upsilon: int, candidate: NumericalData) -> bool:
    """Exact check of conditions (a)-(d) against a candidate solution.

    Total: returns False on any mismatch rather than raising.
    """
    try:
        mu = _clean_mu(mu)
    except ValueError:
        return False
    alpha, rho = candidate.alpha, candidate.rho
    if len(alpha) != len(mu) or len(rho) != len(mu):
        return False
    if any(a != int(a) for a in alpha):
        return False
    rho = tuple(Fraction(r) for r in rho)
    if any(not (0 < r <= m) for r, m in zip(rho, mu)):
        return False
    derived = frozenset(p for p, (r, m) in enumerate(zip(rho, mu)) if r == m)
    if derived != candidate.I or not derived:
        return False
    total = sum(alpha)
    if not (upsilon <= total < upsilon + len(derived)):
        return False
    levels = {m * (a + 1) - r for m, a, r in zip(mu, alpha, rho)}
    if len(levels) != 1:
        return False
    return levels.pop() == candidate.level


def scan_oracle(mu, upsilon: int) -> NumericalData:
    """Brute-force solution: walk the breakpoints upward, test each one.

    Intentionally naive; kept independent of the binary search so the two
    can be played against each other in tests.
    """
    mu = _clean_mu(mu)
    m, t = _integer_scaled(mu)

    def jumps(c):
        return sum(c // mp for mp in m)

    lo, step = 0, 1
    while jumps(lo) >= upsilon:
        lo -= step
        step *= 2
    c = lo
    guard = 0
    while True:
        c = min((c // mp + 1) * mp for mp in m)  # next breakpoint
        total = jumps(c)
        if total >= upsilon:  # below this the third condition already fails
            candidate = _data_from_breakpoint(m, t, c)
            if verify_conditions(mu, upsilon, candidate):
                return candidate
        guard += 1
        if total >= upsilon + len(m) or guard > 10 ** 7:
            raise AssertionError("breakpoint scan exhausted without a solution")
