"""Strata of the variety of limit canonical systems: classify and enumerate.

Each positive rational weight vector mu on the nodes determines two
numerical-data solutions: (alpha, rho, I) at target g_Y and
(beta, sigma', J) at target g_X (the correction numbers and equality loci
of the two foci).  Two weight vectors give the same stratum exactly when
their alpha agree and, in case |alpha| > g_Y, their I agree, together with
the mirror condition on (beta, J); this is captured by ``StratumKey``, in
which the equality locus collapses to a sentinel (None) when |alpha| = g_Y
(resp. |beta| = g_X).

Realizability of candidate data (alpha, I, beta, J) means the joint strict
rational system

    mu_p alpha_p = c for p in I,   mu_p alpha_p < c < mu_p (alpha_p+1) else,
    mu_p beta_p  = d for p in J,   mu_p beta_p  < d < mu_p (beta_p +1) else,
    mu > 0,

has a solution.  Because the system decouples over the nodes once (c, d)
are fixed, feasibility reduces to a single exact interval intersection in
the ratio d/c; that reduction is used as a fast pre-filter, and
Fourier-Motzkin elimination then certifies each survivor and extracts the
strictly feasible witness (normalized so the last coordinate is 1).  The
two deciders are played against each other in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from math import gcd, lcm
from multiprocessing import Pool

from .fm import solve_homogeneous
from .model import CurveConfig
from .numdata import associated_data

DEFAULT_CAP = 1_000_000


class CapExceeded(RuntimeError):
    """Raised when an enumeration would exceed the configured candidate cap."""


@dataclass(frozen=True)
class StratumKey:
    """Identity of a stratum: correction numbers plus effective equality loci."""

    alpha: tuple[int, ...]
    beta: tuple[int, ...]
    I: frozenset | None
    J: frozenset | None

    def sort_token(self):
        itok = tuple(sorted(self.I)) if self.I is not None else (-1,)
        jtok = tuple(sorted(self.J)) if self.J is not None else (-1,)
        return (self.alpha, self.beta, itok, jtok)


@dataclass(frozen=True)
class StratumData:
    """Full stratum descriptor attached to a witness weight vector."""

    alpha: tuple[int, ...]
    I: frozenset
    beta: tuple[int, ...]
    J: frozenset
    gamma: Fraction
    epsilon: Fraction
    alpha_tilde: int | None
    beta_tilde: int | None
    witness_mu: tuple[Fraction, ...]
    rho: tuple[Fraction, ...]
    sigma: tuple[Fraction, ...]

    @property
    def alpha_total(self) -> int:
        return sum(self.alpha)

    @property
    def beta_total(self) -> int:
        return sum(self.beta)


def stratum_of(config: CurveConfig, mu) -> StratumData:
    """Classify a positive rational weight vector."""
    mu = tuple(Fraction(m) for m in mu)
    if len(mu) != config.delta:
        raise ValueError("mu length must equal delta")
    data_x = associated_data(mu, config.g_y)
    data_y = associated_data(mu, config.g_x)
    sigma = tuple(m - r for m, r in zip(mu, data_y.rho))
    alpha_tilde = beta_tilde = None
    if config.g_x > 0 and config.g_y > 0:
        t = lcm(*(f.denominator for f in mu)) if len(mu) > 1 else mu[0].denominator
        c = int(data_x.level * t)
        d = int(data_y.level * t)
        g = gcd(c, d)
        alpha_tilde, beta_tilde = c // g, d // g
    return StratumData(
        alpha=data_x.alpha,
        I=data_x.I,
        beta=data_y.alpha,
        J=data_y.I,
        gamma=data_x.level,
        epsilon=data_y.level,
        alpha_tilde=alpha_tilde,
        beta_tilde=beta_tilde,
        witness_mu=mu,
        rho=data_x.rho,
        sigma=sigma,
    )


def make_key(config: CurveConfig, alpha, I, beta, J) -> StratumKey:
    alpha = tuple(alpha)
    beta = tuple(beta)
    return StratumKey(
        alpha,
        beta,
        frozenset(I) if sum(alpha) > config.g_y else None,
        frozenset(J) if sum(beta) > config.g_x else None,
    )


def stratum_key(config: CurveConfig, s: StratumData) -> StratumKey:
    return make_key(config, s.alpha, s.I, s.beta, s.J)


def stratum_dim(config: CurveConfig, s) -> dict:
    """Dimensions of the stratum and of its two Grassmannian projections."""
    if not config.general_position:
        raise ValueError("dimension formulas need general position")
    a_total, b_total = sum(s.alpha), sum(s.beta)
    big_a, big_b = a_total > config.g_y, b_total > config.g_x
    dim_x = len(s.I) - 1 if big_a else 0
    dim_y = len(s.J) - 1 if big_b else 0
    if not big_a and not big_b:
        dim = 0
    elif big_a and not big_b:
        dim = len(s.I) - 1
    elif big_b and not big_a:
        dim = len(s.J) - 1
    elif s.I & s.J:
        dim = len(s.I | s.J) - 1
    else:
        dim = len(s.I | s.J) - 2
    return {"dim": dim, "dim_X": dim_x, "dim_Y": dim_y}


def _validate_candidate(config, alpha, I, beta, J):
    delta = config.delta
    alpha, beta = tuple(int(a) for a in alpha), tuple(int(b) for b in beta)
    I, J = frozenset(I), frozenset(J)
    if len(alpha) != delta or len(beta) != delta:
        raise ValueError("alpha/beta length must equal delta")
    if not I or not J or not I <= set(range(delta)) or not J <= set(range(delta)):
        raise ValueError("I and J must be nonempty subsets of the node set")
    if any(a < 0 or a > config.g_y for a in alpha):
        raise ValueError("alpha entries must lie in [0, g_Y]")
    if any(b < 0 or b > config.g_x for b in beta):
        raise ValueError("beta entries must lie in [0, g_X]")
    if not (config.g_y <= sum(alpha) < config.g_y + len(I)):
        raise ValueError("need g_Y <= |alpha| < g_Y + |I|")
    if not (config.g_x <= sum(beta) < config.g_x + len(J)):
        raise ValueError("need g_X <= |beta| < g_X + |J|")
    if config.g_y > 0 and any(alpha[p] == 0 for p in I):
        raise ValueError("alpha must be positive on I when g_Y > 0")
    if config.g_y == 0 and (any(alpha) or I != set(range(delta))):
        raise ValueError("g_Y = 0 forces alpha = 0 and I = all nodes")
    if config.g_x > 0 and any(beta[p] == 0 for p in J):
        raise ValueError("beta must be positive on J when g_X > 0")
    if config.g_x == 0 and (any(beta) or J != set(range(delta))):
        raise ValueError("g_X = 0 forces beta = 0 and J = all nodes")
    return alpha, I, beta, J


def _ratio_feasible(delta, alpha, I, beta, J):
    """Exact feasibility via the ratio d/c of the two levels.

    Valid when both genera are positive (both levels are then positive and
    the per-node constraints decouple into conditions on d/c alone).
    """
    lo = Fraction(0)
    hi = None
    pin = None
    for p in range(delta):
        a, b = alpha[p], beta[p]
        in_i, in_j = p in I, p in J
        if in_i and in_j:
            r = Fraction(b, a)
            if pin is None:
                pin = r
            elif pin != r:
                return False
        elif in_i:
            lo = max(lo, Fraction(b, a))
            top = Fraction(b + 1, a)
            hi = top if hi is None else min(hi, top)
        elif in_j:
            lo = max(lo, Fraction(b, a + 1))
            if a > 0:
                top = Fraction(b, a)
                hi = top if hi is None else min(hi, top)
        else:
            lo = max(lo, Fraction(b, a + 1))
            if a > 0:
                top = Fraction(b + 1, a)
                hi = top if hi is None else min(hi, top)
    if pin is not None:
        return pin > lo and (hi is None or pin < hi)
    return hi is None or lo < hi


def _fm_witness(delta, alpha, I, beta, J):
    """Build the joint strict system over mu and solve it exactly."""
    equalities = []
    inequalities = []

    def unit(p, value):
        row = [0] * delta
        row[p] = value
        return row

    for members, weights in ((I, alpha), (J, beta)):
        base = min(members)
        for p in sorted(members):
            if p != base:
                row = [0] * delta
                row[p] = weights[p]
                row[base] = -weights[base]
                equalities.append(row)
        for p in range(delta):
            if p in members:
                continue
            low = [0] * delta
            low[base] = weights[base]
            low[p] = -weights[p]
            inequalities.append((low, True))  # level above mu_p * w_p
            high = [0] * delta
            high[p] = weights[p] + 1
            high[base] = -weights[base]
            inequalities.append((high, True))  # level below mu_p * (w_p + 1)
    for p in range(delta):
        inequalities.append((unit(p, 1), True))
    return solve_homogeneous(delta, equalities, inequalities)


def realizable(config: CurveConfig, alpha, I, beta, J):
    """Witness weight vector realizing the candidate data, or None.

    Malformed candidates (bounds violated, empty loci, zero entries where
    positivity is forced) raise ValueError; well-formed but unrealizable
    candidates return None.  A returned witness is normalized so its last
    coordinate is 1 and is guaranteed to classify back onto the candidate.
    """
    alpha, I, beta, J = _validate_candidate(config, alpha, I, beta, J)
    if config.g_x > 0 and config.g_y > 0 and not _ratio_feasible(config.delta, alpha, I, beta, J):
        return None
    witness = _fm_witness(config.delta, alpha, I, beta, J)
    if witness is None:
        return None
    base = witness[config.delta - 1]
    witness = tuple(w / base for w in witness)
    check = stratum_of(config, witness)
    if check.alpha != alpha or check.I != I or check.beta != beta or check.J != J:
        raise AssertionError("witness classification does not match the candidate")
    return witness


def _side_candidates(bound, delta):
    """All (weights, locus) pairs for one focus: entries in [0, bound],
    bound <= total < bound + |locus|, positive on the locus when bound > 0."""
    if bound == 0:
        return [((0,) * delta, frozenset(range(delta)))]
    out = []
    for weights in product(range(bound + 1), repeat=delta):
        total = sum(weights)
        if not (bound <= total <= bound + delta - 1):
            continue
        support = [p for p in range(delta) if weights[p] > 0]
        min_size = total - bound + 1
        for size in range(max(1, min_size), len(support) + 1):
            for locus in combinations(support, size):
                out.append((weights, frozenset(locus)))
    return out


def _joint_candidates(config):
    for alpha, I in _side_candidates(config.g_y, config.delta):
        for beta, J in _side_candidates(config.g_x, config.delta):
            yield alpha, I, beta, J


def _realize_chunk(payload):
    g_x, g_y, delta, chunk = payload
    config = CurveConfig(g_x=g_x, g_y=g_y, delta=delta)
    out = []
    for alpha, I, beta, J in chunk:
        witness = realizable(config, alpha, frozenset(I), beta, frozenset(J))
        if witness is not None:
            out.append(((alpha, I, beta, J), witness))
    return out


def enumerate_strata(config: CurveConfig, cap: int | None = None, jobs: int = 1):
    """One StratumData per distinct StratumKey, deterministically ordered.

    Every positive rational weight vector classifies onto exactly one of
    the returned keys.  The stored representative keeps the
    lexicographically smallest witness found.
    """
    cap = DEFAULT_CAP if cap is None else cap
    candidates = []
    both_positive = config.g_x > 0 and config.g_y > 0
    for alpha, I, beta, J in _joint_candidates(config):
        if len(candidates) >= cap:
            raise CapExceeded(f"candidate count exceeded the cap {cap}")
        if both_positive and not _ratio_feasible(config.delta, alpha, I, beta, J):
            continue
        candidates.append((alpha, tuple(sorted(I)), beta, tuple(sorted(J))))

    if jobs > 1 and len(candidates) > 64:
        chunks = [candidates[i::jobs] for i in range(jobs)]
        payloads = [(config.g_x, config.g_y, config.delta, chunk) for chunk in chunks]
        with Pool(jobs) as pool:
            results = pool.map(_realize_chunk, payloads)
        found = dict(pair for chunk in results for pair in chunk)
        realized = [(cand, found[cand]) for cand in candidates if cand in found]
    else:
        realized = []
        for cand in candidates:
            alpha, I, beta, J = cand
            witness = realizable(config, alpha, frozenset(I), beta, frozenset(J))
            if witness is not None:
                realized.append((cand, witness))

    by_key: dict[StratumKey, StratumData] = {}
    for _, witness in realized:
        data = stratum_of(config, witness)
        key = stratum_key(config, data)
        old = by_key.get(key)
        if old is None or witness < old.witness_mu:
            by_key[key] = data
    return [by_key[k] for k in sorted(by_key, key=StratumKey.sort_token)]


@dataclass(frozen=True)
class Constraint:
    """Homogeneous rational constraint sum(coeffs * mu) = 0 or > 0."""

    coeffs: tuple[int, ...]
    relation: str  # "eq" or "gt"

    def holds(self, mu) -> bool:
        value = sum(Fraction(c) * Fraction(m) for c, m in zip(self.coeffs, mu))
        return value == 0 if self.relation == "eq" else value > 0


@dataclass(frozen=True)
class RegionDescription:
    """Convex homogeneous region of weight vectors giving one stratum."""

    constraints: tuple[Constraint, ...]
    note: str
    base_index: int

    def satisfies(self, mu) -> bool:
        return all(c.holds(mu) for c in self.constraints)


def _side_region(delta, weights, members, full_locus):
    """Constraints pinning one side's data.

    When the locus is effective (weights total above the genus target) the
    region fixes both the weights and the locus; at the minimum total the
    regions for all loci merge, leaving only the two-sided strict bounds.
    """
    rows = []
    if full_locus:
        base = min(members)
        for p in sorted(members):
            if p != base:
                row = [0] * delta
                row[p] = weights[p]
                row[base] = -weights[base]
                rows.append(Constraint(tuple(row), "eq"))
        for p in range(delta):
            if p in members:
                continue
            low = [0] * delta
            low[base] = weights[base]
            low[p] = -weights[p]
            rows.append(Constraint(tuple(low), "gt"))
            high = [0] * delta
            high[p] = weights[p] + 1
            high[base] = -weights[base]
            rows.append(Constraint(tuple(high), "gt"))
    else:
        for p in range(delta):
            for q in range(delta):
                if p == q:
                    continue
                row = [0] * delta
                row[q] += weights[q] + 1
                row[p] -= weights[p]
                rows.append(Constraint(tuple(row), "gt"))
    return rows


def region(config: CurveConfig, s: StratumData) -> RegionDescription:
    """Exact linear description of all mu classifying onto s's stratum."""
    delta = config.delta
    rows = []
    for p in range(delta):
        unit = [0] * delta
        unit[p] = 1
        rows.append(Constraint(tuple(unit), "gt"))
    rows.extend(_side_region(delta, s.alpha, s.I, s.alpha_total > config.g_y))
    rows.extend(_side_region(delta, s.beta, s.J, s.beta_total > config.g_x))
    return RegionDescription(
        constraints=tuple(rows),
        note="homogeneous: mu and t*mu (t > 0) satisfy the same constraints",
        base_index=delta - 1,
    )
