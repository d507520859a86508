"""Closure relations between strata and the component structure they induce.

Which strata appear in the closure of a given one is a purely combinatorial
matter: ordered tripartitions (first, middle, last) of the equality locus I
with

    g_Y + |last| <= |alpha| < g_Y + |I| - |first|

describe the admissible degenerations of the focus-X data (the middle
becomes the new equality locus and the correction numbers drop by one on
the last part), the mirror condition governs the focus-Y side, and when
both genera are positive the pair of tripartitions must satisfy the two
implications of ``tripartitions.pair_compatible``.  Sampling weight vectors
in an explicit neighborhood of a witness provides an independent check and
never enters the production path.

Irreducible components are counted as the maximal strata of the closure
poset; strata are pairwise disjoint and each is irreducible, so maximal
stratum closures are exactly the components.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import comb, gcd, lcm

from .model import CurveConfig
from .strata import StratumData, StratumKey, enumerate_strata, make_key, stratum_dim, stratum_key, stratum_of
from .tripartitions import Tripartition, pair_compatible, tripartitions

__all__ = [
    "ClosurePoset",
    "Tripartition",
    "build_poset",
    "closure_of",
    "components",
    "count_formulas",
    "direction_probes",
    "neighborhood_radius",
    "neighborhood_sample_check",
    "to_dot",
]


def _admissible(members, weights, genus_target):
    total = sum(weights)
    out = []
    for tri in tripartitions(members):
        if genus_target + len(tri.last) <= total < genus_target + len(members) - len(tri.first):
            out.append(tri)
    return out


def _drop_on(weights, part):
    return tuple(w - 1 if p in part else w for p, w in enumerate(weights))


def closure_of(config: CurveConfig, s: StratumData) -> frozenset:
    """Keys of every stratum contained in the closure of s (including s)."""
    x_tris = _admissible(s.I, s.alpha, config.g_y)
    y_tris = _admissible(s.J, s.beta, config.g_x)
    need_compat = config.g_x > 0 and config.g_y > 0
    out = set()
    for ti in x_tris:
        for tj in y_tris:
            if need_compat and not pair_compatible(ti, tj, s.I, s.J):
                continue
            out.add(
                make_key(
                    config,
                    _drop_on(s.alpha, ti.last),
                    ti.middle,
                    _drop_on(s.beta, tj.last),
                    tj.middle,
                )
            )
    return frozenset(out)


@dataclass
class ClosurePoset:
    config: CurveConfig
    keys: tuple
    rep: dict
    closure: dict
    dims: dict

    def contains(self, upper: StratumKey, lower: StratumKey) -> bool:
        return lower in self.closure[upper]

    def maximal(self):
        return [
            k
            for k in self.keys
            if not any(o != k and k in self.closure[o] for o in self.keys)
        ]

    def covering_edges(self):
        edges = []
        for a in self.keys:
            below = self.closure[a] - {a}
            for b in sorted(below, key=StratumKey.sort_token):
                if not any(c != b and b in self.closure[c] for c in below):
                    edges.append((a, b))
        return edges


def build_poset(config: CurveConfig, strata=None, cap=None) -> ClosurePoset:
    if strata is None:
        strata = enumerate_strata(config, cap=cap)
    rep = {stratum_key(config, s): s for s in strata}
    keys = tuple(sorted(rep, key=StratumKey.sort_token))
    closure = {k: closure_of(config, rep[k]) for k in keys}
    dims = {k: stratum_dim(config, rep[k])["dim"] for k in keys}
    return ClosurePoset(config, keys, rep, closure, dims)


def components(config: CurveConfig, poset: ClosurePoset | None = None) -> dict:
    """Irreducible components: the maximal strata and their count."""
    if poset is None:
        poset = build_poset(config)
    maximal = poset.maximal()
    return {"count": len(maximal), "maximal": maximal, "poset": poset}


def n_delta(h: int, delta: int) -> int:
    return comb(h + delta - 1, delta) - comb(h, delta)


def count_formulas(config: CurveConfig) -> dict:
    """Closed-form component counts and bounds (delta > 1 only)."""
    delta = config.delta
    if delta < 2:
        raise ValueError("count formulas need delta > 1")
    g_x, g_y = config.g_x, config.g_y
    gcd_table = {
        (i, j): gcd(g_x + i, g_y + j)
        for i in range(1, delta)
        for j in range(1, delta)
    }
    if g_x == 0 and g_y == 0:
        statement1 = 1
    elif g_x * g_y == 0 or g_x == g_y:
        statement1 = n_delta(max(g_x, g_y), delta)
    else:
        statement1 = None
    if g_x > 0 and g_y > 0:
        lower = n_delta(g_x, delta) + n_delta(g_y, delta) - sum(
            comb(g - 1, delta - 1) for g in gcd_table.values()
        )
    else:
        lower = statement1  # exact in this case
    closed2 = None
    if delta == 2 and (g_x, g_y) != (0, 0):
        closed2 = g_x + g_y - gcd(g_x + 1, g_y + 1) + 1
    return {
        "n_delta_values": {"g_x": n_delta(g_x, delta), "g_y": n_delta(g_y, delta)},
        "gcd_table": gcd_table,
        "lower_bound": lower,
        "closed_form_delta2": closed2,
        "statement1_value": statement1,
    }


def _integral_witness(s: StratumData):
    """Scale the witness (and rho, sigma along with it) to integer entries."""
    t = lcm(*(f.denominator for f in s.witness_mu)) if len(s.witness_mu) > 1 else s.witness_mu[0].denominator
    mu = tuple(int(m * t) for m in s.witness_mu)
    rho = tuple(Fraction(r) * t for r in s.rho)
    sigma = tuple(Fraction(x) * t for x in s.sigma)
    return mu, rho, sigma


def neighborhood_radius(s: StratumData):
    """Integral witness plus the coordinate radius of its safe neighborhood.

    The radius is the smallest nonzero value among rho_q, mu_q - rho_q,
    sigma_q and mu_q - sigma_q over all nodes q, divided by three times one
    plus the largest correction number.
    """
    mu, rho, sigma = _integral_witness(s)
    pool = []
    for q in range(len(mu)):
        pool.extend(v for v in (rho[q], mu[q] - rho[q], sigma[q], mu[q] - sigma[q]) if v != 0)
    min_star = min(pool)
    denom = 3 * (1 + max(max(a, b) for a, b in zip(s.alpha, s.beta)))
    return mu, Fraction(min_star, denom)


def neighborhood_sample_check(
    config: CurveConfig, s: StratumData, samples: int = 200, seed: int = 0, closure=None
) -> dict:
    """Sample weight vectors near the witness; each must classify into the
    predicted closure.  Report-based: returns the violations, never raises."""
    mu, radius = neighborhood_radius(s)
    allowed = closure_of(config, s) if closure is None else closure
    rng = random.Random(seed)
    violations = []
    for _ in range(samples):
        eps = [radius * Fraction(rng.randint(-999, 999), 1000) for _ in mu]
        shifted = tuple(Fraction(m) + e for m, e in zip(mu, eps))
        key = stratum_key(config, stratum_of(config, shifted))
        if key not in allowed:
            violations.append((shifted, key))
    return {"samples": samples, "violations": violations, "ok": not violations}


def _case_direction(ti, tj, I, J, mu):
    """Joint perturbation direction for a compatible tripartition pair."""
    i1, i2, i3 = ti.first, ti.middle, ti.last
    j1, j2, j3 = tj.first, tj.middle, tj.last
    shared = I & J
    out = [Fraction(0)] * len(mu)

    def assign(part, factor):
        for p in part:
            out[p] = factor * mu[p]

    if shared == (i1 & j1) | (i2 & j2) | (i3 & j3):
        assign(i2 | j2, Fraction(1))
        assign(i3 | j3, Fraction(2))
    elif shared == (i1 & j1) | (i2 & j1) | (i3 & j1) | (i3 & j2) | (i3 & j3):
        assign(i2, Fraction(1))
        assign(i3 & j1, Fraction(2))
        assign(j2, Fraction(3))
        assign(j3 | (i3 - J), Fraction(4))
    elif shared == (i1 & j1) | (i1 & j2) | (i1 & j3) | (i2 & j3) | (i3 & j3):
        assign(j2, Fraction(1))
        assign(j3 & i1, Fraction(2))
        assign(i2, Fraction(3))
        assign(i3 | (j3 - I), Fraction(4))
    else:
        raise AssertionError("compatible pair matches none of the three cases")
    return tuple(out)


def direction_probes(config: CurveConfig, s: StratumData):
    """Constructive perturbation directions reaching each predicted key.

    Returns triples (target_key, integral_mu, upsilon); moving the witness
    by a small positive multiple of upsilon lands in the target stratum.
    Used as the constructive cross-check of ``closure_of``.
    """
    mu, _, _ = _integral_witness(s)
    x_tris = _admissible(s.I, s.alpha, config.g_y)
    y_tris = _admissible(s.J, s.beta, config.g_x)
    probes = []
    if config.g_x > 0 and config.g_y > 0:
        for ti in x_tris:
            for tj in y_tris:
                if not pair_compatible(ti, tj, s.I, s.J):
                    continue
                key = make_key(
                    config,
                    _drop_on(s.alpha, ti.last),
                    ti.middle,
                    _drop_on(s.beta, tj.last),
                    tj.middle,
                )
                probes.append((key, mu, _case_direction(ti, tj, s.I, s.J, mu)))
    elif config.g_y > 0:
        for ti in x_tris:
            upsilon = [Fraction(0)] * config.delta
            for p in ti.middle:
                upsilon[p] = Fraction(mu[p])
            for p in ti.last:
                upsilon[p] = 2 * Fraction(mu[p])
            key = make_key(config, _drop_on(s.alpha, ti.last), ti.middle, s.beta, s.J)
            probes.append((key, mu, tuple(upsilon)))
    elif config.g_x > 0:
        for tj in y_tris:
            upsilon = [Fraction(0)] * config.delta
            for p in tj.middle:
                upsilon[p] = Fraction(mu[p])
            for p in tj.last:
                upsilon[p] = 2 * Fraction(mu[p])
            key = make_key(config, s.alpha, s.I, _drop_on(s.beta, tj.last), tj.middle)
            probes.append((key, mu, tuple(upsilon)))
    else:
        probes.append((stratum_key(config, s), mu, tuple(Fraction(0) for _ in mu)))
    return probes


def _key_label(config, key: StratumKey, dim: int) -> str:
    def locus(members):
        if members is None:
            return "*"
        return "{" + ",".join(config.labels[p] for p in sorted(members)) + "}"

    return (
        f"a={key.alpha} I={locus(key.I)} "
        f"b={key.beta} J={locus(key.J)} dim={dim}"
    )


def to_dot(poset: ClosurePoset) -> str:
    """DOT digraph of the covering relation, larger strata on top."""
    names = {k: f"s{i}" for i, k in enumerate(poset.keys)}
    lines = ["digraph strata {"]
    for k in poset.keys:
        label = _key_label(poset.config, k, poset.dims[k])
        lines.append(f'  {names[k]} [label="{label}"];')
    for a, b in poset.covering_edges():
        lines.append(f"  {names[a]} -> {names[b]};")
    lines.append("}")
    return "\n".join(lines) + "\n"
