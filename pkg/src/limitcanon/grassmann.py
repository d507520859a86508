"""Exact torus-orbit-closure combinatorics in small Grassmannians.

A subspace V of k^n with all Pluecker coordinates nonzero has a torus orbit
whose closure decomposes into orbits of the degenerate subspaces

    V_T = k_first + (k_middle  intersect  (V + k_last))

over ordered tripartitions T = (first, middle, last) of the coordinate set
with |first| < dim V <= n - |last|.  Orbits are identified here by
*fingerprints*: the Pluecker support pattern together with the values of a
canonical basis of torus-invariant ratio monomials (the relation lattice of
the support's exponent differences).  Fingerprint equality decides orbit
equality over an algebraically closed field, while membership questions are
decided by an integer-lattice consistency test on the prescribed ratios
(the ratio system is solvable over an algebraically closed extension iff
every integer relation among the exponent vectors forces the matching
product of ratios to be 1); no root extraction is ever attempted, and
everything stays in exact rational arithmetic.

The two-factor version couples subspaces V in k^I and W in k^J along the
subtorus  {(s, t) : s_i^tau t_j^lam = s_j^tau t_i^lam for i, j in I cap J}
with lam, tau positive coprime integers (the stratum pipeline orientation
is lam = alpha_tilde, tau = beta_tilde); a pair of tripartitions must in
addition satisfy the two implications of ``tripartitions.pair_compatible``.

Everything is desk scale: ambient size at most 6, dimension at most 4.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product

from .linalg import (
    hnf_rows,
    maximal_minors,
    monomial_system_solvable,
    nullspace,
    power_product,
    relation_lattice,
    rref,
)
from .tripartitions import Tripartition, pair_compatible, tripartitions

AMBIENT_MAX = 6
DIM_MAX = 4


def _desk_guard(n: int, h: int):
    if n > AMBIENT_MAX or h > DIM_MAX:
        raise ValueError(
            f"desk-scale guard: ambient {n} > {AMBIENT_MAX} or dimension {h} > {DIM_MAX}"
        )


class Subspace:
    """Exact rational subspace of k^n, canonicalized to row echelon form."""

    def __init__(self, basis, ambient: int | None = None):
        rows = [tuple(Fraction(x) for x in row) for row in basis]
        if rows:
            n = len(rows[0])
            if any(len(r) != n for r in rows):
                raise ValueError("basis rows must have equal length")
        else:
            if ambient is None:
                raise ValueError("an empty basis needs an explicit ambient size")
            n = ambient
        if ambient is not None and ambient != n:
            raise ValueError("ambient size does not match the rows")
        reduced, pivots = rref(rows, n)
        if rows and len(reduced) != len(rows):
            raise ValueError("basis must be linearly independent")
        self.ambient = n
        self.rows = tuple(reduced)

    @property
    def dim(self) -> int:
        return len(self.rows)

    def __eq__(self, other):
        return (
            isinstance(other, Subspace)
            and self.ambient == other.ambient
            and self.rows == other.rows
        )

    def __hash__(self):
        return hash((self.ambient, self.rows))

    def __repr__(self):
        return f"Subspace(dim={self.dim}, ambient={self.ambient})"


@dataclass(frozen=True)
class PlueckerVector:
    """Maximal minors in lexicographic column-subset order, first nonzero 1."""

    ambient: int
    dim: int
    coords: tuple[Fraction, ...]

    def subsets(self):
        return list(combinations(range(self.ambient), self.dim))

    def coord(self, cols) -> Fraction:
        return dict(zip(self.subsets(), self.coords))[tuple(cols)]

    def support(self):
        return tuple(b for b, c in zip(self.subsets(), self.coords) if c != 0)


@dataclass(frozen=True)
class OnePSG:
    """One-parameter subgroup r -> (scalars_i * r^exponents_i)."""

    exponents: tuple[int, ...]
    scalars: tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.exponents) != len(self.scalars):
            raise ValueError("exponents and scalars must have equal length")
        if any(s == 0 for s in self.scalars):
            raise ValueError("scalars must be nonzero")


@dataclass(frozen=True)
class OrbitFingerprint:
    support: tuple
    invariants: tuple


@dataclass(frozen=True)
class PairFingerprint:
    support_v: tuple
    support_w: tuple
    invariants: tuple


def pluecker(V: Subspace) -> PlueckerVector:
    """Pluecker coordinates of the canonical basis, normalized projectively."""
    _desk_guard(V.ambient, V.dim)
    if V.dim == 0:
        return PlueckerVector(V.ambient, 0, (Fraction(1),))
    minors = maximal_minors(V.rows, V.ambient)
    values = [v for _, v in minors]
    scale = next(v for v in values if v != 0)
    return PlueckerVector(V.ambient, V.dim, tuple(v / scale for v in values))


def _units(n, positions):
    out = []
    for p in sorted(positions):
        row = [Fraction(0)] * n
        row[p] = Fraction(1)
        out.append(tuple(row))
    return out


def tripartition_degenerate(V: Subspace, tri: Tripartition) -> Subspace:
    """The subspace k_first + (k_middle intersect (V + k_last)).

    Outside the qualifying range the dimension may differ from dim V; the
    result is returned as computed, never adjusted.
    """
    n = V.ambient
    if tri.ambient != frozenset(range(n)):
        raise ValueError("tripartition must cover the ambient index set")
    extended = list(V.rows) + _units(n, tri.last)
    big, _ = rref(extended, n)
    outside = sorted(frozenset(range(n)) - tri.middle)
    if big and outside:
        constraint = [[row[c] for row in big] for c in outside]
        coeffs = nullspace(constraint, len(big))
    elif big:
        coeffs = nullspace([[Fraction(0)] * len(big)], len(big))
    else:
        coeffs = []
    middle_part = []
    for y in coeffs:
        vec = [Fraction(0)] * n
        for cy, row in zip(y, big):
            if cy:
                for k in range(n):
                    vec[k] += cy * row[k]
        middle_part.append(tuple(vec))
    gens = _units(n, tri.first) + middle_part
    reduced, _ = rref(gens, n)
    return Subspace(reduced, ambient=n)


def limit_pluecker(V: Subspace, psg: OnePSG) -> PlueckerVector:
    """Pluecker coordinates of the limit of psg(r) . V as r goes to 0."""
    pv = pluecker(V)
    if len(psg.exponents) != V.ambient:
        raise ValueError("one-parameter subgroup size must match the ambient")
    subsets = pv.subsets()
    weights = [sum(psg.exponents[i] for i in b) for b in subsets]
    live = [w for w, c in zip(weights, pv.coords) if c != 0]
    floor = min(live)
    out = []
    for b, w, c in zip(subsets, weights, pv.coords):
        if c != 0 and w == floor:
            out.append(c * power_product(psg.scalars, [1 if i in b else 0 for i in range(V.ambient)]))
        else:
            out.append(Fraction(0))
    scale = next(v for v in out if v != 0)
    return PlueckerVector(V.ambient, V.dim, tuple(v / scale for v in out))


def psg_for_tripartition(tri: Tripartition, n: int) -> OnePSG:
    """The standard degeneration direction: -1 on first, 0 on middle, 1 on last."""
    exps = [0] * n
    for p in tri.first:
        exps[p] = -1
    for p in tri.last:
        exps[p] = 1
    return OnePSG(tuple(exps), tuple(Fraction(1) for _ in range(n)))


def _vec(cols, n):
    return tuple(1 if i in cols else 0 for i in range(n))


def orbit_fingerprint(pv: PlueckerVector) -> OrbitFingerprint:
    """Support pattern plus canonical torus-invariant cross-ratios."""
    supp = pv.support()
    base = supp[0]
    n = pv.ambient
    chars = []
    values = []
    base_val = pv.coord(base)
    for b in supp[1:]:
        chars.append(tuple(x - y for x, y in zip(_vec(b, n), _vec(base, n))))
        values.append(pv.coord(b) / base_val)
    invariants = tuple(
        power_product(values, rel) for rel in relation_lattice(chars)
    )
    return OrbitFingerprint(supp, invariants)


def _require_general_position(pv: PlueckerVector):
    if any(c == 0 for c in pv.coords):
        raise ValueError("all Pluecker coordinates must be nonzero")


def closure_orbit_set(V: Subspace):
    """Fingerprints of every orbit in the closure of the torus orbit of V."""
    _desk_guard(V.ambient, V.dim)
    pv = pluecker(V)
    _require_general_position(pv)
    h, n = V.dim, V.ambient
    out = set()
    for tri in tripartitions(range(n)):
        if len(tri.first) < h <= n - len(tri.last):
            out.add(orbit_fingerprint(pluecker(tripartition_degenerate(V, tri))))
    return frozenset(out)


def _interval_pattern(supp, n, h):
    lower = frozenset.intersection(*(frozenset(b) for b in supp))
    upper = frozenset.union(*(frozenset(b) for b in supp))
    expected = [
        b for b in combinations(range(n), h) if lower <= frozenset(b) <= upper
    ]
    return set(supp) == set(expected), lower, frozenset(range(n)) - upper


def in_closure(W: Subspace, V: Subspace) -> bool:
    """Exact membership of W in the closure of the torus orbit of V."""
    if W.ambient != V.ambient or W.dim != V.dim:
        raise ValueError("subspaces must share ambient and dimension")
    pv = pluecker(V)
    _require_general_position(pv)
    qw = pluecker(W)
    supp = qw.support()
    ok, _, _ = _interval_pattern(supp, W.ambient, W.dim)
    if not ok:
        return False
    base = supp[0]
    n = W.ambient
    chars, values = [], []
    for b in supp[1:]:
        chars.append(tuple(x - y for x, y in zip(_vec(b, n), _vec(base, n))))
        values.append((qw.coord(b) * pv.coord(base)) / (pv.coord(b) * qw.coord(base)))
    return monomial_system_solvable(chars, values)


def brute_force_closure_fingerprints(V: Subspace, bound: int = 3):
    """Fingerprints of limits of V under every 1-PSG with |exponent| <= bound.

    All scalars are 1: the limit point's surviving ratios are those of V, so
    the fingerprint depends only on the minimizing support, which is what the
    enumeration collects before fingerprinting.
    """
    _desk_guard(V.ambient, V.dim)
    pv = pluecker(V)
    subsets = pv.subsets()
    supports = set()
    for exps in product(range(-bound, bound + 1), repeat=V.ambient):
        weights = [sum(exps[i] for i in b) for b in subsets]
        live = [w for w, c in zip(weights, pv.coords) if c != 0]
        floor = min(live)
        supports.add(
            tuple(
                b
                for b, w, c in zip(subsets, weights, pv.coords)
                if c != 0 and w == floor
            )
        )
    out = set()
    for supp in supports:
        masked = tuple(c if b in supp else Fraction(0) for b, c in zip(subsets, pv.coords))
        out.add(orbit_fingerprint(PlueckerVector(V.ambient, V.dim, masked)))
    return frozenset(out)


def satisfies_orbit_quadrics(point: PlueckerVector, reference: PlueckerVector) -> bool:
    """Check the binomial orbit-closure equations of `reference` on `point`:
    ref_{b1} ref_{b2} p_{b3} p_{b4} = ref_{b3} ref_{b4} p_{b1} p_{b2}
    whenever b1 + b2 = b3 + b4 as exponent vectors."""
    subsets = reference.subsets()
    n = reference.ambient
    by_sum = {}
    for b1, b2 in combinations(range(len(subsets)), 2):
        key = tuple(x + y for x, y in zip(_vec(subsets[b1], n), _vec(subsets[b2], n)))
        by_sum.setdefault(key, []).append((b1, b2))
    for pairs in by_sum.values():
        for (a1, a2), (a3, a4) in combinations(pairs, 2):
            lhs = reference.coords[a1] * reference.coords[a2] * point.coords[a3] * point.coords[a4]
            rhs = reference.coords[a3] * reference.coords[a4] * point.coords[a1] * point.coords[a2]
            if lhs != rhs:
                return False
    return True


# ---------------------------------------------------------------------------
# paired orbits


def _pair_spaces(I, J):
    I, J = tuple(I), tuple(J)
    if len(set(I)) != len(I) or len(set(J)) != len(J):
        raise ValueError("index labels must be distinct")
    shared = sorted(set(I) & set(J))
    pos_i = {l: k for k, l in enumerate(I)}
    pos_j = {l: k for k, l in enumerate(J)}
    return I, J, shared, pos_i, pos_j


def _torus_lattice(lam, tau, I, J, shared, pos_i, pos_j):
    """Generators of the character lattice cutting out the coupling torus."""
    ni, nj = len(I), len(J)
    gens = []
    if len(shared) >= 2:
        l0 = shared[0]
        for l in shared[1:]:
            row = [0] * (ni + nj)
            row[pos_i[l]] += tau
            row[pos_i[l0]] -= tau
            row[ni + pos_j[l]] -= lam
            row[ni + pos_j[l0]] += lam
            gens.append(tuple(row))
    return gens


def _pair_fingerprint_from(pv, qw, lam, tau, I, J, shared, pos_i, pos_j):
    ni, nj = len(I), len(J)
    supp_v, supp_w = pv.support(), qw.support()
    chars, values = [], []
    b0, c0 = supp_v[0], supp_w[0]
    for b in supp_v[1:]:
        row = [0] * (ni + nj)
        for i in b:
            row[i] += 1
        for i in b0:
            row[i] -= 1
        chars.append(tuple(row))
        values.append(pv.coord(b) / pv.coord(b0))
    for c in supp_w[1:]:
        row = [0] * (ni + nj)
        for j in c:
            row[ni + j] += 1
        for j in c0:
            row[ni + j] -= 1
        chars.append(tuple(row))
        values.append(qw.coord(c) / qw.coord(c0))
    torus = _torus_lattice(lam, tau, I, J, shared, pos_i, pos_j)
    stacked = chars + torus
    k = len(chars)
    if stacked:
        projections = [rel[:k] for rel in relation_lattice(stacked)]
        basis = hnf_rows(projections)
    else:
        basis = []
    invariants = tuple(power_product(values, rel) for rel in basis)
    return PairFingerprint(supp_v, supp_w, invariants)


def _check_pair_args(V, W, alpha_tilde, beta_tilde, I, J):
    if len(I) != V.ambient or len(J) != W.ambient:
        raise ValueError("label tuples must match the ambient sizes")
    if alpha_tilde < 1 or beta_tilde < 1:
        raise ValueError("the coupling exponents must be positive integers")
    _desk_guard(V.ambient, V.dim)
    _desk_guard(W.ambient, W.dim)


def _labelled(tri: Tripartition, labels):
    return Tripartition(
        frozenset(labels[p] for p in tri.first),
        frozenset(labels[p] for p in tri.middle),
        frozenset(labels[p] for p in tri.last),
    )


def pair_closure_orbit_set(V: Subspace, W: Subspace, alpha_tilde: int, beta_tilde: int, I, J):
    """Fingerprints of all orbit pairs in the closure of the coupled orbit."""
    _check_pair_args(V, W, alpha_tilde, beta_tilde, I, J)
    lam, tau = alpha_tilde, beta_tilde
    I, J, shared, pos_i, pos_j = _pair_spaces(I, J)
    pv, qw = pluecker(V), pluecker(W)
    _require_general_position(pv)
    _require_general_position(qw)
    h1, h2 = V.dim, W.dim
    out = set()
    for ti in tripartitions(range(V.ambient)):
        if not (len(ti.first) < h1 <= V.ambient - len(ti.last)):
            continue
        for tj in tripartitions(range(W.ambient)):
            if not (len(tj.first) < h2 <= W.ambient - len(tj.last)):
                continue
            if not pair_compatible(_labelled(ti, I), _labelled(tj, J), set(I), set(J)):
                continue
            vd = tripartition_degenerate(V, ti)
            wd = tripartition_degenerate(W, tj)
            out.add(
                _pair_fingerprint_from(
                    pluecker(vd), pluecker(wd), lam, tau, I, J, shared, pos_i, pos_j
                )
            )
    return frozenset(out)


def _nu_parts(supp, n):
    lower = frozenset.intersection(*(frozenset(b) for b in supp))
    upper = frozenset.union(*(frozenset(b) for b in supp))
    return lower, frozenset(range(n)) - upper


def in_pair_closure(nu, reference, alpha_tilde: int, beta_tilde: int, I, J) -> bool:
    """Membership of the pair nu = (W1, W2) in the coupled orbit closure of
    reference = (V1, V2)."""
    W1, W2 = nu
    V1, V2 = reference
    _check_pair_args(V1, V2, alpha_tilde, beta_tilde, I, J)
    if W1.ambient != V1.ambient or W2.ambient != V2.ambient:
        raise ValueError("ambient sizes must match")
    if W1.dim != V1.dim or W2.dim != V2.dim:
        raise ValueError("dimensions must match")
    lam, tau = alpha_tilde, beta_tilde
    I, J, shared, pos_i, pos_j = _pair_spaces(I, J)
    pv1, pv2 = pluecker(V1), pluecker(V2)
    _require_general_position(pv1)
    _require_general_position(pv2)
    q1, q2 = pluecker(W1), pluecker(W2)
    ok1, i_low, i_high = _interval_pattern(q1.support(), W1.ambient, W1.dim)
    ok2, j_low, j_high = _interval_pattern(q2.support(), W2.ambient, W2.dim)
    if not ok1 or not ok2:
        return False
    tri_i = _labelled(
        Tripartition(i_low, frozenset(range(W1.ambient)) - i_low - i_high, i_high), I
    )
    tri_j = _labelled(
        Tripartition(j_low, frozenset(range(W2.ambient)) - j_low - j_high, j_high), J
    )
    if not pair_compatible(tri_i, tri_j, set(I), set(J)):
        return False
    ni, nj = len(I), len(J)
    chars, values = [], []
    supp1, supp2 = q1.support(), q2.support()
    b0, c0 = supp1[0], supp2[0]
    for b in supp1[1:]:
        row = [0] * (ni + nj)
        for i in b:
            row[i] += 1
        for i in b0:
            row[i] -= 1
        chars.append(tuple(row))
        values.append((q1.coord(b) * pv1.coord(b0)) / (pv1.coord(b) * q1.coord(b0)))
    for c in supp2[1:]:
        row = [0] * (ni + nj)
        for j in c:
            row[ni + j] += 1
        for j in c0:
            row[ni + j] -= 1
        chars.append(tuple(row))
        values.append((q2.coord(c) * pv2.coord(c0)) / (pv2.coord(c) * q2.coord(c0)))
    middle_shared = sorted(
        (set(tri_i.middle) & set(tri_j.middle)) & set(shared)
    )
    torus = _torus_lattice(lam, tau, I, J, middle_shared, pos_i, pos_j)
    return monomial_system_solvable(chars, values, torus)


def _pair_recipe_cochar(supp_v, supp_w, lam, tau, I, J, nV, nW):
    """A coupling 1-PSG whose limit of the reference pair has the given
    supports; follows the three-case construction on the support parts."""
    i_low, i_high = _nu_parts(supp_v, nV)
    j_low, j_high = _nu_parts(supp_w, nW)
    i_mid = frozenset(range(nV)) - i_low - i_high
    j_mid = frozenset(range(nW)) - j_low - j_high
    lab = lambda part, labels: frozenset(labels[p] for p in part)
    I1, I2, I3 = lab(i_low, I), lab(i_mid, I), lab(i_high, I)
    J1, J2, J3 = lab(j_low, J), lab(j_mid, J), lab(j_high, J)
    shared = set(I) & set(J)
    u = {l: 0 for l in I}
    v = {l: 0 for l in J}
    for l in I1 - shared:
        u[l] = -1
    for l in I3 - shared:
        u[l] = 1
    for l in J1 - shared:
        v[l] = -1
    for l in J3 - shared:
        v[l] = 1
    if shared == (I1 & J1) | (I2 & J2) | (I3 & J3):
        for l in I1 & J1:
            u[l], v[l] = -lam, -tau
        for l in I3 & J3:
            u[l], v[l] = lam, tau
    elif shared == (I1 & J1) | (I2 & J1) | (I3 & J1) | (I3 & J2) | (I3 & J3):
        for l in I1 & J1:
            u[l], v[l] = -lam, -3 * tau
        for l in I2 & J1:
            u[l], v[l] = 0, -2 * tau
        for l in I3 & J1:
            u[l], v[l] = lam, -tau
        for l in I3 & J2:
            u[l], v[l] = 2 * lam, 0
        for l in I3 & J3:
            u[l], v[l] = 3 * lam, tau
    elif shared == (I1 & J1) | (I1 & J2) | (I1 & J3) | (I2 & J3) | (I3 & J3):
        for l in J1 & I1:
            v[l], u[l] = -tau, -3 * lam
        for l in J2 & I1:
            v[l], u[l] = 0, -2 * lam
        for l in J3 & I1:
            v[l], u[l] = tau, -lam
        for l in J3 & I2:
            v[l], u[l] = 2 * tau, 0
        for l in J3 & I3:
            v[l], u[l] = 3 * tau, lam
    else:
        raise AssertionError("support pair matches none of the coupling cases")
    return (
        tuple(u[l] for l in I),
        tuple(v[l] for l in J),
    )


def _limit_support(pv, exps):
    subsets = pv.subsets()
    weights = [sum(exps[i] for i in b) for b in subsets]
    live = [w for w, c in zip(weights, pv.coords) if c != 0]
    floor = min(live)
    return tuple(
        b for b, w, c in zip(subsets, weights, pv.coords) if c != 0 and w == floor
    )


def pair_brute_force_fingerprints(
    V: Subspace, W: Subspace, alpha_tilde: int, beta_tilde: int, I, J, include_recipes=True
):
    """Fingerprints of limits of (V, W) under a family of coupling 1-PSGs.

    The sampled exponent pairs satisfy the coupling lattice condition
    exactly; the construction-recipe directions for every qualifying
    tripartition pair are included so that every predicted boundary orbit is
    reached by at least one sample.
    """
    _check_pair_args(V, W, alpha_tilde, beta_tilde, I, J)
    lam, tau = alpha_tilde, beta_tilde
    I, J, shared, pos_i, pos_j = _pair_spaces(I, J)
    pv, qw = pluecker(V), pluecker(W)
    _require_general_position(pv)
    _require_general_position(qw)
    ni, nj = len(I), len(J)
    free_i = [k for k, l in enumerate(I) if l not in shared]
    free_j = [k for k, l in enumerate(J) if l not in shared]
    support_pairs = set()

    def register(uexps, vexps):
        support_pairs.add((_limit_support(pv, uexps), _limit_support(qw, vexps)))

    base_a = range(-3 * lam, 3 * lam + 1)
    base_b = range(-3 * tau, 3 * tau + 1)
    k_range = range(-4, 5)
    free_range = range(-2, 3)
    if shared:
        extras = shared[1:]
        for a in base_a:
            for b in base_b:
                for ks in product(k_range, repeat=len(extras)):
                    u = [0] * ni
                    v = [0] * nj
                    u[pos_i[shared[0]]] = a
                    v[pos_j[shared[0]]] = b
                    for l, k in zip(extras, ks):
                        u[pos_i[l]] = a + lam * k
                        v[pos_j[l]] = b + tau * k
                    for uf in product(free_range, repeat=len(free_i)):
                        for k, val in zip(free_i, uf):
                            u[k] = val
                        for vf in product(free_range, repeat=len(free_j)):
                            for k, val in zip(free_j, vf):
                                v[k] = val
                            register(tuple(u), tuple(v))
    else:
        for uexps in product(free_range, repeat=ni):
            for vexps in product(free_range, repeat=nj):
                register(uexps, vexps)

    if include_recipes:
        h1, h2 = V.dim, W.dim
        for ti in tripartitions(range(ni)):
            if not (len(ti.first) < h1 <= ni - len(ti.last)):
                continue
            for tj in tripartitions(range(nj)):
                if not (len(tj.first) < h2 <= nj - len(tj.last)):
                    continue
                if not pair_compatible(_labelled(ti, I), _labelled(tj, J), set(I), set(J)):
                    continue
                sv = pluecker(tripartition_degenerate(V, ti)).support()
                sw = pluecker(tripartition_degenerate(W, tj)).support()
                u, v = _pair_recipe_cochar(sv, sw, lam, tau, I, J, ni, nj)
                register(u, v)

    subsets_v, subsets_w = pv.subsets(), qw.subsets()
    out = set()
    for supp_v, supp_w in support_pairs:
        masked_v = tuple(
            c if b in supp_v else Fraction(0) for b, c in zip(subsets_v, pv.coords)
        )
        masked_w = tuple(
            c if b in supp_w else Fraction(0) for b, c in zip(subsets_w, qw.coords)
        )
        out.add(
            _pair_fingerprint_from(
                PlueckerVector(ni, V.dim, masked_v),
                PlueckerVector(nj, W.dim, masked_w),
                lam,
                tau,
                I,
                J,
                shared,
                pos_i,
                pos_j,
            )
        )
    return frozenset(out)
