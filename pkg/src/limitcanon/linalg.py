"""Exact linear algebra helpers: rational row reduction, integer kernels.

Everything works with ``fractions.Fraction`` (or int) entries; floating
point is never used.  Matrices are sequences of row tuples.  The sizes in
this package are tiny (ambient dimension at most 6 or 7), so the plain
O(n^3) algorithms are fine.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations


def rref(rows, ncols=None):
    """Reduced row echelon form.

    Returns ``(reduced_rows, pivot_columns)`` where ``reduced_rows`` drops
    zero rows and each pivot entry is 1.
    """
    mat = [[Fraction(x) for x in row] for row in rows]
    if ncols is None:
        ncols = len(mat[0]) if mat else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(mat)):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            continue
        mat[r], mat[pivot] = mat[pivot], mat[r]
        inv = mat[r][c]
        mat[r] = [x / inv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    reduced = [tuple(row) for row in mat[:r]]
    return reduced, pivots


def nullspace(rows, ncols):
    """Basis of {x : A x = 0} over Q, from the reduced echelon form."""
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        vec = [Fraction(0)] * ncols
        vec[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            vec[p] = -row[f]
        basis.append(tuple(vec))
    return basis


def det(rows):
    """Determinant by fraction Gaussian elimination."""
    n = len(rows)
    mat = [[Fraction(x) for x in row] for row in rows]
    sign = 1
    for c in range(n):
        pivot = None
        for i in range(c, n):
            if mat[i][c] != 0:
                pivot = i
                break
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            mat[c], mat[pivot] = mat[pivot], mat[c]
            sign = -sign
        for i in range(c + 1, n):
            if mat[i][c] != 0:
                f = mat[i][c] / mat[c][c]
                mat[i] = [a - f * b for a, b in zip(mat[i], mat[c])]
    result = Fraction(sign)
    for i in range(n):
        result *= mat[i][i]
    return result


def maximal_minors(rows, ncols):
    """All h x h minors of an h x n matrix, keyed by the column subset.

    Returns a list of ``(columns, value)`` with column subsets in
    lexicographic order.
    """
    h = len(rows)
    out = []
    for cols in combinations(range(ncols), h):
        sub = [[row[c] for c in cols] for row in rows]
        out.append((cols, det(sub)))
    return out


def _col_addmul(mat, u, j, j0, q):
    """column_j += q * column_j0 on both the working matrix and tracker."""
    for row in mat:
        row[j] += q * row[j0]
    for row in u:
        row[j] += q * row[j0]


def _col_swap(mat, u, j, j0):
    for row in mat:
        row[j], row[j0] = row[j0], row[j]
    for row in u:
        row[j], row[j0] = row[j0], row[j]


def integer_kernel(rows, ncols):
    """Basis of the integer kernel {x in Z^n : A x = 0} of an integer matrix.

    Column reduction with a unimodular tracker; the returned lattice is the
    full (saturated) kernel, which matters for the monomial consistency
    tests built on it.
    """
    m = len(rows)
    mat = [list(map(int, row)) for row in rows]
    tracker = [[1 if i == j else 0 for j in range(ncols)] for i in range(ncols)]
    lead = 0
    for r in range(m):
        if lead >= ncols:
            break
        while True:
            nz = [j for j in range(lead, ncols) if mat[r][j] != 0]
            if not nz:
                break
            if len(nz) == 1:
                if nz[0] != lead:
                    _col_swap(mat, tracker, nz[0], lead)
                lead += 1
                break
            j0 = min(nz, key=lambda j: (abs(mat[r][j]), j))
            for j in nz:
                if j == j0:
                    continue
                q = mat[r][j] // mat[r][j0]
                if q:
                    _col_addmul(mat, tracker, j, j0, -q)
    basis = []
    for j in range(lead, ncols):
        if all(mat[r][j] == 0 for r in range(m)):
            basis.append(tuple(tracker[i][j] for i in range(ncols)))
    return basis


def hnf_rows(rows):
    """Row-style Hermite normal form of the lattice spanned by ``rows``.

    Canonical: pivots positive, entries above each pivot reduced into
    [0, pivot).  Used to fix a deterministic basis for relation lattices.
    """
    work = [list(map(int, r)) for r in rows if any(r)]
    if not work:
        return []
    ncols = len(work[0])
    result = []
    col = 0
    while work and col < ncols:
        nz = [r for r in work if r[col] != 0]
        if not nz:
            col += 1
            continue
        while True:
            nz = [r for r in work if r[col] != 0]
            if len(nz) <= 1:
                break
            nz.sort(key=lambda r: abs(r[col]))
            base = nz[0]
            for r in nz[1:]:
                q = r[col] // base[col]
                for k in range(ncols):
                    r[k] -= q * base[k]
        pivot_row = next(r for r in work if r[col] != 0)
        work.remove(pivot_row)
        if pivot_row[col] < 0:
            pivot_row = [-x for x in pivot_row]
        result.append(pivot_row)
        col += 1
    # reduce entries above pivots
    for i in range(len(result) - 1, -1, -1):
        pcol = next(k for k in range(ncols) if result[i][k] != 0)
        p = result[i][pcol]
        for j in range(i):
            q = result[j][pcol] // p
            if q:
                for k in range(ncols):
                    result[j][k] -= q * result[i][k]
    return [tuple(r) for r in result]


def relation_lattice(vectors):
    """Canonical basis of {n : sum_i n_i * vectors[i] = 0} over Z."""
    if not vectors:
        return []
    dim = len(vectors[0])
    # rows of the constraint matrix = coordinates; columns = the vectors
    rows = [tuple(v[d] for v in vectors) for d in range(dim)]
    return hnf_rows(integer_kernel(rows, len(vectors)))


def power_product(values, exponents):
    """Exact product of values[i] ** exponents[i] over the rationals."""
    out = Fraction(1)
    for v, e in zip(values, exponents):
        if e:
            out *= Fraction(v) ** e
    return out


def monomial_system_solvable(characters, values, relation_characters=()):
    """Decide solvability of ``x^chi = value`` over an algebraically closed field.

    ``characters`` are integer exponent vectors of torus characters and
    ``values`` their prescribed nonzero rational values; the characters in
    ``relation_characters`` are constrained to the value 1 (they cut out the
    acting subtorus).  Over an algebraically closed field of characteristic
    zero the system has a solution iff every integer relation among all the
    characters forces the matching product of prescribed values to be 1.
    """
    chars = [tuple(c) for c in characters] + [tuple(c) for c in relation_characters]
    if not chars:
        return True
    k = len(characters)
    for rel in relation_lattice(chars):
        if power_product(values, rel[:k]) != 1:
            return False
    return True
