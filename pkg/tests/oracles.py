"""Slow, independent reference implementations used only by the tests."""

import itertools
from fractions import Fraction


def det_cofactor(rows):
    """Laplace expansion along the first row."""
    n = len(rows)
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(rows[0][0])
    total = Fraction(0)
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * Fraction(rows[0][j]) * det_cofactor(minor)
    return total


def rank_mod(rows, p=None):
    """Rank over Q (p=None) or over Z/p, by plain Gaussian elimination."""
    a = [[Fraction(x) if p is None else x % p for x in r] for r in rows]
    if not a:
        return 0
    ncols = len(a[0])
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(a)) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c] if p is None else pow(a[r][c], -1, p)
        for i in range(len(a)):
            if i != r and a[i][c] != 0:
                t = a[i][c] * inv
                a[i] = [x - t * y for x, y in zip(a[i], a[r])]
                if p is not None:
                    a[i] = [x % p for x in a[i]]
        r += 1
    return r


def _sign(x):
    return (x > 0) - (x < 0)


def cocircuit_signs(cols):
    """Cocircuits of the column vectors ``cols`` (full row rank), as sign tuples.

    Each hyperplane spanned by columns gives a normal vector through the
    generalized cross product (cofactors); the sign pattern of the columns
    against it is a cocircuit.
    """
    d = len(cols[0])
    n = len(cols)
    out = set()
    for s in itertools.combinations(range(n), d - 1):
        sub = [cols[i] for i in s]
        if d > 1 and rank_mod(sub) < d - 1:
            continue
        normal = []
        for k in range(d):
            m = [[v[j] for j in range(d) if j != k] for v in sub]
            normal.append((-1) ** k * det_cofactor(m))
        y = tuple(_sign(sum(a * b for a, b in zip(normal, c))) for c in cols)
        if any(y):
            out.add(y)
            out.add(tuple(-v for v in y))
    return out


def circuit_signs(cols):
    """Circuits as sign tuples: minimal dependent sets and their unique dependence."""
    n = len(cols)
    out = set()
    supports = []
    for size in range(1, n + 1):
        for t in itertools.combinations(range(n), size):
            if any(set(s) <= set(t) for s in supports):
                continue
            sub = [cols[i] for i in t]
            if rank_mod(sub) != size - 1:
                continue
            supports.append(t)
            # kernel vector of the |t| columns: solve with the last coefficient fixed
            mat = [list(r) for r in zip(*sub)]  # d x |t|
            lam = _kernel_vector(mat)
            v = [0] * n
            for i, c in zip(t, lam):
                v[i] = _sign(c)
            out.add(tuple(v))
            out.add(tuple(-x for x in v))
    return out


def _kernel_vector(mat):
    """A nonzero kernel vector of a matrix whose kernel is one-dimensional."""
    ncols = len(mat[0])
    for free in range(ncols):
        others = [j for j in range(ncols) if j != free]
        # find a square invertible system for the others
        for rows in itertools.combinations(range(len(mat)), len(others)):
            a = [[mat[r][j] for j in others] for r in rows]
            dt = det_cofactor(a) if others else Fraction(1)
            if dt == 0:
                continue
            b = [-Fraction(mat[r][free]) for r in rows]
            sol = []
            for k in range(len(others)):
                ak = [row[:k] + [b[i]] + row[k + 1:] for i, row in enumerate(a)]
                sol.append(det_cofactor(ak) / dt)
            v = [Fraction(0)] * ncols
            v[free] = Fraction(1)
            for j, x in zip(others, sol):
                v[j] = x
            if all(sum(Fraction(mat[r][j]) * v[j] for j in range(ncols)) == 0 for r in range(len(mat))):
                return v
    raise ValueError("no kernel vector found")


def powerset_faces(vertices, facets):
    fs = [frozenset(f) for f in facets]
    out = set()
    for size in range(len(vertices) + 1):
        for s in itertools.combinations(vertices, size):
            s = frozenset(s)
            if any(s <= f for f in fs):
                out.add(s)
    return out


def powerset_alexander_dual(vertices, facets):
    """Maximal members of {V - s : s not a face}, straight from the definition."""
    faces = powerset_faces(vertices, facets)
    v = frozenset(vertices)
    dual = set()
    for size in range(len(vertices) + 1):
        for s in itertools.combinations(vertices, size):
            s = frozenset(s)
            if s not in faces:
                dual.add(v - s)
    return {f for f in dual if not any(f < g for g in dual)}


def homology_ranks(vertices, facets, p=None):
    """Dimensions of reduced homology over Q or Z/p, indexed by degree from -1."""
    faces = powerset_faces(vertices, facets)
    order = {v: i for i, v in enumerate(vertices)}
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(tuple(sorted(f, key=order.get)))
    for k in by_dim:
        by_dim[k].sort(key=lambda t: [order[x] for x in t])
    top = max(by_dim)
    ranks = {}
    for k in range(0, top + 1):
        lower = {f: i for i, f in enumerate(by_dim[k - 1])}
        mat = [[0] * len(by_dim[k]) for _ in lower]
        for j, face in enumerate(by_dim[k]):
            for pos in range(len(face)):
                mat[lower[face[:pos] + face[pos + 1:]]][j] = (-1) ** pos
        ranks[k] = rank_mod(mat, p)
    out = {}
    for k in range(-1, top + 1):
        n = len(by_dim.get(k, []))
        out[k] = n - ranks.get(k, 0) - ranks.get(k + 1, 0)
    return out


def lawrence_facets_geometric(d_rows):
    """Facet vertex sets of conv(columns of (D 0; I I)) from supporting hyperplanes."""
    r = len(d_rows)
    n = len(d_rows[0]) if r else 0
    lam = [list(row) + [0] * n for row in d_rows]
    for i in range(n):
        lam.append([int(j == i) for j in range(n)] * 2)
    cols = [tuple(lam[i][j] for i in range(len(lam))) for j in range(2 * n)]
    facets = set()
    for y in cocircuit_signs(cols):
        if all(v >= 0 for v in y):
            facets.add(frozenset(j for j, v in enumerate(y) if v == 0))
    return facets
