"""Exact rational and integer linear algebra.

Everything here works over :class:`fractions.Fraction` and Python's
arbitrary precision ``int``; there is no floating point anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence

Rational = Fraction


class ShapeError(ValueError):
    pass


class DomainError(ValueError):
    pass


def to_rational(x) -> Fraction:
    """Parse an int, Fraction or ``"p/q"`` string."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise TypeError(f"not a number: {x!r}")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {x!r} as an exact rational")


class RationalMatrix:
    """Immutable dense matrix of Fractions with optional column labels."""

    __slots__ = ("rows", "cols", "_data", "labels")

    def __init__(self, rows: int, cols: int, entries: Iterable, labels: Sequence[str] | None = None):
        data = tuple(to_rational(x) for x in entries)
        if len(data) != rows * cols:
            raise ShapeError(f"{len(data)} entries for a {rows}x{cols} matrix")
        if labels is not None:
            labels = tuple(str(x) for x in labels)
            if len(labels) != cols:
                raise ShapeError(f"{len(labels)} labels for {cols} columns")
            if len(set(labels)) != cols:
                raise ShapeError("column labels must be distinct")
        self.rows = rows
        self.cols = cols
        self._data = data
        self.labels = labels

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], labels: Sequence[str] | None = None, cols: int | None = None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                cols = len(labels) if labels is not None else 0
            else:
                cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), cols, [x for r in rows for x in r], labels)

    @classmethod
    def identity(cls, n: int) -> "RationalMatrix":
        return cls(n, n, [int(i == j) for i in range(n) for j in range(n)])

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RationalMatrix":
        return cls(rows, cols, [0] * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self._data[i * self.cols + j]

    def row(self, i: int) -> tuple:
        return self._data[i * self.cols:(i + 1) * self.cols]

    def column(self, j: int) -> tuple:
        return tuple(self._data[i * self.cols + j] for i in range(self.rows))

    def tolist(self) -> list[list[Fraction]]:
        return [list(self.row(i)) for i in range(self.rows)]

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def is_integral(self) -> bool:
        return all(x.denominator == 1 for x in self._data)

    def with_labels(self, labels: Sequence[str] | None) -> "RationalMatrix":
        return RationalMatrix(self.rows, self.cols, self._data, labels)

    def transpose(self) -> "RationalMatrix":
        return RationalMatrix(self.cols, self.rows, [self[i, j] for j in range(self.cols) for i in range(self.rows)])

    T = property(transpose)

    def select_columns(self, idx: Sequence[int]) -> "RationalMatrix":
        idx = list(idx)
        labels = None if self.labels is None else [self.labels[j] for j in idx]
        return RationalMatrix(self.rows, len(idx), [self[i, j] for i in range(self.rows) for j in idx], labels)

    def select_rows(self, idx: Sequence[int]) -> "RationalMatrix":
        idx = list(idx)
        return RationalMatrix(len(idx), self.cols, [x for i in idx for x in self.row(i)], self.labels)

    def __matmul__(self, other: "RationalMatrix") -> "RationalMatrix":
        if self.cols != other.rows:
            raise ShapeError(f"cannot multiply {self.shape} by {other.shape}")
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for j in range(other.cols):
                out.append(sum((r[k] * other[k, j] for k in range(self.cols)), Fraction(0)))
        return RationalMatrix(self.rows, other.cols, out, other.labels)

    def apply(self, vec: Sequence) -> tuple:
        """Matrix times column vector."""
        if len(vec) != self.cols:
            raise ShapeError("vector length mismatch")
        return tuple(sum((a * b for a, b in zip(self.row(i), vec)), Fraction(0)) for i in range(self.rows))

    def __eq__(self, other):
        if not isinstance(other, RationalMatrix):
            return NotImplemented
        return (self.rows, self.cols, self._data) == (other.rows, other.cols, other._data)

    def __hash__(self):
        return hash((self.rows, self.cols, self._data))

    def __repr__(self):
        body = ", ".join("[" + ", ".join(_fmt(x) for x in self.row(i)) + "]" for i in range(self.rows))
        lab = "" if self.labels is None else f", labels={list(self.labels)}"
        return f"RationalMatrix([{body}]{lab})"

    def to_json_obj(self) -> dict:
        obj = {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[_json_entry(x) for x in self.row(i)] for i in range(self.rows)],
        }
        if self.labels is not None:
            obj["labels"] = list(self.labels)
        return obj

    @classmethod
    def from_json_obj(cls, obj: dict) -> "RationalMatrix":
        rows = obj["entries"]
        r = obj.get("rows", len(rows))
        c = obj.get("cols", len(rows[0]) if rows else len(obj.get("labels", [])))
        if len(rows) != r:
            raise ShapeError(f"declared {r} rows, found {len(rows)}")
        return cls.from_rows(rows, obj.get("labels"), cols=c)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())

    @classmethod
    def from_json(cls, text: str) -> "RationalMatrix":
        return cls.from_json_obj(json.loads(text))


def _fmt(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _json_entry(x: Fraction):
    return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def as_matrix(m) -> RationalMatrix:
    if isinstance(m, RationalMatrix):
        return m
    return RationalMatrix.from_rows(m)


def det(m) -> Fraction:
    """Exact determinant by Bareiss fraction-free elimination."""
    m = as_matrix(m)
    if m.rows != m.cols:
        raise ShapeError(f"determinant of a non-square {m.rows}x{m.cols} matrix")
    n = m.rows
    if n == 0:
        return Fraction(1)
    if m.is_integral:
        a = [[x.numerator for x in m.row(i)] for i in range(n)]
        return Fraction(_bareiss(a))
    # scale rows to integers, then undo
    scale = Fraction(1)
    a = []
    for i in range(n):
        r = m.row(i)
        den = 1
        for x in r:
            den = den * x.denominator // gcd(den, x.denominator)
        scale /= den
        a.append([(x * den).numerator for x in r])
    return _bareiss(a) * scale


def _bareiss(a: list[list[int]]) -> int:
    n = len(a)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        akk = a[k][k]
        rk = a[k]
        for i in range(k + 1, n):
            ri = a[i]
            aik = ri[k]
            for j in range(k + 1, n):
                ri[j] = (akk * ri[j] - aik * rk[j]) // prev
        prev = akk
    return sign * a[n - 1][n - 1]


def rref(m) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form and pivot columns."""
    m = as_matrix(m)
    a = m.tolist()
    pivots: list[int] = []
    r = 0
    for c in range(m.cols):
        p = next((i for i in range(r, m.rows) if a[i][c] != 0), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(m.rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
        if r == m.rows:
            break
    return a, pivots


def rank(m) -> int:
    return len(rref(m)[1])


def primitive_integer_vector(vec: Sequence) -> tuple[int, ...]:
    """Clear denominators, divide by the content, make the first nonzero entry positive."""
    vec = [to_rational(x) for x in vec]
    den = 1
    for x in vec:
        den = den * x.denominator // gcd(den, x.denominator)
    ints = [(x * den).numerator for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, x)
    if g == 0:
        return tuple(ints)
    lead = next(x for x in ints if x != 0)
    if lead < 0:
        g = -g
    return tuple(x // g for x in ints)


def kernel_basis(m) -> RationalMatrix:
    """Rows spanning the right kernel: integral, content 1, first nonzero entry positive.

    Column labels of ``m`` are carried over, so the result can serve as a
    Gale dual realization.
    """
    m = as_matrix(m)
    a, pivots = rref(m)
    free = [c for c in range(m.cols) if c not in set(pivots)]
    basis = []
    for fc in free:
        v = [Fraction(0)] * m.cols
        v[fc] = Fraction(1)
        for i, pc in enumerate(pivots):
            v[pc] = -a[i][fc]
        basis.append(primitive_integer_vector(v))
    return RationalMatrix.from_rows(basis, m.labels, cols=m.cols)


def row_basis(m) -> RationalMatrix:
    """Nonzero rows of the RREF: a full-row-rank matrix with the same row space."""
    m = as_matrix(m)
    a, pivots = rref(m)
    rows = [primitive_integer_vector(a[i]) for i in range(len(pivots))]
    return RationalMatrix.from_rows(rows, m.labels, cols=m.cols)


def left_kernel_basis(m) -> RationalMatrix:
    return kernel_basis(as_matrix(m).transpose())


# -- Smith normal form -----------------------------------------------------

def smith_normal_form(m) -> tuple[int, ...]:
    """Nonzero invariant factors d1 | d2 | ... of an integer matrix."""
    m = as_matrix(m)
    if not m.is_integral:
        raise DomainError("Smith normal form needs integer entries")
    rows = []
    for i in range(m.rows):
        r = {j: x.numerator for j, x in enumerate(m.row(i)) if x != 0}
        if r:
            rows.append(r)
    return invariant_factors_sparse(rows)


def invariant_factors_sparse(rows: list[dict[int, int]]) -> tuple[int, ...]:
    """Invariant factors of a sparse integer matrix given as a list of {col: value} rows.

    The rows are consumed. Pivots are taken on the entry of smallest
    magnitude; unit pivots (the common case for boundary matrices) eliminate
    a row and column in one pass.
    """
    rows = [r for r in rows if r]
    diag: list[int] = []
    # column -> set of row ids holding a nonzero there
    colmap: dict[int, set[int]] = {}
    live: dict[int, dict[int, int]] = {}
    for rid, r in enumerate(rows):
        live[rid] = r
        for c in r:
            colmap.setdefault(c, set()).add(rid)

    def set_entry(rid, c, v):
        r = live[rid]
        if v:
            r[c] = v
            colmap.setdefault(c, set()).add(rid)
        else:
            if c in r:
                del r[c]
            s = colmap.get(c)
            if s is not None:
                s.discard(rid)
                if not s:
                    del colmap[c]

    def drop_row(rid):
        for c in live.pop(rid):
            s = colmap[c]
            s.discard(rid)
            if not s:
                del colmap[c]

    while live:
        # pick a pivot of smallest magnitude, preferring short rows
        best = None
        for rid, r in live.items():
            for c, v in r.items():
                av = abs(v)
                key = (av, len(r) + len(colmap[c]))
                if best is None or key < best[0]:
                    best = (key, rid, c)
                    if av == 1 and key[1] <= 2:
                        break
            if best is not None and best[0][0] == 1 and best[0][1] <= 2:
                break
        if best is None:
            break
        _, prid, pc = best
        prow = live[prid]
        pv = prow[pc]
        # clear the pivot column using row operations
        remainder = False
        for rid in list(colmap[pc]):
            if rid == prid:
                continue
            r = live[rid]
            q = r[pc] // pv
            if q:
                for c, v in list(prow.items()):
                    set_entry(rid, c, r.get(c, 0) - q * v)
            if r.get(pc, 0):
                remainder = True
            if not live[rid]:
                drop_row(rid)
        if remainder:
            continue
        # clear the pivot row using column operations; column pc is now zero
        # outside the pivot row, so these only touch the pivot row itself
        for c, v in list(prow.items()):
            if c == pc:
                continue
            q = v // pv
            if q:
                set_entry(prid, c, v - q * pv)
        if len(live[prid]) == 1:
            diag.append(abs(pv))
            drop_row(prid)
        # otherwise a smaller entry appeared in the pivot row; loop again
    return _normalize_diagonal(diag)


def reduce_columns(columns: Iterable[dict[int, int]]) -> tuple[tuple[int, ...], set[int]]:
    """Invariant factors of a sparse integer matrix given column by column.

    Columns are reduced left to right against earlier pivots keyed by their
    largest row index, using unimodular column operations (extended gcd when
    pivots do not divide). If every pivot ends up a unit the factors are all
    1; otherwise the reduced columns go through the general routine.

    Also returns the rows carrying a unit pivot: a later boundary map may
    drop the corresponding columns, as they are integer combinations of
    earlier ones.
    """
    pivots: dict[int, dict[int, int]] = {}
    for col in columns:
        c = dict(col)
        while c:
            low = max(c)
            pc = pivots.get(low)
            if pc is None:
                pivots[low] = c
                break
            pv, v = pc[low], c[low]
            if v % pv == 0:
                q = v // pv
                for r, x in pc.items():
                    y = c.get(r, 0) - q * x
                    if y:
                        c[r] = y
                    else:
                        c.pop(r, None)
                continue
            # replace (pc, c) by (a*pc + b*c, (v/g)*pc - (pv/g)*c)
            g, a, b = _xgcd(pv, v)
            keys = set(pc) | set(c)
            new_p, new_c = {}, {}
            for r in keys:
                x, y = pc.get(r, 0), c.get(r, 0)
                u = a * x + b * y
                w = (v // g) * x - (pv // g) * y
                if u:
                    new_p[r] = u
                if w:
                    new_c[r] = w
            pivots[low] = new_p
            c = new_c
    units = {r for r, c in pivots.items() if abs(c[r]) == 1}
    if len(units) == len(pivots):
        return (1,) * len(pivots), units
    # transpose the echelon columns into rows for the general routine
    rows: dict[int, dict[int, int]] = {}
    for j, c in enumerate(pivots.values()):
        for r, x in c.items():
            rows.setdefault(r, {})[j] = x
    return invariant_factors_sparse(list(rows.values())), units


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with a*x + b*y = g = gcd(a, b) > 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        a, x0, y0 = -a, -x0, -y0
    return a, x0, y0


def _normalize_diagonal(diag: list[int]) -> tuple[int, ...]:
    """Turn an arbitrary positive diagonal into the divisibility chain."""
    d = sorted(x for x in diag if x)
    if all(x == 1 for x in d):
        return tuple(d)
    n = len(d)
    for i in range(n):
        for j in range(i + 1, n):
            a, b = d[i], d[j]
            g = gcd(a, b)
            d[i], d[j] = g, a // g * b
    return tuple(d)
