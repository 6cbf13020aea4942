"""Lawrence polytopes and the complexes attached to an affine oriented matroid.

For an affine oriented matroid ``(M, f)`` with ground ``{1..n, f}`` the
complex Delta(M, f) lives on ``x1..xn, y1..yn``; ``f`` itself never
appears among its vertices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .exact import RationalMatrix
from .om import (
    OMError,
    OrientedMatroid,
    PreconditionError,
    SignVector,
    dual,
    minor,
    reorient,
    structural_flags,
)
from .sc import (
    ComplexError,
    SimplicialComplex,
    alexander_dual,
    reduced_homology,
)


@dataclass(frozen=True)
class AffineOM:
    om: OrientedMatroid
    f: str

    def __post_init__(self):
        if self.f not in self.om.ground:
            raise OMError(f"distinguished element {self.f!r} is not in the ground set")

    @property
    def elements(self) -> tuple[str, ...]:
        """Ground labels other than f, in order."""
        return tuple(e for e in self.om.ground if e != self.f)

    @property
    def n(self) -> int:
        return len(self.om.ground) - 1

    def vertex_labels(self) -> list[str]:
        return xy_labels(self.elements)

    @classmethod
    def from_matrix(cls, m, f: str | None = None, labels=None) -> "AffineOM":
        om = OrientedMatroid.from_matrix(m, labels)
        return cls(om, f if f is not None else om.ground[-1])


def xy_labels(elements) -> list[str]:
    return [f"x{e}" for e in elements] + [f"y{e}" for e in elements]


def lawrence_matrix(d) -> RationalMatrix:
    """The block matrix (D 0; I I) with columns x1..xn, y1..yn."""
    if not isinstance(d, RationalMatrix):
        d = RationalMatrix.from_rows(d)
    r, n = d.shape
    elems = d.labels if d.labels is not None else [str(i + 1) for i in range(n)]
    rows = []
    for i in range(r):
        rows.append(list(d.row(i)) + [0] * n)
    for i in range(n):
        rows.append([int(j == i) for j in range(n)] * 2)
    return RationalMatrix.from_rows(rows, xy_labels(elems), cols=2 * n)


def lawrence_om(m: OrientedMatroid) -> OrientedMatroid:
    """Lawrence oriented matroid: the dual of M* extended by an antiparallel copy of each element."""
    labels = xy_labels(m.ground)
    if m.realization is not None:
        return OrientedMatroid.from_matrix(lawrence_matrix(m.realization.with_labels(m.ground)), labels)
    return _lawrence_from_sign_vectors(m)


def _lawrence_from_sign_vectors(m: OrientedMatroid) -> OrientedMatroid:
    n = len(m.ground)
    labels = tuple(xy_labels(m.ground))
    circuits = set()
    for x in m.circuits:
        s = x.signs()
        circuits.add(SignVector.from_signs(labels, list(s) + [-v for v in s]))
    # circuits of M* u (-M*): each element of a cocircuit of M may sit on
    # either copy, plus the antiparallel pairs
    cocircuits = set()
    for y in m.cocircuits:
        s = y.signs()
        supp = [i for i in range(n) if s[i]]
        for choice in itertools.product((0, 1), repeat=len(supp)):
            v = [0] * (2 * n)
            for i, c in zip(supp, choice):
                if c:
                    v[n + i] = -s[i]
                else:
                    v[i] = s[i]
            cocircuits.add(SignVector.from_signs(labels, v))
    coloops = structural_flags(m).coloops
    for i, e in enumerate(m.ground):
        if e not in coloops:
            v = [0] * (2 * n)
            v[i] = v[n + i] = 1
            pair = SignVector.from_signs(labels, v)
            cocircuits.add(pair)
            cocircuits.add(-pair)
    return OrientedMatroid(labels, n + m.rank, circuits=circuits, cocircuits=cocircuits)


def lawrence_facets(m: OrientedMatroid) -> list[frozenset[str]]:
    """Facet vertex sets of Lambda(m): complements of supports of positive cocircuits."""
    lam = lawrence_om(m)
    ground = frozenset(lam.ground)
    supports = {y.support for y in lam.cocircuits if y.is_positive}
    return sorted((ground - s for s in supports), key=sorted)


@dataclass
class FacetCountReport:
    n: int
    l: int
    c: int
    predicted: int
    enumerated: int

    @property
    def ok(self) -> bool:
        return self.predicted == self.enumerated


def facet_count_check(m: OrientedMatroid) -> FacetCountReport:
    """n - l + 2c against a direct count; c counts cocircuits up to sign."""
    n = len(m.ground)
    l = len(structural_flags(m).coloops)
    c = len(m.cocircuits) // 2
    lam = lawrence_om(m)
    enumerated = len({y.support_mask for y in lam.cocircuits if y.is_positive})
    return FacetCountReport(n, l, c, n - l + 2 * c, enumerated)


def _require_not_loop(a: AffineOM, side: str = ""):
    if a.om.is_loop(a.f):
        raise PreconditionError(f"{side}{a.f!r} is a loop, so Delta is undefined")


def delta_complex(a: AffineOM) -> SimplicialComplex:
    _require_not_loop(a)
    elems = a.elements
    n = len(elems)
    verts = xy_labels(elems)
    gi = {e: a.om.index(e) for e in elems}
    fbit = 1 << a.om.index(a.f)
    full = (1 << (2 * n)) - 1
    facets = []
    for y in a.om.cocircuits:
        if not y.pos & fbit:
            continue
        removed = 0
        for k, e in enumerate(elems):
            if y.pos >> gi[e] & 1:
                removed |= 1 << k
            elif y.neg >> gi[e] & 1:
                removed |= 1 << (n + k)
        facets.append(full ^ removed)
    return SimplicialComplex(verts, facets)


def dual_affine(a: AffineOM) -> AffineOM:
    """(-f M*, f): the dual reoriented at f."""
    return AffineOM(reorient(dual(a.om), {a.f}), a.f)


def lifting_subdivision(a: AffineOM) -> SimplicialComplex:
    elems = a.elements
    gi = {e: a.om.index(e) for e in elems}
    fbit = 1 << a.om.index(a.f)
    cells = []
    for y in a.om.cocircuits:
        if y.is_positive and y.pos & fbit:
            cells.append(sum(1 << k for k, e in enumerate(elems) if not y.pos >> gi[e] & 1))
    if not cells:
        raise PreconditionError(f"{a.f!r} lies in no positive cocircuit; there is no lifting subdivision")
    return SimplicialComplex(elems, cells)


def is_triangulation(a: AffineOM) -> bool:
    """Uniformity of M minus f; sufficient for every cell of Delta to be a simplex."""
    _require_not_loop(a)
    return structural_flags(minor(a.om, {a.f}, ())).uniform


def cells_are_simplices(a: AffineOM) -> bool:
    """Direct test: every facet of Delta(M, f) has n + rank(M/f) vertices.

    This can hold while M minus f is not uniform, when every dependent
    hyperplane of M passes through f.
    """
    k = delta_complex(a)
    size = a.n + minor(a.om, (), {a.f}).rank
    return all(len(f) == size for f in k.facets)


@dataclass
class Theorem1Report:
    ok: bool
    lhs_facets: list
    rhs_facets: list


def theorem1_check(a: AffineOM) -> Theorem1Report:
    """Alexander dual of Delta(M, f) against Delta(-f M*, f)."""
    _require_not_loop(a, "in M, ")
    b = dual_affine(a)
    if b.om.is_loop(b.f):
        raise PreconditionError(f"{a.f!r} is a coloop of M, so it is a loop of the dual")
    lhs = alexander_dual(delta_complex(a))
    rhs = delta_complex(b)
    return Theorem1Report(lhs == rhs, lhs.sorted_facets(), rhs.sorted_facets())


FAMILIES = ("S", "R", "T", "U", "RS", "RT", "TU", "RTU")


@dataclass(frozen=True)
class FamilyFlags:
    contraction_uniform: bool
    deletion_uniform: bool
    realized: bool
    families: frozenset = field(default=frozenset())

    @classmethod
    def from_flags(cls, contraction_uniform: bool, deletion_uniform: bool, realized: bool) -> "FamilyFlags":
        fam = {"S"}
        if realized:
            fam |= {"R", "RS"}
        if deletion_uniform:
            fam.add("T")
        if contraction_uniform:
            fam.add("U")
        if realized and deletion_uniform:
            fam.add("RT")
        if deletion_uniform and contraction_uniform:
            fam.add("TU")
            if realized:
                fam.add("RTU")
        return cls(contraction_uniform, deletion_uniform, realized, frozenset(fam))

    def alexander_dual(self) -> "FamilyFlags":
        """Flags predicted for the dual complex: deletion and contraction trade places."""
        return FamilyFlags.from_flags(self.deletion_uniform, self.contraction_uniform, self.realized)


def classify_families(a: AffineOM) -> FamilyFlags:
    _require_not_loop(a)
    contraction_uniform = structural_flags(minor(a.om, (), {a.f})).uniform
    deletion_uniform = structural_flags(minor(a.om, {a.f}, ())).uniform
    return FamilyFlags.from_flags(contraction_uniform, deletion_uniform, a.om.realization is not None)


@dataclass
class SphereBallReport:
    predicted: str  # "ball" or "sphere"
    n: int
    d: int
    subdivision: list
    dual_facets: list
    dual_homology: str
    dual_homology_ok: bool
    subdivision_homology_ok: bool
    vacuous: bool = False
    homotopy_verified: bool = False
    note: str = "homology-level check only; contractibility and homotopy type are not certified"

    @property
    def ok(self) -> bool:
        return self.dual_homology_ok and self.subdivision_homology_ok


def sphere_ball_check(a: AffineOM) -> SphereBallReport:
    s = lifting_subdivision(a)
    md = dual(a.om)
    sphere = structural_flags(minor(md, {a.f}, ())).acyclic and structural_flags(md).totally_cyclic
    n = a.n
    d = minor(a.om, (), {a.f}).rank
    sv = alexander_dual(s)
    sub_h = reduced_homology(s)
    sub_ok = sub_h.is_sphere(d - 1) if sphere else sub_h.is_acyclic()
    if sv.is_void:
        # the subdivision is a single full cell; nothing to compute on the dual side
        return SphereBallReport("sphere" if sphere else "ball", n, d, s.sorted_facets(), [], "void",
                                not sphere, sub_ok, vacuous=True)
    h = reduced_homology(sv)
    ok = h.is_sphere(n - d - 2) if sphere else h.is_acyclic()
    return SphereBallReport("sphere" if sphere else "ball", n, d, s.sorted_facets(), sv.sorted_facets(),
                            str(h), ok, sub_ok)


def _pairs(k: SimplicialComplex) -> list[tuple[int, int]]:
    xs, ys = {}, {}
    for i, v in enumerate(k.vertices):
        if len(v) < 2 or v[0] not in "xy":
            raise ComplexError(f"vertex {v!r} is not of the form x<label> or y<label>")
        (xs if v[0] == "x" else ys)[v[1:]] = i
    if set(xs) != set(ys):
        raise ComplexError("x and y vertices do not pair up")
    return [(xs[e], ys[e]) for e in xs]


def full_simplices(k: SimplicialComplex) -> frozenset[frozenset[str]]:
    """Faces meeting every pair {x_i, y_i}."""
    pairs = _pairs(k)
    out = set()
    for f in k.facet_masks:
        options = []
        for xi, yi in pairs:
            opts = [m for m in (1 << xi, 1 << yi, (1 << xi) | (1 << yi)) if m & f == m]
            if not opts:
                break
            options.append(opts)
        else:
            for combo in itertools.product(*options):
                out.add(sum(combo))
    return frozenset(frozenset(k.labels(m)) for m in out)


def pair_order_key(label: str, elements) -> tuple:
    """Sort key putting x_i and y_i next to each other in ground order (x first)."""
    pos = {str(e): i for i, e in enumerate(elements)}
    return (pos.get(label[1:], len(pos)), label[0])
