"""Simplicial complexes, Alexander duals, Stanley-Reisner generators and
integral reduced (co)homology.

Faces are bitmasks over the ordered vertex list. Two degenerate complexes
are kept apart: the *void* complex has no faces at all, the *empty* complex
``{∅}`` has only the empty face.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

from .exact import DomainError, reduce_columns


class ComplexError(ValueError):
    pass


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _maximal(masks: Iterable[int]) -> frozenset[int]:
    ms = sorted(set(masks), key=lambda m: -bin(m).count("1"))
    keep: list[int] = []
    for m in ms:
        if not any(m & k == m for k in keep):
            keep.append(m)
    return frozenset(keep)


class SimplicialComplex:
    """A complex on an ordered vertex set, stored by its facets."""

    __slots__ = ("vertices", "facet_masks", "_index", "_faces")

    def __init__(self, vertices: Sequence[str], facet_masks: Iterable[int]):
        self.vertices = tuple(vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ComplexError("vertex labels must be distinct")
        self._index = {v: i for i, v in enumerate(self.vertices)}
        full = (1 << len(self.vertices)) - 1
        masks = list(facet_masks)
        if any(m & ~full for m in masks):
            raise ComplexError("facet uses a vertex outside the vertex set")
        self.facet_masks = _maximal(masks)
        self._faces = None

    # -- construction helpers
    def mask(self, face: Iterable[str]) -> int:
        try:
            return sum(1 << self._index[v] for v in set(face))
        except KeyError as exc:
            raise ComplexError(f"unknown vertex {exc.args[0]!r}") from None

    def labels(self, mask: int) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in _bits(mask))

    @property
    def facets(self) -> frozenset[frozenset[str]]:
        return frozenset(frozenset(self.labels(m)) for m in self.facet_masks)

    def sorted_facets(self) -> list[tuple[str, ...]]:
        """Facets as label tuples, lexicographic in vertex order."""
        return [self.labels(m) for m in sorted(self.facet_masks, key=lambda m: _bits(m))]

    @property
    def kind(self) -> str:
        if not self.facet_masks:
            return "void"
        if self.facet_masks == {0}:
            return "has_empty_face_only"
        return "general"

    @property
    def is_void(self) -> bool:
        return not self.facet_masks

    @property
    def dim(self) -> int:
        if not self.facet_masks:
            raise ComplexError("the void complex has no dimension")
        return max(bin(m).count("1") for m in self.facet_masks) - 1

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    def contains_mask(self, mask: int) -> bool:
        return any(mask & f == mask for f in self.facet_masks)

    def __contains__(self, face) -> bool:
        return self.contains_mask(self.mask(face))

    def faces(self) -> frozenset[int]:
        """All faces (bitmasks), including the empty face unless void."""
        if self._faces is None:
            out: set[int] = set()
            for f in self.facet_masks:
                bits = _bits(f)
                if f in out:
                    continue
                for k in range(len(bits) + 1):
                    for combo in itertools.combinations(bits, k):
                        out.add(sum(1 << i for i in combo))
            self._faces = frozenset(out)
        return self._faces

    def f_vector(self) -> list[int]:
        """Face counts f_{-1}, f_0, ..., f_dim."""
        if self.is_void:
            return []
        counts = [0] * (self.dim + 2)
        for m in self.faces():
            counts[bin(m).count("1")] += 1
        return counts

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return set(self.vertices) == set(other.vertices) and self.facets == other.facets

    def __hash__(self):
        return hash((frozenset(self.vertices), self.facets))

    def __repr__(self):
        fs = ", ".join("{" + ",".join(f) + "}" for f in self.sorted_facets())
        return f"SimplicialComplex(vertices={list(self.vertices)}, facets=[{fs}])"

    def relabel(self, order: Sequence[str]) -> "SimplicialComplex":
        """Same complex with the vertex order changed."""
        if set(order) != set(self.vertices):
            raise ComplexError("relabel needs a permutation of the vertex set")
        return complex_from_facets(order, self.facets)

    def to_json_obj(self) -> dict:
        return {"vertices": list(self.vertices), "facets": [list(f) for f in self.sorted_facets()]}

    @classmethod
    def from_json_obj(cls, obj: dict) -> "SimplicialComplex":
        if "vertices" not in obj or "facets" not in obj:
            raise ComplexError("complex JSON needs 'vertices' and 'facets'")
        return complex_from_facets([str(v) for v in obj["vertices"]], [[str(v) for v in f] for f in obj["facets"]])

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def complex_from_facets(vertices: Sequence[str], faces: Iterable[Iterable[str]]) -> SimplicialComplex:
    vertices = tuple(str(v) for v in vertices)
    index = {v: i for i, v in enumerate(vertices)}
    masks = []
    for face in faces:
        m = 0
        for v in face:
            if v not in index:
                raise ComplexError(f"face uses unknown vertex {v!r}")
            m |= 1 << index[v]
        masks.append(m)
    return SimplicialComplex(vertices, masks)


def full_simplex(vertices: Sequence[str]) -> SimplicialComplex:
    return SimplicialComplex(vertices, [(1 << len(vertices)) - 1])


def simplex_boundary(vertices: Sequence[str]) -> SimplicialComplex:
    n = len(vertices)
    full = (1 << n) - 1
    return SimplicialComplex(vertices, [full ^ (1 << i) for i in range(n)])


# -- non-faces and duality ----------------------------------------------------

def minimal_nonfaces_masks(k: SimplicialComplex) -> frozenset[int]:
    """Level-by-level search: a candidate of size j is built from faces of size j-1
    all of whose subsets are faces; it is a minimal non-face iff no facet contains it."""
    if k.is_void:
        return frozenset({0})
    n = k.n_vertices
    facets = list(k.facet_masks)

    def is_face(m):
        for f in facets:
            if m & f == m:
                return True
        return False

    out = set()
    level = [()]  # faces of the current size as sorted index tuples
    level_set = {0}
    while level:
        candidates = []
        if level == [()]:
            candidates = [(i,) for i in range(n)]
        else:
            # join faces that share all but their last vertex
            by_prefix: dict[tuple, list[int]] = {}
            for t in level:
                by_prefix.setdefault(t[:-1], []).append(t[-1])
            for prefix, lasts in by_prefix.items():
                lasts.sort()
                for a, b in itertools.combinations(lasts, 2):
                    t = prefix + (a, b)
                    m = sum(1 << i for i in t)
                    # every subset obtained by dropping one vertex must be a face
                    if all((m ^ (1 << i)) in level_set for i in t[:-2]):
                        candidates.append(t)
        nxt, nxt_set = [], set()
        for t in candidates:
            m = sum(1 << i for i in t)
            if is_face(m):
                nxt.append(t)
                nxt_set.add(m)
            else:
                out.add(m)
        level, level_set = nxt, nxt_set
    return frozenset(out)


def minimal_nonfaces(k: SimplicialComplex) -> frozenset[frozenset[str]]:
    return frozenset(frozenset(k.labels(m)) for m in minimal_nonfaces_masks(k))


def alexander_dual(k: SimplicialComplex) -> SimplicialComplex:
    full = (1 << k.n_vertices) - 1
    return SimplicialComplex(k.vertices, [full ^ m for m in minimal_nonfaces_masks(k)])


def stanley_reisner(k: SimplicialComplex, key: Callable[[str], object] | None = None) -> list[str]:
    """Minimal non-faces spelled as squarefree monomials, e.g. ``"y1*x2"``.

    Variables within a monomial are ordered by ``key`` (default: vertex order);
    the list is sorted by degree, then lexicographically.
    """
    if key is None:
        pos = {v: i for i, v in enumerate(k.vertices)}
        key = pos.__getitem__
    monos = []
    for m in minimal_nonfaces_masks(k):
        vs = sorted(k.labels(m), key=key)
        monos.append((len(vs), [key(v) for v in vs], "*".join(vs) if vs else "1"))
    monos.sort(key=lambda t: (t[0], t[1]))
    return [t[2] for t in monos]


# -- homology -------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyProfile:
    """Reduced (co)homology in degrees -1..top: Betti numbers and torsion coefficients."""
    betti: dict = field(default_factory=dict)
    torsion: dict = field(default_factory=dict)
    top: int = -1
    cohomology: bool = False

    def group(self, i: int) -> tuple[int, tuple[int, ...]]:
        return self.betti.get(i, 0), tuple(self.torsion.get(i, ()))

    def is_acyclic(self) -> bool:
        return all(b == 0 for b in self.betti.values()) and not any(self.torsion.values())

    def is_sphere(self, dim: int) -> bool:
        """Homology of the ``dim``-sphere (dim >= -1)."""
        degrees = set(self.betti) | {dim}
        return all(self.group(i) == ((1, ()) if i == dim else (0, ())) for i in degrees)

    def euler(self) -> int:
        return sum((-1) ** (i % 2) * b for i, b in self.betti.items())

    def __str__(self):
        sym = "H~^" if self.cohomology else "H~_"
        parts = []
        for i in range(-1, self.top + 1):
            b, t = self.group(i)
            terms = ([f"Z^{b}"] if b > 1 else ["Z"] if b == 1 else []) + [f"Z/{d}" for d in t]
            if terms:
                parts.append(f"{sym}{i} = " + " + ".join(terms))
        return "; ".join(parts) if parts else "acyclic"


def _faces_by_size(k: SimplicialComplex) -> list[list[tuple[int, ...]]]:
    by = [[] for _ in range(k.dim + 2)]
    for m in k.faces():
        t = tuple(_bits(m))
        by[len(t)].append(t)
    for lst in by:
        lst.sort()
    return by


def _boundary_columns(lower: list[tuple], upper: list[tuple]) -> list[dict[int, int]]:
    """Boundary map upper -> lower, one sparse column per upper face."""
    index = {t: i for i, t in enumerate(lower)}
    cols = []
    for t in upper:
        c = {}
        for pos in range(len(t)):
            c[index[t[:pos] + t[pos + 1:]]] = -1 if pos % 2 else 1
        cols.append(c)
    return cols


def _transpose(cols: list[dict[int, int]], n_rows: int) -> list[dict[int, int]]:
    out: list[dict[int, int]] = [{} for _ in range(n_rows)]
    for j, c in enumerate(cols):
        for i, v in c.items():
            out[i][j] = v
    return out


def _boundary_factors(k: SimplicialComplex, transposed: bool) -> tuple[list[int], dict[int, tuple[int, ...]]]:
    """Face counts per size and invariant factors of each boundary map.

    ``factors[j]`` belongs to d_j : C_j -> C_{j-1}; with ``transposed`` the
    coboundary d_j^T is reduced instead (same factors, computed independently).
    Columns already known to be integer combinations of earlier ones are
    skipped (clearing), so maps are processed top-down for homology and
    bottom-up for cohomology.
    """
    by = _faces_by_size(k)
    counts = [len(x) for x in by]
    factors = {}
    cleared: set[int] = set()
    sizes = range(1, len(by))
    if not transposed:
        for s in reversed(sizes):
            cols = _boundary_columns(by[s - 1], by[s])
            cols = [c for j, c in enumerate(cols) if j not in cleared]
            factors[s - 1], cleared = reduce_columns(cols)
    else:
        for s in sizes:
            cols = _transpose(_boundary_columns(by[s - 1], by[s]), counts[s - 1])
            cols = [c for j, c in enumerate(cols) if j not in cleared]
            factors[s - 1], cleared = reduce_columns(cols)
    return counts, factors


def reduced_homology(k: SimplicialComplex) -> HomologyProfile:
    if k.is_void:
        raise DomainError("reduced homology of the void complex is undefined (no augmentation)")
    counts, factors = _boundary_factors(k, transposed=False)
    top = k.dim
    betti, torsion = {}, {}
    for i in range(-1, top + 1):
        n_i = counts[i + 1]
        r_out = len(factors.get(i, ()))  # rank of d_i
        r_in = len(factors.get(i + 1, ()))  # rank of d_{i+1}
        betti[i] = n_i - r_out - r_in
        t = tuple(d for d in factors.get(i + 1, ()) if d > 1)
        if t:
            torsion[i] = t
    return HomologyProfile(betti, torsion, top, cohomology=False)


def reduced_cohomology(k: SimplicialComplex) -> HomologyProfile:
    if k.is_void:
        raise DomainError("reduced cohomology of the void complex is undefined (no augmentation)")
    # coboundary delta^{i} = transpose of d_{i+1}
    counts, factors = _boundary_factors(k, transposed=True)
    top = k.dim
    betti, torsion = {}, {}
    for i in range(-1, top + 1):
        n_i = counts[i + 1]
        r_out = len(factors.get(i + 1, ()))  # rank of delta^i
        r_in = len(factors.get(i, ()))  # rank of delta^{i-1}
        betti[i] = n_i - r_out - r_in
        t = tuple(d for d in factors.get(i, ()) if d > 1)
        if t:
            torsion[i] = t
    return HomologyProfile(betti, torsion, top, cohomology=True)


def reduced_euler_characteristic(k: SimplicialComplex) -> int:
    return sum((-1) ** ((s - 1) % 2) * c for s, c in enumerate(k.f_vector()))


@dataclass
class DualityReport:
    ok: bool
    n_vertices: int
    degrees: list = field(default_factory=list)  # (i, j, H_i(K), H^j(K^v), match)
    note: str = ""


def alexander_duality_check(k: SimplicialComplex) -> DualityReport:
    """Compare H~_i(K) with H~^{|V|-3-i}(K^v) for every i."""
    v = k.n_vertices
    hom = reduced_homology(k)
    kd = alexander_dual(k)
    note = ""
    if kd.is_void:
        cohom = HomologyProfile({}, {}, -1, cohomology=True)
        note = "dual is void; its reduced cohomology is taken to be zero"
    else:
        cohom = reduced_cohomology(kd)
    rows = []
    ok = True
    for i in range(-1, v):
        j = v - 3 - i
        a, b = hom.group(i), cohom.group(j)
        rows.append((i, j, a, b, a == b))
        ok &= a == b
    return DualityReport(ok, v, rows, note)
