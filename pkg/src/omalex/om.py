"""Oriented matroids given by a realization, a chirotope, or signed sets.

Sign vectors are stored as a pair of bitmasks over the ground order; the
ground labels are carried along so that vectors from different ground sets
are never silently mixed.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

from .exact import RationalMatrix, det, kernel_basis, left_kernel_basis, rank as matrix_rank, row_basis


class OMError(ValueError):
    """Bad input to an oriented-matroid operation."""


class PreconditionError(OMError):
    pass


class StateError(RuntimeError):
    pass


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


@dataclass(frozen=True)
class SignVector:
    ground: tuple[str, ...]
    pos: int
    neg: int

    def __post_init__(self):
        if self.pos & self.neg:
            raise OMError("positive and negative parts overlap")

    @classmethod
    def from_sets(cls, ground: Sequence[str], positive: Iterable[str] = (), negative: Iterable[str] = ()):
        ground = tuple(ground)
        index = {e: i for i, e in enumerate(ground)}
        try:
            p = sum(1 << index[e] for e in set(positive))
            n = sum(1 << index[e] for e in set(negative))
        except KeyError as exc:
            raise OMError(f"unknown label {exc.args[0]!r}") from None
        return cls(ground, p, n)

    @classmethod
    def from_signs(cls, ground: Sequence[str], signs: Sequence[int]):
        p = n = 0
        for i, s in enumerate(signs):
            if s > 0:
                p |= 1 << i
            elif s < 0:
                n |= 1 << i
        return cls(tuple(ground), p, n)

    @classmethod
    def zero(cls, ground: Sequence[str]):
        return cls(tuple(ground), 0, 0)

    @property
    def positive(self) -> frozenset[str]:
        return frozenset(self.ground[i] for i in _bits(self.pos))

    @property
    def negative(self) -> frozenset[str]:
        return frozenset(self.ground[i] for i in _bits(self.neg))

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.ground[i] for i in _bits(self.pos | self.neg))

    @property
    def support_mask(self) -> int:
        return self.pos | self.neg

    def signs(self) -> tuple[int, ...]:
        return tuple(1 if self.pos >> i & 1 else -1 if self.neg >> i & 1 else 0 for i in range(len(self.ground)))

    def __getitem__(self, label: str) -> int:
        i = self.ground.index(label)
        return 1 if self.pos >> i & 1 else -1 if self.neg >> i & 1 else 0

    def __neg__(self) -> "SignVector":
        return SignVector(self.ground, self.neg, self.pos)

    def __bool__(self):
        return bool(self.pos | self.neg)

    @property
    def is_positive(self) -> bool:
        return bool(self.pos) and not self.neg

    def compose(self, other: "SignVector") -> "SignVector":
        return compose(self, other)

    def reorient(self, mask: int) -> "SignVector":
        flip_p = self.pos & mask
        flip_n = self.neg & mask
        return SignVector(self.ground, (self.pos & ~mask) | flip_n, (self.neg & ~mask) | flip_p)

    def restrict(self, labels: Sequence[str]) -> "SignVector":
        """Restriction to ``labels``, which become the new ground (in the given order)."""
        labels = tuple(labels)
        p = n = 0
        for j, e in enumerate(labels):
            i = self.ground.index(e)
            if self.pos >> i & 1:
                p |= 1 << j
            elif self.neg >> i & 1:
                n |= 1 << j
        return SignVector(labels, p, n)

    def sort_key(self):
        return (_popcount(self.pos | self.neg), tuple(-s for s in self.signs()))

    def to_json_obj(self) -> dict:
        return {"pos": [e for e in self.ground if e in self.positive],
                "neg": [e for e in self.ground if e in self.negative]}

    def __repr__(self):
        p = ",".join(e for e in self.ground if e in self.positive)
        n = ",".join(e for e in self.ground if e in self.negative)
        return f"(+{{{p}}}, -{{{n}}})"


def compose(v: SignVector, w: SignVector) -> SignVector:
    """(v o w)(e) = v(e) if v(e) != 0 else w(e)."""
    if v.ground != w.ground:
        raise OMError("sign vectors live on different ground sets")
    free = ~(v.pos | v.neg)
    return SignVector(v.ground, v.pos | (w.pos & free), v.neg | (w.neg & free))


def orthogonal(x: SignVector, y: SignVector) -> bool:
    """Supports disjoint, or the products take both signs."""
    agree = (x.pos & y.pos) | (x.neg & y.neg)
    disagree = (x.pos & y.neg) | (x.neg & y.pos)
    return bool(agree) == bool(disagree)


def sorted_vectors(vs: Iterable[SignVector]) -> list[SignVector]:
    return sorted(vs, key=SignVector.sort_key)


def _perm_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (0 if it has repeats)."""
    seq = list(seq)
    if len(set(seq)) != len(seq):
        return 0
    sign = 1
    for i in range(len(seq)):
        for j in range(i + 1, len(seq)):
            if seq[i] > seq[j]:
                sign = -sign
    return sign


def _sign(x) -> int:
    return (x > 0) - (x < 0)


class Chirotope:
    """Basis orientations keyed by sorted index tuples into ``ground``."""

    def __init__(self, ground: Sequence[str], rank: int, signs: dict[tuple[int, ...], int]):
        self.ground = tuple(ground)
        self.rank = rank
        n = len(self.ground)
        full = {}
        for key in itertools.combinations(range(n), rank):
            s = signs.get(key, 0)
            if s not in (-1, 0, 1):
                raise OMError(f"chirotope value {s!r} is not a sign")
            full[key] = s
        extra = set(signs) - set(full)
        if extra:
            raise OMError(f"chirotope keys are not sorted {rank}-subsets: {sorted(extra)[:3]}")
        if not any(full.values()):
            raise OMError("chirotope is identically zero")
        self.signs = full

    def __call__(self, idx: Sequence[int]) -> int:
        s = _perm_sign(idx)
        if s == 0:
            return 0
        return s * self.signs[tuple(sorted(idx))]

    def __eq__(self, other):
        if not isinstance(other, Chirotope):
            return NotImplemented
        return (self.ground, self.rank, self.signs) == (other.ground, other.rank, other.signs)

    def __repr__(self):
        return f"Chirotope(rank={self.rank}, ground={list(self.ground)})"

    def equivalent(self, other: "Chirotope") -> bool:
        """Equal up to a global sign."""
        if self.ground != other.ground or self.rank != other.rank:
            return False
        return self.signs == other.signs or self.signs == {k: -v for k, v in other.signs.items()}

    def bases(self) -> list[tuple[int, ...]]:
        return [k for k, v in self.signs.items() if v]

    def dual(self) -> "Chirotope":
        n = len(self.ground)
        everything = set(range(n))
        out = {}
        for key in itertools.combinations(range(n), n - self.rank):
            rest = tuple(sorted(everything - set(key)))
            out[key] = self.signs[rest] * _perm_sign(key + rest)
        return Chirotope(self.ground, n - self.rank, out)

    def reorient(self, idx: Iterable[int]) -> "Chirotope":
        flip = set(idx)
        return Chirotope(self.ground, self.rank,
                         {k: v * (-1) ** len(flip.intersection(k)) for k, v in self.signs.items()})

    def restricted(self, keep: Sequence[int], fixed: Sequence[int], rank: int) -> "Chirotope":
        """chi'(S) = chi(S, fixed) on the ground ``keep``."""
        keep = list(keep)
        fixed = tuple(fixed)
        out = {}
        for key in itertools.combinations(range(len(keep)), rank):
            out[key] = self(tuple(keep[i] for i in key) + fixed)
        return Chirotope([self.ground[i] for i in keep], rank, out)

    def cocircuits(self) -> set[SignVector]:
        n, r = len(self.ground), self.rank
        out = set()
        if r == 0:
            return out
        for s in itertools.combinations(range(n), r - 1):
            signs = [0 if e in s else self(s + (e,)) for e in range(n)]
            if any(signs):
                y = SignVector.from_signs(self.ground, signs)
                out.add(y)
                out.add(-y)
        return out

    def circuits(self) -> set[SignVector]:
        n, r = len(self.ground), self.rank
        out = set()
        for t in itertools.combinations(range(n), r + 1):
            signs = [0] * n
            for i, e in enumerate(t):
                signs[e] = (-1) ** i * self(t[:i] + t[i + 1:])
            if any(signs):
                x = SignVector.from_signs(self.ground, signs)
                out.add(x)
                out.add(-x)
        return out

    def to_text(self) -> str:
        lines = [str(self.rank), " ".join(self.ground)]
        for key, v in self.signs.items():
            sym = "+" if v > 0 else "-" if v < 0 else "0"
            lines.append(" ".join(self.ground[i] for i in key) + ": " + sym)
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Chirotope":
        lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.strip().startswith("#")]
        if len(lines) < 2:
            raise OMError("chirotope text needs a rank line and a ground line")
        r = int(lines[0])
        ground = lines[1].split()
        index = {e: i for i, e in enumerate(ground)}
        signs = {}
        for ln in lines[2:]:
            lhs, _, rhs = ln.partition(":")
            sym = rhs.strip().replace("−", "-")
            if sym not in ("+", "-", "0"):
                raise OMError(f"bad sign in line {ln!r}")
            try:
                idx = [index[e] for e in lhs.split()]
            except KeyError as exc:
                raise OMError(f"unknown label {exc.args[0]!r}") from None
            if len(idx) != r:
                raise OMError(f"line {ln!r} does not name {r} elements")
            s = _perm_sign(idx)
            if s == 0:
                raise OMError(f"repeated label in {ln!r}")
            signs[tuple(sorted(idx))] = s * {"+": 1, "-": -1, "0": 0}[sym]
        return cls(ground, r, signs)


def chirotope_from_matrix(m: RationalMatrix, labels: Sequence[str] | None = None) -> Chirotope:
    if labels is None:
        labels = m.labels if m.labels is not None else [str(i + 1) for i in range(m.cols)]
    if matrix_rank(m) != m.rows:
        raise PreconditionError(f"matrix has rank {matrix_rank(m)} < {m.rows} rows")
    r = m.rows
    signs = {key: _sign(det(m.select_columns(key))) for key in itertools.combinations(range(m.cols), r)}
    return Chirotope(labels, r, signs)


def default_labels(n: int) -> list[str]:
    return [str(i + 1) for i in range(n)]


class OrientedMatroid:
    """An oriented matroid with a fixed ground order.

    Circuits and cocircuits are derived on demand from a realization or a
    chirotope, or given directly.
    """

    def __init__(self, ground: Sequence[str], rank: int, *, circuits=None, cocircuits=None,
                 chirotope: Chirotope | None = None, realization: RationalMatrix | None = None):
        self.ground = tuple(ground)
        if len(set(self.ground)) != len(self.ground):
            raise OMError("ground labels must be distinct")
        self.rank = rank
        self.chirotope = chirotope
        self.realization = realization
        if circuits is not None:
            self.__dict__["circuits"] = frozenset(circuits)
        if cocircuits is not None:
            self.__dict__["cocircuits"] = frozenset(cocircuits)

    @property
    def provenance(self) -> str:
        return "realized" if self.realization is not None else "chirotope_given"

    @classmethod
    def from_matrix(cls, m, labels: Sequence[str] | None = None) -> "OrientedMatroid":
        if not isinstance(m, RationalMatrix):
            m = RationalMatrix.from_rows(m)
        if labels is None:
            labels = m.labels if m.labels is not None else default_labels(m.cols)
        m = m.with_labels(labels)
        if matrix_rank(m) != m.rows:
            m = row_basis(m)
        return cls(labels, m.rows, realization=m)

    @classmethod
    def from_chirotope(cls, chi: Chirotope) -> "OrientedMatroid":
        return cls(chi.ground, chi.rank, chirotope=chi)

    @cached_property
    def _chi(self) -> Chirotope | None:
        if self.chirotope is not None:
            return self.chirotope
        if self.realization is not None:
            return chirotope_from_matrix(self.realization, self.ground)
        return None

    def get_chirotope(self) -> Chirotope | None:
        return self._chi

    @cached_property
    def circuits(self) -> frozenset[SignVector]:
        if self.realization is not None:
            # support-minimal sign vectors of the kernel = cocircuits of a Gale dual
            gale = kernel_basis(self.realization)
            if gale.rows == 0:
                return frozenset()
            return frozenset(chirotope_from_matrix(gale, self.ground).cocircuits())
        if self.chirotope is not None:
            return frozenset(self.chirotope.circuits())
        raise StateError("no realization, chirotope or circuit list to derive circuits from")

    @cached_property
    def cocircuits(self) -> frozenset[SignVector]:
        chi = self._chi
        if chi is not None:
            return frozenset(chi.cocircuits())
        raise StateError("no realization, chirotope or cocircuit list to derive cocircuits from")

    @cached_property
    def bases(self) -> frozenset[int]:
        """Bases as bitmasks."""
        chi = self._chi
        if chi is not None:
            return frozenset(sum(1 << i for i in key) for key in chi.bases())
        circ = [c.support_mask for c in self.circuits]
        out = set()
        for key in itertools.combinations(range(len(self.ground)), self.rank):
            mask = sum(1 << i for i in key)
            if not any(c & mask == c for c in circ):
                out.add(mask)
        return frozenset(out)

    def index(self, label: str) -> int:
        try:
            return self.ground.index(label)
        except ValueError:
            raise OMError(f"unknown label {label!r}") from None

    def mask(self, labels: Iterable[str]) -> int:
        return sum(1 << self.index(e) for e in set(labels))

    def is_loop(self, label: str) -> bool:
        i = self.index(label)
        return not any(b >> i & 1 for b in self.bases)

    def is_coloop(self, label: str) -> bool:
        i = self.index(label)
        return all(b >> i & 1 for b in self.bases)

    def same_as(self, other: "OrientedMatroid") -> bool:
        return (self.ground == other.ground and self.rank == other.rank
                and self.circuits == other.circuits and self.cocircuits == other.cocircuits)

    def __repr__(self):
        return f"OrientedMatroid(ground={list(self.ground)}, rank={self.rank}, {self.provenance})"

    def to_json_obj(self) -> dict:
        return {
            "ground": list(self.ground),
            "rank": self.rank,
            "cocircuits": [v.to_json_obj() for v in sorted_vectors(self.cocircuits)],
            "circuits": [v.to_json_obj() for v in sorted_vectors(self.circuits)],
        }

    @classmethod
    def from_json_obj(cls, obj: dict) -> "OrientedMatroid":
        if "entries" in obj:
            m = RationalMatrix.from_json_obj(obj)
            return cls.from_matrix(m)
        ground = [str(e) for e in obj["ground"]]

        def read(key):
            if key not in obj:
                return None
            return [SignVector.from_sets(ground, rec.get("pos", []), rec.get("neg", [])) for rec in obj[key]]

        circ, cocirc = read("circuits"), read("cocircuits")
        if circ is None or cocirc is None:
            raise OMError("OM JSON needs both circuits and cocircuits")
        # stored lists may give one orientation only
        circ = set(circ) | {-v for v in circ}
        cocirc = set(cocirc) | {-v for v in cocirc}
        return cls(ground, int(obj["rank"]), circuits=circ, cocircuits=cocirc)

    def to_json(self) -> str:
        return json.dumps(self.to_json_obj())


def circuits(om: OrientedMatroid) -> frozenset[SignVector]:
    return om.circuits


def cocircuits(om: OrientedMatroid) -> frozenset[SignVector]:
    return om.cocircuits


def dual(om: OrientedMatroid) -> OrientedMatroid:
    n = len(om.ground)
    if om.realization is not None:
        gale = kernel_basis(om.realization)
        out = OrientedMatroid(om.ground, n - om.rank, realization=gale)
    elif om.chirotope is not None:
        out = OrientedMatroid(om.ground, n - om.rank, chirotope=om.chirotope.dual())
    else:
        return OrientedMatroid(om.ground, n - om.rank, circuits=om.cocircuits, cocircuits=om.circuits)
    # reuse what is already known about om
    if "circuits" in om.__dict__:
        out.__dict__["cocircuits"] = om.circuits
    if "cocircuits" in om.__dict__:
        out.__dict__["circuits"] = om.cocircuits
    return out


def reorient(om: OrientedMatroid, s: Iterable[str]) -> OrientedMatroid:
    s = set(s)
    mask = om.mask(s)
    if not mask:
        return om
    realization = None
    if om.realization is not None:
        m = om.realization
        flip = {om.index(e) for e in s}
        realization = RationalMatrix(m.rows, m.cols,
                                     [-m[i, j] if j in flip else m[i, j] for i in range(m.rows) for j in range(m.cols)],
                                     m.labels)
    chi = None
    if om.chirotope is not None:
        chi = om.chirotope.reorient(om.index(e) for e in s)
    out = OrientedMatroid(om.ground, om.rank, chirotope=chi, realization=realization)
    for key in ("circuits", "cocircuits"):
        if key in om.__dict__ or (realization is None and chi is None):
            out.__dict__[key] = frozenset(v.reorient(mask) for v in getattr(om, key))
    if "_chi" in om.__dict__ and om._chi is not None and chi is None:
        out.__dict__["_chi"] = om._chi.reorient(om.index(e) for e in s)
    return out


def _support_minimal(vectors: Iterable[SignVector]) -> set[SignVector]:
    vs = [v for v in set(vectors) if v]
    masks = {v.support_mask for v in vs}
    minimal = {m for m in masks if not any(o != m and o & m == o for o in masks)}
    return {v for v in vs if v.support_mask in minimal}


def minor(om: OrientedMatroid, delete: Iterable[str] = (), contract: Iterable[str] = ()) -> OrientedMatroid:
    """The minor om / contract \\ delete."""
    delete, contract = set(delete), set(contract)
    if delete & contract:
        raise OMError(f"cannot both delete and contract {sorted(delete & contract)}")
    for e in delete | contract:
        om.index(e)
    if not delete and not contract:
        return om
    keep = [e for e in om.ground if e not in delete and e not in contract]
    if om.realization is not None:
        m = om.realization
        cidx = [om.index(e) for e in om.ground if e in contract]
        if cidx:
            # project along the contracted columns
            y = left_kernel_basis(m.select_columns(cidx))
            m = y @ m.with_labels(None)
        kidx = [om.index(e) for e in keep]
        sub = m.select_columns(kidx)
        return OrientedMatroid.from_matrix(sub, keep)
    if om.chirotope is not None:
        return OrientedMatroid.from_chirotope(_chirotope_minor(om, delete, contract))
    return _sign_vector_minor(om, delete, contract)


def _independent(om: OrientedMatroid, mask: int) -> bool:
    return any(b & mask == mask for b in om.bases)


def _chirotope_minor(om: OrientedMatroid, delete: set, contract: set) -> Chirotope:
    chi = om.chirotope
    cidx = [om.index(e) for e in om.ground if e in contract]
    didx = [om.index(e) for e in om.ground if e in delete]
    kidx = [om.index(e) for e in om.ground if e not in delete and e not in contract]
    fixed = []
    mask = 0
    for i in cidx:  # maximal independent subset of the contracted set
        if _independent(om, mask | 1 << i):
            mask |= 1 << i
            fixed.append(i)
    base = mask
    for i in kidx:
        if _independent(om, base | 1 << i):
            base |= 1 << i
    for i in didx:  # deleted elements needed to reach full rank
        if _independent(om, base | 1 << i):
            base |= 1 << i
            fixed.append(i)
    r = om.rank - len(fixed)
    return chi.restricted(kidx, fixed, r)


def _sign_vector_minor(om: OrientedMatroid, delete: set, contract: set) -> OrientedMatroid:
    keep = [e for e in om.ground if e not in delete and e not in contract]
    dmask, cmask = om.mask(delete), om.mask(contract)
    circ = [x for x in om.circuits if not x.support_mask & dmask]
    circ = _support_minimal(x.restrict(keep) for x in circ)
    cocirc = [y for y in om.cocircuits if not y.support_mask & cmask]
    cocirc = _support_minimal(y.restrict(keep) for y in cocirc)
    # rank = size of a maximal independent set with respect to the circuits
    cmasks = [c.support_mask for c in circ]
    r, mask = 0, 0
    for i in range(len(keep)):
        t = mask | 1 << i
        if not any(c & t == c for c in cmasks):
            mask, r = t, r + 1
    return OrientedMatroid(keep, r, circuits=circ, cocircuits=cocirc)


@dataclass(frozen=True)
class StructuralFlags:
    uniform: bool
    loops: frozenset
    coloops: frozenset
    acyclic: bool
    totally_cyclic: bool


def structural_flags(om: OrientedMatroid) -> StructuralFlags:
    n = len(om.ground)
    bases = om.bases
    uniform = len(bases) == _binom(n, om.rank)
    loops = frozenset(e for i, e in enumerate(om.ground) if not any(b >> i & 1 for b in bases))
    coloops = frozenset(e for i, e in enumerate(om.ground) if all(b >> i & 1 for b in bases))
    acyclic = not any(x.is_positive for x in om.circuits)
    totally_cyclic = not any(y.is_positive for y in om.cocircuits)
    return StructuralFlags(uniform, loops, coloops, acyclic, totally_cyclic)


def _binom(n, k):
    from math import comb
    return comb(n, k) if 0 <= k <= n else 0


def covectors(om: OrientedMatroid) -> frozenset[SignVector]:
    """All compositions of cocircuits, plus zero."""
    cocirc = list(om.cocircuits)
    seen = {SignVector.zero(om.ground)}
    frontier = list(seen)
    while frontier:
        nxt = []
        for v in frontier:
            for c in cocirc:
                w = compose(v, c)
                if w not in seen:
                    seen.add(w)
                    nxt.append(w)
        frontier = nxt
    return frozenset(seen)


# -- the 4-painting lemma ---------------------------------------------------

@dataclass(frozen=True)
class Painting:
    """Partition of the ground set into black, white, green and red, with e black or white."""
    B: frozenset
    W: frozenset
    G: frozenset
    R: frozenset
    e: str

    def __post_init__(self):
        for name in "BWGR":
            object.__setattr__(self, name, frozenset(getattr(self, name)))
        parts = [self.B, self.W, self.G, self.R]
        for a, b in itertools.combinations(parts, 2):
            if a & b:
                raise OMError("painting colour classes overlap")
        if self.e not in self.B | self.W:
            raise OMError("the distinguished element must be black or white")

    def validate(self, ground: Sequence[str]):
        if self.B | self.W | self.G | self.R != frozenset(ground):
            raise OMError("painting does not cover the ground set")


@dataclass(frozen=True)
class Witness:
    kind: str  # "circuit" or "cocircuit"
    vector: SignVector


def _painting_masks(om: OrientedMatroid, p: Painting):
    return om.mask(p.B), om.mask(p.W), om.mask(p.G), om.mask(p.R), 1 << om.index(p.e)


def painting_witnesses(om: OrientedMatroid, p: Painting) -> tuple[list[SignVector], list[SignVector]]:
    """All circuits of case (1) and all cocircuits of case (2)."""
    p.validate(om.ground)
    b, w, g, r, e = _painting_masks(om, p)
    # e carries the sign of its colour: positive when black, negative when white
    circ = [x for x in om.circuits
            if x.support_mask & e and x.neg & ~(w | g) == 0 and x.pos & ~(b | g) == 0]
    cocirc = [y for y in om.cocircuits
              if y.support_mask & e and y.pos & ~(b | r) == 0 and y.neg & ~(w | r) == 0]
    return sorted_vectors(circ), sorted_vectors(cocirc)


def four_painting_witness(om: OrientedMatroid, p: Painting) -> Witness:
    circ, cocirc = painting_witnesses(om, p)
    if circ and cocirc:
        raise AssertionError(f"both cases of the painting lemma hold for {p}: {circ[0]} and {cocirc[0]}")
    if circ:
        return Witness("circuit", circ[0])
    if cocirc:
        return Witness("cocircuit", cocirc[0])
    raise AssertionError(f"no witness for painting {p}; the oriented matroid is malformed")


def all_paintings(ground: Sequence[str]) -> Iterable[Painting]:
    """Every colouring in {B,W,G,R}^ground with every admissible e."""
    for colours in itertools.product("BWGR", repeat=len(ground)):
        cls = {c: frozenset(x for x, k in zip(ground, colours) if k == c) for c in "BWGR"}
        for e in ground:
            if e in cls["B"] or e in cls["W"]:
                yield Painting(cls["B"], cls["W"], cls["G"], cls["R"], e)


def painting_dichotomy_scan(om: OrientedMatroid, colourings: Iterable[Sequence[str]] | None = None):
    """Check the painting lemma for many colourings at once.

    ``colourings`` is an iterable of colour strings over the ground order
    (default: all 4^n of them). Returns ``(checked, violations)`` where
    ``checked`` counts (colouring, e) pairs and each violation is
    ``(colouring, e, n_circuit_witnesses_nonzero, n_cocircuit_witnesses_nonzero)``.
    """
    n = len(om.ground)
    circ = [(x.pos, x.neg) for x in om.circuits]
    cocirc = [(y.pos, y.neg) for y in om.cocircuits]
    if colourings is None:
        colourings = itertools.product("BWGR", repeat=n)
    checked = 0
    bad = []
    for colours in colourings:
        m = {"B": 0, "W": 0, "G": 0, "R": 0}
        for i, c in enumerate(colours):
            m[c] |= 1 << i
        b, w, g, r = m["B"], m["W"], m["G"], m["R"]
        not_wg, not_bg, not_br, not_wr = ~(w | g), ~(b | g), ~(b | r), ~(w | r)
        case1 = 0
        for p, q in circ:
            if q & not_wg == 0 and p & not_bg == 0:
                case1 |= p | q
        case2 = 0
        for p, q in cocirc:
            if p & not_br == 0 and q & not_wr == 0:
                case2 |= p | q
        eligible = b | w
        checked += _popcount(eligible)
        if (case1 ^ case2) & eligible != eligible or case1 & case2 & eligible:
            for i in _bits(eligible):
                c1, c2 = case1 >> i & 1, case2 >> i & 1
                if c1 == c2:
                    bad.append(("".join(colours), om.ground[i], c1, c2))
    return checked, bad


def check_orthogonality(om: OrientedMatroid) -> list[tuple[SignVector, SignVector]]:
    """Circuit/cocircuit pairs that fail orthogonality (empty for a valid OM)."""
    return [(x, y) for x in om.circuits for y in om.cocircuits if not orthogonal(x, y)]
