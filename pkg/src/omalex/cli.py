"""Command line front end, the worked-example demo and the randomized harness.

Exit status: 0 when everything checked out, 1 when a mathematical check
failed (the offending instance is printed), 2 for usage or input errors.
"""

from __future__ import annotations

import argparse
import itertools
import json
import math
import random
import sys
import time
from dataclasses import asdict, dataclass, field
from importlib import resources
from typing import Sequence

from .exact import RationalMatrix, ShapeError, DomainError, rank
from .lawrence import (
    AffineOM,
    classify_families,
    delta_complex,
    dual_affine,
    facet_count_check,
    is_triangulation,
    lawrence_matrix,
    lifting_subdivision,
    pair_order_key,
    sphere_ball_check,
    theorem1_check,
)
from .om import (
    Chirotope,
    OMError,
    OrientedMatroid,
    SignVector,
    dual,
    minor,
    painting_dichotomy_scan,
    sorted_vectors,
    structural_flags,
)
from .sc import (
    ComplexError,
    SimplicialComplex,
    alexander_dual,
    alexander_duality_check,
    reduced_cohomology,
    reduced_homology,
    stanley_reisner,
)

COMMANDS = (
    "circuits", "cocircuits", "dual", "delta", "alexander-dual", "stanley-reisner", "homology",
    "lawrence-matrix", "check-theorem1", "check-duality-homology", "check-facet-count",
    "check-painting", "check-sphere-ball", "classify", "demo-paper", "random-verify",
)


class InputError(Exception):
    pass


class CheckFailed(Exception):
    """A mathematical check failed; ``payload`` describes the instance."""

    def __init__(self, message, payload=None):
        super().__init__(message)
        self.payload = payload


# -- loading -----------------------------------------------------------------

def _read(path: str | None) -> str:
    if path is None:
        raise InputError("this command needs --input PATH")
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror or exc}") from None


def _parse(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError:
        return None


def load_om(path: str | None) -> tuple[OrientedMatroid, dict]:
    text = _read(path)
    obj = _parse(text)
    if obj is None:
        return OrientedMatroid.from_chirotope(Chirotope.from_text(text)), {}
    if not isinstance(obj, dict):
        raise InputError("expected a JSON object")
    if "entries" in obj:
        return OrientedMatroid.from_matrix(RationalMatrix.from_json_obj(obj)), obj
    if "ground" in obj:
        return OrientedMatroid.from_json_obj(obj), obj
    raise InputError("input is neither a matrix nor an oriented matroid")


def load_affine(path: str | None, f: str | None) -> AffineOM:
    om, obj = load_om(path)
    if f is None:
        f = obj.get("f")
    if f is None:
        f = "f" if "f" in om.ground else om.ground[-1]
    return AffineOM(om, str(f))


def load_complex(path: str | None, f: str | None) -> SimplicialComplex:
    """A complex from complex JSON, or Delta(M, f) of an oriented-matroid input."""
    text = _read(path)
    obj = _parse(text)
    if isinstance(obj, dict) and "facets" in obj:
        return SimplicialComplex.from_json_obj(obj)
    return delta_complex(load_affine(path, f))


# -- formatting ----------------------------------------------------------------

def _fmt_face(face) -> str:
    return "{" + ", ".join(face) + "}"


def _vectors_json(vs):
    return [v.to_json_obj() for v in sorted_vectors(vs)]


def _homology_json(h):
    return {str(i): {"betti": h.group(i)[0], "torsion": list(h.group(i)[1])} for i in range(-1, h.top + 1)}


def _delta_order_key(k: SimplicialComplex):
    elems = [v[1:] for v in k.vertices if v.startswith("x")]
    if len(elems) * 2 == len(k.vertices):
        return lambda v: pair_order_key(v, elems)
    return None


# -- the worked example ----------------------------------------------------------

def load_worked_example() -> dict:
    return json.loads(resources.files("omalex").joinpath("data/worked_example.json").read_text())


def worked_example_pair() -> tuple[AffineOM, AffineOM]:
    data = load_worked_example()
    a = AffineOM(OrientedMatroid.from_matrix(RationalMatrix.from_json_obj(data["A"])), data["A"]["f"])
    b = AffineOM(OrientedMatroid.from_matrix(RationalMatrix.from_json_obj(data["B"])), data["B"]["f"])
    return a, b


@dataclass
class DemoReport:
    ok: bool = True
    checks: list = field(default_factory=list)  # (name, ok, detail)
    seconds: float = 0.0

    def add(self, name: str, ok: bool, detail=""):
        self.checks.append((name, bool(ok), detail))
        self.ok &= bool(ok)


def demo_paper() -> DemoReport:
    t0 = time.perf_counter()
    data = load_worked_example()
    rep = DemoReport()
    a, b = worked_example_pair()

    def with_f_positive(aff):
        fb = 1 << aff.om.index(aff.f)
        return {v for v in aff.om.cocircuits if v.pos & fb}

    for tag, aff in (("B", b), ("A", a)):
        want = {SignVector.from_sets(aff.om.ground, r["pos"], r["neg"]) for r in data[f"cocircuits_{tag}"]}
        got = with_f_positive(aff)
        rep.add(f"cocircuits of {tag} with f positive", got == want, [_xy_spelling(v, aff.f) for v in sorted_vectors(got)])

    da, db = delta_complex(a), delta_complex(b)
    for tag, k in (("B", db), ("A", da)):
        want = frozenset(frozenset(f) for f in data[f"delta_{tag}"])
        rep.add(f"facets of Delta({tag}, f)", k.facets == want, [_fmt_face(f) for f in k.sorted_facets()])

    rep.add("Alexander dual of Delta(A, f) is Delta(B, f)", alexander_dual(da) == db)
    rep.add("Alexander dual of Delta(B, f) is Delta(A, f)", alexander_dual(db) == da)

    for tag, k in (("B", db), ("A", da)):
        got = stanley_reisner(k, key=_delta_order_key(k))
        rep.add(f"Stanley-Reisner generators of Delta({tag}, f)", set(got) == set(data[f"stanley_reisner_{tag}"]),
                "<" + ", ".join(got) + ">")

    ta = theorem1_check(a)
    tb = theorem1_check(b)
    rep.add("theorem check (A, f)", ta.ok)
    rep.add("theorem check (B, f)", tb.ok)
    rep.add("B is the dual of A reoriented at f", dual_affine(a).om.cocircuits == b.om.cocircuits)
    rep.add("both sides are triangulations", is_triangulation(a) and is_triangulation(b))

    bp = minor(b.om, (), {b.f})
    fc = facet_count_check(bp)
    rep.add("Lawrence polytope of B' has 12 facets",
            fc.ok and fc.enumerated == data["lawrence_facets_B_contracted"],
            f"n={fc.n} l={fc.l} c={fc.c} predicted={fc.predicted} enumerated={fc.enumerated}")
    ap = minor(a.om, (), {a.f})
    rep.add("A/f is (4,3,2,1)",
            ap.same_as(OrientedMatroid.from_matrix(RationalMatrix.from_json_obj(data["A_contracted"]))))
    rep.add("B/f is B'",
            bp.same_as(OrientedMatroid.from_matrix(RationalMatrix.from_json_obj(data["B_contracted"]))))

    for tag, k in (("A", da), ("B", db)):
        h, hd = reduced_homology(k), reduced_homology(alexander_dual(k))
        rep.add(f"Delta({tag}, f) and its dual are acyclic", h.is_acyclic() and hd.is_acyclic(), f"{h} / {hd}")
    rep.seconds = time.perf_counter() - t0
    return rep


def _xy_spelling(v: SignVector, f: str) -> str:
    parts = []
    for e in v.ground:
        s = v[e]
        if e == f:
            continue
        if s > 0:
            parts.append(f"x{e}")
        elif s < 0:
            parts.append(f"y{e}")
    return "{" + ", ".join(parts) + ("," if parts else "") + f" {f}}}"


# -- random instances ----------------------------------------------------------------

def random_affine_om(seed: int, d_max: int = 4, n_max: int = 7, entry_bound: int = 5,
                     budget: int = 1000) -> AffineOM:
    """A full-rank integer d x (n+1) matrix, last column labelled f.

    Instances where f is a loop or a coloop are rejected, since then one side
    of the duality has no complex attached. When the rejection budget runs
    out the generator restarts from a seed derived from the original one.
    """
    if min(d_max, n_max, entry_bound) < 1:
        raise ValueError("bounds must be positive")
    for restart in itertools.count():
        rng = random.Random(seed if restart == 0 else f"{seed}/retry{restart}")
        for _ in range(budget):
            n = rng.randint(1, n_max)
            d = rng.randint(1, min(d_max, n))
            rows = [[rng.randint(-entry_bound, entry_bound) for _ in range(n + 1)] for _ in range(d)]
            if rank(rows) != d:
                continue
            if all(r[-1] == 0 for r in rows):
                continue  # f is a loop
            labels = [str(i + 1) for i in range(n)] + ["f"]
            a = AffineOM(OrientedMatroid.from_matrix(RationalMatrix.from_rows(rows, labels)), "f")
            if a.om.is_coloop("f"):
                continue
            return a


def random_realized_om(seed: int, d_max: int, n_max: int, entry_bound: int) -> OrientedMatroid:
    """A full-rank integer matrix with at most n_max columns, labels 1..n."""
    rng = random.Random(seed)
    while True:
        n = rng.randint(1, n_max)
        d = rng.randint(1, min(d_max, n))
        rows = [[rng.randint(-entry_bound, entry_bound) for _ in range(n)] for _ in range(d)]
        if rank(rows) == d:
            return OrientedMatroid.from_matrix(rows)


def random_complex(seed: int, max_vertices: int = 10, max_facets: int = 8) -> SimplicialComplex:
    rng = random.Random(seed)
    n = rng.randint(1, max_vertices)
    verts = [str(i + 1) for i in range(n)]
    k = rng.randint(1, max_facets)
    facets = [rng.getrandbits(n) & rng.getrandbits(n) | rng.getrandbits(n) & rng.getrandbits(n) for _ in range(k)]
    return SimplicialComplex(verts, facets)


@dataclass
class VerifyConfig:
    seed: int
    count: int = 100
    d_max: int = 4
    n_max: int = 7
    entry_bound: int = 5
    painting_sample: int = 512
    exhaustive_limit: int = 6


@dataclass
class VerifyReport:
    instances_run: int = 0
    failures: list = field(default_factory=list)
    checks_run: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return not self.failures


def verify_instance(a: AffineOM, seed: int, cfg: VerifyConfig) -> tuple[list[tuple[str, str]], list[str]]:
    """Run every check on one instance; returns (failures, names of checks run)."""
    failures, ran = [], []

    def check(name, fn):
        ran.append(name)
        try:
            ok, detail = fn()
        except Exception as exc:  # a crash on a valid instance is a failure too
            ok, detail = False, f"{type(exc).__name__}: {exc}"
        if not ok:
            failures.append((name, detail))

    def thm1():
        r = theorem1_check(a)
        return r.ok, {"lhs": r.lhs_facets, "rhs": r.rhs_facets}

    k = delta_complex(a)

    def duality():
        r = alexander_duality_check(k)
        return r.ok, [row for row in r.degrees if not row[4]]

    def acyclic():
        h, hd = reduced_homology(k), reduced_homology(alexander_dual(k))
        return h.is_acyclic() and hd.is_acyclic(), f"{h} / {hd}"

    def painting():
        n = len(a.om.ground)
        if n <= cfg.exhaustive_limit:
            colourings = None
        else:
            rng = random.Random(f"paint/{seed}")
            colourings = ["".join(rng.choice("BWGR") for _ in range(n)) for _ in range(cfg.painting_sample)]
        checked, bad = painting_dichotomy_scan(a.om, colourings)
        return not bad, bad[:5]

    def facets():
        r = facet_count_check(minor(a.om, (), {a.f}))
        return r.ok, asdict(r)

    check("theorem1", thm1)
    check("alexander_duality", duality)
    check("ball_acyclicity", acyclic)
    check("painting", painting)
    check("facet_count", facets)
    fb = 1 << a.om.index(a.f)
    if any(y.is_positive and y.pos & fb for y in a.om.cocircuits):
        def sb():
            r = sphere_ball_check(a)
            return r.ok, asdict(r)
        check("sphere_ball", sb)
    return failures, ran


def random_verify(cfg: VerifyConfig) -> VerifyReport:
    rep = VerifyReport()
    for i in range(cfg.count):
        a = random_affine_om(cfg.seed + i, cfg.d_max, cfg.n_max, cfg.entry_bound)
        failures, ran = verify_instance(a, cfg.seed + i, cfg)
        rep.instances_run += 1
        for name in ran:
            rep.checks_run[name] = rep.checks_run.get(name, 0) + 1
        for name, detail in failures:
            rep.failures.append({
                "seed_offset": i,
                "matrix": a.om.realization.to_json_obj(),
                "f": a.f,
                "check": name,
                "details": detail,
            })
    return rep


# -- drawing ------------------------------------------------------------------------

def render_svg(a: AffineOM, k: SimplicialComplex) -> str:
    """Static picture of Delta(M, f) inside the Lawrence polytope for n <= 3, rank(M/f) <= 2."""
    contracted = minor(a.om, (), {a.f})
    if a.om.realization is None:
        raise InputError("drawing needs a realized oriented matroid")
    if a.n > 3 or contracted.rank > 2:
        raise InputError("drawing is only available for n <= 3 and rank(M/f) <= 2")
    lam = lawrence_matrix(contracted.realization.with_labels(contracted.ground))
    dim = lam.rows
    # fixed generic projection of the homogeneous coordinates
    angles = [2 * math.pi * (j + 0.3) / dim for j in range(dim)]
    pts = {}
    for c, label in enumerate(lam.labels):
        col = [float(x) for x in lam.column(c)]
        px = sum(v * math.cos(t) for v, t in zip(col, angles))
        py = sum(v * math.sin(t) for v, t in zip(col, angles))
        # identified points (loops of M/f) get a small offset so both labels show
        key = (round(px, 6), round(py, 6))
        while key in pts.values():
            px, py = px + 0.15, py + 0.15
            key = (round(px, 6), round(py, 6))
        pts[label] = key
    xs = [p[0] for p in pts.values()]
    ys = [p[1] for p in pts.values()]
    span = max(max(xs) - min(xs), max(ys) - min(ys), 1e-9)
    scale = 320 / span

    def at(label):
        x, y = pts[label]
        return 40 + (x - min(xs)) * scale, 40 + (max(ys) - y) * scale

    used = {v for f in k.facets for v in f}
    out = ['<svg xmlns="http://www.w3.org/2000/svg" width="400" height="400" font-family="sans-serif" font-size="13">']
    edges = sorted({tuple(sorted(e)) for f in k.facets for e in itertools.combinations(f, 2)})
    for u, v in edges:
        (x1, y1), (x2, y2) = at(u), at(v)
        out.append(f'<line x1="{x1:.1f}" y1="{y1:.1f}" x2="{x2:.1f}" y2="{y2:.1f}" stroke="#446" stroke-width="1.2"/>')
    for label in lam.labels:
        x, y = at(label)
        fill = "#000" if label in used else "#fff"
        out.append(f'<circle cx="{x:.1f}" cy="{y:.1f}" r="5" fill="{fill}" stroke="#000"/>')
        out.append(f'<text x="{x + 8:.1f}" y="{y - 6:.1f}">{label}</text>')
    out.append("</svg>")
    return "\n".join(out) + "\n"


# -- commands -------------------------------------------------------------------------

def _emit(args, obj, lines: Sequence[str]):
    if args.json:
        print(json.dumps(obj, indent=1, sort_keys=True, default=str))
    else:
        for ln in lines:
            print(ln)


def cmd_circuits(args, which="circuits"):
    om, _ = load_om(args.input)
    vs = om.circuits if which == "circuits" else om.cocircuits
    _emit(args, {which: _vectors_json(vs)}, [repr(v) for v in sorted_vectors(vs)])
    return 0


def cmd_dual(args):
    om, _ = load_om(args.input)
    d = dual(om)
    obj = d.to_json_obj()
    if d.realization is not None:
        obj["realization"] = d.realization.to_json_obj()
    lines = [f"rank {d.rank} on {' '.join(d.ground)}"]
    if d.realization is not None:
        lines.append(f"Gale dual: {d.realization!r}")
    lines += ["cocircuits:"] + [f"  {v!r}" for v in sorted_vectors(d.cocircuits)]
    _emit(args, obj, lines)
    return 0


def cmd_delta(args):
    a = load_affine(args.input, args.f)
    k = delta_complex(a)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(render_svg(a, k))
    _emit(args, k.to_json_obj(), [_fmt_face(f) for f in k.sorted_facets()])
    return 0


def cmd_alexander_dual(args):
    k = load_complex(args.input, args.f)
    d = alexander_dual(k)
    _emit(args, d.to_json_obj(), [_fmt_face(f) for f in d.sorted_facets()] or ["(void complex)"])
    return 0


def cmd_stanley_reisner(args):
    k = load_complex(args.input, args.f)
    gens = stanley_reisner(k, key=_delta_order_key(k))
    _emit(args, {"generators": gens}, ["<" + ", ".join(gens) + ">"])
    return 0


def cmd_homology(args):
    k = load_complex(args.input, args.f)
    h, c = reduced_homology(k), reduced_cohomology(k)
    _emit(args, {"homology": _homology_json(h), "cohomology": _homology_json(c)}, [str(h), str(c)])
    return 0


def cmd_lawrence_matrix(args):
    obj = _parse(_read(args.input))
    if not isinstance(obj, dict) or "entries" not in obj:
        raise InputError("lawrence-matrix needs a matrix JSON input")
    lam = lawrence_matrix(RationalMatrix.from_json_obj(obj))
    _emit(args, lam.to_json_obj(), [" ".join(lam.labels)] + [" ".join(str(x) for x in lam.row(i)) for i in range(lam.rows)])
    return 0


def _finish(args, ok: bool, obj, lines, instance=None):
    if not ok and instance is not None:
        obj = dict(obj, instance=instance)
        lines = list(lines) + ["FAILED on instance:", json.dumps(instance)]
    _emit(args, obj, lines)
    return 0 if ok else 1


def _instance(a: AffineOM):
    return a.om.to_json_obj() | {"f": a.f}


def cmd_check_theorem1(args):
    a = load_affine(args.input, args.f)
    r = theorem1_check(a)
    lines = [f"ok: {r.ok}", "dual of Delta(M,f):"] + [f"  {_fmt_face(f)}" for f in r.lhs_facets]
    lines += ["Delta(-f M*, f):"] + [f"  {_fmt_face(f)}" for f in r.rhs_facets]
    return _finish(args, r.ok, asdict(r), lines, _instance(a))


def cmd_check_duality_homology(args):
    k = load_complex(args.input, args.f)
    r = alexander_duality_check(k)
    lines = [f"ok: {r.ok}"] + [f"  H~_{i} = {a}   H~^{j}(dual) = {b}   {'ok' if m else 'MISMATCH'}"
                               for i, j, a, b, m in r.degrees]
    return _finish(args, r.ok, asdict(r), lines, k.to_json_obj())


def cmd_check_facet_count(args):
    om, _ = load_om(args.input)
    r = facet_count_check(om)
    obj = asdict(r) | {"ok": r.ok}
    lines = [f"n={r.n} l={r.l} c={r.c} predicted={r.predicted} enumerated={r.enumerated} ok={r.ok}"]
    return _finish(args, r.ok, obj, lines, om.to_json_obj())


def cmd_check_painting(args):
    om, _ = load_om(args.input)
    n = len(om.ground)
    if n <= 6:
        colourings, mode = None, "exhaustive"
    else:
        rng = random.Random(args.seed if args.seed is not None else 0)
        colourings = ["".join(rng.choice("BWGR") for _ in range(n)) for _ in range(512)]
        mode = "sampled 512"
    checked, bad = painting_dichotomy_scan(om, colourings)
    obj = {"mode": mode, "checked": checked, "violations": bad, "ok": not bad}
    return _finish(args, not bad, obj, [f"{mode}: {checked} (painting, e) pairs, {len(bad)} violations"],
                   om.to_json_obj())


def cmd_check_sphere_ball(args):
    a = load_affine(args.input, args.f)
    r = sphere_ball_check(a)
    obj = asdict(r) | {"ok": r.ok}
    lines = [f"predicted: {r.predicted}", f"subdivision: {[_fmt_face(f) for f in r.subdivision]}",
             f"dual: {[_fmt_face(f) for f in r.dual_facets] or 'void'}", f"dual homology: {r.dual_homology}",
             f"ok: {r.ok}" + (" (vacuous)" if r.vacuous else ""), r.note]
    return _finish(args, r.ok, obj, lines, _instance(a))


def cmd_classify(args):
    a = load_affine(args.input, args.f)
    fl = classify_families(a)
    dl = classify_families(dual_affine(a))
    predicted = fl.alexander_dual()
    ok = dl == predicted
    obj = {"flags": _flags_json(fl), "dual_flags": _flags_json(dl), "swap_ok": ok}
    lines = [f"families: {' '.join(sorted(fl.families))}", f"dual families: {' '.join(sorted(dl.families))}",
             f"T/U swap under duality: {ok}"]
    return _finish(args, ok, obj, lines, _instance(a))


def _flags_json(fl):
    return {"contraction_uniform": fl.contraction_uniform, "deletion_uniform": fl.deletion_uniform,
            "realized": fl.realized, "families": sorted(fl.families)}


def cmd_demo_paper(args):
    rep = demo_paper()
    lines = [f"[{'ok' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else "") for name, ok, detail in rep.checks]
    lines.append(f"{'all checks passed' if rep.ok else 'REGRESSION'} in {rep.seconds:.2f}s")
    obj = {"ok": rep.ok, "checks": [{"name": n, "ok": o, "detail": d} for n, o, d in rep.checks]}
    _emit(args, obj, lines)
    return 0 if rep.ok else 1


def cmd_random_verify(args):
    if args.seed is None:
        raise InputError("random-verify needs --seed")
    cfg = VerifyConfig(args.seed, args.count, args.dmax, args.nmax, args.bound)
    rep = random_verify(cfg)
    obj = {"instances_run": rep.instances_run, "failures": rep.failures, "checks_run": rep.checks_run}
    lines = [f"{rep.instances_run} instances, {len(rep.failures)} failures",
             "checks: " + ", ".join(f"{k}={v}" for k, v in sorted(rep.checks_run.items()))]
    for fail in rep.failures:
        lines.append(json.dumps(fail, default=str))
    _emit(args, obj, lines)
    return 0 if rep.ok else 1


HANDLERS = {
    "circuits": lambda a: cmd_circuits(a, "circuits"),
    "cocircuits": lambda a: cmd_circuits(a, "cocircuits"),
    "dual": cmd_dual,
    "delta": cmd_delta,
    "alexander-dual": cmd_alexander_dual,
    "stanley-reisner": cmd_stanley_reisner,
    "homology": cmd_homology,
    "lawrence-matrix": cmd_lawrence_matrix,
    "check-theorem1": cmd_check_theorem1,
    "check-duality-homology": cmd_check_duality_homology,
    "check-facet-count": cmd_check_facet_count,
    "check-painting": cmd_check_painting,
    "check-sphere-ball": cmd_check_sphere_ball,
    "classify": cmd_classify,
    "demo-paper": cmd_demo_paper,
    "random-verify": cmd_random_verify,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="omalex", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=COMMANDS)
    p.add_argument("--input", metavar="PATH")
    p.add_argument("--f", metavar="LABEL", help='distinguished element (default "f" or the last column)')
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--dmax", type=int, default=4)
    p.add_argument("--nmax", type=int, default=7)
    p.add_argument("--bound", type=int, default=5)
    p.add_argument("--json", action="store_true")
    p.add_argument("--svg", metavar="PATH")
    return p


def run(argv: Sequence[str] | None = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        return HANDLERS[args.command](args)
    except (InputError, OMError, ComplexError, ShapeError, DomainError, KeyError, TypeError, ValueError) as exc:
        print(f"omalex: error: {exc}", file=sys.stderr)
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
