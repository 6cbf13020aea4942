import pytest
from hypothesis import given, settings, strategies as st

from omalex.cli import load_worked_example, random_affine_om, random_realized_om, worked_example_pair
from omalex.exact import RationalMatrix
from omalex.lawrence import (
    AffineOM,
    FamilyFlags,
    cells_are_simplices,
    _lawrence_from_sign_vectors,
    classify_families,
    delta_complex,
    dual_affine,
    facet_count_check,
    full_simplices,
    is_triangulation,
    lawrence_facets,
    lawrence_matrix,
    lawrence_om,
    lifting_subdivision,
    sphere_ball_check,
    theorem1_check,
)
from omalex.om import OrientedMatroid, PreconditionError, dual, minor
from omalex.sc import ComplexError, SimplicialComplex, alexander_dual, reduced_homology
from oracles import lawrence_facets_geometric, powerset_alexander_dual

PRISM = [[1, 1, 1, 0], [0, 1, 2, 1]]
TWO_POINTS = [[1, -1, 0], [1, 0, 1]]
PYRAMID = [[1, 1, 0, 0], [0, 1, 1, 1]]


def affine(rows, labels=None):
    n = len(rows[0])
    labels = labels or [str(i + 1) for i in range(n - 1)] + ["f"]
    return AffineOM.from_matrix(rows, "f", labels)


def facets(*faces):
    return frozenset(frozenset(f) for f in faces)


def test_lawrence_matrix_examples():
    data = load_worked_example()
    lam = lawrence_matrix(RationalMatrix.from_json_obj(data["B_contracted"]))
    assert lam.tolist() == [
        [1, -2, 1, 0, 0, 0, 0, 0], [0, 1, -2, 1, 0, 0, 0, 0], [1, 0, 0, 0, 1, 0, 0, 0],
        [0, 1, 0, 0, 0, 1, 0, 0], [0, 0, 1, 0, 0, 0, 1, 0], [0, 0, 0, 1, 0, 0, 0, 1]]
    assert lam.labels == ("x1", "x2", "x3", "x4", "y1", "y2", "y3", "y4")
    assert lawrence_matrix([[1]]).tolist() == [[1, 0], [1, 1]]
    z = lawrence_matrix([[1, 0], [2, 0]])
    assert z.column(1) == z.column(3)


def test_lawrence_om_bookkeeping():
    bp = OrientedMatroid.from_matrix(load_worked_example()["B_contracted"]["entries"])
    lam = lawrence_om(bp)
    assert (len(lam.ground), lam.rank) == (8, 6)
    supports = {y.support for y in lam.cocircuits if y.is_positive}
    for i in "1234":
        assert frozenset({f"x{i}", f"y{i}"}) in supports
    assert len(lawrence_facets(OrientedMatroid.from_matrix([[1, 1]]))) == 4


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 10**6))
def test_lawrence_sign_vector_route_matches_matrix(seed):
    m = random_realized_om(seed, 3, 4, 3)
    realized = lawrence_om(m)
    combinatorial = _lawrence_from_sign_vectors(m)
    assert combinatorial.rank == realized.rank
    assert combinatorial.cocircuits == realized.cocircuits
    assert combinatorial.circuits == realized.circuits


def test_facet_count_examples():
    bp = OrientedMatroid.from_matrix(load_worked_example()["B_contracted"]["entries"])
    r = facet_count_check(bp)
    assert (r.n, r.l, r.c, r.predicted, r.enumerated) == (4, 0, 4, 12, 12)
    r = facet_count_check(OrientedMatroid.from_matrix([[1]]))
    assert (r.n, r.l, r.c, r.predicted) == (1, 1, 1, 2) and r.ok
    r = facet_count_check(OrientedMatroid.from_matrix([[1, 1]]))
    assert r.predicted == r.enumerated == 4


def test_rank_two_types():
    types = load_worked_example()["rank2_types"]
    for name in ("D1", "D2", "D3"):
        rows, want = types[name]["entries"], types[name]["facets"]
        r = facet_count_check(OrientedMatroid.from_matrix(rows))
        assert r.ok and r.enumerated == want
        assert len(lawrence_facets_geometric(rows)) == want


def test_delta_worked_example():
    data = load_worked_example()
    a, b = worked_example_pair()
    assert delta_complex(b).facets == facets(*data["delta_B"])
    assert delta_complex(a).facets == facets(*data["delta_A"])


def test_delta_prism():
    k = delta_complex(affine(PRISM))
    assert k.facets == facets(["x1", "y1", "y2", "y3"], ["x1", "x2", "y2", "y3"], ["x1", "x2", "x3", "y3"])


def test_delta_rejects_loop():
    with pytest.raises(PreconditionError):
        delta_complex(affine([[1, 0], [0, 0]]))


def test_lifting_subdivision_examples():
    a, _ = worked_example_pair()
    assert lifting_subdivision(a).facets == facets(["1"])
    assert lifting_subdivision(affine(TWO_POINTS)).facets == facets(["1"], ["2"])
    with pytest.raises(PreconditionError):
        # 1, 2, f span a totally cyclic configuration around the origin
        lifting_subdivision(affine([[1, -1, 0], [0, -1, 1]]))


def test_is_triangulation():
    a, b = worked_example_pair()
    assert is_triangulation(a) and is_triangulation(b)
    assert all(len(f) == 6 for f in delta_complex(b).facets)
    assert not is_triangulation(affine([[1, 1, 0, 1], [0, 0, 1, 1]]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_triangulation_facet_sizes(seed):
    a = random_affine_om(seed, 3, 5, 3)
    k = delta_complex(a)
    size = a.n + minor(a.om, (), {a.f}).rank
    assert all(len(f) >= size for f in k.facets)
    if is_triangulation(a):
        assert cells_are_simplices(a)
    # simplices exactly when every hyperplane of M avoiding f is independent
    fb = 1 << a.om.index(a.f)
    generic = all(len(a.om.ground) - len(y.support) == a.om.rank - 1 for y in a.om.cocircuits if y.support_mask & fb)
    assert cells_are_simplices(a) == generic


def test_simplicial_cells_without_uniform_deletion():
    # 1, 4 and f are parallel, so M minus f is not uniform, yet both cells are simplices
    a = affine([[2, 0, 3, -2, -3], [0, 1, -1, 0, 0]])
    assert not is_triangulation(a)
    assert cells_are_simplices(a)
    # same with M/f loopless: the dependent triple 2, 3, 5 spans a hyperplane through f
    b = affine([[1, 0, 0, -2, 0, 0], [0, 4, 0, -11, 3, -3], [0, 0, 2, -5, -1, -1]])
    assert not is_triangulation(b) and cells_are_simplices(b)


def test_theorem1_worked_example():
    a, b = worked_example_pair()
    r = theorem1_check(a)
    assert r.ok and frozenset(map(frozenset, r.lhs_facets)) == delta_complex(b).facets
    assert theorem1_check(b).ok


def test_theorem1_preconditions():
    with pytest.raises(PreconditionError):
        theorem1_check(affine([[1, 0], [0, 0]]))
    with pytest.raises(PreconditionError):
        theorem1_check(affine([[1, 0], [0, 1]]))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_theorem1_against_powerset_oracle(seed):
    a = random_affine_om(seed, 3, 5, 4)
    k = delta_complex(a)
    rhs = delta_complex(dual_affine(a))
    assert frozenset(powerset_alexander_dual(k.vertices, k.facets)) == rhs.facets
    assert theorem1_check(a).ok


def test_theorem1_on_chirotope_input():
    a, _ = worked_example_pair()
    chi = AffineOM(OrientedMatroid.from_chirotope(a.om._chi), "f")
    assert theorem1_check(chi).ok
    assert delta_complex(chi) == delta_complex(a)


def test_classify_worked_example():
    a, b = worked_example_pair()
    assert classify_families(a).families == frozenset(
        {"S", "R", "T", "U", "RS", "RT", "TU", "RTU"})


def test_classify_pyramid_swap():
    a = affine(PYRAMID)
    fl = classify_families(a)
    assert fl.deletion_uniform and not fl.contraction_uniform
    assert {"R", "T", "RT"} <= fl.families and "U" not in fl.families
    dl = classify_families(dual_affine(a))
    assert dl.contraction_uniform and not dl.deletion_uniform
    assert {"RS", "U"} <= dl.families and "T" not in dl.families
    assert dl == fl.alexander_dual()


def test_family_flags_monotone():
    for bits in range(8):
        fl = FamilyFlags.from_flags(bool(bits & 1), bool(bits & 2), bool(bits & 4))
        assert "S" in fl.families
        if "RTU" in fl.families:
            assert fl.families == frozenset({"S", "R", "T", "U", "RS", "RT", "TU", "RTU"})
        assert fl.alexander_dual().alexander_dual() == fl


def test_sphere_ball_examples():
    r = sphere_ball_check(affine(TWO_POINTS))
    assert r.predicted == "sphere" and r.dual_facets == [()] and r.ok
    a, _ = worked_example_pair()
    r = sphere_ball_check(a)
    assert r.predicted == "ball" and r.ok
    assert frozenset(map(frozenset, r.dual_facets)) == facets("134", "124", "123")
    assert not r.homotopy_verified


def test_sphere_ball_vacuous_full_cell():
    # f is a coloop, so the only cell covers everything
    r = sphere_ball_check(affine([[1, 0], [0, 1]]))
    assert r.subdivision == [("1",)] and r.dual_facets == []
    assert r.vacuous and r.predicted == "ball" and r.ok


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10**6))
def test_sphere_ball_random(seed):
    a = random_affine_om(seed, 3, 5, 3)
    fb = 1 << a.om.index(a.f)
    if any(y.is_positive and y.pos & fb for y in a.om.cocircuits):
        assert sphere_ball_check(a).ok
    else:
        with pytest.raises(PreconditionError):
            lifting_subdivision(a)


def test_full_simplices():
    a, _ = worked_example_pair()
    k = delta_complex(a)
    full = full_simplices(k)
    assert all(f in full for f in k.facets)
    minimal = [f for f in full if not any(g < f for g in full)]
    assert all(len(f) == 4 for f in minimal)
    maximal = [f for f in full if not any(f < g for g in full)]
    assert len(maximal) == 4
    with pytest.raises(ComplexError):
        full_simplices(SimplicialComplex(["a", "b"], [3]))


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10**6))
def test_balls_are_acyclic(seed):
    a = random_affine_om(seed, 3, 5, 4)
    k = delta_complex(a)
    assert reduced_homology(k).is_acyclic()
    assert reduced_homology(alexander_dual(k)).is_acyclic()


def test_affine_requires_f_in_ground():
    om = OrientedMatroid.from_matrix([[1, 2]])
    with pytest.raises(ValueError):
        AffineOM(om, "f")
