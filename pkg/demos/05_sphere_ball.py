"""Lifting subdivisions, the sphere/ball dichotomy and how duality swaps families."""

from omalex import AffineOM, classify_families, dual_affine, lifting_subdivision, sphere_ball_check

two_points = AffineOM.from_matrix([[1, -1, 0], [1, 0, 1]], "3")
five_points = AffineOM.from_matrix([[1, 1, 1, 1, 1], [4, 3, 2, 1, 0]], "f", ["1", "2", "3", "4", "f"])

for name, aff in (("two points", two_points), ("five points", five_points)):
    r = sphere_ball_check(aff)
    print(f"{name}: subdivision {lifting_subdivision(aff).sorted_facets()}, predicted {r.predicted}")
    print(f"  dual facets {r.dual_facets}, homology {r.dual_homology}, ok={r.ok}")
    print(f"  {r.note}")

pyramid = AffineOM.from_matrix([[1, 1, 0, 0], [0, 1, 1, 1]], "4")
fl = classify_families(pyramid)
dl = classify_families(dual_affine(pyramid))
print("pyramid families:", sorted(fl.families))
print("dual families:   ", sorted(dl.families))
print("matches the predicted swap:", dl == fl.alexander_dual())
