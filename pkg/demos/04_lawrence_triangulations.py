"""Delta(M, f) for the five-point example, its Stanley-Reisner ideal and the Lawrence facet count."""

from omalex import AffineOM, delta_complex, dual_affine, facet_count_check, minor, stanley_reisner, theorem1_check
from omalex.lawrence import lawrence_matrix, pair_order_key

a = AffineOM.from_matrix([[1, 1, 1, 1, 1], [4, 3, 2, 1, 0]], "f", ["1", "2", "3", "4", "f"])
b = dual_affine(a)
elems = a.elements

for name, aff in (("A", a), ("B", b)):
    k = delta_complex(aff)
    print(f"Delta({name}, f):")
    for facet in k.sorted_facets():
        print("  ", "{" + ", ".join(facet) + "}")
    print("  Stanley-Reisner:", stanley_reisner(k, key=lambda v: pair_order_key(v, elems)))

print("theorem check:", theorem1_check(a).ok)

bp = minor(b.om, (), {"f"})
print("Lawrence matrix of B/f:")
print(lawrence_matrix(bp.realization.with_labels(bp.ground)))
r = facet_count_check(bp)
print(f"n - l + 2c = {r.n} - {r.l} + 2*{r.c} = {r.predicted}; counted {r.enumerated}")
