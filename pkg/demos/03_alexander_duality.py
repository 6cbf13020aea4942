"""Alexander duals and integer (co)homology of small complexes."""

from omalex import alexander_dual, alexander_duality_check, complex_from_facets, reduced_cohomology, reduced_homology

bipyramid = complex_from_facets(list("12345"), [list(f) for f in ["124", "234", "134", "125", "235", "135"]])
dual = alexander_dual(bipyramid)
print("bipyramid:", reduced_homology(bipyramid))
print("its dual:", dual.sorted_facets(), "->", reduced_homology(dual))

rp2 = complex_from_facets(list("123456"),
                          [list(f) for f in ["124", "126", "135", "136", "145", "234", "235", "256", "346", "456"]])
print("projective plane homology:", reduced_homology(rp2))
print("projective plane cohomology:", reduced_cohomology(rp2))

report = alexander_duality_check(rp2)
print("duality check on the projective plane:", report.ok)
for i, j, h, c, same in report.degrees:
    print(f"  H~_{i} = {h}  vs  H~^{j} of dual = {c}")
