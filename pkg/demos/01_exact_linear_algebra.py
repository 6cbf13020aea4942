"""Exact determinants, kernels and Smith normal forms over the rationals and integers."""

from omalex import RationalMatrix, det, kernel_basis, rank, smith_normal_form

m = RationalMatrix.from_rows([[1, 1, 1, 1, 1], [4, 3, 2, 1, 0]], labels=["1", "2", "3", "4", "f"])
print("matrix:", m)
print("rank:", rank(m))
print("det of the first two columns:", det(m.select_columns([0, 1])))

# the kernel rows are primitive integer vectors; they realize the dual
g = kernel_basis(m)
print("kernel basis (a Gale dual):")
for i in range(g.rows):
    print("  ", [str(x) for x in g.row(i)])

print("invariant factors of [[2,4,4],[-6,6,12],[10,-4,-16]]:",
      smith_normal_form([[2, 4, 4], [-6, 6, 12], [10, -4, -16]]))
print("fractions stay exact:", det([["1/2", "1/3"], ["1/5", "1/7"]]))
