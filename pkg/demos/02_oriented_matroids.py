"""Signed circuits and cocircuits, duality, reorientation and the painting dichotomy."""

from omalex import OrientedMatroid, Painting, dual, four_painting_witness, minor, reorient, structural_flags
from omalex.om import sorted_vectors

a = OrientedMatroid.from_matrix([[1, 1, 1, 1, 1], [4, 3, 2, 1, 0]], labels=["1", "2", "3", "4", "f"])
print("cocircuits with f positive:")
for y in sorted_vectors(a.cocircuits):
    if y["f"] > 0:
        print("  ", y)

b = reorient(dual(a), {"f"})
print("dual reoriented at f, cocircuits with f positive:")
for y in sorted_vectors(b.cocircuits):
    if y["f"] > 0:
        print("  ", y)

print("flags of A:", structural_flags(a))
print("A/f realized by:", minor(a, (), {"f"}).realization)

p = Painting(B={"f"}, W=set(), G={"1", "2", "3", "4"}, R=set(), e="f")
print("painting witness:", four_painting_witness(a, p))
