"""Tour: the strata of one ambient/quotient type.

Enumerates every invariant-subspace object of type
beta = (4,3,3,2,1), gamma = (3,2,1,1), prints each one with its arc
diagram, subspace type, crossing number and stratum dimension, then
shows the poset extrema and writes the Hasse diagram as DOT.

Run:  python demos/strata_and_dimensions.py
"""

from arcdeg import (
    alpha_of,
    crossings,
    diagram_of_object,
    enumerate_objects,
    extrema,
    hasse,
    hasse_dot,
    stratum_dim,
)
from arcdeg.partitions import Partition

beta = Partition.of(4, 3, 3, 2, 1)
gamma = Partition.of(3, 2, 1, 1)

print(f"type: beta = ({beta.to_text()}), gamma = ({gamma.to_text()})\n")

objects = enumerate_objects(beta, gamma)
print(f"{len(objects)} objects, largest dimension first:\n")
for obj in sorted(objects, key=stratum_dim, reverse=True):
    d = diagram_of_object(obj)
    print(f"  dim {stratum_dim(obj)}  x={crossings(d)}  alpha=({alpha_of(obj).to_text()})")
    print(f"      {obj.to_text()}")
    print(f"      {d.to_text()}")

maximal, minimal = extrema(beta, gamma)
print(f"\nunique maximal element (only poles and loops): {maximal[0].to_text()}")
print(f"minimal elements ({len(minimal)}):")
for obj in minimal:
    print(f"  {obj.to_text()}")

print(f"\ncover edges of the arc order ({len(hasse(beta, gamma))}):")
for u, v in hasse(beta, gamma):
    print(f"  {diagram_of_object(u).to_text():40s} -> {diagram_of_object(v).to_text()}")

path = "strata_poset.dot"
with open(path, "w", encoding="utf-8") as fh:
    fh.write(hasse_dot(beta, gamma))
print(f"\nDOT export written to {path} (render with: dot -Tpdf {path} -o poset.pdf)")
