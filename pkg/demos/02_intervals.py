"""
Intervals and off-diagonal Cartan entries
=========================================

Cutting the arrow walk of a vertex at the occurrences of one polygon gives
the intervals.  Counting another polygon inside them recovers its
occurrence number, which is what makes the off-diagonal entries
``mu(a) occ(a,V) occ(a,W)``.
"""

from brauer_cartan import (
    BrauerConfiguration,
    build_diagram,
    build_quiver,
    cartan_off_diagonal,
    enumerate_basis,
    interval_occurrences,
)
from brauer_cartan.quiver import format_path

# A vertex "x" spread over three polygons, twice in P.
config = BrauerConfiguration.build(
    vertices=["x", "y"],
    polygons={"P": ["x", "x", "y"], "Q": ["x", "y"], "R": ["x", "x"]},
    multiplicity={"x": 2},
    orientation={"x": ["P", "Q", "R", "P", "R"], "y": ["P", "Q"]},
)
quiver = build_quiver(config)

d = build_diagram(config, quiver, "x", "P")
for i, (segment, path) in enumerate(zip(d.intervals, d.non_special_paths), 1):
    print(f"interval {i}: {[v.polygon for v in segment]}   path {format_path(path)}")

for w in ("Q", "R"):
    counts = interval_occurrences(d, w)
    print(f"{w}: per interval {counts}, total {sum(counts)} = occ(x,{w}) = {config.occ('x', w)}")

# The basis paths from P to R, grouped by the vertex generating them.
basis = enumerate_basis(config, quiver, "P", "R")
for b in basis:
    print(f"  {b.generator}: {format_path(b.arrows)}")
print("paths:", len(basis), "formula:", cartan_off_diagonal(config, "P", "R"))
