"""
The four-polygon example, end to end
====================================

Build a configuration with a repeated polygon (V1 and V2 share members),
a polygon holding two vertices twice (V3) and a truncated vertex (4), then
look at its quiver, special cycles, relations and Cartan matrix.
"""

from brauer_cartan import (
    BrauerConfiguration,
    algebra_dimension,
    build_quiver,
    cartan_matrix,
    generate_relations,
    special_cycles,
    validate,
)
from brauer_cartan.formats import matrix_to_table, quiver_to_dot, relations_to_text
from brauer_cartan.quiver import format_path

config = BrauerConfiguration.build(
    vertices=[1, 2, 3, 4],
    polygons={"V1": [1, 2], "V2": [1, 2], "V3": [1, 1, 3, 3], "V4": [3, 4]},
    multiplicity={1: 2, 2: 2},
    orientation={1: ["V1", "V2", "V3", "V3"], 2: ["V1", "V2"], 3: ["V3", "V4", "V3"]},
)
print("violations:", validate(config))
for a in config.vertices:
    print(f"vertex {a}: val={config.val(a)} mu={config.mu(a)} truncated={config.is_truncated(a)}")

# One quiver vertex per polygon, one arrow per step of a successor sequence.
quiver = build_quiver(config)
print(quiver_to_dot(quiver))

# Vertex 3 has three special cycles, two of them starting at v3.
for c in special_cycles(config, quiver, "3"):
    print(f"{c.anchor}: {format_path(c.arrows)}")

relations = generate_relations(config, quiver)
print(relations_to_text(relations))

m = cartan_matrix(config)
print(matrix_to_table(m))
print("dimension:", algebra_dimension(config), "entry sum:", m.total())
