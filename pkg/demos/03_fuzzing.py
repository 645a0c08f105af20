"""
Random configurations against the path-enumeration oracle
=========================================================

Draw seeded configurations, compare the closed-form Cartan matrix with the
brute-force one, and look at the set-polygon special case where every
off-diagonal entry is the size of an intersection.
"""

import numpy as np

from brauer_cartan import (
    GeneratorBounds,
    cartan_matrix,
    generate_random,
    oracle_cartan_matrix,
    serialize,
)
from brauer_cartan.fuzz import run_fuzz

config = generate_random(GeneratorBounds(seed=11))
print(serialize(config))
closed, brute = cartan_matrix(config), oracle_cartan_matrix(config)
print(closed.as_array())
print("oracle agrees:", closed == brute)

print(run_fuzz(seed=0, count=200))

# Set polygons with mu = 1: diagonal 2, off-diagonal |Vi & Vj|.
config = generate_random(GeneratorBounds(seed=3, max_occ=1, max_mu=1))
members = [set(p.elements()) for p in config.polygons]
sizes = np.array([[len(a & b) for b in members] for a in members])
np.fill_diagonal(sizes, 2)
print(cartan_matrix(config).as_array())
print("matches intersections:", (cartan_matrix(config).as_array() == sizes).all())
