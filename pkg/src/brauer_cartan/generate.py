"""Seeded random Brauer configurations for fuzzing.

Randomness comes from :class:`random.Random` seeded with the integer seed
(Mersenne Twister MT19937, whose output for a given integer seed is fixed by
the Python language, not by the platform).  Draw order:

1. number of vertices ``n`` in ``[1, max_vertices]`` and of polygons ``m``
   in ``[1, max_polygons]``;
2. for each vertex, then each polygon: a coin flip decides whether the
   vertex occurs, and if so ``occ`` is drawn from ``[1, max_occ]``;
3. a vertex left out of every polygon is put into one random polygon;
4. ``mu`` for each vertex, drawn from ``[1, max_mu]``;
5. each nontruncated vertex lists its polygon occurrences in declaration
   order and the list is shuffled in place with ``Random.shuffle``.

Candidates breaking C2 or C3 are thrown away.  Steps 2-4 are redrawn up to
``SIZE_RETRIES`` times for the same ``(n, m)`` before step 1 is redrawn, so
rejection does not push the sizes towards small polygon counts.
"""

from __future__ import annotations

import random
from dataclasses import dataclass

from .config import BrauerConfiguration, Polygon, SuccessorSequence
from .errors import Unsatisfiable

__all__ = ["GeneratorBounds", "generate_random", "MAX_RETRIES"]

MAX_RETRIES = 10_000
SIZE_RETRIES = 20


@dataclass(frozen=True)
class GeneratorBounds:
    seed: int
    max_vertices: int = 5
    max_polygons: int = 5
    max_occ: int = 3
    max_mu: int = 3

    def __post_init__(self):
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be an unsigned 64-bit integer")
        for name in ("max_vertices", "max_polygons", "max_occ", "max_mu"):
            if getattr(self, name) < 1:
                raise ValueError(f"{name} must be at least 1")


def generate_random(bounds: GeneratorBounds) -> BrauerConfiguration:
    rng = random.Random(bounds.seed)
    for _ in range(MAX_RETRIES):
        n = rng.randint(1, bounds.max_vertices)
        m = rng.randint(1, bounds.max_polygons)
        for _ in range(SIZE_RETRIES):
            config = _draw(rng, bounds, n, m)
            if config is not None:
                return config
    raise Unsatisfiable(f"no valid configuration after {MAX_RETRIES} draws for {bounds}")


def _draw(rng: random.Random, b: GeneratorBounds, n: int, m: int) -> BrauerConfiguration | None:
    vertices = [str(i + 1) for i in range(n)]
    polygon_ids = [f"V{j + 1}" for j in range(m)]

    occ = [[0] * m for _ in range(n)]
    for i in range(n):
        for j in range(m):
            if rng.random() < 0.5:
                occ[i][j] = rng.randint(1, b.max_occ)
    for i in range(n):
        if not any(occ[i]):
            occ[i][rng.randrange(m)] = rng.randint(1, b.max_occ)
    mu = [rng.randint(1, b.max_mu) for _ in range(n)]
    val = [sum(row) for row in occ]

    for j in range(m):
        if sum(occ[i][j] for i in range(n)) < 2:
            return None
        if not any(occ[i][j] and val[i] * mu[i] > 1 for i in range(n)):
            return None

    polygons = tuple(
        Polygon(pid, tuple((vertices[i], occ[i][j]) for i in range(n) if occ[i][j]))
        for j, pid in enumerate(polygon_ids)
    )
    orientation = {}
    for i, a in enumerate(vertices):
        if val[i] == 1 and mu[i] == 1:
            continue
        seq = [polygon_ids[j] for j in range(m) for _ in range(occ[i][j])]
        rng.shuffle(seq)
        orientation[a] = SuccessorSequence(a, tuple(seq))
    multiplicity = {a: mu[i] for i, a in enumerate(vertices)}
    return BrauerConfiguration(tuple(vertices), polygons, multiplicity, orientation)
