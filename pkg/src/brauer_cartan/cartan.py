"""Cartan matrix of a Brauer configuration algebra from combinatorial data.

For polygons V, W with quiver vertices v, w::

    c(v, v) = 2 + sum_{alpha in supp V} occ(alpha,V) * (occ(alpha,V) * mu(alpha) - 1)
    c(v, w) = sum_{alpha in supp V & supp W} mu(alpha) * occ(alpha,V) * occ(alpha,W)

All arithmetic is on Python ints, so entries never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .config import BrauerConfiguration, require_valid, vertex_set
from .errors import SamePolygon

__all__ = [
    "CartanMatrix",
    "cartan_diagonal",
    "cartan_off_diagonal",
    "cartan_matrix",
    "algebra_dimension",
    "hom_nonzero",
]


@dataclass(frozen=True)
class CartanMatrix:
    """Square matrix of exact nonnegative ints indexed by polygon labels."""

    labels: tuple[str, ...]
    entries: tuple[tuple[int, ...], ...]

    @property
    def order(self) -> int:
        return len(self.labels)

    def __getitem__(self, key):
        i, j = key
        if isinstance(i, str):
            i = self.labels.index(i)
        if isinstance(j, str):
            j = self.labels.index(j)
        return self.entries[i][j]

    def tolist(self) -> list[list[int]]:
        return [list(row) for row in self.entries]

    def as_array(self, dtype=np.int64) -> np.ndarray:
        """Entries as a numpy array.

        With a fixed-width dtype an ``OverflowError`` is raised rather than
        wrapping; pass ``dtype=object`` to keep Python ints.
        """
        if dtype is not object:
            info = np.iinfo(dtype)
            if any(x > info.max for row in self.entries for x in row):
                raise OverflowError(f"Cartan entry does not fit in {np.dtype(dtype)}")
        return np.array(self.entries, dtype=dtype).reshape(self.order, self.order)

    def total(self) -> int:
        return sum(sum(row) for row in self.entries)

    def is_symmetric(self) -> bool:
        n = self.order
        return all(self.entries[i][j] == self.entries[j][i] for i in range(n) for j in range(i))

    def first_difference(self, other: "CartanMatrix"):
        """``(i, j, mine, theirs)`` for the first differing entry, else None."""
        if self.labels != other.labels:
            raise ValueError("matrices are indexed by different polygons")
        for i, (r1, r2) in enumerate(zip(self.entries, other.entries)):
            for j, (x, y) in enumerate(zip(r1, r2)):
                if x != y:
                    return i, j, x, y
        return None


def cartan_diagonal(config: BrauerConfiguration, p) -> int:
    poly = config.polygon(p)
    require_valid(config)
    return 2 + sum(n * (n * config.mu(a) - 1) for a, n in poly.members)


def cartan_off_diagonal(config: BrauerConfiguration, p, q) -> int:
    v, w = config.polygon(p), config.polygon(q)
    if v.id == w.id:
        raise SamePolygon(v.id)
    require_valid(config)
    shared = vertex_set(v) & vertex_set(w)
    return sum(config.mu(a) * v.count(a) * w.count(a) for a in shared)


def cartan_matrix(config: BrauerConfiguration) -> CartanMatrix:
    require_valid(config)
    ids = config.polygon_ids
    rows = []
    for i, p in enumerate(ids):
        rows.append(tuple(
            cartan_diagonal(config, p) if i == j else cartan_off_diagonal(config, p, q)
            for j, q in enumerate(ids)
        ))
    return CartanMatrix(ids, tuple(rows))


def algebra_dimension(config: BrauerConfiguration) -> int:
    """Dimension of the algebra, ``2|polygons| + sum val(a) (mu(a) val(a) - 1)``."""
    require_valid(config)
    total = 2 * len(config.polygons)
    for a in config.vertices:
        t = config.val(a)
        total += t * (config.mu(a) * t - 1)
    return total


def hom_nonzero(config: BrauerConfiguration, p, q) -> bool:
    """Whether two distinct polygons share a vertex (equivalently, a nonzero entry)."""
    v, w = config.polygon(p), config.polygon(q)
    if v.id == w.id:
        raise SamePolygon(v.id)
    return bool(vertex_set(v) & vertex_set(w))
