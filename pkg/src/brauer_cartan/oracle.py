"""Brute-force Cartan entries by enumerating basis paths of the quiver.

This module never touches the closed-form formulas.  Starting from the
quiver vertex of a polygon it walks every path of the induced quiver,
discarding a path as soon as it contains a monomial relation (a type three
pair or a type two word ``C^mu f(C)``).  What survives are the prefixes of
the cycle powers ``C^mu``.  The only identification applied afterwards is
the one imposed by type one relations: all full cycle powers at one quiver
vertex are merged into a single class, via union-find over the type one
pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import CartanMatrix
from .config import BrauerConfiguration, require_valid
from .quiver import Arrow, Quiver, QuiverVertex, RelationSet, SpecialCycle, build_quiver, generate_relations

__all__ = ["BasisPath", "enumerate_basis", "oracle_cartan_matrix", "IDEMPOTENT", "PROPER_PREFIX", "FULL_CYCLE_CLASS"]

IDEMPOTENT = "Idempotent"
PROPER_PREFIX = "ProperPrefix"
FULL_CYCLE_CLASS = "FullCycleClass"


@dataclass(frozen=True)
class BasisPath:
    arrows: tuple[Arrow, ...]
    source: QuiverVertex
    target: QuiverVertex
    kind: str
    # FullCycleClass only: the polygon and every cycle power merged into it
    polygon: str | None = None
    merged: tuple[SpecialCycle, ...] = field(default=(), repr=False)

    @property
    def generator(self) -> str | None:
        return self.arrows[0].generator if self.arrows else None

    def __len__(self):
        return len(self.arrows)


class _UnionFind:
    def __init__(self):
        self.parent = {}

    def find(self, x):
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[ry] = rx


class _Enumerator:
    def __init__(self, config: BrauerConfiguration, quiver: Quiver, relations: RelationSet):
        self.config = config
        self.quiver = quiver
        self.forbidden_pairs = {(a.id, b.id) for a, b in relations.type_three}
        self.forbidden_words = {}
        for c, mu, f in relations.type_two:
            word = tuple(x.id for x in c.power(mu)) + (f.id,)
            self.forbidden_words.setdefault(len(word), set()).add(word)
        self.max_length = max(self.forbidden_words, default=1)

        # the words C^mu, so a surviving path can be recognised as a full power
        self.full_powers = {}
        classes = _UnionFind()
        for c, mu, _ in relations.type_two:
            self.full_powers[tuple(x.id for x in c.power(mu))] = c
            classes.find(c)
        for c, d in relations.type_one:
            classes.union(c.cycle, d.cycle)
        self.classes = classes
        self.out = {v: quiver.out_arrows(v) for v in quiver.vertices}

    def _killed(self, word: tuple) -> bool:
        if len(word) >= 2 and word[-2:] in self.forbidden_pairs:
            return True
        for n, words in self.forbidden_words.items():
            if len(word) >= n and word[-n:] in words:
                return True
        return False

    def paths_from(self, v: QuiverVertex) -> list[tuple[Arrow, ...]]:
        """Every nonempty path from ``v`` containing no monomial relation."""
        found = []
        stack = [((), ())]
        while stack:
            path, word = stack.pop()
            here = path[-1].target if path else v
            for b in self.out[here]:
                new_word = word + (b.id,)
                if self._killed(new_word):
                    continue
                if len(new_word) > self.max_length:
                    # every word this long contains some C^mu f(C)
                    raise AssertionError(f"unbounded path {new_word}")
                new_path = path + (b,)
                found.append(new_path)
                stack.append((new_path, new_word))
        return found

    def basis_from(self, v: QuiverVertex) -> list[BasisPath]:
        basis = [BasisPath((), v, v, IDEMPOTENT)]
        seen = set()
        full = {}
        for path in self.paths_from(v):
            word = tuple(a.id for a in path)
            if word in seen:
                raise AssertionError(f"path enumerated twice: {word}")
            seen.add(word)
            cycle = self.full_powers.get(word)
            if cycle is None:
                basis.append(BasisPath(path, v, path[-1].target, PROPER_PREFIX))
            else:
                full.setdefault(self.classes.find(cycle), []).append((cycle, path))
        for members in full.values():
            for cycle, path in members:
                expected = self.config.mu(cycle.generator) * self.config.val(cycle.generator)
                if len(path) != expected:
                    raise AssertionError(f"merged power {cycle} has length {len(path)} != {expected}")
            cycle, path = members[0]
            basis.append(BasisPath(
                path, v, v, FULL_CYCLE_CLASS,
                polygon=v.polygon, merged=tuple(c for c, _ in members),
            ))
        return basis


def enumerate_basis(config: BrauerConfiguration, quiver: Quiver | None, p, q) -> list[BasisPath]:
    """Basis paths of the algebra from the vertex of ``p`` to the vertex of ``q``."""
    require_valid(config)
    source, target = config.polygon(p).id, config.polygon(q).id
    if quiver is None:
        quiver = build_quiver(config)
    enum = _Enumerator(config, quiver, generate_relations(config, quiver))
    return [b for b in enum.basis_from(quiver.vertex(source)) if b.target.polygon == target]


def oracle_cartan_matrix(config: BrauerConfiguration) -> CartanMatrix:
    """Cartan matrix whose (i, j) entry counts basis paths from polygon i to polygon j."""
    require_valid(config)
    quiver = build_quiver(config)
    enum = _Enumerator(config, quiver, generate_relations(config, quiver))
    rows = []
    for v in quiver.vertices:
        counts = dict.fromkeys(config.polygon_ids, 0)
        for b in enum.basis_from(v):
            counts[b.target.polygon] += 1
        rows.append(tuple(counts[q] for q in config.polygon_ids))
    return CartanMatrix(config.polygon_ids, tuple(rows))
