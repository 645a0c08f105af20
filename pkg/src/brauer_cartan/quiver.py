"""The quiver induced by a Brauer configuration, its special cycles and relations.

Every polygon gives one quiver vertex.  A nontruncated vertex ``alpha`` with
successor sequence ``V_1 < ... < V_t`` gives the arrows

    v_1 --a^(alpha)_1--> v_2 --> ... --> v_t --a^(alpha)_t--> v_1

so arrow ordinals start at 1 and the closing arrow is numbered last.  The
special alpha-cycles are the ``t`` rotations of this closed walk.  Relations
are kept symbolic: lists of arrows and cycle powers, never ring elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .config import BrauerConfiguration, require_valid, vertex_set
from .errors import TruncatedVertex, VertexNotInPolygon

__all__ = [
    "QuiverVertex",
    "Arrow",
    "Quiver",
    "SpecialCycle",
    "CyclePower",
    "RelationSet",
    "build_quiver",
    "special_cycles",
    "special_cycles_at",
    "first_arrow",
    "generate_relations",
    "format_path",
]


@dataclass(frozen=True, order=True)
class QuiverVertex:
    index: int
    polygon: str

    def __str__(self):
        return self.polygon


@dataclass(frozen=True)
class Arrow:
    generator: str
    ordinal: int
    source: QuiverVertex
    target: QuiverVertex

    @property
    def id(self) -> tuple[str, int]:
        return (self.generator, self.ordinal)

    @property
    def label(self) -> str:
        return f"a^({self.generator})_{self.ordinal}"

    @property
    def is_loop(self) -> bool:
        return self.source == self.target

    def __str__(self):
        return self.label


def format_path(arrows) -> str:
    return " ".join(a.label for a in arrows) if arrows else "e"


@dataclass(frozen=True)
class Quiver:
    vertices: tuple[QuiverVertex, ...]
    arrows: tuple[Arrow, ...]
    by_generator: dict[str, tuple[Arrow, ...]] = field(compare=False, repr=False)

    def vertex(self, polygon) -> QuiverVertex:
        for v in self.vertices:
            if v.polygon == str(polygon):
                return v
        raise KeyError(polygon)

    def arrow(self, generator, ordinal: int) -> Arrow:
        return self.by_generator[str(generator)][ordinal - 1]

    def out_arrows(self, v: QuiverVertex) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def edge_count(self, source, target) -> int:
        return sum(1 for a in self.arrows if a.source.polygon == str(source)
                   and a.target.polygon == str(target))


@dataclass(frozen=True)
class SpecialCycle:
    """Rotation ``rotation`` (0-based) of the closed arrow walk of ``generator``.

    Two cycles are equal iff they share generator and rotation; rotations
    anchored at the same quiver vertex stay distinct.
    """

    generator: str
    rotation: int
    anchor: QuiverVertex = field(compare=False)
    arrows: tuple[Arrow, ...] = field(compare=False, repr=False)

    def __len__(self):
        return len(self.arrows)

    def power(self, exponent: int) -> tuple[Arrow, ...]:
        return self.arrows * exponent

    def __str__(self):
        return f"C[{self.generator},{self.rotation + 1}]@{self.anchor}"


@dataclass(frozen=True)
class CyclePower:
    cycle: SpecialCycle
    exponent: int

    def path(self) -> tuple[Arrow, ...]:
        return self.cycle.power(self.exponent)

    def __str__(self):
        return f"({format_path(self.cycle.arrows)})^{self.exponent}"


@dataclass(frozen=True)
class RelationSet:
    type_one: tuple[tuple[CyclePower, CyclePower], ...]
    type_two: tuple[tuple[SpecialCycle, int, Arrow], ...]
    type_three: tuple[tuple[Arrow, Arrow], ...]

    def monomials(self) -> list[tuple[Arrow, ...]]:
        """Type two and type three relations as arrow sequences."""
        out = [c.power(mu) + (f,) for c, mu, f in self.type_two]
        out.extend((a, b) for a, b in self.type_three)
        return out

    def __len__(self):
        return len(self.type_one) + len(self.type_two) + len(self.type_three)


def build_quiver(config: BrauerConfiguration) -> Quiver:
    """Induced quiver of a valid configuration."""
    require_valid(config)
    vertices = tuple(QuiverVertex(i, p.id) for i, p in enumerate(config.polygons))
    at = {v.polygon: v for v in vertices}
    arrows = []
    by_generator = {}
    for alpha in config.nontruncated_vertices():
        seq = config.orientation[alpha].polygons
        t = len(seq)
        walk = tuple(
            Arrow(alpha, j + 1, at[seq[j]], at[seq[(j + 1) % t]]) for j in range(t)
        )
        by_generator[alpha] = walk
        arrows.extend(walk)
    return Quiver(vertices, tuple(arrows), by_generator)


def special_cycles(config: BrauerConfiguration, quiver: Quiver, a) -> list[SpecialCycle]:
    """All ``val(a)`` special a-cycles, ordered by starting position."""
    a = str(a)
    if config.is_truncated(a):
        raise TruncatedVertex(a)
    walk = quiver.by_generator[a]
    return [
        SpecialCycle(a, l, walk[l].source, walk[l:] + walk[:l]) for l in range(len(walk))
    ]


def special_cycles_at(config: BrauerConfiguration, quiver: Quiver, a, p) -> list[SpecialCycle]:
    """Special a-cycles starting at the quiver vertex of polygon ``p``.

    There are exactly ``occ(a, p)`` of them.
    """
    if config.is_truncated(a):
        raise TruncatedVertex(a)
    pid = config.polygon(p).id
    if config.occ(a, pid) == 0:
        raise VertexNotInPolygon(a, pid)
    return [c for c in special_cycles(config, quiver, a) if c.anchor.polygon == pid]


def first_arrow(c: SpecialCycle) -> Arrow:
    return c.arrows[0]


def _follows(a: Arrow, b: Arrow, valences: dict[str, int]) -> bool:
    # b comes right after a in the cyclic arrow order of a's generator
    return a.generator == b.generator and b.ordinal == a.ordinal % valences[a.generator] + 1


def generate_relations(config: BrauerConfiguration, quiver: Quiver | None = None) -> RelationSet:
    """Symbolic relation set of the Brauer configuration algebra.

    * type one: ``C^mu(alpha) - D^mu(beta)`` for distinct special cycles C, D
      anchored at the same quiver vertex, one entry per unordered pair;
    * type two: ``C^mu(alpha) f(C)`` for every special cycle C;
    * type three: composable arrow pairs ``ab`` where b does not directly
      follow a on any special cycle (the wraparound pair counts as following).
    """
    require_valid(config)
    if quiver is None:
        quiver = build_quiver(config)
    nontruncated = config.nontruncated_vertices()
    cycles = {a: special_cycles(config, quiver, a) for a in nontruncated}

    type_one = []
    for poly in config.polygons:
        support = vertex_set(poly)
        anchored = [
            CyclePower(c, config.mu(a))
            for a in nontruncated if a in support
            for c in cycles[a] if c.anchor.polygon == poly.id
        ]
        type_one.extend(combinations(anchored, 2))

    type_two = [
        (c, config.mu(a), first_arrow(c)) for a in nontruncated for c in cycles[a]
    ]

    valences = {a: config.val(a) for a in nontruncated}
    type_three = [
        (x, y)
        for x in quiver.arrows
        for y in quiver.arrows
        if x.target == y.source and not _follows(x, y, valences)
    ]
    return RelationSet(tuple(type_one), tuple(type_two), tuple(type_three))
