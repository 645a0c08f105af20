"""Brauer configurations: vertices, polygons, multiplicities and orientation.

A configuration is the tuple ``(vertices, polygons, multiplicity,
orientation)``.  Polygons are labeled multisets of vertices; two polygons
with the same members are still different polygons.  The orientation holds
one successor sequence per nontruncated vertex, that is a linear listing of
the polygons containing the vertex (with repetitions) read cyclically.

Everything here is immutable.  Axiom breaches are not exceptions: they are
collected by :func:`validate` as :class:`Violation` records.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

from .errors import ConfigurationError, InvalidConfiguration, UnknownPolygon, UnknownVertex

__all__ = [
    "Polygon",
    "SuccessorSequence",
    "BrauerConfiguration",
    "Violation",
    "VIOLATION_KINDS",
    "occ",
    "val",
    "is_truncated",
    "vertex_set",
    "polygons_containing",
    "validate",
    "require_valid",
]

VIOLATION_KINDS = (
    "C1",
    "C2",
    "C3",
    "OrientationMultiplicityMismatch",
    "OrientationOnTruncated",
    "MissingOrientation",
    "UnknownId",
)


def _name(value) -> str:
    name = str(value)
    if not name:
        raise ConfigurationError("identifiers must be nonempty")
    return name


@dataclass(frozen=True, eq=False)
class Polygon:
    """A labeled multiset of vertex names.

    ``members`` is the canonical form: a tuple of ``(vertex, count)`` pairs
    sorted by vertex name, every count positive.  Equality and hashing use
    the label only.
    """

    id: str
    members: tuple[tuple[str, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "id", _name(self.id))
        counts: dict[str, int] = {}
        for vertex, count in self.members:
            vertex = _name(vertex)
            count = int(count)
            if count <= 0:
                raise ConfigurationError(
                    f"polygon {self.id!r}: count of {vertex!r} must be positive, got {count}"
                )
            counts[vertex] = counts.get(vertex, 0) + count
        object.__setattr__(self, "members", tuple(sorted(counts.items())))

    @classmethod
    def from_vertices(cls, id, vertices: Iterable) -> "Polygon":
        """Build a polygon from a flat vertex listing, repetitions allowed."""
        return cls(id, tuple(Counter(_name(v) for v in vertices).items()))

    def count(self, vertex: str) -> int:
        for name, n in self.members:
            if name == vertex:
                return n
        return 0

    @property
    def size(self) -> int:
        return sum(n for _, n in self.members)

    def elements(self) -> list[str]:
        """Flat listing of the members in canonical order."""
        return [v for v, n in self.members for _ in range(n)]

    def __eq__(self, other):
        if not isinstance(other, Polygon):
            return NotImplemented
        return self.id == other.id

    def __hash__(self):
        return hash(("Polygon", self.id))

    def __repr__(self):
        return f"Polygon({self.id!r}, {{{', '.join(self.elements())}}})"


@dataclass(frozen=True)
class SuccessorSequence:
    """Cyclic order of polygon occurrences at one vertex."""

    vertex: str
    polygons: tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertex", _name(self.vertex))
        object.__setattr__(self, "polygons", tuple(_name(p) for p in self.polygons))

    def __len__(self):
        return len(self.polygons)

    def __str__(self):
        return f"{self.vertex} : {' < '.join(self.polygons)}"


@dataclass(frozen=True)
class Violation:
    kind: str
    location: str
    message: str = ""

    def __str__(self):
        text = f"{self.kind} at {self.location}"
        return f"{text}: {self.message}" if self.message else text


@dataclass(frozen=True, eq=False)
class BrauerConfiguration:
    """An (unvalidated) Brauer configuration.

    Construction only checks structure: identifiers are unique and nonempty,
    counts and multiplicities are positive.  Use :func:`validate` for the
    axioms, or :meth:`build` for the usual keyword-style constructor.
    """

    vertices: tuple[str, ...]
    polygons: tuple[Polygon, ...]
    multiplicity: Mapping[str, int] = field(default_factory=dict)
    orientation: Mapping[str, SuccessorSequence] = field(default_factory=dict)

    def __post_init__(self):
        vertices = tuple(_name(v) for v in self.vertices)
        _reject_duplicates("vertex", vertices)
        polygons = tuple(self.polygons)
        _reject_duplicates("polygon", [p.id for p in polygons])

        mu = {}
        for vertex, value in dict(self.multiplicity).items():
            value = int(value)
            if value <= 0:
                raise ConfigurationError(f"multiplicity of {vertex!r} must be positive, got {value}")
            mu[_name(vertex)] = value
        orientation = {}
        for vertex, seq in dict(self.orientation).items():
            if not isinstance(seq, SuccessorSequence):
                seq = SuccessorSequence(vertex, tuple(seq))
            if seq.vertex != _name(vertex):
                raise ConfigurationError(
                    f"orientation key {vertex!r} holds a sequence for {seq.vertex!r}"
                )
            orientation[seq.vertex] = seq

        object.__setattr__(self, "vertices", vertices)
        object.__setattr__(self, "polygons", polygons)
        object.__setattr__(self, "multiplicity", MappingProxyType(mu))
        object.__setattr__(self, "orientation", MappingProxyType(orientation))

    @classmethod
    def build(
        cls,
        vertices: Iterable,
        polygons: Mapping[str, Iterable],
        multiplicity: Mapping | None = None,
        orientation: Mapping[str, Sequence] | None = None,
    ) -> "BrauerConfiguration":
        """Convenience constructor from plain lists and dicts.

        >>> cfg = BrauerConfiguration.build(
        ...     ["a"], {"V": ["a", "a"]}, orientation={"a": ["V", "V"]})
        >>> cfg.val("a")
        2
        """
        return cls(
            tuple(vertices),
            tuple(Polygon.from_vertices(pid, members) for pid, members in polygons.items()),
            dict(multiplicity or {}),
            {_name(k): SuccessorSequence(k, tuple(v)) for k, v in (orientation or {}).items()},
        )

    # -- lookups ---------------------------------------------------------

    @cached_property
    def _vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def _polygon_index(self) -> dict[str, int]:
        return {p.id: i for i, p in enumerate(self.polygons)}

    @cached_property
    def _valences(self) -> dict[str, int]:
        total = Counter()
        for p in self.polygons:
            for v, n in p.members:
                total[v] += n
        return {v: total[v] for v in self.vertices}

    def _check_vertex(self, a) -> str:
        a = str(a)
        if a not in self._vertex_index:
            raise UnknownVertex(a)
        return a

    def polygon(self, p) -> Polygon:
        if isinstance(p, Polygon):
            p = p.id
        try:
            return self.polygons[self._polygon_index[str(p)]]
        except KeyError:
            raise UnknownPolygon(p) from None

    def polygon_index(self, p) -> int:
        return self._polygon_index[self.polygon(p).id]

    @property
    def polygon_ids(self) -> tuple[str, ...]:
        return tuple(p.id for p in self.polygons)

    def mu(self, a) -> int:
        return self.multiplicity.get(self._check_vertex(a), 1)

    def occ(self, a, p) -> int:
        a = self._check_vertex(a)
        return self.polygon(p).count(a)

    def val(self, a) -> int:
        return self._valences[self._check_vertex(a)]

    def is_truncated(self, a) -> bool:
        return self.val(a) == 1 and self.mu(a) == 1

    def nontruncated_vertices(self) -> list[str]:
        return [a for a in self.vertices if not self.is_truncated(a)]

    def polygons_containing(self, a) -> list[str]:
        a = self._check_vertex(a)
        return [p.id for p in self.polygons if p.count(a) > 0]

    def successor_sequence(self, a) -> SuccessorSequence:
        a = self._check_vertex(a)
        return self.orientation[a]

    # -- canonical form ----------------------------------------------------

    def canonical(self) -> tuple:
        """Hashable canonical form: declaration orders kept, defaults filled in."""
        return (
            self.vertices,
            tuple((p.id, p.members) for p in self.polygons),
            tuple((a, self.multiplicity.get(a, 1)) for a in self.vertices),
            tuple(sorted((a, s.polygons) for a, s in self.orientation.items())),
        )

    def __eq__(self, other):
        if not isinstance(other, BrauerConfiguration):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    @cached_property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(_collect_violations(self))


def _reject_duplicates(kind: str, names: Sequence[str]) -> None:
    seen = set()
    for name in names:
        if name in seen:
            raise ConfigurationError(f"duplicate {kind} id {name!r}")
        seen.add(name)


# -- module-level operations ------------------------------------------------


def occ(config: BrauerConfiguration, a, p) -> int:
    """Number of times vertex ``a`` occurs in polygon ``p``."""
    return config.occ(a, p)


def val(config: BrauerConfiguration, a) -> int:
    """Total number of occurrences of ``a`` over all polygons."""
    return config.val(a)


def is_truncated(config: BrauerConfiguration, a) -> bool:
    return config.is_truncated(a)


def vertex_set(p: Polygon) -> frozenset[str]:
    """Support of a polygon's member multiset."""
    return frozenset(v for v, _ in p.members)


def polygons_containing(config: BrauerConfiguration, a) -> list[str]:
    """Polygons in which ``a`` occurs, in declaration order."""
    return config.polygons_containing(a)


def validate(config: BrauerConfiguration) -> list[Violation]:
    """Return every axiom breach of ``config``; an empty list means valid."""
    return list(config.violations)


def require_valid(config: BrauerConfiguration) -> BrauerConfiguration:
    if config.violations:
        raise InvalidConfiguration(config.violations)
    return config


def _collect_violations(config: BrauerConfiguration) -> list[Violation]:
    out: list[Violation] = []
    known_vertices = set(config.vertices)
    known_polygons = set(config.polygon_ids)

    for p in config.polygons:
        for v, _ in p.members:
            if v not in known_vertices:
                out.append(Violation("UnknownId", f"polygon {p.id}", f"member {v!r} is not a vertex"))
    for v in config.multiplicity:
        if v not in known_vertices:
            out.append(Violation("UnknownId", f"multiplicity {v}", f"{v!r} is not a vertex"))
    for v, seq in config.orientation.items():
        if v not in known_vertices:
            out.append(Violation("UnknownId", f"orientation {v}", f"{v!r} is not a vertex"))
        for pid in seq.polygons:
            if pid not in known_polygons:
                out.append(
                    Violation("UnknownId", f"orientation {v}", f"{pid!r} is not a polygon")
                )

    for a in config.vertices:
        if config.val(a) == 0:
            out.append(Violation("C1", f"vertex {a}", "vertex occurs in no polygon"))

    for p in config.polygons:
        if p.size < 2:
            out.append(Violation("C2", f"polygon {p.id}", f"polygon has {p.size} member(s)"))
        heavy = [
            v for v, _ in p.members
            if v in known_vertices and config.val(v) * config.mu(v) > 1
        ]
        if not heavy:
            out.append(Violation("C3", f"polygon {p.id}", "no vertex with val*mu > 1"))

    for a in config.vertices:
        seq = config.orientation.get(a)
        valence = config.val(a)
        if valence == 0:
            if seq is not None and len(seq):
                out.append(
                    Violation("OrientationMultiplicityMismatch", f"vertex {a}",
                              "vertex occurs in no polygon but has a successor sequence")
                )
            continue
        if config.is_truncated(a):
            if seq is not None:
                out.append(Violation("OrientationOnTruncated", f"vertex {a}",
                                     "truncated vertices take no successor sequence"))
            continue
        if seq is None:
            out.append(Violation("MissingOrientation", f"vertex {a}",
                                 "nontruncated vertex has no successor sequence"))
            continue
        expected = Counter({p.id: p.count(a) for p in config.polygons if p.count(a)})
        listed = Counter(seq.polygons)
        if listed != expected:
            bad = sorted(set(expected) | set(listed), key=str)
            detail = ", ".join(
                f"{pid}: listed {listed[pid]} expected {expected[pid]}"
                for pid in bad if listed[pid] != expected[pid]
            )
            out.append(Violation("OrientationMultiplicityMismatch", f"vertex {a}", detail))
    return out
