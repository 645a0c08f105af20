"""Special/non-special diagrams and their (alpha, v)-intervals.

Fix a nontruncated vertex ``alpha`` and a polygon ``V`` containing it
``s = occ(alpha, V)`` times.  Walking the closed arrow walk of ``alpha`` we
meet the quiver vertex ``v`` exactly ``s`` times; these occurrences are the
anchors.  The i-th interval is the run of quiver vertices strictly between
anchor i and anchor i+1 (cyclically), and the i-th non-special path is the
arrow path joining those anchors.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .config import BrauerConfiguration
from .errors import SamePolygon, TruncatedVertex, UnknownPolygon, VertexNotInPolygon
from .quiver import Arrow, Quiver, QuiverVertex, SpecialCycle, special_cycles

__all__ = ["IntervalDiagram", "build_diagram", "interval_occurrences"]


@dataclass(frozen=True)
class IntervalDiagram:
    generator: str
    base_polygon: str
    anchors: tuple[int, ...]
    intervals: tuple[tuple[QuiverVertex, ...], ...]
    non_special_paths: tuple[tuple[Arrow, ...], ...]
    cycles: tuple[SpecialCycle, ...] = field(repr=False)
    polygon_ids: tuple[str, ...] = field(compare=False, repr=False)

    @property
    def s(self) -> int:
        return len(self.anchors)


def build_diagram(
    config: BrauerConfiguration, quiver: Quiver, a, p, first: int = 0
) -> IntervalDiagram:
    """Cut the arrow walk of ``a`` at the occurrences of polygon ``p``.

    ``first`` picks which occurrence (in successor-sequence order) is
    labelled the 1st anchor.
    """
    a = str(a)
    if config.is_truncated(a):
        raise TruncatedVertex(a)
    pid = config.polygon(p).id
    if config.occ(a, pid) == 0:
        raise VertexNotInPolygon(a, pid)

    seq = config.orientation[a].polygons
    walk = quiver.by_generator[a]
    t = len(seq)
    positions = [i for i, q in enumerate(seq) if q == pid]
    s = len(positions)
    first %= s
    anchors = tuple(positions[first:] + positions[:first])

    intervals = []
    paths = []
    for r in range(s):
        start = anchors[r]
        gap = (anchors[(r + 1) % s] - start) % t or t
        paths.append(tuple(walk[(start + k) % t] for k in range(gap)))
        intervals.append(tuple(walk[(start + k) % t].target for k in range(gap - 1)))

    rotations = special_cycles(config, quiver, a)
    return IntervalDiagram(
        generator=a,
        base_polygon=pid,
        anchors=anchors,
        intervals=tuple(intervals),
        non_special_paths=tuple(paths),
        cycles=tuple(rotations[i] for i in anchors),
        polygon_ids=config.polygon_ids,
    )


def interval_occurrences(d: IntervalDiagram, w) -> list[int]:
    """Per-interval occurrence counts of the quiver vertex of polygon ``w``."""
    w = str(w)
    if w not in d.polygon_ids:
        raise UnknownPolygon(w)
    if w == d.base_polygon:
        raise SamePolygon(w)
    return [sum(1 for x in seg if x.polygon == w) for seg in d.intervals]
