from collections import Counter

import pytest
from hypothesis import given, strategies as st

from brauer_cartan import (
    BrauerConfiguration,
    SamePolygon,
    TruncatedVertex,
    UnknownPolygon,
    VertexNotInPolygon,
    build_diagram,
    build_quiver,
    interval_occurrences,
)

from conftest import configurations


def walk_intervals(sequence, p, first=0):
    """Split a successor sequence at the occurrences of ``p`` by direct walking."""
    positions = [i for i, q in enumerate(sequence) if q == p]
    start = positions[first]
    rotated = list(sequence[start:]) + list(sequence[:start])
    out, current = [], None
    for q in rotated:
        if q == p:
            if current is not None:
                out.append(current)
            current = []
        else:
            current.append(q)
    out.append(current)
    return out


def names(d):
    return [[v.polygon for v in seg] for seg in d.intervals]


def test_diagram_of_1_at_v3(ex, ex_quiver):
    d = build_diagram(ex, ex_quiver, "1", "V3")
    assert d.s == 2
    assert names(d) == [[], ["V1", "V2"]]
    assert names(d) == walk_intervals(ex.orientation["1"].polygons, "V3")


def test_diagram_of_3_at_v4(ex, ex_quiver):
    d = build_diagram(ex, ex_quiver, "3", "V4")
    assert d.s == 1
    assert names(d) == [["V3", "V3"]]
    assert [len(q) for q in d.non_special_paths] == [3]


def test_all_anchor_diagram():
    cfg = BrauerConfiguration.build(["a"], {"V": ["a", "a"]}, orientation={"a": ["V", "V"]})
    d = build_diagram(cfg, build_quiver(cfg), "a", "V")
    assert names(d) == [[], []]
    assert [len(q) for q in d.non_special_paths] == [1, 1]


def test_interval_occurrences(ex, ex_quiver):
    d = build_diagram(ex, ex_quiver, "1", "V3")
    assert interval_occurrences(d, "V1") == [0, 1]
    assert interval_occurrences(d, "V4") == [0, 0]
    d = build_diagram(ex, ex_quiver, "3", "V4")
    assert interval_occurrences(d, "V3") == [2]
    assert interval_occurrences(d, "V1") == [0]


def test_errors(ex, ex_quiver):
    d = build_diagram(ex, ex_quiver, "1", "V3")
    with pytest.raises(SamePolygon):
        interval_occurrences(d, "V3")
    with pytest.raises(UnknownPolygon):
        interval_occurrences(d, "V9")
    with pytest.raises(TruncatedVertex):
        build_diagram(ex, ex_quiver, "4", "V4")
    with pytest.raises(VertexNotInPolygon):
        build_diagram(ex, ex_quiver, "2", "V4")


def _triples(cfg):
    for a in cfg.nontruncated_vertices():
        for p in cfg.polygons_containing(a):
            yield a, p


@given(configurations())
def test_intervals_match_direct_walk(cfg):
    q = build_quiver(cfg)
    for a, p in _triples(cfg):
        d = build_diagram(cfg, q, a, p)
        assert names(d) == walk_intervals(cfg.orientation[a].polygons, p)


@given(configurations())
def test_interval_sum_identity(cfg):
    q = build_quiver(cfg)
    for a, p in _triples(cfg):
        d = build_diagram(cfg, q, a, p)
        assert sum(len(seg) for seg in d.intervals) == cfg.val(a) - cfg.occ(a, p)
        for w in cfg.polygon_ids:
            if w != p:
                counts = interval_occurrences(d, w)
                assert all(c >= 0 for c in counts)
                assert sum(counts) == cfg.occ(a, w)


@given(configurations())
def test_non_special_paths_tile_a_special_cycle(cfg):
    q = build_quiver(cfg)
    for a, p in _triples(cfg):
        d = build_diagram(cfg, q, a, p)
        joined = tuple(x for path in d.non_special_paths for x in path)
        assert joined == d.cycles[0].arrows
        for seg, path in zip(d.intervals, d.non_special_paths):
            assert path[0].source.polygon == p == path[-1].target.polygon
            assert tuple(x.target for x in path[:-1]) == seg


@given(configurations(), st.integers(0, 10))
def test_anchor_rotation_permutes_intervals(cfg, shift):
    q = build_quiver(cfg)
    for a, p in _triples(cfg):
        base = build_diagram(cfg, q, a, p)
        k = shift % base.s
        moved = build_diagram(cfg, q, a, p, first=k)
        assert moved.intervals == base.intervals[k:] + base.intervals[:k]
        for w in cfg.polygon_ids:
            if w != p:
                assert Counter(interval_occurrences(moved, w)) == Counter(interval_occurrences(base, w))
