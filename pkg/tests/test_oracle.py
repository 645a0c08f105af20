from collections import Counter

from hypothesis import given, settings

from brauer_cartan import (
    BrauerConfiguration,
    build_quiver,
    cartan_matrix,
    enumerate_basis,
    oracle_cartan_matrix,
)
from brauer_cartan.oracle import FULL_CYCLE_CLASS, IDEMPOTENT, PROPER_PREFIX

from conftest import EXAMPLE_CARTAN, configurations


def test_example_counts(ex, ex_quiver):
    assert len(enumerate_basis(ex, ex_quiver, "V3", "V4")) == 2
    assert len(enumerate_basis(ex, ex_quiver, "V1", "V1")) == 4
    assert enumerate_basis(ex, ex_quiver, "V1", "V4") == []


def test_example_matrix(ex):
    assert oracle_cartan_matrix(ex).tolist() == EXAMPLE_CARTAN


def test_diagonal_kinds(ex, ex_quiver):
    basis = enumerate_basis(ex, ex_quiver, "V3", "V3")
    kinds = Counter(b.kind for b in basis)
    assert kinds == {IDEMPOTENT: 1, FULL_CYCLE_CLASS: 1, PROPER_PREFIX: 8}
    (full,) = [b for b in basis if b.kind == FULL_CYCLE_CLASS]
    # two cycles of vertex 1 and two of vertex 3 start at v3, all identified
    assert Counter(c.generator for c in full.merged) == {"1": 2, "3": 2}
    assert full.polygon == "V3"


def test_off_diagonal_paths(ex, ex_quiver):
    basis = enumerate_basis(ex, ex_quiver, "V3", "V4")
    # (a^(3)_1) and (a^(3)_3 a^(3)_1), the two ways from v3 to v4
    words = sorted(tuple(a.label for a in b.arrows) for b in basis)
    assert words == [("a^(3)_1",), ("a^(3)_3", "a^(3)_1")]
    assert all(b.kind == PROPER_PREFIX for b in basis)


def test_double_vertex_polygon():
    # by hand: a1, a2 (proper prefixes), e, and a1a2 ~ a2a1
    cfg = BrauerConfiguration.build(["a"], {"V": ["a", "a"]}, orientation={"a": ["V", "V"]})
    assert oracle_cartan_matrix(cfg).tolist() == [[4]]
    words = sorted(
        tuple(a.label for a in b.arrows)
        for b in enumerate_basis(cfg, None, "V", "V") if b.kind == PROPER_PREFIX
    )
    assert words == [("a^(a)_1",), ("a^(a)_2",)]


def test_set_polygons():
    cfg = BrauerConfiguration.build(
        ["a", "b", "c", "d"],
        {"P": ["a", "b", "c"], "Q": ["b", "c", "d"], "R": ["a", "d"]},
        orientation={"a": ["P", "R"], "b": ["P", "Q"], "c": ["Q", "P"], "d": ["Q", "R"]},
    )
    assert oracle_cartan_matrix(cfg).tolist() == [[2, 2, 1], [2, 2, 1], [1, 1, 2]]


@settings(max_examples=150, deadline=None)
@given(configurations())
def test_oracle_matches_formula(cfg):
    assert oracle_cartan_matrix(cfg) == cartan_matrix(cfg)


@settings(deadline=None)
@given(configurations())
def test_per_generator_decomposition(cfg):
    q = build_quiver(cfg)
    ids = cfg.polygon_ids
    for p in ids:
        for w in ids:
            basis = enumerate_basis(cfg, q, p, w)
            words = [tuple(a.id for a in b.arrows) for b in basis]
            assert len(set(words)) == len(words)
            if p == w:
                continue
            by_gen = Counter(b.generator for b in basis)
            for a in cfg.nontruncated_vertices():
                assert by_gen[a] == cfg.mu(a) * cfg.occ(a, p) * cfg.occ(a, w)


@settings(deadline=None)
@given(configurations())
def test_full_cycle_class_merges_every_cycle_at_the_vertex(cfg):
    q = build_quiver(cfg)
    for p in cfg.polygon_ids:
        full = [b for b in enumerate_basis(cfg, q, p, p) if b.kind == FULL_CYCLE_CLASS]
        assert len(full) == 1
        merged = full[0].merged
        assert len(merged) == sum(cfg.occ(a, p) for a in cfg.nontruncated_vertices())
        assert all(c.anchor.polygon == p for c in merged)
        assert len(full[0]) == cfg.mu(merged[0].generator) * cfg.val(merged[0].generator)
