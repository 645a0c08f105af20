"""Reading and writing configuration documents.

A document is YAML with four top-level sections::

    vertices: [1, 2, 3, 4]
    multiplicity: {1: 2, 2: 2}        # optional; omitted vertices get 1
    polygons:
      V1: [1, 2]
      V3: [1, 1, 3, 3]                # repetitions allowed, order irrelevant
    orientation:                      # one successor sequence per nontruncated vertex
      1: [V1, V2, V3, V3]

Every scalar identifier is read as a string, so ``1`` and ``'1'`` name the
same vertex.  Declaration order of vertices and polygons is preserved.
"""

from __future__ import annotations

import yaml

from .config import BrauerConfiguration, Polygon, SuccessorSequence, validate
from .errors import ConfigSyntaxError, ConfigurationError, SemanticError

__all__ = ["parse", "load_document", "serialize", "read_file"]

SECTIONS = ("vertices", "multiplicity", "polygons", "orientation")
REQUIRED = ("vertices", "polygons")


def _fail(message, node=None):
    mark = getattr(node, "start_mark", None)
    if mark is None:
        raise ConfigSyntaxError(message)
    raise ConfigSyntaxError(message, mark.line + 1, mark.column + 1)


def _ident(node, what):
    if not isinstance(node, yaml.ScalarNode) or node.value == "" or node.tag.endswith(":null"):
        _fail(f"{what} must be a nonempty scalar", node)
    return node.value


def _seq(node, what):
    if not isinstance(node, yaml.SequenceNode):
        _fail(f"{what} must be a list", node)
    return node.value


def _map(node, what):
    if not isinstance(node, yaml.MappingNode):
        _fail(f"{what} must be a mapping", node)
    keys = set()
    for k, _ in node.value:
        name = _ident(k, f"key in {what}")
        if name in keys:
            _fail(f"duplicate key {name!r} in {what}", k)
        keys.add(name)
    return [(k.value, k, v) for k, v in node.value]


def _positive_int(node, what):
    text = _ident(node, what)
    try:
        value = int(text)
    except ValueError:
        _fail(f"{what} must be an integer, got {text!r}", node)
    if value <= 0:
        _fail(f"{what} must be positive, got {value}", node)
    return value


def load_document(text: str) -> BrauerConfiguration:
    """Read a document into a configuration without checking the axioms."""
    try:
        root = yaml.compose(text, Loader=yaml.SafeLoader)
    except yaml.MarkedYAMLError as exc:
        mark = exc.problem_mark or exc.context_mark
        line = mark.line + 1 if mark else None
        column = mark.column + 1 if mark else None
        raise ConfigSyntaxError(str(exc.problem or exc), line, column) from None
    except yaml.YAMLError as exc:
        raise ConfigSyntaxError(str(exc)) from None
    if root is None:
        raise ConfigSyntaxError("empty document")

    sections = {}
    for name, key, value in _map(root, "document"):
        if name not in SECTIONS:
            _fail(f"unknown section {name!r}; expected one of {', '.join(SECTIONS)}", key)
        sections[name] = value
    for name in REQUIRED:
        if name not in sections:
            raise ConfigSyntaxError(f"missing section {name!r}")

    vertices = [_ident(n, "vertex") for n in _seq(sections["vertices"], "vertices")]
    polygons = []
    for pid, _, members in _map(sections["polygons"], "polygons"):
        polygons.append(Polygon.from_vertices(
            pid, [_ident(n, f"member of polygon {pid}") for n in _seq(members, f"polygon {pid}")]
        ))
    multiplicity = {}
    if "multiplicity" in sections and not _is_null(sections["multiplicity"]):
        for name, _, value in _map(sections["multiplicity"], "multiplicity"):
            multiplicity[name] = _positive_int(value, f"multiplicity of {name}")
    orientation = {}
    if "orientation" in sections and not _is_null(sections["orientation"]):
        for name, _, value in _map(sections["orientation"], "orientation"):
            seq = [_ident(n, f"polygon in orientation of {name}")
                   for n in _seq(value, f"orientation of {name}")]
            orientation[name] = SuccessorSequence(name, tuple(seq))

    try:
        return BrauerConfiguration(tuple(vertices), tuple(polygons), multiplicity, orientation)
    except ConfigurationError as exc:
        raise ConfigSyntaxError(str(exc)) from None


def _is_null(node):
    return isinstance(node, yaml.ScalarNode) and node.tag.endswith(":null")


def parse(text: str) -> BrauerConfiguration:
    """Read a document and return the configuration if it satisfies every axiom.

    Raises :class:`ConfigSyntaxError` for unreadable documents and
    :class:`SemanticError` (carrying the violation list) for invalid ones.
    """
    config = load_document(text)
    violations = validate(config)
    if violations:
        raise SemanticError(violations)
    return config


def read_file(path) -> BrauerConfiguration:
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())


def serialize(config: BrauerConfiguration) -> str:
    """Canonical document text; ``parse(serialize(c)) == c`` for valid ``c``."""
    data = {
        "vertices": list(config.vertices),
        "multiplicity": {a: config.multiplicity.get(a, 1) for a in config.vertices},
        "polygons": {p.id: p.elements() for p in config.polygons},
        "orientation": {
            a: list(config.orientation[a].polygons)
            for a in config.vertices if a in config.orientation
        },
    }
    return yaml.safe_dump(data, sort_keys=False, default_flow_style=None, allow_unicode=True)
