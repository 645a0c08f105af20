"""Exception types raised by the library.

Axiom breaches of a configuration are reported as :class:`Violation` values
by :func:`brauer_cartan.config.validate`; the exceptions below are reserved
for lookups that cannot be answered and for operations that require a
valid configuration.
"""

from __future__ import annotations


class BrauerError(Exception):
    """Base class for every error raised by brauer_cartan."""


class ConfigurationError(BrauerError, ValueError):
    """Structurally malformed input (duplicate ids, non-positive counts)."""


class UnknownVertex(BrauerError, KeyError):
    def __init__(self, vertex):
        super().__init__(vertex)
        self.vertex = vertex

    def __str__(self):
        return f"unknown vertex {self.vertex!r}"


class UnknownPolygon(BrauerError, KeyError):
    def __init__(self, polygon):
        super().__init__(polygon)
        self.polygon = polygon

    def __str__(self):
        return f"unknown polygon {self.polygon!r}"


class TruncatedVertex(BrauerError, ValueError):
    def __init__(self, vertex):
        super().__init__(f"vertex {vertex!r} is truncated")
        self.vertex = vertex


class VertexNotInPolygon(BrauerError, ValueError):
    def __init__(self, vertex, polygon):
        super().__init__(f"vertex {vertex!r} does not occur in polygon {polygon!r}")
        self.vertex = vertex
        self.polygon = polygon


class SamePolygon(BrauerError, ValueError):
    def __init__(self, polygon):
        super().__init__(f"expected two distinct polygons, got {polygon!r} twice")
        self.polygon = polygon


class InvalidConfiguration(BrauerError, ValueError):
    """Raised when an operation needs a valid configuration and gets violations."""

    def __init__(self, violations):
        self.violations = list(violations)
        summary = "; ".join(str(v) for v in self.violations) or "invalid configuration"
        super().__init__(summary)


class ConfigSyntaxError(BrauerError, ValueError):
    """The configuration document could not be read into the four sections."""

    def __init__(self, message, line=None, column=None):
        self.message = message
        self.line = line
        self.column = column
        where = f"line {line}, column {column}: " if line is not None else ""
        super().__init__(where + message)


class SemanticError(InvalidConfiguration):
    """The document parsed, but the configuration it describes is invalid."""


class Unsatisfiable(BrauerError, RuntimeError):
    """The random generator ran out of retries without hitting a valid configuration."""
