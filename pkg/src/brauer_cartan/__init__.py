"""Brauer configurations, their induced quivers and Cartan matrices."""

from .cartan import (
    CartanMatrix,
    algebra_dimension,
    cartan_diagonal,
    cartan_matrix,
    cartan_off_diagonal,
    hom_nonzero,
)
from .config import (
    BrauerConfiguration,
    Polygon,
    SuccessorSequence,
    Violation,
    is_truncated,
    occ,
    polygons_containing,
    val,
    validate,
    vertex_set,
)
from .document import load_document, parse, read_file, serialize
from .errors import (
    BrauerError,
    ConfigSyntaxError,
    InvalidConfiguration,
    SamePolygon,
    SemanticError,
    TruncatedVertex,
    UnknownPolygon,
    UnknownVertex,
    Unsatisfiable,
    VertexNotInPolygon,
)
from .generate import GeneratorBounds, generate_random
from .intervals import IntervalDiagram, build_diagram, interval_occurrences
from .oracle import BasisPath, enumerate_basis, oracle_cartan_matrix
from .quiver import (
    Arrow,
    Quiver,
    QuiverVertex,
    RelationSet,
    SpecialCycle,
    build_quiver,
    first_arrow,
    generate_relations,
    special_cycles,
    special_cycles_at,
)

__version__ = "0.1.0"
