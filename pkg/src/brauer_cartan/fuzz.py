"""Property checks run over random configurations."""

from __future__ import annotations

from dataclasses import dataclass, field

from .cartan import algebra_dimension, cartan_matrix
from .config import BrauerConfiguration, vertex_set
from .generate import GeneratorBounds, generate_random
from .intervals import build_diagram, interval_occurrences
from .oracle import oracle_cartan_matrix
from .quiver import build_quiver

__all__ = ["PROPERTIES", "check_properties", "FuzzSummary", "run_fuzz"]

PROPERTIES = ("oracle", "symmetry", "trace_sum", "zero_criterion", "interval_sum")


def check_properties(config: BrauerConfiguration) -> dict[str, bool]:
    """Evaluate every fuzzed property on one valid configuration."""
    m = cartan_matrix(config)
    n = m.order
    supports = [vertex_set(p) for p in config.polygons]
    result = {
        "oracle": oracle_cartan_matrix(config) == m,
        "symmetry": m.is_symmetric(),
        "trace_sum": m.total() == algebra_dimension(config),
        "zero_criterion": all(
            (m.entries[i][j] == 0) == (not supports[i] & supports[j])
            for i in range(n) for j in range(n) if i != j
        ),
    }
    quiver = build_quiver(config)
    ok = True
    for a in config.nontruncated_vertices():
        for p in config.polygons_containing(a):
            d = build_diagram(config, quiver, a, p)
            for w in config.polygon_ids:
                if w != p and sum(interval_occurrences(d, w)) != config.occ(a, w):
                    ok = False
    result["interval_sum"] = ok
    return result


@dataclass
class FuzzSummary:
    seed: int
    count: int
    bounds: tuple[int, int, int, int]
    failures: dict[str, list[int]] = field(default_factory=lambda: {p: [] for p in PROPERTIES})

    @property
    def ok(self) -> bool:
        return not any(self.failures.values())

    def __str__(self):
        parts = [f"{p}={self.count - len(self.failures[p])}/{self.count}" for p in PROPERTIES]
        status = "ok" if self.ok else "FAIL"
        return f"fuzz seed={self.seed} count={self.count} bounds={','.join(map(str, self.bounds))} " \
               + " ".join(parts) + f" {status}"


def run_fuzz(seed: int, count: int, bounds=(5, 5, 3, 3)) -> FuzzSummary:
    """Check every property on configurations drawn with seeds ``seed .. seed+count-1``."""
    summary = FuzzSummary(seed, count, tuple(bounds))
    for k in range(count):
        s = (seed + k) % 2**64
        config = generate_random(GeneratorBounds(s, *bounds))
        for name, passed in check_properties(config).items():
            if not passed:
                summary.failures[name].append(s)
    return summary
