"""Text renderings of quivers, Cartan matrices and relation sets.

Every writer returns a string ending in a single newline.
"""

from __future__ import annotations

import csv
import io
import json

from .cartan import CartanMatrix
from .quiver import Quiver, RelationSet, format_path

__all__ = [
    "quiver_to_dot",
    "quiver_to_json",
    "matrix_to_table",
    "matrix_to_csv",
    "matrix_to_json",
    "relations_to_text",
]


def _dot_id(name: str) -> str:
    return '"' + name.replace("\\", "\\\\").replace('"', '\\"') + '"'


def quiver_to_dot(quiver: Quiver, name: str = "Q") -> str:
    lines = [f"digraph {name} {{"]
    for v in quiver.vertices:
        lines.append(f"  {_dot_id(v.polygon)};")
    for a in quiver.arrows:
        lines.append(
            f"  {_dot_id(a.source.polygon)} -> {_dot_id(a.target.polygon)} [label={_dot_id(a.label)}];"
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def quiver_to_json(quiver: Quiver) -> str:
    data = {
        "vertices": [v.polygon for v in quiver.vertices],
        "arrows": [
            {
                "label": a.label,
                "generator": a.generator,
                "ordinal": a.ordinal,
                "source": a.source.polygon,
                "target": a.target.polygon,
            }
            for a in quiver.arrows
        ],
    }
    return json.dumps(data, indent=2) + "\n"


def matrix_to_table(m: CartanMatrix) -> str:
    header = [""] + list(m.labels)
    rows = [header] + [[label] + [str(x) for x in row] for label, row in zip(m.labels, m.entries)]
    widths = [max(len(r[k]) for r in rows) for k in range(len(header))]
    lines = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [c.rjust(w) for c, w in zip(r[1:], widths[1:])]
        lines.append("  ".join(cells).rstrip())
    return "\n".join(lines) + "\n"


def matrix_to_csv(m: CartanMatrix) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow([""] + list(m.labels))
    for label, row in zip(m.labels, m.entries):
        writer.writerow([label] + list(row))
    return buf.getvalue()


def matrix_to_json(m: CartanMatrix) -> str:
    return json.dumps({"labels": list(m.labels), "entries": m.tolist()}) + "\n"


def relations_to_text(relations: RelationSet) -> str:
    lines = [f"type one ({len(relations.type_one)}):"]
    for c, d in relations.type_one:
        lines.append(f"  {c} - {d}    [{c.cycle.anchor}]")
    lines.append(f"type two ({len(relations.type_two)}):")
    for cycle, mu, f in relations.type_two:
        lines.append(f"  ({format_path(cycle.arrows)})^{mu} {f.label}")
    lines.append(f"type three ({len(relations.type_three)}):")
    for a, b in relations.type_three:
        lines.append(f"  {a.label} {b.label}")
    return "\n".join(lines) + "\n"
