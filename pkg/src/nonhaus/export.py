"""Structured (JSON) and DOT renderings of a quotient graph."""

from __future__ import annotations

import json

from .exactnum import format_ext
from .quotient import QuotientGraph


def _end(qg: QuotientGraph, end) -> str:
    return "open" if end.is_open else qg.vertices[end.vertex].id


def quotient_to_dict(qg: QuotientGraph) -> dict:
    components = []
    for comp in qg.components:
        vertices = [
            {"id": qg.vertices[i].id, "members": [m.to_dict() for m in qg.vertices[i].members]}
            for i in comp.vertices
        ]
        edges = []
        for i in comp.edges:
            e = qg.edges[i]
            edges.append({
                "id": e.id,
                "ends": [_end(qg, end) for end in e.ends],
                "limit_points": [[m.to_dict() for m in end.limit_points] for end in e.ends],
                "pieces": [
                    {
                        "chart": pc.chart,
                        "lo": format_ext(pc.span.lo),
                        "hi": format_ext(pc.span.hi),
                        "to_edge": {"slope": format_ext(e.coords[pc][0]),
                                    "offset": format_ext(e.coords[pc][1])},
                    }
                    for pc in e.pieces
                ],
            })
        components.append({"kind": comp.kind, "charts": list(comp.charts),
                           "vertices": vertices, "edges": edges})
    return {"components": components}


def quotient_to_json(qg: QuotientGraph) -> str:
    return json.dumps(quotient_to_dict(qg), indent=2) + "\n"


def quotient_to_dot(qg: QuotientGraph) -> str:
    lines = ["graph quotient {"]
    for v in qg.vertices:
        label = ", ".join(str(m) for m in v.members)
        lines.append(f'  {v.id} [label="{v.id}\\n{label}"];')
    for e in qg.edges:
        if e.circle:
            lines.append(f'  {e.id}_loop [shape=point, label="circle"];')
            lines.append(f'  {e.id}_loop -- {e.id}_loop [label="{e.id}"];')
            continue
        names = []
        for k, end in enumerate(e.ends):
            if end.is_open:
                name = f"{e.id}_open{k}"
                lines.append(f'  {name} [shape=point, label="open"];')
                names.append(name)
            else:
                names.append(qg.vertices[end.vertex].id)
        lines.append(f'  {names[0]} -- {names[1]} [label="{e.id}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
