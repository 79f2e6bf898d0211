"""Graphviz DOT rendering of argument graphs.

Statements are boxes and arguments circles marked ``+`` (pro) or ``-`` (con).
With a labeling, rejected statements get an ``x`` in front of their text and
accepted ones are drawn bold on a light fill.
"""

from __future__ import annotations

from inventio.carneades import Labeling, Status
from inventio.errors import InvalidGraph
from inventio.model import ArgumentGraph, Direction, PremiseKind, validate

_PREMISE_STYLE = {
    PremiseKind.ORDINARY: "",
    PremiseKind.ASSUMPTION: ' [style=dashed, label="assumption"]',
    PremiseKind.EXCEPTION: ' [style=dotted, arrowhead=odot, label="exception"]',
}


def _quote(text: str) -> str:
    escaped = text.replace("\\", "\\\\").replace('"', '\\"').replace("\n", "\\n")
    return f'"{escaped}"'


def export_dot(graph: ArgumentGraph, labeling: Labeling | None = None) -> str:
    report = validate(graph)
    if not report.ok:
        raise InvalidGraph(report)
    lines = ["digraph argument_graph {", "  rankdir=BT;"]

    for sid in sorted(graph.statements):
        text = graph.statements[sid].text
        attrs = ["shape=box"]
        if labeling is not None:
            status = labeling[sid]
            if status is Status.REJECTED:
                text = "x " + text
            elif status is Status.ACCEPTED:
                attrs.append('style="bold,filled"')
                attrs.append('fillcolor="#e8f5e9"')
        attrs.insert(0, f"label={_quote(text)}")
        lines.append(f"  {_quote(sid)} [{', '.join(attrs)}];")

    for aid in sorted(graph.arguments):
        a = graph.arguments[aid]
        sign = "+" if a.direction is Direction.PRO else "-"
        attrs = [f"label={_quote(sign)}", "shape=circle", f"tooltip={_quote(f'{aid} weight={a.weight:g}')}"]
        if labeling is not None and not labeling.argument_applicable[aid]:
            attrs.append("style=dashed")
        lines.append(f"  {_quote(aid)} [{', '.join(attrs)}];")

    edges = []
    for a in graph.arguments.values():
        for p in a.premises:
            edges.append(f"  {_quote(p.statement)} -> {_quote(a.id)}{_PREMISE_STYLE[p.kind]};")
        edges.append(f"  {_quote(a.id)} -> {_quote(a.conclusion)};")
    for sid, s in graph.statements.items():
        if s.complement_of is not None and sid < s.complement_of:
            edges.append(
                f"  {_quote(sid)} -> {_quote(s.complement_of)} "
                '[dir=none, style=dashed, color=gray, constraint=false, label="complement"];'
            )
    lines.extend(sorted(edges))
    lines.append("}")
    return "\n".join(lines) + "\n"
