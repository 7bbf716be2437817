"""DOT and JSON renderings of graphs, distributions, walks and timelines.

All output is deterministic: nodes sorted by identifier, edges by source
then label, JSON with sorted keys.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .errors import BadParameters
from .graph import StateGraph
from .poi import parse_poi_state, poi_advance
from .siteswap import throw_char
from .toss import advance, parse_state

SCHEMA_VERSION = 1


def label_text(label) -> str:
    return throw_char(label) if isinstance(label, int) else str(label)


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _sorted_edges(graph: StateGraph):
    edges = [(u.id, label_text(lab), lab, v.id) for u, lab, v in graph.edge_list()]
    return sorted(edges, key=lambda e: (e[0], e[2] if isinstance(e[2], int) else 0, e[1]))


def export_dot(graph: StateGraph) -> str:
    if graph.kind == "toss":
        name = f"toss_k{graph.parameters['k']}_m{graph.parameters['m']}"
    else:
        name = graph.kind
    lines = [f"digraph {name} {{"]
    for ident in sorted(node.id for node in graph.nodes):
        lines.append(f"  {_quote(ident)};")
    for src, text, _, dst in _sorted_edges(graph):
        lines.append(f"  {_quote(src)} -> {_quote(dst)} [label={_quote(text)}];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def graph_to_dict(graph: StateGraph) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": graph.kind,
        "parameters": dict(graph.parameters),
        "nodes": sorted(node.id for node in graph.nodes),
        "edges": [
            {"from": src, "to": dst, "label": lab}
            for src, _, lab, dst in _sorted_edges(graph)
        ],
    }


def graph_from_dict(doc: dict) -> StateGraph:
    """Rebuild a graph from its JSON form, checking every edge against the transition rules."""
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise BadParameters(f"unsupported schema_version {doc.get('schema_version')!r}")
    kind = doc["kind"]
    if kind == "toss":
        m = doc["parameters"]["m"]
        nodes = {ident: parse_state(ident, m) for ident in doc["nodes"]}
        step = advance
    elif kind == "poi":
        nodes = {ident: parse_poi_state(ident) for ident in doc["nodes"]}
        step = poi_advance
    else:
        raise BadParameters(f"unknown graph kind {kind!r}")
    edges = {node: {} for node in nodes.values()}
    for e in doc["edges"]:
        src, dst, lab = nodes[e["from"]], nodes[e["to"]], e["label"]
        if step(src, lab) != dst:
            raise BadParameters(f"edge {e} contradicts the transition rule")
        edges[src][lab] = dst
    for node, out in edges.items():
        edges[node] = dict(sorted(out.items()))
    return StateGraph(kind, dict(doc["parameters"]), tuple(sorted(nodes.values())), edges)


def graph_to_json(graph: StateGraph) -> str:
    return json.dumps(graph_to_dict(graph), indent=2, sort_keys=True) + "\n"


def graph_from_json(text: str) -> StateGraph:
    return graph_from_dict(json.loads(text))


def format_weight(value) -> str:
    if isinstance(value, Fraction):
        return str(value)
    return f"{value:.12g}"


def distribution_to_dict(dist) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "mode": dist.mode,
        "weights": {
            node.id: (str(w) if dist.mode == "rational" else float(w))
            for node, w in sorted(dist.weights.items(), key=lambda kv: kv[0].id)
        },
    }


def distribution_table(dist) -> str:
    rows = sorted(dist.weights.items(), key=lambda kv: kv[0].id)
    return "".join(f"{node.id} → {format_weight(w)}\n" for node, w in rows)


def trace_to_dict(trace, include_steps=True) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "rng": trace.rng,
        "seed": trace.seed,
        "start": trace.start.id,
        "length": len(trace),
    }
    if include_steps:
        doc["steps"] = [[label_text(lab), node.id] for lab, node in trace.steps]
    return doc


def timeline_to_dict(combined) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "toss": str(combined.toss),
        "spin": combined.spin,
        "notation_period": combined.notation_period,
        "full_period": combined.full_period,
        "poi_start": combined.poi_start,
        "rows": [
            {
                "beat": r.beat,
                "throw": r.throw,
                "label": r.label,
                "toss_state": r.toss_state.id,
                "poi_state": r.poi_state.id,
            }
            for r in combined.timeline
        ],
    }


def to_json(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
