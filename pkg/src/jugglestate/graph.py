"""Labeled directed graph shared by the toss and poi analyses."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(eq=False)
class StateGraph:
    """Nodes plus, per node, an ordered ``label -> target`` map.

    ``nodes`` are hashable state objects exposing an ``id`` string; they are
    kept sorted by their natural order. Treat instances as read-only once
    built.
    """

    kind: str
    parameters: dict
    nodes: tuple
    edges: dict = field(repr=False)

    def successors(self, node) -> dict:
        return self.edges[node]

    def out_degree(self, node) -> int:
        return len(self.edges[node])

    def edge_list(self) -> list[tuple]:
        """All ``(source, label, target)`` triples, nodes in order, labels ascending."""
        return [(u, lab, v) for u in self.nodes for lab, v in self.edges[u].items()]

    @property
    def edge_count(self) -> int:
        return sum(len(e) for e in self.edges.values())

    def node_by_id(self, ident: str):
        for node in self.nodes:
            if node.id == ident:
                return node
        raise KeyError(ident)

    def __contains__(self, node):
        return node in self.edges

    def __len__(self):
        return len(self.nodes)

    def __eq__(self, other):
        if not isinstance(other, StateGraph):
            return NotImplemented
        return (
            self.kind == other.kind
            and self.parameters == other.parameters
            and self.nodes == other.nodes
            and self.edge_list() == other.edge_list()
        )

    __hash__ = None
