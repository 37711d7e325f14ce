"""Directed acyclic multigraph networks with sources and a single receiver.

Edges are identified by their position in a canonical topological order,
which makes the flow matrix of downstream modules strictly
upper-triangular.  Networks are immutable after parsing.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .errors import (
    CyclicGraph,
    OrphanNonSource,
    ParseError,
    ReceiverIsSource,
    UnknownNode,
    UnreachableNode,
)


@dataclass(frozen=True)
class Network:
    q: int
    nodes: tuple
    sources: tuple          # ordered sigma_1 .. sigma_s
    receiver: str
    edges: tuple            # (tail, head) pairs in canonical order

    @property
    def s(self) -> int:
        return len(self.sources)

    def in_edges(self, u: str):
        if u not in self.nodes:
            raise UnknownNode(u)
        return [i for i, (_, h) in enumerate(self.edges) if h == u]

    def out_edges(self, u: str):
        if u not in self.nodes:
            raise UnknownNode(u)
        return [i for i, (t, _) in enumerate(self.edges) if t == u]

    def tail(self, e: int) -> str:
        return self.edges[e][0]

    def head(self, e: int) -> str:
        return self.edges[e][1]

    def source_index(self, u: str):
        """0-based index of u among the sources, or None."""
        try:
            return self.sources.index(u)
        except ValueError:
            return None

    def to_dict(self) -> dict:
        return {
            "field": {"q": self.q},
            "nodes": list(self.nodes),
            "sources": list(self.sources),
            "receiver": self.receiver,
            "edges": [list(e) for e in self.edges],
        }

    def serialize(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _topo_order(nodes, edges):
    """Kahn's algorithm; ties broken by input node order.  None if cyclic."""
    indeg = {u: 0 for u in nodes}
    for _, h in edges:
        indeg[h] += 1
    order = []
    done = set()
    while len(order) < len(nodes):
        u = next((n for n in nodes if n not in done and indeg[n] == 0), None)
        if u is None:
            return None
        order.append(u)
        done.add(u)
        for t, h in edges:
            if t == u:
                indeg[h] -= 1
    return order


def build_network(q, nodes, sources, receiver, edges) -> Network:
    """Validate and canonicalize; shared by parse_network and the generators."""
    nodes = tuple(nodes)
    sources = tuple(sources)
    edges = [tuple(e) for e in edges]
    seen = set()
    for u in nodes:
        if u in seen:
            raise ParseError(f"duplicate node {u!r}")
        seen.add(u)
    for u in sources:
        if u not in seen:
            raise ParseError(f"unknown source {u!r}")
    if receiver not in seen:
        raise ParseError(f"unknown receiver {receiver!r}")
    if receiver in sources:
        raise ReceiverIsSource(receiver)
    if not sources:
        raise ParseError("network needs at least one source")
    for t, h in edges:
        if t not in seen or h not in seen:
            raise ParseError(f"edge ({t!r}, {h!r}) references unknown node")

    order = _topo_order(nodes, edges)
    if order is None:
        raise CyclicGraph("graph contains a directed cycle")
    pos = {u: i for i, u in enumerate(order)}

    # every node must have a directed path to the receiver
    can_reach = {receiver}
    changed = True
    while changed:
        changed = False
        for t, h in edges:
            if h in can_reach and t not in can_reach:
                can_reach.add(t)
                changed = True
    for u in nodes:
        if u not in can_reach:
            raise UnreachableNode(u)

    # in-degree-0 nodes must be declared sources
    heads = {h for _, h in edges}
    for u in nodes:
        if u not in heads and u != receiver and u not in sources:
            raise OrphanNonSource(u)

    canonical = sorted(edges, key=lambda e: pos[e[0]])  # stable: input order kept
    return Network(q=int(q), nodes=nodes, sources=sources, receiver=receiver,
                   edges=tuple(canonical))


def parse_network(text: str) -> Network:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc}") from exc
    try:
        q = data["field"]["q"]
        nodes = data["nodes"]
        sources = data["sources"]
        receiver = data["receiver"]
        edges = data["edges"]
    except (KeyError, TypeError) as exc:
        raise ParseError(f"missing field in network file: {exc}") from exc
    if not isinstance(edges, list) or any(len(e) != 2 for e in edges):
        raise ParseError("edges must be [tail, head] pairs")
    return build_network(q, nodes, sources, receiver, edges)


def in_edges(net: Network, u: str):
    return net.in_edges(u)


def out_edges(net: Network, u: str):
    return net.out_edges(u)
