"""Planarity checks, rotation systems, and face traversal.

Planarity testing delegates to networkx's left-right test, which returns a
combinatorial embedding on success and a Kuratowski subgraph on failure.
The embedding is repackaged as a :class:`PlaneGraph`, a rotation system
(cyclic order of neighbors around each vertex) that supports the dart-walk
face enumeration the radial-graph transform needs.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from .graph import GraphError, RBGraph


class DisconnectedError(GraphError):
    pass


@dataclass(frozen=True)
class Face:
    """A face as its boundary dart cycle plus the incident vertex set."""

    darts: tuple
    vertices: frozenset

    def __len__(self) -> int:
        return len(self.darts)


@dataclass(frozen=True)
class KuratowskiWitness:
    """A K5 or K3,3 subdivision certifying non-planarity."""

    kind: str  # "K5" | "K3,3"
    edges: frozenset


@dataclass(frozen=True)
class PlanarityResult:
    planar: bool
    embedding: "PlaneGraph | None" = None
    witness: KuratowskiWitness | None = None


class PlaneGraph:
    """A graph with a rotation system.

    ``rotation`` maps each vertex to the cyclic list of its neighbors.  The
    constructor checks that the rotation is symmetric and duplicate-free;
    whether it is genus-zero is a separate question answered by the Euler
    count of :meth:`faces`.
    """

    def __init__(self, rotation: dict):
        self.rotation = {v: list(ns) for v, ns in rotation.items()}
        self._index = {}
        for v, ns in self.rotation.items():
            pos = {}
            for i, u in enumerate(ns):
                if u == v:
                    raise GraphError("self-loop at %r" % v)
                if u in pos:
                    raise GraphError("duplicate neighbor %r around %r" % (u, v))
                if u not in self.rotation:
                    raise GraphError("rotation of %r names unknown vertex %r" % (v, u))
                pos[u] = i
            self._index[v] = pos
        for v, ns in self.rotation.items():
            for u in ns:
                if v not in self._index[u]:
                    raise GraphError("edge (%r, %r) missing its reverse" % (v, u))

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def n_edges(self) -> int:
        return sum(len(ns) for ns in self.rotation.values()) // 2

    def vertices(self) -> list:
        return sorted(self.rotation)

    def edges(self) -> list:
        return sorted((u, v) for u in self.rotation for v in self.rotation[u] if u < v)

    def is_connected(self) -> bool:
        if not self.rotation:
            return True
        seen = set()
        stack = [next(iter(sorted(self.rotation)))]
        while stack:
            v = stack.pop()
            if v in seen:
                continue
            seen.add(v)
            stack.extend(u for u in self.rotation[v] if u not in seen)
        return len(seen) == len(self.rotation)

    def faces(self) -> list[Face]:
        """All faces by dart walking: the dart after (u, v) leaves v along
        the rotation successor of u.  Faces come out in first-discovery
        order of the ascending dart scan, which makes downstream ids
        deterministic."""
        if not self.is_connected():
            raise DisconnectedError("face traversal needs a connected graph")
        if not self.rotation:
            return []
        if self.n_edges == 0:
            # A lone vertex sits on the one face of the plane.
            return [Face((), frozenset(self.rotation))]
        seen = set()
        out = []
        for u in sorted(self.rotation):
            for v in sorted(self.rotation[u]):
                if (u, v) in seen:
                    continue
                cycle = []
                dart = (u, v)
                while dart not in seen:
                    seen.add(dart)
                    cycle.append(dart)
                    a, b = dart
                    ns = self.rotation[b]
                    dart = (b, ns[(self._index[b][a] + 1) % len(ns)])
                out.append(Face(tuple(cycle), frozenset(a for a, _ in cycle)))
        return out


def is_planar(vertices, edges) -> PlanarityResult:
    """Left-right planarity test of a simple graph.

    Planar graphs come back with a rotation system realizing an embedding;
    non-planar ones with the Kuratowski subdivision found by the test.
    """
    G = nx.Graph()
    G.add_nodes_from(vertices)
    G.add_edges_from(edges)
    ok, cert = nx.check_planarity(G, counterexample=True)
    if ok:
        rotation = {v: list(cert.neighbors_cw_order(v)) for v in G.nodes}
        return PlanarityResult(True, embedding=PlaneGraph(rotation))
    kind = "K5" if max(d for _, d in cert.degree) >= 4 else "K3,3"
    wedges = frozenset((u, v) if u < v else (v, u) for u, v in cert.edges)
    return PlanarityResult(False, witness=KuratowskiWitness(kind, wedges))


def rbgraph_planarity(g: RBGraph) -> PlanarityResult:
    return is_planar(g.vertices(), g.edges())


def bipartite_euler_bound(g: RBGraph) -> bool:
    """Necessary edge-count condition for planarity of a bipartite graph."""
    n, m = g.n_vertices, g.n_edges
    return n < 3 or m <= 2 * n - 4
