"""Graph families, edge embeddings, edge-averaged Hamiltonians, matchings."""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .diagrams import PairOperator, SiteOperator, embed_pair, pair_operators

FAMILY_TAGS = ("complete", "star", "cycle", "path", "complete_bipartite", "custom")


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]
    family_tag: str = "custom"

    def __post_init__(self):
        if self.family_tag not in FAMILY_TAGS:
            raise ValueError(f"unknown family tag {self.family_tag!r}")
        seen = set()
        for u, v in self.edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < v < self.vertex_count):
                raise ValueError(f"edge ({u},{v}) out of range or not u < v")
            if (u, v) in seen:
                raise ValueError(f"duplicate edge ({u},{v})")
            seen.add((u, v))

    @property
    def edge_count(self) -> int:
        return len(self.edges)


def make_family(tag: str, n: int, m: int | None = None) -> Graph:
    """Build a named graph family: K_n, K_{1,n}, C_n, P_n, or K_{n,m}."""
    if n < 1:
        raise ValueError("need n >= 1")
    if tag == "complete":
        edges = tuple((u, v) for u in range(n) for v in range(u + 1, n))
        return Graph(n, edges, "complete")
    if tag == "star":
        # K_{1,n}: hub vertex 0 plus n leaves
        edges = tuple((0, v) for v in range(1, n + 1))
        return Graph(n + 1, edges, "star")
    if tag == "cycle":
        if n < 3:
            raise ValueError("cycle needs n >= 3")
        edges = tuple(sorted((tuple(sorted((v, (v + 1) % n))) for v in range(n))))
        return Graph(n, edges, "cycle")
    if tag == "path":
        if n < 2:
            raise ValueError("path needs n >= 2")
        edges = tuple((v, v + 1) for v in range(n - 1))
        return Graph(n, edges, "path")
    if tag == "complete_bipartite":
        if m is None or m < 1:
            raise ValueError("complete_bipartite needs m >= 1")
        edges = tuple((u, v) for u in range(n) for v in range(n, n + m))
        return Graph(n + m, edges, "complete_bipartite")
    raise ValueError(f"unknown family tag {tag!r}")


def graph_to_json(g: Graph) -> str:
    return json.dumps(
        {"n": g.vertex_count, "edges": [list(e) for e in g.edges], "family": g.family_tag}
    )


def graph_from_json(text: str) -> Graph:
    obj = json.loads(text)
    edges = tuple(tuple(sorted(e)) for e in obj["edges"])
    return Graph(int(obj["n"]), edges, obj.get("family", "custom"))


def embed_pair_operator(op: PairOperator, edge: tuple[int, int], n: int) -> SiteOperator:
    """Place a two-qudit operator on an edge of an n-vertex graph."""
    u, v = edge
    if not (0 <= u < n and 0 <= v < n and u != v):
        raise ValueError(f"edge {edge} invalid for n={n} vertices")
    return embed_pair(op, (u, v), n)


def is_flip_invariant(op: PairOperator) -> bool:
    _, _, f = pair_operators(op.d)
    return f @ op @ f == op


def edge_average_hamiltonian(g: Graph, op: PairOperator) -> SiteOperator:
    """(1/|E|) sum over edges of the embedded operator, exact."""
    if not g.edges:
        raise ValueError("graph has no edges")
    if not is_flip_invariant(op):
        raise ValueError("operator is not flip-invariant; edge orientation would matter")
    n = g.vertex_count
    total = SiteOperator.zero(n, op.d)
    for e in g.edges:
        total = total + embed_pair_operator(op, e, n)
    return total * Fraction(1, g.edge_count)


Matching = tuple[tuple[int, int], ...]


def perfect_matchings(g: Graph) -> list[Matching]:
    """All perfect matchings, by eliminating the lowest uncovered vertex.

    Odd-vertex graphs have none and yield the empty list.
    """
    n = g.vertex_count
    if n % 2 == 1:
        return []
    adj = {v: set() for v in range(n)}
    for u, v in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    out: list[Matching] = []

    def recurse(covered: set, acc: list):
        if len(covered) == n:
            out.append(tuple(acc))
            return
        u = min(v for v in range(n) if v not in covered)
        for v in sorted(adj[u]):
            if v not in covered:
                covered.update((u, v))
                acc.append((u, v))
                recurse(covered, acc)
                acc.pop()
                covered.difference_update((u, v))

    recurse(set(), [])
    return out
