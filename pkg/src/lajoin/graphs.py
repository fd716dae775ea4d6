"""Graph families, the join operation, and exact chromatic numbers.

Graphs are small, immutable, and use 1-based vertex ids. Every vertex
carries a role tag: ``u<i>`` for the first (path/cycle/clique) side of a
join and ``v<j>`` for the second side. Role tags let labeling code and
matrix exports address "the i-th path vertex" without tracking index
offsets, and they survive joins and edge deletions.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property

Edge = tuple[int, int]


class ParameterError(ValueError):
    """A routine was called outside its documented parameter range."""


def edge(a: int, b: int) -> Edge:
    """Normalized undirected edge: smaller endpoint first."""
    if a == b:
        raise ParameterError(f"self-loop at vertex {a}")
    return (a, b) if a < b else (b, a)


@dataclass(frozen=True)
class Graph:
    """An immutable simple graph with role-tagged, 1-based vertices.

    ``family`` is a structural descriptor such as ``("path", 6)``,
    ``("join", A, B)`` or ``("minus-edge", parent, e)``; constructions use
    it to validate they were handed the shape they expect.
    """

    n: int
    edges: tuple[Edge, ...]
    roles: tuple[str, ...]
    family: tuple | None = None

    def __post_init__(self):
        if self.n < 1:
            raise ParameterError("graph needs at least one vertex")
        if len(self.roles) != self.n:
            raise ParameterError("one role tag required per vertex")
        seen = set()
        for a, b in self.edges:
            if not (1 <= a < b <= self.n):
                raise ParameterError(f"edge ({a},{b}) not normalized or out of range")
            if (a, b) in seen:
                raise ParameterError(f"duplicate edge ({a},{b})")
            seen.add((a, b))

    @property
    def q(self) -> int:
        """Number of edges (the labeling range is [1..q])."""
        return len(self.edges)

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        adj: dict[int, list[int]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adj[a].append(b)
            adj[b].append(a)
        return {v: tuple(sorted(nbrs)) for v, nbrs in adj.items()}

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adjacency[v]

    def has_edge(self, e: Edge) -> bool:
        return e in self._edge_set

    @cached_property
    def _edge_set(self) -> frozenset[Edge]:
        return frozenset(self.edges)

    def role_of(self, v: int) -> str:
        return self.roles[v - 1]

    def vertex_by_role(self, role: str) -> int:
        return self._role_index[role]

    @cached_property
    def _role_index(self) -> dict[str, int]:
        return {role: i + 1 for i, role in enumerate(self.roles)}

    @cached_property
    def u_vertices(self) -> tuple[int, ...]:
        """First-side vertices, ordered by their role index."""
        us = [v for v in self.vertices if self.roles[v - 1].startswith("u")]
        return tuple(sorted(us, key=lambda v: int(self.roles[v - 1][1:])))

    @cached_property
    def v_vertices(self) -> tuple[int, ...]:
        """Second-side vertices, ordered by their role index."""
        vs = [v for v in self.vertices if self.roles[v - 1].startswith("v")]
        return tuple(sorted(vs, key=lambda v: int(self.roles[v - 1][1:])))

    def to_json(self) -> dict:
        return {
            "schema": "v1",
            "vertices": [{"id": v, "role": self.roles[v - 1]} for v in self.vertices],
            "edges": [list(e) for e in self.edges],
            "family": _family_to_json(self.family),
        }

    @staticmethod
    def from_json(data: dict) -> "Graph":
        verts = data["vertices"]
        ids = [v["id"] for v in verts]
        if sorted(ids) != list(range(1, len(ids) + 1)):
            raise ParameterError("vertex ids must be exactly 1..n")
        roles = [""] * len(ids)
        for v in verts:
            roles[v["id"] - 1] = v["role"]
        edges = tuple(edge(a, b) for a, b in data["edges"])
        return Graph(len(ids), edges, tuple(roles), _family_from_json(data.get("family")))

    def __repr__(self):
        return f"Graph(n={self.n}, q={self.q}, family={self.family!r})"


def _family_to_json(family):
    if family is None:
        return None
    return [_family_to_json(x) if isinstance(x, tuple) else x for x in family]


def _family_from_json(data):
    if data is None:
        return None
    return tuple(_family_from_json(x) if isinstance(x, list) else x for x in data)


def build_family(kind: str, *params: int) -> Graph:
    """Build one of the base families: path, cycle, null, complete, complete-bipartite.

    Vertices are u_1..u_m for path/cycle/complete, v_1..v_n for null, and
    u_1..u_m / v_1..v_n for the two sides of a complete bipartite graph.
    """
    if kind == "path":
        (m,) = params
        if m < 2:
            raise ParameterError(f"path needs order >= 2, got {m}")
        edges = tuple((i, i + 1) for i in range(1, m))
        return Graph(m, edges, tuple(f"u{i}" for i in range(1, m + 1)), ("path", m))
    if kind == "cycle":
        (m,) = params
        if m < 3:
            raise ParameterError(f"cycle needs order >= 3, got {m}")
        edges = tuple((i, i + 1) for i in range(1, m)) + ((1, m),)
        return Graph(m, edges, tuple(f"u{i}" for i in range(1, m + 1)), ("cycle", m))
    if kind == "null":
        (n,) = params
        if n < 1:
            raise ParameterError(f"null graph needs order >= 1, got {n}")
        return Graph(n, (), tuple(f"v{j}" for j in range(1, n + 1)), ("null", n))
    if kind == "complete":
        (r,) = params
        if r < 1:
            raise ParameterError(f"complete graph needs order >= 1, got {r}")
        edges = tuple((i, j) for i in range(1, r + 1) for j in range(i + 1, r + 1))
        return Graph(r, edges, tuple(f"u{i}" for i in range(1, r + 1)), ("complete", r))
    if kind == "complete-bipartite":
        m, n = params
        if m < 1 or n < 1:
            raise ParameterError(f"complete bipartite parts must be >= 1, got ({m},{n})")
        edges = tuple((i, m + j) for i in range(1, m + 1) for j in range(1, n + 1))
        roles = tuple(f"u{i}" for i in range(1, m + 1)) + tuple(f"v{j}" for j in range(1, n + 1))
        return Graph(m + n, edges, roles, ("complete-bipartite", m, n))
    raise ParameterError(f"unknown family kind {kind!r}")


def join(a: Graph, b: Graph) -> Graph:
    """Join of two graphs: disjoint union plus all edges between the parts.

    The first part keeps u-roles (re-indexed u_1..u_|A|), the second part
    gets v-roles. Ids of ``b`` are shifted past ``a``'s.
    """
    off = a.n
    edges = list(a.edges)
    edges.extend((x + off, y + off) for x, y in b.edges)
    edges.extend((i, off + j) for i in a.vertices for j in b.vertices)
    roles = tuple(f"u{i}" for i in a.vertices) + tuple(f"v{j}" for j in b.vertices)
    return Graph(a.n + b.n, tuple(edges), roles, ("join", a.family, b.family))


def delete_edge(g: Graph, e: Edge) -> Graph:
    """Remove one edge; the family descriptor records parent and deleted edge."""
    e = edge(*e)
    if not g.has_edge(e):
        raise ParameterError(f"edge {e} not present")
    edges = tuple(x for x in g.edges if x != e)
    return Graph(g.n, edges, g.roles, ("minus-edge", g.family, e))


def known_chromatic(family) -> int | None:
    """Chromatic number from the family descriptor alone, when determined.

    Join graphs use chi(A v B) = chi(A) + chi(B); families whose chromatic
    number is not forced by the descriptor (e.g. after edge deletion)
    return None.
    """
    if family is None:
        return None
    kind = family[0]
    if kind == "path":
        return 1 if family[1] == 1 else 2
    if kind == "cycle":
        return 2 if family[1] % 2 == 0 else 3
    if kind == "null":
        return 1
    if kind == "complete":
        return family[1]
    if kind == "complete-bipartite":
        return 2
    if kind == "join":
        ca, cb = known_chromatic(family[1]), known_chromatic(family[2])
        if ca is None or cb is None:
            return None
        return ca + cb
    return None


def chromatic_number_exact(g: Graph, max_vertices: int = 16) -> int:
    """Exact chromatic number by branch-and-bound, for small graphs only.

    A greedy clique provides the lower bound; vertices are colored in
    DSATUR order. Graphs larger than ``max_vertices`` are rejected
    because join families admit the additive formula instead.
    """
    if g.n > max_vertices:
        raise ParameterError(
            f"graph has {g.n} > {max_vertices} vertices; for join families use "
            "chi(A v B) = chi(A) + chi(B) via known_chromatic instead"
        )
    if g.q == 0:
        return 1

    adj = {v: set(g.neighbors(v)) for v in g.vertices}

    # Greedy clique for the lower bound: grow from each vertex by degree.
    order = sorted(g.vertices, key=lambda v: -len(adj[v]))
    best_clique = 1
    for start in order:
        clique = [start]
        for v in order:
            if v != start and all(v in adj[c] for c in clique):
                clique.append(v)
        best_clique = max(best_clique, len(clique))

    # Greedy upper bound, largest-degree-first.
    colors: dict[int, int] = {}
    for v in order:
        used = {colors[u] for u in adj[v] if u in colors}
        c = 1
        while c in used:
            c += 1
        colors[v] = c
    best = max(colors.values())
    if best == best_clique:
        return best

    assignment: dict[int, int] = {}

    def pick() -> int | None:
        cand, key = None, (-1, -1)
        for v in g.vertices:
            if v in assignment:
                continue
            sat = len({assignment[u] for u in adj[v] if u in assignment})
            if (sat, len(adj[v])) > key:
                cand, key = v, (sat, len(adj[v]))
        return cand

    def backtrack(used: int):
        nonlocal best
        if used >= best:
            return
        v = pick()
        if v is None:
            best = used
            return
        forbidden = {assignment[u] for u in adj[v] if u in assignment}
        for c in range(1, min(used + 1, best - 1) + 1):
            if c in forbidden:
                continue
            assignment[v] = c
            backtrack(max(used, c))
            del assignment[v]
            if best == best_clique:
                return

    backtrack(0)
    return best


def graph_to_json_str(g: Graph) -> str:
    return json.dumps(g.to_json(), sort_keys=True, indent=2) + "\n"
