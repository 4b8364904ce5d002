"""Finite simple graphs, loopless multigraphs and rooted trees.

Vertices are dense integer ids ``0..n-1``.  Vertex subsets are plain Python
ints used as bitmasks (bit ``v`` set means ``v`` is a member); ``to_mask`` and
``members`` convert to and from iterables.
"""
from __future__ import annotations

import json
import math
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

INF = math.inf


def to_mask(vertices: Iterable[int] | int) -> int:
    if isinstance(vertices, int):
        return vertices
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def lowest(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


class Graph:
    """Immutable simple undirected graph with bitmask adjacency."""

    __slots__ = ("n", "adj", "_cache")

    def __init__(self, n: int, edges: Iterable[Sequence[int]] = ()):
        if n < 0:
            raise ValueError("vertex count must be nonnegative")
        adj = [0] * n
        for e in edges:
            u, v = int(e[0]), int(e[1])
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {u}-{v} out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        self.n = n
        self.adj = tuple(adj)
        self._cache: dict = {}

    @classmethod
    def from_adjacency(cls, adj: Sequence[int]) -> "Graph":
        g = cls.__new__(cls)
        g.n = len(adj)
        g.adj = tuple(adj)
        g._cache = {}
        return g

    @property
    def all(self) -> int:
        return (1 << self.n) - 1

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in members(self.adj[u] >> (u + 1) << (u + 1))]

    @property
    def edge_count(self) -> int:
        return sum(popcount(a) for a in self.adj) // 2

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbours(self, v: int) -> list[int]:
        return members(self.adj[v])

    def degree(self, v: int) -> int:
        return popcount(self.adj[v])

    def neighbourhood(self, mask: int) -> int:
        """Vertices adjacent to some member of ``mask`` (members may be included)."""
        out = 0
        for v in members(mask):
            out |= self.adj[v]
        return out

    def has_edge_between(self, a: int, b: int) -> bool:
        if popcount(a) > popcount(b):
            a, b = b, a
        for v in members(a):
            if self.adj[v] & b:
                return True
        return False

    def with_edges(self, add: Iterable[Sequence[int]] = (), remove: Iterable[Sequence[int]] = ()) -> "Graph":
        adj = list(self.adj)
        for u, v in remove:
            adj[u] &= ~(1 << v)
            adj[v] &= ~(1 << u)
        for u, v in add:
            if u == v:
                raise ValueError("self-loop")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return Graph.from_adjacency(adj)

    def __eq__(self, other):
        return isinstance(other, Graph) and self.adj == other.adj

    def __hash__(self):
        return hash(self.adj)

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.edge_count})"

    # serialization -------------------------------------------------------
    def to_text(self) -> str:
        es = self.edges()
        return "\n".join([f"{self.n} {len(es)}"] + [f"{u} {v}" for u, v in es]) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Graph":
        tokens = text.split()
        if len(tokens) < 2:
            raise ValueError("graph text must start with 'n m'")
        n, m = int(tokens[0]), int(tokens[1])
        nums = [int(t) for t in tokens[2:]]
        if len(nums) != 2 * m:
            raise ValueError(f"expected {m} edges, found {len(nums) / 2}")
        return cls(n, zip(nums[0::2], nums[1::2]))

    def to_json(self) -> dict:
        return {"n": self.n, "edges": [list(e) for e in self.edges()]}

    @classmethod
    def from_json(cls, data: dict) -> "Graph":
        return cls(int(data["n"]), data["edges"])

    def to_dot(self, name: str = "G") -> str:
        lines = [f"graph {name} {{"]
        lines += [f"  {v};" for v in range(self.n)]
        lines += [f"  {u} -- {v};" for u, v in self.edges()]
        lines.append("}")
        return "\n".join(lines) + "\n"


def read_graph(path: str) -> Graph:
    with open(path) as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        return Graph.from_json(json.loads(text))
    return Graph.from_text(text)


def write_graph(g: Graph, path: str) -> None:
    with open(path, "w") as fh:
        if path.endswith(".json"):
            json.dump(g.to_json(), fh)
        else:
            fh.write(g.to_text())


# metric ------------------------------------------------------------------

def _check_vertex(g: Graph, v: int) -> None:
    if not (isinstance(v, int) and 0 <= v < g.n):
        raise ValueError(f"invalid vertex {v!r} for graph on {g.n} vertices")


def bfs_layers(g: Graph, sources: int, within: int | None = None) -> list[int]:
    """Successive distance layers (as masks) from ``sources`` inside ``within``."""
    allowed = g.all if within is None else within
    frontier = sources & allowed
    seen = frontier
    layers = []
    adj = g.adj
    while frontier:
        layers.append(frontier)
        nxt = 0
        for v in members(frontier):
            nxt |= adj[v]
        nxt &= allowed & ~seen
        seen |= nxt
        frontier = nxt
    return layers


def distance(g: Graph, u: int, v: int, within: int | None = None) -> float:
    _check_vertex(g, u)
    _check_vertex(g, v)
    return set_distance(g, 1 << u, 1 << v, within)


def set_distance(g: Graph, a, b, within: int | None = None) -> float:
    a, b = to_mask(a), to_mask(b)
    if not a or not b:
        raise ValueError("set_distance needs two nonempty sets")
    for i, layer in enumerate(bfs_layers(g, a, within)):
        if layer & b:
            return i
    return INF


def distances_from(g: Graph, sources, within: int | None = None) -> dict[int, int]:
    out = {}
    for i, layer in enumerate(bfs_layers(g, to_mask(sources), within)):
        for v in members(layer):
            out[v] = i
    return out


def ball(g: Graph, v: int, rho: int) -> int:
    _check_vertex(g, v)
    return ball_of_set(g, 1 << v, rho)


def ball_of_set(g: Graph, s: int, rho: int, within: int | None = None) -> int:
    """Vertices of ``within`` at G-distance at most ``rho`` from ``s``."""
    out = 0
    for i, layer in enumerate(bfs_layers(g, s)):
        if i > rho:
            break
        out |= layer
    return out if within is None else out & within


def shortest_path(g: Graph, sources: int, targets: int, within: int | None = None) -> list[int] | None:
    """Lexicographically least shortest path from the set ``sources`` to ``targets``.

    Interior and endpoints are restricted to ``within`` when given (endpoints
    must themselves lie in ``sources``/``targets``).  Returns ``None`` when no
    path exists.
    """
    allowed = (g.all if within is None else within) | sources | targets
    back = bfs_layers(g, targets, allowed)
    dist = {}
    for i, layer in enumerate(back):
        for v in members(layer):
            dist[v] = i
    starts = [v for v in members(sources) if v in dist]
    if not starts:
        return None
    best = min(dist[v] for v in starts)
    v = min(v for v in starts if dist[v] == best)
    path = [v]
    while dist[v] > 0:
        nxt = min(w for w in members(g.adj[v] & allowed) if dist.get(w, -1) == dist[v] - 1)
        path.append(nxt)
        v = nxt
    return path


def induced_subgraph(g: Graph, s) -> tuple[Graph, list[int]]:
    """Induced subgraph on ``s`` plus the list mapping new ids to host ids."""
    verts = members(to_mask(s))
    index = {v: i for i, v in enumerate(verts)}
    adj = []
    for v in verts:
        m = 0
        for w in members(g.adj[v] & to_mask(s)):
            m |= 1 << index[w]
        adj.append(m)
    return Graph.from_adjacency(adj), verts


def components(g: Graph, within=None) -> list[int]:
    """Connected components (masks) of ``g[within]``, ordered by least vertex."""
    rest = g.all if within is None else to_mask(within)
    out = []
    while rest:
        v = lowest(rest)
        comp = 0
        for layer in bfs_layers(g, 1 << v, rest):
            comp |= layer
        out.append(comp)
        rest &= ~comp
    return out


def is_connected(g: Graph, within=None) -> bool:
    return len(components(g, within)) <= 1


def is_induced_path(g: Graph, path: Sequence[int]) -> bool:
    if len(set(path)) != len(path):
        return False
    pos = {v: i for i, v in enumerate(path)}
    for i, v in enumerate(path):
        for w in members(g.adj[v]):
            j = pos.get(w)
            if j is not None and abs(i - j) != 1:
                return False
        if i + 1 < len(path) and not g.has_edge(v, path[i + 1]):
            return False
    return True


def eccentricity(g: Graph, v: int, within: int | None = None) -> float:
    layers = bfs_layers(g, 1 << v, within)
    reach = 0
    for layer in layers:
        reach |= layer
    if within is not None and reach != within:
        return INF
    if within is None and reach != g.all:
        return INF
    return len(layers) - 1


def diameter(g: Graph) -> float:
    if g.n == 0:
        return 0
    return max(eccentricity(g, v) for v in range(g.n))


# small named graphs --------------------------------------------------------

def path_graph(n: int) -> Graph:
    return Graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle_graph(n: int) -> Graph:
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete_graph(n: int) -> Graph:
    return Graph(n, [(i, j) for i in range(n) for j in range(i + 1, n)])


def empty_graph(n: int) -> Graph:
    return Graph(n)


def star_graph(leaves: int) -> Graph:
    return Graph(leaves + 1, [(0, i) for i in range(1, leaves + 1)])


def petersen_graph() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph(10, outer + spokes + inner)


def disjoint_union(*graphs: Graph) -> Graph:
    edges, offset = [], 0
    for h in graphs:
        edges += [(u + offset, v + offset) for u, v in h.edges()]
        offset += h.n
    return Graph(offset, edges)


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Graph with vertex ``v`` renamed ``perm[v]``."""
    return Graph(g.n, [(perm[u], perm[v]) for u, v in g.edges()])


# multigraphs ---------------------------------------------------------------

@dataclass(frozen=True)
class Multigraph:
    n: int
    edges: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        es = tuple((int(u), int(v)) for u, v in self.edges)
        for u, v in es:
            if u == v:
                raise ValueError(f"loop at {u}")
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge {u}-{v} out of range")
        object.__setattr__(self, "edges", es)

    def underlying(self) -> Graph:
        return Graph(self.n, set((min(u, v), max(u, v)) for u, v in self.edges))

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for u, w in self.edges)


def fatten(m: Multigraph, multiplicities: Sequence[int]) -> Multigraph:
    if len(multiplicities) != len(m.edges):
        raise ValueError("one multiplicity per edge required")
    out = []
    for e, k in zip(m.edges, multiplicities):
        if k < 1:
            raise ValueError("fattening multiplicities must be at least 1")
        out += [e] * k
    return Multigraph(m.n, tuple(out))


def multigraph_from_graph(g: Graph) -> Multigraph:
    return Multigraph(g.n, tuple(g.edges()))


# rooted trees --------------------------------------------------------------

@dataclass(frozen=True)
class RootedTree:
    tree: Graph
    root: int
    parent: tuple = field(init=False, repr=False, compare=False)
    depth: tuple = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        t = self.tree
        if t.n == 0 or not 0 <= self.root < t.n:
            raise ValueError("root must be a vertex of a nonnull tree")
        if t.edge_count != t.n - 1 or not is_connected(t):
            raise ValueError("rooted tree must be connected and acyclic")
        parent = [-1] * t.n
        depth = [0] * t.n
        order = [self.root]
        seen = 1 << self.root
        for v in order:
            for w in members(t.adj[v] & ~seen):
                seen |= 1 << w
                parent[w] = v
                depth[w] = depth[v] + 1
                order.append(w)
        object.__setattr__(self, "parent", tuple(parent))
        object.__setattr__(self, "depth", tuple(depth))

    @classmethod
    def from_parents(cls, parents: Sequence[int]) -> "RootedTree":
        """Build from a parent array; the root is the unique entry equal to -1."""
        roots = [v for v, p in enumerate(parents) if p < 0]
        if len(roots) != 1:
            raise ValueError("exactly one root expected")
        return cls(Graph(len(parents), [(v, p) for v, p in enumerate(parents) if p >= 0]), roots[0])

    @property
    def n(self) -> int:
        return self.tree.n

    def children(self, v: int) -> list[int]:
        return [w for w in self.tree.neighbours(v) if self.parent[w] == v]

    def is_ancestor(self, v: int, u: int) -> bool:
        """True when ``v`` lies on the path from ``u`` to the root (``u`` included)."""
        while u != -1:
            if u == v:
                return True
            u = self.parent[u]
        return False

    def is_descendant(self, u: int, v: int) -> bool:
        return self.is_ancestor(v, u)

    def incomparable(self, u: int, v: int) -> bool:
        return not self.is_ancestor(u, v) and not self.is_ancestor(v, u)

    def ancestors(self, u: int, strict: bool = False) -> list[int]:
        """Ancestors of ``u`` listed from ``u`` (or its parent) up to the root."""
        out = []
        v = self.parent[u] if strict else u
        while v != -1:
            out.append(v)
            v = self.parent[v]
        return out

    def descendants(self, v: int, strict: bool = False) -> list[int]:
        out = [] if strict else [v]
        stack = self.children(v)
        while stack:
            w = stack.pop()
            out.append(w)
            stack.extend(self.children(w))
        return sorted(out)

    def leaves(self) -> list[int]:
        return [v for v in range(self.n) if not self.children(v)]

    @property
    def height(self) -> int:
        return max(self.depth)

    def path_between(self, u: int, v: int) -> list[int]:
        up = self.ancestors(u)
        vs = self.ancestors(v)
        common = next(w for w in up if w in set(vs))
        left = up[: up.index(common) + 1]
        right = vs[: vs.index(common)]
        return left + right[::-1]

    def to_json(self) -> dict:
        return {"parents": list(self.parent)}

    @classmethod
    def from_json(cls, data: dict) -> "RootedTree":
        return cls.from_parents(data["parents"])


def ancestor(t: RootedTree, v: int, u: int) -> bool:
    return t.is_ancestor(v, u)


def descendant(t: RootedTree, u: int, v: int) -> bool:
    return t.is_ancestor(v, u)


def incomparable(t: RootedTree, u: int, v: int) -> bool:
    return t.incomparable(u, v)


def leaves_L(t: RootedTree) -> int:
    """Vertices with no children; for the one-vertex tree this is the root."""
    return to_mask(t.leaves())


def uniform_tree(arity: int, height: int) -> RootedTree:
    """Uniform ``arity``-ary rooted tree of the given height, root 0, BFS ids."""
    parents = [-1]
    frontier = [0]
    for _ in range(height):
        nxt = []
        for v in frontier:
            for _ in range(arity):
                parents.append(v)
                nxt.append(len(parents) - 1)
        frontier = nxt
    return RootedTree.from_parents(parents)


def rooted_path(length: int) -> RootedTree:
    """Path t_0 - ... - t_length rooted at t_0 (vertex ids equal indices)."""
    return RootedTree.from_parents([-1] + list(range(length)))


def subdivide_tree_edges(t: RootedTree, length: int) -> tuple[RootedTree, dict[int, int]]:
    """Replace each edge by a path of ``length`` edges; returns tree and old->new ids."""
    parents = [-1]
    old_to_new = {t.root: 0}
    order = sorted(range(t.n), key=lambda v: t.depth[v])
    for v in order:
        if v == t.root:
            continue
        prev = old_to_new[t.parent[v]]
        for _ in range(length - 1):
            parents.append(prev)
            prev = len(parents) - 1
        parents.append(prev)
        old_to_new[v] = len(parents) - 1
    return RootedTree.from_parents(parents), old_to_new
