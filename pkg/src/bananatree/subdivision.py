"""Induced subdivisions and immersions: construction, search and verification.

Searches are exact backtracking over branch-vertex images followed by path
growth with inducedness checked on every extension.  The verifiers are
written independently of the searches and re-derive every condition from the
host graph.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .graphs import Graph, Multigraph, bfs_layers, members, to_mask
from .invariants import BudgetExhausted, _Budget  # noqa: F401


@dataclass(frozen=True)
class SubdivisionSpec:
    """Multigraph ``host`` plus a minimum path length for each edge copy."""

    host: Multigraph
    min_length: tuple = ()

    def __post_init__(self):
        ml = tuple(self.min_length) if self.min_length else (1,) * len(self.host.edges)
        if len(ml) != len(self.host.edges):
            raise ValueError("one min_length per edge required")
        if any(x < 1 for x in ml):
            raise ValueError("min_length must be at least 1")
        object.__setattr__(self, "min_length", ml)

    @classmethod
    def from_edges(cls, n: int, edges: Sequence[Sequence[int]]) -> "SubdivisionSpec":
        """Edges given as ``(u, v)`` or ``(u, v, min_length)``."""
        es = [(e[0], e[1]) for e in edges]
        ml = [e[2] if len(e) > 2 else 1 for e in edges]
        return cls(Multigraph(n, tuple(es)), tuple(ml))

    @property
    def edges(self):
        return self.host.edges

    def effective_min(self) -> list[int]:
        """Per-copy minimum, raised to 2 for every copy beyond the first of a parallel class."""
        # only the shortest copy of a parallel class may be a single edge
        seen = set()
        eff = list(self.min_length)
        for i in sorted(range(len(self.edges)), key=lambda i: self.min_length[i]):
            key = frozenset(self.edges[i])
            if key in seen:
                eff[i] = max(eff[i], 2)
            seen.add(key)
        return eff

    def minimal_vertex_count(self) -> int:
        return self.host.n + sum(x - 1 for x in self.effective_min())

    def to_json(self) -> dict:
        return {"n": self.host.n, "edges": [[u, v, m] for (u, v), m in zip(self.edges, self.min_length)]}

    @classmethod
    def from_json(cls, data: dict) -> "SubdivisionSpec":
        return cls.from_edges(int(data["n"]), data["edges"])


@dataclass(frozen=True)
class SubdivisionEmbedding:
    branch_map: tuple
    paths: tuple  # one vertex sequence per spec edge, from image of u to image of v

    def vertices(self) -> set[int]:
        out = set(self.branch_map)
        for p in self.paths:
            out.update(p)
        return out

    def to_json(self) -> dict:
        return {"branch_map": list(self.branch_map), "paths": [list(p) for p in self.paths]}

    @classmethod
    def from_json(cls, data: dict) -> "SubdivisionEmbedding":
        return cls(tuple(data["branch_map"]), tuple(tuple(p) for p in data["paths"]))


@dataclass(frozen=True)
class ImmersionEmbedding:
    branch_map: tuple
    paths: dict = field(hash=False)  # (i, j) with i < j -> vertex sequence from phi(i) to phi(j)

    @property
    def n(self) -> int:
        return len(self.branch_map)

    def to_json(self) -> dict:
        return {
            "branch_map": list(self.branch_map),
            "paths": [[i, j, list(p)] for (i, j), p in sorted(self.paths.items())],
        }

    @classmethod
    def from_json(cls, data: dict) -> "ImmersionEmbedding":
        return cls(tuple(data["branch_map"]), {(i, j): tuple(p) for i, j, p in data["paths"]})


# construction ---------------------------------------------------------------

def subdivide(spec: SubdivisionSpec, lengths: Sequence[int]) -> Graph:
    """Realize the subdivision with the given path lengths.

    Branch vertices keep ids ``0..n-1``; subdivision vertices are appended in
    edge order.
    """
    if len(lengths) != len(spec.edges):
        raise ValueError("one length per edge required")
    direct = set()
    for (u, v), ln, lo in zip(spec.edges, lengths, spec.min_length):
        if ln < lo:
            raise ValueError(f"length {ln} below minimum {lo} for edge {u}-{v}")
        if ln == 1:
            key = frozenset((u, v))
            if key in direct:
                raise ValueError(f"two length-1 copies of edge {u}-{v} would create a multi-edge")
            direct.add(key)
    n = spec.host.n
    edges = []
    for (u, v), ln in zip(spec.edges, lengths):
        prev = u
        for _ in range(ln - 1):
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, v))
    return Graph(n, edges)


def build_k_nu_1(nu: int) -> Graph:
    """K_nu with every edge subdivided once; branch vertices are ``0..nu-1``."""
    if nu < 1:
        raise ValueError("nu must be at least 1")
    return subdivide(knu1_spec(nu), [2] * (nu * (nu - 1) // 2))


def knu1_spec(nu: int) -> SubdivisionSpec:
    """Spec whose realizations are exactly the subdivisions of K_nu^1."""
    edges = [(i, j, 2) for i in range(nu) for j in range(i + 1, nu)]
    return SubdivisionSpec.from_edges(nu, edges)


# verification -----------------------------------------------------------------

def verify_subdivision_embedding(g: Graph, spec: SubdivisionSpec, emb: SubdivisionEmbedding) -> tuple[bool, list[str]]:
    """Check an embedding against the host; returns ``(ok, violations)``.

    Violation strings start with a tag: ``shape``, ``injective``, ``path``,
    ``length``, ``disjoint`` or ``inducedness``.
    """
    bad = []
    H = spec.host
    if len(emb.branch_map) != H.n or len(emb.paths) != len(H.edges):
        return False, ["shape: branch map or path list has wrong size"]
    if any(not (0 <= v < g.n) for v in emb.branch_map):
        return False, ["shape: branch vertex out of range"]
    if len(set(emb.branch_map)) != H.n:
        bad.append("injective: branch map is not injective")
    branch = set(emb.branch_map)
    owner: dict[int, int] = {}
    edge_set = set()
    for idx, ((u, v), path, lo) in enumerate(zip(H.edges, emb.paths, spec.min_length)):
        path = list(path)
        if len(path) < 2 or path[0] != emb.branch_map[u] or path[-1] != emb.branch_map[v]:
            bad.append(f"path: edge {idx} does not join the images of {u},{v}")
            continue
        if any(not (0 <= x < g.n) for x in path) or len(set(path)) != len(path):
            bad.append(f"path: edge {idx} repeats or leaves the host")
            continue
        for a, b in zip(path, path[1:]):
            if not g.has_edge(a, b):
                bad.append(f"path: edge {idx} uses non-edge {a}-{b}")
            edge_set.add(frozenset((a, b)))
        if len(path) - 1 < lo:
            bad.append(f"length: edge {idx} has length {len(path) - 1} < {lo}")
        for x in path[1:-1]:
            if x in branch:
                bad.append(f"disjoint: interior vertex {x} of edge {idx} is a branch vertex")
            elif x in owner:
                bad.append(f"disjoint: vertex {x} shared by edges {owner[x]} and {idx}")
            else:
                owner[x] = idx
    if len(edge_set) != sum(len(p) - 1 for p in emb.paths) and not any(b.startswith("path") for b in bad):
        bad.append("disjoint: two paths share an edge")
    verts = sorted(branch | set(owner))
    for i, a in enumerate(verts):
        for b in verts[i + 1:]:
            if g.has_edge(a, b) and frozenset((a, b)) not in edge_set:
                bad.append(f"inducedness: chord {a}-{b}")
    return not bad, bad


def verify_immersion(g: Graph, emb: ImmersionEmbedding) -> tuple[bool, list[str]]:
    """Check the five immersion conditions; returns ``(ok, violations)``."""
    bad = []
    n = emb.n
    phi = list(emb.branch_map)
    if len(set(phi)) != n or any(not (0 <= v < g.n) for v in phi):
        bad.append("injective: branch map not injective or out of range")
        return False, bad
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    if set(emb.paths) != set(pairs):
        return False, ["shape: paths must be indexed by all pairs i<j"]
    paths = {e: list(emb.paths[e]) for e in pairs}
    for (i, j), p in paths.items():
        if p[0] != phi[i] or p[-1] != phi[j]:
            bad.append(f"path: path {i},{j} has wrong ends")
        if len(p) < 3:
            bad.append(f"length: path {i},{j} shorter than 2")
        if not all(0 <= x < g.n for x in p) or not _is_induced_path(g, p):
            bad.append(f"induced: path {i},{j} is not an induced path")
    if bad:
        return False, bad
    for e, f in itertools.combinations(pairs, 2):
        common = set(e) & set(f)
        pe, pf = paths[e], paths[f]
        shared = set(pe) & set(pf)
        allowed = {phi[c] for c in common}
        if shared - allowed:
            bad.append(f"disjoint: paths {e} and {f} share {sorted(shared - allowed)}")
            continue
        if not common:
            if any(g.has_edge(a, b) for a in pe for b in pf):
                bad.append(f"cross: edge between paths {e} and {f} with no common end")
        else:
            (c,) = common
            hub = phi[c]
            re = [x for x in pe if x != hub]
            rf = [x for x in pf if x != hub]
            cross = [(a, b) for a in re for b in rf if g.has_edge(a, b)]
            ne = pe[1] if pe[0] == hub else pe[-2]
            nf = pf[1] if pf[0] == hub else pf[-2]
            if len(cross) > 1:
                bad.append(f"cross: {len(cross)} edges between paths {e} and {f}")
            elif cross and set(cross[0]) != {ne, nf}:
                bad.append(f"cross: edge {cross[0]} between paths {e} and {f} misses the hub neighbours")
    return not bad, bad


def _is_induced_path(g: Graph, p: Sequence[int]) -> bool:
    if len(set(p)) != len(p):
        return False
    for a, b in zip(p, p[1:]):
        if not g.has_edge(a, b):
            return False
    for i in range(len(p)):
        for j in range(i + 2, len(p)):
            if g.has_edge(p[i], p[j]):
                return False
    return True


# search ------------------------------------------------------------------------

def _reachable(g: Graph, start: int, target: int, avail: int) -> bool:
    for layer in bfs_layers(g, 1 << start, avail | 1 << start | 1 << target):
        if layer >> target & 1:
            return True
    return False


def find_induced_subdivision(g: Graph, spec: SubdivisionSpec, budget: int | None = None) -> SubdivisionEmbedding | None:
    """Find an induced subdivision of ``spec`` in ``g``; ``None`` if none exists.

    Raises ``BudgetExhausted`` when the node budget runs out first.
    """
    H = spec.host
    bud = _Budget(budget)
    adj = g.adj
    if H.n > g.n:
        return None
    mins = spec.effective_min()
    # branch vertices in order of decreasing degree in H
    border = sorted(range(H.n), key=lambda v: (-H.degree(v), v))
    cand = sorted(range(g.n), key=lambda v: (-len(members(adj[v])), v))
    edge_idx = sorted(range(len(H.edges)), key=lambda i: (mins[i], i))
    hdeg = [H.degree(v) for v in range(H.n)]

    phi = [None] * H.n
    paths: list = [None] * len(H.edges)

    def assign(k, used):
        bud.tick()
        if k == H.n:
            return place_edges(used)
        u = border[k]
        for x in cand:
            if used >> x & 1 or len(members(adj[x])) < min(hdeg[u], 1):
                continue
            phi[u] = x
            res = assign(k + 1, used | 1 << x)
            if res is not None:
                return res
        phi[u] = None
        return None

    def place_edges(used):
        # decide which copies are direct edges
        direct = {}
        for a in range(H.n):
            for b in range(a + 1, H.n):
                if g.has_edge(phi[a], phi[b]):
                    copies = [i for i in edge_idx if set(H.edges[i]) == {a, b} and mins[i] <= 1]
                    if not copies:
                        return None
                    direct[copies[0]] = True
        for i in direct:
            u, v = H.edges[i]
            paths[i] = [phi[u], phi[v]]
        rest = [i for i in edge_idx if i not in direct]
        return grow(rest, 0, used)

    def grow(rest, k, placed):
        if k == len(rest):
            return SubdivisionEmbedding(tuple(phi), tuple(tuple(p) for p in paths))
        i = rest[k]
        u, v = H.edges[i]
        a, b = phi[u], phi[v]
        return extend(rest, k, placed, [a], b, mins[i])

    def extend(rest, k, placed, path, b, lo):
        bud.tick()
        last = path[-1]
        allowed_nb = (1 << last) | (1 << b)
        avail = 0
        for x in members(~placed & g.all):
            if not (adj[x] & placed & ~allowed_nb):
                avail |= 1 << x
        if not _reachable(g, last, b, avail):
            return None
        for x in members(adj[last] & avail):
            if adj[x] >> b & 1:
                if len(path) + 1 >= lo:
                    paths[rest[k]] = path + [x, b]
                    res = grow(rest, k + 1, placed | 1 << x)
                    if res is not None:
                        return res
                continue
            res = extend(rest, k, placed | 1 << x, path + [x], b, lo)
            if res is not None:
                return res
        return None

    return assign(0, 0)


def find_immersion(g: Graph, n: int, budget: int | None = None) -> ImmersionEmbedding | None:
    """Find an immersion of K_n in ``g``; ``None`` if none exists."""
    if n < 1:
        raise ValueError("n must be at least 1")
    if n > g.n:
        return None
    bud = _Budget(budget)
    adj = g.adj
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    phi: list = [None] * n
    owner: dict = {}  # host vertex -> pair index for interior vertices
    paths: dict = {}
    hubnbr: dict = {}  # (pair, end) -> neighbour of that end's image on the path
    crossed: set = set()  # frozenset of two pair indices that already used their one cross edge
    phi_set: set = set()
    cand = sorted(range(g.n), key=lambda v: (-len(members(adj[v])), v))

    def assign(k, used):
        bud.tick()
        if k == n:
            return place(0)
        for x in cand:
            if used >> x & 1 or adj[x] & used:
                continue
            phi[k] = x
            res = assign(k + 1, used | 1 << x)
            if res is not None:
                return res
        return None

    def conflicts(x, e, first, last_vertex):
        """Extra edges created by adding x to pair e's path; None if illegal."""
        i, j = pairs[e]
        new_cross = []
        for y in members(adj[x]):
            if y == last_vertex:
                continue
            if y == phi[j] and last_vertex is not None:
                continue  # closing edge, handled by caller
            if y in phi_set:
                return None
            f = owner.get(y)
            if f is None:
                continue
            if f == e:
                return None
            common = set(pairs[e]) & set(pairs[f])
            if not common:
                return None
            (c,) = common
            # x must be the neighbour of phi(c) on e, y that on f
            x_is = (c == i and first) or (c == j and adj[x] >> phi[j] & 1)
            if not x_is or hubnbr.get((f, c)) != y:
                return None
            new_cross.append(frozenset((e, f)))
        if len(set(new_cross)) != len(new_cross) or any(p in crossed for p in new_cross):
            return None
        return new_cross

    def place(e):
        if e == 0:
            phi_set.clear()
            phi_set.update(phi)
        if e == len(pairs):
            return ImmersionEmbedding(tuple(phi), {pairs[k]: tuple(paths[k]) for k in range(len(pairs))})
        i, j = pairs[e]
        return walk(e, [phi[i]])

    def walk(e, path):
        bud.tick()
        i, j = pairs[e]
        b = phi[j]
        last = path[-1]
        free = g.all & ~to_mask(phi) & ~to_mask(owner)
        if not _reachable(g, last, b, free):
            return None
        first = len(path) == 1
        for x in members(adj[last] & free):
            if any(adj[x] >> p & 1 for p in path[:-1]):
                continue
            closing = bool(adj[x] >> b & 1)
            cr = conflicts(x, e, first, last)
            if cr is None:
                continue
            owner[x] = e
            if first:
                hubnbr[(e, i)] = x
            crossed.update(cr)
            if closing:
                hubnbr[(e, j)] = x
                paths[e] = path + [x, b]
                res = place(e + 1)
            else:
                res = walk(e, path + [x])
            if res is not None:
                return res
            crossed.difference_update(cr)
            hubnbr.pop((e, j), None)
            if first:
                hubnbr.pop((e, i), None)
            del owner[x]
        return None

    return assign(0, 0)
