"""Graph families and planted instances.

Randomness (seeded) only affects wiring order and labels, never whether the
intended hypotheses hold.
"""
from __future__ import annotations

import random
from itertools import combinations

from .graphs import (
    Graph,
    Multigraph,
    RootedTree,
    complete_graph,
    cycle_graph,
    lowest,
    members,
    rooted_path,
    to_mask,
)
from .pineapple import PineappleTree, aligned_triples


# classical families --------------------------------------------------------

def mycielski(iterations: int) -> Graph:
    """Iterated Mycielskian of K_2: triangle-free with chi = iterations + 2."""
    g = complete_graph(2)
    for _ in range(iterations):
        n = g.n
        edges = list(g.edges())
        for u, v in g.edges():
            edges.append((u, n + v))
            edges.append((n + u, v))
        edges.extend((n + v, 2 * n) for v in range(n))
        g = Graph(2 * n + 1, edges)
    return g


def grotzsch_graph() -> Graph:
    return mycielski(2)


def shift_graph(n: int) -> Graph:
    """Pairs (i, j), 1 <= i < j <= n, with (i, j) ~ (j, k)."""
    if n < 2:
        raise ValueError("shift graph needs n >= 2")
    pairs = [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
    idx = {p: a for a, p in enumerate(pairs)}
    edges = [(idx[(i, j)], idx[(j, k)]) for (i, j) in pairs for k in range(j + 1, n + 1)]
    return Graph(len(pairs), edges)


def complete_multipartite(parts) -> Graph:
    bounds, n = [], 0
    for p in parts:
        bounds.append(range(n, n + p))
        n += p
    edges = [(a, b) for r, s in combinations(bounds, 2) for a in r for b in s]
    return Graph(n, edges)


def k4_necklace(blocks: int, link: int, closed: bool = False) -> Graph:
    """K_4's joined in a row by paths of ``link`` edges (chi 4, long diameter);
    ``closed`` also links the last block back to the first."""
    edges, n, prev = [], 0, None
    for _ in range(blocks):
        vs = list(range(n, n + 4))
        n += 4
        edges += list(combinations(vs, 2))
        if prev is not None:
            path = [prev] + list(range(n, n + link - 1)) + [vs[0]]
            n += link - 1
            edges += list(zip(path, path[1:]))
        prev = vs[3]
    if closed and blocks > 1:
        path = [prev] + list(range(n, n + link - 1)) + [1]
        n += link - 1
        edges += list(zip(path, path[1:]))
    return Graph(n, edges)


def random_graph(n: int, p: float, seed: int = 0) -> Graph:
    rng = random.Random(seed)
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def section9_host(k: int) -> Multigraph:
    """Path v_1..v_k with every edge doubled, plus a, b and edges av_1, av_2,
    bv_{k-1}, bv_k, ab.  Vertices 0..k-1 are the path, k is a, k+1 is b."""
    if k < 4:
        raise ValueError("k must be at least 4")
    edges = []
    for i in range(k - 1):
        edges += [(i, i + 1), (i, i + 1)]
    a, b = k, k + 1
    edges += [(a, 0), (a, 1), (b, k - 2), (b, k - 1), (a, b)]
    return Multigraph(k + 2, tuple(edges))


# synthetic pineapple trees -------------------------------------------------

class _Builder:
    def __init__(self):
        self.n = 0
        self.edges = []

    def new(self, count=1):
        out = list(range(self.n, self.n + count))
        self.n += count
        return out

    def path_to(self, start, length):
        """Append a path of ``length`` new vertices hanging from ``start``; returns them."""
        vs = self.new(length)
        prev = start
        for v in vs:
            self.edges.append((prev, v))
            prev = v
        return vs

    def add_graph(self, g: Graph):
        vs = self.new(g.n)
        self.edges += [(vs[a], vs[b]) for a, b in g.edges()]
        return vs


def _blob(spec):
    if isinstance(spec, Graph):
        return spec
    if isinstance(spec, int):
        return complete_graph(spec)
    return complete_multipartite(spec)


def build_synthetic_pineapple_tree(shape: RootedTree, profile: dict | None = None,
                                   flavour: str = "fruitful", seed: int = 0,
                                   pattern: dict | None = None):
    """Host graph and pineapple tree of the given shape.

    ``profile`` keys (all optional):
      blob    leaf set: Graph, clique size, or list of part sizes; or a dict leaf -> any of these
      attach  vertices of X_v^u per (v, u), or "pendant" for one per vertex of C_u
      leg     length of the spider legs in each Y_v (>= 1)
      legs    "per_leaf" (one leg per leaf below v, shared by its attach vertices)
              or "per_x" (one leg per attach vertex)
    ``flavour`` is "barren", "fruitful" or "mixed"; ``pattern`` maps aligned
    triples to "none"/"all"/"mixed" and overrides it.
    """
    profile = dict(profile or {})
    blob = profile.get("blob", [2, 2, 2])
    attach = profile.get("attach", 2)
    leg = profile.get("leg", 2)
    legs = profile.get("legs", "per_leaf")
    if leg < 1:
        raise ValueError("leg length must be at least 1")
    if attach != "pendant" and attach < 1:
        raise ValueError("attach must be positive or 'pendant'")
    if flavour not in ("barren", "fruitful", "mixed"):
        raise ValueError(f"unknown flavour {flavour!r}")
    rng = random.Random(seed)
    b = _Builder()
    leaves = shape.leaves()
    pt = PineappleTree(shape, Graph(0))
    cverts = {}
    for u in leaves:
        spec = blob.get(u, [2, 2, 2]) if isinstance(blob, dict) else blob
        cverts[u] = b.add_graph(_blob(spec))
    nonleaf = [v for v in range(shape.n) if shape.children(v)]
    # X_v^u vertices and their cover wiring into C_u
    xvu = {}
    for v in nonleaf:
        for u in leaves:
            if u == v or not shape.is_ancestor(v, u):
                continue
            cs = cverts[u]
            m = len(cs) if attach == "pendant" else min(attach, len(cs))
            xs = b.new(m)
            xvu[(v, u)] = xs
            order = list(cs)
            rng.shuffle(order)
            # every x gets at least one c; every c exactly one x
            for i, c in enumerate(order):
                b.edges.append((xs[i % m], c))
    # Y_v spiders
    labels = _triple_labels(shape, flavour, pattern, attach, rng)
    legs_end = {}
    for v in nonleaf:
        z0 = b.new()[0]
        pt.z0[v] = z0
        ys = [z0]
        below = [u for u in leaves if u != v and shape.is_ancestor(v, u)]
        keys = []
        for u in below:
            if legs == "per_leaf":
                keys.append((u, None))
            else:
                for w in [v] + [a for a in shape.ancestors(v, strict=True)]:
                    for x in xvu[(w, u)]:
                        keys.append((u, x))
        for key in keys:
            path = b.path_to(z0, leg)
            ys += path
            legs_end[(v,) + key] = path[-1]
        pt.Y[v] = to_mask(ys)
        xs = [x for u in below for x in xvu[(v, u)]]
        pt.X[v] = to_mask(xs)
        for u in below:
            for x in xvu[(v, u)]:
                b.edges.append((x, legs_end[(v, u, None if legs == "per_leaf" else x)]))
    for (u, v, w), lab in labels.items():
        xs = xvu[(v, u)]
        if lab == "none":
            continue
        chosen = xs if lab == "all" else xs[: max(1, len(xs) // 2)]
        for x in chosen:
            b.edges.append((x, legs_end[(w, u, None if legs == "per_leaf" else x)]))
    host = Graph(b.n, b.edges)
    pt.host = host
    for u in leaves:
        pt.C[u] = to_mask(cverts[u])
    return host, pt


def _triple_labels(shape, flavour, pattern, attach, rng):
    triples = aligned_triples(shape)
    if pattern is not None:
        return {t: pattern.get(t, "none") for t in triples}
    if flavour == "barren":
        return {t: "none" for t in triples}
    if flavour == "fruitful":
        return {t: "all" for t in triples}
    can_mix = attach == "pendant" or attach >= 2
    labels = {t: rng.choice(["none", "all", "mixed"] if can_mix else ["none", "all"]) for t in triples}
    if triples and can_mix and "mixed" not in labels.values():
        labels[rng.choice(triples)] = "mixed"
    return labels


def random_shape(n: int, rng: random.Random, min_leaves: int = 1) -> RootedTree:
    """Random rooted tree on n vertices (root 0) with at least ``min_leaves`` leaves."""
    while True:
        parents = [-1] + [rng.randrange(i) for i in range(1, n)]
        t = RootedTree.from_parents(parents)
        if len(t.leaves()) >= min_leaves:
            return t


# planted instances ---------------------------------------------------------

def plant_gettree_instance(shape: RootedTree, d: int = 2, blob=(1, 1, 1, 1)):
    """Host whose BFS layering from vertex 0 reproduces ``shape``.

    Each leaf is a blob; a non-leaf is a new centre z0 joined by a private path of
    length j to every vertex of each child gadget, with 2j >= d + 4, so the child
    gadgets form one BFS layer and sit pairwise at distance 2j > d + 3.
    Returns (graph, bundle) with the parameters gettree needs.
    """
    from .invariants import chi

    j = max(2, (d + 5) // 2)
    b = _Builder()
    blob_g = _blob(list(blob))

    def gadget(v):
        # everything allocated here is contiguous, with z0 first
        start = b.n
        kids = shape.children(v)
        if not kids:
            b.add_graph(blob_g)
            return list(range(start, b.n))
        z0 = b.new()[0]
        inner = [x for w in kids for x in gadget(w)]
        for x in inner:
            path = b.path_to(z0, j - 1)
            b.edges.append((path[-1], x))
        return list(range(start, b.n))

    gadget(shape.root)
    g = Graph(b.n, b.edges)
    c = chi(blob_g) - 1
    return g, {"Z": list(range(g.n)), "shape": shape, "nu": 3, "c": c, "d": d, "tau": c + 1}


def plant_two_blob_instance(d: int = 1, size: int = 4, seed: int = 0) -> Graph:
    """Two K_size joined by a path of length d + 5, labels shuffled by ``seed``."""
    link = d + 5
    edges = list(combinations(range(size), 2)) + list(combinations(range(size, 2 * size), 2))
    path = [size - 1] + list(range(2 * size, 2 * size + link - 1)) + [size]
    edges += list(zip(path, path[1:]))
    n = 2 * size + link - 1
    return relabel_seeded(Graph(n, edges), seed)


def relabel_seeded(g: Graph, seed: int) -> Graph:
    from .graphs import relabel

    if seed == 0:
        return g
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    return relabel(g, perm)


def plant_barren_path_instance(n: int, leg: int = 2, seed: int = 0):
    """Barren pineapple tree on a rooted path of length n^2 whose leaf set is n
    disjoint copies of K_{n+1}: chi(C_u) = n + 1 > n * tau for tau = 1, and one
    vertex per copy gives n vertices pairwise at distance at least 3."""
    from .graphs import disjoint_union

    shape = rooted_path(n * n)
    blob = disjoint_union(*[complete_graph(n + 1) for _ in range(n)])
    g, pt = build_synthetic_pineapple_tree(
        shape, {"blob": blob, "attach": "pendant", "leg": leg}, flavour="barren", seed=seed)
    leaf = shape.leaves()[0]
    vs = [members(pt.C[leaf])[i * (n + 1)] for i in range(n)]
    return g, {"tree": pt, "n": n, "tau": 1, "vs": vs}


def plant_internalroute_instance(n: int = 2, rho: int = 4, tau: int = 1, cycle: int = 11):
    """Odd cycle Z with one pendant x per vertex, so X covers Z and each x sees an
    independent set."""
    if tau < 1:
        raise ValueError("tau must be at least 1")
    z = cycle_graph(cycle)
    edges = list(z.edges()) + [(v, cycle + v) for v in range(cycle)]
    g = Graph(2 * cycle, edges)
    return g, {"X": list(range(cycle, 2 * cycle)), "Z": list(range(cycle)), "rho": rho, "tau": tau, "n": n}


def plant_bigshare_instance(n: int = 2, k: int = 2, leg: int = 2, seed: int = 0):
    """Fruitful tree on a root path r - w_1 - ... - w_M with k leaves below w_M,
    where M = (n-1)k(k-1)/2 + 1; every limb runs from a leaf up to r."""
    from .banana import LimbFamily

    if k < 2 or n < 1:
        raise ValueError("need k >= 2 and n >= 1")
    m = (n - 1) * k * (k - 1) // 2 + 1
    parents = [-1] + list(range(m)) + [m] * k
    shape = RootedTree.from_parents(parents)
    g, pt = build_synthetic_pineapple_tree(
        shape, {"blob": [1], "attach": 1, "leg": leg}, flavour="fruitful", seed=seed)
    leaves = shape.leaves()
    fam = LimbFamily(shape, tuple((u, 0) for u in leaves))
    anchors = [lowest(g.adj[lowest(pt.C[u])] & pt.X[0]) for u in leaves]
    half = k // 2
    return g, {"tree": pt, "limbs": fam, "anchors": anchors, "W": list(range(1, m + 1)),
               "I": list(range(half)), "J": list(range(half, k)), "n": n}


def plant_banana_tree_instance(skeleton: Graph, thickness=2, min_lengths=(1, 2), leg: int = 2, seed: int = 0):
    """Fruitful tree on the limb tree realizing ``skeleton`` as an n-overlap graph,
    n the vertex count of the smallest subdivision of the target banana tree."""
    from .banana import banana_tree_spec, getforest

    spec = banana_tree_spec(skeleton, thickness, list(min_lengths) if min_lengths else None)
    n = max(3, spec.minimal_vertex_count())
    fam, iso = getforest(skeleton, n)
    g, pt = build_synthetic_pineapple_tree(
        fam.tree, {"blob": [1], "attach": 1, "leg": leg}, flavour="fruitful", seed=seed)
    return g, {"tree": pt, "limbs": fam, "iso": iso, "skeleton": skeleton, "spec": spec, "n": n}


def plant_fat_cycle_instance(m: int = 3, n: int = 3, leg: int = 2, seed: int = 0):
    """Fruitful tree on the binary tree of height m with edges subdivided 2n^3 times."""
    from .graphs import subdivide_tree_edges, uniform_tree

    shape, _ = subdivide_tree_edges(uniform_tree(2, m), 2 * n ** 3)
    g, pt = build_synthetic_pineapple_tree(
        shape, {"blob": [1], "attach": 1, "leg": leg}, flavour="fruitful", seed=seed)
    return g, {"tree": pt, "m": m, "n": n}


def plant_fat_triangle_instance(n: int = 3, tau: int = 1, blocks: int = 4, link: int = 5,
                                leg: int = 2, seed: int = 0):
    """Fruitful tree on a rooted path of length 3n whose leaf set is a closed K_4
    necklace (chi 4 > 3 tau for tau = 1), one attach vertex per leaf vertex and one
    leg each.  The ring stays connected when single vertices are removed."""
    shape = rooted_path(3 * n)
    blob = k4_necklace(blocks, link, closed=True)
    g, pt = build_synthetic_pineapple_tree(
        shape, {"blob": blob, "attach": "pendant", "leg": leg, "legs": "per_x"},
        flavour="fruitful", seed=seed)
    return g, {"tree": pt, "n": n, "tau": tau}


def plant_router_instance(k: int = 3, ell: int = 3):
    """k stars X_i (centre plus ell leaves) and ell vertices v_j, with v_j joined to
    leaf j of every star by a path of length 2.  Router hypotheses hold for d = 2:
    the X_i are 4 apart, the v_j are 6 apart, every X_i is 2 from every v_j."""
    b = _Builder()
    vs = b.new(ell)
    xsets = []
    for _ in range(k):
        centre = b.new()[0]
        leaves = b.new(ell)
        b.edges += [(centre, a) for a in leaves]
        for j, a in enumerate(leaves):
            m = b.new()[0]
            b.edges += [(a, m), (m, vs[j])]
        xsets.append([centre] + leaves)
    return Graph(b.n, b.edges), {"X": xsets, "v": vs, "d": 2}
