"""Pineapple trees: construction, pruning, the tree Ramsey lemma, and the
barren/fruitful dichotomy.

A pineapple tree hangs a levelled pineapple (X_v, Y_v) on every non-leaf v of a
rooted shape and a set C_u on every leaf u.  All sets are vertex masks of a
host graph.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from itertools import combinations

from . import constants
from .extraction import (
    DistantFamily,
    HypothesisError,
    ImmersionFound,
    TooSmall,
    _dense_ball_check,
    moredistant_split,
)
from .graphs import (
    INF,
    Graph,
    RootedTree,
    bfs_layers,
    components,
    distances_from,
    eccentricity,
    is_connected,
    lowest,
    members,
    popcount,
    set_distance,
    shortest_path,
    to_mask,
    uniform_tree,
)
from .invariants import chi, clique_number, ramsey_split
from .subdivision import ImmersionEmbedding, verify_immersion


@dataclass
class PineappleTree:
    shape: RootedTree
    host: Graph
    X: dict = field(default_factory=dict)  # non-leaf -> mask
    Y: dict = field(default_factory=dict)  # non-leaf -> mask
    C: dict = field(default_factory=dict)  # leaf -> mask
    z0: dict = field(default_factory=dict)  # non-leaf -> levelling centre in Y
    kind = "pineapple_tree"

    def is_leaf(self, v: int) -> bool:
        return not self.shape.children(v)

    def cset(self, v: int) -> int:
        if self.is_leaf(v):
            return self.C.get(v, 0)
        return self.X.get(v, 0) | self.Y.get(v, 0)

    def vertex_set(self) -> int:
        out = 0
        for v in range(self.shape.n):
            out |= self.cset(v)
        return out

    def copy(self) -> "PineappleTree":
        return PineappleTree(self.shape, self.host, dict(self.X), dict(self.Y), dict(self.C), dict(self.z0))

    def to_json(self) -> dict:
        def enc(d):
            return {str(v): members(m) for v, m in sorted(d.items())}

        return {
            "shape": self.shape.to_json(),
            "X": enc(self.X),
            "Y": enc(self.Y),
            "C": enc(self.C),
            "z0": {str(v): z for v, z in sorted(self.z0.items())},
        }

    @classmethod
    def from_json(cls, data: dict, host: Graph) -> "PineappleTree":
        def dec(d):
            return {int(v): to_mask(m) for v, m in d.items()}

        return cls(
            RootedTree.from_json(data["shape"]),
            host,
            dec(data.get("X", {})),
            dec(data.get("Y", {})),
            dec(data.get("C", {})),
            {int(v): z for v, z in data.get("z0", {}).items()},
        )


# verification ---------------------------------------------------------------

def levelling_centre(g: Graph, x: int, y: int, hint: int | None = None) -> int | None:
    """A z0 in Y with ecc_{G[Y]}(z0) < dist_{G[X u Y]}(z0, X), or None."""
    cands = members(y)
    if hint is not None and y >> hint & 1:
        cands = [hint] + [z for z in cands if z != hint]
    for z in cands:
        ecc = eccentricity(g, z, y)
        if ecc == INF:
            return None
        if ecc + 1 <= set_distance(g, 1 << z, x, x | y):
            return z
    return None


def verify_pineapple_tree(pt: PineappleTree) -> tuple[bool, list[str]]:
    """Check every pineapple-tree axiom; violations name the vertices involved."""
    g, t = pt.host, pt.shape
    bad = []
    sets = {v: pt.cset(v) for v in range(t.n)}
    for v in range(t.n):
        if not sets[v]:
            bad.append(f"empty: C_{v} is empty")
    for u, v in combinations(range(t.n), 2):
        if sets[u] & sets[v]:
            bad.append(f"overlap: C_{u} and C_{v} intersect")
    for v in range(t.n):
        if pt.is_leaf(v):
            continue
        x, y = pt.X.get(v, 0), pt.Y.get(v, 0)
        if x & y:
            bad.append(f"pineapple-cover: X_{v} and Y_{v} intersect")
        if not x or not y:
            bad.append(f"pineapple-cover: X_{v} or Y_{v} is empty")
            continue
        if any(not g.adj[a] & y for a in members(x)):
            bad.append(f"pineapple-cover: Y_{v} does not cover X_{v}")
        if not is_connected(g, y):
            bad.append(f"pineapple-connected: Y_{v} is not connected")
        elif levelling_centre(g, x, y, pt.z0.get(v)) is None:
            bad.append(f"levelled: ({v}) is not a levelled pineapple")
    for u, v in combinations(range(t.n), 2):
        if t.incomparable(u, v) and sets[u] and sets[v] and g.has_edge_between(sets[u], sets[v]):
            bad.append(f"incomparable-edge: edge between C_{u} and C_{v}")
    for u in range(t.n):
        for v in t.ancestors(u, strict=True):
            y = pt.Y.get(v, 0)
            if sets[u] and y and g.has_edge_between(sets[u], y):
                bad.append(f"descendant-Y-edge: edge between C_{u} and Y_{v}")
            if pt.is_leaf(u):
                x = pt.X.get(v, 0)
                if any(not g.adj[a] & x for a in members(sets[u])):
                    bad.append(f"leaf-cover: X_{v} does not cover C_{u}")
    return not bad, bad


def leaf_separation(pt: PineappleTree) -> float:
    """Least G-distance between leaf sets of incomparable leaves (INF if none)."""
    best = INF
    leaves = pt.shape.leaves()
    for a, b in combinations(leaves, 2):
        if pt.C.get(a) and pt.C.get(b):
            best = min(best, set_distance(pt.host, pt.C[a], pt.C[b]))
    return best


def attach_sets(pt: PineappleTree) -> dict:
    """X_v^u for every leaf u and non-leaf strict ancestor v: the vertices of X_v
    with a neighbour in C_u."""
    g = pt.host
    out = {}
    for u in pt.shape.leaves():
        nb = g.neighbourhood(pt.C.get(u, 0))
        for v in pt.shape.ancestors(u, strict=True):
            out[(v, u)] = pt.X.get(v, 0) & nb
    return out


def aligned_triples(t: RootedTree) -> list[tuple[int, int, int]]:
    """All (u, v, w): u a leaf, w a strict ancestor of u, v a strict ancestor of w."""
    out = []
    for u in t.leaves():
        anc = t.ancestors(u, strict=True)  # parent first
        for wi, w in enumerate(anc):
            for v in anc[wi + 1:]:
                out.append((u, v, w))
    return out


def classify_triples(pt: PineappleTree) -> dict:
    """Label each aligned triple "none", "all" or "mixed" by how many members of
    X_v^u have a neighbour in Y_w."""
    g = pt.host
    att = attach_sets(pt)
    out = {}
    for u, v, w in aligned_triples(pt.shape):
        a = att[(v, u)]
        hit = a & g.neighbourhood(pt.Y.get(w, 0))
        if not hit:
            out[(u, v, w)] = "none"
        elif hit == a:
            out[(u, v, w)] = "all"
        else:
            out[(u, v, w)] = "mixed"
    return out


def is_pruned(pt: PineappleTree) -> bool:
    return "mixed" not in classify_triples(pt).values()


def is_barren(pt: PineappleTree) -> bool:
    return all(x == "none" for x in classify_triples(pt).values())


def is_fruitful(pt: PineappleTree) -> bool:
    return all(x == "all" for x in classify_triples(pt).values())


def tree_kind(pt: PineappleTree) -> str:
    """"barren", "fruitful", "pruned" or "unpruned" (barren wins when both hold)."""
    labels = set(classify_triples(pt).values())
    if labels <= {"none"}:
        return "barren"
    if labels == {"all"}:
        return "fruitful"
    return "unpruned" if "mixed" in labels else "pruned"


def restrict(pt: PineappleTree, parents, image) -> PineappleTree:
    """Sub-pineapple-tree on a topological minor of the shape.

    ``parents`` describes the new shape; ``image[i]`` is the old vertex used for
    new vertex i.  Images must preserve ancestry, send leaves to leaves and
    non-leaves to non-leaves.
    """
    shape = RootedTree.from_parents(parents)
    new = PineappleTree(shape, pt.host)
    for i, old in enumerate(image):
        if shape.children(i):
            if pt.is_leaf(old):
                raise HypothesisError(f"non-leaf {i} mapped to leaf {old}")
            new.X[i], new.Y[i] = pt.X[old], pt.Y[old]
            if old in pt.z0:
                new.z0[i] = pt.z0[old]
        else:
            if not pt.is_leaf(old):
                raise HypothesisError(f"leaf {i} mapped to non-leaf {old}")
            new.C[i] = pt.C[old]
    for i, p in enumerate(parents):
        if p >= 0 and not pt.shape.is_ancestor(image[p], image[i]):
            raise HypothesisError(f"image of {p} is not an ancestor of image of {i}")
    return new


# gettree --------------------------------------------------------------------

def gettree(g: Graph, z, shape: RootedTree, nu: int, c: int, d: int, tau: int,
            kappa: int | None = None, check_balls: bool = True, **kw):
    """Grow a pineapple tree of the given shape inside Z with leaf sets of chi > c,
    incomparable leaves at distance at least d + 1.

    Returns a ``PineappleTree`` or an alternative outcome from the splitters.
    """
    zmask = to_mask(z)
    d = max(d, 1)
    if kappa is None:
        kappa = clique_number(g, zmask)[0] if zmask else 0
    if check_balls:
        dense = _dense_ball_check(g, zmask, 2 * d + 7, tau)
        if dense is not None:
            return dense
    pt = PineappleTree(shape, g)
    res = _grow_tree(pt, shape.root, zmask, nu, c, d, tau, kappa, kw)
    if res is not None:
        return res
    ok, bad = verify_pineapple_tree(pt)
    assert ok, bad
    return pt


def _grow_tree(pt, v, zmask, nu, c, d, tau, kappa, kw):
    """Fill the subtree at v inside zmask; returns None on success or an outcome."""
    g, shape = pt.host, pt.shape
    chi_z = chi(g, zmask)
    kids = shape.children(v)
    if not kids:
        if chi_z > c:
            pt.C[v] = zmask
            return None
        return TooSmall(chi_z, c)
    bound = constants.gettree_constant(_subtree(shape, v), nu, c, d, tau, kappa)
    comps = components(g, zmask)
    a = max(comps, key=lambda m: (chi(g, m), -lowest(m)))
    z0 = lowest(a)
    layers = bfs_layers(g, 1 << z0, zmask)
    order = sorted(range(2, len(layers)), key=lambda j: (-chi(g, layers[j]), j))
    # subtrees needing more room go first
    kids = sorted(kids, key=lambda w: (-len(shape.descendants(w)), w))
    for j in order:
        if chi(g, layers[j]) <= c:
            break
        fam = moredistant_split(g, layers[j], nu, len(kids), d, c, tau, kappa, check_balls=False, **kw)
        if not isinstance(fam, DistantFamily):
            if isinstance(fam, TooSmall):
                continue
            return fam
        sets = sorted(fam.sets, key=lambda m: (-chi(g, m), lowest(m)))
        saved = (dict(pt.X), dict(pt.Y), dict(pt.C), dict(pt.z0))
        pt.X[v] = layers[j - 1]
        pt.Y[v] = to_mask(sum(layers[:j - 1]))
        pt.z0[v] = z0
        failed = None
        for w, s in zip(kids, sets):
            failed = _grow_tree(pt, w, s, nu, c, d, tau, kappa, kw)
            if failed is not None:
                break
        if failed is None:
            return None
        pt.X, pt.Y, pt.C, pt.z0 = saved
        if not isinstance(failed, TooSmall):
            return failed
    return TooSmall(chi_z, bound)


def _subtree(shape: RootedTree, v: int) -> RootedTree:
    desc = shape.descendants(v)
    idx = {w: i for i, w in enumerate(desc)}
    return RootedTree.from_parents([-1 if w == v else idx[shape.parent[w]] for w in desc])


# pruning --------------------------------------------------------------------

@dataclass
class PruneResult:
    tree: PineappleTree
    splits: dict  # leaf -> number of halving steps
    chi_before: dict
    chi_after: dict


def trim(pt: PineappleTree) -> PineappleTree:
    """Drop vertices of each X_v that see no leaf set below v."""
    out = pt.copy()
    g = pt.host
    for v in pt.X:
        seen = 0
        for u in pt.shape.descendants(v, strict=True):
            if pt.is_leaf(u):
                seen |= g.neighbourhood(pt.C[u])
        out.X[v] = pt.X[v] & seen
    return out


def prune(pt: PineappleTree, floors: dict | None = None) -> PruneResult:
    """Repeatedly halve mixed aligned triples until every triple is pruned.

    For a mixed (u, v, w) the attach set X_v^u splits into the part A seeing Y_w
    and the rest B; the side whose neighbourhood in C_u keeps at least half of
    chi(C_u) survives (ties to A) and C_u shrinks to that neighbourhood.
    ``floors[u]`` (default chi(C_u) - 1) is checked against chi(C_u) * 2^splits.
    """
    g, t = pt.host, pt.shape
    leaves = t.leaves()
    for a, b in combinations(leaves, 2):
        if set_distance(g, pt.C[a], pt.C[b]) < 3:
            raise HypothesisError(f"leaf sets C_{a} and C_{b} are closer than 3")
    chi_before = {u: chi(g, pt.C[u]) for u in leaves}
    floors = floors or {u: chi_before[u] - 1 for u in leaves}
    cur = trim(pt)
    splits = {u: 0 for u in leaves}
    h = t.height
    limit = len(leaves) * h * (h - 1) // 2
    steps = 0
    while True:
        labels = classify_triples(cur)
        mixed = [tr for tr, lab in labels.items() if lab == "mixed"]
        if not mixed:
            break
        u, v, w = mixed[0]
        xvu = cur.X[v] & g.neighbourhood(cur.C[u])
        a = xvu & g.neighbourhood(cur.Y[w])
        b = xvu & ~a
        ca = cur.C[u] & g.neighbourhood(a)
        keep = a if 2 * chi(g, ca) >= chi(g, cur.C[u]) else b
        cur.X[v] = (cur.X[v] & ~xvu) | keep
        cur.C[u] &= g.neighbourhood(keep)
        cur = trim(cur)
        splits[u] += 1
        steps += 1
        assert steps <= limit, "pruning exceeded its step bound"
    chi_after = {u: chi(g, cur.C[u]) for u in leaves}
    for u in leaves:
        assert chi_after[u] * 2 ** splits[u] > floors[u]
    return PruneResult(cur, splits, chi_before, chi_after)


# tree Ramsey -----------------------------------------------------------------

def uniform_shape(t: RootedTree) -> tuple[int, int] | None:
    """(arity, height) if ``t`` is uniform, else None."""
    h = t.height
    arity = None
    for v in range(t.n):
        kids = t.children(v)
        if not kids:
            if t.depth[v] != h:
                return None
            continue
        if arity is None:
            arity = len(kids)
        elif len(kids) != arity:
            return None
    return (arity or 0, h)


@dataclass(frozen=True)
class TreeRamseyResult:
    vertices: tuple  # vertices of the host tree kept, sorted
    colour: int

    def tree(self, host: RootedTree) -> tuple[RootedTree, list[int]]:
        """The kept subtree relabelled 0..m-1, with the list new -> old."""
        keep = list(self.vertices)
        idx = {v: i for i, v in enumerate(keep)}
        parents = [idx[host.parent[v]] if host.parent[v] in idx else -1 for v in keep]
        return RootedTree.from_parents(parents), keep


def treeramsey(tprime: RootedTree, phi: dict, t: int) -> TreeRamseyResult:
    """Uniform t-ary subtree of a uniform (qt)-ary tree with one colour on its leaves.

    ``phi`` maps leaves to colours 1..q.
    """
    shape = uniform_shape(tprime)
    if shape is None:
        raise HypothesisError("input tree is not uniform")
    arity, h = shape
    if t < 1 or (h > 0 and arity % t):
        raise HypothesisError(f"arity {arity} is not a multiple of t={t}")
    q = arity // t if h > 0 else max(phi.values(), default=1)
    for u in tprime.leaves():
        if u not in phi:
            raise HypothesisError(f"leaf {u} has no colour")
        if h > 0 and not 1 <= phi[u] <= q:
            raise HypothesisError(f"colour {phi[u]} of leaf {u} is outside 1..{q}")

    def rec(v):
        kids = tprime.children(v)
        if not kids:
            return [v], phi[v]
        subs = [rec(w) for w in kids]
        counts = {}
        for _, x in subs:
            counts[x] = counts.get(x, 0) + 1
        x = min(counts, key=lambda col: (-counts[col], col))
        chosen = [vs for vs, col in subs if col == x][:t]
        return [v] + [w for vs in chosen for w in vs], x

    vs, x = rec(tprime.root)
    return TreeRamseyResult(tuple(sorted(vs)), x)


# barren / fruitful ------------------------------------------------------------

def _pairs(height: int):
    return [(i, j) for i in range(height) for j in range(i + 1, height)]


def leaf_pattern(pt: PineappleTree, u: int, height: int) -> int:
    """Bit vector over pairs (i, j), i < j < height, lexicographic, first pair in
    the highest bit: 1 when every member of X_v^u sees Y_w."""
    g = pt.host
    anc = pt.shape.ancestors(u)[::-1]  # root first
    nb = g.neighbourhood(pt.C[u])
    bits = 0
    for i, j in _pairs(height):
        v, w = anc[i], anc[j]
        a = pt.X[v] & nb
        hit = a & g.neighbourhood(pt.Y[w])
        if hit and hit != a:
            raise HypothesisError(f"triple ({u}, {v}, {w}) is mixed")
        bits = bits << 1 | (1 if hit else 0)
    return bits


def platonic_from_pruned(pt: PineappleTree, shape: RootedTree, t: int, h: int,
                         q: int | None = None) -> PineappleTree:
    """From a pruned tree on the uniform (qt)-ary tree of height 2^h, extract a
    barren or fruitful pineapple tree with the given shape."""
    big = 2 ** h
    q = constants.platonic_q(h) if q is None else q
    phi = {u: leaf_pattern(pt, u, big) + 1 for u in pt.shape.leaves()}
    if max(phi.values()) > q:
        raise HypothesisError(f"leaf patterns need more than q={q} colours")
    tr = treeramsey(pt.shape, phi, t)
    pattern = tr.colour - 1
    pairs = _pairs(big)
    f = {p: pattern >> (len(pairs) - 1 - k) & 1 for k, p in enumerate(pairs)}
    levels = _monochromatic_levels(f, big, h)
    if levels is None:
        raise HypothesisError(f"no {h} levels with a constant pattern among {big}")
    kept = set(tr.vertices)
    src = pt.shape
    want = set(levels) | {big}
    s = min(v for v in kept if src.depth[v] == levels[0])
    nodes = [v for v in kept if src.is_ancestor(s, v) and src.depth[v] in want]
    nodes.sort(key=lambda v: (src.depth[v], v))

    def up(v):
        p = src.parent[v]
        while p not in nodes_set:
            p = src.parent[p]
        return p

    nodes_set = set(nodes)
    s_children = {v: [] for v in nodes}
    for v in nodes:
        if v != s:
            s_children[up(v)].append(v)
    # embed the target shape: children of each mapped vertex go to distinct S-children
    parents, image = [], []

    def embed(tv, sv, parent_idx):
        idx = len(image)
        parents.append(parent_idx)
        kids = shape.children(tv)
        if not kids:
            while s_children[sv]:
                sv = s_children[sv][0]
            image.append(sv)
            return
        image.append(sv)
        avail = s_children[sv]
        if len(avail) < len(kids):
            raise HypothesisError("reduced tree is too narrow for the shape")
        for tw, sw in zip(kids, avail):
            embed(tw, sw, idx)

    if shape.height > h:
        raise HypothesisError("shape is taller than h")
    embed(shape.root, s, -1)
    return restrict(pt, parents, image)


def _monochromatic_levels(f, big, h):
    if h <= 1:
        return list(range(min(h, big)))
    adj = [0] * big
    for (i, j), val in f.items():
        if val:
            adj[i] |= 1 << j
            adj[j] |= 1 << i
    res = ramsey_split(Graph.from_adjacency(adj), h, h)
    if res.kind == "too_small":
        return None
    return sorted(res.vertices)


def platonic(g: Graph, z, shape: RootedTree, nu: int, c: int, d: int, tau: int,
             kappa: int | None = None, q: int | None = None, override: bool = False, **kw):
    """A barren or fruitful pineapple tree of the given shape, or another outcome.

    The intermediate tree is uniform (qt)-ary of height 2^h with q = 2^(2^(2h));
    shapes of height 2 or more are refused unless ``override`` is set.
    ``q`` replaces the alphabet size (every pattern must still fit).
    """
    t = max(1, max(len(shape.children(v)) for v in range(shape.n)))
    h = shape.height
    if h >= 2 and not override:
        raise HypothesisError(f"height {h} needs q = 2^(2^{2 * h}); pass override to try anyway")
    qq = constants.platonic_q(h) if q is None else q
    if qq == math.inf:
        raise HypothesisError("q is too large to build the intermediate tree")
    if h == 0:
        return gettree(g, z, shape, nu, c, d, tau, kappa, **kw)
    big = uniform_tree(qq * t, 2 ** h)
    pt = gettree(g, z, big, nu, c, max(d, 2), tau, kappa, **kw)
    if not isinstance(pt, PineappleTree):
        return pt
    pruned = prune(pt).tree
    return platonic_from_pruned(pruned, shape, t, h, qq)


def barren_to_immersion(pt: PineappleTree, n: int, vs=None) -> ImmersionFound:
    """Immersion of K_n built from a barren pineapple tree whose shape is a path of
    length at least n(n-1)/2 ending in its only leaf."""
    g, t = pt.host, pt.shape
    leaves = t.leaves()
    if len(leaves) != 1:
        raise HypothesisError("shape must be a rooted path")
    u = leaves[0]
    path = t.ancestors(u)[::-1]
    m = n * (n - 1) // 2
    if len(path) - 1 < m:
        raise HypothesisError(f"path has length {len(path) - 1} < {m}")
    if not is_barren(pt):
        raise HypothesisError("pineapple tree is not barren")
    if vs is None:
        vs = _spread(g, pt.C[u], n)
        if vs is None:
            raise HypothesisError(f"C_{u} has no {n} vertices pairwise at distance 3")
    vs = list(vs)
    for a, b in combinations(vs, 2):
        if set_distance(g, 1 << a, 1 << b) < 3:
            raise HypothesisError(f"{a} and {b} are closer than 3")
    paths = {}
    for k, (i, j) in enumerate(combinations(range(n), 2)):
        tk = path[k]
        xk, yk = pt.X[tk], pt.Y[tk]
        xi = lowest(g.adj[vs[i]] & xk)
        xj = lowest(g.adj[vs[j]] & xk)
        mid = shortest_path(g, 1 << xi, 1 << xj, within=yk)
        paths[(i, j)] = tuple([vs[i]] + mid + [vs[j]])
    emb = ImmersionEmbedding(tuple(vs), paths)
    ok, bad = verify_immersion(g, emb)
    assert ok, bad
    return ImmersionFound(emb)


def _spread(g, mask, n):
    out, blocked = [], 0
    for v in members(mask):
        if not blocked >> v & 1:
            out.append(v)
            blocked |= 1 << v | g.adj[v]
            for w in members(g.adj[v]):
                blocked |= g.adj[w]
            if len(out) == n:
                return out
    return None


def summary_from_tree(pt: PineappleTree, n: int, shape: RootedTree | None = None):
    """Finish a barren or fruitful tree: fruitful trees are returned (restricted to
    ``shape`` if given), barren ones are turned into a K_n immersion along a
    root-to-leaf path of length at least n(n-1)/2."""
    kind = tree_kind(pt)
    if kind == "fruitful" or (kind == "barren" and not aligned_triples(pt.shape)):
        if shape is None:
            return pt
        return _restrict_to_shape(pt, shape)
    if kind != "barren":
        raise HypothesisError(f"tree is {kind}, not barren or fruitful")
    m = n * (n - 1) // 2
    t = pt.shape
    leaf = next((u for u in t.leaves() if t.depth[u] >= m), None)
    if leaf is None:
        raise HypothesisError(f"no root-to-leaf path of length {m}")
    anc = t.ancestors(leaf)[::-1]
    image = anc[:m] + [leaf]
    parents = [-1] + list(range(m))
    return barren_to_immersion(restrict(pt, parents, image), n)


def _restrict_to_shape(pt, shape):
    src = pt.shape
    parents, image = [], []

    def embed(tv, sv, parent_idx):
        idx = len(image)
        parents.append(parent_idx)
        kids = shape.children(tv)
        if not kids:
            while src.children(sv):
                sv = src.children(sv)[0]
            image.append(sv)
            return
        avail = src.children(sv)
        if len(avail) < len(kids):
            raise HypothesisError("tree is too narrow for the shape")
        image.append(sv)
        for tw, sw in zip(kids, avail):
            embed(tw, sw, idx)

    embed(shape.root, src.root, -1)
    return restrict(pt, parents, image)


def summary(g: Graph, z, shape: RootedTree, nu: int, c: int, d: int, tau: int,
            kappa: int | None = None, n: int = 2, **kw):
    """Fruitful pineapple tree of the given shape, or an immersion / other outcome.

    The shape is first extended by a rooted path long enough for the barren case.
    """
    m = n * (n - 1) // 2
    ext = shape
    if shape.height < m:
        parents = list(shape.parent)
        prev = shape.root
        for _ in range(m):
            parents.append(prev)
            prev = len(parents) - 1
        ext = RootedTree.from_parents(parents)
    res = platonic(g, z, ext, nu, c, d, tau, kappa, **kw)
    if not isinstance(res, PineappleTree):
        return res
    return summary_from_tree(res, n, shape)
