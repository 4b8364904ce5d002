"""Bananas, limb families and the three extraction pipelines.

A banana is a set of paths (strands) sharing two ends and otherwise disjoint;
a banana in a host graph must be induced.  The extractors turn a fruitful
pineapple tree into an induced subdivision of a banana tree, a fat cycle, or a
fat triangle.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from .extraction import DenseBall, HypothesisError, SubdivisionFound, TooSmall
from .graphs import (
    INF,
    Graph,
    Multigraph,
    RootedTree,
    ball,
    bfs_layers,
    components,
    distances_from,
    is_induced_path,
    lowest,
    members,
    set_distance,
    shortest_path,
    subdivide_tree_edges,
    to_mask,
    uniform_tree,
)
from .invariants import chi, chromatic_number, list_colouring
from .pineapple import PineappleTree, is_fruitful, leaf_separation, levelling_centre
from .subdivision import SubdivisionEmbedding, SubdivisionSpec, verify_subdivision_embedding


# bananas -------------------------------------------------------------------

@dataclass(frozen=True)
class Banana:
    ends: tuple  # (s, t)
    strands: tuple  # each a vertex sequence from s to t

    @property
    def thickness(self) -> int:
        return len(self.strands)

    def vertices(self) -> int:
        return to_mask(v for p in self.strands for v in p) | to_mask(self.ends)

    def interior(self) -> int:
        return self.vertices() & ~to_mask(self.ends)

    def to_json(self):
        return {"ends": list(self.ends), "strands": [list(p) for p in self.strands]}

    @classmethod
    def from_json(cls, data):
        return cls(tuple(data["ends"]), tuple(tuple(p) for p in data["strands"]))


def verify_banana(g: Graph, b: Banana) -> tuple[bool, list[str]]:
    """Strands join the declared ends, are internally disjoint, and their union is
    an induced subgraph of ``g`` with no extra edges."""
    bad = []
    s, t = b.ends
    if s == t:
        bad.append("ends: the two ends coincide")
    if not b.strands:
        bad.append("thickness: no strands")
    seen = 0
    own = set()
    for i, p in enumerate(b.strands):
        if len(p) < 2 or p[0] != s or p[-1] != t:
            bad.append(f"strand {i}: does not join {s} and {t}")
            continue
        if any(not g.has_edge(a, c) for a, c in zip(p, p[1:])):
            bad.append(f"strand {i}: not a path of the host")
        inner = to_mask(p[1:-1])
        if len(set(p)) != len(p):
            bad.append(f"strand {i}: repeats a vertex")
        if inner & seen:
            bad.append(f"strand {i}: shares an interior vertex")
        seen |= inner
        if len(p) == 2:
            if (s, t) in own:
                bad.append("strand: two strands are the same edge")
            own.add((s, t))
        own.update((min(a, c), max(a, c)) for a, c in zip(p, p[1:]))
    verts = b.vertices()
    for a in members(verts):
        for c in members(g.adj[a] & verts):
            if a < c and (a, c) not in own:
                bad.append(f"induced: extra edge {a}-{c}")
    return not bad, bad


def orthogonal(g: Graph, b1: Banana, b2: Banana) -> tuple[bool, list[str]]:
    bad = []
    common_ends = set(b1.ends) & set(b2.ends)
    v1, v2 = b1.vertices(), b2.vertices()
    shared = members(v1 & v2)
    if any(x not in common_ends for x in shared):
        bad.append("orthogonal: bananas share a vertex that is not a common end")
    if len(shared) > 1:
        bad.append("orthogonal: bananas share more than one vertex")
    for a in members(v1):
        for c in members(g.adj[a] & v2):
            if a not in common_ends and c not in common_ends:
                bad.append(f"orthogonal: edge {a}-{c} avoids the common ends")
    return not bad, bad


@dataclass(frozen=True)
class BananaPath:
    anchors: tuple
    bananas: tuple  # bananas[i] joins anchors[i], anchors[i+1]


def verify_banana_path(g: Graph, bp: BananaPath, n: int | None = None) -> tuple[bool, list[str]]:
    bad = []
    if len(bp.bananas) != max(0, len(bp.anchors) - 1):
        return False, ["shape: need one banana per consecutive anchor pair"]
    for i, b in enumerate(bp.bananas):
        if set(b.ends) != {bp.anchors[i], bp.anchors[i + 1]}:
            bad.append(f"ends: banana {i} does not join anchors {i} and {i + 1}")
        bad += [f"banana {i}: {m}" for m in verify_banana(g, b)[1]]
        if n is not None and b.thickness != n - 1:
            bad.append(f"thickness: banana {i} has thickness {b.thickness}, not {n - 1}")
    for i, j in combinations(range(len(bp.bananas)), 2):
        bad += [f"bananas {i},{j}: {m}" for m in orthogonal(g, bp.bananas[i], bp.bananas[j])[1]]
    if n is not None:
        for a, c in combinations(bp.anchors, 2):
            if set_distance(g, 1 << a, 1 << c) < n:
                bad.append(f"distance: anchors {a} and {c} are closer than {n}")
    return not bad, bad


@dataclass(frozen=True)
class BananaTree:
    skeleton: Graph
    branch: tuple  # skeleton vertex -> host vertex
    bananas: tuple  # one per skeleton edge, in skeleton.edges() order


def verify_banana_tree(g: Graph, bt: BananaTree) -> tuple[bool, list[str]]:
    bad = []
    sk = bt.skeleton
    if sk.edge_count != sk.n - 1 or len(components(sk)) != 1:
        bad.append("skeleton: not a tree")
    edges = sk.edges()
    if len(edges) != len(bt.bananas):
        return False, bad + ["shape: one banana per skeleton edge expected"]
    for (a, c), b in zip(edges, bt.bananas):
        if set(b.ends) != {bt.branch[a], bt.branch[c]}:
            bad.append(f"ends: banana for {a}-{c} has the wrong ends")
        bad += [f"banana {a}-{c}: {m}" for m in verify_banana(g, b)[1]]
    for i, j in combinations(range(len(edges)), 2):
        bad += [f"bananas {edges[i]},{edges[j]}: {m}" for m in orthogonal(g, bt.bananas[i], bt.bananas[j])[1]]
    return not bad, bad


# limbs ---------------------------------------------------------------------

@dataclass(frozen=True)
class LimbFamily:
    tree: RootedTree
    limbs: tuple  # (leaf, start) pairs, indexed by q

    def path(self, q: int) -> list[int]:
        leaf, start = self.limbs[q]
        return self.tree.path_between(leaf, start)

    def interior(self, q: int) -> set:
        return set(self.path(q)[1:-1])

    def to_json(self):
        return {"tree": self.tree.to_json(), "limbs": [list(x) for x in self.limbs]}

    @classmethod
    def from_json(cls, data):
        return cls(RootedTree.from_json(data["tree"]), tuple(tuple(x) for x in data["limbs"]))


def check_limbs(fam: LimbFamily) -> list[str]:
    t = fam.tree
    bad = []
    leaves = set(t.leaves())
    for q, (leaf, start) in enumerate(fam.limbs):
        if leaf not in leaves:
            bad.append(f"limb {q}: {leaf} is not a leaf")
        if leaf == start or not t.is_ancestor(start, leaf):
            bad.append(f"limb {q}: {start} is not a strict ancestor of {leaf}")
    return bad


def overlap_graph(fam: LimbFamily, k: int) -> Graph:
    """Limbs q1, q2 adjacent when at least k tree vertices lie in both interiors
    and in no other limb."""
    if check_limbs(fam):
        raise HypothesisError("; ".join(check_limbs(fam)))
    paths = [set(fam.path(q)) for q in range(len(fam.limbs))]
    inner = [fam.interior(q) for q in range(len(fam.limbs))]
    count = defaultdict(int)
    for x in range(fam.tree.n):
        holders = [q for q, p in enumerate(paths) if x in p]
        if len(holders) == 2 and all(x in inner[q] for q in holders):
            count[tuple(holders)] += 1
    return Graph(len(fam.limbs), [pair for pair, m in count.items() if m >= k])


def limbs_share_end(fam: LimbFamily) -> bool:
    ends = [v for limb in fam.limbs for v in limb]
    return len(set(ends)) != len(ends)


def getforest(j: Graph, k: int) -> tuple[LimbFamily, list[int]]:
    """Rooted tree and limbs whose k-overlap graph is ``j`` (a forest).

    Limb q realizes vertex q of ``j``; the returned list is that identity map.
    Each forest component is rooted at its least vertex; a vertex's limb runs
    down a private path, and for each child it carries a separator vertex
    (the child's start) followed by k window vertices shared with the child,
    after which the child's limb branches off.
    """
    if k < 1:
        raise HypothesisError("k must be at least 1")
    if j.edge_count != j.n - len(components(j)):
        raise HypothesisError("j contains a cycle")
    parents = [-1]  # tree vertex 0 is the global root
    limbs = [None] * j.n

    def add(parent):
        parents.append(parent)
        return len(parents) - 1

    def grow(a, start, attach, skip):
        # private path of a hangs below ``attach``; a's limb starts at ``start``
        cur = attach
        for c in sorted(x for x in j.neighbours(a) if x != skip):
            sigma = add(cur)
            cur = sigma
            window_end = cur
            for _ in range(k):
                window_end = add(window_end)
            # child branches off after its window; a continues from the window too
            grow(c, sigma, window_end, a)
            cur = window_end
        leaf = add(cur)
        limbs[a] = (leaf, start)

    for comp in components(j):
        a = lowest(comp)
        s = add(0)
        grow(a, s, s, None)
    tree = RootedTree.from_parents(parents)
    return LimbFamily(tree, tuple(limbs)), list(range(j.n))


# bigshare ------------------------------------------------------------------

def _route(g, a, b, region):
    """Lexicographically least shortest a-b path with interior in ``region``."""
    p = shortest_path(g, 1 << a, 1 << b, within=region)
    return None if p is None else tuple(p)


def bigshare(pt: PineappleTree, fam: LimbFamily, anchors, w_set, part_i, part_j, n: int):
    """A thickness-n banana between anchors of the two parts through the Y_w, w in W.

    ``anchors[q]`` is a host vertex of X at the start of limb q.  Returns
    (q, q2, Banana).
    """
    g = pt.host
    anchors = list(anchors)
    k = len(anchors)
    w_set = sorted(set(w_set))
    part_i, part_j = sorted(part_i), sorted(part_j)
    bad = []
    if not part_i or not part_j or set(part_i) & set(part_j) or set(part_i) | set(part_j) != set(range(k)):
        bad.append("partition: I and J must be nonempty and split the limbs")
    for a, b in combinations(range(k), 2):
        if set_distance(g, 1 << anchors[a], 1 << anchors[b]) < 3:
            bad.append(f"distance: anchors {a} and {b} are closer than 3")
    if not len(w_set) > (n - 1) * k * (k - 1) // 2:
        bad.append(f"size: |W| = {len(w_set)} is not more than {(n - 1) * k * (k - 1) // 2}")
    for q in range(k):
        inner = fam.interior(q)
        for w in w_set:
            if w not in inner:
                bad.append(f"interior: {w} is not interior to limb {q}")
                break
        for w in w_set:
            if not g.adj[anchors[q]] & pt.Y.get(w, 0):
                bad.append(f"fruitful: anchor {q} has no neighbour in Y_{w}")
                break
    if bad:
        raise HypothesisError("; ".join(bad))
    by_pair = defaultdict(list)
    for w in w_set:
        best = None
        for a in part_i:
            for b in part_j:
                p = _route(g, anchors[a], anchors[b], pt.Y[w])
                if p is None:
                    continue
                key = (len(p), p if a < b else p[::-1])
                if best is None or key < best[0]:
                    best = (key, (min(a, b), max(a, b)), p if a < b else p[::-1])
        if best is not None:
            by_pair[best[1]].append(best[2])
    for pair in sorted(by_pair):
        if len(by_pair[pair]) >= n:
            a, b = pair
            ban = Banana((anchors[a], anchors[b]), tuple(by_pair[pair][:n]))
            ok, why = verify_banana(g, ban)
            assert ok, why
            others = to_mask(anchors[q] for q in range(k) if q not in pair)
            assert not g.neighbourhood(ban.vertices()) & others
            return a, b, ban
    raise AssertionError("no pair collected n connectors")


# extraction pipelines ------------------------------------------------------

def banana_tree_spec(skeleton: Graph, thickness, min_lengths=None) -> SubdivisionSpec:
    """Fatten each skeleton edge to the given thickness (int or per-edge list)."""
    edges = skeleton.edges()
    if isinstance(thickness, int):
        thickness = [thickness] * len(edges)
    out = []
    for e, (a, b) in enumerate(edges):
        for s in range(thickness[e]):
            m = 1
            if min_lengths is not None:
                m = min_lengths[s] if isinstance(min_lengths[0], int) else min_lengths[e][s]
            out.append((a, b, m))
    return SubdivisionSpec.from_edges(skeleton.n, out)


def extract_banana_tree(pt: PineappleTree, fam: LimbFamily, iso, skeleton: Graph,
                        spec: SubdivisionSpec, n: int | None = None):
    """Induced subdivision of a banana tree from a fruitful pineapple tree whose
    shape carries limbs with n-overlap graph ``skeleton``."""
    g = pt.host
    n = spec.minimal_vertex_count() if n is None else n
    bad = []
    if pt.shape.to_json() != fam.tree.to_json():
        bad.append("shape: pineapple tree shape differs from the limb tree")
    if not is_fruitful(pt):
        bad.append("fruitful: pineapple tree is not fruitful")
    if n < 3:
        bad.append("size: the banana tree needs at least 3 vertices")
    if leaf_separation(pt) < n + 1:
        bad.append(f"distance: leaf sets closer than {n + 1}")
    ov = overlap_graph(fam, n)
    mapped = {tuple(sorted((iso[a], iso[b]))) for a, b in ov.edges()}
    if mapped != set(skeleton.edges()):
        bad.append("overlap: n-overlap graph does not match the skeleton")
    need = defaultdict(int)
    for (a, b) in spec.edges:
        need[(min(a, b), max(a, b))] += 1
    if any(m > n for m in need.values()) or set(need) != set(skeleton.edges()):
        bad.append("target: spec is not a fattening of the skeleton with thickness <= n")
    if bad:
        raise HypothesisError("; ".join(bad))
    back = {iso[q]: q for q in range(len(fam.limbs))}
    anchor = {}
    for q, (leaf, start) in enumerate(fam.limbs):
        cu = lowest(pt.C[leaf])
        anchor[q] = lowest(g.adj[cu] & pt.X[start])
    paths_in = [set(fam.path(q)) for q in range(len(fam.limbs))]
    strands = {}
    for a, b in skeleton.edges():
        qa, qb = back[a], back[b]
        window = [x for x in sorted(fam.interior(qa) & fam.interior(qb))
                  if sum(x in p for p in paths_in) == 2][:n]
        strands[(a, b)] = [_route(g, anchor[qa], anchor[qb], pt.Y[w]) for w in window]
    used = defaultdict(int)
    paths = []
    for (a, b) in spec.edges:
        key = (min(a, b), max(a, b))
        p = strands[key][used[key]]
        used[key] += 1
        paths.append(p if anchor[back[a]] == p[0] else p[::-1])
    emb = SubdivisionEmbedding(tuple(anchor[back[v]] for v in range(skeleton.n)), tuple(paths))
    ok, why = verify_subdivision_embedding(g, spec, emb)
    assert ok, why
    return SubdivisionFound(spec, emb)


def fat_cycle_spec(m: int, thickness: int, min_length: int = 1) -> SubdivisionSpec:
    """Cycle on m vertices; edges i(i+1) for i < m-1 fattened, closing edge single."""
    edges = []
    if m == 2:
        edges = [(0, 1, min_length)] * (thickness + 1)
    else:
        for i in range(m - 1):
            edges += [(i, i + 1, min_length)] * thickness
        edges.append((m - 1, 0, min_length))
    return SubdivisionSpec.from_edges(m, edges)


def extract_banana_cycle(pt: PineappleTree, m: int, n: int):
    """Induced subdivision of the fat cycle (thickness n-1 on m-1 edges) from a
    fruitful tree shaped as the binary tree of height m with edges subdivided
    into paths of length 2n^3."""
    g = pt.host
    if m < 2 or n < 2:
        raise HypothesisError("need m >= 2 and n >= 2")
    shape, smap = subdivide_tree_edges(uniform_tree(2, m), 2 * n ** 3)
    bad = []
    if pt.shape.to_json() != shape.to_json():
        bad.append("shape: not the subdivided binary tree of this height")
    elif not is_fruitful(pt):
        bad.append("fruitful: pineapple tree is not fruitful")
    if bad:
        raise HypothesisError("; ".join(bad))
    s_tree = uniform_tree(2, m)
    t = pt.shape
    r = t.root
    anchor = {}
    for u in t.leaves():
        cu = lowest(pt.C[u])
        anchor[u] = lowest(g.adj[cu] & pt.X[r])
    if len(set(anchor.values())) != len(anchor):
        raise HypothesisError("two leaves share an anchor in X_r")

    def rec(z1, z2):
        """Banana path (anchors, bananas) for the S-edge z1z2; anchors are leaves."""
        h = m - s_tree.depth[z1]
        if h == 1:
            return [smap[z2]], []
        z3, z4 = s_tree.children(z2)
        a_seq, a_ban = rec(z2, z3)
        b_seq, b_ban = rec(z2, z4)
        for x in a_ban:
            for y in b_ban:
                assert not g.has_edge_between(x.interior(), y.vertices()), "child banana paths touch"
                assert not g.has_edge_between(y.interior(), x.vertices()), "child banana paths touch"
        leaves = a_seq + b_seq
        fam = LimbFamily(t, tuple((u, r) for u in leaves))
        lo, hi = smap[z1], smap[z2]
        window = [v for v in t.ancestors(hi, strict=True) if v != lo and t.is_ancestor(lo, v)]
        qi, qj, ban = bigshare(pt, fam, [anchor[u] for u in leaves], window,
                               range(len(a_seq)), range(len(a_seq), len(leaves)), n)
        ban = Banana(ban.ends, ban.strands[: n - 1])
        i = qi + 1
        j = qj - len(a_seq) + 1
        if i < h / 2:
            a_seq, a_ban = a_seq[::-1], a_ban[::-1]
            i = len(a_seq) - i + 1
        if j > h / 2:
            b_seq, b_ban = b_seq[::-1], b_ban[::-1]
            j = len(b_seq) - j + 1
        seq = a_seq[:i] + b_seq[j - 1:]
        bans = a_ban[: i - 1] + [ban] + b_ban[j - 1:]
        return seq[:h], bans[: h - 1]

    z1 = s_tree.root
    seq, bans = rec(z1, s_tree.children(z1)[0])
    xs = [anchor[u] for u in seq]
    bp = BananaPath(tuple(xs), tuple(bans))
    ok, why = verify_banana_path(g, bp)
    assert ok, why
    avoid = g.neighbourhood(to_mask(xs[1:-1])) if len(xs) > 2 else 0
    close = _route(g, xs[0], xs[-1], pt.Y[r] & ~avoid)
    if close is None:
        raise HypothesisError("no closing path through Y_r")
    spec = fat_cycle_spec(m, n - 1)
    # orient each banana from x_i to x_{i+1}
    oriented = []
    for i, b in enumerate(bans):
        for p in b.strands:
            oriented.append(tuple(p) if p[0] == xs[i] else tuple(p[::-1]))
    oriented.append(tuple(close) if m == 2 else tuple(close[::-1]))
    emb = SubdivisionEmbedding(tuple(xs), tuple(oriented))
    ok, why = verify_subdivision_embedding(g, spec, emb)
    assert ok, why
    return SubdivisionFound(spec, emb)


# internal routes -------------------------------------------------------------

@dataclass(frozen=True)
class InternalRoute:
    kind = "internal_route"
    xs: tuple
    connectors: dict = field(hash=False)  # (i, j) -> path from xs[i] to xs[j]


def verify_internal_route(g: Graph, x, z, rho: int, route: InternalRoute) -> tuple[bool, list[str]]:
    bad = []
    xm, zm = to_mask(x), to_mask(z)
    xs = list(route.xs)
    for v in xs:
        if not xm >> v & 1:
            bad.append(f"member: {v} is not in X")
    for a, b in combinations(range(len(xs)), 2):
        if set_distance(g, 1 << xs[a], 1 << xs[b]) < rho:
            bad.append(f"distance: {xs[a]} and {xs[b]} are closer than {rho}")
        p = route.connectors.get((a, b))
        if p is None:
            bad.append(f"connector: missing for {a},{b}")
            continue
        if p[0] != xs[a] or p[-1] != xs[b] or not is_induced_path(g, p):
            bad.append(f"connector {a},{b}: not an induced path between the pair")
        if to_mask(p[1:-1]) & ~zm:
            bad.append(f"connector {a},{b}: interior leaves Z")
        others = to_mask(xs[c] for c in range(len(xs)) if c not in (a, b))
        if g.neighbourhood(to_mask(p)) & others or to_mask(p) & others:
            bad.append(f"connector {a},{b}: touches another chosen vertex")
    return not bad, bad


def internalroute(g: Graph, x, z, rho: int, tau: int, n: int):
    """n vertices of X pairwise at distance >= rho, pairwise joined through Z by
    paths the others do not touch.

    Returns ``InternalRoute``, ``TooSmall`` (chi(Z) <= n*tau) or ``DenseBall``
    (a radius-rho ball with chi > tau).
    """
    xm, zm = to_mask(x), to_mask(z)
    if rho < 4:
        raise HypothesisError("rho must be at least 4")
    if xm & zm:
        raise HypothesisError("X and Z intersect")
    uncovered = [v for v in members(zm) if not g.adj[v] & xm]
    if uncovered:
        raise HypothesisError(f"X does not cover Z: {uncovered[:5]}")
    if n <= 0:
        return InternalRoute((), {})
    chi_z = chi(g, zm)
    if chi_z <= n * tau:
        return TooSmall(chi_z, n * tau)
    kappa = {}

    def colouring(v):
        if v not in kappa:
            gx = g.adj[v] & zm
            k, col = chromatic_number(g, gx)
            if k > tau:
                return None
            kappa[v] = col.colours
        return kappa[v]

    def dense(v):
        b = ball(g, v, rho)
        return DenseBall(v, rho, chi(g, b), tau)

    def forbidden_for(cmask, xs):
        fb = defaultdict(set)
        for v in xs:
            for y, c in kappa[v].items():
                for w in members(g.adj[y] & cmask):
                    fb[w].add(c)
        return fb

    def stuck(cmask, xs):
        return list_colouring(g, cmask, n * tau, forbidden_for(cmask, xs)) is None

    comps = components(g, zm)
    cur = max(comps, key=lambda m: (chi(g, m), -lowest(m)))
    xs = []
    size = bin(cur).count("1")
    while len(xs) < n:
        dist = [distances_from(g, [v]) for v in xs]
        far = [v for v in members(cur) if all(dd.get(v, INF) > rho for dd in dist)]
        if not far:
            for v in xs:
                d = dense(v)
                if d.chi > tau:
                    return d
            raise AssertionError("no far vertex although no ball is dense")
        v = far[0]
        nx = lowest(g.adj[v] & xm)
        if colouring(nx) is None:
            return dense(nx)
        rest = cur & ~g.adj[nx]
        nxt = None
        for comp in components(g, rest):
            if stuck(comp, xs + [nx]):
                nxt = comp
                break
        assert nxt is not None, "extension lost the colouring obstruction"
        cur = nxt
        xs.append(nx)
        xs = [v for v in xs if g.neighbourhood(g.adj[v] & zm) & cur]
        new_size = bin(cur).count("1")
        assert new_size < size
        size = new_size
    conns = {}
    for a, b in combinations(range(n), 2):
        za = lowest(g.adj[xs[a]] & zm & g.neighbourhood(cur))
        zb = lowest(g.adj[xs[b]] & zm & g.neighbourhood(cur))
        mid = shortest_path(g, 1 << za, 1 << zb, within=cur)
        conns[(a, b)] = tuple([xs[a]] + mid + [xs[b]])
    route = InternalRoute(tuple(xs), conns)
    ok, why = verify_internal_route(g, xm, zm, rho, route)
    assert ok, why
    return route


def fat_triangle_spec(n: int, pair_a=(0, 2), pair_b=(1, 2), pair_c=(0, 1)) -> SubdivisionSpec:
    """Triangle with two edges of multiplicity n and the third doubled, min length n."""
    edges = [pair_a + (n,)] * n + [pair_b + (n,)] * n + [pair_c + (n,)] * 2
    return SubdivisionSpec.from_edges(3, edges)


def extract_fat_triangle(pt: PineappleTree, n: int, tau: int, rho: int | None = None):
    """Induced subdivision of the fat triangle from a fruitful tree on a rooted
    path of length 3n."""
    g, t = pt.host, pt.shape
    leaves = t.leaves()
    if len(leaves) != 1 or t.height != 3 * n or any(len(t.children(v)) > 1 for v in range(t.n)):
        raise HypothesisError(f"shape must be a rooted path of length {3 * n}")
    if not is_fruitful(pt):
        raise HypothesisError("pineapple tree is not fruitful")
    u = leaves[0]
    levels = t.ancestors(u)[::-1]
    cu = pt.C[u]
    nb = g.neighbourhood(cu)
    xlev = [pt.X[v] & nb for v in levels[:-1]]
    rho = max(4, n) if rho is None else rho
    res = internalroute(g, xlev[0], cu, rho, tau, 3)
    if not isinstance(res, InternalRoute):
        return res
    xs = res.xs
    pairs = [(0, 1), (0, 2), (1, 2)]
    third = {(0, 1): 2, (0, 2): 1, (1, 2): 0}
    routes = {p: {} for p in pairs}
    for i in range(1, 3 * n):
        y = pt.Y[levels[i]]
        for p in pairs:
            avoid = g.adj[xs[third[p]]]
            path = _route(g, xs[p[0]], xs[p[1]], y & ~avoid)
            if path is not None:
                routes[p][i] = path
        assert sum(i in routes[p] for p in pairs) >= 2, "level lies in fewer than two route sets"
    first = next(p for p in pairs if len(routes[p]) >= n)
    lev_i = sorted(routes[first])[:n]
    second = next(p for p in pairs if p != first and len(set(routes[p]) - set(lev_i)) >= n)
    lev_j = sorted(set(routes[second]) - set(lev_i))[:n]
    last = next(p for p in pairs if p not in (first, second))
    a, b = xs[last[0]], xs[last[1]]
    # through Y_0 along the levelling of (X_0, Y_0)
    x0, y0 = pt.X[levels[0]], pt.Y[levels[0]]
    z0 = levelling_centre(g, x0, y0, pt.z0.get(levels[0]))
    layers = bfs_layers(g, 1 << z0, x0 | y0)
    k = next(i for i, layer in enumerate(layers) if layer & x0)
    low = to_mask(v for layer in layers[: k - 1] for v in members(layer))
    ya = lowest(g.adj[a] & layers[k - 1])
    yb = lowest(g.adj[b] & layers[k - 1])
    mid = shortest_path(g, 1 << ya, 1 << yb, within=low)
    via_y0 = tuple([a] + mid + [b])
    via_c = res.connectors[last]
    spec = fat_triangle_spec(n, first, second, last)
    paths = [routes[first][i] for i in lev_i] + [routes[second][i] for i in lev_j] + [via_c, via_y0]
    emb = SubdivisionEmbedding(tuple(xs), tuple(paths))
    ok, why = verify_subdivision_embedding(g, spec, emb)
    assert ok, why
    return SubdivisionFound(spec, emb)
