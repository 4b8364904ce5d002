"""Shortest-path stars, the router, and distant high-chromatic splitting.

Each procedure is total: instead of assuming a hypothesis it returns a tagged
outcome saying which alternative happened, and every positive outcome can be
checked independently (``verify_star``, ``verify_outcome``).
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass, field
from itertools import combinations

from . import constants
from .graphs import (
    INF,
    Graph,
    ball,
    ball_of_set,
    bfs_layers,
    components,
    distances_from,
    induced_subgraph,
    is_connected,
    lowest,
    members,
    popcount,
    set_distance,
    shortest_path,
    to_mask,
)
from .invariants import chi, clique_number, ramsey_split, stable_number
from .subdivision import (
    ImmersionEmbedding,
    SubdivisionEmbedding,
    SubdivisionSpec,
    knu1_spec,
    verify_immersion,
    verify_subdivision_embedding,
)


class HypothesisError(ValueError):
    """A checked precondition does not hold."""


# outcomes ------------------------------------------------------------------

@dataclass(frozen=True)
class Star:
    center: int
    targets: tuple
    spokes: tuple  # spokes[i] runs from center to targets[i]

    def to_json(self):
        return {"center": self.center, "targets": list(self.targets), "spokes": [list(p) for p in self.spokes]}

    @classmethod
    def from_json(cls, data):
        return cls(data["center"], tuple(data["targets"]), tuple(tuple(p) for p in data["spokes"]))


@dataclass(frozen=True)
class InsufficientTargets:
    kind = "insufficient_targets"
    given: int
    needed: int


@dataclass(frozen=True)
class DistantPair:
    kind = "distant_pair"
    sets: tuple  # two vertex masks
    d: int
    c: int


@dataclass(frozen=True)
class DistantFamily:
    kind = "distant_family"
    sets: tuple
    d: int
    c: int


@dataclass(frozen=True)
class DenseBall:
    """A ball whose chromatic number exceeds the local bound ``tau``."""

    kind = "dense_ball"
    vertex: int
    radius: int
    chi: int
    tau: int


@dataclass(frozen=True)
class TooSmall:
    kind = "too_small"
    chi: int
    bound: int


@dataclass(frozen=True)
class SubdivisionFound:
    kind = "subdivision"
    spec: SubdivisionSpec
    embedding: SubdivisionEmbedding


@dataclass(frozen=True)
class ImmersionFound:
    kind = "immersion"
    embedding: ImmersionEmbedding


@dataclass(frozen=True)
class HypothesesUnmet:
    kind = "hypotheses_unmet"
    violations: tuple = field(default_factory=tuple)


# stars ---------------------------------------------------------------------

def verify_star(g: Graph, star: Star, d: int | None = None) -> tuple[bool, list[str]]:
    """Check every defining property of a star; returns (ok, violations)."""
    bad = []
    u = star.center
    if len(star.targets) != len(star.spokes):
        return False, ["shape: targets and spokes differ in number"]
    lengths = set()
    for x, p in zip(star.targets, star.spokes):
        if not p or p[0] != u or p[-1] != x:
            bad.append(f"ends: spoke to {x} does not run from {u} to {x}")
            continue
        if len(set(p)) != len(p) or any(not g.has_edge(a, b) for a, b in zip(p, p[1:])):
            bad.append(f"path: spoke to {x} is not a path")
            continue
        if len(p) - 1 != distances_from(g, [u]).get(x, INF):
            bad.append(f"shortest: spoke to {x} is not a shortest path")
        lengths.add(len(p) - 1)
    if len(lengths) > 1:
        bad.append(f"length: spokes have lengths {sorted(lengths)}")
    if d is not None and lengths and max(lengths) > d:
        bad.append(f"length: spokes longer than {d}")
    if len(set(star.targets)) != len(star.targets):
        bad.append("targets: repeated target")
    inner = [to_mask(p[1:]) for p in star.spokes]
    for i, j in combinations(range(len(inner)), 2):
        if inner[i] & inner[j]:
            bad.append(f"disjoint: spokes {i} and {j} share a vertex other than the center")
        elif g.has_edge_between(inner[i], inner[j]):
            bad.append(f"edge: spokes {i} and {j} are joined away from the center")
    return not bad, bad


def getstar(g: Graph, v: int, targets, d: int, s: int, kappa: int | None = None,
            check_clique: bool = True):
    """Find a centre u and ``s`` equal-length shortest paths from u to targets that
    are disjoint and unlinked away from u.

    Returns a ``Star`` or ``InsufficientTargets``.  Preconditions on distances and
    (when ``check_clique``) on the clique number raise ``HypothesisError``.
    """
    targets = list(targets)
    if len(set(targets)) != len(targets):
        raise HypothesisError("targets are not distinct")
    dist_v = distances_from(g, [v])
    far = [x for x in targets if dist_v.get(x, INF) > d]
    if far:
        raise HypothesisError(f"targets {far} are farther than {d} from {v}")
    if kappa is None:
        kappa = clique_number(g)[0]
    elif check_clique:
        w = clique_number(g)[0]
        if w > kappa:
            raise HypothesisError(f"clique number {w} exceeds {kappa}")
    finder = _StarFinder(g, s, kappa)
    star = finder.find(v, targets, d)
    if star is None:
        return InsufficientTargets(len(targets), constants.star_targets(kappa, d, s))
    ok, bad = verify_star(g, star)
    assert ok, bad
    return star


class _StarFinder:
    def __init__(self, g, s, kappa):
        self.g, self.s, self.kappa = g, s, kappa
        self._dist = {}

    def dist(self, x):
        if x not in self._dist:
            self._dist[x] = distances_from(self.g, [x])
        return self._dist[x]

    def find(self, v, targets, d):
        s = self.s
        if s == 0:
            return Star(v, (), ())
        if len(targets) < s:
            return None
        if s == 1:
            x = targets[0]
            return Star(v, (x,), (tuple(self._path(v, x)),))
        if d <= 0:
            return None
        # a vertex close to many targets lets us shrink d
        close = []
        if d > 1:
            need = constants.star_targets(self.kappa, d - 1, s)
            for u in range(self.g.n):
                near = [x for x in targets if self.dist(x).get(u, INF) <= d - 1]
                if len(near) >= s:
                    close.append((len(near) < need, u, near))
            close.sort(key=lambda t: t[0])
            for optional, u, near in close:
                if optional:
                    break
                star = self.find(u, near, d - 1)
                if star is not None:
                    return star
        star = self._direct(v, targets, d)
        if star is not None:
            return star
        for optional, u, near in close:
            if optional:
                star = self.find(u, near, d - 1)
                if star is not None:
                    return star
        return None

    def _path(self, v, x):
        return shortest_path(self.g, 1 << v, 1 << x)

    def _direct(self, v, targets, d):
        g, s = self.g, self.s
        at_d = [x for x in targets if self.dist(x).get(v) == d]
        if len(at_d) < s:
            return None
        paths = {x: self._path(v, x) for x in at_d}
        m = len(at_d)
        conflict = [0] * m
        for i, xi in enumerate(at_d):
            for j, xj in enumerate(at_d):
                if i != j and any(self.dist(xj).get(p, INF) < d for p in paths[xi]):
                    conflict[i] |= 1 << j
                    conflict[j] |= 1 << i
        # smallest-last colouring of the conflict graph, keep the largest class
        cls = _degeneracy_classes(conflict)
        best = max(cls, key=lambda c: (popcount(c), -lowest(c)))
        picked = self._stable_first_steps(v, [at_d[i] for i in members(best)], paths)
        if picked is None:
            # not forced by the argument, but a cheap exact search over all of them
            nb = {x: paths[x][1] for x in at_d}
            full = list(conflict)
            for i, j in combinations(range(m), 2):
                a, b = nb[at_d[i]], nb[at_d[j]]
                if a == b or g.has_edge(a, b):
                    full[i] |= 1 << j
                    full[j] |= 1 << i
            h = Graph.from_adjacency(full)
            size, stable = stable_number(h)
            if size < s:
                return None
            picked = [at_d[i] for i in stable[:s]]
        star = Star(v, tuple(picked), tuple(tuple(paths[x]) for x in picked))
        return star if verify_star(g, star)[0] else None

    def _stable_first_steps(self, v, xs, paths):
        if len(xs) < self.s:
            return None
        nb = [paths[x][1] for x in xs]
        adj = [0] * len(xs)
        for i, j in combinations(range(len(xs)), 2):
            if nb[i] == nb[j] or self.g.has_edge(nb[i], nb[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
        res = ramsey_split(Graph.from_adjacency(adj), self.kappa + 1, self.s)
        if res.kind != "stable":
            return None
        return [xs[i] for i in res.vertices]


def _degeneracy_classes(adj):
    """Colour classes (as masks) of a smallest-last greedy colouring."""
    n = len(adj)
    left = (1 << n) - 1
    order = []
    while left:
        v = min(members(left), key=lambda u: (popcount(adj[u] & left), u))
        order.append(v)
        left &= ~(1 << v)
    colour = {}
    for v in reversed(order):
        used = {colour[w] for w in members(adj[v]) if w in colour}
        c = 0
        while c in used:
            c += 1
        colour[v] = c
    classes = defaultdict(int)
    for v, c in colour.items():
        classes[c] |= 1 << v
    return [classes[c] for c in sorted(classes)] or [0]


# router --------------------------------------------------------------------

def router_hypotheses(g: Graph, xsets, vs, d: int) -> list[str]:
    """Violations of the three router hypotheses, naming indices."""
    bad = []
    xsets = [to_mask(x) for x in xsets]
    for i, x in enumerate(xsets):
        if not x:
            bad.append(f"X_{i} is empty")
        elif not is_connected(g, x):
            bad.append(f"X_{i} is not connected")
    for i, j in combinations(range(len(xsets)), 2):
        if xsets[i] and xsets[j] and set_distance(g, xsets[i], xsets[j]) < 3:
            bad.append(f"X_{i} and X_{j} are at distance less than 3")
    for i, j in combinations(range(len(vs)), 2):
        if set_distance(g, 1 << vs[i], 1 << vs[j]) < 2 * d + 2:
            bad.append(f"v_{i} and v_{j} are at distance less than {2 * d + 2}")
    for i, x in enumerate(xsets):
        if not x:
            continue
        for j, v in enumerate(vs):
            if set_distance(g, x, 1 << v) > d:
                bad.append(f"X_{i} is farther than {d} from v_{j}")
    return bad


def router_find_knu1(g: Graph, xsets, vs, d: int, nu: int, kappa: int | None = None):
    """Build an induced subdivision of K_nu^1 from far-apart vertices that all see
    many mutually distant connected sets.

    Returns ``SubdivisionFound`` or ``HypothesesUnmet``.
    """
    xsets = [to_mask(x) for x in xsets]
    vs = list(vs)
    bad = router_hypotheses(g, xsets, vs, d)
    if bad:
        return HypothesesUnmet(tuple(bad))
    if kappa is None:
        kappa = clique_number(g)[0]
    k_need, ell_need = constants.router_bounds(nu, d, kappa)
    guaranteed = len(xsets) >= k_need and len(vs) >= ell_need
    emb = _router(g, xsets, vs, d, nu, kappa)
    if emb is not None:
        return emb
    assert not guaranteed, "router failed although its bounds are met"
    return HypothesesUnmet((f"insufficient k/l: have k={len(xsets)}, l={len(vs)}; "
                            f"guaranteed from k={k_need}, l={ell_need}",))


def _router(g, xsets, vs, d, nu, kappa):
    spec = knu1_spec(nu)
    s = nu * (nu - 1) // 2
    if nu <= 1:
        if not vs:
            return None
        emb = SubdivisionEmbedding(tuple(vs[:nu]), ())
        return SubdivisionFound(spec, emb)
    k = len(xsets)
    dist = [[int(set_distance(g, x, 1 << v)) for v in vs] for x in xsets]
    # distance-vector buckets of the v's, then a common value over the X's
    buckets = defaultdict(list)
    for j in range(len(vs)):
        buckets[tuple(dist[i][j] for i in range(k))].append(j)
    groups = sorted(buckets.values(), key=lambda js: (-len(js), js[0]))
    for j1 in groups:
        if len(j1) < nu:
            break
        vec = [dist[i][j1[0]] for i in range(k)]
        by_val = defaultdict(list)
        for i in range(k):
            by_val[vec[i]].append(i)
        for big_d, i1 in sorted(by_val.items(), key=lambda t: (-len(t[1]), t[0])):
            if len(i1) < s:
                break
            found = _router_stars(g, xsets, vs, j1, i1, big_d, nu, s, kappa, spec)
            if found is not None:
                return found
    return None


def _router_stars(g, xsets, vs, j1, i1, big_d, nu, s, kappa, spec):
    stars = {}
    for j in j1:
        paths = {}
        for i in i1:
            p = shortest_path(g, 1 << vs[j], xsets[i])
            paths[i] = p
        sub, ids = induced_subgraph(g, to_mask(x for p in paths.values() for x in p))
        local = {h: loc for loc, h in enumerate(ids)}
        tgt = {local[paths[i][-1]]: i for i in i1}
        res = getstar(sub, local[vs[j]], list(tgt), big_d, s, kappa, check_clique=False)
        if isinstance(res, Star):
            stars[j] = (ids[res.center], {tgt[t]: [ids[x] for x in p] for t, p in zip(res.targets, res.spokes)})
    by_set = defaultdict(list)
    for j, (u, spokes) in stars.items():
        by_set[frozenset(spokes)].append(j)
    for iset, js in sorted(by_set.items(), key=lambda t: (-len(t[1]), min(t[1]))):
        if len(js) < nu:
            continue
        js = sorted(js)[:nu]
        ilist = sorted(iset)
        branch = tuple(stars[j][0] for j in js)
        routes = []
        for (a, b), i in zip(combinations(range(nu), 2), ilist):
            qa = stars[js[a]][1][i]
            qb = stars[js[b]][1][i]
            region = to_mask(qa) | xsets[i] | to_mask(qb)
            routes.append(tuple(shortest_path(g, 1 << branch[a], 1 << branch[b], within=region)))
        emb = SubdivisionEmbedding(branch, tuple(routes))
        if verify_subdivision_embedding(g, spec, emb)[0]:
            return SubdivisionFound(spec, emb)
    return None


# distant splitting ---------------------------------------------------------

def _dense_ball_check(g, zmask, radius, tau):
    for v in members(zmask):
        c = chi(g, ball(g, v, radius))
        if c > tau:
            return DenseBall(v, radius, c, tau)
    return None


def _split_constants(g, nu, d, c, tau, kappa, k, ell):
    if kappa is None:
        kappa = clique_number(g)[0]
    if k is None or ell is None:
        k0, l0 = constants.router_bounds(nu, d + 3, kappa)
        k = k0 if k is None else k
        ell = l0 if ell is None else ell
    return kappa, k, ell, constants.distant_chain(c, tau, ell, k)


def distant_split(g: Graph, z, nu: int, d: int, c: int, tau: int, kappa: int | None = None,
                  k: int | None = None, ell: int | None = None, check_balls: bool = True):
    """Split Z into two subsets of chromatic number > c at distance > d.

    Outcomes: ``DistantPair``; ``SubdivisionFound`` (an induced K_nu^1);
    ``DenseBall`` (a radius 2d+7 ball with chi > tau); or ``TooSmall`` when
    chi(Z) is at most the threshold c_0.  ``k`` and ``ell`` override the router
    bounds used in the threshold chain.
    """
    zmask = to_mask(z)
    kappa, k, ell, chain = _split_constants(g, nu, d, c, tau, kappa, k, ell)
    radius = 2 * d + 7
    if check_balls:
        dense = _dense_ball_check(g, zmask, radius, tau)
        if dense is not None:
            return dense
    chi_z = chi(g, zmask)
    if chi_z > chain[0]:
        out = _distant_proof(g, zmask, nu, d, c, tau, kappa, k, ell, chain)
        if out is not None:
            return out
    pair = _layer_scan(g, zmask, d, c)
    if pair is not None:
        return pair
    assert chi_z <= chain[0], "split failed above the threshold"
    return TooSmall(chi_z, chain[0])


def _grow(g, m, r, within):
    return ball_of_set(g, m, r, within)


def _distant_proof(g, zmask, nu, d, c, tau, kappa, k, ell, chain):
    radius = 2 * d + 7
    xs, a = [], zmask
    while True:
        kp = len(xs)
        vs = _far_vertices(g, a, 2 * d + 8, ell)
        if len(vs) < ell:
            # A is covered by fewer than ell balls, so one of them is dense
            dense = _dense_ball_check(g, to_mask(vs), radius, tau)
            assert dense is not None
            return dense
        if kp >= k:
            res = router_find_knu1(g, xs, vs, d + 3, nu, kappa)
            return res if isinstance(res, SubdivisionFound) else None
        comps = components(g, a)
        a1 = max(comps, key=lambda m: (chi(g, m), -lowest(m)))
        z0 = lowest(a1)
        layers = bfs_layers(g, 1 << z0, a1)
        threshold = 2 * chain[kp + 1] + c
        cum, ms = 0, []
        for layer in layers:
            cum |= layer
            ms.append(cum)
        i = next(i for i, m in enumerate(ms) if chi(g, _grow(g, m, d + 3, a1)) > threshold)
        mi = ms[i]
        if chi(g, _grow(g, mi, 2, a1)) <= c:
            near = _grow(g, mi, 2, a1)
            far = _grow(g, mi, d + 3, a1)
            dist = distances_from(g, mi)
            ext = None
            for j in range(3, d + 4):
                bj = to_mask(x for x in members(far & ~near) if dist.get(x) == j)
                if chi(g, bj) > chain[kp + 1]:
                    ext = bj
                    break
            assert ext is not None
            xs.append(mi)
            a = ext
            continue
        if i == 0:
            b = ball(g, z0, radius)
            return DenseBall(z0, radius, chi(g, b), tau)
        z1 = _grow(g, mi, 2, a1)
        z2 = a1 & ~_grow(g, ms[i - 1], d + 3, a1)
        return DistantPair((z1, z2), d, c)


def _far_vertices(g, a, sep, limit):
    picked, blocked = [], 0
    for v in members(a):
        if len(picked) >= limit:
            break
        if blocked >> v & 1:
            continue
        picked.append(v)
        blocked |= ball(g, v, sep - 1)
    return picked


def _layer_scan(g, zmask, d, c):
    """Try every BFS split M_i^2 against Z minus M_{i-1}^{d+3}, from the least vertex
    of each component of Z with chi > c; the largest valid i wins, so a component
    far from the rest of Z is kept whole."""
    comps = sorted(components(g, zmask), key=lambda m: (-chi(g, m), lowest(m)))
    for comp in comps:
        if chi(g, comp) <= c:
            break
        layers = bfs_layers(g, 1 << lowest(comp), comp)
        prev, found = layers[0], None
        for layer in layers[1:]:
            cur = prev | layer
            z2 = zmask & ~ball_of_set(g, prev, d + 3)
            if chi(g, z2) <= c:
                break
            z1 = ball_of_set(g, cur, 2, zmask)
            if chi(g, z1) > c:
                found = (z1, z2)
            prev = cur
        if found is not None:
            return DistantPair(found, d, c)
    return None


def moredistant_split(g: Graph, z, nu: int, k: int, d: int, c: int, tau: int,
                      kappa: int | None = None, check_balls: bool = True, **kw):
    """k subsets of Z, pairwise at distance > d, each with chi > c (or another outcome)."""
    if k < 1:
        raise HypothesisError("k must be at least 1")
    zmask = to_mask(z)
    if kappa is None:
        kappa = clique_number(g)[0]
    if check_balls:
        dense = _dense_ball_check(g, zmask, 2 * d + 7, tau)
        if dense is not None:
            return dense
    return _moredistant(g, zmask, nu, k, d, c, tau, kappa, kw)


def _moredistant(g, zmask, nu, k, d, c, tau, kappa, kw):
    chi_z = chi(g, zmask)
    if k == 1:
        if chi_z > c:
            return DistantFamily((zmask,), d, c)
        return TooSmall(chi_z, c)
    res = distant_split(g, zmask, nu, d, c, tau, kappa, check_balls=False, **kw)
    if not isinstance(res, DistantPair):
        if isinstance(res, TooSmall):
            return TooSmall(chi_z, _family_bound(nu, k, d, c, tau, kappa, kw))
        return res
    z1, z2 = res.sets
    for keep, rest, first in ((z1, z2, True), (z2, z1, False)):
        sub = _moredistant(g, rest, nu, k - 1, d, c, tau, kappa, kw)
        if isinstance(sub, DistantFamily):
            sets = (keep,) + sub.sets if first else sub.sets + (keep,)
            return DistantFamily(sets, d, c)
        if not isinstance(sub, TooSmall):
            return sub
    return TooSmall(chi_z, _family_bound(nu, k, d, c, tau, kappa, kw))


def _family_bound(nu, k, d, c, tau, kappa, kw):
    if kw.get("k") is None and kw.get("ell") is None:
        return constants.moredistant_constant(nu, k, d, c, tau, kappa)
    out = c
    for _ in range(k - 1):
        kk = kw.get("k")
        ll = kw.get("ell")
        k0, l0 = constants.router_bounds(nu, d + 3, kappa)
        out = constants.distant_chain(out, tau, l0 if ll is None else ll, k0 if kk is None else kk)[0]
    return out


# verification --------------------------------------------------------------

def verify_outcome(g: Graph, out, z=None) -> tuple[bool, list[str]]:
    """Independently recheck a positive outcome against the host graph."""
    bad = []
    zmask = None if z is None else to_mask(z)
    if isinstance(out, (DistantPair, DistantFamily)):
        sets = [to_mask(s) for s in out.sets]
        for i, s in enumerate(sets):
            cs = chi(g, s)
            if cs <= out.c:
                bad.append(f"chi: set {i} has chi {cs} <= {out.c}")
            if zmask is not None and s & ~zmask:
                bad.append(f"subset: set {i} leaves Z")
        for i, j in combinations(range(len(sets)), 2):
            if not sets[i] or not sets[j]:
                continue
            dd = set_distance(g, sets[i], sets[j])
            if dd <= out.d:
                bad.append(f"distance: sets {i} and {j} at distance {dd} <= {out.d}")
    elif isinstance(out, DenseBall):
        cb = chi(g, ball(g, out.vertex, out.radius))
        if cb <= out.tau:
            bad.append(f"dense: ball around {out.vertex} has chi {cb} <= {out.tau}")
    elif isinstance(out, SubdivisionFound):
        ok, v = verify_subdivision_embedding(g, out.spec, out.embedding)
        bad.extend(v)
    elif isinstance(out, ImmersionFound):
        bad.extend(verify_immersion(g, out.embedding)[1])
    elif isinstance(out, TooSmall):
        if zmask is not None and chi(g, zmask) > out.bound:
            bad.append("too_small: chi(Z) exceeds the reported bound")
    elif isinstance(out, Star):
        bad.extend(verify_star(g, out)[1])
    else:
        bad.append(f"unknown outcome {type(out).__name__}")
    return not bad, bad
