"""Exact chromatic number, clique number, radius-restricted chromatic number
and a small Ramsey helper.

All searches are exact.  When a node budget runs out, ``BudgetExhausted`` is
raised; nothing here ever returns an approximate value.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

from .graphs import Graph, ball, components, lowest, members, popcount, to_mask


class BudgetExhausted(RuntimeError):
    """A search hit its node-expansion budget before finishing."""


DEFAULT_BUDGET = 5_000_000


class _Budget:
    __slots__ = ("left",)

    def __init__(self, budget):
        self.left = DEFAULT_BUDGET if budget is None else budget

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise BudgetExhausted("search budget exhausted")


@dataclass(frozen=True)
class Colouring:
    """Proper colouring; ``colours[v]`` is in ``1..k`` for coloured vertices."""

    k: int
    colours: dict

    def is_proper(self, g: Graph) -> bool:
        for u, v in g.edges():
            if u in self.colours and v in self.colours and self.colours[u] == self.colours[v]:
                return False
        return all(1 <= c <= self.k for c in self.colours.values())


# cliques -------------------------------------------------------------------

def _max_clique(adj, cand: int) -> int:
    best = 0

    def expand(r, p, x):
        nonlocal best
        if not p and not x:
            if popcount(r) > popcount(best):
                best = r
            return
        if popcount(r) + popcount(p) <= popcount(best):
            return
        pivot = max(members(p | x), key=lambda u: popcount(p & adj[u]))
        for v in members(p & ~adj[pivot]):
            expand(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    expand(0, cand, 0)
    return best


def clique_number(g: Graph, within=None) -> tuple[int, list[int]]:
    """Exact clique number of ``g[within]`` with a witness clique."""
    cand = g.all if within is None else to_mask(within)
    w = _max_clique(g.adj, cand)
    return popcount(w), members(w)


def stable_number(g: Graph, within=None) -> tuple[int, list[int]]:
    cand = g.all if within is None else to_mask(within)
    comp = [~a & cand & ~(1 << v) for v, a in enumerate(g.adj)]
    w = _max_clique(comp, cand)
    return popcount(w), members(w)


# colouring -----------------------------------------------------------------

def _dsatur_greedy(adj, verts):
    colour = {}
    nbr_cols = {v: set() for v in verts}
    vmask = to_mask(verts)
    deg = {v: popcount(adj[v] & vmask) for v in verts}
    left = set(verts)
    while left:
        v = max(left, key=lambda u: (len(nbr_cols[u]), deg[u], -u))
        c = 0
        while c in nbr_cols[v]:
            c += 1
        colour[v] = c
        left.discard(v)
        for w in members(adj[v] & vmask):
            nbr_cols[w].add(c)
    return colour


def _k_colour(adj, verts, k, budget: _Budget, forbidden=None):
    """Backtracking DSATUR search for a colouring with colours 0..k-1.

    ``forbidden`` maps a vertex to a set of colours it may not take (list
    colouring); symmetry breaking on new colours is disabled when it is given.
    """
    vmask = to_mask(verts)
    colour = {}
    deg = {v: popcount(adj[v] & vmask) for v in verts}
    forbidden = forbidden or {}
    symmetric = not forbidden

    def pick():
        best, key = None, None
        for v in verts:
            if v in colour:
                continue
            used = {colour[w] for w in members(adj[v] & vmask) if w in colour}
            used |= forbidden.get(v, set())
            kk = (len(used), deg[v], -v)
            if key is None or kk > key:
                best, key, best_used = v, kk, used
        return best, best_used

    def rec(n_used):
        budget.tick()
        if len(colour) == len(verts):
            return True
        v, used = pick()
        if len(used) >= k:
            return False
        top = min(k, n_used + 1) if symmetric else k
        for c in range(top):
            if c in used:
                continue
            colour[v] = c
            if rec(max(n_used, c + 1)):
                return True
            del colour[v]
        return False

    if rec(0):
        return dict(colour)
    return None


def _component_chi(g: Graph, comp: int, budget: _Budget):
    verts = members(comp)
    if len(verts) == 1:
        return 1, {verts[0]: 0}
    if popcount(g.neighbourhood(comp) & comp) == 0:
        return 1, {v: 0 for v in verts}
    greedy = _dsatur_greedy(g.adj, verts)
    ub = max(greedy.values()) + 1
    lb = popcount(_max_clique(g.adj, comp))
    for k in range(lb, ub):
        col = _k_colour(g.adj, verts, k, budget)
        if col is not None:
            return k, col
    return ub, greedy


def chromatic_number(g: Graph, within=None, budget: int | None = None) -> tuple[int, Colouring]:
    """Exact chi of ``g[within]`` with a witness colouring (colours ``1..k``).

    Results are cached on the graph, keyed by vertex set.
    """
    mask = g.all if within is None else to_mask(within)
    cache = g._cache.setdefault("chi", {})
    hit = cache.get(mask)
    if hit is not None:
        return hit
    b = _Budget(budget)
    k, colours = 0, {}
    for comp in components(g, mask):
        kc, col = _component_chi(g, comp, b)
        k = max(k, kc)
        colours.update({v: c + 1 for v, c in col.items()})
    result = (k, Colouring(k, colours))
    cache[mask] = result
    return result


def chi(g: Graph, within=None, budget: int | None = None) -> int:
    return chromatic_number(g, within, budget)[0]


def is_k_colourable(g: Graph, k: int, within=None, budget: int | None = None) -> bool:
    mask = g.all if within is None else to_mask(within)
    if not mask:
        return True
    if k <= 0:
        return False
    b = _Budget(budget)
    return _k_colour(g.adj, members(mask), k, b) is not None


def list_colouring(g: Graph, within, k: int, forbidden: dict, budget: int | None = None):
    """Colouring of ``g[within]`` from ``1..k`` avoiding ``forbidden[v]`` (1-based), or None."""
    verts = members(to_mask(within))
    if not verts:
        return {}
    fb = {v: {c - 1 for c in cs} for v, cs in forbidden.items()}
    col = _k_colour(g.adj, verts, k, _Budget(budget), fb)
    return None if col is None else {v: c + 1 for v, c in col.items()}


def chi_rho(g: Graph, rho: int, budget: int | None = None) -> int:
    """Maximum chi over all closed balls of radius ``rho``; 0 for the null graph."""
    best = 0
    for v in range(g.n):
        best = max(best, chi(g, ball(g, v, rho), budget))
    return best


def densest_ball(g: Graph, rho: int, centres=None, budget: int | None = None) -> tuple[int, int] | None:
    """(vertex, chi) of the least-id centre whose radius-``rho`` ball has maximum chi."""
    best = None
    cs = range(g.n) if centres is None else members(to_mask(centres))
    for v in cs:
        c = chi(g, ball(g, v, rho), budget)
        if best is None or c > best[1]:
            best = (v, c)
    return best


# Ramsey --------------------------------------------------------------------

def ramsey_bound(kappa: int, s: int) -> int:
    """Erdos-Szekeres bound: every graph on this many vertices has a
    ``kappa``-clique or a stable set of size ``s``."""
    if kappa <= 0 or s <= 0:
        return 0
    return math.comb(kappa + s - 2, kappa - 1)


@dataclass(frozen=True)
class RamseyResult:
    kind: str  # "clique", "stable" or "too_small"
    vertices: tuple


def ramsey_split(g: Graph, kappa: int, s: int, within=None) -> RamseyResult:
    """A clique of size ``kappa`` or a stable set of size ``s`` in ``g[within]``."""
    mask = g.all if within is None else to_mask(within)
    if kappa <= 0:
        return RamseyResult("clique", ())
    if s <= 0:
        return RamseyResult("stable", ())
    w, clique = clique_number(g, mask)
    if w >= kappa:
        return RamseyResult("clique", tuple(clique[:kappa]))
    a, stable = stable_number(g, mask)
    if a >= s:
        return RamseyResult("stable", tuple(stable[:s]))
    assert popcount(mask) < ramsey_bound(kappa, s)
    return RamseyResult("too_small", ())
