"""Exact (big integer) bounds from the constructive lemmas.

None of these are meant to be reached by desk-scale inputs; they are used to
decide whether a procedure is *guaranteed* to succeed, and procedures still
run below them.  Values whose binary length would exceed ``MAX_BITS`` are
reported as ``math.inf``; every comparison against them still behaves correctly.
"""
from __future__ import annotations

import math
from functools import lru_cache

from .graphs import RootedTree
from .invariants import ramsey_bound


MAX_BITS = 1 << 20


def _power(base, exp):
    if exp == math.inf or (base > 1 and exp * math.log2(base) > MAX_BITS):
        return math.inf
    return base ** exp


def _capped(x):
    return math.inf if x != math.inf and x.bit_length() > MAX_BITS else x


@lru_cache(maxsize=None)
def star_targets(kappa: int, d: int, s: int) -> int:
    """Number of targets within distance ``d`` that forces a star with ``s`` spokes
    in a graph of clique number at most ``kappa``."""
    if s <= 0:
        return 0
    if d <= 0:
        # distinct targets at distance 0 coincide with v, so two of them cannot exist
        return 1 if s == 1 else 2
    k1 = ramsey_bound(kappa + 1, s)
    if d == 1:
        return k1 + 1
    kp = star_targets(kappa, d - 1, s)
    if kp == math.inf:
        return kp
    return _capped((2 * (d + 1) * (kp - 1) + 1) * k1)


@lru_cache(maxsize=None)
def router_bounds(nu: int, d: int, kappa: int) -> tuple[int, int]:
    """(k, ell): enough connected sets and far-apart vertices to force K_nu^1."""
    s = nu * (nu - 1) // 2
    k1 = star_targets(kappa, d, s)
    if k1 == math.inf:
        return math.inf, math.inf
    ell1 = nu * (math.comb(k1, s) if s <= k1 else 0)
    k = k1 * (d + 1)
    return k, _capped(ell1 * _power(d + 1, k)) if ell1 else 0


def distant_chain(c: int, tau: int, ell: int, k: int) -> list[int]:
    """The thresholds c_0..c_k with c_k = ell*tau and c_i = 2c_{i+1} + 2c."""
    if k > MAX_BITS or ell == math.inf or c == math.inf:
        # c_0 >= 2^k, so it is past the cap
        return [math.inf]
    chain = [0] * (k + 1)
    chain[k] = ell * tau
    for i in range(k - 1, -1, -1):
        chain[i] = _capped(2 * chain[i + 1] + 2 * c) if chain[i + 1] != math.inf else math.inf
    return chain


def distant_constant(nu: int, d: int, c: int, tau: int, kappa: int) -> int:
    k, ell = router_bounds(nu, d + 3, kappa)
    return distant_chain(c, tau, ell, k)[0]


def moredistant_constant(nu: int, k: int, d: int, c: int, tau: int, kappa: int) -> int:
    out = c
    for _ in range(k - 1):
        out = distant_constant(nu, d, out, tau, kappa)
    return out


def gettree_constant(shape: RootedTree, nu: int, c: int, d: int, tau: int, kappa: int) -> int:
    d = max(d, 1)

    def rec(v):
        kids = shape.children(v)
        if not kids:
            return c
        inner = max(rec(w) for w in kids)
        c0 = max(tau, moredistant_constant(nu, len(kids), d, inner, tau, kappa))
        return 2 * c0

    return rec(shape.root)


def prune_loss(height: int) -> int:
    """Worst-case factor lost to pruning: 2^(h^2)."""
    return 2 ** (height * height)


def pruned_constant(shape: RootedTree, nu: int, c: int, d: int, tau: int, kappa: int) -> int:
    return gettree_constant(shape, nu, prune_loss(shape.height) * c, d, tau, kappa)


def platonic_q(h: int) -> int:
    """Size of the leaf-pattern alphabet: 2^(2^(2h))."""
    return _power(2, 2 ** (2 * h))
