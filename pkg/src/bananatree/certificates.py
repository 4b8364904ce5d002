"""JSON certificates for every outcome, and a verifier that needs only the
certificate and the host graph.

A certificate is ``{"kind": ..., "params": {...}, ...}``; ``params`` carries
whatever the check needs (Z, d, tau, the expected tree kind, ...).
"""
from __future__ import annotations

from .banana import Banana, InternalRoute, verify_banana, verify_internal_route
from .extraction import (
    DenseBall,
    DistantFamily,
    DistantPair,
    HypothesesUnmet,
    ImmersionFound,
    InsufficientTargets,
    Star,
    SubdivisionFound,
    TooSmall,
    verify_outcome,
    verify_star,
)
from .graphs import Graph, members, to_mask
from .invariants import chi, clique_number
from .pineapple import PineappleTree, tree_kind, verify_pineapple_tree
from .subdivision import ImmersionEmbedding, SubdivisionEmbedding, SubdivisionSpec


def encode(out, params: dict | None = None) -> dict:
    """Certificate for an outcome object."""
    params = dict(params or {})
    if isinstance(out, SubdivisionFound):
        body = {"kind": "subdivision", "spec": out.spec.to_json(), "embedding": out.embedding.to_json()}
    elif isinstance(out, ImmersionFound):
        body = {"kind": "immersion", "embedding": out.embedding.to_json()}
    elif isinstance(out, (DistantPair, DistantFamily)):
        body = {"kind": out.kind, "sets": [members(s) for s in out.sets], "d": out.d, "c": out.c}
    elif isinstance(out, DenseBall):
        body = {"kind": "dense_ball", "vertex": out.vertex, "radius": out.radius, "chi": out.chi, "tau": out.tau}
    elif isinstance(out, TooSmall):
        body = {"kind": "too_small", "chi": out.chi, "bound": _num(out.bound)}
    elif isinstance(out, InsufficientTargets):
        body = {"kind": "insufficient_targets", "given": out.given, "needed": _num(out.needed)}
    elif isinstance(out, HypothesesUnmet):
        body = {"kind": "hypotheses_unmet", "violations": list(out.violations)}
    elif isinstance(out, Star):
        body = {"kind": "star", **out.to_json()}
    elif isinstance(out, PineappleTree):
        body = {"kind": "pineapple_tree", "tree": out.to_json(), "tree_kind": tree_kind(out)}
    elif isinstance(out, InternalRoute):
        body = {"kind": "internal_route", "xs": list(out.xs),
                "connectors": [[i, j, list(p)] for (i, j), p in sorted(out.connectors.items())]}
    elif isinstance(out, Banana):
        body = {"kind": "banana", **out.to_json()}
    else:
        raise TypeError(f"no certificate format for {type(out).__name__}")
    body["params"] = params
    return body


def _num(x):
    # JSON has no infinity; big bounds become the string "inf"
    return "inf" if x == float("inf") else x


def decode(data: dict, host: Graph | None = None):
    """Outcome object from a certificate (pineapple trees need the host)."""
    kind = data.get("kind")
    if kind == "subdivision":
        return SubdivisionFound(SubdivisionSpec.from_json(data["spec"]), SubdivisionEmbedding.from_json(data["embedding"]))
    if kind == "immersion":
        return ImmersionFound(ImmersionEmbedding.from_json(data["embedding"]))
    if kind in ("distant_pair", "distant_family"):
        cls = DistantPair if kind == "distant_pair" else DistantFamily
        return cls(tuple(to_mask(s) for s in data["sets"]), data["d"], data["c"])
    if kind == "dense_ball":
        return DenseBall(data["vertex"], data["radius"], data["chi"], data["tau"])
    if kind == "too_small":
        return TooSmall(data["chi"], float(data["bound"]) if data["bound"] == "inf" else data["bound"])
    if kind == "star":
        return Star.from_json(data)
    if kind == "pineapple_tree":
        if host is None:
            raise ValueError("pineapple tree certificates need the host graph")
        return PineappleTree.from_json(data["tree"], host)
    if kind == "internal_route":
        return InternalRoute(tuple(data["xs"]), {(i, j): tuple(p) for i, j, p in data["connectors"]})
    if kind == "banana":
        return Banana.from_json(data)
    raise ValueError(f"unknown certificate kind {kind!r}")


def verify_certificate(g: Graph, data: dict) -> tuple[bool, list[str]]:
    """Recheck a certificate against ``g``; returns ``(ok, violations)``."""
    try:
        kind = data["kind"]
        params = data.get("params", {})
        if kind in ("chi", "omega"):
            return _verify_value(g, data)
        if kind in ("insufficient_targets", "hypotheses_unmet"):
            return False, [f"{kind}: not a positive certificate"]
        out = decode(data, g)
    except (KeyError, TypeError, ValueError) as exc:
        return False, [f"malformed: {exc}"]
    if kind == "pineapple_tree":
        ok, bad = verify_pineapple_tree(out)
        want = params.get("tree_kind") or data.get("tree_kind")
        if want and tree_kind(out) != want and not (want == "pruned" and tree_kind(out) in ("barren", "fruitful")):
            bad = bad + [f"kind: tree is {tree_kind(out)}, certificate claims {want}"]
        return not bad, bad
    if kind == "internal_route":
        return verify_internal_route(g, params["X"], params["Z"], params["rho"], out)
    if kind == "banana":
        return verify_banana(g, out)
    if kind == "star":
        return verify_star(g, out, params.get("d"))
    return verify_outcome(g, out, params.get("Z"))


def _verify_value(g: Graph, data: dict) -> tuple[bool, list[str]]:
    bad = []
    value = data["value"]
    if data["kind"] == "chi":
        col = {int(v): c for v, c in data["witness"].items()}
        if set(col) != set(range(g.n)):
            bad.append("colouring: not every vertex is coloured")
        if any(col.get(u) == col.get(v) for u, v in g.edges()):
            bad.append("colouring: an edge is monochromatic")
        if len(set(col.values())) > value:
            bad.append("colouring: uses more colours than claimed")
        if chi(g) != value:
            bad.append(f"value: chi is {chi(g)}, not {value}")
    else:
        clique = data["witness"]
        if any(not g.has_edge(u, v) for i, u in enumerate(clique) for v in clique[i + 1:]):
            bad.append("clique: witness is not a clique")
        if len(clique) != value or clique_number(g)[0] != value:
            bad.append(f"value: omega is {clique_number(g)[0]}, not {value}")
    return not bad, bad
