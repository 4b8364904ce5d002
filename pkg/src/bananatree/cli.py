"""Command-line entry point: ``bananatree <subcommand> ...``.

Every subcommand prints one JSON document.  Exit codes: 0 success, 1 malformed
input, 2 a hypothesis or verification failure (with a report), 3 search budget
exhausted.
"""
from __future__ import annotations

import argparse
import json
import random
import sys

from . import generators, invariants
from .banana import (
    LimbFamily,
    extract_banana_cycle,
    extract_banana_tree,
    extract_fat_triangle,
    getforest,
    internalroute,
    limbs_share_end,
    overlap_graph,
)
from .certificates import encode, verify_certificate
from .extraction import HypothesisError, distant_split, moredistant_split
from .graphs import Graph, RootedTree, members, read_graph, to_mask, uniform_tree
from .invariants import BudgetExhausted, chi_rho, chromatic_number, clique_number, densest_ball
from .pineapple import PineappleTree, gettree, platonic, prune, treeramsey
from .subdivision import SubdivisionSpec, find_immersion, find_induced_subdivision


class Failure(Exception):
    """Exit 2 with a structured report."""

    def __init__(self, report):
        super().__init__(str(report))
        self.report = report


def _load_json(path):
    with open(path) as fh:
        return json.load(fh)


def _graph(args) -> Graph:
    if not args.graph:
        raise ValueError("--graph is required")
    return read_graph(args.graph)


def _instance(args) -> dict:
    if not args.instance:
        raise ValueError("--instance is required")
    return _load_json(args.instance)


def _shape(data) -> RootedTree:
    if isinstance(data, dict):
        return RootedTree.from_json(data)
    return RootedTree.from_parents(data)


# subcommands ---------------------------------------------------------------

def cmd_chi(args):
    g = _graph(args)
    k, col = chromatic_number(g, budget=args.budget)
    return {"kind": "chi", "value": k, "witness": {str(v): c for v, c in sorted(col.colours.items())}}


def cmd_omega(args):
    g = _graph(args)
    w, clique = clique_number(g)
    return {"kind": "omega", "value": w, "witness": sorted(clique)}


def cmd_chi_rho(args):
    g = _graph(args)
    value = chi_rho(g, args.rho, budget=args.budget)
    best = densest_ball(g, args.rho, budget=args.budget)
    witness = None if best is None else {"centre": best[0], "chi": best[1]}
    return {"kind": "chi_rho", "rho": args.rho, "value": value, "witness": witness}


def cmd_find_subdivision(args):
    g = _graph(args)
    if not args.spec:
        raise ValueError("--spec is required")
    spec = SubdivisionSpec.from_json(_load_json(args.spec))
    emb = find_induced_subdivision(g, spec, budget=args.budget)
    if emb is None:
        return {"kind": "none", "spec": spec.to_json()}
    from .extraction import SubdivisionFound

    return encode(SubdivisionFound(spec, emb))


def cmd_find_immersion(args):
    g = _graph(args)
    emb = find_immersion(g, args.n, budget=args.budget)
    if emb is None:
        return {"kind": "none", "n": args.n}
    from .extraction import ImmersionFound

    return encode(ImmersionFound(emb))


def _split_params(inst, args):
    keys = ("nu", "d", "c", "tau")
    missing = [k for k in keys if k not in inst]
    if missing:
        raise ValueError(f"instance lacks {missing}")
    extra = {}
    if args.override_large_constants:
        extra = {k: inst[k] for k in ("k", "ell") if k in inst}
    return extra


def cmd_distant_split(args):
    g = _graph(args)
    inst = _instance(args) if args.instance else {}
    inst.setdefault("Z", list(range(g.n)))
    extra = _split_params(inst, args)
    check = not args.override_large_constants or inst.get("check_balls", True)
    if inst.get("family"):
        out = moredistant_split(g, inst["Z"], inst["nu"], inst["family"], inst["d"], inst["c"],
                                inst["tau"], check_balls=check, **extra)
    else:
        out = distant_split(g, inst["Z"], inst["nu"], inst["d"], inst["c"], inst["tau"],
                            check_balls=check, **extra)
    return encode(out, {"Z": members(to_mask(inst["Z"])), "d": inst["d"], "c": inst["c"]})


def cmd_gettree(args):
    g = _graph(args)
    inst = _instance(args)
    shape = _shape(inst["shape"])
    z = inst.get("Z", list(range(g.n)))
    _split_params(inst, args)
    if inst.get("platonic"):
        q = inst.get("q") if args.override_large_constants else None
        out = platonic(g, z, shape, inst["nu"], inst["c"], inst["d"], inst["tau"],
                       q=q, override=args.override_large_constants)
    else:
        out = gettree(g, z, shape, inst["nu"], inst["c"], inst["d"], inst["tau"])
    return encode(out, {"Z": members(to_mask(z))})


def cmd_prune(args):
    g = _graph(args)
    inst = _instance(args)
    pt = PineappleTree.from_json(inst.get("tree", inst), g)
    res = prune(pt)
    cert = encode(res.tree, {"tree_kind": "pruned"})
    cert["splits"] = {str(u): s for u, s in sorted(res.splits.items())}
    cert["chi_before"] = {str(u): s for u, s in sorted(res.chi_before.items())}
    cert["chi_after"] = {str(u): s for u, s in sorted(res.chi_after.items())}
    return cert


def cmd_tree_ramsey(args):
    inst = _instance(args) if args.instance else {}
    q, t, h = inst.get("q", 2), inst.get("t", 1), inst.get("h", 1)
    host = uniform_tree(q * t, h)
    leaves = host.leaves()
    if "colours" in inst:
        cols = inst["colours"]
        if len(cols) != len(leaves):
            raise ValueError(f"need {len(leaves)} leaf colours")
    else:
        rng = random.Random(args.seed)
        cols = [rng.randrange(q) + 1 for _ in leaves]
    res = treeramsey(host, dict(zip(leaves, cols)), t)
    sub, keep = res.tree(host)
    return {"kind": "tree_ramsey", "q": q, "t": t, "h": h, "colour": res.colour,
            "vertices": list(res.vertices), "subtree": sub.to_json()}


def cmd_overlap(args):
    inst = _instance(args)
    fam = LimbFamily(_shape(inst["tree"]), tuple(tuple(x) for x in inst["limbs"]))
    og = overlap_graph(fam, inst.get("k", args.k))
    return {"kind": "overlap_graph", "graph": og.to_json(), "share_end": limbs_share_end(fam)}


def cmd_getforest(args):
    j = _graph(args)
    fam, iso = getforest(j, args.k)
    return {"kind": "limb_family", "k": args.k, **fam.to_json(), "iso": iso}


def cmd_extract(args):
    g = _graph(args)
    inst = _instance(args)
    pt = PineappleTree.from_json(inst["tree"], g)
    if args.pipeline == "banana-tree":
        fam = LimbFamily.from_json(inst["limbs"])
        out = extract_banana_tree(pt, fam, inst["iso"], Graph.from_json(inst["skeleton"]),
                                  SubdivisionSpec.from_json(inst["spec"]), inst.get("n"))
    elif args.pipeline == "banana-cycle":
        out = extract_banana_cycle(pt, inst["m"], inst["n"])
    else:
        out = extract_fat_triangle(pt, inst["n"], inst["tau"], inst.get("rho"))
    return encode(out, {"pipeline": args.pipeline})


def cmd_internalroute(args):
    g = _graph(args)
    inst = _instance(args)
    out = internalroute(g, inst["X"], inst["Z"], inst["rho"], inst["tau"], inst["n"])
    return encode(out, {"X": inst["X"], "Z": inst["Z"], "rho": inst["rho"]})


def _jsonable(x):
    if isinstance(x, (PineappleTree, LimbFamily, RootedTree, Graph, SubdivisionSpec)):
        return x.to_json()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


def _generate(family: str, p: dict, seed: int):
    gen = generators
    if family == "mycielski":
        return gen.mycielski(int(p.get("k", 2))), {}
    if family == "grotzsch":
        return gen.grotzsch_graph(), {}
    if family == "shift":
        return gen.shift_graph(int(p.get("n", 5))), {}
    if family == "necklace":
        return gen.k4_necklace(int(p.get("blocks", 3)), int(p.get("link", 4)), p.get("closed", "0") == "1"), {}
    if family == "random":
        return gen.random_graph(int(p.get("n", 10)), float(p.get("p", 0.3)), seed), {}
    if family == "two-blob":
        d = int(p.get("d", 1))
        g = gen.plant_two_blob_instance(d, int(p.get("size", 4)), seed)
        return g, {"nu": 3, "d": d, "c": 3, "tau": int(p.get("tau", 10))}
    if family == "gettree":
        shape = uniform_tree(int(p.get("arity", 2)), int(p.get("height", 1)))
        return gen.plant_gettree_instance(shape, int(p.get("d", 2)))
    if family == "barren-path":
        return gen.plant_barren_path_instance(int(p.get("n", 2)), seed=seed)
    if family == "internalroute":
        return gen.plant_internalroute_instance(int(p.get("n", 2)))
    if family == "bigshare":
        return gen.plant_bigshare_instance(int(p.get("n", 2)), int(p.get("k", 2)), seed=seed)
    if family == "banana-tree":
        from .graphs import path_graph

        return gen.plant_banana_tree_instance(path_graph(int(p.get("vertices", 3))), int(p.get("thickness", 2)), seed=seed)
    if family == "fat-cycle":
        return gen.plant_fat_cycle_instance(int(p.get("m", 3)), int(p.get("n", 3)), seed=seed)
    if family == "fat-triangle":
        return gen.plant_fat_triangle_instance(int(p.get("n", 3)), seed=seed)
    raise ValueError(f"unknown family {family!r}")


def cmd_generate(args):
    params = {}
    for item in args.param or []:
        if "=" not in item:
            raise ValueError(f"--param expects key=value, got {item!r}")
        k, v = item.split("=", 1)
        params[k] = v
    g, bundle = _generate(args.family, params, args.seed)
    bundle = _jsonable(bundle)
    if args.out:
        with open(args.out + ".txt", "w") as fh:
            fh.write(g.to_text())
        with open(args.out + ".json", "w") as fh:
            json.dump(bundle, fh, sort_keys=True)
        return {"kind": "generated", "family": args.family, "graph": args.out + ".txt",
                "instance": args.out + ".json", "n": g.n, "m": g.edge_count}
    return {"kind": "generated", "family": args.family, "graph": g.to_json(), "instance": bundle}


def cmd_verify(args):
    g = _graph(args)
    if not args.certificate:
        raise ValueError("--certificate is required")
    cert = _load_json(args.certificate)
    ok, bad = verify_certificate(g, cert)
    report = {"kind": "verification", "certificate": cert.get("kind"), "ok": ok, "violations": bad}
    if not ok:
        raise Failure(report)
    return report


COMMANDS = {
    "chi": cmd_chi,
    "omega": cmd_omega,
    "chi-rho": cmd_chi_rho,
    "find-subdivision": cmd_find_subdivision,
    "find-immersion": cmd_find_immersion,
    "distant-split": cmd_distant_split,
    "gettree": cmd_gettree,
    "prune": cmd_prune,
    "tree-ramsey": cmd_tree_ramsey,
    "overlap": cmd_overlap,
    "getforest": cmd_getforest,
    "extract": cmd_extract,
    "internalroute": cmd_internalroute,
    "generate": cmd_generate,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--graph", help="graph file (text 'n m' + edges, or JSON)")
    common.add_argument("--spec", help="subdivision spec JSON")
    common.add_argument("--instance", help="instance / parameter JSON")
    common.add_argument("--budget", type=int, help="search node budget")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--jobs", type=int, default=1, help="worker cap (searches run serially)")
    common.add_argument("--pretty", action="store_true", help="indented output")
    common.add_argument("--override-large-constants", action="store_true",
                        help="honour k/ell/q overrides and oversized shapes")
    p = argparse.ArgumentParser(prog="bananatree", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sp = sub.add_parser(name, parents=[common])
        if name == "chi-rho":
            sp.add_argument("--rho", type=int, required=True)
        elif name == "find-immersion":
            sp.add_argument("--n", type=int, required=True)
        elif name in ("getforest", "overlap"):
            sp.add_argument("--k", type=int, default=1)
        elif name == "extract":
            sp.add_argument("pipeline", choices=["banana-tree", "banana-cycle", "fat-triangle"])
        elif name == "generate":
            sp.add_argument("family")
            sp.add_argument("--param", action="append", help="key=value")
            sp.add_argument("--out", help="write PREFIX.txt and PREFIX.json")
        elif name == "verify":
            sp.add_argument("--certificate", required=True)
    return p


def _emit(obj, pretty, stream=None):
    stream = stream or sys.stdout
    text = json.dumps(obj, indent=2 if pretty else None, sort_keys=True, default=str)
    stream.write(text + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 1 if exc.code else 0
    if args.jobs < 1:
        _emit({"error": "malformed", "message": "--jobs must be positive"}, args.pretty)
        return 1
    saved = invariants.DEFAULT_BUDGET
    if args.budget is not None:
        invariants.DEFAULT_BUDGET = args.budget
    try:
        _emit(COMMANDS[args.command](args), args.pretty)
        return 0
    except Failure as exc:
        _emit(exc.report, args.pretty)
        return 2
    except HypothesisError as exc:
        _emit({"error": "hypothesis", "violations": str(exc).split("; ")}, args.pretty)
        return 2
    except BudgetExhausted as exc:
        _emit({"error": "budget", "message": str(exc)}, args.pretty)
        return 3
    except (ValueError, KeyError, TypeError, OSError, json.JSONDecodeError) as exc:
        _emit({"error": "malformed", "message": f"{type(exc).__name__}: {exc}"}, args.pretty)
        return 1
    finally:
        invariants.DEFAULT_BUDGET = saved


if __name__ == "__main__":
    sys.exit(main())
