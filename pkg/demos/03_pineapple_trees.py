"""Growing, pruning and classifying pineapple trees.

A pineapple tree hangs leaf sets of large chromatic number off a rooted tree
shape, with a connected covering set Y_v at every internal vertex.  We grow one
in a planted host, prune a synthetic tree with mixed triples, reduce to a
barren or fruitful tree, and turn a barren path into a K_n immersion.
"""
from bananatree import gettree, platonic, prune, verify_pineapple_tree
from bananatree.generators import (
    build_synthetic_pineapple_tree, plant_barren_path_instance, plant_gettree_instance,
)
from bananatree.graphs import rooted_path, uniform_tree
from bananatree.pineapple import barren_to_immersion, classify_triples, leaf_separation, tree_kind
from bananatree.subdivision import verify_immersion

shape = uniform_tree(2, 2)
g, b = plant_gettree_instance(shape, d=2)
pt = gettree(g, b["Z"], shape, b["nu"], b["c"], b["d"], b["tau"])
print(f"gettree on a {g.n}-vertex host: valid={verify_pineapple_tree(pt)[0]} "
      f"leaf separation={leaf_separation(pt)}")

g, mixed = build_synthetic_pineapple_tree(rooted_path(4), {"attach": "pendant"}, flavour="mixed", seed=2)
labels = classify_triples(mixed)
print("mixed triples before pruning:", sum(x == "mixed" for x in labels.values()))
res = prune(mixed)
print("after pruning:", tree_kind(res.tree), "splits per leaf:", res.splits)

# the true alphabet for height 1 is q = 16, which needs a 16-ary intermediate
# tree of height 2; here we pass q = 2 to keep the host small
g, b = plant_gettree_instance(uniform_tree(2, 2), d=2)
out = platonic(g, b["Z"], rooted_path(1), 3, b["c"], 2, b["tau"], q=2)
print("platonic reduction gives a", tree_kind(out), "tree")

g, b = plant_barren_path_instance(3)
imm = barren_to_immersion(b["tree"], 3)
print("K_3 immersion from a barren path verified:", verify_immersion(g, imm.embedding)[0])
