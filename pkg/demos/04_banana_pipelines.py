"""From fruitful pineapple trees to fat subdivisions.

Limbs realize any forest as an overlap graph; on a fruitful tree over that
limb structure each overlap window yields one strand of a banana.  The three
pipelines end in induced subdivisions of a banana tree, a fat cycle and a fat
triangle, each rechecked by the subdivision verifier.
"""
from bananatree import getforest, overlap_graph, verify_subdivision_embedding
from bananatree.banana import extract_banana_cycle, extract_banana_tree, extract_fat_triangle
from bananatree.generators import (
    plant_banana_tree_instance, plant_fat_cycle_instance, plant_fat_triangle_instance,
)
from bananatree.graphs import Graph, path_graph

star = Graph(4, [(0, 1), (0, 2), (0, 3)])
fam, _ = getforest(star, 3)
print("limb tree size", fam.tree.n, "overlap edges", overlap_graph(fam, 3).edges())

g, b = plant_banana_tree_instance(path_graph(3), thickness=2, min_lengths=(1, 2))
out = extract_banana_tree(b["tree"], b["limbs"], b["iso"], b["skeleton"], b["spec"], b["n"])
print("banana tree: branch vertices", out.embedding.branch_map,
      "strand lengths", [len(p) - 1 for p in out.embedding.paths])

g, b = plant_fat_cycle_instance(3, 3)
out = extract_banana_cycle(b["tree"], 3, 3)
print("fat cycle on", g.n, "vertices verified:", verify_subdivision_embedding(g, out.spec, out.embedding)[0])

g, b = plant_fat_triangle_instance(3)
out = extract_fat_triangle(b["tree"], 3, 1)
print("fat triangle: multiplicities",
      sorted({e: out.spec.edges.count(e) for e in out.spec.edges}.values()),
      "verified:", verify_subdivision_embedding(g, out.spec, out.embedding)[0])
