"""Local versus global chromatic number.

Triangle-free graphs can still need many colours.  We build a few, look at how
their chromatic number compares with the chromatic number of small balls, and
then ask for the structures the extraction procedures look for: an induced
cycle and a K_3 immersion.
"""
from bananatree import chi, chi_rho, clique_number, find_induced_subdivision, SubdivisionSpec
from bananatree.generators import grotzsch_graph, mycielski, shift_graph
from bananatree.subdivision import build_k_nu_1, find_immersion, verify_immersion

for name, g in [("Groetzsch", grotzsch_graph()), ("Mycielski(3)", mycielski(3)), ("shift(8)", shift_graph(8))]:
    print(f"{name:13s} n={g.n:3d}  omega={clique_number(g)[0]}  chi={chi(g)}  "
          f"chi^1={chi_rho(g, 1)}  chi^2={chi_rho(g, 2)}")

# balls of radius 1 in a triangle-free graph are stars, so chi^1 = 2 however
# large chi gets; radius 2 already sees more of the structure

k3 = SubdivisionSpec.from_edges(3, [(0, 1), (1, 2), (0, 2)])
emb = find_induced_subdivision(grotzsch_graph(), k3)
print("shortest induced cycle found in the Groetzsch graph:", emb.paths)

g = build_k_nu_1(4)
imm = find_immersion(g, 4)
print("K_4 immersion in K_4^1 verified:", verify_immersion(g, imm)[0])
