"""Splitting a high-chromatic set into far-apart pieces.

distant_split either finds two subsets of chromatic number > c at distance > d,
or an induced K_nu^1, or a ball whose chromatic number exceeds tau, or reports
that chi(Z) is below the (huge) guarantee threshold.  Each outcome carries its
own witness.
"""
from bananatree import distant_split, moredistant_split, verify_outcome
from bananatree.constants import distant_constant
from bananatree.generators import k4_necklace, plant_two_blob_instance

g = plant_two_blob_instance(d=1, size=4, seed=7)
for tau in (10, 1):
    out = distant_split(g, range(g.n), nu=3, d=1, c=3, tau=tau)
    print(f"tau={tau:2d}: {out.kind:12s} verified={verify_outcome(g, out, range(g.n))[0]}")

# the guarantee threshold explodes immediately
print("threshold for nu=3, d=1, c=1, tau=1, kappa=2:", distant_constant(3, 1, 1, 1, 2))

# three far-apart K_4's out of a necklace
neck = k4_necklace(4, 8)
fam = moredistant_split(neck, range(neck.n), nu=3, k=3, d=1, c=3, tau=10)
print("family sizes:", [bin(s).count("1") for s in fam.sets], verify_outcome(neck, fam)[0])

# below the threshold the full search still runs with tiny k and ell
out = distant_split(k4_necklace(6, 6), range(34), 3, 1, 3, 4, k=1, ell=1, check_balls=False)
print("proof-mode outcome:", out.kind)
