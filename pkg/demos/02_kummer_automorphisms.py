"""Translations and involutions acting on generalized Kummer varieties.

Run with ``python demos/02_kummer_automorphisms.py``.
"""

from hkdual.intlin import cokernel
from hkdual.kummer_aut import (
    ModuliConfig,
    aut_rel,
    involution_orbit_count,
    minimal_isogeny_matrix,
    translation_elements,
    translation_subgroup,
    valid_configs,
    verify_factorization,
)

# A construction is (n, d1, d2, s) with d1 d2 = n + 1. The group of torsion
# pairs (x, xi) with phi x = 0 and phi^ xi = s x is always (Z/(n+1))^4,
# and it agrees with the cokernel of the minimal isogeny.
print(f"{'config':>14}  {'Gal':<28} coker M_phi")
for cfg in valid_configs(6, s_values=[1]):
    tag = f"({cfg.n},{cfg.d1},{cfg.d2},{cfg.s})"
    print(f"{tag:>14}  {str(translation_subgroup(cfg)):<28} {cokernel(minimal_isogeny_matrix(cfg))}")

# The isogeny factors through multiplication by n + 1.
bad = [c for c in valid_configs(12) if not verify_factorization(c)]
print("configs where M_phi M_psi != (n+1) I:", bad or "none")

# Automorphisms preserving the fibration: the kernel of the dual polarization.
cfg = ModuliConfig(2, 1, 3, 1)
print("Aut(X/B) for Kum_2:", aut_rel(cfg), "of order", aut_rel(cfg).order)

# Involutions (-1, v) for each of the 81 translations v; conjugating by the
# 9 fibration-preserving translations groups them into 9 classes.
print("elements of K:", len(translation_elements(cfg)))
invs, orbs = involution_orbit_count(2)
print(f"{invs} involutions fall into {orbs} conjugacy classes under G")
