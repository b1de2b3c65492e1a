"""Exact integer computations around dual Lagrangian fibrations of hyper-Kähler manifolds."""

from .intlin import FinAbGroup, IntMatrix, SmithForm, cokernel, kernel_mod, smith_normal_form
from .kummer_aut import ModuliConfig, aut_rel, translation_subgroup, verify_factorization
from .lattice_bb import BBLattice, fujiki_product, kum2_lattice, quotient_bb
from .llv import HighestWeight, betti_table, weyl_dim
from .quotient import FixedPointLedger, GroupAction, orbit_count, orbifold_euler, singularity_report
from .torus import PolarizedTorus, TorusHom, dual_polarization, isogeny_kernel, polarization_type
from .verify import run_checks

__version__ = "0.1.0"

__all__ = [
    "BBLattice",
    "FinAbGroup",
    "FixedPointLedger",
    "GroupAction",
    "HighestWeight",
    "IntMatrix",
    "ModuliConfig",
    "PolarizedTorus",
    "SmithForm",
    "TorusHom",
    "aut_rel",
    "betti_table",
    "cokernel",
    "dual_polarization",
    "fujiki_product",
    "isogeny_kernel",
    "kernel_mod",
    "kum2_lattice",
    "orbifold_euler",
    "orbit_count",
    "polarization_type",
    "quotient_bb",
    "run_checks",
    "singularity_report",
    "smith_normal_form",
    "translation_subgroup",
    "verify_factorization",
    "weyl_dim",
]
