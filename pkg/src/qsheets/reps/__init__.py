"""U_chi-modules as explicit matrices."""

from .constructions import (
    cartan_twist,
    direct_sum,
    levi_baby_verma,
    one_dim_module,
    sl2_baby_verma,
    tensor_one_dim,
    torus_module,
    trivial_module,
)
from .induction import InducedModuleIndex, degree_slices, graded_top, jordan_bijection, parabolic_induce
from .modules import (
    MatrixModule,
    ModuleError,
    are_isomorphic,
    derived_character,
    intertwiners,
    is_absolutely_irreducible,
    verify_module,
)
from .probes import baby_verma_top, class_of_character, conjecture_gio_probe, dckp_check, spanning_rank

__all__ = [
    "MatrixModule",
    "ModuleError",
    "InducedModuleIndex",
    "verify_module",
    "derived_character",
    "is_absolutely_irreducible",
    "intertwiners",
    "are_isomorphic",
    "levi_baby_verma",
    "sl2_baby_verma",
    "torus_module",
    "trivial_module",
    "one_dim_module",
    "cartan_twist",
    "tensor_one_dim",
    "direct_sum",
    "parabolic_induce",
    "graded_top",
    "degree_slices",
    "jordan_bijection",
    "class_of_character",
    "dckp_check",
    "baby_verma_top",
    "conjecture_gio_probe",
    "spanning_rank",
]
