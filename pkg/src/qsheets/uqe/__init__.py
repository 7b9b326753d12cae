"""U_eps at a root of unity: PBW normal forms, the Frobenius center and pi."""

from .algebra import AlgebraElement, Presentation, RewriteBoundError, build_algebra
from .center import CentralCharacter, z0_check, z0_generators
from .covering import (
    GroupPoint,
    char_from_point,
    chevalley_f,
    levi_factorization_holds,
    pi_map,
    random_lower_point,
    restrict_char,
)

__all__ = [
    "AlgebraElement",
    "Presentation",
    "RewriteBoundError",
    "build_algebra",
    "CentralCharacter",
    "z0_check",
    "z0_generators",
    "GroupPoint",
    "char_from_point",
    "chevalley_f",
    "levi_factorization_holds",
    "pi_map",
    "random_lower_point",
    "restrict_char",
]
