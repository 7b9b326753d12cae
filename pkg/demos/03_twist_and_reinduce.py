# %% [markdown]
# # Twisting induced modules along a Jordan class
#
# Induce a 3-dimensional module of the (2,1) Levi of SL_3 to a
# 27-dimensional module, then move the character along the centre of the
# Levi by tensoring the top with a one-dimensional module.

# %%
from fractions import Fraction

from qsheets.classes import class_dim
from qsheets.cyclo import zeta
from qsheets.reps import (
    class_of_character,
    dckp_check,
    graded_top,
    jordan_bijection,
    levi_baby_verma,
    parabolic_induce,
    verify_module,
)
from qsheets.uqe import CentralCharacter, build_algebra

p = build_algebra(2, 3, levi_simple=[0])
print(p.describe())

w = levi_baby_verma(p, 0, [2, 1], 1)
chi = CentralCharacter.for_presentation(p, f_values=[1, 2, 3], k_values=w.character().k_values)
v = parabolic_induce(w, {0}, chi)
print("dim W =", w.dim, "| dim Ind =", v.dim, "| relations:", verify_module(v)["passed"])

# %% [markdown]
# The degree-zero slice of the induced module is the module we started from.

# %%
top = graded_top(v)
print(all((x == y).all() for (_, x), (_, y) in zip(top.generators(), w.generators())))

# %% [markdown]
# Twist by points z of the centre of the Levi.  z = 1 returns the same
# matrices; other points keep the dimension and multiply chi(K^ell).

# %%
z3 = zeta(3)
for z in ([1, 1, 1], [z3, z3, z3 ** -2], [64, 64, Fraction(1, 4096)]):
    (rec,) = jordan_bijection(chi, z, [v])
    print(f"z = {[str(x) for x in z]}")
    print(f"  dims {rec['dim']} -> {rec['dim_twisted']}, relations {rec['relations_pass']}, "
          f"character {rec['character_matches']}, identical {rec['identical']}")

# %% [markdown]
# The divisibility bound: ell^(dim O / 2) divides dim V.

# %%
cls = class_of_character(p, chi)
print(cls, "dim", class_dim(cls), "->", dckp_check(v, cls))
