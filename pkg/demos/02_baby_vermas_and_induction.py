# %% [markdown]
# # Baby Verma modules and induction from the torus
#
# Small quantum sl_2 at a cube root of unity, with every module written as
# explicit matrices over a cyclotomic field.

# %%
from qsheets.cyclo import zeta
from qsheets.reps import (
    are_isomorphic,
    class_of_character,
    derived_character,
    is_absolutely_irreducible,
    levi_baby_verma,
    parabolic_induce,
    spanning_rank,
    torus_module,
    verify_module,
)
from qsheets.uqe import CentralCharacter, build_algebra, pi_map

p = build_algebra(1, 3)
eps = p.eps
print("eps =", eps)

# %% [markdown]
# A baby Verma module: F shifts the basis, F^3 acts by a, and K_omega is
# diagonal.  verify_module checks every defining relation and reads the
# values of the central character off the Frobenius centre.

# %%
bv = levi_baby_verma(p, 0, [zeta(3)], 1)
print("F =\n", bv.F[0])
rep = verify_module(bv)
print("relations:", rep["passed"], "| character:", rep["character"].to_json())

# %% [markdown]
# The character sits over a regular class: pi(chi) is lower triangular
# with a nonzero entry below the diagonal.

# %%
chi = rep["character"]
print(pi_map(p, chi).matrix)
print("class:", class_of_character(p, chi))

# %% [markdown]
# Inducing the one-dimensional torus module with the same K-eigenvalue
# gives a 3-dimensional module.  Both are absolutely irreducible and the
# intertwiner space between them is one-dimensional.

# %%
v = parabolic_induce(torus_module(p, [zeta(3)]), [], chi)
print("dim Ind =", v.dim, "| character agrees:", derived_character(v) == chi)
print("irreducible:", is_absolutely_irreducible(v), is_absolutely_irreducible(bv))
print("isomorphic:", are_isomorphic(v, bv))

# %% [markdown]
# The 27 monomials F^a K^c E^b with exponents below 3 act linearly
# independently on the sum of the three baby Vermas over one character.

# %%
print(spanning_rank(p, CentralCharacter.for_presentation(p, f_values=[1], k_values=[8])))
