# %% [markdown]
# # Classes, Jordan classes and sheets of SL_n
#
# Everything here is combinatorics on partitions: a class of SL_n is a set
# of eigenvalue tags with one Jordan partition per tag.

# %%
from qsheets.classes import (
    LeviComposition,
    class_dim,
    conjecture_ledger,
    enumerate_jordan_classes,
    enumerate_sheets,
    induction_presentations,
    ls_induce,
    parse_class,
    sheet_of,
    trivial_levi_class,
    unipotent_class,
)

# %% [markdown]
# Class dimensions come from centralizer dimensions.  The regular unipotent
# class of SL_3 has dimension 6, the subregular one 4.

# %%
for part in [(3,), (2, 1), (1, 1, 1)]:
    c = unipotent_class(part)
    print(f"{c}: dim {class_dim(c)}")

# %% [markdown]
# Induction from a block Levi adds partitions row by row.  The trivial class
# of the (2,1) Levi induces to the subregular class.

# %%
levi = LeviComposition((2, 1))
print(ls_induce(levi, trivial_levi_class(levi)))
torus = LeviComposition((1, 1, 1, 1))
print(ls_induce(torus, trivial_levi_class(torus)))

# %% [markdown]
# Every presentation of a class as an induced class, up to conjugacy.

# %%
for lv, lc in induction_presentations(parse_class("a:1 b:11")):
    print(lv, lc)

# %% [markdown]
# Sheets: one for each partition of n and each component of the centre of
# the Levi modulo its identity component.

# %%
for n in range(2, 6):
    sheets = enumerate_sheets(n)
    print(f"SL{n}: {len(sheets)} sheets, {len(enumerate_jordan_classes(n))} Jordan classes")
for s in enumerate_sheets(3):
    print(" ", s)

print(sheet_of(unipotent_class((2,))))

# %% [markdown]
# Evidence status for a few classes of SL_4 and SL_5.

# %%
for text in ["1:4", "1:22", "1:31", "1:1111", "a:111;b:11", "a:2 b:1 c:1 d:1"]:
    c = parse_class(text)
    print(f"{str(c):24s} {conjecture_ledger(c).value}")
