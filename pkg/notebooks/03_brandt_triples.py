# %% [markdown]
# # Triple subsemigroups of Brandt semigroups
#
# For S = (rows x H x cols) u {0} the group-only tests (identity in H for
# ampleness, H a subgroup for richness) are not the whole story: the
# one-sided idempotents x x^-1 = (i,1,i) land in S only when rows <= cols.

# %%
from amplekit import brandt, check_triple_ample, check_triple_rich, cyclic_group, trivial_group

B = brandt(trivial_group(), 2)
v = check_triple_ample(B, [1, 2], ["1"], [1], "left")
print("({1,2} x 1 x {1}) u {0}, left ample:", v.definitional.holds,
      "| 1 in H:", v.structural, "| rows <= cols:", v.index_condition)
print("counterexample:", [B.name(x) for x in v.definitional.counterexample])

# %% [markdown]
# With the containment the structural test matches the definition on every
# case; the functions raise if it ever does not.

# %%
B3 = brandt(cyclic_group(3), 2)
for rows, cols in [((1,), (1, 2)), ((1, 2), (1,)), ((1, 2), (1, 2))]:
    for side in ("left", "right"):
        a = check_triple_ample(B3, rows, ["0"], cols, side)
        r = check_triple_rich(B3, rows, ["0"], cols, side)
        print(rows, cols, side, "ample", a.definitional.holds, "rich", r.definitional.holds)
