# %% [markdown]
# # Wagner-Preston embeddings and the hat representations
#
# rho sends x to right translation by x on the ideal T x^-1; lambda is the
# left-handed version. With left-to-right composition, lambda reverses
# products, so its target is the opposite semigroup.

# %%
from amplekit import (
    brandt,
    check_left_ample_in,
    lambda_hat,
    rho_hat,
    trivial_group,
    wagner_preston_lambda,
    wagner_preston_rho,
)

B = brandt(trivial_group(), 2)
T = B.T
rho = wagner_preston_rho(T)
lam = wagner_preston_lambda(T)
print("rho mono:", rho.homomorphism_verdict().is_mono)
print("lambda mono:", lam.homomorphism_verdict().is_mono)
for x in T.elements:
    print(f"{T.name(x):>8}  rho = {rho.maps[x]}")

# %% [markdown]
# For a left ample subsemigroup S, rho_hat sends S into I_S injectively.
# eB with e = (1,1,1) is left ample but not right ample.

# %%
e = B.idempotent(1)
eB = sorted(x for x in T.elements if T.mul(e, x) == x)
print("eB =", [T.name(x) for x in eB])
print("left ample:", bool(check_left_ample_in(T, eB)))
r = rho_hat(T, eB)
print("rho_hat injective:", r.is_injective)
l = lambda_hat(T, eB)
print("lambda_hat injective:", l.is_injective, "collapsing pair:",
      [T.name(x) for x in l.collapsing_pair()])
