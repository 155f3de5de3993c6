# %% [markdown]
# # Partial bijections and symmetric inverse semigroups
#
# Partial bijections compose left to right: `compose(b, c)` applies `b` first.
# The empty map is the zero of I_X.

# %%
from math import comb, factorial

from amplekit import PartialBijection, compose, enumerate_symmetric_inverse, invert

b = PartialBijection.from_pairs(3, {0: 1, 1: 2})
c = PartialBijection.from_pairs(3, {1: 0, 2: 2})
print("b then c:", compose(b, c))
print("b b^-1 is the identity on dom b:", compose(b, invert(b)))

# %% [markdown]
# Sizes of I_m against sum_k C(m,k)^2 k!.

# %%
for m in range(5):
    I = enumerate_symmetric_inverse(m)
    formula = sum(comb(m, k) ** 2 * factorial(k) for k in range(m + 1))
    print(m, len(I), formula)

# %% [markdown]
# Every I_m comes with an abstract Cayley table, which is an inverse semigroup.

# %%
T = enumerate_symmetric_inverse(2).abstraction
print(T.order, "elements,", len(T.idempotents), "idempotents")
for x in T.elements:
    print(T.name(x), "inverse", T.name(T.inv(x)))
