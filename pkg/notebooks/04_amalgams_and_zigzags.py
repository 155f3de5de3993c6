# %% [markdown]
# # Extension consistency, amalgams and zigzags
#
# Given an isomorphism psi between subsemigroups, the extension check decides
# whether psi extends to the inverse hulls along all words over S u S'.

# %%
from amplekit import (
    ZigzagCertificate,
    amalgam_report,
    brandt,
    extension_check,
    hat_amalgam,
    inverse_hull,
    klein_four,
    verify_zigzag,
)

B = brandt(klein_four(), 2)
T = B.T
S = sorted(T.elements)
U, T1, phi1, T2, phi2 = hat_amalgam(T, S)
rep = amalgam_report(U, T1, phi1, T2, phi2)
print("hat amalgam consistent:", rep.extension.consistent,
      "isomorphism:", rep.extension.is_isomorphism)

# %% [markdown]
# A subsemigroup whose hull is bigger than itself, with the identity psi.

# %%
e = B.idempotent(1)
eB = sorted(x for x in T.elements if T.mul(e, x) == x)
hull = inverse_hull(T, eB)
print(len(eB), "elements in eB,", len(hull.members), "in its hull")
v = extension_check(T, eB, T, eB, {s: s for s in eB})
print("identity extends:", v.consistent)

# %% [markdown]
# A zigzag certificate of length 1: d = a0 y1 = x1 a1 y1 = x1 a2.

# %%
n = T.base.index
cert = ZigzagCertificate(n("(1,1,2)"), (n("(1,1,1)"), n("(1,1,1)"), n("(1,1,2)")),
                         (n("(1,1,1)"),), (n("(1,1,2)"),))
print(cert.chain())
print(verify_zigzag(T, eB, cert))
