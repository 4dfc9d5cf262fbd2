"""Walk through the 2x2 building blocks: bases, exponentials, embeddings.

AdS3 is the SL(2,R) group manifold, the three-sphere is SU(2); both are
handled as 2x2 matrices with exact closed-form exponentials.
"""

import numpy as np

from ads3s3 import (
    UnitSphereVector,
    UnitTimelikeVector,
    adjoint,
    ads_basis,
    boost,
    exp_algebra,
    inner,
    normalized_commutator,
    sphere_basis,
    to_embedding,
)

t0, t1, t2 = ads_basis()
s1, s2, s3 = sphere_basis()

print("== basis inner products (Minkowski vs Euclidean) ==")
print("  <t0,t0> =", inner(t0, t0), "  <t1,t1> =", inner(t1, t1))
print("  <s3,s3> =", inner(s3, s3))

print("\n== exponentials ==")
print("exp(0.5 t0) =\n", exp_algebra(t0, 0.5).matrix)
print("exp(0.5 t1) =\n", exp_algebra(t1, 0.5).matrix)
print("exp(0.5 s3) = diag", np.diag(exp_algebra(s3, 0.5).matrix))

print("\n== embedding coordinates ==")
g = exp_algebra(t1, 0.8)
print("Y of exp(0.8 t1):", to_embedding(g), " (cosh 0.8 =", np.cosh(0.8), ")")
h = exp_algebra(s3, 1.1)
print("X of exp(1.1 s3):", to_embedding(h))

print("\n== adjoint rotation of t1 by exp(theta t0) ==")
w = adjoint(exp_algebra(t0, 0.3), t1)
print("coefficients:", w.coeffs, " expected (0, cos 0.6, sin 0.6)")

print("\n== boosts between unit timelike directions ==")
lhat = UnitTimelikeVector(rapidity=0.0)           # t0 itself
rhat = UnitTimelikeVector(rapidity=0.9, angle=0.4)
nhat, gamma = normalized_commutator(lhat.element, rhat.element)
print("separation gamma:", gamma)
print("boost(gamma) moves r onto l:", boost(gamma, nhat, rhat.element).coeffs)
print("midpoint boost(gamma/2):", boost(0.5 * gamma, nhat, rhat.element).coeffs)

print("\n== sphere rotations work the same way ==")
u = UnitSphereVector(polar=0.7, azimuth=0.2)
v = UnitSphereVector(polar=1.6, azimuth=2.4)
nhat_s, gamma_s = normalized_commutator(u.element, v.element)
print("angle gamma_s:", gamma_s)
print("rotating v onto u:", boost(gamma_s, nhat_s, v.element).coeffs)
print("target u:        ", u.coeffs)
