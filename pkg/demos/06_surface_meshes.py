"""Export the tube / torus surfaces traced by a one-winding solution.

The AdS projection sweeps a tube around the center worldline, the sphere
projection a torus; stereographic projection from X4 = -1 makes the torus
directly plottable in 3d.  Writes mesh CSVs readable by any plotting tool.
"""

import numpy as np

from ads3s3 import embedding_surface, family_solution

sol = family_solution(5 / 3, 5 / 4, 1)
taus = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
sigmas = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
y, x = embedding_surface(sol, taus, sigmas)

print("mesh shapes:", y.shape, x.shape)
print("max |Y.Y + 1| =", np.max(np.abs(-y[..., 0] ** 2 - y[..., 1] ** 2
                                       + y[..., 2] ** 2 + y[..., 3] ** 2 + 1)))
print("max |X.X - 1| =", np.max(np.abs(np.einsum("...i,...i->...", x, x) - 1)))

# tube radius in AdS: sinh(theta) around the center circle
radius = np.hypot(y[..., 2], y[..., 3])
print("AdS tube radius (constant):", radius.min(), "-", radius.max())

# torus radii on the sphere: sin(theta_s) and cos(theta_s)
r12 = np.hypot(x[..., 0], x[..., 1])
r34 = np.hypot(x[..., 2], x[..., 3])
print("torus radii:", (r12.mean(), r34.mean()))

# stereographic projection from the pole X4 = -1 for 3d plotting
proj = x[..., :3] / (1.0 + x[..., 3])[..., None]

header_y = "tau,sigma,Y0p,Y0,Y1,Y2"
header_p = "tau,sigma,P1,P2,P3"
tt, ss = np.meshgrid(taus, sigmas, indexing="ij")
flat = np.column_stack([tt.ravel(), ss.ravel()])
np.savetxt("mesh_ads.csv", np.column_stack([flat, y.reshape(-1, 4)]),
           delimiter=",", header=header_y, comments="", fmt="%.17g")
np.savetxt("mesh_sphere_proj.csv", np.column_stack([flat, proj.reshape(-1, 3)]),
           delimiter=",", header=header_p, comments="", fmt="%.17g")
print("wrote mesh_ads.csv and mesh_sphere_proj.csv")
print("(the command line `ads3s3 sample --f 1.6667 --b 1.25 --n 1 --out mesh.csv`")
print(" exports the combined mesh with both coordinate sets in one file)")
