"""
Quadrature rules and the interleaved momentum grid
==================================================

Build the two quadrature rules, check them against closed-form integrals,
then assemble the production momentum grid and look at how internal nodes
interleave with the external ones.
"""
import numpy as np

from dsegap import build_grid, gauss_chebyshev2, gauss_legendre

# Gauss-Legendre: an n-point rule integrates polynomials to degree 2n-1
rule = gauss_legendre(5, -1.0, 1.0)
print("GL(5) nodes:", np.round(rule.nodes, 6))
print("integral of x^8 over [-1,1]:", rule.integrate(rule.nodes**8), "(exact 2/9 =", 2 / 9, ")")

# Gauss-Chebyshev (second kind) carries the sqrt(1-z^2) angular weight
ang = gauss_chebyshev2(32)
print("\nGC2(32) weight sum:", ang.integrate(np.ones(32)), "(exact pi/2 =", np.pi / 2, ")")

# The momentum grid: external p2 log-uniform, internal q2 from a GL rule in
# s = ln q2, plus the precomputed bracket index of every internal node.
grid = build_grid(150, 100, 32, 1e-6, 1e4)
print("\ngrid sizes: N =", grid.n_ext, " M_rad =", grid.m_rad, " M_ang =", grid.m_ang)
print("first external nodes:", np.format_float_scientific(grid.p2_ext[0], 3),
      np.format_float_scientific(grid.p2_ext[1], 3))
print("first internal nodes:", np.format_float_scientific(grid.q2_int[0], 3),
      np.format_float_scientific(grid.q2_int[1], 3))
print("bracket indices of the first 10 internal nodes:", grid.bracket_idx[:10])

# no internal node coincides with an external one (this keeps the
# 1/(q2 - p2) difference quotients finite everywhere)
rel = np.abs(grid.q2_int[:, None] - grid.p2_ext[None, :]) / np.maximum(
    grid.q2_int[:, None], grid.p2_ext[None, :])
print("minimum relative separation between the grids:", float(rel.min()))

# the reduced 4-volume measure reproduces the closed-form Gaussian integral
val = float(np.sum(grid.radial_measure * np.exp(-grid.q2_int)) * np.sum(grid.z_weights))
print("\nmeasure check, integral of exp(-q2):", val, " exact:", 1 / (16 * np.pi**2))
