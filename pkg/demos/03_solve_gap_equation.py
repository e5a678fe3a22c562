"""
Solving the gap equation
========================

Iterate the coupled system for the dressing functions A(p2), B(p2) from
the flat start A = B = 1 at the reference parameters (D = 0.550 GeV^2,
omega = 0.678 GeV, chiral limit), and look at the converged solution and
its iteration history.
"""
import numpy as np

from dsegap import ModelParams, VARIANTS, solve

params = ModelParams()  # reference configuration: N=150, M_rad=100, xi=0.005
solution = solve(params, VARIANTS["indexed-seq"])

print(f"converged: {solution.converged} in {solution.iterations} iterations")
print(f"A(p2_min) = {solution.A[0]:.4f}    B(p2_min) = {solution.B[0]:.4f} GeV")
print(f"A(p2_max) = {solution.A[-1]:.6f}  B(p2_max) = {solution.B[-1]:.2e} GeV")

# a nonzero B in the chiral limit (m0 = 0) is dynamical mass generation;
# the infrared mass function M = B/A sets the constituent-quark scale
mass_ir = solution.B[0] / solution.A[0]
print(f"infrared mass function M(p2_min) = {mass_ir:.3f} GeV")

# the history carries the update norms and two probe momenta per iteration
print("\niter   max|dA|     max|dB|     A(logp=-2.5)  B(logp=-2.5)")
for rec in solution.history:
    da = "   --    " if np.isnan(rec.max_delta_a) else f"{rec.max_delta_a:9.2e}"
    db = "   --    " if np.isnan(rec.max_delta_b) else f"{rec.max_delta_b:9.2e}"
    print(f"{rec.iteration:4d}  {da}  {db}   {rec.probe_a[0]:10.4f}  {rec.probe_b[0]:10.4f}")

# a few points of the solution along the grid
print("\nlog10(p2)      A           B")
for i in range(0, params.N, 25):
    print(f"{np.log10(solution.grid.p2_ext[i]):8.2f}  {solution.A[i]:9.4f}  {solution.B[i]:9.4f}")
