"""Physics ingredients of the gap-equation integrand.

Euclidean kinematics for the momentum pair (p, q) with k = q - p and
t = q + p, the Gaussian effective interaction, the vertex finite quotients
built from the dressing functions A and B, the six integrand terms, and the
vectorized per-row reduction used by the solver sweep.

The update actually iterated by the solver keeps the sigma/delta-A vertex
structures in both channels and the delta-B structure in the B channel
only: feeding the delta-B quotient back into the A channel makes plain
successive approximation divergent (an infrared-localized unstable mode
with spectral radius up to ~2.4 on production grids), so `row_rhs` sums
IA2 + IA3 for A' and IB1 + IB2 + IB3 for B'.  `integrand_terms` still
evaluates all six terms for validation and term-level work.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateMomentumError, KinematicSingularityError, NumericalFailureError, ParameterError

__all__ = [
    "ModelParams",
    "Kinematics",
    "IntegrandTerms",
    "kinematics",
    "effective_interaction",
    "finite_quotients",
    "integrand_terms",
    "row_rhs",
]


@dataclass
class ModelParams:
    """Physical and numerical parameters of a solver run.

    D (GeV^2) and omega (GeV) set the strength and width of the Gaussian
    interaction, m0 the current quark mass, z1 the (trivial) renormalization
    constant, xi the convergence accuracy.  N, m_rad, m_ang size the grids
    over [p2_min, p2_max]; relaxation = 1.0 means plain substitution.
    """

    D: float = 0.550
    omega: float = 0.678
    m0: float = 0.0
    z1: float = 1.0
    xi: float = 0.005
    N: int = 150
    m_rad: int = 100
    m_ang: int = 32
    p2_min: float = 1e-6
    p2_max: float = 1e4
    max_iterations: int = 500
    relaxation: float = 1.0

    def validate(self) -> None:
        checks = [
            ("D", self.D >= 0.0),
            ("omega", self.omega > 0.0),
            ("m0", self.m0 >= 0.0),
            ("xi", self.xi > 0.0),
            ("N", self.N >= 2),
            ("M_rad", self.m_rad >= 2),
            ("M_ang", self.m_ang >= 1),
            ("p2_min/p2_max", 0.0 < self.p2_min < self.p2_max),
            ("max_iterations", self.max_iterations >= 1),
            ("relaxation", 0.0 < self.relaxation <= 1.0),
        ]
        for key, ok in checks:
            if not ok:
                raise ParameterError(f"parameter out of range: {key}")

    @property
    def interaction_coeff(self) -> float:
        """Prefactor 8 pi^2 D / omega^4 of the Gaussian interaction."""
        return 8.0 * np.pi**2 * self.D / self.omega**4


@dataclass(frozen=True)
class Kinematics:
    """Scalar products for one (p2, q2, z) evaluation point, all in GeV^2."""

    p2: float
    q2: float
    z: float
    k2: float
    t2: float
    pq: float
    pt: float
    qt: float
    kp: float
    kq: float
    kt: float


def kinematics(p2: float, q2: float, z: float) -> Kinematics:
    """Euclidean dot products for momenta p, q with cos(angle) = z.

    With r = sqrt(p2*q2): p.q = r z, k = q - p, t = q + p.  The identities
    k.t = q2 - p2 and k2 + t2 = 2(p2 + q2) hold exactly.
    """
    if p2 <= 0.0 or q2 <= 0.0:
        raise ParameterError(f"momenta-squared must be positive, got p2={p2}, q2={q2}")
    r = np.sqrt(p2 * q2)
    rz = r * z
    return Kinematics(
        p2=p2, q2=q2, z=z,
        k2=p2 + q2 - 2.0 * rz,
        t2=p2 + q2 + 2.0 * rz,
        pq=rz,
        pt=p2 + rz,
        qt=q2 + rz,
        kp=rz - p2,
        kq=q2 - rz,
        kt=q2 - p2,
    )


def effective_interaction(k2, params: ModelParams):
    """Gaussian infrared interaction (8 pi^2 / omega^4) D exp(-k2/omega^2).

    Accepts scalars or arrays; strictly positive and strictly decreasing
    in k2.
    """
    return params.interaction_coeff * np.exp(-np.asarray(k2) / params.omega**2)


def finite_quotients(a_p: float, a_q: float, b_p: float, b_q: float, p2: float, q2: float):
    """Vertex average and difference quotients (sigmaA, deltaA, deltaB).

    sigmaA = (A(p2)+A(q2))/2, deltaA = (A(q2)-A(p2))/(q2-p2), deltaB
    likewise.  The grids guarantee p2 != q2 on every solver path; a
    degenerate pair is rejected rather than returning a non-finite value.
    """
    if p2 == q2:
        raise DegenerateMomentumError(f"difference quotient at coincident momenta p2=q2={p2}")
    inv = 1.0 / (q2 - p2)
    return 0.5 * (a_p + a_q), (a_q - a_p) * inv, (b_q - b_p) * inv


@dataclass(frozen=True)
class IntegrandTerms:
    """The six integrand terms of one (p, q, z) evaluation."""

    IA1: float
    IA2: float
    IA3: float
    IB1: float
    IB2: float
    IB3: float


def integrand_terms(kin: Kinematics, a_p: float, a_q: float, b_p: float, b_q: float) -> IntegrandTerms:
    """Evaluate all six integrand terms at one kinematic point.

    The delta/sigma quotients are built from the dressing values at the two
    momenta.  Every k-dependence is quadratic (k2, kp*kt, kq*kt, kq*kp,
    kt^2), so the terms are invariant under k -> -k.  With constant A and B
    the quotient-carrying terms vanish identically.
    """
    if kin.k2 <= 0.0:
        raise KinematicSingularityError(f"k2 must be positive, got {kin.k2}")
    sigma_a, delta_a, delta_b = finite_quotients(a_p, a_q, b_p, b_q, kin.p2, kin.q2)
    k2 = kin.k2
    ia1 = -b_q * (k2 * kin.pt - kin.kp * kin.kt) / k2 * delta_b
    ia2 = -(a_q / 2.0) * (kin.p2 * kin.qt * k2 + kin.q2 * kin.pt * k2
                          - kin.q2 * kin.kp * kin.kt - kin.p2 * kin.kq * kin.kt) / k2 * delta_a
    ia3 = a_q * (k2 * kin.pq + 2.0 * kin.kq * kin.kp) / k2 * sigma_a
    ib1 = -a_q * (kin.qt * k2 - kin.kq * kin.kt) / k2 * delta_b
    ib2 = 3.0 * b_q * sigma_a
    ib3 = b_q * (k2 * kin.t2 - kin.kt * kin.kt) / (2.0 * k2) * delta_a
    return IntegrandTerms(IA1=ia1, IA2=ia2, IA3=ia3, IB1=ib1, IB2=ib2, IB3=ib3)


def row_rhs(p2: float, a_p: float, b_p: float, a_q: np.ndarray, b_q: np.ndarray,
            grid, params: ModelParams, row: int | None = None) -> tuple[float, float]:
    """Right-hand sides (A', B') of the discrete system for one external node.

    Sums the quadrature over all (radial, angular) nodes, vectorized over the
    full (m_rad, m_ang) block.  a_q/b_q are the dressing functions
    interpolated at the internal nodes; the internal propagator denominator
    is q2 A(q2)^2 + B(q2)^2.  A' sums IA2 + IA3 (see module docstring for
    why IA1 is excluded from the update), B' sums IB1 + IB2 + IB3.
    """
    q2 = grid.q2_int
    rz = np.sqrt(p2) * grid.sz                      # (M, K) = sqrt(p2 q2) z
    qq = q2[:, None]
    psum = (p2 + q2)[:, None]
    k2 = psum - 2.0 * rz
    t2 = psum + 2.0 * rz
    pq = rz
    pt = p2 + rz
    qt = qq + rz
    kp = rz - p2
    kq = qq - rz
    kt = (q2 - p2)[:, None]

    g = params.interaction_coeff * np.exp(-k2 / (params.omega * params.omega))
    inv = 1.0 / (q2 - p2)
    sigma_a = (0.5 * (a_p + a_q))[:, None]
    delta_a = ((a_q - a_p) * inv)[:, None]
    delta_b = ((b_q - b_p) * inv)[:, None]
    den = (q2 * a_q * a_q + b_q * b_q)[:, None]
    aq = a_q[:, None]
    bq = b_q[:, None]

    ia2 = -(aq / 2.0) * (p2 * qt * k2 + qq * pt * k2 - qq * kp * kt - p2 * kq * kt) / k2 * delta_a
    ia3 = aq * (k2 * pq + 2.0 * kq * kp) / k2 * sigma_a
    ib1 = -aq * (qt * k2 - kq * kt) / k2 * delta_b
    ib2 = 3.0 * bq * sigma_a
    ib3 = bq * (k2 * t2 - kt * kt) / (2.0 * k2) * delta_a

    core = grid.weight_jk * g / (k2 * den)
    a_new = params.z1 + float(np.sum(core / p2 * (ia2 + ia3)))
    b_new = params.m0 * params.z1 + float(np.sum(core * (ib1 + ib2 + ib3)))
    if not (np.isfinite(a_new) and np.isfinite(b_new)):
        bad = ~np.isfinite(core * (ia2 + ia3 + ib1 + ib2 + ib3))
        j, k = (int(v) for v in np.argwhere(bad)[0]) if bad.any() else (-1, -1)
        raise NumericalFailureError(
            f"non-finite integrand in sweep at row={row}, radial={j}, angular={k}",
            row=row, radial=j, angular=k,
        )
    return a_new, b_new
