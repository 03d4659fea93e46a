"""Symbol calculus on the reduced phase space.

Upper symbols are coherent-state expectation values.  Lower symbols are
black-box functions o(xi, r, theta) on the chart coordinates; projecting
one integrates out the constraint direction r (against the normalized
radial weight) and averages over the gauge angle theta, leaving a reduced
symbol o'(xi).  Reduced symbols define operators through their diagonal
coherent-state representation.
"""

import math
from typing import Callable

import numpy as np

from . import kernels
from .coherent import su2_coherent, _check_two_j
from .grids import RadialGrid, SphereGrid, gauge_grid, radial_grid, sphere_grid

# a full lower symbol maps (xi, r, theta) -> value
FullLowerSymbol = Callable[[complex, float, float], float]
# a reduced symbol maps xi -> value
ReducedLowerSymbol = Callable[[complex], float]


def upper_symbol(op: np.ndarray, xi: complex, j: float | None = None) -> complex:
    """Expectation value <xi| op |xi> on the sector of matching dimension."""
    dim = op.shape[0]
    if j is None:
        j = (dim - 1) / 2.0
    if dim != _check_two_j(j) + 1:
        raise ValueError("operator dimension does not match 2j+1")
    v = su2_coherent(xi, j)
    return complex(v.conj() @ (op @ v))


def spin_symbols_closed_form(xi: complex, j: float) -> tuple[float, float, float]:
    """Closed-form upper symbols (s1, s2, s3) of the spin operators.

    The point (s1, s2, s3) lies on the sphere of radius j; s3 = -j at
    xi = 0 (all quanta in oscillator 2).  The sign of s2 is forced: with
    amplitudes proportional to xi^n, s3(0) = -j and the cyclic algebra
    [S1, S2] = iS3, the 2-component must be -2j Im(xi)/(1+|xi|^2) (the
    triple with +Im(xi) is a reflection of the expectation vector and
    would anti-commute the algebra).
    """
    t = abs(xi) ** 2
    denom = 1.0 + t
    s1 = 2.0 * j * xi.real / denom
    s2 = -2.0 * j * xi.imag / denom
    s3 = -j * (1.0 - t) / denom
    return s1, s2, s3


def project_lower_symbol(sym: FullLowerSymbol, m: int,
                         rgrid: RadialGrid | None = None,
                         n_theta: int = 256) -> ReducedLowerSymbol:
    """Reduce a full lower symbol to the physical phase space.

    o'(xi) = sum_i w_i * mean_theta sym(xi, r_i, theta) with the
    normalized radial rule; theta averaging uses a uniform grid and exact
    (fsum) accumulation so that gauge-odd symbols cancel to roundoff.
    """
    if rgrid is None or rgrid.m != m:
        rgrid = radial_grid(m)
    thetas = gauge_grid(n_theta)

    def reduced(xi: complex) -> float:
        total = 0.0
        for r, w in zip(rgrid.nodes, rgrid.weights):
            total += w * math.fsum(sym(xi, r, th) for th in thetas) / n_theta
        return total

    return reduced


def reconstruct_operator(sym: ReducedLowerSymbol, j: float,
                         grid: SphereGrid | None = None) -> np.ndarray:
    """Matrix of the diagonal representation ((2j+1)/pi) int sym |xi><xi| dmu."""
    two_j = _check_two_j(j)
    if grid is None:
        grid = sphere_grid(j)
    vecs = kernels.coherent_amplitudes(grid.xi, two_j)
    vals = np.array([sym(x) for x in grid.xi], dtype=np.complex128)
    return ((two_j + 1) / np.pi) * kernels.accumulate_projectors(vecs, grid.weights * vals)


def q2_position_symbol(xi: complex, r: float, theta: float,
                       omega: float = 1.0, hbar: float = 1.0) -> float:
    """Lower symbol of the position of oscillator 2 in chart coordinates.

    (beta + conj(beta))/sqrt(2) = sqrt(2)|beta| cos(theta) with
    |beta| = sqrt(r/(1+|xi|^2)); scaled by sqrt(hbar/omega).
    """
    mag = math.sqrt(hbar / omega) * math.sqrt(2.0 * r / (1.0 + abs(xi) ** 2))
    return mag * math.cos(theta)


def q1_position_symbol(xi: complex, r: float, theta: float,
                       omega: float = 1.0, hbar: float = 1.0) -> float:
    """Lower symbol of the position of oscillator 1: sqrt(2)|alpha| cos(theta + arg xi)."""
    mag = math.sqrt(hbar / omega) * abs(xi) * math.sqrt(2.0 * r / (1.0 + abs(xi) ** 2))
    return mag * math.cos(theta + math.atan2(xi.imag, xi.real))
