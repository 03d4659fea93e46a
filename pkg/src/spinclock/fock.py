"""Truncated two-mode Fock space and the physical number sector.

The physical subspace at total quanta m' is spanned by |n, m'-n> for
n = 0..m' (dimension m'+1 = 2j+1), ordered by ascending n.  Spin
operators are the Schwinger bilinears restricted to that block:

    S1 = (a'b + ab')/2,  S2 = (a'b - ab')/2i,  S3 = (a'a - b'b)/2.
"""

import numpy as np

from .errors import NullPhysicalSubspaceError


def physical_dimension(m_prime: int) -> int:
    return m_prime + 1


def constraint_eigencheck(E: float, omega: float = 1.0, hbar: float = 1.0,
                          tol: float = 1e-9) -> int:
    """Select the number sector m' from the energy, E' = E/(omega hbar) - 1.

    Raises NullPhysicalSubspaceError (carrying the residual) when E' is
    not within ``tol`` of an integer, in which case the projection of any
    state is null.
    """
    if E <= 0:
        raise ValueError("E must be positive")
    e_prime = E / (omega * hbar) - 1.0
    m_prime = round(e_prime)
    residual = abs(e_prime - m_prime)
    if residual >= tol or m_prime < 0:
        raise NullPhysicalSubspaceError(residual)
    return m_prime


def raising_in_sector(m_prime: int) -> np.ndarray:
    """Matrix of a'b on the m' sector (maps the sector to itself).

    a'b |n, m'-n> = sqrt((n+1)(m'-n)) |n+1, m'-n-1>.
    """
    dim = physical_dimension(m_prime)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    n = np.arange(m_prime)
    mat[n + 1, n] = np.sqrt((n + 1.0) * (m_prime - n))
    return mat


def spin_operators(m_prime: int) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Schwinger spin matrices (S1, S2, S3) on the m' sector."""
    ab = raising_in_sector(m_prime)  # a'b
    ba = ab.conj().T  # ab'
    s1 = 0.5 * (ab + ba)
    s2 = (ab - ba) / 2j
    n = np.arange(m_prime + 1)
    s3 = np.diag(n - m_prime / 2.0).astype(np.complex128)
    return s1, s2, s3


def casimir(m_prime: int) -> np.ndarray:
    """S1^2 + S2^2 + S3^2; equals j(j+1) I with j = m'/2."""
    s1, s2, s3 = spin_operators(m_prime)
    return s1 @ s1 + s2 @ s2 + s3 @ s3


def apply_full_ladder(amplitudes: np.ndarray, m_prime: int, which: str
                      ) -> tuple[np.ndarray, int]:
    """Apply a single-mode ladder operator to a physical-sector state.

    Returns (amplitudes, sector) of the image, which lives in the m'+-1
    sector: the full ladder operators do not preserve the physical
    subspace.
    """
    amplitudes = np.asarray(amplitudes, dtype=np.complex128)
    if amplitudes.shape != (m_prime + 1,):
        raise ValueError("state dimension does not match sector")
    n = np.arange(m_prime + 1)
    if which == "a":
        # a |n, m'-n> = sqrt(n) |n-1, m'-n>, sector m'-1, index n-1
        out = np.zeros(max(m_prime, 1), dtype=np.complex128)
        if m_prime == 0:
            return np.zeros(1, dtype=np.complex128), 0
        out[: m_prime] = np.sqrt(n[1:]) * amplitudes[1:]
        return out, m_prime - 1
    if which == "a+":
        # a' |n, m'-n> = sqrt(n+1) |n+1, m'-n>, sector m'+1, index n+1
        out = np.zeros(m_prime + 2, dtype=np.complex128)
        out[1:] = np.sqrt(n + 1.0) * amplitudes
        return out, m_prime + 1
    if which == "b":
        # b |n, m'-n> = sqrt(m'-n) |n, m'-n-1>, sector m'-1, index n
        if m_prime == 0:
            return np.zeros(1, dtype=np.complex128), 0
        out = np.sqrt(m_prime - n[:-1]) * amplitudes[:-1]
        return out.astype(np.complex128), m_prime - 1
    if which == "b+":
        # b' |n, m'-n> = sqrt(m'-n+1) |n, m'-n+1>, sector m'+1, index n
        out = np.zeros(m_prime + 2, dtype=np.complex128)
        out[: m_prime + 1] = np.sqrt(m_prime - n + 1.0) * amplitudes
        return out, m_prime + 1
    raise ValueError(f"unknown ladder operator {which!r}")


def number_operator(m_prime: int) -> np.ndarray:
    """a'a + b'b on the sector: m' times the identity (structural)."""
    return m_prime * np.eye(m_prime + 1, dtype=np.complex128)
