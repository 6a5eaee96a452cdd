"""Single-order fractional transform from an eigenbasis.

The transform of fractional order ``a`` is the matrix power W**a, realized
through the eigendecomposition: eigenvalue ``(-1j)**ell`` is raised to the
power ``a`` as ``exp(-1j * pi/2 * ell * a)``, with no other branch choice.
Order 0 is the identity, 1 the forward DFT, 2 the reversal operator, 3 the
inverse DFT; the whole family has period 4 in ``a`` and is angle-additive.

This module is the brute-force O(N^2)-per-order reference that the
multiangle module is checked against.
"""

import numpy as np

from .eigenbasis import EigenBasis
from .exceptions import LengthMismatch


def _eigenvalue_powers(basis: EigenBasis, a: float) -> np.ndarray:
    return np.exp(-1j * (np.pi / 2) * basis.exponents * a)


def frft_matrix(basis: EigenBasis, a: float) -> np.ndarray:
    """Materialize the N x N fractional transform matrix of order ``a``.

    Intended for tests and small-N inspection; use :func:`frft_apply` to
    transform signals.
    """
    lam = _eigenvalue_powers(basis, a)
    return (basis.vectors * lam) @ basis.vectors.T


def frft_apply(basis: EigenBasis, a: float, x: np.ndarray) -> np.ndarray:
    """Apply the order-``a`` transform to a signal without forming the matrix."""
    x = np.asarray(x, dtype=complex)
    if x.shape != (basis.n,):
        raise LengthMismatch(f"signal length {x.shape} != basis size {basis.n}")
    return basis.vectors @ (_eigenvalue_powers(basis, a) * (basis.vectors.T @ x))
