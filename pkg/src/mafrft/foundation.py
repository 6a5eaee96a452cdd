"""DFT matrices, reversal operators and the FFT engine.

Two DFT conventions are supported throughout the library:

* ``"standard"``: the usual unitary DFT with entries ``w**(n*k) / sqrt(N)``.
* ``"centered"``: indices shifted by ``(N-1)/2`` in both rows and columns,
  so the transform probes frequencies symmetric about zero.

The FFT here is deliberately home-grown (radix-2 iterative for power-of-two
lengths, direct O(N^2) evaluation otherwise) so that tests can check it
against the matrix product and so that row-transform invocations can be
counted exactly.
"""

import numpy as np

from .counters import counters

VARIANTS = ("standard", "centered")


def check_variant(variant: str) -> str:
    if variant not in VARIANTS:
        raise ValueError(f"unknown variant {variant!r}, expected one of {VARIANTS}")
    return variant


def _center(n: int, variant: str) -> float:
    return 0.0 if variant == "standard" else (n - 1) / 2


def dft_matrix(n: int, variant: str = "standard") -> np.ndarray:
    """Unitary N x N DFT matrix for the given convention.

    Standard entries are ``w**(n*k) / sqrt(N)`` with ``w = exp(-2j*pi/N)``;
    the centered convention shifts both indices by ``(N-1)/2``.
    """
    check_variant(variant)
    if n < 1:
        raise ValueError("n must be >= 1")
    idx = np.arange(n) - _center(n, variant)
    return np.exp(-2j * np.pi * np.outer(idx, idx) / n) / np.sqrt(n)


def reversal_permutation(n: int, variant: str = "standard") -> np.ndarray:
    """Index permutation of the reversal operator (the DFT squared).

    Centered: ``k -> N-1-k`` (flip about the middle). Standard: ``0 -> 0``
    and ``k -> N-k`` (flip about index 0, wrapping modulo N).
    """
    check_variant(variant)
    if variant == "centered":
        return (n - 1) - np.arange(n)
    return (-np.arange(n)) % n


def reversal_matrix(n: int, variant: str = "standard") -> np.ndarray:
    """Permutation matrix of :func:`reversal_permutation` (an involution)."""
    perm = reversal_permutation(n, variant)
    P = np.zeros((n, n))
    P[perm, np.arange(n)] = 1.0
    return P


def _bit_reverse_indices(n: int) -> np.ndarray:
    stages = n.bit_length() - 1
    idx = np.arange(n)
    rev = np.zeros(n, dtype=np.int64)
    for _ in range(stages):
        rev = (rev << 1) | (idx & 1)
        idx >>= 1
    return rev


def fft_rows_unnormalized(z: np.ndarray) -> np.ndarray:
    """Unnormalized forward DFT of each row of ``z``.

    Row ``m`` of the result is ``sum_k z[m,k] * exp(-2j*pi*r*k/N)``. Counts
    one FFT invocation per row. Radix-2 iterative for power-of-two row
    lengths, direct matrix evaluation otherwise.
    """
    z = np.atleast_2d(np.asarray(z, dtype=complex))
    m, n = z.shape
    counters.fft_calls += m
    if n == 1:
        return z.copy()
    if n & (n - 1):  # not a power of two
        idx = np.arange(n)
        kernel = np.exp(-2j * np.pi * np.outer(idx, idx) / n)
        return z @ kernel
    out = z[:, _bit_reverse_indices(n)].copy()
    half = 1
    while half < n:
        tw = np.exp(-1j * np.pi * np.arange(half) / half)
        blocks = out.reshape(m, -1, 2 * half)
        t = blocks[:, :, half:] * tw
        blocks[:, :, half:] = blocks[:, :, :half] - t
        blocks[:, :, :half] += t
        half *= 2
    return out


def fft_unnormalized(v: np.ndarray) -> np.ndarray:
    """Unnormalized forward DFT of a 1-D signal (matches sqrt(N) * W_s)."""
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.size < 1:
        raise ValueError("expected a 1-D signal of length >= 1")
    return fft_rows_unnormalized(v[None, :])[0]


def ifft_unnormalized(v: np.ndarray) -> np.ndarray:
    """Unnormalized inverse DFT: ``y[k] = sum_r v[r] * exp(+2j*pi*r*k/N)``.

    Composing with :func:`fft_unnormalized` yields N times the input.
    """
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.size < 1:
        raise ValueError("expected a 1-D signal of length >= 1")
    return np.conj(fft_rows_unnormalized(np.conj(v)[None, :])[0])
