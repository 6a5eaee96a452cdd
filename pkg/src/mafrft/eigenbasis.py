"""Orthonormal real DFT/CDFT eigenvector bases.

A basis pairs a real orthonormal matrix ``vectors`` (columns are DFT
eigenvectors resembling Hermite-Gaussian functions) with an integer vector
``exponents`` such that column ``k`` has DFT eigenvalue ``(-1j)**exponents[k]``.
The eigenvectors come from a real symmetric matrix that commutes with the
DFT (tridiagonal plus wraparound corners); its non-degenerate eigenvectors
are automatically DFT eigenvectors, ordered by zero-crossing count.

Construction splits the problem into the reversal-even and reversal-odd
subspaces first, which makes every column exactly symmetric or antisymmetric
under the reversal operator and sidesteps degenerate eigenvalue pairs of the
commuting matrix (which only occur across the two symmetry classes).
"""

import struct
from dataclasses import dataclass

import numpy as np

from .exceptions import CommutationError, DegenerateBasis, EigenMismatch
from .foundation import check_variant, dft_matrix, reversal_permutation

CACHE_MAGIC = b"FRFTEB1"
_VARIANT_CODE = {"standard": 0, "centered": 1}
_VARIANT_NAME = {v: k for k, v in _VARIANT_CODE.items()}


@dataclass(frozen=True)
class EigenBasis:
    """Reusable eigendecomposition of a DFT matrix.

    vectors: real N x N orthonormal matrix, columns are eigenvectors.
    exponents: length-N integer vector; column k has eigenvalue
        (-1j)**exponents[k] under the DFT of the given variant.
    """

    variant: str
    n: int
    vectors: np.ndarray
    exponents: np.ndarray


@dataclass(frozen=True)
class ValidationReport:
    orthonormality_residual: float
    eigen_residual: float
    symmetry_residual: float
    multiplicities: tuple
    multiplicities_expected: tuple

    @property
    def passed(self) -> bool:
        return (
            self.orthonormality_residual < 1e-10
            and self.eigen_residual < 1e-8
            and self.symmetry_residual < 1e-8
            and self.multiplicities == self.multiplicities_expected
        )


def index_vector(n: int, variant: str = "standard") -> np.ndarray:
    """Eigenvalue exponents in ascending order.

    Centered, and standard with odd N: ``0..N-1``. Standard with even N:
    ``0, 1, ..., N-2, N`` (the exponent N-1 never occurs).
    """
    check_variant(variant)
    if n < 1:
        raise ValueError("n must be >= 1")
    if variant == "standard" and n % 2 == 0:
        return np.concatenate([np.arange(n - 1), [n]])
    return np.arange(n)


def expected_multiplicities(n: int, variant: str = "standard") -> tuple:
    """Eigenvalue multiplicities (counts for 1, -j, -1, j) as functions of
    ``N = 4m + r``."""
    check_variant(variant)
    if n < 1:
        raise ValueError("n must be >= 1")
    m, r = divmod(n, 4)
    if variant == "standard":
        table = {
            0: (m + 1, m, m, m - 1),
            1: (m + 1, m, m, m),
            2: (m + 1, m, m + 1, m),
            3: (m + 1, m + 1, m + 1, m),
        }
    else:
        table = {
            0: (m, m, m, m),
            1: (m + 1, m, m, m),
            2: (m + 1, m + 1, m, m),
            3: (m + 1, m + 1, m + 1, m),
        }
    return table[r]


def commuting_matrix(n: int, variant: str = "standard") -> np.ndarray:
    """Real symmetric matrix commuting with the DFT of the given variant.

    Tridiagonal with unit off-diagonals plus wraparound corner entries and
    diagonal ``2*cos(2*pi*(k - c)/N) - 4`` where ``c`` is the index center
    of the variant. For the centered variant with even N the corner entries
    are -1; otherwise +1. Raises :class:`CommutationError` if the
    commutation residual exceeds 1e-8 (an implementation bug, not bad data).
    """
    check_variant(variant)
    if n < 4:
        raise ValueError("n must be >= 4")
    k = np.arange(n)
    c = 0.0 if variant == "standard" else (n - 1) / 2
    S = np.zeros((n, n))
    S[k, k] = 2 * np.cos(2 * np.pi * (k - c) / n) - 4
    S[k[:-1], k[:-1] + 1] = 1.0
    S[k[:-1] + 1, k[:-1]] = 1.0
    corner = -1.0 if (variant == "centered" and n % 2 == 0) else 1.0
    S[0, n - 1] = corner
    S[n - 1, 0] = corner
    W = dft_matrix(n, variant)
    residual = np.abs(S @ W - W @ S).max()
    if residual > 1e-8:
        raise CommutationError(
            f"commutation residual {residual:g} for n={n}, variant={variant}"
        )
    return S


def _symmetry_class_basis(n: int, perm: np.ndarray, sign: int) -> np.ndarray:
    """Orthonormal basis of the reversal-even (sign=+1) or -odd (sign=-1)
    subspace, as columns."""
    cols = []
    for i in range(n):
        j = perm[i]
        if i < j:
            v = np.zeros(n)
            v[i] = 1 / np.sqrt(2)
            v[j] = sign / np.sqrt(2)
            cols.append(v)
        elif i == j and sign == 1:
            v = np.zeros(n)
            v[i] = 1.0
            cols.append(v)
    return np.stack(cols, axis=1)


def build_eigenbasis(n: int, variant: str = "standard") -> EigenBasis:
    """Construct an orthonormal DFT eigenbasis with assigned exponents.

    Eigenvectors of the commuting matrix, restricted to each reversal
    symmetry class and sorted by descending commuting-matrix eigenvalue
    (ascending zero-crossing count), interleaved so that the exponent
    vector comes out ascending. Signs are fixed so the first
    largest-magnitude entry of each column is positive.
    """
    S = commuting_matrix(n, variant)
    exponents = index_vector(n, variant)
    perm = reversal_permutation(n, variant)
    V = np.zeros((n, n))
    for sign, parity in ((1, 0), (-1, 1)):
        B = _symmetry_class_basis(n, perm, sign)
        _, U = np.linalg.eigh(B.T @ S @ B)
        vecs = B @ U[:, ::-1]  # descending eigenvalue order
        slots = np.flatnonzero(exponents % 2 == parity)
        if len(slots) != vecs.shape[1]:
            raise DegenerateBasis(
                f"symmetry class sizes do not match exponent parities (n={n})"
            )
        V[:, slots] = vecs
    for k in range(n):
        lead = np.argmax(np.abs(V[:, k]))
        if V[lead, k] < 0:
            V[:, k] = -V[:, k]

    orth = np.abs(V.T @ V - np.eye(n)).max()
    if orth > 1e-8:
        raise DegenerateBasis(f"orthonormality residual {orth:g} for n={n}")
    W = dft_matrix(n, variant)
    eig = np.abs(W @ V - V * (-1j) ** exponents).max()
    if eig > 1e-8:
        raise EigenMismatch(f"eigen residual {eig:g} for n={n}, variant={variant}")
    V.setflags(write=False)
    exponents.setflags(write=False)
    return EigenBasis(variant=variant, n=n, vectors=V, exponents=exponents)


def validate_eigenbasis(basis: EigenBasis) -> ValidationReport:
    """Self-check residuals and eigenvalue multiplicity counts."""
    n, V, ell = basis.n, basis.vectors, basis.exponents
    W = dft_matrix(n, basis.variant)
    perm = reversal_permutation(n, basis.variant)
    orth = float(np.abs(V.T @ V - np.eye(n)).max())
    eig = float(np.abs(W @ V - V * (-1j) ** ell).max())
    sym = float(np.abs(V[perm, :] - V * (-1.0) ** ell).max())
    counts = tuple(int(np.sum(ell % 4 == q)) for q in range(4))
    return ValidationReport(
        orthonormality_residual=orth,
        eigen_residual=eig,
        symmetry_residual=sym,
        multiplicities=counts,
        multiplicities_expected=expected_multiplicities(n, basis.variant),
    )


def save_basis(basis: EigenBasis, path) -> None:
    """Write the binary cache format: magic, n (int32), variant byte, then
    V as little-endian float64 row-major and exponents as int32."""
    with open(path, "wb") as fh:
        fh.write(CACHE_MAGIC)
        fh.write(struct.pack("<i", basis.n))
        fh.write(struct.pack("B", _VARIANT_CODE[basis.variant]))
        fh.write(np.ascontiguousarray(basis.vectors, dtype="<f8").tobytes())
        fh.write(np.ascontiguousarray(basis.exponents, dtype="<i4").tobytes())


def load_basis(path) -> EigenBasis:
    """Read a basis written by :func:`save_basis`."""
    with open(path, "rb") as fh:
        magic = fh.read(len(CACHE_MAGIC))
        if magic != CACHE_MAGIC:
            raise ValueError(f"bad magic {magic!r}")
        (n,) = struct.unpack("<i", fh.read(4))
        (code,) = struct.unpack("B", fh.read(1))
        variant = _VARIANT_NAME[code]
        V = np.frombuffer(fh.read(8 * n * n), dtype="<f8").reshape(n, n).copy()
        ell = np.frombuffer(fh.read(4 * n), dtype="<i4").astype(np.int64)
    V.setflags(write=False)
    ell.setflags(write=False)
    return EigenBasis(variant=variant, n=n, vectors=V, exponents=ell)
