"""Unit decompositions (Parseval frames) and their certification.

A family of vectors v_1, ..., v_n in R^k is a unit decomposition when the
outer products v_i v_i^T sum to the identity on R^k.  Equivalently, the
k x n matrix whose columns are the v_i has orthonormal rows, i.e. it is a
sub-matrix of an orthogonal matrix of order n.  The operations here certify
that identity numerically, relate frames to projections of the standard
basis of R^n, and extend certified frames to full orthogonal matrices.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

TAU_ORTH = 1e-10  # orthonormality tolerance for subspace bases
TAU_CERT = 1e-9   # certification tolerance for unit decompositions


class FrameStructureError(ValueError):
    """Malformed frame, subspace, or profile data (shape, finiteness, bounds)."""


class CertificationError(ValueError):
    """A frame failed unit-decomposition certification.

    The ``deviation`` attribute holds the max-norm of sum(v_i v_i^T) - I_k
    for the offending frame.
    """

    def __init__(self, message: str, deviation: float):
        super().__init__(message)
        self.deviation = deviation


def _float_array(data, name: str) -> np.ndarray:
    try:
        arr = np.array(data, dtype=float)
    except (TypeError, ValueError):
        raise FrameStructureError(f"{name} is not a rectangular array of reals") from None
    if not np.all(np.isfinite(arr)):
        raise FrameStructureError(f"{name} contains non-finite entries")
    return arr


@dataclass(frozen=True)
class FrameSet:
    """Ordered family of n vectors in R^k, stored as rows of ``vectors``."""

    n: int
    k: int
    vectors: np.ndarray

    def __post_init__(self):
        if self.k < 1 or self.n < self.k:
            raise FrameStructureError(f"need n >= k >= 1, got n={self.n}, k={self.k}")
        vecs = _float_array(self.vectors, "vectors")
        if vecs.shape != (self.n, self.k):
            raise FrameStructureError(
                f"vectors must have shape ({self.n}, {self.k}), got {vecs.shape}")
        vecs.setflags(write=False)
        object.__setattr__(self, "vectors", vecs)

    @classmethod
    def from_vectors(cls, vectors) -> "FrameSet":
        vecs = _float_array(vectors, "vectors")
        if vecs.ndim != 2:
            raise FrameStructureError("vectors must be a 2-d array, one vector per row")
        return cls(n=vecs.shape[0], k=vecs.shape[1], vectors=vecs)

    def squared_norms(self) -> np.ndarray:
        """Squared Euclidean norm of each vector (the frame's norm profile)."""
        return np.einsum("ij,ij->i", self.vectors, self.vectors)


@dataclass(frozen=True)
class Subspace:
    """A k-dimensional subspace of R^n given by k orthonormal basis rows."""

    n: int
    k: int
    basis: np.ndarray

    def __post_init__(self):
        if self.k < 1 or self.n < self.k:
            raise FrameStructureError(f"need n >= k >= 1, got n={self.n}, k={self.k}")
        basis = _float_array(self.basis, "basis")
        if basis.shape != (self.k, self.n):
            raise FrameStructureError(
                f"basis must have shape ({self.k}, {self.n}), got {basis.shape}")
        dev = basis @ basis.T - np.eye(self.k)
        i, j = np.unravel_index(np.argmax(np.abs(dev)), dev.shape)
        if abs(dev[i, j]) > TAU_ORTH:
            expected = 1.0 if i == j else 0.0
            raise FrameStructureError(
                f"basis rows {i} and {j} are not orthonormal: "
                f"|<b_{i}, b_{j}> - {expected:g}| = {abs(dev[i, j]):.3e} > {TAU_ORTH:g}")
        basis.setflags(write=False)
        object.__setattr__(self, "basis", basis)


@dataclass(frozen=True)
class GramMatrix:
    """Pairwise inner products of a frame; symmetric by construction."""

    n: int
    entries: np.ndarray

    def __post_init__(self):
        ent = _float_array(self.entries, "entries")
        if ent.shape != (self.n, self.n):
            raise FrameStructureError(
                f"entries must have shape ({self.n}, {self.n}), got {ent.shape}")
        ent = 0.5 * (ent + ent.T)
        ent.setflags(write=False)
        object.__setattr__(self, "entries", ent)


@dataclass(frozen=True)
class CertificationResult:
    """Outcome of a unit-decomposition check.

    ``deviation`` is the max-norm of sum(v_i v_i^T) - I_k; ``rank`` is the
    numerical rank of the vector family (spanning R^k is implied whenever
    the certification itself passes, so the rank is informational).
    """

    ok: bool
    deviation: float
    tol: float
    rank: int

    def __bool__(self) -> bool:
        return self.ok


@dataclass(frozen=True)
class ProjectionMatrixCheck:
    """Outcome of an (approximate) projection-matrix check on a Gram matrix."""

    ok: bool
    idempotency_deviation: float
    trace_deviation: float
    tol: float

    def __bool__(self) -> bool:
        return self.ok


def certify_unit_decomposition(frame: FrameSet, tol: float = TAU_CERT) -> CertificationResult:
    """Check sum(v_i v_i^T) = I_k entrywise within ``tol``."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    V = frame.vectors
    dev = V.T @ V - np.eye(frame.k)
    deviation = float(np.max(np.abs(dev)))
    rank = int(np.linalg.matrix_rank(V))
    return CertificationResult(ok=deviation <= tol, deviation=deviation, tol=tol, rank=rank)


def project_standard_basis(subspace: Subspace) -> FrameSet:
    """Orthogonal projections of the standard basis of R^n onto the subspace.

    The i-th output vector is the projection of e_i written in the
    subspace's basis coordinates, i.e. column i of the basis matrix.  The
    result is always a unit decomposition of R^k (up to roundoff in the
    supplied basis).
    """
    return FrameSet(n=subspace.n, k=subspace.k, vectors=subspace.basis.T.copy())


def gram_matrix(frame: FrameSet) -> GramMatrix:
    """The n x n matrix of pairwise inner products <v_i, v_j>."""
    V = frame.vectors
    g = V @ V.T
    return GramMatrix(n=frame.n, entries=0.5 * (g + g.T))


def is_projection_matrix(gram: GramMatrix, target_rank: int,
                         tol: float = TAU_CERT) -> ProjectionMatrixCheck:
    """Check that a Gram matrix is idempotent with the prescribed trace."""
    if tol < 0:
        raise ValueError("tol must be nonnegative")
    if target_rank < 0:
        raise ValueError("target_rank must be nonnegative")
    G = gram.entries
    idem = float(np.max(np.abs(G @ G - G)))
    trace_dev = float(abs(np.trace(G) - target_rank))
    ok = idem <= tol and trace_dev <= tol
    return ProjectionMatrixCheck(ok=ok, idempotency_deviation=idem,
                                 trace_deviation=trace_dev, tol=tol)


def orthogonal_completion(frame: FrameSet, tol: float = TAU_CERT) -> np.ndarray:
    """Extend a certified frame's k x n matrix to an orthogonal matrix of order n.

    Rows k..n-1 are built greedily: at each step the canonical basis vector
    of R^n with the largest residual after orthogonalization against the
    rows accumulated so far is orthonormalized (with one re-orthogonalization
    pass) and appended.  The top k x n block of the result is the frame's
    matrix, bit for bit.
    """
    cert = certify_unit_decomposition(frame, tol)
    if not cert.ok:
        raise CertificationError(
            f"frame is not a unit decomposition within {tol:g}: "
            f"deviation {cert.deviation:.3e}", cert.deviation)
    n, k = frame.n, frame.k
    rows = np.zeros((n, n))
    rows[:k] = frame.vectors.T
    for m in range(k, n):
        Q = rows[:m]
        resid = np.eye(n) - Q.T @ Q
        j = int(np.argmax(np.einsum("ij,ij->j", resid, resid)))
        vec = resid[:, j]
        vec = vec - Q.T @ (Q @ vec)
        norm = float(np.linalg.norm(vec))
        if norm < 1e-8:
            raise ArithmeticError(
                "orthogonal completion lost rank; the frame rows are ill-conditioned")
        rows[m] = vec / norm
    return rows
