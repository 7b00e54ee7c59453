"""Projective partitions, block-classical states, and the dephasing projection channel.

A partition is an ordered list of mutually orthogonal projectors summing to
the identity.  A density operator is *classical* with respect to a partition
when it is a mixture of states each supported inside a single projector's
support, which is equivalent to being a fixed point of the channel
rho -> sum_mu P_mu rho P_mu.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatchError, InvalidBlocksError
from .linalg import MAX_DIM, as_complex_matrix, dagger

PARTITION_TOL = 1e-10
STATE_TOL = 1e-10


@dataclass(frozen=True)
class ProjectivePartition:
    """Ordered projectors P_0..P_{m-1} with their ranks.

    ``blocks`` is set when the partition is aligned with the computational
    basis (each projector a sum of |i><i| over an index set); it pins a
    deterministic in-block basis and is the only form the CLI file format
    writes.
    """

    dim: int
    projectors: tuple
    ranks: tuple
    blocks: tuple | None = None

    @property
    def num_blocks(self) -> int:
        return len(self.projectors)


def partition_from_blocks(dim: int, blocks) -> ProjectivePartition:
    """Build a basis-aligned partition from disjoint index sets covering 0..dim-1."""
    if not 1 <= dim <= MAX_DIM:
        raise DimensionMismatchError(f"dimension {dim} outside supported range 1..{MAX_DIM}")
    if not blocks:
        raise InvalidBlocksError("at least one block is required")
    seen = set()
    norm_blocks = []
    for b, block in enumerate(blocks):
        indices = sorted(int(i) for i in block)
        if not indices:
            raise InvalidBlocksError(f"block {b} is empty")
        for i in indices:
            if not 0 <= i < dim:
                raise InvalidBlocksError(f"block {b} contains out-of-range index {i}")
            if i in seen:
                raise InvalidBlocksError(f"index {i} appears in more than one block")
            seen.add(i)
        norm_blocks.append(tuple(indices))
    if len(seen) != dim:
        missing = sorted(set(range(dim)) - seen)
        raise InvalidBlocksError(f"blocks do not cover indices {missing}")
    projectors = []
    for indices in norm_blocks:
        p = np.zeros((dim, dim), dtype=np.complex128)
        for i in indices:
            p[i, i] = 1.0
        projectors.append(p)
    ranks = tuple(len(indices) for indices in norm_blocks)
    return ProjectivePartition(dim, tuple(projectors), ranks, tuple(norm_blocks))


def _basis_aligned_blocks(projectors, tol):
    """Recover index blocks when every projector is a 0/1 diagonal matrix."""
    blocks = []
    for p in projectors:
        diag = np.diagonal(p).real
        if np.linalg.norm(p - np.diag(diag)) > tol:
            return None
        rounded = np.round(diag)
        if np.any(np.abs(diag - rounded) > tol) or not set(np.unique(rounded)) <= {0.0, 1.0}:
            return None
        blocks.append(tuple(int(i) for i in np.nonzero(rounded == 1.0)[0]))
    return tuple(blocks)


def partition_from_projectors(projectors, tol: float = PARTITION_TOL) -> ProjectivePartition:
    """Validate explicit projector matrices and assemble a partition.

    Checks Hermiticity, idempotence, mutual orthogonality and completeness,
    all in Frobenius norm at ``tol``.  Basis-aligned inputs are detected and
    get their index blocks recorded.
    """
    mats = [as_complex_matrix(p) for p in projectors]
    if not mats:
        raise InvalidBlocksError("at least one projector is required")
    dim = mats[0].shape[0]
    for i, p in enumerate(mats):
        if p.shape[0] != dim:
            raise DimensionMismatchError(f"projector {i} has dimension {p.shape[0]}, expected {dim}")
        if np.linalg.norm(p - dagger(p)) > tol:
            raise InvalidBlocksError(f"projector {i} is not Hermitian at tol {tol}")
        if np.linalg.norm(p @ p - p) > tol:
            raise InvalidBlocksError(f"projector {i} is not idempotent at tol {tol}")
    for i in range(len(mats)):
        for j in range(i + 1, len(mats)):
            if np.linalg.norm(mats[i] @ mats[j]) > tol:
                raise InvalidBlocksError(f"projectors {i} and {j} are not orthogonal at tol {tol}")
    total = sum(mats)
    if np.linalg.norm(total - np.eye(dim)) > tol:
        raise InvalidBlocksError(f"projectors do not sum to the identity at tol {tol}")
    ranks = []
    for i, p in enumerate(mats):
        r = int(round(np.trace(p).real))
        if r < 1:
            raise InvalidBlocksError(f"projector {i} has rank 0")
        ranks.append(r)
    if sum(ranks) != dim:
        raise InvalidBlocksError(f"ranks {ranks} do not sum to dimension {dim}")
    return ProjectivePartition(dim, tuple(mats), tuple(ranks), _basis_aligned_blocks(mats, tol))


def is_fine_grained(partition: ProjectivePartition) -> bool:
    """True iff every projector has rank 1."""
    return all(r == 1 for r in partition.ranks)


def validate_density_operator(rho, tol: float = STATE_TOL) -> np.ndarray:
    """Check Hermiticity, positivity and unit trace; return as complex128."""
    a = as_complex_matrix(rho)
    if np.linalg.norm(a - dagger(a)) > tol:
        raise ValueError(f"density operator is not Hermitian at tol {tol}")
    eigenvalues = np.linalg.eigvalsh((a + dagger(a)) / 2.0)
    if eigenvalues.min() < -tol:
        raise ValueError(f"density operator has negative eigenvalue {eigenvalues.min():.3e}")
    if abs(np.trace(a).real - 1.0) > tol or abs(np.trace(a).imag) > tol:
        raise ValueError(f"density operator trace {np.trace(a)} is not 1 at tol {tol}")
    return a


def _check_dims(rho: np.ndarray, partition: ProjectivePartition):
    if rho.shape[0] != partition.dim:
        raise DimensionMismatchError(
            f"state dimension {rho.shape[0]} does not match partition dimension {partition.dim}"
        )


def classical_project(rho, partition: ProjectivePartition) -> np.ndarray:
    """Apply the dephasing channel rho -> sum_mu P_mu rho P_mu."""
    a = as_complex_matrix(rho)
    _check_dims(a, partition)
    out = np.zeros_like(a)
    for p in partition.projectors:
        out += p @ a @ p
    return out


def is_classical(rho, partition: ProjectivePartition, tol: float = STATE_TOL) -> bool:
    """True iff rho is a fixed point of the dephasing channel at ``tol`` (Frobenius)."""
    a = as_complex_matrix(rho)
    _check_dims(a, partition)
    return bool(np.linalg.norm(classical_project(a, partition) - a) <= tol)


def _phase_fixed(vector: np.ndarray) -> np.ndarray:
    """Rotate a vector so its largest-magnitude entry is real and positive."""
    i = int(np.argmax(np.abs(vector)))
    phase = vector[i] / abs(vector[i])
    return vector * np.conj(phase)


def block_basis(partition: ProjectivePartition) -> list:
    """Orthonormal basis columns for each projector's support.

    Basis-aligned partitions use the computational basis vectors of each
    block (ascending index); general partitions use the dominant
    eigenvectors of each projector with a fixed phase convention, so the
    choice is deterministic.
    """
    if partition.blocks is not None:
        out = []
        for block in partition.blocks:
            cols = np.zeros((partition.dim, len(block)), dtype=np.complex128)
            for c, i in enumerate(block):
                cols[i, c] = 1.0
            out.append(cols)
        return out
    out = []
    for p in partition.projectors:
        w, v = np.linalg.eigh(p)
        keep = np.nonzero(w > 0.5)[0]
        out.append(np.column_stack([_phase_fixed(v[:, i]) for i in keep]))
    return out


@dataclass(frozen=True)
class ClassicalSpanElement:
    """Matrix unit |mu,i><mu,j| supported inside block ``block``.

    The complex span of these elements contains every density operator that
    is classical with respect to the partition, so a condition linear in the
    state can be checked on all classical states by checking it on each
    element.
    """

    block: int
    row: int
    col: int
    matrix: np.ndarray


def classical_span_basis(partition: ProjectivePartition) -> list:
    """All sum(rank^2) matrix units spanning the classical states."""
    elements = []
    for mu, cols in enumerate(block_basis(partition)):
        rank = cols.shape[1]
        for i in range(rank):
            for j in range(rank):
                elements.append(
                    ClassicalSpanElement(mu, i, j, np.outer(cols[:, i], cols[:, j].conj()))
                )
    return elements


def random_classical_state(partition: ProjectivePartition, seed: int) -> np.ndarray:
    """Random classical density operator, deterministic in ``seed``.

    Convex block weights are Dirichlet-distributed; inside each block the
    state is a mixture of Haar-random pure states, so every rank is explored.
    """
    rng = np.random.default_rng(seed)
    bases = block_basis(partition)
    weights = rng.dirichlet(np.ones(partition.num_blocks))
    rho = np.zeros((partition.dim, partition.dim), dtype=np.complex128)
    for mu, cols in enumerate(bases):
        rank = cols.shape[1]
        mix = rng.dirichlet(np.ones(rank))
        block_rho = np.zeros((rank, rank), dtype=np.complex128)
        for t in range(rank):
            amps = rng.standard_normal(rank) + 1j * rng.standard_normal(rank)
            amps /= np.linalg.norm(amps)
            block_rho += mix[t] * np.outer(amps, amps.conj())
        rho += weights[mu] * cols @ block_rho @ dagger(cols)
    return (rho + dagger(rho)) / 2.0
