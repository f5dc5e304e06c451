"""Independent ground truth in a truncated Fock space.

Every state the library has a closed form for is rebuilt here as an
explicit density matrix in the number basis, and its Wigner function is
evaluated through the displaced photon-number parity,

    W(q, p) = pref * sum_k (-1)^k <k| D(alpha)^dag rho D(alpha) |k>,

with D(alpha) = exp(alpha a^dag - conj(alpha) a) built by matrix
exponential and alpha = (q + i p) / sqrt(2).  Nothing in this module
uses the closed-form expressions, so pointwise agreement between the two
routes certifies both.

The prefactor is not hard-coded: conventions for the parity identity
differ across sources, so it is calibrated once by requiring the vacuum
value at the origin to be 1/pi, the peak height that makes
integral W dq dp = 1 (a startup self-test, see ``parity_prefactor``).

Truncation policy: the thermal tail beyond the cutoff must be below
1e-12, and displacement headroom of max(10, 4 n + ceil(8 |alpha|^2_max))
extra levels is added on top because displacing by alpha pushes
population up by about |alpha|^2 levels.  Leak past the cutoff is
monitored at every evaluation through the population of a guard band at
the top of the basis.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
import scipy.linalg

from .states import Family, PhasePoint, StateSpec

# Per-mode cap for the doubled-space construction: its generator is a
# dim^2 x dim^2 dense matrix, 1024^2 at this cap.
TWO_MODE_DIM_MAX = 32

THERMAL_TAIL_TOL = 1e-12
DEFAULT_LEAK_TOL = 1e-10
TWO_MODE_DEFICIT_TOL = 1e-8

_SQRT2 = math.sqrt(2.0)

# Vacuum Wigner peak under the integral-one-over-dq-dp convention.
VACUUM_PEAK = 1.0 / math.pi


class TruncationError(RuntimeError):
    """The truncated basis cannot represent the requested computation."""


class AnnihilatedStateError(ValueError):
    """The operation maps the state to (numerically) zero."""


@dataclass
class LadderOps:
    """Annihilation/creation matrices on a dim-level truncated mode.

    <m| a |m+1> = sqrt(m+1); ``create`` is the transpose.  The canonical
    commutator holds exactly on the interior (truncation breaks only the
    last row/column).
    """

    dim: int
    annihilate: np.ndarray
    create: np.ndarray


def ladder_ops(dim: int) -> LadderOps:
    if dim < 1 or dim != int(dim):
        raise ValueError(f"dim must be a positive integer, got {dim!r}")
    dim = int(dim)
    a = np.diag(np.sqrt(np.arange(1.0, dim)), k=1)
    return LadderOps(dim=dim, annihilate=a, create=a.T.copy())


@dataclass
class FockDensityMatrix:
    """Truncated density matrix in the number basis.

    Construction validates hermiticity (1e-12), unit trace (1e-10) and
    the eigenvalue floor (>= -1e-10); the entries are frozen read-only
    so grid evaluations can share them across threads.
    """

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        entries = np.array(self.entries, dtype=complex)
        if entries.shape != (self.dim, self.dim):
            raise ValueError(
                f"entries shape {entries.shape} does not match dim {self.dim}"
            )
        if not np.all(np.isfinite(entries.view(float))):
            raise ValueError("density matrix entries must be finite")
        herm_defect = np.max(np.abs(entries - entries.conj().T))
        if herm_defect > 1e-12:
            raise ValueError(f"density matrix not Hermitian (defect {herm_defect:.3e})")
        trace = entries.trace().real
        if abs(trace - 1.0) > 1e-10:
            raise ValueError(f"density matrix trace {trace!r} is not 1")
        floor = float(np.min(scipy.linalg.eigvalsh(entries)))
        if floor < -1e-10:
            raise ValueError(f"density matrix has eigenvalue {floor:.3e} below floor")
        entries.setflags(write=False)
        object.__setattr__(self, "entries", entries)

    def mean_photons(self) -> float:
        return float(np.sum(np.arange(self.dim) * np.diagonal(self.entries).real))


def min_thermal_dim(n_c: float, tail_tol: float = THERMAL_TAIL_TOL) -> int:
    """Smallest truncation whose neglected thermal tail is below tail_tol.

    The tail of the geometric occupation is (n_c / (n_c+1))^N.
    """
    if n_c < 0.0 or not math.isfinite(n_c):
        raise ValueError(f"n_c must be finite and >= 0, got {n_c!r}")
    if n_c == 0.0:
        return 1
    ratio = n_c / (n_c + 1.0)
    return max(1, math.ceil(math.log(tail_tol) / math.log(ratio)))


def displacement_padding(n: int, alpha_max_sq: float) -> int:
    """Extra levels above the state support needed for displaced parity."""
    return max(10, 4 * int(n) + math.ceil(8.0 * float(alpha_max_sq)))


def thermal_density_matrix(n_c: float, dim: int) -> FockDensityMatrix:
    """Diagonal thermal state, occupation weights n_c^l / (n_c+1)^(l+1).

    Raises:
        TruncationError: if the neglected tail at ``dim`` exceeds 1e-12;
            the message carries the smallest admissible dimension.
    """
    if n_c < 0.0 or not math.isfinite(n_c):
        raise ValueError(f"n_c must be finite and >= 0, got {n_c!r}")
    dim = int(dim)
    if dim < 1:
        raise ValueError(f"dim must be >= 1, got {dim}")
    if n_c > 0.0:
        tail = (n_c / (n_c + 1.0)) ** dim
        if tail > THERMAL_TAIL_TOL:
            raise TruncationError(
                f"thermal tail {tail:.3e} at dim {dim} exceeds {THERMAL_TAIL_TOL:g}; "
                f"use dim >= {min_thermal_dim(n_c)}"
            )
        levels = np.arange(dim)
        weights = (n_c / (n_c + 1.0)) ** levels / (n_c + 1.0)
    else:
        weights = np.zeros(dim)
        weights[0] = 1.0
    weights = weights / weights.sum()
    return FockDensityMatrix(dim=dim, entries=np.diag(weights.astype(complex)))


def apply_subtraction(rho: FockDensityMatrix, n: int) -> tuple[FockDensityMatrix, float]:
    """n-fold photon subtraction a^n rho a^dag^n, renormalized.

    Returns the new state and the raw trace Tr[a^n rho a^dag^n], which
    equals the inverse normalization constant of the subtracted state.

    Raises:
        AnnihilatedStateError: when the raw trace is below 1e-14
            (e.g. subtracting from the vacuum).
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return rho, 1.0
    an = np.linalg.matrix_power(ladder_ops(rho.dim).annihilate, n)
    out = an @ rho.entries @ an.T
    raw = float(out.trace().real)
    if raw <= 1e-14:
        raise AnnihilatedStateError(
            f"subtracting {n} photon(s) annihilates the state (raw trace {raw:.3e})"
        )
    return FockDensityMatrix(dim=rho.dim, entries=out / raw), raw


def apply_addition(rho: FockDensityMatrix, n: int) -> tuple[FockDensityMatrix, float]:
    """n-fold photon addition a^dag^n rho a^n, renormalized.

    Returns the new state and the raw trace Tr[a^dag^n rho a^n], the
    inverse normalization constant of the added state.

    Raises:
        TruncationError: when the top n diagonal entries of rho are not
            negligible (< 1e-12), so the upward shift would leak.
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    if n == 0:
        return rho, 1.0
    top = np.diagonal(rho.entries).real[rho.dim - n :]
    if top.size and float(np.max(top)) > 1e-12:
        raise TruncationError(
            f"insufficient headroom for adding {n} photon(s): top occupation "
            f"{float(np.max(top)):.3e} at dim {rho.dim}"
        )
    cn = np.linalg.matrix_power(ladder_ops(rho.dim).create, n)
    out = cn @ rho.entries @ cn.T
    raw = float(out.trace().real)
    return FockDensityMatrix(dim=rho.dim, entries=out / raw), raw


def partial_trace_tilde(rho2: np.ndarray, dim: int) -> FockDensityMatrix:
    """Reduce a two-mode density matrix over its second (tilde) factor.

    ``rho2`` must be dim^2 x dim^2 with the first factor's index major
    (kron ordering), Hermitian and unit trace.
    """
    dim = int(dim)
    rho2 = np.asarray(rho2, dtype=complex)
    if rho2.shape != (dim * dim, dim * dim):
        raise ValueError(
            f"expected a {dim * dim} x {dim * dim} two-mode matrix, got {rho2.shape}"
        )
    if np.max(np.abs(rho2 - rho2.conj().T)) > 1e-10:
        raise ValueError("two-mode density matrix is not Hermitian")
    trace = rho2.trace().real
    if abs(trace - 1.0) > 1e-8:
        raise ValueError(f"two-mode density matrix trace {trace!r} is not 1")
    reduced = np.einsum("itjt->ij", rho2.reshape(dim, dim, dim, dim))
    reduced = reduced / reduced.trace().real
    return FockDensityMatrix(dim=dim, entries=reduced)


def two_mode_squeeze_generator(theta: float, dim: int) -> np.ndarray:
    """Generator theta * (a^dag x a^dag - a x a) on the doubled space."""
    ops = ladder_ops(dim)
    return float(theta) * (
        np.kron(ops.create, ops.create) - np.kron(ops.annihilate, ops.annihilate)
    )


def thermal_number_reduced(n: int, theta: float, dim: int = TWO_MODE_DIM_MAX) -> FockDensityMatrix:
    """Single-mode reduction of the squeezed doubled-space number state.

    Applies exp[theta (a^dag a~^dag - a a~)] to |n> x |n>, forms the pure
    density matrix and traces out the tilde mode.  This is the oracle for
    the finite-temperature number-state Wigner function; for n = 0 it
    reproduces the thermal state with n_c = sinh^2(theta).

    Raises:
        TruncationError: when population within two levels of the cutoff
            exceeds 1e-8 (the squeezing spread the state past ``dim``).
    """
    n = int(n)
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    dim = int(dim)
    if dim > TWO_MODE_DIM_MAX:
        raise ValueError(
            f"two-mode work is capped at {TWO_MODE_DIM_MAX} levels per mode, got {dim}"
        )
    if n >= dim:
        raise ValueError(f"n = {n} does not fit in dim = {dim}")
    if theta < 0.0 or not math.isfinite(theta):
        raise ValueError(f"theta must be finite and >= 0, got {theta!r}")
    generator = two_mode_squeeze_generator(theta, dim)
    squeeze = scipy.linalg.expm(generator)
    psi = squeeze[:, n * dim + n]
    amplitudes = psi.reshape(dim, dim)
    guard = 2
    body = float(np.sum(np.abs(amplitudes[: dim - guard, : dim - guard]) ** 2))
    deficit = abs(float(np.vdot(psi, psi).real) - body)
    if deficit > TWO_MODE_DEFICIT_TOL:
        raise TruncationError(
            f"two-mode truncation deficit {deficit:.3e} at dim {dim} per mode "
            f"(n = {n}, theta = {theta:g}) exceeds {TWO_MODE_DEFICIT_TOL:g}"
        )
    rho2 = np.outer(psi, psi.conj())
    return partial_trace_tilde(rho2, dim)


def embed_density(rho: FockDensityMatrix, dim: int) -> FockDensityMatrix:
    """Zero-pad a density matrix into a larger truncated basis.

    Exact as long as the state's support already lies inside the old
    cutoff; used to give displacement headroom to reduced states.
    """
    dim = int(dim)
    if dim < rho.dim:
        raise ValueError(f"cannot embed dim {rho.dim} into smaller dim {dim}")
    if dim == rho.dim:
        return rho
    out = np.zeros((dim, dim), dtype=complex)
    out[: rho.dim, : rho.dim] = rho.entries
    return FockDensityMatrix(dim=dim, entries=out)


# ---------------------------------------------------------------------------
# displaced parity


def displacement_operator(alpha: complex, dim: int) -> np.ndarray:
    """D(alpha) = exp(alpha a^dag - conj(alpha) a) on the truncated basis.

    The generator is exactly anti-Hermitian, so the Pade
    scaling-and-squaring exponential returns a unitary matrix to machine
    precision.
    """
    alpha = complex(alpha)
    if not (math.isfinite(alpha.real) and math.isfinite(alpha.imag)):
        raise ValueError(f"alpha must be finite, got {alpha!r}")
    ops = ladder_ops(dim)
    generator = alpha * ops.create.astype(complex) - np.conj(alpha) * ops.annihilate
    return scipy.linalg.expm(generator)


def _parity_signs(dim: int) -> np.ndarray:
    signs = np.ones(dim)
    signs[1::2] = -1.0
    return signs


def _guard_band(dim: int) -> int:
    return max(3, dim // 12)


@lru_cache(maxsize=1)
def parity_prefactor() -> float:
    """Calibrated prefactor of the displaced-parity sum.

    Fixed by requiring the vacuum Wigner value at the origin to equal
    1/pi (the convention in which W integrates to 1 over dq dp with
    alpha = (q + i p)/sqrt(2)).  The undisplaced vacuum parity sum is
    computed numerically and must be 1 to 1e-12; anything else means the
    parity machinery is broken, so this doubles as a startup self-test.
    """
    dim = 8
    vacuum = np.zeros((dim, dim), dtype=complex)
    vacuum[0, 0] = 1.0
    parity_sum = float(np.sum(_parity_signs(dim) * np.diagonal(vacuum).real))
    if abs(parity_sum - 1.0) > 1e-12:
        raise RuntimeError(
            f"displaced-parity self-test failed: vacuum parity sum {parity_sum!r}"
        )
    return VACUUM_PEAK / parity_sum


def wigner_from_density(
    rho: FockDensityMatrix,
    point: PhasePoint,
    leak_tol: float = DEFAULT_LEAK_TOL,
) -> float:
    """Displaced-parity Wigner value of ``rho`` at one phase-space point.

    Raises:
        TruncationError: when the displaced state puts more than
            ``leak_tol`` population into the guard band at the top of the
            basis, i.e. |alpha| is too large for the truncation.
    """
    disp_op = displacement_operator(point.alpha, rho.dim)
    displaced = disp_op.conj().T @ rho.entries @ disp_op
    diag = np.diagonal(displaced)
    band = _guard_band(rho.dim)
    leak = float(np.sum(diag.real[rho.dim - band :]))
    if leak > leak_tol:
        raise TruncationError(
            f"displacement leak {leak:.3e} at dim {rho.dim} for |alpha| = "
            f"{abs(point.alpha):.3g} exceeds {leak_tol:g}"
        )
    parity_sum = complex(np.sum(_parity_signs(rho.dim) * diag))
    assert abs(parity_sum.imag) < 1e-10, "parity sum acquired an imaginary part"
    return parity_prefactor() * parity_sum.real


@lru_cache(maxsize=8)
def _quadrature_eig(dim: int):
    """Eigen-decompositions of the two fixed displacement generators.

    D((q + i p)/sqrt(2)) splits, up to a scalar phase that cancels in
    the parity conjugation, into exp(q Gq) exp(p Gp) with
    Gq = (a^dag - a)/sqrt(2) and Gp = i (a^dag + a)/sqrt(2).  Both are
    anti-Hermitian, so one Hermitian eigendecomposition each turns every
    grid displacement into a diagonal phase in its own eigenbasis.
    """
    ops = ladder_ops(dim)
    herm_q = -1j * (ops.create.astype(complex) - ops.annihilate) / _SQRT2
    lam_q, vec_q = np.linalg.eigh(herm_q)
    herm_p = (ops.create + ops.annihilate) / _SQRT2
    lam_p, vec_p = np.linalg.eigh(herm_p)
    return lam_q, vec_q, lam_p, vec_p.astype(complex)


def wigner_grid_from_density(
    rho: FockDensityMatrix,
    q: np.ndarray,
    p: np.ndarray,
    leak_tol: float = DEFAULT_LEAK_TOL,
) -> np.ndarray:
    """Displaced-parity Wigner values on the product grid q x p.

    Factorizes every displacement into the two fixed-generator one-axis
    displacements (the relative phase cancels inside D Pi D^dag) and
    works in their eigenbases, where a displacement is a diagonal phase:
    writing rho~ = Vq^dag rho Vq the q-side becomes an elementwise phase
    mask, and only the p-side conjugations need matmuls.  Agrees with
    :func:`wigner_from_density` to machine precision and is the evaluator
    the verification grids use.

    Returns an array of shape (len(q), len(p)).
    """
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    if not (np.all(np.isfinite(q)) and np.all(np.isfinite(p))):
        raise ValueError("grid axes must be finite")
    dim = rho.dim
    lam_q, vec_q, lam_p, vec_p = _quadrature_eig(dim)
    signs = _parity_signs(dim)
    band = np.zeros(dim)
    band[dim - _guard_band(dim) :] = 1.0

    # One-time basis changes: rho into the q-generator eigenbasis, the
    # parity and guard projectors into the p-generator eigenbasis, and
    # the cross overlap X between the two bases.
    rho_q = vec_q.conj().T @ rho.entries @ vec_q
    uh = vec_p.conj().T
    parity_p = (uh * signs) @ vec_p
    band_p = (uh * band) @ vec_p
    cross = vec_q.conj().T @ vec_p
    cross_h = cross.conj().T

    rho_rows = np.empty((q.size, dim * dim), dtype=complex)
    for i, qv in enumerate(q):
        phase = np.exp(1j * qv * lam_q)
        rho_rows[i] = (rho_q * np.outer(phase.conj(), phase)).ravel()

    parity_cols = np.empty((p.size, dim * dim), dtype=complex)
    guard_cols = np.empty((p.size, dim * dim), dtype=complex)
    for j, pv in enumerate(p):
        phase = np.exp(1j * pv * lam_p)
        mask = np.outer(phase, phase.conj())
        parity_cols[j] = (cross @ (parity_p * mask) @ cross_h).T.ravel()
        guard_cols[j] = (cross @ (band_p * mask) @ cross_h).T.ravel()

    leak = (rho_rows @ guard_cols.T).real
    worst = float(np.max(leak))
    if worst > leak_tol:
        raise TruncationError(
            f"displacement leak up to {worst:.3e} on the grid at dim {dim} "
            f"exceeds {leak_tol:g}; enlarge the truncation or shrink the box"
        )
    values = rho_rows @ parity_cols.T
    assert float(np.max(np.abs(values.imag))) < 1e-10, (
        "parity sums acquired an imaginary part"
    )
    return parity_prefactor() * values.real


def build_oracle_state(state: StateSpec, alpha_max_sq: float) -> FockDensityMatrix:
    """Density matrix for ``state`` sized for displacements up to alpha_max_sq.

    The truncation is the smallest thermal-tail-safe dimension plus the
    displacement padding; the doubled-space number-state construction is
    capped at 32 levels per mode and then zero-padded for headroom.
    """
    pad = displacement_padding(state.n, alpha_max_sq)
    if state.family is Family.THERMAL_NUMBER:
        reduced = thermal_number_reduced(state.n, state.thermal.theta)
        return embed_density(reduced, reduced.dim + pad)
    dim = min_thermal_dim(state.thermal.n_c) + pad
    rho = thermal_density_matrix(state.thermal.n_c, dim)
    if state.family is Family.PHOTON_SUBTRACTED and state.n > 0:
        rho, _ = apply_subtraction(rho, state.n)
    elif state.family is Family.PHOTON_ADDED and state.n > 0:
        rho, _ = apply_addition(rho, state.n)
    return rho
