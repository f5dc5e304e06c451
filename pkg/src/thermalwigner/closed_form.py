"""Closed-form Wigner functions of the four finite-temperature families.

All evaluators share the structure Gaussian envelope x polynomial
modulation.  Writing s = sech(2 theta), c = cosh(2 theta):

  * thermal vacuum:      W = s/pi * exp(-2|a|^2 s)
  * photon-subtracted:   W = exp(-2|a|^2 s) / (pi c^(n+1))
                              * L_n(-(4 sinh^2 theta / c) |a|^2)   >= 0
  * photon-added:        W = (-1)^n exp(-2|a|^2 s) / (pi c^(n+1))
                              * L_n((4 cosh^2 theta / c) |a|^2)
  * thermal number:      double polynomial sum over two-variable
                          Hermite moduli, see :func:`wigner_thermal_number`
  * zero-T number state: W = (-1)^n / pi * exp(-2|a|^2) L_n(4 |a|^2),
                          the theta -> 0 limit of the added and thermal
                          number families.

Here |a|^2 = (q^2 + p^2)/2 and the normalization is
integral W dq dp = 1 (vacuum peak 1/pi).

The ``wigner_*`` functions take a :class:`~thermalwigner.states.PhasePoint`
and return a float; the ``*_grid`` variants evaluate whole (q, p) axes at
once on the same kernels.
"""

from __future__ import annotations

import math

import numpy as np

from .specfun import factorial, hermite2, laguerre
from .states import EXCITATION_MAX, Family, PhasePoint, StateSpec
from .thermo import ThermalParams


class DegenerateStateError(ValueError):
    """The requested state does not exist (zero norm or removable limit)."""


def _check_n(n: int) -> int:
    if n != int(n) or n < 0:
        raise ValueError(f"n must be a nonnegative integer, got {n!r}")
    if n > EXCITATION_MAX:
        raise ValueError(f"n = {n} exceeds the supported maximum {EXCITATION_MAX}")
    return int(n)


def _hyperbolics(theta: float):
    """The factors every formula consumes, computed once per call."""
    c2 = math.cosh(2.0 * theta)
    return {
        "sech2": 1.0 / c2,
        "cosh2": c2,
        "tanh2": math.tanh(2.0 * theta),
        "cosh": math.cosh(theta),
        "sinh": math.sinh(theta),
    }


# ---------------------------------------------------------------------------
# vectorized kernels on |alpha|^2 (or complex alpha for the number family)


def _vacuum_kernel(abs2, theta: float):
    h = _hyperbolics(theta)
    return h["sech2"] / math.pi * np.exp(-2.0 * abs2 * h["sech2"])


def _subtracted_kernel(abs2, n: int, theta: float):
    h = _hyperbolics(theta)
    envelope = np.exp(-2.0 * abs2 * h["sech2"]) / (math.pi * h["cosh2"] ** (n + 1))
    return envelope * laguerre(n, -(4.0 * h["sinh"] ** 2 / h["cosh2"]) * abs2)


def _subtracted_nc_kernel(abs2, n: int, n_c: float):
    width = 2.0 * n_c + 1.0
    envelope = np.exp(-2.0 * abs2 / width) / (math.pi * width ** (n + 1))
    return envelope * laguerre(n, -4.0 * n_c * abs2 / width)


def _added_kernel(abs2, n: int, theta: float):
    h = _hyperbolics(theta)
    envelope = np.exp(-2.0 * abs2 * h["sech2"]) / (math.pi * h["cosh2"] ** (n + 1))
    return (-1.0) ** n * envelope * laguerre(n, (4.0 * h["cosh"] ** 2 / h["cosh2"]) * abs2)


def _number_kernel(abs2, n: int):
    return (-1.0) ** n / math.pi * np.exp(-2.0 * abs2) * laguerre(n, 4.0 * abs2)


def _thermal_number_kernel(alpha, n: int, theta: float):
    """Double Hermite sum for the finite-temperature number state.

    With s = sech(2 theta), t = tanh(2 theta) and the linear arguments
    E = 2 alpha s cosh(theta), Y = 2 conj(alpha) s sinh(theta) / t:

        W = n!^2 exp(-2|a|^2 s) / (pi cosh 2 theta)
            * sum_{l,k=0}^{n} (-1)^k s^(l+k) t^(2(n-l))
              / (l! k! ((n-l)! (n-k)!)^2) * |H_{n-k,n-l}(E, Y)|^2

    The t^(2(n-l)) exponent follows l only: the Y-side argument carries
    1/t, and the l-indexed differentiations that produce the sum restore
    t powers on that side alone.  |H|^2 is assembled from the real and
    imaginary parts separately, so the accumulated sum carries an exactly
    zero imaginary component, which is asserted.
    """
    if theta <= 0.0:
        raise DegenerateStateError(
            "theta = 0 is a removable limit of the thermal number formula; "
            "use wigner_number_state for the zero-temperature case"
        )
    h = _hyperbolics(theta)
    s, c2, t = h["sech2"], h["cosh2"], h["tanh2"]
    shape = np.shape(alpha)
    alpha = np.atleast_1d(np.asarray(alpha, dtype=complex))
    arg_e = 2.0 * alpha * s * h["cosh"]
    arg_y = 2.0 * np.conj(alpha) * s * (h["sinh"] / t)
    total = np.zeros(alpha.shape, dtype=complex)
    for l in range(n + 1):
        for k in range(n + 1):
            coeff = (
                (-1.0) ** k
                * s ** (l + k)
                * t ** (2 * (n - l))
                / (
                    factorial(l)
                    * factorial(k)
                    * (factorial(n - l) * factorial(n - k)) ** 2
                )
            )
            herm = hermite2(n - k, n - l, arg_e, arg_y)
            # |H|^2 assembled from the parts: exactly real, where the
            # vectorized complex product would pick up FMA residue.
            total += coeff * (herm.real**2 + herm.imag**2)
    assert np.all(total.imag == 0.0), "modulus-squared assembly acquired an imaginary part"
    abs2 = np.abs(alpha) ** 2
    prefactor = factorial(n) ** 2 * np.exp(-2.0 * abs2 * s) / (math.pi * c2)
    return (prefactor * total.real).reshape(shape)


# ---------------------------------------------------------------------------
# public point evaluators


def wigner_thermal_vacuum(point: PhasePoint, thermal: ThermalParams) -> float:
    """Wigner function of the thermal (single-mode Gaussian) state."""
    return float(_vacuum_kernel(point.abs2, thermal.theta))


def wigner_photon_subtracted(point: PhasePoint, n: int, thermal: ThermalParams) -> float:
    """Wigner function after subtracting n photons from the thermal state.

    Nonnegative everywhere: the Laguerre polynomial is evaluated at a
    nonpositive argument where all its terms are positive.

    Raises:
        DegenerateStateError: for n >= 1 at theta = 0, where subtraction
            annihilates the vacuum and the state has zero norm.
    """
    n = _check_n(n)
    if n >= 1 and thermal.theta == 0.0:
        raise DegenerateStateError(
            "photon subtraction from the zero-temperature vacuum yields the "
            "null state; no Wigner function exists"
        )
    return float(_subtracted_kernel(point.abs2, n, thermal.theta))


def wigner_photon_subtracted_ncform(point: PhasePoint, n: int, n_c: float) -> float:
    """Photon-subtracted Wigner function parameterized by the occupation n_c.

    Algebraically identical to :func:`wigner_photon_subtracted` under
    n_c = sinh^2(theta), 2 n_c + 1 = cosh(2 theta); kept as an
    independent evaluation route for cross-checking.
    """
    n = _check_n(n)
    n_c = float(n_c)
    if not math.isfinite(n_c) or n_c < 0.0:
        raise ValueError(f"n_c must be finite and >= 0, got {n_c!r}")
    if n >= 1 and n_c == 0.0:
        raise DegenerateStateError(
            "photon subtraction from the zero-occupation state yields the "
            "null state; no Wigner function exists"
        )
    return float(_subtracted_nc_kernel(point.abs2, n, n_c))


def wigner_photon_added(point: PhasePoint, n: int, thermal: ThermalParams) -> float:
    """Wigner function after adding n photons to the thermal state.

    Sign at the origin is (-1)^n and the radial profile inherits the n
    sign changes of the Laguerre polynomial, so the function dips
    negative for every n >= 1.  theta = 0 is allowed (it gives the
    number state |n>).
    """
    n = _check_n(n)
    return float(_added_kernel(point.abs2, n, thermal.theta))


def wigner_thermal_number(point: PhasePoint, n: int, thermal: ThermalParams) -> float:
    """Wigner function of the finite-temperature number state.

    Raises:
        DegenerateStateError: at theta = 0, a removable 0/0 limit of the
            formula whose value is :func:`wigner_number_state`.
    """
    n = _check_n(n)
    return float(_thermal_number_kernel(np.asarray(point.alpha), n, thermal.theta))


def wigner_number_state(point: PhasePoint, n: int) -> float:
    """Wigner function of the zero-temperature number state |n>."""
    n = _check_n(n)
    return float(_number_kernel(point.abs2, n))


def norm_const_subtracted(n: int, thermal: ThermalParams) -> float:
    """Normalization constant of the n-photon-subtracted thermal state.

    1 / (n! sinh^(2n) theta); the inverse is the raw trace of the
    subtracted (unnormalized) density matrix, which the Fock oracle
    reproduces numerically.
    """
    n = _check_n(n)
    if n >= 1 and thermal.theta == 0.0:
        raise DegenerateStateError(
            "the photon-subtracted vacuum has zero norm; the normalization "
            "constant diverges"
        )
    if n == 0:
        return 1.0
    return 1.0 / (factorial(n) * math.sinh(thermal.theta) ** (2 * n))


def norm_const_added(n: int, thermal: ThermalParams) -> float:
    """Normalization constant of the n-photon-added thermal state.

    1 / (n! cosh^(2n) theta); total for all theta >= 0.
    """
    n = _check_n(n)
    if n == 0:
        return 1.0
    return 1.0 / (factorial(n) * math.cosh(thermal.theta) ** (2 * n))


# ---------------------------------------------------------------------------
# dispatch and grid evaluation


def wigner_closed_form(state: StateSpec, point: PhasePoint) -> float:
    """Evaluate the closed form selected by ``state`` at one point."""
    family = state.family
    if family is Family.THERMAL_VACUUM:
        return wigner_thermal_vacuum(point, state.thermal)
    if family is Family.PHOTON_SUBTRACTED:
        return wigner_photon_subtracted(point, state.n, state.thermal)
    if family is Family.PHOTON_ADDED:
        return wigner_photon_added(point, state.n, state.thermal)
    if family is Family.THERMAL_NUMBER:
        return wigner_thermal_number(point, state.n, state.thermal)
    raise ValueError(f"unknown family {family!r}")


def wigner_number_grid(n: int, q: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Zero-temperature number-state Wigner function on the axes q x p."""
    n = _check_n(n)
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    abs2 = 0.5 * (q[:, None] ** 2 + p[None, :] ** 2)
    return _number_kernel(abs2, n)


def wigner_closed_grid(state: StateSpec, q: np.ndarray, p: np.ndarray) -> np.ndarray:
    """Evaluate the closed form on the Cartesian product of axes q and p.

    Returns an array of shape (len(q), len(p)) with entry [i, j] at
    (q[i], p[j]).
    """
    q = np.asarray(q, dtype=float)
    p = np.asarray(p, dtype=float)
    if not (np.all(np.isfinite(q)) and np.all(np.isfinite(p))):
        raise ValueError("grid axes must be finite")
    abs2 = 0.5 * (q[:, None] ** 2 + p[None, :] ** 2)
    theta = state.thermal.theta
    family = state.family
    if family is Family.THERMAL_VACUUM:
        return _vacuum_kernel(abs2, theta)
    if family is Family.PHOTON_SUBTRACTED:
        if state.n >= 1 and theta == 0.0:
            raise DegenerateStateError(
                "photon subtraction from the zero-temperature vacuum yields "
                "the null state; no Wigner function exists"
            )
        return _subtracted_kernel(abs2, state.n, theta)
    if family is Family.PHOTON_ADDED:
        return _added_kernel(abs2, state.n, theta)
    if family is Family.THERMAL_NUMBER:
        alpha = (q[:, None] + 1j * p[None, :]) / math.sqrt(2.0)
        return _thermal_number_kernel(alpha, state.n, theta)
    raise ValueError(f"unknown family {family!r}")
