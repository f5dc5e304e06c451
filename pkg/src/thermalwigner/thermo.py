"""Thermal parameterizations of a single bosonic mode.

Three equivalent descriptions are accepted at the boundary and
normalized into one canonical bundle:

  * the squeeze-like parameter ``theta`` with tanh(theta) = exp(-omega/(2 kT)),
  * the mean thermal occupation ``n_c`` = sinh^2(theta),
  * the physical pair (omega, kT), with hbar = 1 and kT in energy units
    so the Boltzmann constant never appears numerically.

Every downstream formula is written in theta, so conversions happen once
here.  Useful identities: n_c = sinh^2(theta), cosh(2 theta) = 2 n_c + 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# Above this the sech/tanh combinations in the evaluators are not
# validated against double-precision cancellation (n_c ~ 5.5e3 already).
THETA_MAX = 5.0

_REL_TOL = 1e-12


def _check_positive(value, name: str) -> float:
    value = float(value)
    if not math.isfinite(value) or value <= 0.0:
        raise ValueError(f"{name} must be a positive finite number, got {value!r}")
    return value


@dataclass(frozen=True)
class ThermalParams:
    """Canonical thermal parameter bundle.

    Attributes:
        theta: thermal squeeze parameter, 0 <= theta <= THETA_MAX.
        n_c: mean thermal photon number, equal to sinh^2(theta).
        omega: mode frequency (hbar = 1), present only when the bundle
            was built from a physical (omega, kT) pair.
        temperature: kT in energy units, present with omega.
    """

    theta: float
    n_c: float
    omega: float | None = None
    temperature: float | None = None

    def __post_init__(self):
        theta = float(self.theta)
        n_c = float(self.n_c)
        if not math.isfinite(theta) or theta < 0.0:
            raise ValueError(f"theta must be finite and >= 0, got {self.theta!r}")
        if theta > THETA_MAX:
            raise ValueError(
                f"theta = {theta:g} exceeds the validated range (max {THETA_MAX})"
            )
        if not math.isfinite(n_c) or n_c < 0.0:
            raise ValueError(f"n_c must be finite and >= 0, got {self.n_c!r}")
        if abs(n_c - math.sinh(theta) ** 2) > _REL_TOL * (1.0 + n_c):
            raise ValueError(
                f"inconsistent bundle: n_c = {n_c!r} but sinh^2(theta) = "
                f"{math.sinh(theta) ** 2!r}"
            )
        if (self.omega is None) != (self.temperature is None):
            raise ValueError("omega and temperature must be supplied together")
        if self.omega is not None:
            omega = _check_positive(self.omega, "omega")
            kt = _check_positive(self.temperature, "temperature")
            target = math.exp(-omega / (2.0 * kt))
            if abs(math.tanh(theta) - target) > _REL_TOL * (1.0 + target):
                raise ValueError(
                    "inconsistent bundle: tanh(theta) does not match "
                    "exp(-omega / (2 kT))"
                )
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "n_c", n_c)

    @property
    def cosh_2theta(self) -> float:
        return math.cosh(2.0 * self.theta)

    @property
    def is_zero_temperature(self) -> bool:
        return self.theta == 0.0


def theta_from_temperature(omega: float, kt: float) -> float:
    """theta = artanh(exp(-omega / (2 kT))); strictly increasing in kT."""
    omega = _check_positive(omega, "omega")
    kt = _check_positive(kt, "kT")
    return math.atanh(math.exp(-omega / (2.0 * kt)))


def mean_photon_number(omega: float, kt: float) -> float:
    """Bose occupation n_c = 1 / (exp(omega / kT) - 1)."""
    omega = _check_positive(omega, "omega")
    kt = _check_positive(kt, "kT")
    exponent = omega / kt
    if exponent > 700.0:  # expm1 would overflow; occupation is zero anyway
        return 0.0
    return 1.0 / math.expm1(exponent)


def params_from_theta(theta: float) -> ThermalParams:
    """Bundle from theta alone; n_c = sinh^2(theta)."""
    theta = float(theta)
    if not math.isfinite(theta) or theta < 0.0:
        raise ValueError(f"theta must be finite and >= 0, got {theta!r}")
    return ThermalParams(theta=theta, n_c=math.sinh(theta) ** 2)


def params_from_mean_photons(n_c: float) -> ThermalParams:
    """Bundle from the mean occupation; theta = arsinh(sqrt(n_c))."""
    n_c = float(n_c)
    if not math.isfinite(n_c) or n_c < 0.0:
        raise ValueError(f"n_c must be finite and >= 0, got {n_c!r}")
    theta = math.asinh(math.sqrt(n_c))
    return ThermalParams(theta=theta, n_c=math.sinh(theta) ** 2)


def params_from_temperature(omega: float, kt: float) -> ThermalParams:
    """Bundle from the physical pair (omega, kT)."""
    theta = theta_from_temperature(omega, kt)
    if theta > THETA_MAX:
        raise ValueError(
            f"kT = {kt:g} at omega = {omega:g} gives theta = {theta:g}, "
            f"beyond the validated range (max {THETA_MAX})"
        )
    return ThermalParams(
        theta=theta,
        n_c=math.sinh(theta) ** 2,
        omega=float(omega),
        temperature=float(kt),
    )
