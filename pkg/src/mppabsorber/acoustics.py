"""Plane-wave transfer-matrix acoustics for MPP / expansion-chamber absorbers.

A sound structure is modelled as a series chain of lumped elements (straight
pipes, area changes, micro-perforated panels), each contributing a 2x2
four-pole matrix relating (pressure, volume velocity) at its input to its
output. The chain is terminated by a rigid wall, which makes the input
impedance a11/a21 and yields the normal-incidence absorption coefficient
from the reflection coefficient at the mouth.

MPP hole impedance follows Maa's classic micro-perforated panel model
(viscous resistance plus mass reactance with end corrections). Pipes are
lossless: all dissipation is attributed to the panels.

All quantities are SI. Frequency arguments accept either a scalar (Hz) or a
numpy array for vectorised evaluation; matrix entries then carry the same
shape.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .spectrum import AbsorptionSpectrum, FrequencyGrid

__all__ = [
    "AIR",
    "AreaChange",
    "ElementChain",
    "Medium",
    "Mpp",
    "MppPanel",
    "SingularConfigurationError",
    "SoundElement",
    "StraightPipe",
    "TransferMatrix",
    "absorption_at",
    "absorption_spectrum",
    "chain_matrix",
    "circle_area",
    "element_matrix",
    "mpp_normalized_impedance",
    "perforate_constant",
]


class SingularConfigurationError(ArithmeticError):
    """Raised when a11 + Z0*a21 vanishes exactly and the reflection
    coefficient is undefined at that frequency."""

    def __init__(self, frequency: float):
        self.frequency = frequency
        super().__init__(
            f"singular configuration: a11 + Z0*a21 = 0 at {frequency} Hz"
        )


@dataclass(frozen=True)
class Medium:
    """Ambient fluid properties entering every impedance formula.

    Defaults are air at 20 degC. `temperature` is informational only; it is
    never used in a formula.
    """

    sound_speed: float = 343.0        # m/s
    density: float = 1.204            # kg/m^3
    dynamic_viscosity: float = 1.81e-5  # Pa*s
    temperature: float = 20.0         # degC, informational

    def __post_init__(self):
        if self.sound_speed <= 0:
            raise ValueError(f"sound_speed must be positive, got {self.sound_speed}")
        if self.density <= 0:
            raise ValueError(f"density must be positive, got {self.density}")
        if self.dynamic_viscosity <= 0:
            raise ValueError(
                f"dynamic_viscosity must be positive, got {self.dynamic_viscosity}"
            )

    @property
    def characteristic_impedance(self) -> float:
        """rho0*c0, the specific impedance of a free plane wave (Pa*s/m)."""
        return self.density * self.sound_speed


AIR = Medium()


def circle_area(diameter: float) -> float:
    """Cross-sectional area of a circular duct (m^2)."""
    return math.pi * (diameter / 2.0) ** 2


@dataclass(frozen=True)
class MppPanel:
    """Micro-perforated panel embedded in a duct.

    thickness, aperture (hole diameter) and duct_diameter in metres;
    porosity is the open-area fraction of the panel.
    """

    thickness: float
    aperture: float
    porosity: float
    duct_diameter: float

    def __post_init__(self):
        if self.thickness <= 0:
            raise ValueError(f"panel thickness must be positive, got {self.thickness}")
        if self.aperture <= 0:
            raise ValueError(f"panel aperture must be positive, got {self.aperture}")
        if not 0 < self.porosity < 1:
            raise ValueError(f"porosity must be in (0, 1), got {self.porosity}")
        if self.duct_diameter <= 0:
            raise ValueError(
                f"duct_diameter must be positive, got {self.duct_diameter}"
            )

    @property
    def duct_area(self) -> float:
        return circle_area(self.duct_diameter)


@dataclass(frozen=True)
class StraightPipe:
    """Uniform circular duct segment (length and diameter in metres)."""

    length: float
    diameter: float

    def __post_init__(self):
        if self.length <= 0:
            raise ValueError(f"pipe length must be positive, got {self.length}")
        if self.diameter <= 0:
            raise ValueError(f"pipe diameter must be positive, got {self.diameter}")

    @property
    def area(self) -> float:
        return circle_area(self.diameter)


@dataclass(frozen=True)
class AreaChange:
    """Abrupt expansion or contraction between duct sections.

    Under the plane-wave lumped model both transitions carry the identity
    matrix; the variant exists so chains read like the physical layout.
    """


@dataclass(frozen=True)
class Mpp:
    """A micro-perforated panel element."""

    panel: MppPanel


SoundElement = StraightPipe | AreaChange | Mpp


@dataclass(frozen=True)
class TransferMatrix:
    """Four-pole matrix: (P, U)_in = A @ (P, U)_out.

    a11 and a22 are dimensionless, a12 is in Pa*s/m^3 and a21 in
    m^3/(Pa*s). Entries may be complex scalars or complex numpy arrays of
    a common shape (one matrix per frequency).
    """

    a11: complex | np.ndarray
    a12: complex | np.ndarray
    a21: complex | np.ndarray
    a22: complex | np.ndarray

    @classmethod
    def identity(cls) -> "TransferMatrix":
        return cls(1.0 + 0.0j, 0.0j, 0.0j, 1.0 + 0.0j)

    def __matmul__(self, other: "TransferMatrix") -> "TransferMatrix":
        return TransferMatrix(
            self.a11 * other.a11 + self.a12 * other.a21,
            self.a11 * other.a12 + self.a12 * other.a22,
            self.a21 * other.a11 + self.a22 * other.a21,
            self.a21 * other.a12 + self.a22 * other.a22,
        )

    def det(self) -> complex | np.ndarray:
        return self.a11 * self.a22 - self.a12 * self.a21


@dataclass(frozen=True)
class ElementChain:
    """Ordered series of elements, sound source first, rigid wall last.

    main_duct_diameter (m) is the diameter of the main pipe at the mouth; it
    sets the characteristic impedance the reflection coefficient is referred
    to.
    """

    elements: tuple[SoundElement, ...]
    main_duct_diameter: float

    def __post_init__(self):
        if len(self.elements) == 0:
            raise ValueError("element chain must not be empty")
        if self.main_duct_diameter <= 0:
            raise ValueError(
                f"main_duct_diameter must be positive, got {self.main_duct_diameter}"
            )

    @property
    def main_duct_area(self) -> float:
        return circle_area(self.main_duct_diameter)

    def characteristic_impedance(self, medium: Medium = AIR) -> float:
        """Z0 = rho0*c0 / S_m of the main duct (Pa*s/m^3)."""
        return medium.characteristic_impedance / self.main_duct_area


def _check_frequency(frequency):
    if np.any(np.asarray(frequency) <= 0):
        raise ValueError(f"frequency must be positive, got {frequency}")


def perforate_constant(frequency, aperture: float, medium: Medium = AIR):
    """Perforate constant K = d * sqrt(omega * rho0 / (4 * eta)).

    K is the ratio of hole radius to viscous boundary-layer thickness; it
    governs the transition between Poiseuille and Helmholtz regimes of the
    hole impedance. Dimensionless, increasing in both frequency and
    aperture.
    """
    _check_frequency(frequency)
    omega = 2.0 * np.pi * frequency
    return aperture * np.sqrt(omega * medium.density / (4.0 * medium.dynamic_viscosity))


def mpp_normalized_impedance(panel: MppPanel, frequency, medium: Medium = AIR):
    """Maa impedance of an MPP, normalised by rho0*c0 (dimensionless).

    Resistance: viscous losses in the holes plus a surface correction
    proportional to K*d/t. Reactance: the air-plug mass with the classic
    0.85*d/t end correction. The mass-term factor uses (9 + K^2/2)^(-1/2),
    which decays with K as the boundary layer thins.
    """
    _check_frequency(frequency)
    t, d, sigma = panel.thickness, panel.aperture, panel.porosity
    omega = 2.0 * np.pi * frequency
    k_perf = perforate_constant(frequency, d, medium)
    resistance = (
        32.0 * medium.dynamic_viscosity * t
        / (sigma * medium.characteristic_impedance * d * d)
        * (np.sqrt(1.0 + k_perf**2 / 32.0) + (math.sqrt(2.0) / 32.0) * k_perf * (d / t))
    )
    reactance = (
        omega * t / (sigma * medium.sound_speed)
        * (1.0 + (9.0 + k_perf**2 / 2.0) ** -0.5 + 0.85 * (d / t))
    )
    return resistance + 1j * reactance


def element_matrix(element: SoundElement, frequency, medium: Medium = AIR) -> TransferMatrix:
    """Four-pole matrix of a single element at the given frequency.

    Straight pipe: [[cos(kl), j*Zc*sin(kl)], [j*sin(kl)/Zc, cos(kl)]] with
    k = omega/c0 (lossless) and Zc = rho0*c0/S. Area change: identity.
    MPP: series impedance (rho0*c0/S') * Z_mpp in the upper-right slot.
    All three have unit determinant.
    """
    _check_frequency(frequency)
    if isinstance(element, AreaChange):
        return TransferMatrix.identity()
    if isinstance(element, StraightPipe):
        k = 2.0 * np.pi * np.asarray(frequency, dtype=float) / medium.sound_speed
        z_c = medium.characteristic_impedance / element.area
        kl = k * element.length
        cos_kl = np.cos(kl)
        sin_kl = np.sin(kl)
        return TransferMatrix(
            cos_kl + 0.0j,
            1j * z_c * sin_kl,
            1j * sin_kl / z_c,
            cos_kl + 0.0j,
        )
    if isinstance(element, Mpp):
        panel = element.panel
        z = mpp_normalized_impedance(panel, frequency, medium) * (
            medium.characteristic_impedance / panel.duct_area
        )
        zero = np.zeros_like(z)
        one = zero + 1.0
        return TransferMatrix(one, z, zero, one)
    raise TypeError(f"unknown sound element {element!r}")


def _compose(chain: ElementChain, frequency, medium: Medium, dtype) -> TransferMatrix:
    """Left-to-right product of the chain's element matrices at `dtype`.

    Area changes carry exact identity matrices and contribute nothing, so
    they are not multiplied in.
    """
    factors = [
        element_matrix(element, frequency, medium)
        for element in chain.elements
        if not isinstance(element, AreaChange)
    ]
    if not factors:
        return TransferMatrix.identity()
    matrix = TransferMatrix(
        *(np.asarray(entry, dtype=dtype)
          for entry in (factors[0].a11, factors[0].a12, factors[0].a21, factors[0].a22))
    )
    for factor in factors[1:]:
        matrix = matrix @ factor
    return matrix


def chain_matrix(chain: ElementChain, frequency, medium: Medium = AIR) -> TransferMatrix:
    """Product of element matrices, element nearest the source leftmost.

    Entries of wide-chamber chains reach ~1e6, so the unit-determinant
    property cancels catastrophically in double precision; the returned
    matrix is accumulated in extended precision (x86 long double) to keep
    |det - 1| < 1e-9 across the band. The absorption path uses the same
    composition at double precision: the reflection ratio it feeds is
    well-conditioned, unlike the determinant.
    """
    _check_frequency(frequency)
    return _compose(chain, frequency, medium, np.clongdouble)


def _reflection_coefficient(chain: ElementChain, frequency, medium: Medium):
    _check_frequency(frequency)
    matrix = _compose(chain, frequency, medium, np.complex128)
    z0 = chain.characteristic_impedance(medium)
    denominator = matrix.a11 + z0 * matrix.a21
    bad = np.asarray(denominator) == 0
    if np.any(bad):
        freq = np.asarray(frequency, dtype=float)
        offending = float(freq[bad][0]) if freq.ndim else float(freq)
        raise SingularConfigurationError(offending)
    return (matrix.a11 - z0 * matrix.a21) / denominator


def absorption_at(chain: ElementChain, frequency: float, medium: Medium = AIR) -> float:
    """Normal-incidence absorption coefficient of the rigidly terminated chain.

    alpha = 1 - |Gamma|^2 with Gamma = (a11 - Z0*a21) / (a11 + Z0*a21).
    The result is clamped to [0, 1]; chains without an MPP are lossless and
    return essentially zero.
    """
    gamma = _reflection_coefficient(chain, frequency, medium)
    alpha = 1.0 - float(abs(gamma)) ** 2
    return float(min(1.0, max(0.0, alpha)))


def absorption_spectrum(
    chain: ElementChain, grid: FrequencyGrid, medium: Medium = AIR
) -> AbsorptionSpectrum:
    """Absorption coefficient sampled on a frequency grid.

    Evaluation is vectorised but each grid point is independent; values
    match absorption_at frequency by frequency.
    """
    frequencies = grid.frequencies()
    gamma = _reflection_coefficient(chain, frequencies, medium)
    alphas = np.clip(
        1.0 - np.abs(gamma).astype(np.float64) ** 2, 0.0, 1.0
    )
    return AbsorptionSpectrum(frequencies=frequencies, alphas=alphas)
