"""Material parameter set for the ferromagnet/heavy-metal nanotrack.

Defaults describe a 1 nm Co-like film with perpendicular anisotropy and
interfacial DMI, the regime where isolated Neel skyrmions are metastable.
The out-of-plane demagnetizing field of a thin film is absorbed into an
effective anisotropy K_eff = Ku - mu0*Ms^2/2 (``demag_mode`` selects this
or no correction at all; a full dipolar convolution is out of scope).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .constants import GAMMA_DEFAULT, MU0

DEMAG_MODES = ("none", "effective-anisotropy")


@dataclass(frozen=True)
class MaterialParams:
    """Physical constants and material coefficients, SI units.

    Attributes:
        Ms: saturation magnetization, A/m.
        gamma: gyromagnetic ratio magnitude, m/(A*s).
        alpha: Gilbert damping, dimensionless.
        P: spin polarization of the injected current, dimensionless.
        A_ex: exchange stiffness, J/m.
        Ku_film: uniaxial out-of-plane anisotropy of the film, J/m^3.
        Ku_barrier: anisotropy inside the gated barrier, J/m^3.
        D_dmi: interfacial DMI constant, J/m^2.
        t_fm: ferromagnet thickness, m.
        demag_mode: "effective-anisotropy" folds the thin-film shape
            anisotropy into K_eff; "none" uses the bare Ku map.
    """

    Ms: float = 5.8e5
    gamma: float = GAMMA_DEFAULT
    alpha: float = 0.3
    P: float = 0.4
    A_ex: float = 1.5e-11
    Ku_film: float = 0.7e6
    Ku_barrier: float = 0.84e6
    D_dmi: float = 3.0e-3
    t_fm: float = 1.0e-9
    demag_mode: str = "effective-anisotropy"
    h_applied: tuple[float, float, float] = field(default=(0.0, 0.0, 0.0))

    def __post_init__(self) -> None:
        if self.Ms <= 0:
            raise ValueError(f"Ms must be positive, got {self.Ms}")
        if self.alpha <= 0:
            raise ValueError(f"alpha must be positive, got {self.alpha}")
        if self.t_fm <= 0:
            raise ValueError(f"t_fm must be positive, got {self.t_fm}")
        if self.A_ex <= 0:
            raise ValueError(f"A_ex must be positive, got {self.A_ex}")
        if self.gamma <= 0:
            raise ValueError(f"gamma must be positive, got {self.gamma}")
        if not 0.0 <= self.P <= 1.0:
            raise ValueError(f"spin polarization P must lie in [0, 1], got {self.P}")
        if self.Ku_barrier < self.Ku_film:
            raise ValueError(
                f"Ku_barrier ({self.Ku_barrier}) must be >= Ku_film ({self.Ku_film})"
            )
        if self.demag_mode not in DEMAG_MODES:
            raise ValueError(
                f"demag_mode must be one of {DEMAG_MODES}, got {self.demag_mode!r}"
            )
        object.__setattr__(self, "h_applied", tuple(float(c) for c in self.h_applied))

    @property
    def exchange_length(self) -> float:
        """sqrt(2*A_ex / (mu0*Ms^2)), the shortest resolvable texture scale, m."""
        return math.sqrt(2.0 * self.A_ex / (MU0 * self.Ms**2))

    @property
    def demag_shift(self) -> float:
        """Anisotropy shift applied per cell under effective-anisotropy demag, J/m^3."""
        if self.demag_mode == "effective-anisotropy":
            return 0.5 * MU0 * self.Ms**2
        return 0.0

    @property
    def k_eff_film(self) -> float:
        """Effective out-of-plane anisotropy of the film, J/m^3."""
        return self.Ku_film - self.demag_shift

    @property
    def wall_width(self) -> float:
        """Bloch-wall width estimate sqrt(A_ex/K_eff), m."""
        k = self.k_eff_film
        if k <= 0:
            raise ValueError("wall width undefined: effective anisotropy is not easy-axis")
        return math.sqrt(self.A_ex / k)

    @property
    def dmi_critical(self) -> float:
        """Critical DMI 4*sqrt(A_ex*K_eff)/pi above which the uniform state stripes out, J/m^2."""
        k = self.k_eff_film
        if k <= 0:
            return 0.0
        return 4.0 * math.sqrt(self.A_ex * k) / math.pi

    @property
    def h_applied_vec(self) -> np.ndarray:
        return np.asarray(self.h_applied, dtype=np.float64)
