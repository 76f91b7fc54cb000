"""Effective field and energy of the exchange + DMI + anisotropy functional.

The discrete energy is the primary object; every field kernel is the exact
analytic gradient H = -(1/(mu0*Ms*V_cell)) * dE/dm of its energy term, so
field/energy consistency holds to machine precision by construction.

Discretization (cell size dx*dy*dz, free edges):

  exchange    E = A*dz * sum_links (d_perp/d_par) * |m_i - m_j|^2
              -> 5-point Laplacian stencil in the interior, natural
                 Neumann behaviour at edges (missing neighbours drop out).
  interfacial E = D*dz * sum_x-links dy*(m_i,z*m_j,x - m_i,x*m_j,z)
  DMI             + D*dz * sum_y-links dx*(m_i,z*m_j,y - m_i,y*m_j,z)
              -> central differences in the interior; at the track edge the
                 one-sided link term is the discrete form of the chiral
                 boundary condition dm/dn = (D/2A)*(z x n) x m, which cants
                 edge moments by a field of magnitude D/(mu0*Ms*d).
  anisotropy  E = sum_cells K_eff*(1 - m_z^2)*V_cell, zero for any uniform
              out-of-plane state (this fixes the energy zero point).
  zeeman      E = -mu0*Ms*V_cell * sum_cells m . H_applied (uniform test
              hook only; no stray-field sources are modelled).

K_eff(cell) = ku_map - mu0*Ms^2/2 under the effective-anisotropy demag mode,
else ku_map. With the default material set K_eff = 0.489 MJ/m^3 and the
critical DMI 4*sqrt(A*K_eff)/pi = 3.45 mJ/m^2 sits above D = 3 mJ/m^2, the
window where isolated skyrmions are metastable.

Sign convention: D > 0 favours Neel textures whose in-plane component points
radially outward around a down core in an up background.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .constants import MU0
from .device import DeviceModel
from .materials import MaterialParams
from .state import MagnetizationState


@dataclass(frozen=True)
class EnergyBreakdown:
    """Per-term energies in joules; ``total`` is the exact sum of the parts."""

    exchange: float
    dmi: float
    anisotropy: float
    zeeman: float = 0.0

    @property
    def total(self) -> float:
        return self.exchange + self.dmi + self.anisotropy + self.zeeman


def _k_eff_map(device: DeviceModel, params: MaterialParams) -> np.ndarray:
    return device.ku_map - params.demag_shift


def exchange_field(state: MagnetizationState, device: DeviceModel,
                   params: MaterialParams) -> np.ndarray:
    """Exchange field H_ex = (2*A/(mu0*Ms)) * laplacian(m), A/m, free edges."""
    m = state.m
    cx = 2.0 * params.A_ex / (MU0 * params.Ms * device.dx**2)
    cy = 2.0 * params.A_ex / (MU0 * params.Ms * device.dy**2)
    h = np.zeros_like(m)
    h[1:, :] += cx * (m[:-1, :] - m[1:, :])
    h[:-1, :] += cx * (m[1:, :] - m[:-1, :])
    h[:, 1:] += cy * (m[:, :-1] - m[:, 1:])
    h[:, :-1] += cy * (m[:, 1:] - m[:, :-1])
    return h


def dmi_field(state: MagnetizationState, device: DeviceModel,
              params: MaterialParams) -> np.ndarray:
    """Interfacial DMI field, A/m.

    Interior cells see the central-difference form
    H = (2D/(mu0*Ms)) * (dmz/dx, dmz/dy, -(dmx/dx + dmy/dy)); edge cells
    keep only the one-sided link terms, which is what cants the boundary.
    """
    m = state.m
    cdx = params.D_dmi / (MU0 * params.Ms * device.dx)
    cdy = params.D_dmi / (MU0 * params.Ms * device.dy)
    mx, my, mz = m[:, :, 0], m[:, :, 1], m[:, :, 2]
    h = np.zeros_like(m)
    # x-links: right neighbour adds, left neighbour subtracts
    h[:-1, :, 0] += cdx * mz[1:, :]
    h[1:, :, 0] -= cdx * mz[:-1, :]
    h[:-1, :, 2] -= cdx * mx[1:, :]
    h[1:, :, 2] += cdx * mx[:-1, :]
    # y-links
    h[:, :-1, 1] += cdy * mz[:, 1:]
    h[:, 1:, 1] -= cdy * mz[:, :-1]
    h[:, :-1, 2] -= cdy * my[:, 1:]
    h[:, 1:, 2] += cdy * my[:, :-1]
    return h


def anisotropy_field(state: MagnetizationState, device: DeviceModel,
                     params: MaterialParams) -> np.ndarray:
    """Uniaxial anisotropy field H = (2*K_eff/(mu0*Ms)) * m_z * z_hat, A/m."""
    h = np.zeros_like(state.m)
    coeff = 2.0 * _k_eff_map(device, params) / (MU0 * params.Ms)
    h[:, :, 2] = coeff * state.m[:, :, 2]
    return h


def applied_field(device: DeviceModel, params: MaterialParams) -> np.ndarray | None:
    """Uniform applied field in A/m, or None when zero (test oracle hook)."""
    vec = params.h_applied_vec
    if not np.any(vec):
        return None
    h = np.empty((device.nx, device.ny, 3), dtype=np.float64)
    h[:, :] = vec
    return h


def effective_field_total(state: MagnetizationState, device: DeviceModel,
                          params: MaterialParams) -> np.ndarray:
    """Reduced effective field h = (H_ex + H_dmi + H_k [+ H_applied]) / Ms."""
    h = exchange_field(state, device, params)
    h += dmi_field(state, device, params)
    h += anisotropy_field(state, device, params)
    ha = applied_field(device, params)
    if ha is not None:
        h += ha
    h /= params.Ms
    return h


def total_energy(state: MagnetizationState, device: DeviceModel,
                 params: MaterialParams) -> EnergyBreakdown:
    """Cell-summed energies of the same discrete functional the fields derive from.

    Accepts non-unit m so finite-difference probes of dE/dm are well defined.
    """
    m = state.m
    dx, dy, dz = device.dx, device.dy, device.dz
    v_cell = device.cell_volume

    ddx = np.diff(m, axis=0)
    ddy = np.diff(m, axis=1)
    e_ex = params.A_ex * dz * (
        (dy / dx) * float(np.sum(ddx * ddx)) + (dx / dy) * float(np.sum(ddy * ddy))
    )

    mx, my, mz = m[:, :, 0], m[:, :, 1], m[:, :, 2]
    sx = np.sum(mz[:-1, :] * mx[1:, :] - mx[:-1, :] * mz[1:, :])
    sy = np.sum(mz[:, :-1] * my[:, 1:] - my[:, :-1] * mz[:, 1:])
    e_dmi = params.D_dmi * dz * (dy * float(sx) + dx * float(sy))

    k_eff = _k_eff_map(device, params)
    e_anis = v_cell * float(np.sum(k_eff * (1.0 - mz * mz)))

    e_zee = 0.0
    vec = params.h_applied_vec
    if np.any(vec):
        e_zee = -MU0 * params.Ms * v_cell * float(np.sum(m @ vec))

    return EnergyBreakdown(exchange=e_ex, dmi=e_dmi, anisotropy=e_anis, zeeman=e_zee)
