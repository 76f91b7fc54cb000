"""Nanotrack geometry: structured grid, gated barrier, region labelling.

The device is a rectangular track of nx*ny cells. A rounded-rectangle
barrier of elevated anisotropy sits at the track center and splits the
track into a presynapse region (left of the barrier center) and a
postsynapse region (right of it). Cell membership is decided at cell
centers; barrier cells carry ``Ku_barrier``, all others ``Ku_film``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .materials import MaterialParams

REGION_PRE = 0
REGION_BARRIER = 1
REGION_POST = 2

REGION_NAMES = {REGION_PRE: "presynapse", REGION_BARRIER: "barrier", REGION_POST: "postsynapse"}


@dataclass(frozen=True)
class BarrierSpec:
    """Rounded-rectangle barrier footprint, SI lengths.

    ``length_x`` runs along the track, ``width_y`` across it. A point is
    inside if it lies within ``corner_radius`` of the rectangle shrunk by
    the corner radius on every side.
    """

    center_x: float
    center_y: float
    length_x: float = 40e-9
    width_y: float = 56e-9
    corner_radius: float = 10e-9

    def contains(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """Vectorized membership test for points (x, y) in meters."""
        if self.length_x <= 0.0 or self.width_y <= 0.0:
            return np.zeros(np.broadcast(x, y).shape, dtype=bool)
        r = self.corner_radius
        px = np.abs(np.asarray(x) - self.center_x) - (0.5 * self.length_x - r)
        py = np.abs(np.asarray(y) - self.center_y) - (0.5 * self.width_y - r)
        return np.maximum(px, 0.0) ** 2 + np.maximum(py, 0.0) ** 2 <= r * r


@dataclass(frozen=True)
class DeviceConfig:
    """Track geometry request, SI lengths; material supplies the Ku values."""

    length: float = 528e-9
    width: float = 120e-9
    cell_x: float = 2e-9
    cell_y: float = 2e-9
    barrier_length: float = 40e-9
    barrier_width: float = 56e-9
    barrier_radius: float = 10e-9
    material: MaterialParams = field(default_factory=MaterialParams)


@dataclass(frozen=True)
class DeviceModel:
    """Immutable device: grid, anisotropy map and region labels.

    Safe to share across concurrent simulations; all arrays are read-only.
    """

    nx: int
    ny: int
    dx: float
    dy: float
    dz: float
    ku_map: np.ndarray         # (nx, ny) float64, J/m^3
    region_mask: np.ndarray    # (nx, ny) uint8, REGION_* codes
    barrier_spec: BarrierSpec

    def __post_init__(self) -> None:
        self.ku_map.setflags(write=False)
        self.region_mask.setflags(write=False)

    @property
    def shape(self) -> tuple[int, int]:
        return (self.nx, self.ny)

    @property
    def cell_volume(self) -> float:
        return self.dx * self.dy * self.dz

    @property
    def length(self) -> float:
        return self.nx * self.dx

    @property
    def width(self) -> float:
        return self.ny * self.dy

    def cell_centers(self) -> tuple[np.ndarray, np.ndarray]:
        """Cell-center coordinate grids (xs, ys), each (nx, ny), meters."""
        xs = (np.arange(self.nx) + 0.5) * self.dx
        ys = (np.arange(self.ny) + 0.5) * self.dy
        return np.meshgrid(xs, ys, indexing="ij")

    def region_cells(self, region: int | None) -> np.ndarray:
        """Boolean mask of cells in ``region`` (None selects all cells)."""
        if region is None:
            return np.ones(self.shape, dtype=bool)
        return self.region_mask == region

    def contains_point(self, x: float, y: float) -> bool:
        return 0.0 <= x <= self.length and 0.0 <= y <= self.width


def _check_divides(total: float, cell: float, name: str) -> int:
    n = total / cell
    n_round = round(n)
    if n_round < 1 or abs(n - n_round) > 1e-9 * max(1.0, abs(n)):
        raise ValueError(
            f"cell size {cell} m does not divide track {name} {total} m "
            f"(quotient {n})"
        )
    return int(n_round)


def build_device(config: DeviceConfig) -> DeviceModel:
    """Construct the device grid, anisotropy map and region labels.

    Raises ValueError on non-positive dimensions, cells that do not tile
    the track, a barrier larger than the track, or cells coarser than the
    material exchange length.
    """
    if config.length <= 0 or config.width <= 0:
        raise ValueError("track dimensions must be positive")
    if config.cell_x <= 0 or config.cell_y <= 0:
        raise ValueError("cell sizes must be positive")
    mat = config.material
    l_ex = mat.exchange_length
    if max(config.cell_x, config.cell_y) >= l_ex:
        raise ValueError(
            f"cell edge {max(config.cell_x, config.cell_y):.3g} m must be smaller than "
            f"the exchange length {l_ex:.3g} m"
        )
    if config.barrier_length < 0 or config.barrier_width < 0:
        raise ValueError("barrier extents must be non-negative")
    if config.barrier_width > config.width or config.barrier_length > config.length:
        raise ValueError(
            f"barrier {config.barrier_length*1e9:.3g} x {config.barrier_width*1e9:.3g} nm "
            f"does not fit inside the {config.length*1e9:.3g} x {config.width*1e9:.3g} nm track"
        )
    has_barrier = config.barrier_length > 0 and config.barrier_width > 0
    if has_barrier and config.barrier_radius > 0.5 * min(config.barrier_length, config.barrier_width):
        raise ValueError("barrier corner radius exceeds half the smallest barrier extent")

    nx = _check_divides(config.length, config.cell_x, "length")
    ny = _check_divides(config.width, config.cell_y, "width")

    barrier = BarrierSpec(
        center_x=0.5 * config.length,
        center_y=0.5 * config.width,
        length_x=config.barrier_length,
        width_y=config.barrier_width,
        corner_radius=config.barrier_radius if has_barrier else 0.0,
    )

    xs = (np.arange(nx) + 0.5) * config.cell_x
    ys = (np.arange(ny) + 0.5) * config.cell_y
    gx, gy = np.meshgrid(xs, ys, indexing="ij")
    in_barrier = barrier.contains(gx, gy)

    ku_map = np.where(in_barrier, mat.Ku_barrier, mat.Ku_film).astype(np.float64)
    region = np.where(gx < barrier.center_x, REGION_PRE, REGION_POST).astype(np.uint8)
    region[in_barrier] = REGION_BARRIER

    return DeviceModel(
        nx=nx,
        ny=ny,
        dx=config.cell_x,
        dy=config.cell_y,
        dz=mat.t_fm,
        ku_map=ku_map,
        region_mask=region,
        barrier_spec=barrier,
    )
