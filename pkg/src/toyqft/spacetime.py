"""Discrete spacetime lattice Z+ x Z^3 with Minkowski arithmetic.

All arithmetic is exact: squared intervals and inner products are
integers, and the plane-wave phase exp(i pi px / 2) is a fourth root of
unity computed from px mod 4 with no floating-point trigonometry.
"""

from dataclasses import dataclass
from math import isqrt

from .errors import DivisionByZeroEnergy, UnknownMode
from .fields import free_field

# i^k for k = 0..3
_QUARTER_TURNS = (1 + 0j, 0 + 1j, -1 + 0j, 0 - 1j)


@dataclass(frozen=True)
class LatticePoint:
    """Spacetime point (x0, x) with nonnegative integer time."""

    x0: int
    x: tuple = (0, 0, 0)

    def __post_init__(self):
        if self.x0 < 0:
            raise ValueError("time coordinate must be nonnegative")

    def as_tuple(self):
        return (self.x0,) + tuple(self.x)


@dataclass(frozen=True)
class EnergyMomentum:
    """Forward-cone 4-momentum (p0, p)."""

    p0: int
    p: tuple = (0, 0, 0)

    def __post_init__(self):
        if self.p0 < 0:
            raise ValueError("energy must be nonnegative")
        if minkowski_sq(self.as_tuple()) < 0:
            raise ValueError(f"{self.as_tuple()} outside the forward cone")

    def as_tuple(self):
        return (self.p0,) + tuple(self.p)

    @property
    def mass_sq(self):
        return minkowski_sq(self.as_tuple())


def minkowski_sq(v):
    """Squared Minkowski interval v0^2 - v1^2 - v2^2 - v3^2."""
    v0, v1, v2, v3 = v
    return v0 * v0 - v1 * v1 - v2 * v2 - v3 * v3


def lorentz_product(p, x):
    """Indefinite inner product p0 x0 - p.x."""
    p0, p1, p2, p3 = p.as_tuple() if isinstance(p, EnergyMomentum) else p
    x0, x1, x2, x3 = x.as_tuple() if isinstance(x, LatticePoint) else x
    return p0 * x0 - p1 * x1 - p2 * x2 - p3 * x3


def phase(p, x):
    """exp(i pi px / 2) as an exact fourth root of unity."""
    return _QUARTER_TURNS[lorentz_product(p, x) % 4]


def hyperboloid(m, r):
    """All forward-cone integer 4-momenta of mass m with p0 <= r.

    Ordered by p0 ascending, then lexicographically on the spatial part.
    May be empty (e.g. r < m).
    """
    points = []
    for p0 in range(r + 1):
        rem = p0 * p0 - m * m
        if rem < 0:
            continue
        bound = isqrt(rem)
        for p1 in range(-bound, bound + 1):
            rem1 = rem - p1 * p1
            b2 = isqrt(rem1)
            for p2 in range(-b2, b2 + 1):
                rem2 = rem1 - p2 * p2
                p3 = isqrt(rem2)
                if p3 * p3 != rem2:
                    continue
                for q3 in ({-p3, p3}):
                    points.append(EnergyMomentum(p0, (p1, p2, q3)))
    points.sort(key=lambda ep: ep.as_tuple())
    return points


def space_volume(x0):
    """Number of integer spatial points within Euclidean distance x0."""
    count = 0
    for x1 in range(-x0, x0 + 1):
        for x2 in range(-x0, x0 + 1):
            for x3 in range(-x0, x0 + 1):
                if x1 * x1 + x2 * x2 + x3 * x3 <= x0 * x0:
                    count += 1
    return count


def space_slice(x0):
    """Lattice points (x0, x) with |x| <= x0, in deterministic order."""
    points = []
    for x1 in range(-x0, x0 + 1):
        for x2 in range(-x0, x0 + 1):
            for x3 in range(-x0, x0 + 1):
                if x1 * x1 + x2 * x2 + x3 * x3 <= x0 * x0:
                    points.append(LatticePoint(x0, (x1, x2, x3)))
    return points


def field_at(space, x, r, m, mode_ids=None):
    """Free field at lattice point x: one AC term per mass-m hyperboloid
    point with p0 <= r, with coefficient phase(p, x) / p0.

    The space's roster must carry one mode per hyperboloid point (matched
    by 4-momentum); mode_ids optionally restricts the candidate modes,
    which disambiguates rosters holding two equal-mass blocks.  Massless
    fields are rejected: the p0 = 0 point has no finite coefficient.
    """
    points = hyperboloid(m, r)
    if any(p.p0 == 0 for p in points):
        raise DivisionByZeroEnergy(
            f"mass-{m} hyperboloid contains a zero-energy point"
        )
    candidates = (
        space.modes
        if mode_ids is None
        else [space.mode(i) for i in mode_ids]
    )
    by_momentum = {
        mode.momentum: mode
        for mode in candidates
        if mode.momentum is not None and mode.mass == m
    }
    terms = []
    for p in points:
        mode = by_momentum.get(p.as_tuple())
        if mode is None:
            raise UnknownMode(
                f"roster has no mass-{m} mode with momentum {p.as_tuple()}"
            )
        terms.append((mode.id, phase(p, x) / p.p0))
    return free_field(space, terms)
