from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Optional, Tuple

from src.models.lattice import DualVector, IntMatrix, LatticePoint


class FacetTag(str, Enum):
    SMOOTH = 'smooth'
    AN_TRIANGLE = 'an_triangle'
    OTHER = 'other'


@dataclass(frozen=True)
class FacetClass:
    tag: FacetTag
    n: Optional[int] = None
    witness: Optional[str] = None

    @property
    def label(self):
        return f"A{self.n}" if self.tag is FacetTag.AN_TRIANGLE else self.tag.value


@dataclass(frozen=True)
class AdjacentAnPair:
    """Two A_n-triangles T0 = (rho0, rho_u, rho_v), T1 = (rho1, rho_u, rho_v) sharing their long edge"""
    n: int
    rho0: LatticePoint
    rho1: LatticePoint
    rho_u: LatticePoint
    rho_v: LatticePoint
    w0: DualVector
    w1: DualVector
    pairing: int
    facet_ids: Tuple[int, int] = (-1, -1)

    @property
    def almost_flat(self):
        return self.pairing == 0

    def swap_edge(self):
        return replace(self, rho_u=self.rho_v, rho_v=self.rho_u)

    def swap_triangles(self):
        return replace(
            self, rho0=self.rho1, rho1=self.rho0, w0=self.w1, w1=self.w0,
            facet_ids=(self.facet_ids[1], self.facet_ids[0]),
        )

    def to_dict(self):
        return {
            'n': self.n,
            'rho0': self.rho0.to_list(),
            'rho1': self.rho1.to_list(),
            'rho_u': self.rho_u.to_list(),
            'rho_v': self.rho_v.to_list(),
            'w0': self.w0.to_list(),
            'w1': self.w1.to_list(),
            'pairing': self.pairing,
            'facet_ids': list(self.facet_ids),
        }


@dataclass(frozen=True)
class NormalForm:
    """Coordinates with U*rho1 = e3, U*rho_u = e1, U*rho_v = (-n, n+1, 0), U*rho0 = (a, b, -1)"""
    U: IntMatrix
    a: int
    b: int
    n: int
    r: int
    p: int
    q: int
    s: int
    t: int
    d_x: int
    d_y: int
    d_z: int

    @property
    def pairing(self):
        return self.a + self.b - 1

    def to_dict(self):
        return {
            'U': self.U.to_rows(),
            'a': self.a,
            'b': self.b,
            'n': self.n,
            'r': self.r,
            'p': self.p,
            'q': self.q,
            's': self.s,
            't': self.t,
            'd_x': self.d_x,
            'd_y': self.d_y,
            'd_z': self.d_z,
        }


@dataclass(frozen=True)
class ExtProfile:
    """Degrees of the line bundles O(-j(pairing + 1)), j = 2..n+1, in ascending j"""
    degrees: Tuple[int, ...]

    @property
    def n(self):
        return len(self.degrees)

    @property
    def all_negative(self):
        return all(d < 0 for d in self.degrees)


class VerdictTag(str, Enum):
    NOT_SMOOTHABLE = 'not_smoothable'
    NO_OBSTRUCTION_FOUND = 'no_obstruction_found'
    ALREADY_SMOOTH = 'already_smooth'


@dataclass(frozen=True)
class SmoothabilityVerdict:
    tag: VerdictTag
    witnesses: Tuple[AdjacentAnPair, ...] = field(default_factory=tuple)
