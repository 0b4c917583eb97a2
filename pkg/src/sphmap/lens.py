"""Lens spaces, their equivalences, and degrees of maps between them.

L(m; r1, r2) is S^3 modulo the cyclic group generated by the block
rotation diag(R(2*pi*r1/m), R(2*pi*r2/m)); both rotation numbers are
units mod m.  Degrees of maps L1 -> L2 are integers mod m2 computed from
the rotation data; all arithmetic is exact (modular inverses via
``pow(x, -1, m)``, integer-valued composite fractions divided after
multiplying out).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import atan2, gcd, pi

import numpy as np

from .errors import AngleNotCommensurate, ConstraintViolated, NotCyclic, SpecInvalid

ANGLE_TOL = 1e-6


def inverse_mod(a: int, m: int) -> int:
    if m == 1:
        return 0
    return pow(a % m, -1, m)


@dataclass(frozen=True)
class LensSpace:
    m: int
    r1: int
    r2: int

    def __post_init__(self):
        if self.m < 1:
            raise SpecInvalid("lens order must be positive")
        object.__setattr__(self, "r1", self.r1 % self.m)
        object.__setattr__(self, "r2", self.r2 % self.m)
        if gcd(self.r1, self.m) != 1 or gcd(self.r2, self.m) != 1:
            raise SpecInvalid(f"rotations ({self.r1},{self.r2}) not units mod {self.m}")

    def __str__(self) -> str:
        return f"L({self.m};{self.r1},{self.r2})"

    @property
    def twist(self) -> int:
        """r1 * r2^-1 mod m: the classical single rotation number."""
        return (self.r1 * inverse_mod(self.r2, self.m)) % self.m


def canonical_lens(lens: LensSpace) -> LensSpace:
    """The L(m; 1, r') representative of the same oriented lens space."""
    if lens.m == 1:
        return LensSpace(1, 0, 0)
    return LensSpace(lens.m, 1, inverse_mod(lens.twist, lens.m))


def oriented_homeomorphic(a: LensSpace, b: LensSpace) -> bool:
    """Orientation-preserving homeomorphism test: twists agree up to inverse."""
    if a.m != b.m:
        return False
    if a.m == 1:
        return True
    return b.twist in (a.twist, inverse_mod(a.twist, a.m))


def homeomorphic(a: LensSpace, b: LensSpace) -> bool:
    """Homeomorphism test, orientation ignored: {+-r1/r2, +-r2/r1} coincide."""
    if a.m != b.m:
        return False
    if a.m == 1:
        return True
    return oriented_homeomorphic(a, b) or \
        oriented_homeomorphic(a, LensSpace(b.m, b.r1, -b.r2))


@dataclass(frozen=True)
class DegreeSet:
    """A union of residue classes mod |pi_1| of the target manifold.

    modulus 1 with residues {0} denotes all integers (simply connected
    or trivial-degree targets).
    """

    modulus: int
    residues: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "residues",
                           tuple(sorted({r % self.modulus for r in self.residues})))

    def __contains__(self, value: int) -> bool:
        return value % self.modulus in self.residues

    def __str__(self) -> str:
        inner = ", ".join(str(r) for r in self.residues)
        return f"mod {self.modulus}: {{{inner}}}"

    def to_json(self) -> dict:
        return {"modulus": self.modulus, "residues": list(self.residues)}

    @staticmethod
    def union(parts: list["DegreeSet"]) -> "DegreeSet":
        if not parts:
            raise SpecInvalid("empty union")
        modulus = parts[0].modulus
        if any(p.modulus != modulus for p in parts):
            raise SpecInvalid("union requires a common modulus")
        res = set()
        for p in parts:
            res.update(p.residues)
        return DegreeSet(modulus, tuple(res))


# ---------------------------------------------------------------------------
# rotation angles of SO(4) elements

def rotation_angles(mat: np.ndarray) -> tuple[float, float]:
    """Angle pair (t1, t2), positively oriented: mat ~ R(t1) (+) R(t2) in SO(4).

    The pair is well-defined up to swapping and simultaneous negation,
    which is exactly the ambiguity of the standard lens generator.
    """
    vals, vecs = np.linalg.eig(mat)
    pick = None
    for i, lam in enumerate(vals):
        if lam.imag > 1e-9:
            pick = i
            break
    if pick is None:
        if np.allclose(mat, np.eye(4), atol=1e-9):
            return 0.0, 0.0
        if np.allclose(mat, -np.eye(4), atol=1e-9):
            return pi, pi
        raise AngleNotCommensurate("matrix with real spectrum is not +-identity")
    lam = vals[pick]
    theta1 = atan2(lam.imag, lam.real)
    z = vecs[:, pick]
    u, v = z.real, z.imag
    p1 = v / np.linalg.norm(v)
    p2 = u / np.linalg.norm(u)
    # rotation acts by +theta1 on the oriented plane (p1, p2)
    basis = np.stack([p1, p2], axis=1)
    proj = np.eye(4) - basis @ basis.T
    evals, evecs = np.linalg.eigh(proj)
    comp = evecs[:, evals > 0.5]
    w1, w2 = comp[:, 0], comp[:, 1]
    if np.linalg.det(np.stack([p1, p2, w1, w2], axis=1)) < 0:
        w2 = -w2
    c = float((mat @ w1) @ w1)
    s = float((mat @ w1) @ w2)
    theta2 = atan2(s, c)
    return theta1, theta2


def lens_of_matrix(mat: np.ndarray, order: int) -> LensSpace:
    """Lens space of the cyclic group generated by an order-``order`` rotation."""
    t1, t2 = rotation_angles(mat)
    out = []
    for t in (t1, t2):
        raw = t * order / (2 * pi)
        r = round(raw)
        if abs(raw - r) > ANGLE_TOL * order:
            raise AngleNotCommensurate(
                f"angle {t} is not a multiple of 2*pi/{order} within tolerance")
        out.append(r % order)
    return LensSpace(order, out[0], out[1])


def lens_of_cyclic(group, sub: frozenset[int], generator: int | None = None
                   ) -> tuple[LensSpace, int]:
    """Lens space of S^3/H for a cyclic subgroup H of a matrix group.

    Returns (lens, generator index); the lens rotation data refers to that
    generator as the standard one.  Raises NotCyclic when H is not cyclic.
    """
    from .groups import cyclic_generator
    h = len(sub)
    if h == 1:
        return LensSpace(1, 0, 0), 0
    if generator is None:
        generator = cyclic_generator(group, sub)
        if generator is None:
            raise NotCyclic(f"subgroup of order {h} has no generator")
    else:
        if group.cyclic_subgroup(generator) != sub:
            raise NotCyclic("given element does not generate the subgroup")
    cache = getattr(group, "_lens_cache", None)
    if cache is None:
        cache = {}
        group._lens_cache = cache
    if generator not in cache:
        cache[generator] = lens_of_matrix(group.matrices[generator], h)
    return cache[generator], generator


# ---------------------------------------------------------------------------
# degrees

def lens_hom_degree(source: LensSpace, target: LensSpace, exponent: int) -> int:
    """Degree mod m2 of a map inducing c1 -> c2^exponent on fundamental groups.

    Requires exponent * m1 = 0 mod m2; the composite integer
    exponent^2 * m1 / m2 is divided exactly before reduction, matching the
    covering decomposition deg(f) = (l, m2) * deg(lift).
    """
    m1, m2 = source.m, target.m
    if (exponent * m1) % m2 != 0:
        raise ConstraintViolated(
            f"no homomorphism Z{m1} -> Z{m2} with c -> c^{exponent}")
    if m2 == 1:
        return 0
    num = exponent * exponent * m1
    assert num % m2 == 0
    coeff = (num // m2) * target.r1 * target.r2 \
        * inverse_mod(source.r1, m1) * inverse_mod(source.r2, m1)
    return coeff % m2


def lens_degree_set(source: LensSpace, target: LensSpace) -> DegreeSet:
    """All realizable degrees of maps L1 -> L2 as residues mod m2."""
    m1, m2 = source.m, target.m
    if m2 == 1:
        return DegreeSet(1, (0,))
    g = gcd(m1, m2)
    coeff = target.r1 * target.r2 * (m1 * m2 // (g * g)) \
        * inverse_mod(source.r1, m1) * inverse_mod(source.r2, m1)
    return DegreeSet(m2, tuple((j * j * coeff) % m2 for j in range(g)))
