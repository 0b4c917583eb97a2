"""Symbolic specifications of spherical 3-manifold fundamental groups.

Every such group is Z_m x G with gcd(m, |G|) = 1 and G cyclic, binary
dihedral D*_{4n} (2|n), binary octahedral O*_48, binary icosahedral I*_120,
generalized tetrahedral T'_{8*3^q} or dicyclic D'_{n*2^q} (n odd > 1,
q > 1).  The text grammar shared with the CLI:

    Z(m)            cyclic, standard rotations (1, 1)
    L(m;r1,r2)      cyclic with explicit rotation numbers
    D*(n)           binary dihedral of order 4n
    O*              binary octahedral
    I*              binary icosahedral
    T'(q)           generalized tetrahedral of order 8*3^q
    D'(n,q)         dicyclic of order n*2^q
    Z(m)x<base>     cyclic cofactor, e.g. Z(5)xO*
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from enum import Enum
from math import gcd

from .errors import ParseError, SpecInvalid


class Family(Enum):
    CYCLIC = "Cyclic"
    BINARY_DIHEDRAL = "BinaryDihedral"
    BINARY_OCTAHEDRAL = "BinaryOctahedral"
    BINARY_ICOSAHEDRAL = "BinaryIcosahedral"
    GENERALIZED_TETRAHEDRAL = "GeneralizedTetrahedral"
    DICYCLIC = "Dicyclic"


@dataclass(frozen=True)
class GroupSpec:
    """Family plus parameters; validated on construction.

    ``m`` is the cyclic cofactor order (the full order for CYCLIC),
    ``n`` the family parameter of D*/D', ``q`` the power parameter of
    T'/D', and ``lens_rotations`` the (r1, r2) pair for CYCLIC specs.
    """

    family: Family
    m: int = 1
    n: int = 1
    q: int = 1
    lens_rotations: tuple[int, int] | None = None

    def __post_init__(self):
        if self.m < 1 or self.n < 1 or self.q < 1:
            raise SpecInvalid("parameters must be positive")
        f = self.family
        if f is Family.CYCLIC:
            r1, r2 = self.lens_rotations if self.lens_rotations else (1, 1)
            if gcd(r1, self.m) != 1 or gcd(r2, self.m) != 1:
                raise SpecInvalid(
                    f"rotation numbers ({r1},{r2}) must be units mod {self.m}")
            object.__setattr__(self, "lens_rotations", (r1 % self.m, r2 % self.m))
        else:
            if self.lens_rotations is not None:
                raise SpecInvalid("lens rotations only apply to cyclic specs")
        if f is Family.BINARY_DIHEDRAL and self.n % 2 != 0:
            raise SpecInvalid(
                f"D*(4n) requires 2|n; D*({self.n}) with n odd is the dicyclic D'({self.n},2)")
        if f is Family.DICYCLIC:
            if self.n % 2 == 0:
                raise SpecInvalid("D'(n,q) requires n odd")
            if self.n <= 1:
                raise SpecInvalid("D'(n,q) requires n > 1 (n = 1 is the cyclic Z_{2^q})")
            if self.q <= 1:
                raise SpecInvalid("D'(n,q) requires q > 1 (q = 1 is not spherical)")
        if f is not Family.CYCLIC and gcd(self.m, self.base_order) != 1:
            raise SpecInvalid(
                f"cofactor order {self.m} must be coprime to base order {self.base_order}")

    @property
    def base_order(self) -> int:
        """Order of the non-cyclic factor (1 for CYCLIC)."""
        f = self.family
        if f is Family.CYCLIC:
            return 1
        if f is Family.BINARY_DIHEDRAL:
            return 4 * self.n
        if f is Family.BINARY_OCTAHEDRAL:
            return 48
        if f is Family.BINARY_ICOSAHEDRAL:
            return 120
        if f is Family.GENERALIZED_TETRAHEDRAL:
            return 8 * 3 ** self.q
        return self.n * 2 ** self.q

    @property
    def order(self) -> int:
        return self.m if self.family is Family.CYCLIC else self.m * self.base_order

    @property
    def is_cyclic(self) -> bool:
        return self.family is Family.CYCLIC

    def base(self) -> "GroupSpec":
        """The spec with the cyclic cofactor stripped."""
        if self.family is Family.CYCLIC:
            return GroupSpec(Family.CYCLIC, 1)
        return GroupSpec(self.family, 1, self.n, self.q)

    def __str__(self) -> str:
        f = self.family
        if f is Family.CYCLIC:
            r1, r2 = self.lens_rotations
            if (r1, r2) == (1 % self.m, 1 % self.m):
                return f"Z({self.m})"
            return f"L({self.m};{r1},{r2})"
        base = {
            Family.BINARY_DIHEDRAL: f"D*({self.n})",
            Family.BINARY_OCTAHEDRAL: "O*",
            Family.BINARY_ICOSAHEDRAL: "I*",
            Family.GENERALIZED_TETRAHEDRAL: f"T'({self.q})",
            Family.DICYCLIC: f"D'({self.n},{self.q})",
        }[f]
        return f"Z({self.m})x{base}" if self.m > 1 else base


@dataclass(frozen=True)
class ManifoldSpec:
    """A spherical 3-manifold S^3/G with the canonical orientation."""

    group: GroupSpec
    orientation: int = 1  # +1: canonical orientation inherited from S^3

    def __str__(self) -> str:
        return str(self.group) if self.orientation == 1 else f"-{self.group}"


_BASE_RE = {
    re.compile(r"^D\*\((\d+)\)$"): lambda m: ("D*", int(m.group(1))),
    re.compile(r"^O\*$"): lambda m: ("O*",),
    re.compile(r"^I\*$"): lambda m: ("I*",),
    re.compile(r"^T'\((\d+)\)$"): lambda m: ("T'", int(m.group(1))),
    re.compile(r"^D'\((\d+),(\d+)\)$"): lambda m: ("D'", int(m.group(1)), int(m.group(2))),
}


def parse_group(text: str) -> GroupSpec:
    """Parse the grammar above into a validated GroupSpec."""
    s = text.strip().replace(" ", "")
    if not s:
        raise ParseError("empty group spec")
    m = 1
    cof = re.match(r"^Z\((\d+)\)x(.+)$", s)
    if cof:
        m = int(cof.group(1))
        s = cof.group(2)
    else:
        zline = re.match(r"^Z\((\d+)\)$", s)
        if zline:
            return GroupSpec(Family.CYCLIC, int(zline.group(1)))
        lens = re.match(r"^L\((\d+);(-?\d+),(-?\d+)\)$", s)
        if lens:
            mm = int(lens.group(1))
            return GroupSpec(Family.CYCLIC, mm,
                             lens_rotations=(int(lens.group(2)) % mm, int(lens.group(3)) % mm))
    for pat, extract in _BASE_RE.items():
        hit = pat.match(s)
        if hit:
            tag = extract(hit)
            if tag[0] == "D*":
                return GroupSpec(Family.BINARY_DIHEDRAL, m, n=tag[1])
            if tag[0] == "O*":
                return GroupSpec(Family.BINARY_OCTAHEDRAL, m)
            if tag[0] == "I*":
                return GroupSpec(Family.BINARY_ICOSAHEDRAL, m)
            if tag[0] == "T'":
                return GroupSpec(Family.GENERALIZED_TETRAHEDRAL, m, q=tag[1])
            return GroupSpec(Family.DICYCLIC, m, n=tag[1], q=tag[2])
    raise ParseError(f"cannot parse group spec {text!r}")


def parse_manifold(text: str) -> ManifoldSpec:
    """Parse a manifold literal: a group spec, orientation always canonical."""
    return ManifoldSpec(parse_group(text))
