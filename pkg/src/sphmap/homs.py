"""Homomorphisms between matrix groups: validation, enumeration, Aut/Out.

A homomorphism is stored by its generator images and cached as a full
element-wise map (via the breadth-first words of the domain), so equality
and composition are map-level.  Enumeration backtracks over free-generator
images with order-divisibility and commutator pruning, then checks every
defining relation of the Table-1 presentation.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import CapExceeded, RelationViolated, SpecInvalid
from .groups import CayleyGroup, Group, free_generators, presentation

ENUM_CAP = 10 ** 8


class Homomorphism:
    """A validated homomorphism domain -> codomain."""

    def __init__(self, domain: Group, codomain: CayleyGroup,
                 images: dict[str, int], element_map: np.ndarray):
        self.domain = domain
        self.codomain = codomain
        self.images = dict(images)
        self.map = element_map
        self._kernel: frozenset[int] | None = None
        self._image: frozenset[int] | None = None

    @property
    def kernel(self) -> frozenset[int]:
        if self._kernel is None:
            self._kernel = frozenset(int(i) for i in np.where(self.map == 0)[0])
        return self._kernel

    @property
    def image(self) -> frozenset[int]:
        if self._image is None:
            self._image = frozenset(int(x) for x in np.unique(self.map))
        return self._image

    @property
    def is_surjective(self) -> bool:
        return len(self.image) == self.codomain.order

    @property
    def is_injective(self) -> bool:
        return len(self.kernel) == 1

    @property
    def is_bijective(self) -> bool:
        return self.is_injective and self.is_surjective

    @property
    def is_trivial(self) -> bool:
        return len(self.image) == 1

    def __call__(self, x: int) -> int:
        return int(self.map[x])

    def key(self) -> bytes:
        return self.map.tobytes()

    def __eq__(self, other) -> bool:
        return (isinstance(other, Homomorphism)
                and self.domain is other.domain
                and self.codomain is other.codomain
                and np.array_equal(self.map, other.map))

    def __hash__(self) -> int:
        return hash((id(self.domain), id(self.codomain), self.map.tobytes()))

    def describe(self) -> str:
        parts = []
        for g, x in self.images.items():
            target = self.codomain
            if isinstance(target, Group):
                parts.append(f"{g} -> {target.canonical_word(x)}")
            else:
                parts.append(f"{g} -> #{x}")
        return ", ".join(parts)

    def __repr__(self) -> str:
        return f"Hom({self.domain.spec} -> ?, {self.describe()})"


def _element_map(domain: Group, codomain: CayleyGroup, images: dict[str, int]
                 ) -> np.ndarray:
    out = np.empty(domain.order, dtype=np.int32)
    inv = codomain.inv
    for i, word in enumerate(domain.words):
        x = 0
        for gen, e in word:
            g = images[gen]
            step = g if e >= 0 else int(inv[g])
            for _ in range(abs(e)):
                x = int(codomain.mul[x, step])
        out[i] = x
    return out


def _complete_images(domain: Group, codomain: CayleyGroup,
                     images: dict[str, int]) -> dict[str, int]:
    """Fill derived generators (b of the tetrahedral family)."""
    names, _ = presentation(domain.spec)
    if "b" in names and "b" not in images:
        w, a = images["w"], images["a"]
        images = dict(images)
        images["b"] = int(codomain.mul[codomain.mul[w, a], codomain.inv[w]])
    return images


def check_relations(domain: Group, codomain: CayleyGroup,
                    images: dict[str, int]) -> str | None:
    """Name of the first violated defining relation, or None."""
    _, rels = presentation(domain.spec)
    for label, lhs, rhs in rels:
        if domain.eval_word_images(lhs, images, codomain) != \
                domain.eval_word_images(rhs, images, codomain):
            return label
    return None


def make_hom(domain: Group, codomain: CayleyGroup,
             images: dict[str, int | str]) -> Homomorphism:
    """Build and validate a homomorphism from generator images.

    Image values may be codomain element indices or (for Group codomains)
    words in the codomain's generators, e.g. {"b": "b", "a": "b a"}.
    """
    names, _ = presentation(domain.spec)
    resolved: dict[str, int] = {}
    for gen, val in images.items():
        if gen not in names:
            raise SpecInvalid(f"unknown generator {gen!r} for {domain.spec}")
        if isinstance(val, str):
            if not isinstance(codomain, Group):
                raise SpecInvalid("word images need a matrix-group codomain")
            resolved[gen] = codomain.eval_word(val)
        else:
            resolved[gen] = int(val)
    resolved = _complete_images(domain, codomain, resolved)
    missing = [g for g in names if g not in resolved]
    if missing:
        raise SpecInvalid(f"missing images for generators {missing}")
    bad = check_relations(domain, codomain, resolved)
    if bad is not None:
        raise RelationViolated(bad)
    return Homomorphism(domain, codomain, resolved, _element_map(domain, codomain, resolved))


def identity_hom(group: Group) -> Homomorphism:
    images = {g: i for g, i in group.generators.items()}
    return Homomorphism(group, group, images, np.arange(group.order, dtype=np.int32))


def compose(outer: Homomorphism, inner: Homomorphism) -> Homomorphism:
    """outer o inner (apply inner first)."""
    if inner.codomain is not outer.domain:
        raise SpecInvalid("homomorphisms are not composable")
    images = {g: int(outer.map[x]) for g, x in inner.images.items()}
    return Homomorphism(inner.domain, outer.codomain, images, outer.map[inner.map])


def conjugation_hom(group: Group, g: int) -> Homomorphism:
    mapped = group.mul[group.mul[g, np.arange(group.order)], group.inv[g]]
    images = {name: int(mapped[i]) for name, i in group.generators.items()}
    return Homomorphism(group, group, images, mapped.astype(np.int32))


def enumerate_homs(domain: Group, codomain: CayleyGroup,
                   surjective_only: bool = False,
                   bijective_only: bool = False) -> list[Homomorphism]:
    """Complete duplicate-free list of homomorphisms, deterministic order."""
    free = free_generators(domain.spec)
    d_orders = domain.element_orders()
    c_orders = codomain.element_orders()
    commutator_d = domain.commutator_subgroup()
    commutator_c = codomain.commutator_subgroup()

    cands: list[list[int]] = []
    for gen in free:
        gi = domain.generators[gen]
        k = int(d_orders[gi])
        pool = [x for x in range(codomain.order) if k % int(c_orders[x]) == 0]
        if gi in commutator_d:
            pool = [x for x in pool if x in commutator_c]
        if bijective_only:
            pool = [x for x in pool if int(c_orders[x]) == k]
        cands.append(pool)

    total = 1
    for pool in cands:
        total *= max(len(pool), 1)
    if total > ENUM_CAP:
        raise CapExceeded(f"{total} candidate tuples exceed the enumeration cap")

    # which free generators commute in the domain
    commutes = {}
    for i, g1 in enumerate(free):
        for j in range(i):
            g2 = free[j]
            a, b = domain.generators[g1], domain.generators[g2]
            commutes[(j, i)] = int(domain.mul[a, b]) == int(domain.mul[b, a])

    out: list[Homomorphism] = []

    def backtrack(i: int, picked: list[int]):
        if i == len(free):
            images = dict(zip(free, picked))
            images = _complete_images(domain, codomain, images)
            if check_relations(domain, codomain, images) is None:
                hom = Homomorphism(domain, codomain, images,
                                   _element_map(domain, codomain, images))
                out.append(hom)
            return
        for x in cands[i]:
            ok = True
            for j in range(i):
                if commutes.get((j, i)) and \
                        int(codomain.mul[picked[j], x]) != int(codomain.mul[x, picked[j]]):
                    ok = False
                    break
            if ok:
                picked.append(x)
                backtrack(i + 1, picked)
                picked.pop()

    backtrack(0, [])
    if surjective_only:
        out = [h for h in out if h.is_surjective]
    if bijective_only:
        out = [h for h in out if h.is_bijective]
    return out


def automorphism_group(group: Group) -> list[Homomorphism]:
    return enumerate_homs(group, group, bijective_only=True)


def inner_automorphisms(group: Group) -> dict[bytes, Homomorphism]:
    out = {}
    for g in range(group.order):
        hom = conjugation_hom(group, g)
        out.setdefault(hom.key(), hom)
    return out


def is_inner(aut: Homomorphism) -> bool:
    group = aut.domain
    for g in range(group.order):
        mapped = group.mul[group.mul[g, np.arange(group.order)], group.inv[g]]
        if np.array_equal(mapped, aut.map):
            return True
    return False


def conjugate_homs(psi1: Homomorphism, psi2: Homomorphism) -> bool:
    """True iff psi2 = conj_g o psi1 for some g in the codomain."""
    if psi1.domain is not psi2.domain or psi1.codomain is not psi2.codomain:
        return False
    cod = psi1.codomain
    gens = [psi1.images[g] for g in psi1.images]
    want = [psi2.images[g] for g in psi1.images]
    for g in range(cod.order):
        ig = int(cod.inv[g])
        if all(int(cod.mul[cod.mul[g, x], ig]) == y for x, y in zip(gens, want)):
            return True
    return False


@dataclass
class OuterClass:
    """An Inn-coset of automorphisms; deg_bar is filled by the degree engine."""

    representative: Homomorphism
    members: tuple[Homomorphism, ...]
    deg_bar: int | None = None

    def __contains__(self, aut: Homomorphism) -> bool:
        key = aut.key()
        return any(m.key() == key for m in self.members)

    def __len__(self) -> int:
        return len(self.members)


def outer_classes(group: Group, auts: list[Homomorphism] | None = None) -> list[OuterClass]:
    """Partition of Aut into Inn-cosets; count = |Aut|/|Inn|."""
    if auts is None:
        auts = automorphism_group(group)
    inner = inner_automorphisms(group)
    seen: set[bytes] = set()
    classes: list[OuterClass] = []
    for aut in auts:
        if aut.key() in seen:
            continue
        members = []
        keys = set()
        for inn in inner.values():
            comp = compose(inn, aut)
            if comp.key() not in keys:
                keys.add(comp.key())
                members.append(comp)
        seen |= keys
        members.sort(key=lambda h: tuple(h.map))
        classes.append(OuterClass(members[0], tuple(members)))
    classes.sort(key=lambda c: tuple(c.representative.map))
    return classes
