"""Concrete finite subgroups of SO(4) and their Cayley-table structure.

Groups are built by closing the generator matrices under multiplication.
Element identity uses a rounded-matrix fingerprint (1e-6 grid); entries of
distinct elements in these families are separated well above that for
orders up to the default cap, and a ClosureMismatch guard catches any
tolerance failure.  Element 0 is always the identity; ordering is
identity, then generators in declared order, then breadth-first layers,
so rebuilding a group reproduces the same indexing.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from functools import lru_cache
from math import cos, gcd, pi, sin, sqrt

import numpy as np

from .errors import (Ambiguous, CapExceeded, ClosureMismatch, NotNormal,
                     ParseError, SpecInvalid)
from .specs import Family, GroupSpec

DEFAULT_CAP = 2000


def order_cap() -> int:
    return int(os.environ.get("SPHMAP_CAP", DEFAULT_CAP))


# ---------------------------------------------------------------------------
# generator matrices

def rotation2(theta: float) -> np.ndarray:
    return np.array([[cos(theta), -sin(theta)], [sin(theta), cos(theta)]])


def block_diag2(top: np.ndarray, bottom: np.ndarray) -> np.ndarray:
    out = np.zeros((4, 4))
    out[:2, :2] = top
    out[2:, 2:] = bottom
    return out


def right_mult(g0: float, g1: float, g2: float, g3: float) -> np.ndarray:
    """Matrix of x -> x*g on the quaternions in the basis (1, i, j, k)."""
    return np.array([
        [g0, -g1, -g2, -g3],
        [g1, g0, g3, -g2],
        [g2, -g3, g0, g1],
        [g3, g2, -g1, g0]])


_GOLDEN = (1 + sqrt(5)) / 2


def generator_matrices(spec: GroupSpec) -> dict[str, np.ndarray]:
    """Generator name -> SO(4) matrix, in declared order (cofactor v first).

    The binary icosahedral generator ``a`` is the icosian
    -(phi^-1 i + phi j + k)/2 acting by right multiplication; together
    with ``b`` = (1+i+j+k)/2 it satisfies a^2 = b^3 = (ab)^5, a^4 = 1 and
    closes at order 120.  The tetrahedral ``w`` carries the extra
    left-rotation block only for q >= 2; at q = 1 the pure quaternion
    already has order 3 and the extra block would break freeness.
    """
    f = spec.family
    gens: dict[str, np.ndarray] = {}
    if f is Family.CYCLIC:
        r1, r2 = spec.lens_rotations
        gens["c"] = block_diag2(rotation2(2 * pi * r1 / spec.m),
                                rotation2(2 * pi * r2 / spec.m))
        return gens
    if spec.m > 1:
        gens["v"] = block_diag2(rotation2(2 * pi / spec.m), rotation2(2 * pi / spec.m))
    if f is Family.BINARY_DIHEDRAL:
        n = spec.n
        gens["b"] = np.array([
            [cos(pi / n), 0, 0, -sin(pi / n)],
            [0, cos(pi / n), sin(pi / n), 0],
            [0, -sin(pi / n), cos(pi / n), 0],
            [sin(pi / n), 0, 0, cos(pi / n)]])
        gens["a"] = block_diag2(rotation2(pi / 2), rotation2(-pi / 2))
    elif f is Family.BINARY_OCTAHEDRAL:
        gens["b"] = 0.5 * np.array([
            [1, -1, -1, -1], [1, 1, 1, -1], [1, -1, 1, 1], [1, 1, -1, 1]], dtype=float)
        gens["a"] = (1 / sqrt(2)) * np.array([
            [0, 1, 1, 0], [-1, 0, 0, 1], [-1, 0, 0, -1], [0, -1, 1, 0]], dtype=float)
    elif f is Family.BINARY_ICOSAHEDRAL:
        gens["b"] = right_mult(0.5, 0.5, 0.5, 0.5)
        gens["a"] = right_mult(0.0, -0.5 / _GOLDEN, -0.5 * _GOLDEN, -0.5)
    elif f is Family.GENERALIZED_TETRAHEDRAL:
        q = spec.q
        a = block_diag2(rotation2(-pi / 2), rotation2(pi / 2))
        m0 = 0.5 * np.array([
            [-1, -1, -1, -1], [1, -1, 1, -1], [1, -1, -1, 1], [1, 1, -1, -1]], dtype=float)
        w = m0 if q == 1 else m0 @ block_diag2(rotation2(2 * pi / 3 ** q),
                                               rotation2(2 * pi / 3 ** q))
        gens["b"] = w @ a @ w.T
        gens["a"] = a
        gens["w"] = w
    else:
        n, q = spec.n, spec.q
        gens["u"] = block_diag2(rotation2(2 * pi / n), rotation2(-2 * pi / n))
        w = np.zeros((4, 4))
        w[:2, 2:] = rotation2(pi / 2 ** (q - 1))
        w[2:, :2] = rotation2(pi / 2 ** (q - 1))
        gens["w"] = w
    return gens


def presentation(spec: GroupSpec) -> tuple[list[str], list[tuple[str, str, str]]]:
    """(generator names, relations) per Table-1 presentations.

    Each relation is (label, lhs-word, rhs-word); a homomorphism is valid
    iff every lhs and rhs evaluate to the same image.
    """
    f = spec.family
    rels: list[tuple[str, str, str]] = []
    if f is Family.CYCLIC:
        return ["c"], [("c^m = 1", f"c^{spec.m}", "1")]
    if f is Family.BINARY_DIHEDRAL:
        names = ["b", "a"]
        rels = [("a^2 = b^n", "a^2", f"b^{spec.n}"),
                ("(ab)^2 = a^2", "a b a b", "a^2"),
                ("a^4 = 1", "a^4", "1")]
    elif f is Family.BINARY_OCTAHEDRAL:
        names = ["b", "a"]
        rels = [("a^2 = b^3", "a^2", "b^3"),
                ("(ab)^4 = a^2", "a b a b a b a b", "a^2"),
                ("a^4 = 1", "a^4", "1")]
    elif f is Family.BINARY_ICOSAHEDRAL:
        names = ["b", "a"]
        rels = [("a^2 = b^3", "a^2", "b^3"),
                ("(ab)^5 = a^2", "a b a b a b a b a b", "a^2"),
                ("a^4 = 1", "a^4", "1")]
    elif f is Family.GENERALIZED_TETRAHEDRAL:
        names = ["b", "a", "w"]
        rels = [("a^2 = b^2", "a^2", "b^2"),
                ("(ab)^2 = a^2", "a b a b", "a^2"),
                ("a^4 = 1", "a^4", "1"),
                ("w^(3^q) = 1", f"w^{3 ** spec.q}", "1"),
                ("wa = bw", "w a", "b w"),
                ("wb = abw", "w b", "a b w")]
    else:
        names = ["u", "w"]
        rels = [("u^n = 1", f"u^{spec.n}", "1"),
                ("w^(2^q) = 1", f"w^{2 ** spec.q}", "1"),
                ("uwu = w", "u w u", "w")]
    if spec.m > 1:
        names = ["v"] + names
        rels = [("v^m = 1", f"v^{spec.m}", "1")] + \
            [(f"v{g} = {g}v", f"v {g}", f"{g} v") for g in names[1:]] + rels
    return names, rels


def free_generators(spec: GroupSpec) -> list[str]:
    """Generators whose images determine a homomorphism (b of T' is derived)."""
    names, _ = presentation(spec)
    if spec.family is Family.GENERALIZED_TETRAHEDRAL:
        return [g for g in names if g != "b"]
    return names


# ---------------------------------------------------------------------------
# word handling

Word = tuple[tuple[str, int], ...]  # ((gen, exponent), ...)


def parse_word(text: str) -> Word:
    """Parse 'b^2 a w^-1' style words; '1' is the empty word."""
    text = text.strip()
    if text in ("", "1"):
        return ()
    out = []
    for tok in text.split():
        if "^" in tok:
            gen, exp = tok.split("^", 1)
            try:
                e = int(exp)
            except ValueError as exc:
                raise ParseError(f"bad exponent in {tok!r}") from exc
        else:
            gen, e = tok, 1
        if not gen.isidentifier():
            raise ParseError(f"bad generator name in {tok!r}")
        out.append((gen, e))
    return tuple(out)


def word_str(word: Word) -> str:
    if not word:
        return "1"
    return " ".join(g if e == 1 else f"{g}^{e}" for g, e in word)


# ---------------------------------------------------------------------------
# Cayley-table groups

class CayleyGroup:
    """A finite group given by its multiplication table on 0..order-1."""

    def __init__(self, mul: np.ndarray):
        self.mul = np.asarray(mul, dtype=np.int32)
        self.order = self.mul.shape[0]
        self._inv = None
        self._orders = None
        self._classes = None

    @property
    def inv(self) -> np.ndarray:
        if self._inv is None:
            inv = np.empty(self.order, dtype=np.int32)
            for i in range(self.order):
                inv[i] = int(np.where(self.mul[i] == 0)[0][0])
            self._inv = inv
        return self._inv

    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            orders = np.empty(self.order, dtype=np.int32)
            for i in range(self.order):
                k, x = 1, i
                while x != 0:
                    x = int(self.mul[x, i])
                    k += 1
                orders[i] = k
            self._orders = orders
        return self._orders

    def power(self, i: int, e: int) -> int:
        if e < 0:
            i, e = int(self.inv[i]), -e
        e %= int(self.element_orders()[i])
        x = 0
        for _ in range(e):
            x = int(self.mul[x, i])
        return x

    def conjugacy_classes(self) -> list["ConjugacyClass"]:
        if self._classes is None:
            n = self.order
            seen = np.zeros(n, dtype=bool)
            glist = np.arange(n)
            out = []
            orders = self.element_orders()
            for x in range(n):
                if seen[x]:
                    continue
                members = np.unique(self.mul[self.mul[glist, x], self.inv[glist]])
                seen[members] = True
                out.append(ConjugacyClass(int(members.min()),
                                          tuple(int(m) for m in members),
                                          int(orders[x])))
            out.sort(key=lambda c: c.representative)
            self._classes = out
        return self._classes

    def class_of(self, x: int) -> "ConjugacyClass":
        for c in self.conjugacy_classes():
            if x in c.member_set:
                return c
        raise IndexError(x)

    def is_abelian(self) -> bool:
        return bool(np.array_equal(self.mul, self.mul.T))

    def center(self) -> frozenset[int]:
        keep = np.all(self.mul == self.mul.T, axis=1)
        return frozenset(int(i) for i in np.where(keep)[0])

    def commutator_subgroup(self) -> frozenset[int]:
        n = self.order
        comms = set()
        for g in range(n):
            gh = self.mul[g]                      # g*h over all h
            ghg = self.mul[gh, self.inv[g]]       # g*h*g^-1
            row = self.mul[ghg, self.inv]         # g*h*g^-1*h^-1
            comms.update(int(x) for x in row)
        return self.subgroup_closure(comms)

    def subgroup_closure(self, seed) -> frozenset[int]:
        gens = sorted({int(s) for s in seed} - {0})
        have = {0}
        frontier = [0]
        while frontier:
            new = []
            for x in frontier:
                for g in gens:
                    y = int(self.mul[x, g])
                    if y not in have:
                        have.add(y)
                        new.append(y)
            frontier = new
        return frozenset(have)

    def cyclic_subgroup(self, x: int) -> frozenset[int]:
        out = {0}
        y = x
        while y != 0:
            out.add(y)
            y = int(self.mul[y, x])
        return frozenset(out)

    def is_normal(self, sub: frozenset[int]) -> bool:
        arr = np.fromiter(sub, dtype=np.int32)
        for g in range(self.order):
            conj = self.mul[self.mul[g, arr], self.inv[g]]
            if not all(int(c) in sub for c in conj):
                return False
        return True

    def quotient(self, normal: frozenset[int]) -> "QuotientGroup":
        if not self.is_normal(normal):
            raise NotNormal(f"subgroup of order {len(normal)} is not normal")
        return QuotientGroup(self, normal)

    def abelian_invariants(self) -> list[int]:
        """Invariant factors d1 | d2 | ... | dk of an abelian group."""
        if not self.is_abelian():
            raise SpecInvalid("abelian_invariants requires an abelian group")
        g: CayleyGroup = self
        factors = []
        while g.order > 1:
            orders = g.element_orders()
            x = int(np.argmax(orders))
            factors.append(int(orders[x]))
            g = g.quotient(g.cyclic_subgroup(x))
        return factors[::-1]

    def abelianization_invariants(self) -> list[int]:
        q = self.quotient(self.commutator_subgroup())
        return q.abelian_invariants()


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: tuple[int, ...]
    element_order: int

    @property
    def member_set(self) -> frozenset[int]:
        return frozenset(self.members)

    def __len__(self) -> int:
        return len(self.members)


class QuotientGroup(CayleyGroup):
    """Coset group of a normal subgroup; elements are coset labels."""

    def __init__(self, parent: CayleyGroup, normal: frozenset[int]):
        sub = np.fromiter(sorted(normal), dtype=np.int32)
        labels = parent.mul[:, sub].min(axis=1)
        reps = np.unique(labels)  # sorted, so the identity coset (label 0) is first
        pos = {int(r): i for i, r in enumerate(reps)}
        k = len(reps)
        mul = np.empty((k, k), dtype=np.int32)
        for i, ri in enumerate(reps):
            mul[i] = [pos[int(labels[parent.mul[ri, rj]])] for rj in reps]
        super().__init__(mul)
        self.parent = parent
        self.normal = normal
        self.coset_label = labels
        self.coset_reps = reps
        self.coset_index = pos

    def project(self, x: int) -> int:
        return self.coset_index[int(self.coset_label[x])]


# ---------------------------------------------------------------------------
# matrix groups

def _fingerprint(mat: np.ndarray) -> bytes:
    return (np.round(mat, 6) + 0.0).tobytes()


class Group(CayleyGroup):
    """A spherical fundamental group realized by SO(4) matrices."""

    def __init__(self, spec: GroupSpec, matrices: np.ndarray,
                 generators: dict[str, int], words: list[Word], mul: np.ndarray):
        super().__init__(mul)
        self.spec = spec
        self.matrices = matrices
        self.generators = generators
        self.words = words
        self._normal_forms: list[Word] | None = None

    def __repr__(self) -> str:
        return f"Group({self.spec}, order={self.order})"

    def generator_order(self, name: str) -> int:
        return int(self.element_orders()[self.generators[name]])

    def eval_word(self, word: Word | str) -> int:
        if isinstance(word, str):
            word = parse_word(word)
        x = 0
        for gen, exp in word:
            g = self.generators[gen]
            step = g if exp >= 0 else int(self.inv[g])
            for _ in range(abs(exp)):
                x = int(self.mul[x, step])
        return x

    def eval_word_images(self, word: Word | str, images: dict[str, int],
                         codomain: CayleyGroup) -> int:
        """Evaluate a word with generators replaced by images in codomain."""
        if isinstance(word, str):
            word = parse_word(word)
        x = 0
        for gen, exp in word:
            g = images[gen]
            step = g if exp >= 0 else int(codomain.inv[g])
            for _ in range(abs(exp)):
                x = int(codomain.mul[x, step])
        return x

    # -- normal forms ------------------------------------------------------

    def canonical_word(self, idx: int) -> str:
        forms = self._normal_form_table()
        return word_str(forms[idx])

    def _normal_form_table(self) -> list[Word]:
        if self._normal_forms is not None:
            return self._normal_forms
        spec = self.spec
        forms: list[Word | None] = [None] * self.order
        fam = spec.family

        def put(word: Word):
            i = self.eval_word(word)
            if forms[i] is None:
                forms[i] = word

        def with_cofactor(base_words):
            for w in base_words:
                if spec.m > 1:
                    for j in range(spec.m):
                        put(((("v", j),) if j else ()) + w)
                else:
                    put(w)

        if fam is Family.CYCLIC:
            for s in range(spec.m):
                put((("c", s),) if s else ())
        elif fam is Family.BINARY_DIHEDRAL:
            base = []
            for s in range(2 * spec.n):
                head = ((("b", s),) if s else ())
                base.append(head)
                base.append(head + (("a", 1),))
            with_cofactor(base)
        elif fam is Family.GENERALIZED_TETRAHEDRAL:
            base = []
            for s in range(4):
                for mid in ((), (("a", 1),)):
                    for t in range(3 ** spec.q):
                        base.append(((("b", s),) if s else ()) + mid +
                                    ((("w", t),) if t else ()))
            with_cofactor(base)
        elif fam is Family.DICYCLIC:
            base = []
            for s in range(spec.n):
                for t in range(2 ** spec.q):
                    base.append(((("u", s),) if s else ()) +
                                ((("w", t),) if t else ()))
            with_cofactor(base)
        else:
            # O*/I*: shortest words in b, a, b^-1, a^-1 by breadth-first search
            base_order = spec.base_order
            letters = [("b", 1), ("a", 1), ("b", -1), ("a", -1)]
            found: dict[int, Word] = {0: ()}
            frontier = [()]
            while len(found) < base_order:
                new = []
                for w in frontier:
                    for gen, e in letters:
                        w2 = w + ((gen, e),)
                        i = self.eval_word(w2)
                        if i not in found:
                            found[i] = w2
                            new.append(w2)
                frontier = new
            base = [found[i] for i in sorted(found)]
            with_cofactor(base)
        if any(f is None for f in forms):
            raise ClosureMismatch("normal forms did not cover the group")
        # compress consecutive equal letters for readability
        self._normal_forms = [self._tidy(w) for w in forms]
        return self._normal_forms

    @staticmethod
    def _tidy(word: Word) -> Word:
        out: list[tuple[str, int]] = []
        for gen, e in word:
            if out and out[-1][0] == gen and (out[-1][1] >= 0) == (e >= 0):
                out[-1] = (gen, out[-1][1] + e)
            else:
                out.append((gen, e))
        return tuple((g, e) for g, e in out if e != 0)


@lru_cache(maxsize=256)
def _build_group_cached(spec_str: str) -> Group:
    from .specs import parse_group
    return _build_group(parse_group(spec_str))


def build_group(spec: GroupSpec | str, cap: int | None = None) -> Group:
    """Construct the Group for a spec; results are cached per spec string."""
    from .specs import parse_group
    if isinstance(spec, str):
        spec = parse_group(spec)
    cap = order_cap() if cap is None else cap
    if spec.order > cap:
        raise CapExceeded(f"group order {spec.order} exceeds cap {cap}")
    return _build_group_cached(str(spec))


def _build_group(spec: GroupSpec) -> Group:
    gens = generator_matrices(spec)
    mats = [np.eye(4)]
    words: list[Word] = [()]
    index = {_fingerprint(mats[0]): 0}
    for name, mat in gens.items():
        k = _fingerprint(mat)
        if k not in index:
            index[k] = len(mats)
            mats.append(mat)
            words.append(((name, 1),))
    frontier = list(range(1, len(mats)))
    while frontier:
        new = []
        for i in frontier:
            for name, mat in gens.items():
                prod = mats[i] @ mat
                k = _fingerprint(prod)
                if k not in index:
                    if len(mats) >= spec.order + 1:
                        raise ClosureMismatch(
                            f"{spec}: closure exceeds theoretical order {spec.order}")
                    index[k] = len(mats)
                    mats.append(prod)
                    words.append(words[i] + ((name, 1),))
                    new.append(len(mats) - 1)
        frontier = new
    n = len(mats)
    if n != spec.order:
        raise ClosureMismatch(f"{spec}: closed at order {n}, expected {spec.order}")
    stack = np.stack(mats)
    mul = np.empty((n, n), dtype=np.int32)
    for i in range(n):
        prods = np.einsum("ab,nbc->nac", stack[i], stack)
        keys = np.round(prods, 6) + 0.0
        for j in range(n):
            k = keys[j].tobytes()
            if k not in index:
                raise ClosureMismatch(f"{spec}: product fingerprint missed at ({i},{j})")
            mul[i, j] = index[k]
    genidx = {name: index[_fingerprint(mat)] for name, mat in gens.items()}
    tidy = [Group._tidy(w) for w in words]
    return Group(spec, stack, genidx, tidy, mul)


# ---------------------------------------------------------------------------
# subgroups

@dataclass(frozen=True)
class SubgroupRecord:
    elements: frozenset[int]
    is_normal: bool
    class_id: int
    classification: GroupSpec | None

    @property
    def order(self) -> int:
        return len(self.elements)


def subgroups(group: CayleyGroup, cap: int | None = None,
              with_classification: bool = True) -> list[SubgroupRecord]:
    """All subgroups, via closures of conjugacy representatives paired with
    arbitrary elements, completed by conjugation orbits.

    Sufficient for these groups: every subgroup is generated by at most
    two elements (cross-checked against triple closures in the tests).
    """
    cap = order_cap() if cap is None else cap
    if group.order > cap:
        raise CapExceeded(f"subgroup enumeration above cap {cap}")
    n = group.order
    found: set[frozenset[int]] = {frozenset({0}), frozenset(range(n))}
    for x in range(n):
        found.add(group.cyclic_subgroup(x))
    reps = [c.representative for c in group.conjugacy_classes()]
    for x in reps:
        for y in range(n):
            found.add(group.subgroup_closure({x, y}))
    # every subgroup class has a representative in `found`; full conjugation
    # orbits are expanded while grouping below
    remaining = set(found)
    records: list[SubgroupRecord] = []
    class_id = 0
    for sub in sorted(found, key=lambda s: (len(s), sorted(s))):
        if sub not in remaining:
            continue
        orbit = {sub}
        arr = np.fromiter(sub, dtype=np.int32)
        for g in range(n):
            orbit.add(frozenset(int(i) for i in group.mul[group.mul[g, arr], group.inv[g]]))
        remaining -= orbit
        normal = len(orbit) == 1 and group.is_normal(sub)
        cls = classify_subgroup(group, sub) if with_classification else None
        for member in sorted(orbit, key=sorted):
            records.append(SubgroupRecord(member, normal, class_id, cls))
        class_id += 1
    records.sort(key=lambda r: (r.order, sorted(r.elements)))
    return records


def maximal_cyclic_subgroups(group: CayleyGroup) -> list[frozenset[int]]:
    """Conjugacy representatives of maximal cyclic subgroups."""
    cached = getattr(group, "_max_cyc_reps", None)
    if cached is not None:
        return cached
    cyclics = {group.cyclic_subgroup(x) for x in range(group.order)}
    maximal = [s for s in cyclics if not any(s < t for t in cyclics if t != s)]
    reps: list[frozenset[int]] = []
    seen: set[frozenset[int]] = set()
    for sub in sorted(maximal, key=lambda s: (len(s), sorted(s))):
        if sub in seen:
            continue
        arr = np.fromiter(sub, dtype=np.int32)
        orbit = {frozenset(int(i) for i in group.mul[group.mul[g, arr], group.inv[g]])
                 for g in range(group.order)}
        seen |= orbit
        reps.append(sub)
    group._max_cyc_reps = reps  # type: ignore[attr-defined]
    return reps


def cyclic_generator(group: CayleyGroup, sub: frozenset[int]) -> int | None:
    """An element generating sub, or None if sub is not cyclic."""
    orders = group.element_orders()
    h = len(sub)
    for x in sorted(sub):
        if int(orders[x]) == h:
            return x
    return None


# ---------------------------------------------------------------------------
# classification

def _fingerprint_invariants(g: CayleyGroup) -> tuple:
    sizes = tuple(sorted(len(c) for c in g.conjugacy_classes()))
    orders = tuple(sorted(int(o) for o in g.element_orders()))
    return (g.order, sizes, orders, len(g.center()),
            tuple(g.abelianization_invariants()))


@lru_cache(maxsize=256)
def _spec_fingerprint(spec_str: str) -> tuple:
    return _fingerprint_invariants(build_group(spec_str))


def candidate_specs(order: int) -> list[GroupSpec]:
    """Non-cyclic spherical specs of the given order."""
    out = []
    for n in range(2, order // 4 + 1, 2):
        if order % (4 * n) == 0:
            m = order // (4 * n)
            if gcd(m, 4 * n) == 1:
                out.append(GroupSpec(Family.BINARY_DIHEDRAL, m, n=n))
    for base, fam in ((48, Family.BINARY_OCTAHEDRAL), (120, Family.BINARY_ICOSAHEDRAL)):
        if order % base == 0 and gcd(order // base, base) == 1:
            out.append(GroupSpec(fam, order // base))
    q = 1
    while 8 * 3 ** q <= order:
        base = 8 * 3 ** q
        if order % base == 0 and gcd(order // base, base) == 1:
            out.append(GroupSpec(Family.GENERALIZED_TETRAHEDRAL, order // base, q=q))
        q += 1
    two_part = order & -order
    qq = two_part.bit_length() - 1
    if qq > 1:
        odd = order >> qq
        for n in range(3, odd + 1, 2):
            if odd % n == 0 and gcd(odd // n, n) == 1:
                out.append(GroupSpec(Family.DICYCLIC, odd // n, n=n, q=qq))
    return out


def classify(g: CayleyGroup) -> GroupSpec | None:
    """Recognize a Cayley group as a spherical fundamental group.

    Returns the Table-1 normal form (odd binary dihedral cases fall under
    the dicyclic family, the binary tetrahedral group under T'(1)), or
    None when the group is not spherical.  Fingerprint matches are
    confirmed by an explicit isomorphism search.
    """
    if g.order == 1:
        return GroupSpec(Family.CYCLIC, 1)
    if g.is_abelian():
        inv = g.abelian_invariants()
        return GroupSpec(Family.CYCLIC, g.order) if len(inv) == 1 else None
    fp = _fingerprint_invariants(g)
    hits = []
    for cand in candidate_specs(g.order):
        if _spec_fingerprint(str(cand)) == fp:
            if find_isomorphism(build_group(cand), g) is not None:
                hits.append(cand)
    if not hits:
        return None
    if len(hits) > 1:
        raise Ambiguous(f"order-{g.order} group matches {hits}")
    return hits[0]


def classify_subgroup(group: CayleyGroup, sub: frozenset[int]) -> GroupSpec | None:
    return classify(subcayley(group, sub))


def subcayley(group: CayleyGroup, sub: frozenset[int]) -> CayleyGroup:
    """The subgroup as its own CayleyGroup (element 0 stays the identity)."""
    elems = [0] + sorted(x for x in sub if x != 0)
    pos = {x: i for i, x in enumerate(elems)}
    k = len(elems)
    mul = np.empty((k, k), dtype=np.int32)
    for i, x in enumerate(elems):
        mul[i] = [pos[int(group.mul[x, y])] for y in elems]
    cg = CayleyGroup(mul)
    cg.parent_elements = elems  # type: ignore[attr-defined]
    return cg


def generating_set(g: CayleyGroup, limit: int = 3) -> list[int]:
    """A small generating set, preferring high element orders."""
    order_of = g.element_orders()
    ranked = sorted(range(g.order), key=lambda x: (-int(order_of[x]), x))
    for x in ranked:
        if len(g.cyclic_subgroup(x)) == g.order:
            return [x]
    for x in ranked[: min(g.order, 40)]:
        for y in ranked:
            if len(g.subgroup_closure({x, y})) == g.order:
                return [x, y]
    for x in ranked[: min(g.order, 20)]:
        for y in ranked[: min(g.order, 40)]:
            for z in ranked:
                if len(g.subgroup_closure({x, y, z})) == g.order:
                    return [x, y, z]
    raise Ambiguous(f"no generating set of size <= {limit} found")


def find_isomorphism(a: Group, b: CayleyGroup) -> dict[str, int] | None:
    """Generator-image map realizing an isomorphism a -> b, or None.

    ``a`` must be a built Group (its presentation drives the search);
    ``b`` only needs a Cayley table of the same order.
    """
    if a.order != b.order:
        return None
    names, rels = presentation(a.spec)
    free = free_generators(a.spec)
    a_orders = a.element_orders()
    b_orders = b.element_orders()
    b_class_size = {}
    for c in b.conjugacy_classes():
        for x in c.members:
            b_class_size[x] = len(c)
    a_class_size = {}
    for c in a.conjugacy_classes():
        for x in c.members:
            a_class_size[x] = len(c)

    cands = {}
    for gname in free:
        gi = a.generators[gname]
        want = (int(a_orders[gi]), a_class_size[gi])
        cands[gname] = [x for x in range(b.order)
                        if (int(b_orders[x]), b_class_size[x]) == want]

    def derived_images(images: dict[str, int]) -> dict[str, int] | None:
        if "b" in names and "b" not in images:  # T' family: b = w a w^-1
            w, aa = images["w"], images["a"]
            images = dict(images)
            images["b"] = int(b.mul[b.mul[w, aa], b.inv[w]])
        return images

    def relations_hold(images: dict[str, int]) -> bool:
        for _, lhs, rhs in rels:
            if a.eval_word_images(lhs, images, b) != a.eval_word_images(rhs, images, b):
                return False
        return True

    def backtrack(i: int, images: dict[str, int]):
        if i == len(free):
            full = derived_images(images)
            if full is None or not relations_hold(full):
                return None
            if len(b.subgroup_closure(set(full.values()))) != b.order:
                return None
            return full
        for x in cands[free[i]]:
            images[free[i]] = x
            got = backtrack(i + 1, images)
            if got is not None:
                return got
            del images[free[i]]
        return None

    return backtrack(0, {})


def find_embedding(a: Group, parent: CayleyGroup, sub: frozenset[int]) -> dict[str, int] | None:
    """Isomorphism of a onto the subgroup ``sub`` of parent (parent indices)."""
    sc = subcayley(parent, sub)
    images = find_isomorphism(a, sc)
    if images is None:
        return None
    elems = sc.parent_elements  # type: ignore[attr-defined]
    return {g: elems[i] for g, i in images.items()}


# ---------------------------------------------------------------------------
# characteristic data

def characteristic_subgroups(group: CayleyGroup) -> dict:
    """Commutator subgroup, center and abelianization invariant factors."""
    comm = group.commutator_subgroup()
    return {
        "commutator": comm,
        "center": group.center(),
        "abelianization": group.quotient(comm).abelian_invariants(),
    }
