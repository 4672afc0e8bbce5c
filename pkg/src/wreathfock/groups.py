"""Finite groups with conjugacy data, class functions and induction machinery.

Groups are closed multiplication tables over element ids 0..n-1 with 0 the
identity.  Conjugacy classes are found by brute-force orbit closure, which
is fine at the scales this library targets (|G| up to a few thousand).
Class functions are stored per conjugacy class with cyclotomic values.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import lcm

from .scalars import Cyclotomic, align, cyc_eq


class GroupError(ValueError):
    pass


class FiniteGroup:
    """A finite group given by its full Cayley table.

    Element 0 is the identity; conjugacy classes are ordered by their
    smallest member id, so class 0 is always the identity class.
    """

    def __init__(self, table, name: str = "G"):
        table = tuple(tuple(row) for row in table)
        n = len(table)
        if n == 0 or any(len(row) != n for row in table):
            raise GroupError("Cayley table must be square and nonempty")
        for row in table:
            for v in row:
                if not isinstance(v, int) or not 0 <= v < n:
                    raise GroupError("table entries must be ids in 0..n-1")
        if any(table[0][j] != j for j in range(n)) or \
           any(table[i][0] != i for i in range(n)):
            raise GroupError("element 0 must be a two-sided identity")
        inv = [None] * n
        for i in range(n):
            for j in range(n):
                if table[i][j] == 0 and table[j][i] == 0:
                    inv[i] = j
                    break
            if inv[i] is None:
                raise GroupError(f"element {i} has no two-sided inverse")
        for a in range(n):
            for b in range(n):
                ab = table[a][b]
                for c in range(n):
                    if table[ab][c] != table[a][table[b][c]]:
                        raise GroupError(
                            f"table is not associative at ({a},{b},{c})")
        self.order = n
        self.table = table
        self.inverse = tuple(inv)
        self.name = name
        self._init_conjugacy()
        self._init_exponent()

    def _init_conjugacy(self):
        n = self.order
        seen = [False] * n
        classes = []
        for g in range(n):
            if seen[g]:
                continue
            orbit = {g}
            frontier = [g]
            while frontier:
                x = frontier.pop()
                for y in range(n):
                    z = self.table[self.table[y][x]][self.inverse[y]]
                    if z not in orbit:
                        orbit.add(z)
                        frontier.append(z)
            cls = tuple(sorted(orbit))
            for x in cls:
                seen[x] = True
            classes.append(cls)
        classes.sort(key=lambda c: c[0])
        self.classes = tuple(classes)
        self.num_classes = len(classes)
        class_of = [0] * n
        for idx, cls in enumerate(classes):
            for x in cls:
                class_of[x] = idx
        self.class_of = tuple(class_of)
        self.class_reps = tuple(cls[0] for cls in classes)
        self.centralizer_orders = tuple(n // len(cls) for cls in classes)

    def _init_exponent(self):
        e = 1
        orders = []
        for g in range(self.order):
            k, x = 1, g
            while x != 0:
                x = self.table[x][g]
                k += 1
            orders.append(k)
            e = lcm(e, k)
        self.element_orders = tuple(orders)
        self.exponent = e

    # -- element arithmetic ------------------------------------------------

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inv(self, a: int) -> int:
        return self.inverse[a]

    def power(self, g: int, k: int) -> int:
        k %= self.element_orders[g]
        out = 0
        for _ in range(k):
            out = self.table[out][g]
        return out

    def conj(self, x: int, g: int) -> int:
        """x g x^-1."""
        return self.table[self.table[x][g]][self.inverse[x]]

    def class_size(self, c: int) -> int:
        return len(self.classes[c])

    def zeta(self, c: int) -> int:
        """Order of the centralizer of an element in class c."""
        return self.centralizer_orders[c]

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"FiniteGroup({self.name}, order={self.order}, classes={self.num_classes})"

    def to_json(self) -> str:
        return json.dumps({"order": self.order,
                           "table": [list(r) for r in self.table]})


# -- constructors ----------------------------------------------------------

def group_from_cayley(table, name: str = "G") -> FiniteGroup:
    return FiniteGroup(table, name=name)


def group_from_cayley_json(text: str, name: str = "G") -> FiniteGroup:
    data = json.loads(text)
    if not isinstance(data, dict) or "table" not in data:
        raise GroupError("expected JSON object with 'order' and 'table'")
    table = data["table"]
    if "order" in data and len(table) != data["order"]:
        raise GroupError("declared order does not match table size")
    return FiniteGroup(table, name=name)


def group_from_permutations(generators, degree: int, limit: int = 100_000,
                            name: str = "perm") -> FiniteGroup:
    """Close a set of 0-indexed permutations of {0..degree-1} under product."""
    gens = []
    for g in generators:
        p = tuple(g)
        if sorted(p) != list(range(degree)):
            raise GroupError(f"not a permutation of 0..{degree - 1}: {g}")
        gens.append(p)
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        p = frontier.pop()
        for g in gens:
            q = tuple(p[g[i]] for i in range(degree))
            if q not in elems:
                if len(elems) >= limit:
                    raise GroupError(f"closure exceeds limit {limit}")
                elems.add(q)
                frontier.append(q)
    ordered = [ident] + sorted(elems - {ident})
    index = {p: i for i, p in enumerate(ordered)}
    table = [[index[tuple(a[b[i]] for i in range(degree))] for b in ordered]
             for a in ordered]
    return FiniteGroup(table, name=name)


def group_from_permutations_json(text: str, name: str = "perm") -> FiniteGroup:
    data = json.loads(text)
    if not isinstance(data, dict) or "generators" not in data or "degree" not in data:
        raise GroupError("expected JSON object with 'degree' and 'generators'")
    return group_from_permutations(data["generators"], data["degree"], name=name)


@lru_cache(maxsize=None)
def trivial_group() -> FiniteGroup:
    return FiniteGroup(((0,),), name="1")


@lru_cache(maxsize=None)
def cyclic(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic(n) needs n >= 1")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, name=f"Z{n}")


@lru_cache(maxsize=None)
def symmetric(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("symmetric(n) needs n >= 1")
    perms = sorted(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [[index[tuple(a[b[i]] for i in range(n))] for b in perms]
             for a in perms]
    return FiniteGroup(table, name=f"S{n}")


@lru_cache(maxsize=None)
def dihedral(n: int) -> FiniteGroup:
    """Dihedral group of order 2n: r^n = s^2 = 1, s r s = r^-1."""
    if n < 1:
        raise GroupError("dihedral(n) needs n >= 1")

    def mul(a, b):
        k, e = a
        l, d = b
        if e == 0:
            return ((k + l) % n, d)
        return ((k - l) % n, 1 - d)

    elems = [(k, e) for e in (0, 1) for k in range(n)]
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, name=f"D{n}")


@lru_cache(maxsize=None)
def binary_dihedral(m: int) -> FiniteGroup:
    """Generalized quaternion group of order 4m: a^2m = 1, b^2 = a^m,
    b a b^-1 = a^-1.  Has m + 3 conjugacy classes (type D_{m+2})."""
    if m < 1:
        raise GroupError("binary_dihedral(m) needs m >= 1")
    n = 2 * m

    def mul(a, b):
        k, e = a
        l, d = b
        if e == 0:
            return ((k + l) % n, d)
        if d == 0:
            return ((k - l) % n, 1)
        return ((k - l + m) % n, 0)

    elems = [(k, e) for e in (0, 1) for k in range(n)]
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return FiniteGroup(table, name=f"BD{m}")


def _sl2(p: int, name: str) -> FiniteGroup:
    mats = []
    for a in range(p):
        for b in range(p):
            for c in range(p):
                for d in range(p):
                    if (a * d - b * c) % p == 1:
                        mats.append((a, b, c, d))
    ident = (1, 0, 0, 1)
    mats = [ident] + sorted(m for m in mats if m != ident)
    index = {m: i for i, m in enumerate(mats)}

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % p, (a * f + b * h) % p,
                (c * e + d * g) % p, (c * f + d * h) % p)

    table = [[index[mul(x, y)] for y in mats] for x in mats]
    return FiniteGroup(table, name=name)


@lru_cache(maxsize=None)
def sl2_f3() -> FiniteGroup:
    """Binary tetrahedral group, order 24, 7 classes (type E6)."""
    return _sl2(3, "SL2F3")


@lru_cache(maxsize=None)
def sl2_f5() -> FiniteGroup:
    """Binary icosahedral group, order 120, 9 classes (type E8)."""
    return _sl2(5, "SL2F5")


@lru_cache(maxsize=None)
def binary_octahedral() -> FiniteGroup:
    """Binary octahedral group, order 48, 8 classes (type E7).

    Built from exact quaternion arithmetic over Q(sqrt2): the binary
    tetrahedral units together with (1+i)/sqrt2.
    """
    # numbers a + b*sqrt2 as (a, b) pairs of Fractions
    def nmul(x, y):
        return (x[0] * y[0] + 2 * x[1] * y[1], x[0] * y[1] + x[1] * y[0])

    def nadd(x, y):
        return (x[0] + y[0], x[1] + y[1])

    def nneg(x):
        return (-x[0], -x[1])

    zero = (Fraction(0), Fraction(0))

    def qmul(q, r):
        a, b, c, d = q
        e, f, g, h = r
        w = nadd(nadd(nmul(a, e), nneg(nmul(b, f))),
                 nadd(nneg(nmul(c, g)), nneg(nmul(d, h))))
        x = nadd(nadd(nmul(a, f), nmul(b, e)),
                 nadd(nmul(c, h), nneg(nmul(d, g))))
        y = nadd(nadd(nmul(a, g), nneg(nmul(b, h))),
                 nadd(nmul(c, e), nmul(d, f)))
        z = nadd(nadd(nmul(a, h), nmul(b, g)),
                 nadd(nneg(nmul(c, f)), nmul(d, e)))
        return (w, x, y, z)

    def num(a):
        return (Fraction(a), Fraction(0))

    i = (zero, num(1), zero, zero)
    omega = ((Fraction(-1, 2), Fraction(0)), (Fraction(1, 2), Fraction(0)),
             (Fraction(1, 2), Fraction(0)), (Fraction(1, 2), Fraction(0)))
    s = ((Fraction(0), Fraction(1, 2)), (Fraction(0), Fraction(1, 2)),
         zero, zero)
    gens = [i, omega, s]
    ident = (num(1), zero, zero, zero)
    elems = {ident}
    frontier = [ident]
    while frontier:
        q = frontier.pop()
        for g in gens:
            r = qmul(q, g)
            if r not in elems:
                elems.add(r)
                frontier.append(r)
    if len(elems) != 48:
        raise GroupError(f"binary octahedral closure has size {len(elems)}")
    ordered = [ident] + sorted(elems - {ident})
    index = {q: k for k, q in enumerate(ordered)}
    table = [[index[qmul(x, y)] for y in ordered] for x in ordered]
    return FiniteGroup(table, name="BO48")


def product_group(g: FiniteGroup, h: FiniteGroup) -> FiniteGroup:
    no, ho = g.order, h.order
    table = [[0] * (no * ho) for _ in range(no * ho)]
    for a in range(no):
        for b in range(ho):
            for c in range(no):
                for d in range(ho):
                    table[a * ho + b][c * ho + d] = g.mul(a, c) * ho + h.mul(b, d)
    return FiniteGroup(table, name=f"{g.name}x{h.name}")


_BUILTIN_PARAMETRIC = {
    "cyclic": cyclic,
    "symmetric": symmetric,
    "dihedral": dihedral,
    "binary_dihedral": binary_dihedral,
}

_BUILTIN_FIXED = {
    "trivial": trivial_group,
    "sl2_f3": sl2_f3,
    "sl2_f5": sl2_f5,
    "binary_octahedral": binary_octahedral,
}


def builtin(name: str, parameter: int | None = None) -> FiniteGroup:
    """Look up a named group; e.g. builtin('cyclic', 5) or builtin('sl2_f3')."""
    name = name.lower()
    if name in _BUILTIN_FIXED:
        if parameter is not None:
            raise GroupError(f"{name} takes no parameter")
        return _BUILTIN_FIXED[name]()
    if name in _BUILTIN_PARAMETRIC:
        if parameter is None:
            raise GroupError(f"{name} needs a parameter")
        return _BUILTIN_PARAMETRIC[name](parameter)
    raise GroupError(f"unknown builtin group {name!r}")


# -- subgroups -------------------------------------------------------------

@dataclass(frozen=True)
class SubgroupEmbedding:
    """An injective homomorphism from a small group into a bigger one."""

    source: FiniteGroup
    target: FiniteGroup
    mapping: tuple[int, ...]

    def __post_init__(self):
        h, g, f = self.source, self.target, self.mapping
        if len(f) != h.order:
            raise GroupError("mapping must cover every source element")
        if len(set(f)) != len(f):
            raise GroupError("mapping must be injective")
        if f[0] != 0:
            raise GroupError("mapping must send identity to identity")
        for a in range(h.order):
            for b in range(h.order):
                if f[h.mul(a, b)] != g.mul(f[a], f[b]):
                    raise GroupError("mapping is not a homomorphism")

    def __call__(self, h_elem: int) -> int:
        return self.mapping[h_elem]

    @property
    def image(self) -> frozenset[int]:
        return frozenset(self.mapping)

    def preimage(self, g_elem: int) -> int:
        return self.mapping.index(g_elem)


def subgroup_from_elements(g: FiniteGroup, elements,
                           name: str | None = None) -> SubgroupEmbedding:
    """Build the abstract subgroup on a closed subset, identity-first order."""
    elems = sorted(set(elements))
    if not elems or elems[0] != 0:
        raise GroupError("subgroup must contain the identity 0")
    eset = set(elems)
    for a in elems:
        if g.inv(a) not in eset:
            raise GroupError("subset not closed under inverse")
        for b in elems:
            if g.mul(a, b) not in eset:
                raise GroupError("subset not closed under product")
    index = {x: i for i, x in enumerate(elems)}
    table = [[index[g.mul(a, b)] for b in elems] for a in elems]
    sub = FiniteGroup(table, name=name or f"{g.name}_sub{len(elems)}")
    return SubgroupEmbedding(sub, g, tuple(elems))


def trivial_embedding(g: FiniteGroup) -> SubgroupEmbedding:
    return subgroup_from_elements(g, [0])


def full_embedding(g: FiniteGroup) -> SubgroupEmbedding:
    return subgroup_from_elements(g, range(g.order))


def all_subgroup_element_sets(g: FiniteGroup) -> list[tuple[int, ...]]:
    """All subgroups as sorted element tuples, by iterated generator growth."""
    def closure(seed):
        elems = {0}
        frontier = list(seed)
        for x in seed:
            elems.add(x)
        while frontier:
            x = frontier.pop()
            for y in list(elems):
                for z in (g.mul(x, y), g.mul(y, x), g.inv(x)):
                    if z not in elems:
                        elems.add(z)
                        frontier.append(z)
        return tuple(sorted(elems))

    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        sub = frontier.pop()
        sset = set(sub)
        for x in range(g.order):
            if x in sset:
                continue
            new = closure(sub + (x,))
            if new not in found:
                found.add(new)
                frontier.append(new)
    return sorted(found, key=lambda s: (len(s), s))


# -- class functions -------------------------------------------------------

@dataclass(frozen=True)
class ClassFunction:
    """One cyclotomic value per conjugacy class of a finite group."""

    group: FiniteGroup
    values: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.values) != self.group.num_classes:
            raise GroupError("need one value per conjugacy class")

    @classmethod
    def from_rationals(cls, group: FiniteGroup, values) -> "ClassFunction":
        m = group.exponent
        return cls(group, tuple(Cyclotomic.rational(m, v) for v in values))

    @classmethod
    def zero(cls, group: FiniteGroup) -> "ClassFunction":
        return cls.from_rationals(group, [0] * group.num_classes)

    def value(self, c: int) -> Cyclotomic:
        return self.values[c]

    def value_at_element(self, g_elem: int) -> Cyclotomic:
        return self.values[self.group.class_of[g_elem]]

    def __add__(self, other: "ClassFunction") -> "ClassFunction":
        self._check(other)
        vals = []
        for a, b in zip(self.values, other.values):
            x, y = align(a, b)
            vals.append(x + y)
        return ClassFunction(self.group, tuple(vals))

    def _check(self, other):
        if self.group is not other.group:
            raise GroupError("class functions live on different groups")

    def __sub__(self, other: "ClassFunction") -> "ClassFunction":
        return self + (other * Fraction(-1))

    def __mul__(self, scalar) -> "ClassFunction":
        return ClassFunction(self.group, tuple(v * scalar for v in self.values))

    __rmul__ = __mul__

    def star(self, other: "ClassFunction") -> "ClassFunction":
        """Pointwise product; corresponds to the tensor product."""
        self._check(other)
        vals = []
        for a, b in zip(self.values, other.values):
            x, y = align(a, b)
            vals.append(x * y)
        return ClassFunction(self.group, tuple(vals))

    def equals(self, other: "ClassFunction") -> bool:
        if self.group is not other.group:
            return False
        return all(cyc_eq(a, b) for a, b in zip(self.values, other.values))

    def is_zero(self) -> bool:
        return all(v.is_zero() for v in self.values)

    def __repr__(self):
        return f"ClassFunction({self.group.name}, {list(self.values)})"


def sigma_basis(group: FiniteGroup, c: int) -> ClassFunction:
    """Indicator of class c scaled by the centralizer order zeta_c."""
    vals = [0] * group.num_classes
    vals[c] = group.zeta(c)
    return ClassFunction.from_rationals(group, vals)


def trivial_character(group: FiniteGroup) -> ClassFunction:
    return ClassFunction.from_rationals(group, [1] * group.num_classes)


def regular_character(group: FiniteGroup) -> ClassFunction:
    vals = [0] * group.num_classes
    vals[0] = group.order
    return ClassFunction.from_rationals(group, vals)


def inner_product(chi: ClassFunction, psi: ClassFunction) -> Cyclotomic:
    """(chi | psi) = (1/|G|) sum_g chi(g) conj(psi(g)), computed classwise."""
    if chi.group is not psi.group:
        raise GroupError("inner product needs a common group")
    g = chi.group
    total = Cyclotomic.zero(g.exponent)
    for c in range(g.num_classes):
        a, b = align(chi.values[c], psi.values[c].conj())
        term = (a * b) * Fraction(g.class_size(c), g.order)
        t, total = align(term, total)
        total = total + t
    return total


def adams_psi(n: int, chi: ClassFunction) -> ClassFunction:
    """Classical Adams operation: chi goes to (g -> chi(g^n))."""
    g = chi.group
    vals = [chi.value_at_element(g.power(g.class_reps[c], n))
            for c in range(g.num_classes)]
    return ClassFunction(g, tuple(vals))


def pointwise_star(chi: ClassFunction, psi: ClassFunction) -> ClassFunction:
    return chi.star(psi)


@dataclass(frozen=True)
class DualFunctional:
    """Linear functional on class functions: <eta, V> = sum_c eta_c V(c)."""

    group: FiniteGroup
    coeffs: tuple[Cyclotomic, ...]

    def __post_init__(self):
        if len(self.coeffs) != self.group.num_classes:
            raise GroupError("need one coefficient per conjugacy class")

    @classmethod
    def delta(cls, group: FiniteGroup, c: int) -> "DualFunctional":
        m = group.exponent
        coeffs = [Cyclotomic.zero(m)] * group.num_classes
        coeffs[c] = Cyclotomic.one(m)
        return cls(group, tuple(coeffs))

    def pair(self, v: ClassFunction) -> Cyclotomic:
        if v.group is not self.group:
            raise GroupError("pairing needs a common group")
        total = Cyclotomic.zero(self.group.exponent)
        for e, x in zip(self.coeffs, v.values):
            a, b = align(e, x)
            t, total = align(a * b, total)
            total = total + t
        return total


# -- induction / restriction / Mackey --------------------------------------

def restrict_cf(emb: SubgroupEmbedding, chi: ClassFunction) -> ClassFunction:
    """Pull a class function on G back to the subgroup H."""
    if chi.group is not emb.target:
        raise GroupError("class function must live on the embedding target")
    h = emb.source
    vals = tuple(chi.value_at_element(emb(h.class_reps[c]))
                 for c in range(h.num_classes))
    return ClassFunction(h, vals)


def induce_cf(emb: SubgroupEmbedding, f: ClassFunction) -> ClassFunction:
    """Induced class function: (Ind f)(g) = |H|^-1 sum over x with
    x^-1 g x in H of f(x^-1 g x)."""
    if f.group is not emb.source:
        raise GroupError("class function must live on the embedding source")
    g = emb.target
    h = emb.source
    image = emb.image
    pre = {emb(x): x for x in range(h.order)}
    vals = []
    for c in range(g.num_classes):
        z = g.class_reps[c]
        acc = Cyclotomic.zero(g.exponent)
        for x in range(g.order):
            y = g.mul(g.mul(g.inv(x), z), x)
            if y in image:
                v, acc = align(f.value_at_element(pre[y]), acc)
                acc = acc + v
        vals.append(acc / h.order)
    return ClassFunction(g, tuple(vals))


def double_cosets(g: FiniteGroup, emb_h: SubgroupEmbedding,
                  emb_l: SubgroupEmbedding) -> list[int]:
    """Minimal representatives of the double cosets H\\G/L."""
    if emb_h.target is not g or emb_l.target is not g:
        raise GroupError("embeddings must land in the given group")
    h_img = sorted(emb_h.image)
    l_img = sorted(emb_l.image)
    seen = [False] * g.order
    reps = []
    for x in range(g.order):
        if seen[x]:
            continue
        reps.append(x)
        for a in h_img:
            ax = g.mul(a, x)
            for b in l_img:
                seen[g.mul(ax, b)] = True
    return reps


def conjugate_subgroup_data(g: FiniteGroup, emb_h: SubgroupEmbedding,
                            emb_l: SubgroupEmbedding, s: int):
    """The Mackey ingredient for a double-coset representative s of HsL:
    H_s = s^-1 H s meet L as a subgroup of L, plus the conjugated class
    function transport H_s -> H."""
    s_inv = g.inv(s)
    conj_h = {g.mul(g.mul(s_inv, x), s) for x in emb_h.image}
    inter = conj_h & emb_l.image
    l_elems = sorted(emb_l.preimage(x) for x in inter)
    emb_hs_in_l = subgroup_from_elements(emb_l.source, l_elems)

    def transport(f: ClassFunction) -> ClassFunction:
        # value at x in H_s is f(s x s^-1)
        hs = emb_hs_in_l.source
        vals = []
        for c in range(hs.num_classes):
            x_in_g = emb_l(emb_hs_in_l(hs.class_reps[c]))
            y = g.mul(g.mul(s, x_in_g), s_inv)
            vals.append(f.value_at_element(emb_h.preimage(y)))
        return ClassFunction(hs, tuple(vals))

    return emb_hs_in_l, transport


def mackey_verify(g: FiniteGroup, max_subgroups: int = 40):
    """Mackey's formula over every subgroup pair, with the sigma basis of
    each H as test functions.  Returns a Report."""
    from .report import Report
    rep = Report(f"mackey_verify({g.name})")
    subs = all_subgroup_element_sets(g)
    if len(subs) > max_subgroups:
        raise GroupError(f"{len(subs)} subgroups exceeds cap {max_subgroups}")
    embeddings = [subgroup_from_elements(g, s) for s in subs]
    ok, witness = True, None
    for emb_h in embeddings:
        for emb_l in embeddings:
            for c in range(emb_h.source.num_classes):
                f = sigma_basis(emb_h.source, c)
                if not mackey_check(g, emb_h, emb_l, f):
                    ok = False
                    witness = (f"|H|={emb_h.source.order}, "
                               f"|L|={emb_l.source.order}, class {c}")
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add(f"Mackey formula over {len(subs)}^2 subgroup pairs", ok, witness)
    return rep


def mackey_check(g: FiniteGroup, emb_h: SubgroupEmbedding,
                 emb_l: SubgroupEmbedding, f: ClassFunction) -> bool:
    """Res_L Ind_H^G f = sum over double cosets of Ind_{H_s}^L f^s."""
    lhs = restrict_cf(emb_l, induce_cf(emb_h, f))
    l = emb_l.source
    rhs = ClassFunction.zero(l)
    for s in double_cosets(g, emb_h, emb_l):
        emb_hs, transport = conjugate_subgroup_data(g, emb_h, emb_l, s)
        term = induce_cf(emb_hs, transport(f))
        vals = []
        for a, b in zip(rhs.values, term.values):
            x, y = align(a, b)
            vals.append(x + y)
        rhs = ClassFunction(l, tuple(vals))
    return lhs.equals(rhs)
