"""The wreath product G_n: elements, cycle products, types, sigma basis.

Class functions on G_n are stored in the type basis (one value per
partition-valued function on the conjugacy classes of G).  The element
model of G_n only ever appears inside brute-force oracles, where whole
groups up to a few tens of thousands of elements are enumerated.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Iterator, NamedTuple

from .groups import FiniteGroup, GroupError
from .scalars import Cyclotomic, align, cyc_eq


class WreathError(ValueError):
    pass


class WreathElement(NamedTuple):
    """Element (g_1..g_n; s) of G_n.  perm[i] is the image s(i), 0-based."""

    gs: tuple[int, ...]
    perm: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.gs)


def wreath_identity(n: int) -> WreathElement:
    return WreathElement((0,) * n, tuple(range(n)))


def wreath_mul(group: FiniteGroup, a: WreathElement, b: WreathElement) -> WreathElement:
    """(g, s)(h, t) = (g . s(h), s t) with s(h)_i = h_{s^-1(i)}."""
    if a.degree != b.degree:
        raise WreathError("degree mismatch")
    s = a.perm
    sinv = [0] * len(s)
    for i, v in enumerate(s):
        sinv[v] = i
    gs = tuple(group.mul(a.gs[i], b.gs[sinv[i]]) for i in range(len(s)))
    perm = tuple(s[b.perm[i]] for i in range(len(s)))
    return WreathElement(gs, perm)


def wreath_inv(group: FiniteGroup, a: WreathElement) -> WreathElement:
    s = a.perm
    sinv = [0] * len(s)
    for i, v in enumerate(s):
        sinv[v] = i
    gs = tuple(group.inv(a.gs[s[i]]) for i in range(len(s)))
    return WreathElement(gs, tuple(sinv))


def wreath_conj(group: FiniteGroup, x: WreathElement, a: WreathElement) -> WreathElement:
    return wreath_mul(group, wreath_mul(group, x, a), wreath_inv(group, x))


def cycle_products(group: FiniteGroup, a: WreathElement) -> list[tuple[int, int]]:
    """(cycle length r, class id of the cycle product) per cycle of the
    permutation; the product along a cycle (i1..ir) is g_{ir} ... g_{i1}."""
    n = a.degree
    seen = [False] * n
    out = []
    for start in range(n):
        if seen[start]:
            continue
        prod = 0
        i = start
        r = 0
        while not seen[i]:
            seen[i] = True
            prod = group.mul(a.gs[i], prod)
            i = a.perm[i]
            r += 1
        out.append((r, group.class_of[prod]))
    return out


@dataclass(frozen=True, order=True)
class WreathType:
    """Partition-valued function on the classes of G; the conjugacy
    invariant of G_n.  Stored canonically: nonempty partitions only,
    sorted by class id, parts weakly decreasing."""

    parts: tuple[tuple[int, tuple[int, ...]], ...]

    def __post_init__(self):
        last = -1
        for c, lam in self.parts:
            if c <= last:
                raise WreathError("class ids must be strictly increasing")
            last = c
            if not lam:
                raise WreathError("empty partitions must be omitted")
            if any(p < 1 for p in lam) or list(lam) != sorted(lam, reverse=True):
                raise WreathError("partitions must be weakly decreasing, positive")

    @classmethod
    def from_dict(cls, d: dict[int, tuple[int, ...]]) -> "WreathType":
        items = []
        for c in sorted(d):
            lam = tuple(sorted(d[c], reverse=True))
            if lam:
                items.append((c, lam))
        return cls(tuple(items))

    @property
    def degree(self) -> int:
        return sum(sum(lam) for _, lam in self.parts)

    @property
    def length(self) -> int:
        return sum(len(lam) for _, lam in self.parts)

    def partition(self, c: int) -> tuple[int, ...]:
        for cc, lam in self.parts:
            if cc == c:
                return lam
        return ()

    def multiplicity(self, r: int, c: int) -> int:
        return self.partition(c).count(r)

    def union(self, other: "WreathType") -> "WreathType":
        d: dict[int, list[int]] = {}
        for c, lam in self.parts:
            d.setdefault(c, []).extend(lam)
        for c, lam in other.parts:
            d.setdefault(c, []).extend(lam)
        return WreathType.from_dict({c: tuple(v) for c, v in d.items()})

    def remove_part(self, r: int, c: int) -> "WreathType":
        lam = list(self.partition(c))
        lam.remove(r)
        d = {cc: list(l) for cc, l in self.parts}
        d[c] = lam
        return WreathType.from_dict({c: tuple(v) for c, v in d.items()})

    def to_json_obj(self):
        return [[c, list(lam)] for c, lam in self.parts]

    def __repr__(self):
        inner = ", ".join(f"{c}:{list(lam)}" for c, lam in self.parts)
        return f"Type({{{inner}}})"


EMPTY_TYPE = WreathType(())


def type_of(group: FiniteGroup, a: WreathElement) -> WreathType:
    d: dict[int, list[int]] = {}
    for r, c in cycle_products(group, a):
        d.setdefault(c, []).append(r)
    return WreathType.from_dict({c: tuple(v) for c, v in d.items()})


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n, parts weakly decreasing, lexicographic order."""
    if n == 0:
        return ((),)
    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(remaining, maxpart), 0, -1):
            prefix.append(p)
            rec(remaining - p, p, prefix)
            prefix.pop()

    rec(n, n, [])
    return tuple(out)


def enumerate_types(group: FiniteGroup, n: int) -> list[WreathType]:
    """All degree-n types over G, duplicate-free, canonical order."""
    if n < 0:
        raise WreathError("degree must be >= 0")
    k = group.num_classes
    results: list[WreathType] = []

    def rec(c, remaining, acc):
        if c == k:
            if remaining == 0:
                results.append(WreathType(tuple(acc)))
            return
        if c == k - 1:
            sizes = [remaining]
        else:
            sizes = range(remaining + 1)
        for size in sizes:
            for lam in partitions(size):
                if lam:
                    acc.append((c, lam))
                    rec(c + 1, remaining - size, acc)
                    acc.pop()
                else:
                    rec(c + 1, remaining - size, acc)

    rec(0, n, [])
    return sorted(results)


def z_partition(lam: tuple[int, ...]) -> int:
    """z_lambda = prod r^{m_r} m_r!, the S_n centralizer order."""
    out = 1
    for r in set(lam):
        m = lam.count(r)
        out *= r ** m * factorial(m)
    return out


def z_rho(group: FiniteGroup, rho: WreathType) -> int:
    """Centralizer order in G_n of an element of type rho."""
    out = 1
    for c, lam in rho.parts:
        out *= z_partition(lam) * group.zeta(c) ** len(lam)
    return out


def wreath_order(group: FiniteGroup, n: int) -> int:
    return group.order ** n * factorial(n)


# -- class functions in the type basis ------------------------------------

@dataclass(frozen=True)
class WreathClassFunction:
    """Class function on G_n stored as a sparse map type -> value."""

    group: FiniteGroup
    degree: int
    vals: tuple[tuple[WreathType, Cyclotomic], ...]

    def __post_init__(self):
        for rho, v in self.vals:
            if rho.degree != self.degree:
                raise WreathError(f"type {rho} is not of degree {self.degree}")

    @classmethod
    def build(cls, group: FiniteGroup, degree: int,
              mapping: dict[WreathType, Cyclotomic]) -> "WreathClassFunction":
        items = tuple(sorted(((rho, v) for rho, v in mapping.items()
                              if not v.is_zero()), key=lambda kv: kv[0]))
        return cls(group, degree, items)

    @classmethod
    def zero(cls, group: FiniteGroup, degree: int) -> "WreathClassFunction":
        return cls(group, degree, ())

    def as_dict(self) -> dict[WreathType, Cyclotomic]:
        return dict(self.vals)

    def value(self, rho: WreathType) -> Cyclotomic:
        for r, v in self.vals:
            if r == rho:
                return v
        return Cyclotomic.zero(self.group.exponent)

    def value_at_element(self, a: WreathElement) -> Cyclotomic:
        return self.value(type_of(self.group, a))

    def __add__(self, other: "WreathClassFunction") -> "WreathClassFunction":
        self._check(other)
        d = self.as_dict()
        for rho, v in other.vals:
            if rho in d:
                a, b = align(d[rho], v)
                d[rho] = a + b
            else:
                d[rho] = v
        return WreathClassFunction.build(self.group, self.degree, d)

    def _check(self, other):
        if self.group is not other.group:
            raise WreathError("different base groups")
        if self.degree != other.degree:
            raise WreathError("degree mismatch")

    def __sub__(self, other):
        return self + (other * Fraction(-1))

    def __mul__(self, scalar) -> "WreathClassFunction":
        return WreathClassFunction.build(
            self.group, self.degree, {rho: v * scalar for rho, v in self.vals})

    __rmul__ = __mul__

    def star(self, other: "WreathClassFunction") -> "WreathClassFunction":
        """Typewise product (tensor product of G_n representations)."""
        self._check(other)
        od = other.as_dict()
        out = {}
        for rho, v in self.vals:
            if rho in od:
                a, b = align(v, od[rho])
                out[rho] = a * b
        return WreathClassFunction.build(self.group, self.degree, out)

    def inner(self, other: "WreathClassFunction") -> Cyclotomic:
        """Degree-n inner product: sum over types of F1 conj(F2) / Z_rho."""
        self._check(other)
        od = other.as_dict()
        total = Cyclotomic.zero(self.group.exponent)
        for rho, v in self.vals:
            if rho in od:
                a, b = align(v, od[rho].conj())
                t, total = align(a * b / z_rho(self.group, rho), total)
                total = total + t
        return total

    def equals(self, other: "WreathClassFunction") -> bool:
        if self.group is not other.group or self.degree != other.degree:
            return False
        d, od = self.as_dict(), other.as_dict()
        for rho in set(d) | set(od):
            a = d.get(rho, Cyclotomic.zero(self.group.exponent))
            b = od.get(rho, Cyclotomic.zero(self.group.exponent))
            if not cyc_eq(a, b):
                return False
        return True

    def is_zero(self) -> bool:
        return not self.vals

    def to_json_obj(self):
        out = []
        for rho, v in self.vals:
            if v.is_rational():
                out.append([rho.to_json_obj(), str(v.as_rational())])
            else:
                out.append([rho.to_json_obj(), [str(c) for c in v.coeffs]])
        return out

    def __repr__(self):
        inner = ", ".join(f"{rho!r}: {v!r}" for rho, v in self.vals)
        return f"WCF(deg={self.degree}, {{{inner}}})"


def n_cycle_type(c: int, n: int) -> WreathType:
    return WreathType(((c, (n,)),))


def sigma_r_c(group: FiniteGroup, r: int, c: int) -> WreathClassFunction:
    """Value r * zeta_c at the single r-cycle type over class c, 0 elsewhere."""
    if r < 1:
        raise WreathError("cycle length must be >= 1")
    m = group.exponent
    rho = n_cycle_type(c, r)
    return WreathClassFunction.build(
        group, r, {rho: Cyclotomic.rational(m, r * group.zeta(c))})


def sigma_rho(group: FiniteGroup, rho: WreathType) -> WreathClassFunction:
    """Value Z_rho at type rho, 0 elsewhere."""
    m = group.exponent
    return WreathClassFunction.build(
        group, rho.degree, {rho: Cyclotomic.rational(m, z_rho(group, rho))})


def trivial_char(group: FiniteGroup, n: int) -> WreathClassFunction:
    m = group.exponent
    return WreathClassFunction.build(
        group, n, {rho: Cyclotomic.one(m) for rho in enumerate_types(group, n)})


def sign_char(group: FiniteGroup, n: int) -> WreathClassFunction:
    """(-1)^(n - length(rho)) per type: G^n acts trivially, S_n by sign."""
    m = group.exponent
    return WreathClassFunction.build(
        group, n,
        {rho: Cyclotomic.rational(m, (-1) ** (n - rho.length))
         for rho in enumerate_types(group, n)})


def star_wreath(f1: WreathClassFunction, f2: WreathClassFunction) -> WreathClassFunction:
    return f1.star(f2)


# -- brute-force element model (oracles) -----------------------------------

def enumerate_wreath_elements(group: FiniteGroup, n: int,
                              limit: int = 200_000) -> list[WreathElement]:
    total = wreath_order(group, n)
    if total > limit:
        raise WreathError(f"|G_n| = {total} exceeds limit {limit}")
    perms = list(itertools.permutations(range(n)))
    return [WreathElement(gs, p)
            for gs in itertools.product(range(group.order), repeat=n)
            for p in perms]


def wreath_generators(group: FiniteGroup, n: int) -> list[WreathElement]:
    gens = []
    for g in range(1, group.order):
        gens.append(WreathElement((g,) + (0,) * (n - 1), tuple(range(n))))
    if n >= 2:
        swap = list(range(n))
        swap[0], swap[1] = 1, 0
        gens.append(WreathElement((0,) * n, tuple(swap)))
        cyc = tuple((i + 1) % n for i in range(n))
        gens.append(WreathElement((0,) * n, cyc))
    return gens


def brute_force_classes(group: FiniteGroup, n: int,
                        limit: int = 200_000) -> list[tuple[WreathElement, int]]:
    """Conjugacy classes of G_n by orbit closure under conjugation by a
    generating set; returns (representative, class size) pairs sorted by
    the representative's type."""
    elements = enumerate_wreath_elements(group, n, limit)
    gens = wreath_generators(group, n)
    gen_invs = [wreath_inv(group, g) for g in gens]
    seen: set[WreathElement] = set()
    out = []
    for a in elements:
        if a in seen:
            continue
        orbit = {a}
        frontier = [a]
        while frontier:
            x = frontier.pop()
            for g, gi in zip(gens, gen_invs):
                y = wreath_mul(group, wreath_mul(group, g, x), gi)
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        seen |= orbit
        rep = min(orbit)
        out.append((rep, len(orbit)))
    out.sort(key=lambda t: (type_of(group, t[0]), t[0]))
    return out


def representative_of_type(group: FiniteGroup, rho: WreathType) -> WreathElement:
    """Canonical element of the given type: per part an r-cycle block with
    the class representative in its first slot."""
    n = rho.degree
    gs = [0] * n
    perm = list(range(n))
    pos = 0
    for c, lam in rho.parts:
        for r in lam:
            gs[pos] = group.class_reps[c]
            for i in range(r):
                perm[pos + i] = pos + (i + 1) % r
            pos += r
    return WreathElement(tuple(gs), tuple(perm))


def centralizer_order_brute(group: FiniteGroup, n: int, a: WreathElement,
                            elements: list[WreathElement] | None = None,
                            limit: int = 200_000) -> int:
    if elements is None:
        elements = enumerate_wreath_elements(group, n, limit)
    count = 0
    for x in elements:
        if wreath_mul(group, x, a) == wreath_mul(group, a, x):
            count += 1
    return count


def centralizer_checks(group: FiniteGroup, n: int, limit: int = 200_000):
    """Per class: brute-force centralizer order (as |G_n|/orbit size)
    against Z_rho, and n * zeta_c for full-cycle classes.  Returns a list
    of (description, ok, details)."""
    from .report import CheckResult
    results = []
    total = wreath_order(group, n)
    classes = brute_force_classes(group, n, limit)
    small = total <= 5000
    for rep, size in classes:
        rho = type_of(group, rep)
        zr = z_rho(group, rho)
        cent = total // size
        ok = cent == zr
        if small:
            ok = ok and centralizer_order_brute(group, n, rep) == zr
        results.append(CheckResult(
            f"centralizer {group.name} n={n} type={rho!r}", ok,
            None if ok else f"brute {cent} vs Z_rho {zr}"))
        if len(rho.parts) == 1 and len(rho.parts[0][1]) == 1 \
                and rho.parts[0][1][0] == n:
            c = rho.parts[0][0]
            ok2 = cent == n * group.zeta(c)
            results.append(CheckResult(
                f"n-cycle centralizer {group.name} n={n} class={c}", ok2,
                None if ok2 else f"{cent} vs {n * group.zeta(c)}"))
    return results


def wreath_cayley_group(group: FiniteGroup, n: int,
                        limit: int = 5000) -> tuple[FiniteGroup, list[WreathElement]]:
    """G_n as a plain FiniteGroup (identity-first element order), plus the
    element list realizing the numbering.  Only for small instances."""
    elements = enumerate_wreath_elements(group, n, limit)
    ident = wreath_identity(n)
    ordered = [ident] + sorted(a for a in elements if a != ident)
    index = {a: i for i, a in enumerate(ordered)}
    table = [[index[wreath_mul(group, a, b)] for b in ordered]
             for a in ordered]
    return FiniteGroup(table, name=f"{group.name}wr{n}"), ordered


def types_json(group: FiniteGroup, n: int) -> str:
    rows = [{"type": rho.to_json_obj(), "z_rho": z_rho(group, rho)}
            for rho in enumerate_types(group, n)]
    return json.dumps(rows)
