"""Finite G-sets: the concrete model for the fixed-point lemmas, the
delocalization dimension count, orbifold Euler characteristics, and the
Theorem 6.1 / Macdonald / McKay series identities.

Orbifold Euler characteristics are always computed by two independent
routes (commuting-pair average and inertia-orbit count) which must agree;
wreath powers reuse the same engine through the element model of G_n.
"""
from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .groups import FiniteGroup, GroupError, binary_dihedral, \
    binary_octahedral, cyclic, sl2_f3, sl2_f5
from .report import Report
from .scalars import TruncSeries, euler_product
from .wreath import (WreathElement, enumerate_types, enumerate_wreath_elements,
                     type_of, wreath_generators, wreath_inv, wreath_mul,
                     wreath_order)


class GSetError(ValueError):
    pass


@dataclass(frozen=True)
class GSet:
    """A finite G-set on points 0..size-1; action[g][x] = g . x."""

    group: FiniteGroup
    size: int
    action: tuple[tuple[int, ...], ...]
    name: str = "X"

    def __post_init__(self):
        g = self.group
        if len(self.action) != g.order:
            raise GSetError("need one action row per group element")
        for row in self.action:
            if sorted(row) != list(range(self.size)):
                raise GSetError("each group element must act by a permutation")
        if tuple(self.action[0]) != tuple(range(self.size)):
            raise GSetError("identity must act trivially")
        for a in range(g.order):
            for b in range(g.order):
                ab = g.mul(a, b)
                for x in range(self.size):
                    if self.action[ab][x] != self.action[a][self.action[b][x]]:
                        raise GSetError(
                            f"action not compatible at ({a},{b},{x})")

    def act(self, g: int, x: int) -> int:
        return self.action[g][x]

    def fixed(self, g: int) -> tuple[int, ...]:
        return tuple(x for x in range(self.size) if self.action[g][x] == x)

    def orbit_count(self, elements=None) -> int:
        """Number of orbits under the given subgroup elements (default G)."""
        if elements is None:
            elements = range(self.group.order)
        elements = list(elements)
        seen = [False] * self.size
        count = 0
        for x in range(self.size):
            if seen[x]:
                continue
            count += 1
            stack = [x]
            seen[x] = True
            while stack:
                y = stack.pop()
                for g in elements:
                    z = self.action[g][y]
                    if not seen[z]:
                        seen[z] = True
                        stack.append(z)
        return count

    def to_json(self) -> str:
        return json.dumps({"size": self.size,
                           "action": [list(r) for r in self.action]})


def point_gset(group: FiniteGroup) -> GSet:
    return GSet(group, 1, ((0,),) * group.order, name="pt")


def regular_gset(group: FiniteGroup) -> GSet:
    rows = tuple(tuple(group.mul(g, x) for x in range(group.order))
                 for g in range(group.order))
    return GSet(group, group.order, rows, name="regular")


def coset_gset(group: FiniteGroup, subgroup_elements) -> GSet:
    """G acting on the left cosets of the subgroup spanned by the given
    closed element set."""
    h = sorted(set(subgroup_elements))
    hset = set(h)
    cosets = []
    covered = set()
    for x in range(group.order):
        if x in covered:
            continue
        coset = frozenset(group.mul(x, a) for a in h)
        covered |= coset
        cosets.append(coset)
    index = {c: i for i, c in enumerate(cosets)}
    rows = []
    for g in range(group.order):
        row = []
        for c in cosets:
            any_elem = min(c)
            row.append(index[frozenset(group.mul(group.mul(g, any_elem), a)
                                       for a in h)])
        rows.append(tuple(row))
    if 0 not in hset:
        raise GSetError("subgroup must contain the identity")
    return GSet(group, len(cosets), tuple(rows),
                name=f"cosets{len(cosets)}")


def gset_from_json(group: FiniteGroup, text: str, name: str = "X") -> GSet:
    data = json.loads(text)
    if not isinstance(data, dict) or "size" not in data or "action" not in data:
        raise GSetError("expected JSON object with 'size' and 'action'")
    return GSet(group, data["size"],
                tuple(tuple(r) for r in data["action"]), name=name)


# -- wreath powers ----------------------------------------------------------

@dataclass(frozen=True)
class PowerGSet:
    """X^n with its G_n action a.(x_1..x_n) = (g_i x_{s^-1(i)})_i."""

    base: GSet
    n: int

    @property
    def size(self) -> int:
        return self.base.size ** self.n

    def points(self) -> list[tuple[int, ...]]:
        return list(itertools.product(range(self.base.size), repeat=self.n))

    def act(self, a: WreathElement, x: tuple[int, ...]) -> tuple[int, ...]:
        s = a.perm
        sinv = [0] * self.n
        for i, v in enumerate(s):
            sinv[v] = i
        return tuple(self.base.act(a.gs[i], x[sinv[i]]) for i in range(self.n))

    def fixed(self, a: WreathElement) -> list[tuple[int, ...]]:
        return [x for x in self.points() if self.act(a, x) == x]


def gset_power(x: GSet, n: int, limit: int = 1_000_000) -> PowerGSet:
    if n < 1:
        raise GSetError("power needs n >= 1")
    if x.size ** n > limit:
        raise GSetError(f"|X|^n = {x.size ** n} exceeds limit {limit}")
    return PowerGSet(x, n)


def fixed_points(x, a):
    """Fixed set: x a GSet with a a group element id, or a PowerGSet with
    a WreathElement."""
    if isinstance(x, GSet):
        return x.fixed(a)
    return tuple(x.fixed(a))


# -- orbifold Euler characteristics ----------------------------------------

@lru_cache(maxsize=32)
def _wreath_commuting(group: FiniteGroup, n: int,
                      limit: int) -> tuple[tuple[WreathElement, ...],
                                           tuple[tuple[int, ...], ...]]:
    """Elements of G_n plus, per element, indices of its commutants."""
    elements = tuple(enumerate_wreath_elements(group, n, limit))
    comm = []
    k = len(elements)
    for i in range(k):
        a = elements[i]
        row = []
        for j in range(k):
            b = elements[j]
            if wreath_mul(group, a, b) == wreath_mul(group, b, a):
                row.append(j)
        comm.append(tuple(row))
    return elements, tuple(comm)


def power_orbifold_euler(x: GSet, n: int, limit: int = 50_000) -> int:
    """e(X^n, G_n), by the commuting-pair average and independently by
    counting inertia orbits; the two must agree."""
    g = x.group
    if n == 0:
        return 1
    power = gset_power(x, n)
    if wreath_order(g, n) * power.size > 4_000_000:
        raise GSetError("power euler computation exceeds limit")
    elements, comm = _wreath_commuting(g, n, limit)
    index = {a: i for i, a in enumerate(elements)}
    fixed = [power.fixed(a) for a in elements]
    fixed_sets = [set(f) for f in fixed]

    total = 0
    for i in range(len(elements)):
        if not fixed[i]:
            continue
        for j in comm[i]:
            fj = fixed_sets[j]
            total += sum(1 for p in fixed[i] if p in fj)
    if total % len(elements) != 0:
        raise GSetError("commuting-pair sum is not divisible by |G_n|")
    e_pairs = total // len(elements)

    gens = wreath_generators(g, n) or [elements[0]]
    gen_invs = [wreath_inv(g, h) for h in gens]
    seen = set()
    orbits = 0
    for i in range(len(elements)):
        for p in fixed[i]:
            if (i, p) in seen:
                continue
            orbits += 1
            stack = [(i, p)]
            seen.add((i, p))
            while stack:
                ii, pp = stack.pop()
                for h, hi in zip(gens, gen_invs):
                    jj = index[wreath_mul(g, wreath_mul(g, h, elements[ii]), hi)]
                    qq = power.act(h, pp)
                    if (jj, qq) not in seen:
                        seen.add((jj, qq))
                        stack.append((jj, qq))
    if e_pairs != orbits:
        raise GSetError(
            f"orbifold Euler forms disagree: pairs {e_pairs}, orbits {orbits}")
    return e_pairs


def orbifold_euler(x: GSet) -> int:
    """e(X, G): both definitions computed and compared."""
    return power_orbifold_euler(x, 1)


def inertia_basis(x: GSet) -> list[tuple[int, tuple[int, ...]]]:
    """(class c, orbit of X^c under the centralizer) pairs, one entry per
    orbit, each orbit as a sorted point tuple."""
    g = x.group
    out = []
    for c in range(g.num_classes):
        rep = g.class_reps[c]
        cent = [z for z in range(g.order)
                if g.mul(z, rep) == g.mul(rep, z)]
        remaining = set(x.fixed(rep))
        while remaining:
            seed = min(remaining)
            orbit = {seed}
            stack = [seed]
            while stack:
                y = stack.pop()
                for z in cent:
                    w = x.act(z, y)
                    if w not in orbit:
                        orbit.add(w)
                        stack.append(w)
            if not orbit <= remaining:
                raise GSetError("centralizer orbit leaves the fixed set")
            remaining -= orbit
            out.append((c, tuple(sorted(orbit))))
    return out


def inertia_dim(x: GSet) -> int:
    """dim of the delocalized K-group: sum over classes of |X^c/Z(c)|."""
    return len(inertia_basis(x))


def symmetric_orbit_count(x: GSet, a: WreathElement) -> int:
    """|(X^n)^a / Z(a)| predicted by the symmetric-product formula:
    prod over (c, r) of C(k_c + m - 1, m) with k_c = |X^c/Z_G(c)|."""
    g = x.group
    k = {}
    for c, _orbit in inertia_basis(x):
        k[c] = k.get(c, 0) + 1
    out = 1
    rho = type_of(g, a)
    for c, lam in rho.parts:
        for r in set(lam):
            m = lam.count(r)
            out *= comb(k.get(c, 0) + m - 1, m)
    return out


def lemma_16_check(x: GSet, n: int, limit: int = 50_000) -> bool:
    """For every a in G_n: the centralizer orbit count on (X^n)^a equals
    the symmetric-product formula."""
    g = x.group
    elements, comm = _wreath_commuting(g, n, limit)
    power = gset_power(x, n)
    for i, a in enumerate(elements):
        fixed = power.fixed(a)
        cent = [elements[j] for j in comm[i]]
        remaining = set(fixed)
        orbits = 0
        while remaining:
            seed = remaining.pop()
            orbit = {seed}
            stack = [seed]
            while stack:
                y = stack.pop()
                for z in cent:
                    w = power.act(z, y)
                    if w not in orbit:
                        orbit.add(w)
                        stack.append(w)
            remaining -= orbit
            orbits += 1
        if orbits != symmetric_orbit_count(x, a):
            return False
    return True


def burnside_check(x: GSet) -> bool:
    """sum_c |X^c/Z(c)| equals the number of G-orbits on the inertia set
    {(g, x): g x = x}."""
    g = x.group
    pairs = {(h, p) for h in range(g.order) for p in x.fixed(h)}
    seen = set()
    orbits = 0
    for pair in sorted(pairs):
        if pair in seen:
            continue
        orbits += 1
        stack = [pair]
        seen.add(pair)
        while stack:
            h, p = stack.pop()
            for z in range(g.order):
                q = (g.conj(z, h), x.act(z, p))
                if q not in seen:
                    seen.add(q)
                    stack.append(q)
    return orbits == inertia_dim(x)


def ktheory_euler_check(x: GSet) -> bool:
    """Eq. (28): e(X, G) = dim K0 - dim K1 with K1 = 0 here."""
    return orbifold_euler(x) == inertia_dim(x)


def euler_series_check(x: GSet, max_degree: int,
                       limit: int = 50_000) -> Report:
    """Theorem 6.1: sum_n e(X^n, G_n) q^n = prod (1 - q^r)^(-e(X,G))."""
    rep = Report(f"euler_series_check({x.group.name}, {x.name}, N={max_degree})")
    e = orbifold_euler(x)
    rhs = euler_product(e, max_degree)
    lhs = [1] + [power_orbifold_euler(x, n, limit)
                 for n in range(1, max_degree + 1)]
    ok = all(Fraction(v) == rhs.coefficient(n) for n, v in enumerate(lhs))
    rep.add(f"Theorem 6.1 series, e(X,G) = {e}", ok,
            None if ok else f"lhs {lhs}")
    return rep


def theorem_main_dim_check(x: GSet, max_degree: int,
                           limit: int = 50_000) -> Report:
    """Theorem 3.1: inertia count of (G_n, X^n) equals the q^n coefficient
    of prod (1 - q^r)^(-inertia_dim(G, X))."""
    rep = Report(f"theorem_main_dim_check({x.group.name}, {x.name}, N={max_degree})")
    d = inertia_dim(x)
    rhs = euler_product(d, max_degree)
    ok, witness = True, None
    for n in range(1, max_degree + 1):
        got = power_orbifold_euler(x, n, limit)
        if Fraction(got) != rhs.coefficient(n):
            ok, witness = False, f"n={n}: {got}"
            break
    rep.add(f"Theorem 3.1 graded dimension, inertia_dim = {d}", ok, witness)
    return rep


def macdonald_check(size_x: int, max_degree: int) -> bool:
    """Eq. (3): symmetric-product counts against (1 - q)^(-|X|)."""
    if size_x < 0:
        raise GSetError("need a nonnegative set size")
    cs = [Fraction(0)] * (max_degree + 1)
    for k in range(max_degree + 1):
        cs[k] = Fraction(comb(size_x + k - 1, k)) if k else Fraction(1)
    rhs = TruncSeries(max_degree, tuple(cs))
    for n in range(max_degree + 1):
        direct = sum(1 for _ in itertools.combinations_with_replacement(
            range(size_x), n)) if size_x else (1 if n == 0 else 0)
        if Fraction(direct) != rhs.coefficient(n):
            return False
    return True


def graded_dim_counts(group: FiniteGroup, max_degree: int) -> list[int]:
    return [len(enumerate_types(group, n)) for n in range(max_degree + 1)]


_MCKAY_ROWS = [
    ("cyclic(2)", lambda: cyclic(2), 2, "A1", 5),
    ("cyclic(3)", lambda: cyclic(3), 3, "A2", 5),
    ("cyclic(5)", lambda: cyclic(5), 5, "A4", 4),
    ("binary_dihedral(2)", lambda: binary_dihedral(2), 5, "D4", 4),
    ("binary_dihedral(3)", lambda: binary_dihedral(3), 6, "D5", 4),
    ("sl2_f3", sl2_f3, 7, "E6", 4),
    ("binary_octahedral", binary_octahedral, 8, "E7", 3),
    ("sl2_f5", sl2_f5, 9, "E8", 3),
]


def mckay_table() -> Report:
    """Class counts, ADE ranks, and the Goettsche-series coincidence
    dim_q F_G(pt) = prod (1 - q^r)^(-|G_*|) for the McKay groups."""
    rep = Report("mckay_table")
    for label, make, classes, ade, depth in _MCKAY_ROWS:
        g = make()
        ok = g.num_classes == classes
        rep.add(f"{label}: |G_*| = {classes} ({ade}, rank {classes - 1})",
                ok, None if ok else f"got {g.num_classes}")
        counts = graded_dim_counts(g, depth)
        series = euler_product(classes, depth)
        ok = all(Fraction(c) == series.coefficient(n)
                 for n, c in enumerate(counts))
        rep.add(f"{label}: dim_q F_G(pt) = euler_product({classes}) "
                f"to q^{depth}", ok, None if ok else str(counts))
    return rep


def euler_verify(x: GSet, max_degree: int, limit: int = 50_000) -> Report:
    """The orbifold-Euler suite for one G-set."""
    rep = Report(f"euler_verify({x.group.name}, {x.name}, N={max_degree})")
    try:
        e = orbifold_euler(x)
        rep.add(f"both e(X,G) definitions agree (value {e})", True)
    except GSetError as exc:
        rep.add("both e(X,G) definitions agree", False, str(exc))
        return rep
    rep.add("Burnside inertia consistency", burnside_check(x))
    rep.add("Eq. (28): e(X,G) = inertia_dim", ktheory_euler_check(x))
    rep.extend(euler_series_check(x, max_degree, limit).checks)
    rep.extend(theorem_main_dim_check(x, max_degree, limit).checks)
    small = wreath_order(x.group, 2) * x.size ** 2 <= limit
    if small:
        rep.add("Lemma 1.6 symmetric-product counts (n = 2)",
                lemma_16_check(x, 2, limit))
    rep.add(f"Macdonald formula for |X| = {x.size}",
            macdonald_check(x.size, max_degree + 2))
    return rep
