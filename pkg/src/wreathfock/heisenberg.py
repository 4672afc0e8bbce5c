"""Creation/annihilation operators on F_G and the Heisenberg relations,
plus an abstract Z2-graded Fock model for the super (odd) case.

Creation is multiplication by omega_m(V); annihilation is restriction
followed by reading off m-cycle values and pairing with a dual functional.
Both are computed in the type basis, with an evaluation-style restriction
oracle as the independent cross-check.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .fock import FockElement, fock_mul
from .groups import ClassFunction, DualFunctional, FiniteGroup, sigma_basis
from .lambda_ops import omega_n
from .linalg import matrix_rank
from .report import Report
from .scalars import Cyclotomic, align, cyc_eq
from .wreath import (WreathClassFunction, WreathError, enumerate_types,
                     n_cycle_type, sigma_rho, z_rho)


class HeisenbergError(ValueError):
    pass


@dataclass(frozen=True)
class HeisenbergOp:
    """a_m(V) for sign +1 (payload a ClassFunction), a_{-m}(eta) for sign
    -1 (payload a DualFunctional)."""

    sign: int
    mode: int
    payload: object

    def __post_init__(self):
        if self.mode < 1:
            raise HeisenbergError("mode must be >= 1")
        if self.sign not in (1, -1):
            raise HeisenbergError("sign must be +1 or -1")
        want = ClassFunction if self.sign == 1 else DualFunctional
        if not isinstance(self.payload, want):
            raise HeisenbergError(f"payload must be a {want.__name__}")

    def __call__(self, u: FockElement) -> FockElement:
        if self.sign == 1:
            return _apply_plus(self.mode, self.payload, u)
        return _apply_minus(self.mode, self.payload, u)


def a_plus(m: int, v: ClassFunction) -> HeisenbergOp:
    return HeisenbergOp(1, m, v)


def a_minus(m: int, eta: DualFunctional) -> HeisenbergOp:
    return HeisenbergOp(-1, m, eta)


def vacuum(group: FiniteGroup) -> FockElement:
    return FockElement.unit(group)


def _apply_plus(m: int, v: ClassFunction, u: FockElement) -> FockElement:
    return fock_mul(u, FockElement.from_wcf(omega_n(v, m)))


def _apply_minus(m: int, eta: DualFunctional, u: FockElement) -> FockElement:
    """On sigma^rho: sum_c (multiplicity of part m at c) <eta, m sigma_c>
    sigma^{rho minus one m-part at c}."""
    g = u.group
    out = FockElement.zero(g)
    weights = {c: eta.pair(sigma_basis(g, c)) * Fraction(m)
               for c in range(g.num_classes)}
    for n, f in u.parts.items():
        if n < m:
            continue
        for rho, val in f.vals:
            coeff = val / z_rho(g, rho)
            for c, lam in rho.parts:
                mult = lam.count(m)
                if mult == 0:
                    continue
                x, y = align(coeff, weights[c])
                scalar = (x * y) * Fraction(mult)
                out = out + FockElement.from_wcf(
                    sigma_rho(g, rho.remove_part(m, c))) * scalar
    return out


def a_minus_oracle(m: int, eta: DualFunctional,
                   f: WreathClassFunction) -> WreathClassFunction:
    """(1 tensor eta ch_m) Res, computed by evaluation: value at alpha is
    sum_c eta_c f(alpha u (m-cycle at c))."""
    g = f.group
    if f.degree < m:
        return WreathClassFunction.zero(g, max(f.degree - m, 0))
    out = {}
    for alpha in enumerate_types(g, f.degree - m):
        acc = Cyclotomic.zero(g.exponent)
        for c in range(g.num_classes):
            x, y = align(eta.coeffs[c], f.value(alpha.union(n_cycle_type(c, m))))
            t, acc = align(x * y, acc)
            acc = acc + t
        out[alpha] = acc
    return WreathClassFunction.build(g, f.degree - m, out)


# -- verification on F_G ----------------------------------------------------

def commutator_check(group: FiniteGroup, max_degree: int,
                     max_mode: int) -> Report:
    """Eq. (24)-(26) on the sigma^rho spanning set with basis payloads."""
    g = group
    rep = Report(f"commutator_check({g.name}, N={max_degree}, M={max_mode})")
    basis = [FockElement.from_wcf(sigma_rho(g, rho))
             for n in range(max_degree + 1)
             for rho in enumerate_types(g, n)]
    etas = [DualFunctional.delta(g, c) for c in range(g.num_classes)]
    vees = [sigma_basis(g, c) for c in range(g.num_classes)]

    ok, witness = True, None
    for m in range(1, max_mode + 1):
        for l in range(1, max_mode + 1):
            for ci, eta in enumerate(etas):
                for cj, v in enumerate(vees):
                    down, up = a_minus(m, eta), a_plus(l, v)
                    expect = eta.pair(v) * Fraction(l if m == l else 0)
                    for u in basis:
                        lhs = down(up(u)) - up(down(u))
                        rhs = u * expect
                        if not lhs.equals(rhs):
                            ok = False
                            witness = f"m={m},l={l},c={ci},c'={cj}"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("Eq. (24): [a_-m(eta), a_l(V)] = l delta_ml <eta,V>",
            ok, witness)

    ok, witness = True, None
    for m in range(1, max_mode + 1):
        for l in range(1, max_mode + 1):
            for v in vees:
                for w in vees:
                    p1, p2 = a_plus(m, v), a_plus(l, w)
                    for u in basis:
                        if not p1(p2(u)).equals(p2(p1(u))):
                            ok, witness = False, f"m={m},l={l}"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("Eq. (25): creation operators commute", ok, witness)

    ok, witness = True, None
    for m in range(1, max_mode + 1):
        for l in range(1, max_mode + 1):
            for eta in etas:
                for xi in etas:
                    d1, d2 = a_minus(m, eta), a_minus(l, xi)
                    for u in basis:
                        if not d1(d2(u)).equals(d2(d1(u))):
                            ok, witness = False, f"m={m},l={l}"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("Eq. (26): annihilation operators commute", ok, witness)

    ok, witness = True, None
    for m in range(1, max_mode + 1):
        for eta in etas:
            op = a_minus(m, eta)
            for u in basis:
                for n, f in u.parts.items():
                    got = op(u).component(max(n - m, 0)) if n >= m else None
                    want = a_minus_oracle(m, eta, f)
                    if n >= m and not got.equals(want):
                        ok, witness = False, f"m={m},deg={n}"
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("annihilation matches evaluation-restriction oracle",
            ok, witness)
    return rep


def irreducibility_check(group: FiniteGroup, max_degree: int) -> bool:
    """Monomials in the a_m(sigma_c) applied to the vacuum span each
    graded piece: rank equals dim C(G_n) per degree."""
    g = group
    for n in range(max_degree + 1):
        types_n = enumerate_types(g, n)
        rows = []
        for rho in types_n:
            vec = vacuum(g)
            for c, lam in rho.parts:
                for r in lam:
                    vec = a_plus(r, sigma_basis(g, c))(vec)
            comp = vec.component(n)
            row = []
            for tau in types_n:
                val = comp.value(tau)
                if not val.is_rational():
                    return False
                row.append(val.as_rational())
            rows.append(row)
        if matrix_rank(rows) != len(types_n):
            return False
    return True


# -- abstract super Fock model ----------------------------------------------

Generator = tuple[int, int]          # (parity, index); parity 0 even, 1 odd
Entry = tuple[int, int, int]         # (mode, parity, index)
Monomial = tuple[Entry, ...]         # sorted; odd entries pairwise distinct


@dataclass(frozen=True)
class SuperFockSpace:
    """S(direct sum over r >= 1 of W[r]) for W of dimension (d0 | d1)."""

    d0: int
    d1: int

    def generators(self) -> list[Generator]:
        return [(0, i) for i in range(self.d0)] + \
               [(1, i) for i in range(self.d1)]

    def check_generator(self, w: Generator):
        parity, idx = w
        bound = self.d0 if parity == 0 else self.d1
        if not (parity in (0, 1) and 0 <= idx < bound):
            raise HeisenbergError(f"no generator {w} in ({self.d0}|{self.d1})")

    def monomials(self, degree: int) -> list[Monomial]:
        """All basis monomials of the given total degree (sum of modes)."""
        entries = [(r, p, i) for r in range(1, degree + 1)
                   for (p, i) in self.generators()]

        out: list[Monomial] = []

        def rec(start, remaining, acc):
            if remaining == 0:
                out.append(tuple(acc))
                return
            for k in range(start, len(entries)):
                e = entries[k]
                if e[0] > remaining:
                    continue
                if e[1] == 1 and acc and acc[-1] == e:
                    continue
                acc.append(e)
                rec(k if e[1] == 0 else k + 1, remaining - e[0], acc)
                acc.pop()

        rec(0, degree, [])
        return sorted(out)


class SuperElement(dict):
    """Sparse linear combination monomial -> Fraction."""

    @classmethod
    def vac(cls) -> "SuperElement":
        return cls({(): Fraction(1)})

    def __add__(self, other: "SuperElement") -> "SuperElement":
        out = SuperElement(self)
        for k, v in other.items():
            out[k] = out.get(k, Fraction(0)) + v
            if out[k] == 0:
                del out[k]
        return out

    def __sub__(self, other: "SuperElement") -> "SuperElement":
        return self + other.scale(Fraction(-1))

    def scale(self, x: Fraction) -> "SuperElement":
        return SuperElement({k: v * x for k, v in self.items() if v * x != 0})

    def equals(self, other: "SuperElement") -> bool:
        return {k: v for k, v in self.items() if v} == \
               {k: v for k, v in other.items() if v}


def _insert_entry(mono: Monomial, e: Entry) -> tuple[Monomial, int] | None:
    """Sorted insertion with Koszul sign; None if an odd entry repeats."""
    pos = 0
    while pos < len(mono) and mono[pos] < e:
        pos += 1
    if e[1] == 1:
        if e in mono:
            return None
        crossed = sum(1 for x in mono[:pos] if x[1] == 1)
        sign = -1 if crossed % 2 else 1
    else:
        sign = 1
    return mono[:pos] + (e,) + mono[pos:], sign


def sf_a_plus(space: SuperFockSpace, w: Generator, m: int):
    """Creation: supersymmetric multiplication by the mode-m copy of w."""
    space.check_generator(w)
    if m < 1:
        raise HeisenbergError("mode must be >= 1")
    e: Entry = (m, w[0], w[1])

    def apply(u: SuperElement) -> SuperElement:
        out = SuperElement()
        for mono, coeff in u.items():
            ins = _insert_entry(mono, e)
            if ins is None:
                continue
            new, sign = ins
            out[new] = out.get(new, Fraction(0)) + coeff * sign
            if out[new] == 0:
                del out[new]
        return out

    return apply


def sf_a_minus(space: SuperFockSpace, eta: Generator, m: int):
    """Annihilation: superderivation contracting mode-m copies of the
    generator dual to eta, with coefficient m <eta, w> = m."""
    space.check_generator(eta)
    if m < 1:
        raise HeisenbergError("mode must be >= 1")
    e: Entry = (m, eta[0], eta[1])

    def apply(u: SuperElement) -> SuperElement:
        out = SuperElement()
        for mono, coeff in u.items():
            for pos, entry in enumerate(mono):
                if entry != e:
                    continue
                if e[1] == 1:
                    crossed = sum(1 for x in mono[:pos] if x[1] == 1)
                    sign = -1 if crossed % 2 else 1
                else:
                    sign = 1
                new = mono[:pos] + mono[pos + 1:]
                out[new] = out.get(new, Fraction(0)) + coeff * sign * m
                if out[new] == 0:
                    del out[new]
        return out

    return apply


def sf_commutator_check(d0: int, d1: int, max_degree: int,
                        max_mode: int) -> Report:
    """Theorem 5.1 super relations on SuperFockSpace(d0, d1): commutators,
    with anticommutators on odd-odd pairs, plus the graded dimension."""
    from .scalars import graded_dim_series

    space = SuperFockSpace(d0, d1)
    rep = Report(f"sf_commutator_check({d0},{d1}, N={max_degree}, M={max_mode})")
    basis = [SuperElement({mono: Fraction(1)})
             for n in range(max_degree + 1)
             for mono in space.monomials(n)]
    gens = space.generators()

    def bracket(op1, par1, op2, par2, u):
        anti = par1 == 1 and par2 == 1
        second = op2(op1(u))
        first = op1(op2(u))
        return first + second if anti else first - second

    ok, witness = True, None
    for m in range(1, max_mode + 1):
        for l in range(1, max_mode + 1):
            for eta in gens:
                for w in gens:
                    down = sf_a_minus(space, eta, m)
                    up = sf_a_plus(space, w, l)
                    scalar = Fraction(l) if (m == l and eta == w) else Fraction(0)
                    for u in basis:
                        got = bracket(down, eta[0], up, w[0], u)
                        if not got.equals(u.scale(scalar)):
                            ok = False
                            witness = f"m={m},l={l},eta={eta},w={w}"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("super Eq. (24): [a_-m(eta), a_l(w)] = l delta delta",
            ok, witness)

    ok, witness = True, None
    for m in range(1, max_mode + 1):
        for l in range(1, max_mode + 1):
            for w1 in gens:
                for w2 in gens:
                    up1 = sf_a_plus(space, w1, m)
                    up2 = sf_a_plus(space, w2, l)
                    dn1 = sf_a_minus(space, w1, m)
                    dn2 = sf_a_minus(space, w2, l)
                    for u in basis:
                        if not bracket(up1, w1[0], up2, w2[0], u).equals(
                                SuperElement()):
                            ok, witness = False, f"create m={m},l={l}"
                            break
                        if not bracket(dn1, w1[0], dn2, w2[0], u).equals(
                                SuperElement()):
                            ok, witness = False, f"annihilate m={m},l={l}"
                            break
                    if not ok:
                        break
                if not ok:
                    break
            if not ok:
                break
        if not ok:
            break
    rep.add("super Eq. (25)/(26): like operators super-commute",
            ok, witness)

    counts = [len(space.monomials(n)) for n in range(max_degree + 1)]
    want = graded_dim_series(d0, d1, max_degree)
    ok = all(Fraction(c) == want.coefficient(n) for n, c in enumerate(counts))
    rep.add("graded dimension matches (1+q^r)^d1/(1-q^r)^d0",
            ok, None if ok else str(counts))
    return rep


def heisenberg_verify(group: FiniteGroup, max_degree: int,
                      max_mode: int) -> Report:
    """The full Heisenberg suite for one group: relations, oracle,
    vacuum cyclicity, and a small super sweep."""
    rep = Report(f"heisenberg_verify({group.name}, N={max_degree}, M={max_mode})")
    rep.extend(commutator_check(group, max_degree, max_mode).checks)
    rep.add("vacuum is cyclic: rank = dim C(G_n) per degree",
            irreducibility_check(group, max_degree))
    sup = sf_commutator_check(1, 1, min(max_degree, 4), min(max_mode, 2))
    rep.add("super Fock relations (d0=d1=1)", sup.all_passed,
            None if sup.all_passed else sup.first_failure.name)
    return rep
