"""Fock space layer: product, coproduct, antipode, oracles, graded dims."""
from fractions import Fraction

import pytest

from wreathfock.fock import (FockElement, FockError, antipode, comul_splits,
                             counit, fock_comul, fock_exp, fock_mul,
                             graded_dim, hopf_verify, oracle_comul_value,
                             oracle_product, wcf_mul)
from wreathfock.groups import cyclic, symmetric, trivial_group
from wreathfock.scalars import euler_product
from wreathfock.wreath import (EMPTY_TYPE, WreathType, n_cycle_type,
                               sigma_r_c, sigma_rho, z_rho)


class TestProduct:
    def test_sigma_square_value(self):
        g = cyclic(2)
        f = sigma_r_c(g, 1, 0)
        sq = wcf_mul(f, f)
        # sigma_c * sigma_c = sigma^{(1,1)@c}, whose value is Z_rho = 8
        rho = WreathType.from_dict({0: (1, 1)})
        assert sq.value(rho).as_rational() == 8
        assert z_rho(g, rho) == 8

    def test_product_is_type_union(self):
        g = symmetric(3)
        r1 = WreathType.from_dict({0: (2,)})
        r2 = WreathType.from_dict({1: (1,)})
        prod = wcf_mul(sigma_rho(g, r1), sigma_rho(g, r2))
        target = r1.union(r2)
        assert prod.as_dict() == sigma_rho(g, target).as_dict()

    def test_oracle_product_agrees(self):
        g = cyclic(2)
        for r1 in (n_cycle_type(0, 1), n_cycle_type(1, 1),
                   n_cycle_type(0, 2)):
            for r2 in (n_cycle_type(0, 1), n_cycle_type(1, 1)):
                f1, f2 = sigma_rho(g, r1), sigma_rho(g, r2)
                assert oracle_product(f1, f2).equals(wcf_mul(f1, f2))

    def test_fock_mul_unit(self):
        g = cyclic(3)
        u = FockElement.from_wcf(sigma_r_c(g, 2, 1))
        assert fock_mul(FockElement.unit(g), u).equals(u)


class TestCoproduct:
    def test_splits_coefficients(self):
        rho = WreathType.from_dict({0: (1, 1)})
        splits = {(a, b): k for a, b, k in comul_splits(rho)}
        assert splits[(EMPTY_TYPE, rho)] == 1
        assert splits[(rho, EMPTY_TYPE)] == 1
        single = WreathType.from_dict({0: (1,)})
        assert splits[(single, single)] == 2
        assert len(splits) == 3

    def test_splits_zrho_ratio(self):
        g = symmetric(3)
        rho = WreathType.from_dict({0: (2, 1), 1: (1,)})
        for alpha, beta, k in comul_splits(rho):
            assert k == z_rho(g, rho) // (z_rho(g, alpha) * z_rho(g, beta))

    def test_restriction_oracle(self):
        g = cyclic(2)
        for rho in (WreathType.from_dict({0: (2, 1)}),
                    WreathType.from_dict({0: (1,), 1: (2,)})):
            t = fock_comul(FockElement.from_wcf(sigma_rho(g, rho)))
            for (alpha, beta), v in t.vals.items():
                if alpha.degree == 0 or beta.degree == 0:
                    continue
                # tensor values are stored as evaluations at the embedded
                # pair of representatives, matching the element-level oracle
                want = oracle_comul_value(sigma_rho(g, rho), alpha, beta)
                x, y = v.rescale(g.exponent), want.rescale(g.exponent)
                assert (x - y).is_zero()

    def test_counit(self):
        g = cyclic(2)
        u = FockElement.unit(g) * Fraction(5) + \
            FockElement.from_wcf(sigma_r_c(g, 1, 1))
        assert counit(u).as_rational() == 5


class TestAntipode:
    def test_primitives_negate(self):
        g = symmetric(3)
        for r in (1, 2, 3):
            for c in range(g.num_classes):
                u = FockElement.from_wcf(sigma_r_c(g, r, c))
                assert antipode(u).equals(u * Fraction(-1))

    def test_antipode_is_algebra_antimorphism(self):
        g = cyclic(2)
        f1 = sigma_r_c(g, 1, 0)
        f2 = sigma_r_c(g, 2, 1)
        u = FockElement.from_wcf(wcf_mul(f1, f2))
        v = fock_mul(antipode(FockElement.from_wcf(f2)),
                     antipode(FockElement.from_wcf(f1)))
        assert antipode(u).equals(v)


class TestFockElement:
    def test_exp(self):
        g = cyclic(2)
        u = FockElement.from_wcf(sigma_r_c(g, 1, 0))
        e = fock_exp(u, 3)
        sq = wcf_mul(sigma_r_c(g, 1, 0), sigma_r_c(g, 1, 0))
        assert e.component(0).value(EMPTY_TYPE).as_rational() == 1
        assert e.component(1).equals(sigma_r_c(g, 1, 0))
        assert e.component(2).equals(sq * Fraction(1, 2))

    def test_exp_requires_positive_degrees(self):
        g = cyclic(2)
        with pytest.raises(FockError):
            fock_exp(FockElement.unit(g), 3)

    def test_degree_mismatch_guard(self):
        g, h = cyclic(2), cyclic(3)
        with pytest.raises(FockError):
            FockElement.unit(g) + FockElement.unit(h)


class TestGradedDim:
    def test_matches_euler_product(self):
        for g in (trivial_group(), cyclic(2), symmetric(3)):
            got = graded_dim(g, 6)
            want = euler_product(g.num_classes, 6)
            assert got.coeffs == want.coeffs


class TestVerify:
    @pytest.mark.parametrize("group,n", [(trivial_group(), 4),
                                         (cyclic(2), 4)])
    def test_hopf_verify(self, group, n):
        rep = hopf_verify(group, n)
        assert rep.all_passed, rep.to_json()
