"""Lambda operations: outer powers, phi/ch/omega/psi, generating series."""
import random
from fractions import Fraction

import pytest

from wreathfock.groups import (ClassFunction, cyclic, sigma_basis, symmetric,
                               trivial_character)
from wreathfock.lambda_ops import (E_series, H_series, additivity_check,
                                   boxed_binomial, boxtimes_power, ch_n,
                                   exp_phi_series, free_lambda_basis_check,
                                   h_e_identities, h_virtual, lambda_n,
                                   lambda_verify, omega_n, phi_n,
                                   prop_41_status, psi_classical,
                                   psi_composite, regular_representation,
                                   tensor_trace)
from wreathfock.fock import FockElement, fock_mul
from wreathfock.wreath import (WreathType, enumerate_types,
                               enumerate_wreath_elements, n_cycle_type,
                               sigma_r_c, trivial_char)


class TestOuterPower:
    def test_trivial_power_is_trivial(self):
        for g in (cyclic(3), symmetric(3)):
            for n in range(4):
                assert boxtimes_power(trivial_character(g), n).equals(
                    trivial_char(g, n))

    def test_sign_rep_trace_oracle(self):
        g = cyclic(2)
        sign_rep = {0: ((Fraction(1),),), 1: ((Fraction(-1),),)}
        sign_cf = ClassFunction.from_rationals(g, [1, -1])
        for n in (1, 2, 3):
            f = boxtimes_power(sign_cf, n)
            for a in enumerate_wreath_elements(g, n):
                assert f.value_at_element(a).as_rational() == \
                    tensor_trace(sign_rep, a.gs, a.perm)

    def test_regular_rep_trace_oracle(self):
        g = symmetric(3)
        rep = regular_representation(g)
        reg_cf = ClassFunction.from_rationals(
            g, [g.order if c == 0 else 0 for c in range(g.num_classes)])
        f = boxtimes_power(reg_cf, 2)
        rng = random.Random(3)
        elems = enumerate_wreath_elements(g, 2)
        for a in rng.sample(elems, 12):
            assert f.value_at_element(a).as_rational() == \
                tensor_trace(rep, a.gs, a.perm)


class TestPhiChOmega:
    def test_phi_matches_omega(self):
        for g in (cyclic(3), symmetric(3)):
            for c in range(g.num_classes):
                v = sigma_basis(g, c)
                for n in (1, 2, 3):
                    assert phi_n(v, n).equals(omega_n(v, n))

    def test_phi_of_sigma_is_sigma_n(self):
        g = cyclic(3)
        for c in range(3):
            for n in (1, 2, 3):
                assert phi_n(sigma_basis(g, c), n).equals(sigma_r_c(g, n, c))

    def test_ch_inverts_omega(self):
        g = symmetric(3)
        v = ClassFunction.from_rationals(g, [1, -2, 3])
        for n in (1, 2, 3):
            assert ch_n(omega_n(v, n), n).equals(v * Fraction(n))

    def test_psi_candidates(self):
        g = cyclic(2)
        sign = ClassFunction.from_rationals(g, [1, -1])
        assert psi_classical(sign, 2).equals(trivial_character(g))
        assert psi_composite(sign, 2).equals(sign * Fraction(2))

    def test_prop_41_status(self):
        status = prop_41_status(cyclic(2), 2)
        assert status["ch_n(omega_n(V)) = n V"]
        assert status["omega_n(psi^n(V)) = n phi^n(V) [composite]"]
        assert not status["omega_n(psi^n(V)) = n phi^n(V) [classical]"]


class TestLambdaSeries:
    def test_lambda2_of_trivial(self):
        g = cyclic(2)
        f = lambda_n(trivial_character(g), 2)
        assert f.value(WreathType.from_dict({0: (2,)})).as_rational() == -1
        assert f.value(WreathType.from_dict({0: (1, 1)})).as_rational() == 1

    def test_eq21_exponential_form(self):
        for g in (cyclic(2), symmetric(3)):
            for c in range(g.num_classes):
                v = sigma_basis(g, c)
                assert H_series(v, 3).equals(exp_phi_series(v, 3))
                e_minus_q = FockElement(
                    g, {n: f * Fraction((-1) ** n)
                        for n, f in E_series(v, 3).parts.items()})
                assert e_minus_q.equals(exp_phi_series(v, 3, negate=True))

    def test_h_times_e_minus_is_one(self):
        g = cyclic(3)
        v = sigma_basis(g, 1)
        e_minus_q = FockElement(
            g, {n: f * Fraction((-1) ** n)
                for n, f in E_series(v, 4).parts.items()})
        prod = fock_mul(H_series(v, 4), e_minus_q, max_degree=4)
        assert prod.equals(FockElement.unit(g))

    def test_boxed_binomial_additivity(self):
        g = cyclic(2)
        v = sigma_basis(g, 0)
        w = sigma_basis(g, 1)
        for n in (1, 2, 3):
            assert additivity_check(v, w, n)
        assert boxed_binomial(v, w, 2).equals(
            h_virtual([v], [w], 2).component(2))

    def test_h_e_identities_report(self):
        g = symmetric(3)
        rep = h_e_identities(sigma_basis(g, 1), sigma_basis(g, 2), 3)
        assert rep.all_passed


class TestStructure:
    def test_free_basis(self):
        assert free_lambda_basis_check(cyclic(2), 3)
        assert free_lambda_basis_check(symmetric(3), 2)

    @pytest.mark.parametrize("group,n", [(cyclic(2), 3), (symmetric(3), 2)])
    def test_lambda_verify(self, group, n):
        rep = lambda_verify(group, n)
        assert rep.all_passed, rep.to_json()
