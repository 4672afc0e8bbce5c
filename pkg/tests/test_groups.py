"""Group layer: constructors, conjugacy, class functions, induction, Mackey."""
import json
from fractions import Fraction

import pytest

from wreathfock.groups import (ClassFunction, DualFunctional, FiniteGroup,
                               GroupError, adams_psi,
                               all_subgroup_element_sets, binary_dihedral,
                               builtin, cyclic, dihedral,
                               group_from_cayley_json,
                               group_from_permutations, induce_cf,
                               inner_product, mackey_verify,
                               regular_character, restrict_cf, sigma_basis,
                               subgroup_from_elements, symmetric,
                               trivial_character, trivial_group)


class TestConstruction:
    def test_cyclic(self):
        g = cyclic(4)
        assert g.order == 4 and g.num_classes == 4 and g.exponent == 4
        assert g.inv(1) == 3

    def test_symmetric(self):
        g = symmetric(3)
        assert g.order == 6 and g.num_classes == 3
        assert sorted(len(c) for c in g.classes) == [1, 2, 3]
        assert g.centralizer_orders[0] == 6

    def test_dihedral_and_quaternion(self):
        assert dihedral(4).order == 8 and dihedral(4).num_classes == 5
        q8 = binary_dihedral(2)
        assert q8.order == 8 and q8.num_classes == 5
        # Q8 has a unique element of order 2
        assert sum(1 for k in q8.element_orders if k == 2) == 1
        # D4 has five
        assert sum(1 for k in dihedral(4).element_orders if k == 2) == 5

    def test_bad_tables(self):
        with pytest.raises(GroupError):
            FiniteGroup(((0, 1), (0, 1)))  # no two-sided identity row
        with pytest.raises(GroupError):
            FiniteGroup(((0, 1), (1, 1)))  # 1 has no inverse
        with pytest.raises(GroupError):
            group_from_cayley_json(json.dumps({"order": 3,
                                               "table": [[0, 1], [1, 0]]}))

    def test_permutation_closure(self):
        g = group_from_permutations([(1, 0, 2), (1, 2, 0)], 3)
        assert g.order == 6 and g.num_classes == 3
        with pytest.raises(GroupError):
            group_from_permutations([(0, 0, 1)], 3)

    def test_json_roundtrip(self):
        g = symmetric(3)
        g2 = group_from_cayley_json(g.to_json())
        assert g2.table == g.table

    def test_builtin_dispatch(self):
        assert builtin("cyclic", 5).order == 5
        assert builtin("sl2_f3").order == 24
        with pytest.raises(GroupError):
            builtin("cyclic")
        with pytest.raises(GroupError):
            builtin("sl2_f3", 2)
        with pytest.raises(GroupError):
            builtin("nope")


class TestClassFunctions:
    def test_sigma_orthogonality(self):
        g = symmetric(3)
        for c in range(g.num_classes):
            for d in range(g.num_classes):
                got = inner_product(sigma_basis(g, c), sigma_basis(g, d))
                want = Fraction(g.zeta(c)) if c == d else Fraction(0)
                assert got.as_rational() == want

    def test_regular_character(self):
        g = cyclic(3)
        chi = regular_character(g)
        assert inner_product(chi, trivial_character(g)).as_rational() == 1

    def test_adams_composition(self):
        for g in (symmetric(3), cyclic(4)):
            chi = ClassFunction.from_rationals(
                g, range(1, g.num_classes + 1))
            assert adams_psi(1, chi).equals(chi)
            for n in (2, 3):
                for m in (2, 3):
                    assert adams_psi(n, adams_psi(m, chi)).equals(
                        adams_psi(n * m, chi))

    def test_adams_sign(self):
        g = cyclic(2)
        sign = ClassFunction.from_rationals(g, [1, -1])
        assert adams_psi(2, sign).equals(trivial_character(g))

    def test_dual_pairing(self):
        g = symmetric(3)
        for c in range(g.num_classes):
            for d in range(g.num_classes):
                got = DualFunctional.delta(g, c).pair(sigma_basis(g, d))
                want = Fraction(g.zeta(c)) if c == d else Fraction(0)
                assert got.as_rational() == want


class TestInductionRestriction:
    def test_induced_trivial_from_a3(self):
        g = symmetric(3)
        a3 = next(s for s in all_subgroup_element_sets(g) if len(s) == 3)
        emb = subgroup_from_elements(g, a3)
        ind = induce_cf(emb, trivial_character(emb.source))
        # classes ordered: identity, then by smallest member
        sizes = [g.class_size(c) for c in range(g.num_classes)]
        vals = [v.as_rational() for v in ind.values]
        # Ind(triv) from index-2 subgroup: 2 on classes inside A3, 0 outside
        for c in range(g.num_classes):
            inside = g.class_reps[c] in a3
            assert vals[c] == (2 if inside else 0)
        assert sum(v * s for v, s in zip(vals, sizes)) == g.order

    def test_frobenius_reciprocity(self):
        g = symmetric(3)
        for elems in all_subgroup_element_sets(g):
            emb = subgroup_from_elements(g, elems)
            h = emb.source
            for c in range(h.num_classes):
                f = sigma_basis(h, c)
                for d in range(g.num_classes):
                    chi = sigma_basis(g, d)
                    lhs = inner_product(induce_cf(emb, f), chi)
                    rhs = inner_product(f, restrict_cf(emb, chi))
                    assert lhs.as_rational() == rhs.as_rational()

    def test_subgroup_lattices(self):
        assert len(all_subgroup_element_sets(symmetric(3))) == 6
        assert len(all_subgroup_element_sets(dihedral(4))) == 10
        assert len(all_subgroup_element_sets(binary_dihedral(2))) == 6
        assert len(all_subgroup_element_sets(trivial_group())) == 1

    def test_subgroup_validation(self):
        g = symmetric(3)
        with pytest.raises(GroupError):
            subgroup_from_elements(g, [0, 3])  # 3-cycle without its inverse

    def test_mackey_sweeps(self):
        for g in (symmetric(3), dihedral(4), binary_dihedral(2)):
            assert mackey_verify(g).all_passed
