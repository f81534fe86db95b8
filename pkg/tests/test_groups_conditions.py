"""
Tests for the group registry, q-Catalan numbers and congruence conditions.
"""

from fractions import Fraction

import pytest

from src.parkspace.core.conditions import (
    cat_is_polynomial,
    cat_star_is_polynomial,
    dihedral_character_condition,
    fuss_condition_from_scan,
    integrality_by_scan,
    integrality_condition,
    main_condition,
    q_polynomiality_condition,
    sym_cat_polynomial_via_h,
    zero_case_report,
)
from src.parkspace.core.errors import DomainError
from src.parkspace.core.exact import Polynomial
from src.parkspace.core.groups import (
    catalan_at_one,
    catalan_polynomial,
    catalan_q,
    catalan_star_at_one,
    catalan_star_identity_check,
    catalan_star_q,
    catalan_star_zero_cases,
    group_data,
    is_dihedral,
)
from src.parkspace.core.models import ResidueCondition, coprime_condition


def union(*pieces):
    result = ResidueCondition.nothing()
    for modulus, residues in pieces:
        result = result.union(ResidueCondition(modulus=modulus, residues=list(residues)))
    return result


class TestGroupRegistry:
    """Test group labels, degrees and codegrees."""

    def test_dihedral(self):
        group = group_data("D5")
        assert group.degrees == (2, 5)
        assert group.codegrees == (0, 3)

    def test_imprimitive(self):
        group = group_data("G(2,1,2)")
        assert group.degrees == (2, 4)
        assert group.order == 8

    def test_exceptional_alias(self):
        assert group_data("H3") == group_data("G23")
        group = group_data("G23")
        assert group.degrees == (2, 6, 10)
        assert group.codegrees == (0, 4, 8)
        assert group.order == 120

    def test_e8_is_well_generated(self):
        e8 = group_data("E8")
        assert e8.is_well_generated
        assert e8.coxeter_number == 30

    def test_g_mmn_codegrees(self):
        assert group_data("G(2,2,3)").codegrees == (0, 1, 2)
        assert is_dihedral(group_data("G(5,5,2)"))
        assert not is_dihedral(group_data("G(4,2,2)"))

    @pytest.mark.parametrize("label", ["G(2,2,2)", "D2", "S1", "G38", "X5", "G(4,3,2)"])
    def test_rejected_labels(self, label):
        with pytest.raises(DomainError):
            group_data(label)


class TestCatalan:
    """Test q-Catalan numbers and their specialisations."""

    def test_cat_at_one(self):
        assert catalan_at_one(group_data("S3"), 4) == 5
        assert catalan_at_one(group_data("S2"), 2) == Fraction(3, 2)

    def test_cat_q(self):
        value = catalan_q(group_data("S3"), 4)
        assert value.is_polynomial()
        assert value(1) == 5

    def test_cat_star_q(self):
        group = group_data("S3")
        assert catalan_star_q(group, 4) == Polynomial.monomial(3)
        assert catalan_star_q(group, 2).is_zero

    @pytest.mark.parametrize("label, k", [("S4", 5), ("D6", 5), ("G23", 7), ("G(3,1,2)", 4)])
    def test_star_identity(self, label, k):
        assert catalan_star_identity_check(group_data(label), k)

    @pytest.mark.parametrize("label", ["S4", "D6", "G25"])
    def test_star_identity_at_one(self, label):
        assert catalan_star_identity_check(group_data(label), 1)

    def test_requires_positive_k(self):
        with pytest.raises(DomainError):
            catalan_q(group_data("S3"), 0)

    def test_zero_cases(self):
        assert catalan_star_zero_cases(group_data("G25")) == [1, 4, 7]

    def test_polynomial_in_k(self):
        group = group_data("S3")
        assert catalan_polynomial(group)(4) == 5
        assert catalan_polynomial(group, dual=True)(4) == catalan_star_at_one(group, 4)


class TestResidueCondition:
    """Test the residue condition model."""

    def test_canonical(self):
        condition = ResidueCondition(modulus=12, residues=[1, 7]).canonical()
        assert condition.modulus == 6
        assert condition.residues == (1,)

    def test_residues_normalised(self):
        assert ResidueCondition(modulus=5, residues=[0, 6, 11]).residues == (1, 5)

    def test_floor(self):
        condition = dihedral_character_condition(4)
        assert condition.contains(1)
        assert not condition.contains(2)
        assert condition.contains(3)
        assert condition.contains(5)
        assert not condition.contains(6)

    def test_floor_dropped_when_vacuous(self):
        condition = ResidueCondition(modulus=4, residues=[1], min_k=3).canonical()
        assert condition.min_k is None

    def test_intersect_and_union(self):
        a = ResidueCondition(modulus=2, residues=[1])
        b = ResidueCondition(modulus=3, residues=[1, 2])
        assert a.intersect(b) == ResidueCondition(modulus=6, residues=[1, 5])
        assert a.union(b).equivalent(ResidueCondition(modulus=6, residues=[1, 2, 3, 4, 5]))

    def test_describe(self):
        assert ResidueCondition(modulus=10, residues=[1, 5, 9]).describe() == "k ≡ 1,5,9 mod 10"
        assert ResidueCondition.everything().describe() == "all k"
        assert ResidueCondition.nothing().describe() == "no k"

    def test_coprime(self):
        assert coprime_condition(6) == ResidueCondition(modulus=6, residues=[1, 5])


class TestPolynomiality:
    """Test the q-polynomiality scans."""

    def test_h3_both(self):
        conditions = q_polynomiality_condition(group_data("G23"))
        assert conditions.both == ResidueCondition(modulus=10, residues=[1, 5, 9])

    @pytest.mark.parametrize(
        "index, modulus, residues", [(13, 12, (1, 5)), (15, 12, (1,))]
    )
    def test_cat_exceptions(self, index, modulus, residues):
        conditions = q_polynomiality_condition(group_data(f"G{index}"))
        assert conditions.cat.equivalent(ResidueCondition(modulus=modulus, residues=list(residues)))

    @pytest.mark.parametrize("label", ["S4", "S6", "G(4,1,3)", "G(4,2,2)", "D7", "C5", "G28"])
    def test_both_matches_main(self, label):
        group = group_data(label)
        assert q_polynomiality_condition(group).both.equivalent(main_condition(group))

    def test_threads_do_not_change_result(self):
        group = group_data("G24")
        assert q_polynomiality_condition(group, threads=1) == q_polynomiality_condition(group, threads=4)

    def test_zero_cases_outside(self):
        group = group_data("G25")
        conditions = q_polynomiality_condition(group)
        assert zero_case_report(group, conditions) == [4]

    def test_e7_zero_case_outside(self):
        # codegree 8 gives Cat*_9 = 0 although 9 is not 1,5 mod 6
        group = group_data("E7")
        conditions = q_polynomiality_condition(group)
        assert zero_case_report(group, conditions) == [9]
        assert not conditions.cat.contains(9)

    @pytest.mark.parametrize("label", ["S4", "G25", "D6", "G(3,1,2)", "E7"])
    def test_pointwise_agrees_with_scan(self, label):
        group = group_data(label)
        conditions = q_polynomiality_condition(group)
        for k in range(1, 2 * conditions.scan_modulus + 1):
            assert cat_is_polynomial(group, k) == conditions.cat.contains(k)
            in_star = conditions.cat_star.contains(k) or k in conditions.zero_cases
            assert cat_star_is_polynomial(group, k) == in_star, k

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_via_h(self, n):
        group = group_data(f"S{n}")
        for k in range(1, 9):
            assert sym_cat_polynomial_via_h(n, k) == cat_is_polynomial(group, k)

    def test_fuss_scan(self):
        assert fuss_condition_from_scan(group_data("G(3,1,2)"), 12) == [1, 4, 7, 10]


class TestIntegrality:
    """Test integrality of Cat_k(W,1) and Cat*_k(W,1)."""

    def test_s2(self):
        assert integrality_condition(group_data("S2")) == ResidueCondition(modulus=2, residues=[1])

    def test_g25(self):
        expected = union((6, (1,)), (24, (16,)))
        assert integrality_condition(group_data("G25")).equivalent(expected)

    def test_g36_dual(self):
        expected = union((6, (1, 5)), (162, (9,)))
        assert integrality_condition(group_data("G36"), dual=True).equivalent(expected)

    @pytest.mark.parametrize("label", ["S4", "G4", "G23", "G(3,1,2)", "D5"])
    @pytest.mark.parametrize("dual", [False, True])
    def test_agrees_with_scan(self, label, dual):
        group = group_data(label)
        assert integrality_condition(group, dual).equivalent(integrality_by_scan(group, dual))

    def test_scan_over_several_periods(self):
        group = group_data("S4")
        assert integrality_by_scan(group, periods=3).equivalent(integrality_condition(group))


class TestMainCondition:
    """Test the reference conditions."""

    def test_symmetric(self):
        assert main_condition(group_data("S6")) == ResidueCondition(modulus=6, residues=[1, 5])

    def test_e8(self):
        assert main_condition(group_data("E8")) == ResidueCondition(
            modulus=30, residues=[1, 7, 11, 13, 17, 19, 23, 29]
        )

    def test_imprimitive(self):
        assert main_condition(group_data("G(4,2,3)")) == ResidueCondition(modulus=4, residues=[1])

    def test_dihedral_ungraded(self):
        condition = main_condition(group_data("D4"), ungraded=True)
        assert condition.modulus == 8
        assert condition.residues == (1, 3, 5, 7)
        assert condition.min_k == 3

    def test_dihedral_graded(self):
        assert main_condition(group_data("D6")) == ResidueCondition(modulus=6, residues=[1, 5])
