"""
Tests for the dihedral parking space characters and cyclotomic arithmetic.
"""

from fractions import Fraction

import pytest

from src.parkspace.core.conditions import dihedral_character_condition
from src.parkspace.core.dihedral import (
    dihedral_certificates,
    dihedral_character_table,
    dihedral_character_value,
    dihedral_classes,
    dihedral_closure_check,
    dihedral_condition_check,
    dihedral_decomposition,
    dihedral_inner_product,
    dihedral_irreducibles,
    dihedral_perm_decomposition,
    dihedral_perm_reconstruct,
    dihedral_shifted_expansions,
    dihedral_ungraded_multiplicities,
    phi_dihedral,
)
from src.parkspace.core.errors import DomainError
from src.parkspace.core.groups import catalan_q, dihedral_group
from src.parkspace.core.models import Basis
from src.parkspace.core.numberfield import CyclotomicNumber


class TestCyclotomicNumber:
    """Test arithmetic in Q(zeta_m)."""

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 8, 12])
    def test_roots_of_unity_sum_to_zero(self, m):
        total = sum((CyclotomicNumber.zeta(m, i) for i in range(m)), start=CyclotomicNumber(m))
        assert total.is_zero

    @pytest.mark.parametrize("m", [3, 5, 7, 10])
    def test_zeta_has_order_m(self, m):
        power = CyclotomicNumber.rational(m, 1)
        for _ in range(m):
            power = power * CyclotomicNumber.zeta(m)
        assert power == 1

    def test_conjugate(self):
        zeta = CyclotomicNumber.zeta(5, 2)
        assert zeta.conjugate() == CyclotomicNumber.zeta(5, 3)
        assert (zeta + zeta.conjugate()).conjugate() == zeta + zeta.conjugate()

    def test_rational_values(self):
        assert CyclotomicNumber.zeta(2) == -1
        assert (CyclotomicNumber.zeta(4) * CyclotomicNumber.zeta(4)).to_fraction() == -1
        with pytest.raises(DomainError):
            CyclotomicNumber.zeta(4).to_fraction()

    def test_fields_do_not_mix(self):
        with pytest.raises(DomainError):
            CyclotomicNumber.zeta(3) + CyclotomicNumber.zeta(4)


class TestDihedralCharacters:
    """Test classes and the character table."""

    def test_classes(self):
        assert [c.label for c in dihedral_classes(4)] == ["1", "a^1", "a^2", "b", "ab"]
        assert [c.label for c in dihedral_classes(5)] == ["1", "a^1", "a^2", "b"]
        for m in range(2, 9):
            assert sum(c.size for c in dihedral_classes(m)) == 2 * m

    def test_irreducibles(self):
        assert dihedral_irreducibles(4) == ["xi_0", "xi_1", "xi_2", "xi_3", "chi_1"]
        assert dihedral_irreducibles(5) == ["xi_0", "xi_1", "chi_1", "chi_2"]

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 8])
    def test_orthogonality(self, m):
        classes = dihedral_classes(m)
        labels = dihedral_irreducibles(m)
        for a in labels:
            for b in labels:
                total = CyclotomicNumber(m)
                for cls in classes:
                    value = dihedral_character_value(m, a, cls) * dihedral_character_value(m, b, cls).conjugate()
                    total = total + value * cls.size
                assert total == (2 * m if a == b else 0)

    def test_table_shape(self):
        table = dihedral_character_table(6)
        assert set(table) == set(dihedral_irreducibles(6))
        assert table["chi_1"]["1"] == 2
        assert table["chi_2"]["a^3"] == 2

    def test_unknown_character(self):
        with pytest.raises(DomainError):
            dihedral_character_value(4, "psi", dihedral_classes(4)[0])

    def test_phi_values(self):
        phi = phi_dihedral(4, 3)
        assert phi["1"] == 9
        assert phi["a^2"] == 1
        assert phi["b"] == 3


class TestDihedralMultiplicities:
    """Test the multiplicities of phi_k and of the two-variable character."""

    def test_ungraded_values(self):
        assert dihedral_ungraded_multiplicities(4, 3) == {
            "xi_0": 3, "xi_1": 0, "xi_2": 1, "xi_3": 1, "chi_1": 2,
        }
        values = dihedral_ungraded_multiplicities(4, 5)
        assert (values["xi_0"], values["xi_1"], values["xi_2"], values["chi_1"]) == (6, 1, 3, 6)
        values = dihedral_ungraded_multiplicities(5, 4)
        assert (values["xi_0"], values["xi_1"], values["chi_1"]) == (4, 0, 3)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6, 7])
    def test_ungraded_match_inner_products(self, m):
        for k in range(1, 11):
            assert dihedral_ungraded_multiplicities(m, k) == dihedral_inner_product(m, k)

    @pytest.mark.parametrize("m", [2, 3, 4, 5, 6])
    def test_closure(self, m):
        assert all(dihedral_closure_check(m).values())

    @pytest.mark.parametrize("m,k", [(4, 3), (4, 5), (5, 4), (5, 6), (6, 7), (3, 2)])
    def test_graded_specialise_to_ungraded(self, m, k):
        graded = dihedral_decomposition(m, k)
        assert graded.representation_valid
        ungraded = dihedral_ungraded_multiplicities(m, k)
        for entry in graded.entries:
            assert entry.coeff.to_polynomial()(1) == ungraded[entry.label]

    def test_graded_fails_off_condition(self):
        assert not dihedral_decomposition(4, 2).representation_valid

    def test_ungraded_needs_k(self):
        with pytest.raises(DomainError):
            dihedral_decomposition(4, graded=False)

    def test_two_variable_entries_are_not_representations(self):
        decomposition = dihedral_decomposition(4)
        assert decomposition.k is None
        assert not decomposition.representation_valid


class TestDihedralPermutation:
    """Test the expansion over permutation characters."""

    def test_coefficients(self):
        coeffs = dihedral_perm_decomposition(4, 3).as_dict()
        assert coeffs == {"triv": 1, "eta_1": 1, "eta_2": 1, "eta_reg": 0}
        coeffs = dihedral_perm_decomposition(4, 5).as_dict()
        assert (coeffs["eta_1"], coeffs["eta_reg"]) == (2, 1)
        assert dihedral_perm_decomposition(5, 4).as_dict() == {"triv": 1, "eta_1": 3, "eta_reg": 0}

    def test_basis(self):
        assert dihedral_perm_decomposition(3, 2).basis == Basis.PERMUTATION

    @pytest.mark.parametrize("m", [2, 3, 4, 7, 8])
    def test_reconstructs_phi(self, m):
        for k in range(1, 3 * m):
            phi = phi_dihedral(m, k)
            reconstructed = dihedral_perm_reconstruct(m, k)
            assert all(reconstructed[c] == phi[c] for c in phi)


class TestDihedralConditions:
    """Test the characterisation of k for which phi_k is a (permutation) character."""

    def test_examples(self):
        assert dihedral_condition_check(4, 3).is_character
        assert dihedral_condition_check(4, 3).is_perm_decomposable
        check = dihedral_condition_check(5, 2)
        assert not check.is_character
        assert check.multiplicities["xi_1"] < 0

    @pytest.mark.parametrize("m", range(2, 13))
    def test_condition_matches_scan(self, m):
        condition = dihedral_character_condition(m)
        for k in range(1, 4 * m + 1):
            check = dihedral_condition_check(m, k)
            assert check.is_character == condition.contains(k)
            assert check.is_perm_decomposable == check.is_character

    def test_floor_matters(self):
        # 5^2 = 1 mod 24, but phi_5 is not a character of the group of order 24
        assert not dihedral_condition_check(12, 5).is_character
        assert not dihedral_character_condition(12).contains(5)
        assert dihedral_character_condition(12).contains(13)


class TestShiftedExpansions:
    """Test q-binomial coordinates after shifting u."""

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_closed_forms(self, m):
        for expansion in dihedral_shifted_expansions(m):
            assert expansion.matches, expansion.name

    @pytest.mark.parametrize("m", [3, 4, 5, 6])
    def test_certificates(self, m):
        certificates = dihedral_certificates(m)
        assert all(c.all_in_Nq for c in certificates.values())
        assert {label for label, _ in certificates} == set(dihedral_irreducibles(m))

    def test_coordinates_are_polynomials(self):
        for expansion in dihedral_shifted_expansions(4):
            assert all(c.is_polynomial() for c in expansion.certificate.coefficients)

    def test_fraction_types(self):
        assert isinstance(dihedral_ungraded_multiplicities(3, 2)["xi_0"], Fraction)


@pytest.mark.slow
class TestDihedralCatalan:
    """The trivial multiplicity is Cat_k of the dihedral group."""

    @pytest.mark.parametrize("m", range(3, 13))
    def test_trivial_is_catalan(self, m):
        group = dihedral_group(m)
        for k in range(1, 11):
            assert catalan_q(group, k) == dihedral_decomposition(m, k).coefficient("xi_0")


@pytest.mark.slow
class TestDihedralFullRange:
    """Closure and certificates for every m up to 12."""

    @pytest.mark.parametrize("m", range(2, 13))
    def test_closure(self, m):
        assert all(dihedral_closure_check(m).values())

    @pytest.mark.parametrize("m", range(3, 13))
    def test_closed_forms(self, m):
        for expansion in dihedral_shifted_expansions(m):
            assert expansion.matches, expansion.name

    @pytest.mark.parametrize("m", range(3, 13))
    def test_certificates(self, m):
        certificates = dihedral_certificates(m)
        assert all(c.all_in_Nq for c in certificates.values())
        assert {label for label, _ in certificates} == set(dihedral_irreducibles(m))
