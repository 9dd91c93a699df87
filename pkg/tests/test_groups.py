from fractions import Fraction

import pytest

from langkit.groups import (
    GroupError,
    borel_modulus_compose,
    delta_half_rational,
    distinguished_coroot,
    half_integrality_check,
    maximal_levi,
    modulus_borel,
    modulus_borel_root_sum,
    modulus_levi,
    modulus_levi_root_sum,
    rho_tilde,
    rho_tilde_ambient,
    so_even,
    so_odd,
    sp,
    unitary,
)


class TestModulusLevi:
    def test_unitary_small(self):
        # block 1 over core U_1 inside U_3
        assert modulus_levi(maximal_levi(unitary(3), 1)) == 2
        # block 2 over core U_1 inside U_5
        assert modulus_levi(maximal_levi(unitary(5), 2)) == 3

    def test_siegel_symplectic(self):
        assert modulus_levi(maximal_levi(sp(2), 2)) == 3

    @pytest.mark.parametrize("n", range(1, 5))
    def test_split_families_against_root_sum(self, n):
        for r in range(1, n + 1):
            for make in (sp, so_odd, so_even):
                levi = maximal_levi(make(n), r)
                assert modulus_levi(levi) == modulus_levi_root_sum(levi)

    @pytest.mark.parametrize("N", range(2, 10))
    def test_unitary_against_root_sum(self, N):
        for r in range(1, N // 2 + 1):
            levi = maximal_levi(unitary(N), r)
            assert modulus_levi(levi) == modulus_levi_root_sum(levi)

    def test_needs_maximal(self):
        from langkit.groups import LeviDescriptor

        levi = LeviDescriptor(((1, "F"), (1, "F")), sp(1), sp(3))
        with pytest.raises(GroupError):
            modulus_levi(levi)


class TestModulusBorel:
    def test_unitary_values(self):
        assert modulus_borel(unitary(2)) == (Fraction(1),)
        assert modulus_borel(unitary(5)) == (Fraction(4), Fraction(2))
        assert modulus_borel(unitary(9)) == tuple(map(Fraction, (8, 6, 4, 2)))

    def test_symplectic(self):
        assert modulus_borel(sp(2)) == (Fraction(4), Fraction(2))

    @pytest.mark.parametrize("N", range(1, 10))
    def test_unitary_oracle(self, N):
        assert modulus_borel(unitary(N)) == modulus_borel_root_sum(unitary(N))

    def test_split_oracle(self):
        for n in range(1, 5):
            assert modulus_borel(sp(n)) == modulus_borel_root_sum(sp(n))
            assert modulus_borel(so_odd(n)) == modulus_borel_root_sum(so_odd(n))
            if n >= 2:
                assert modulus_borel(so_even(n)) == modulus_borel_root_sum(so_even(n))

    def test_compositionality(self):
        for N in range(2, 10):
            for r in range(1, N // 2 + 1):
                assert borel_modulus_compose(unitary(N), r)
        for n in range(1, 5):
            for r in range(1, n + 1):
                assert borel_modulus_compose(sp(n), r)
                assert borel_modulus_compose(so_odd(n), r)


class TestRhoTilde:
    def test_unitary_truncation(self):
        levi = maximal_levi(unitary(4), 1)
        assert rho_tilde(levi).coords == (Fraction(1), Fraction(0))
        assert rho_tilde_ambient(levi).coords == tuple(map(Fraction, (1, 0, 0, -1)))

    def test_single_block(self):
        assert rho_tilde(maximal_levi(unitary(2), 1)).coords == (Fraction(1),)

    def test_two_block(self):
        assert rho_tilde(maximal_levi(unitary(6), 2)).coords == tuple(map(Fraction, (1, 1, 0)))

    @pytest.mark.parametrize("N", range(2, 10))
    def test_pairs_to_one_with_coroot(self, N):
        for r in range(1, N // 2 + 1):
            levi = maximal_levi(unitary(N), r)
            rt = rho_tilde(levi)
            cr = distinguished_coroot(levi)
            assert sum(a * b for a, b in zip(rt.coords, cr)) == 1

    def test_split_families_pair_to_one(self):
        for n in range(1, 5):
            for r in range(1, n + 1):
                levi = maximal_levi(sp(n), r)
                assert sum(
                    a * b for a, b in zip(rho_tilde(levi).coords, distinguished_coroot(levi))
                ) == 1


def test_half_integrality():
    ok, vals, idx = half_integrality_check(["1/2", 0])
    assert ok and idx is None
    ok, vals, idx = half_integrality_check(["1/3"])
    assert not ok and idx == 0
    ok, vals, idx = half_integrality_check(["3/2", "-1/2", 1])
    assert ok and vals == (Fraction(3, 2), Fraction(-1, 2), Fraction(1))


def test_delta_half_rational_parity():
    assert delta_half_rational(maximal_levi(unitary(3), 1))  # 1 + 1 even
    assert not delta_half_rational(maximal_levi(unitary(4), 1))  # 1 + 2 odd
    assert delta_half_rational(maximal_levi(unitary(6), 2))  # 2 + 2 even
    with pytest.raises(GroupError):
        delta_half_rational(maximal_levi(sp(3), 1))
