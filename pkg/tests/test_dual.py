import numpy as np
import pytest

from langkit.dual import (
    DualError,
    asai_trace,
    conjugation_operator,
    grade_nilradical,
    grade_nilradical_by_roots,
    identify_R1,
    identify_R2,
    phi_matrix,
    std_pushforward,
)
from langkit.groups import gl, res_gl, so_even, so_odd, sp, unitary
from langkit.satake import SatakeClass, ev


class TestPhi:
    @pytest.mark.parametrize("N", range(1, 8))
    def test_constructor_identities(self, N):
        phi = phi_matrix(N)  # asserts the square and transpose identities
        assert phi[0, N - 1] == 1
        assert phi[N - 1, 0] == (-1) ** (N - 1)


class TestGrading:
    def test_small_cases(self):
        assert grade_nilradical(1, 1).as_dict() == {1: (2, "R2"), 2: (1, "R1")}
        assert grade_nilradical(2, 3).as_dict() == {1: (12, "R2"), 2: (4, "R1")}
        assert grade_nilradical(2, 0).as_dict() == {2: (4, "R1")}

    @pytest.mark.parametrize("n", range(1, 7))
    @pytest.mark.parametrize("r", range(0, 7))
    def test_against_root_enumeration(self, n, r):
        grading = grade_nilradical(n, r)
        assert grading.total_dim == n * n + 2 * n * r
        by_roots = grade_nilradical_by_roots(n, r)
        assert {d: dim for d, dim, _ in grading.components} == by_roots


class TestConjugationOperator:
    def test_trace_values(self):
        desc, op = identify_R1(2, 1)
        assert desc.sign == -1 and np.trace(op) == -2
        desc, op = identify_R1(1, 0)
        assert desc.sign == 1 and np.trace(op) == 1
        desc, op = identify_R1(3, 2)
        assert desc.sign == 1 and np.trace(op) == 3

    @pytest.mark.parametrize("n", range(1, 5))
    @pytest.mark.parametrize("r", range(0, 5))
    def test_involution_and_trace(self, n, r):
        desc, op = identify_R1(n, r)
        assert np.array_equal(op @ op, np.eye(n * n, dtype=np.int64))
        assert np.trace(op) == asai_trace((-1) ** r, n)
        assert desc.kind == "asai" and desc.degree == n * n

    def test_signed_permutation_shape(self):
        op = conjugation_operator(3, 1)
        assert np.array_equal(np.abs(op) @ np.ones(9, dtype=np.int64), np.ones(9, dtype=np.int64))


def test_asai_trace_values():
    assert asai_trace(1, 3) == 3
    assert asai_trace(-1, 3) == -3
    assert asai_trace(1, 0) == 0
    with pytest.raises(DualError):
        asai_trace(2, 3)


def test_identify_R2():
    assert identify_R2(1, 1).degree == 1
    assert identify_R2(2, 3).degree == 6
    assert identify_R2(3, 1).degree == 3
    assert identify_R2(2, 3).via_base_change
    with pytest.raises(DualError):
        identify_R2(2, 0)


class TestStdPushforward:
    def test_orthogonal_identity(self):
        cls = SatakeClass((ev(0, "u1"), ev(0, [("u1", -1)])), so_odd(1))
        out = std_pushforward(cls, so_odd(1))
        assert len(out) == 2

    def test_symplectic_appends_one(self):
        cls = SatakeClass((ev(0, "u1"), ev(0, [("u1", -1)])), sp(1))
        out = std_pushforward(cls, sp(1))
        assert len(out) == 3 and "1" in out.serialize()
        big = SatakeClass(
            (ev(0, "u1"), ev(0, [("u1", -1)]), ev(0, "u2"), ev(0, [("u2", -1)])), sp(2)
        )
        assert len(std_pushforward(big, sp(2))) == 5

    def test_unitary_unfolds(self):
        cls = SatakeClass((ev(0, "u1"),), unitary(1))
        assert std_pushforward(cls, unitary(1)).serialize() == ["u1"]
        cls = SatakeClass((ev(0, "u1"), ev(0, "u2")), unitary(4))
        out = std_pushforward(cls, unitary(4))
        assert sorted(out.serialize()) == sorted(["u1", "u2", "u1^-1", "u2^-1"])
        cls = SatakeClass((ev(0, "u1"), ev(0, "u2")), unitary(5))
        out = std_pushforward(cls, unitary(5))
        assert len(out) == 5 and "1" in out.serialize()

    def test_cardinality_is_std_degree(self):
        paired = tuple(ev(0, f"u{i}") for i in (1, 2))
        paired = paired + tuple(e.inverse() for e in paired)
        for group in (sp(2), so_odd(2), so_even(2)):
            assert len(std_pushforward(SatakeClass(paired, group), group)) == group.std_degree
        plain = tuple(ev(0, f"u{i}") for i in (1, 2, 3))
        for group in (gl(3), res_gl(3)):
            assert len(std_pushforward(SatakeClass(plain, group), group)) == group.std_degree

    def test_size_mismatch(self):
        cls = SatakeClass((ev(0, "u1"),), sp(2))
        with pytest.raises(DualError):
            std_pushforward(cls, sp(2))
