from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gxinduce.kernel import (
    ApproxField,
    ConductorOverflow,
    ExactField,
    Mat,
    Scalar,
    nullspace,
    rank,
    solve_linear,
)
from gxinduce.kernel.scalar import MAX_CONDUCTOR

N = 16
rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6)
scalars = st.lists(rationals, min_size=1, max_size=8).map(lambda cs: Scalar.from_coeffs(N, cs))


def test_zeta4_squared():
    z = Scalar.zeta(1, 4)
    assert z * z == Scalar.from_rational(-1, 4)


def test_one_times_a():
    a = Scalar.from_coeffs(8, [1, Fraction(2, 3), -1])
    assert Scalar.one(8) * a == a


def test_one_plus_zeta_times_one_minus_zeta():
    z = Scalar.zeta(1, 4)
    one = Scalar.one(4)
    assert (one + z) * (one - z) == Scalar.from_rational(2, 4)


def test_mixed_conductors_lift():
    assert Scalar.zeta(1, 4) * Scalar.zeta(1, 8) == Scalar.zeta(3, 8)


def test_lift_overflow():
    with pytest.raises(ConductorOverflow):
        Scalar.one(4).lift(4 * MAX_CONDUCTOR)


def test_sqrt2_squares_to_two():
    r = Scalar.sqrt2(16)
    assert r * r == 2
    assert abs(r.to_complex() - 2 ** 0.5) < 1e-12


@given(scalars, scalars)
def test_add_sub_roundtrip(a, b):
    assert (a + b) - b == a


@given(scalars, scalars)
@settings(max_examples=40)
def test_mul_div_roundtrip(a, b):
    if b.is_zero():
        return
    assert (a * b) / b == a


@given(scalars, scalars, scalars)
@settings(max_examples=40)
def test_distributive(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(scalars)
def test_conjugation_involutive(a):
    assert a.conjugate().conjugate() == a


@given(scalars, scalars)
@settings(max_examples=40)
def test_conjugation_multiplicative(a, b):
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()


@given(scalars)
def test_conjugate_matches_complex(a):
    assert abs(a.conjugate().to_complex() - a.to_complex().conjugate()) < 1e-9


@given(scalars)
def test_zero_is_unique_additive_identity(a):
    z = Scalar.zero(N)
    assert a + z == a
    assert (a - a) == z and (a - a).is_zero()


def test_zero_coeffs_equal_zero():
    assert Scalar.from_coeffs(N, [0, 0, 0]) == Scalar.zero(N)


def test_identity_homogeneous_has_no_solutions():
    f = ExactField(1)
    sol = solve_linear(Mat.identity(3, f), None, f)
    assert sol.kernel == []


def test_zero_matrix_kernel_dim_two():
    f = ExactField(1)
    assert len(nullspace(Mat.zeros(2, 2, f), f)) == 2


def test_all_ones_kernel():
    f = ExactField(1)
    m = Mat.from_rows([[1, 1], [1, 1]]).map(f.coerce)
    kern = nullspace(m, f)
    assert len(kern) == 1
    v = kern[0]
    assert v[0] == -v[1] and not v[0].is_zero()


def test_inhomogeneous_solution():
    f = ExactField(4)
    i = Scalar.i(4)
    m = Mat.from_rows([[1, i], [0, 1]]).map(f.coerce)
    sol = solve_linear(m, [f.coerce(1), f.coerce(2)], f)
    assert sol.consistent
    assert sol.particular[1] == 2 and sol.particular[0] == 1 - 2 * i


def test_inconsistent_system():
    f = ExactField(1)
    m = Mat.from_rows([[1, 1], [1, 1]]).map(f.coerce)
    assert not solve_linear(m, [f.coerce(0), f.coerce(1)], f).consistent


small = st.integers(min_value=-2, max_value=2)


@given(st.integers(1, 4), st.integers(1, 4), st.data())
@settings(max_examples=40)
def test_rank_nullity(r, c, data):
    f = ExactField(4)
    i = Scalar.i(4)
    rows = [[f.coerce(data.draw(small)) + i * data.draw(small) for _ in range(c)] for _ in range(r)]
    m = Mat(r, c, rows)
    assert rank(m, f) + len(nullspace(m, f)) == c


@given(st.integers(1, 3), st.data())
@settings(max_examples=30)
def test_adjoint_of_product(n, data):
    f = ExactField(8)
    z = Scalar.zeta(1, 8)

    def mat():
        return Mat(n, n, [[f.coerce(data.draw(small)) * z ** data.draw(st.integers(0, 7)) for _ in range(n)] for _ in range(n)])

    a, b = mat(), mat()
    assert (a @ b).conj_transpose().equals(b.conj_transpose() @ a.conj_transpose(), f)


def test_approx_field_tolerance():
    f = ApproxField(1e-9)
    m = Mat(2, 2, [[1, 1], [1, 1 + 1e-12]])
    assert rank(m, f) == 1
    assert f.equal(f.coerce(Scalar.zeta(1, 4)), 1j)
