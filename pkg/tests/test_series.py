"""Power series engine: products, composition, reversion, Jackson and Euler
operators, with classical reversion formulas as the independent oracle."""

import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qvirial import (
    MixedBackendError,
    NonzeroConstantTermError,
    PowerSeries,
    QBasic,
    Quadratic,
    RATIONAL,
    SURD,
    SurdRational,
    UNDEFORMED,
    ZeroLinearCoefficientError,
    compose,
    euler_inverse,
    half_power,
    jackson_apply,
    revert,
)

from helpers import rand_fraction


def rational_series(coeffs, var="z"):
    return PowerSeries(var, RATIONAL, [Fraction(c) for c in coeffs])


def surd_series(coeffs, var="z"):
    out = []
    for c in coeffs:
        out.append(c if isinstance(c, SurdRational) else SurdRational.from_fraction(c))
    return PowerSeries(var, SURD, out)


# -- arithmetic ----------------------------------------------------------------


def test_mul_truncates():
    one_plus = rational_series([1, 1])
    one_minus = rational_series([1, -1])
    assert (one_plus.truncate(2) * one_minus.truncate(2)) == rational_series([1, 0])
    padded = rational_series([1, 1, 0]) * rational_series([1, -1, 0])
    assert padded == rational_series([1, 0, -1])


def test_add_requires_same_backend_and_var():
    with pytest.raises(MixedBackendError):
        rational_series([1, 2]) + surd_series([1, 2])
    with pytest.raises(ValueError):
        rational_series([1, 2]) + rational_series([1, 2], var="x")


def test_compose_identity_inner():
    f = rational_series([0, 1, 1])
    assert compose(f, PowerSeries.identity("z", RATIONAL, 2)) == f


def test_compose_doubling():
    outer = rational_series([0, 0, 1, 0])  # z^2
    inner = rational_series([0, 2, 0, 0])  # 2z
    assert compose(outer, inner) == rational_series([0, 0, 4, 0])


def test_compose_rejects_nonzero_constant():
    with pytest.raises(NonzeroConstantTermError):
        compose(rational_series([0, 1]), rational_series([1, 1]))


# -- reversion -----------------------------------------------------------------


def test_revert_identity():
    f = PowerSeries.identity("z", RATIONAL, 5)
    assert revert(f).coeffs == f.coeffs


def test_revert_catalan_numbers():
    f = rational_series([0, 1, -1, 0, 0])  # z - z^2
    g = revert(f)
    assert g.var == "x"
    assert g.coeffs == (0, 1, 1, 2, 5)
    assert compose(f, g) == PowerSeries.identity("x", RATIONAL, 4)


def test_revert_undeformed_density_series():
    # x(z) = sum z^n/n^(3/2): the x^2 coefficient of z(x) must be -2^(-3/2)
    coeffs = [SURD.zero] + [half_power(n, 3) for n in range(1, 3)]
    g = revert(PowerSeries("z", SURD, coeffs))
    assert g.coeffs[1] == SurdRational.from_fraction(1)
    assert g.coeffs[2] == -half_power(2, 3)


def test_revert_classical_formulas():
    # independent oracle: the corrected classical reversion coefficients
    rng = random.Random(20260810)
    for _ in range(50):
        a2, a3, a4, a5 = (rand_fraction(rng) for _ in range(4))
        f = rational_series([0, 1, a2, a3, a4, a5])
        g = revert(f)
        assert g.coeffs[1] == 1
        assert g.coeffs[2] == -a2
        assert g.coeffs[3] == 2 * a2**2 - a3
        assert g.coeffs[4] == -5 * a2**3 + 5 * a2 * a3 - a4
        assert g.coeffs[5] == 14 * a2**4 - 21 * a2**2 * a3 + 6 * a2 * a4 + 3 * a3**2 - a5


def test_revert_nonunit_rational_linear_coefficient():
    rng = random.Random(7)
    for _ in range(10):
        c1 = Fraction(0)
        while not c1:
            c1 = rand_fraction(rng)
        f = rational_series([0, c1, rand_fraction(rng), rand_fraction(rng)])
        g = revert(f)
        assert compose(f, g) == PowerSeries.identity("x", RATIONAL, 3)


def test_revert_requires_invertible_linear_term():
    with pytest.raises(ZeroLinearCoefficientError):
        revert(rational_series([0, 0, 1]))
    with pytest.raises(NonzeroConstantTermError):
        revert(rational_series([1, 1]))
    with pytest.raises(ZeroLinearCoefficientError):
        revert(surd_series([0, SurdRational.sqrt_int(2), 1]))


surd_coeff_st = st.fractions(min_value=-2, max_value=2, max_denominator=6).flatmap(
    lambda c: st.sampled_from([1, 2, 3, 5]).map(lambda r: SurdRational({r: c}))
)


@given(st.lists(surd_coeff_st, min_size=3, max_size=7))
@settings(max_examples=60, deadline=None)
def test_revert_round_trip_property(tail):
    coeffs = [SURD.zero, SURD.one] + list(tail)
    f = PowerSeries("z", SURD, coeffs)
    g = revert(f)
    k = f.order
    assert compose(f, g) == PowerSeries.identity("x", SURD, k)
    assert compose(g, PowerSeries("x", SURD, f.coeffs)) == PowerSeries.identity("x", SURD, k)


# -- operators -----------------------------------------------------------------


def test_jackson_on_monomials():
    q = Fraction(2)
    for k in range(5):
        monomial = PowerSeries.from_terms("z", RATIONAL, 4, {k: Fraction(1)})
        image = jackson_apply(QBasic(q), monomial)
        expected = PowerSeries.from_terms(
            "z", RATIONAL, 4, {k: Fraction(2**k - 1)}
        )  # [k]_2 = 2^k - 1
        assert image == expected


def test_jackson_quadratic_kills_cutoff_mode():
    cubed = PowerSeries.from_terms("z", RATIONAL, 3, {3: Fraction(1)})
    assert jackson_apply(Quadratic(Fraction(1, 2)), cubed) == PowerSeries.zero("z", RATIONAL, 3)


def test_jackson_undeformed_is_euler_operator():
    f = rational_series([3, 1, 4, 1, 5])
    image = jackson_apply(UNDEFORMED, f)
    assert image == rational_series([0, 1, 8, 3, 20])


def test_jackson_is_linear_and_diagonal():
    rng = random.Random(99)
    sf = QBasic(Fraction(3, 2))
    for _ in range(20):
        f = rational_series([rand_fraction(rng) for _ in range(6)])
        g = rational_series([rand_fraction(rng) for _ in range(6)])
        scalar = rand_fraction(rng)
        assert jackson_apply(sf, f + g) == jackson_apply(sf, f) + jackson_apply(sf, g)
        assert jackson_apply(sf, f.scale(scalar)) == jackson_apply(sf, f).scale(scalar)


def test_euler_inverse_examples():
    assert euler_inverse(rational_series([0, 1])) == rational_series([0, 1])
    f = rational_series([0, 2, 6, 12])
    assert euler_inverse(f) == rational_series([0, 2, 3, 4])
    with pytest.raises(NonzeroConstantTermError):
        euler_inverse(rational_series([1, 1]))


def test_euler_inverse_undoes_undeformed_jackson():
    rng = random.Random(4)
    for _ in range(20):
        coeffs = [Fraction(0)] + [rand_fraction(rng) for _ in range(5)]
        f = rational_series(coeffs)
        assert euler_inverse(jackson_apply(UNDEFORMED, f)) == f
        assert jackson_apply(UNDEFORMED, euler_inverse(f)) == f


def test_pressure_euler_pair_on_surds():
    coeffs = [SURD.zero] + [half_power(n, 5) for n in range(1, 6)]
    f = PowerSeries("z", SURD, coeffs)
    stepped = euler_inverse(jackson_apply(UNDEFORMED, f))
    assert stepped == f
