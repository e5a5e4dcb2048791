"""Exact coefficient rings: radical normalization, surds, truncated polynomials,
decimal rendering, and ring axioms."""

import math
from decimal import Decimal
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from qvirial import (
    DecimalBackend,
    MixedBackendError,
    SURD,
    SurdRational,
    TruncPoly,
    TruncPolyBackend,
    UnboundVariableError,
    half_power,
    radical_normalize,
    to_decimal,
)

from helpers import sig_agree, surd_oracle_decimal


def brute_square_split(n: int) -> tuple[int, int]:
    # oracle: largest square divisor by direct search
    best = 1
    for s in range(1, math.isqrt(n) + 1):
        if n % (s * s) == 0:
            best = s
    return best, n // (best * best)


# -- radical_normalize -------------------------------------------------------


def test_radical_normalize_identity():
    assert radical_normalize(1) == (1, 1)


def test_radical_normalize_examples():
    assert radical_normalize(12) == brute_square_split(12) == (2, 3)
    assert radical_normalize(18) == brute_square_split(18) == (3, 2)


def test_radical_normalize_matches_brute_force():
    for n in range(1, 500):
        assert radical_normalize(n) == brute_square_split(n)


def test_radical_normalize_idempotent_on_squarefree_part():
    for n in range(1, 200):
        _, r = radical_normalize(n)
        assert radical_normalize(r) == (1, r)


def test_radical_normalize_rejects_nonpositive():
    with pytest.raises(ValueError):
        radical_normalize(0)


# -- half_power --------------------------------------------------------------


def test_half_power_examples():
    assert half_power(1, 5) == SurdRational.from_fraction(1)
    assert half_power(2, 5) == SurdRational({2: Fraction(1, 8)})
    assert half_power(3, 7) == SurdRational({3: Fraction(1, 81)})
    assert half_power(4, 5) == SurdRational.from_fraction(Fraction(1, 32))


def test_half_power_square_is_exact_inverse_power():
    for n in range(1, 30):
        for k in (1, 3, 5, 7, 17):
            value = half_power(n, k)
            assert value * value == SurdRational.from_fraction(Fraction(1, n**k))


def test_half_power_rejects_even_or_nonpositive_k():
    with pytest.raises(ValueError):
        half_power(2, 4)
    with pytest.raises(ValueError):
        half_power(0, 5)


# -- surd ring ---------------------------------------------------------------


def test_sqrt_two_squared():
    root2 = SurdRational.sqrt_int(2)
    assert root2 * root2 == SurdRational.from_fraction(2)


def test_difference_of_squares():
    root2, root3 = SurdRational.sqrt_int(2), SurdRational.sqrt_int(3)
    product = (root2 + root3) * (root2 - root3)
    assert product == SurdRational.from_fraction(-1)
    # decimal cross-check of the factors themselves
    left = surd_oracle_decimal({2: Fraction(1), 3: Fraction(1)})
    right = surd_oracle_decimal({2: Fraction(1), 3: Fraction(-1)})
    assert sig_agree(left * right, Decimal(-1), 40)


def test_radicand_product_normalizes():
    root6 = SurdRational.sqrt_int(2) * SurdRational.sqrt_int(3)
    assert root6 == SurdRational.sqrt_int(6)
    root12 = SurdRational.sqrt_int(6) * SurdRational.sqrt_int(2)
    assert root12 == SurdRational({3: 2})  # sqrt(12) = 2*sqrt(3)


def test_constructor_normalizes_radicands_and_drops_zeros():
    value = SurdRational({8: Fraction(1, 2), 2: Fraction(-1), 5: 0})
    assert value == SurdRational({2: 0}) == SurdRational()
    assert value.is_zero()


def test_division_by_rational_and_zero():
    root2 = SurdRational.sqrt_int(2)
    assert root2 / Fraction(2) == SurdRational({2: Fraction(1, 2)})
    assert root2 / 2 == SurdRational({2: Fraction(1, 2)})
    with pytest.raises(ZeroDivisionError):
        root2 / 0
    with pytest.raises(ValueError):
        root2 / SurdRational.sqrt_int(3)  # general surd inversion is out of scope


def test_mixed_backend_rejected():
    with pytest.raises(MixedBackendError):
        SurdRational.sqrt_int(2) + Decimal("1.5")
    with pytest.raises(MixedBackendError):
        SurdRational.sqrt_int(2) * TruncPoly(("eps",), (2,), {(1,): 1})


def test_rational_part_accessors():
    value = SurdRational.from_fraction(Fraction(-7, 3))
    assert value.is_rational()
    assert value.rational_part() == Fraction(-7, 3)
    with pytest.raises(ValueError):
        SurdRational.sqrt_int(2).rational_part()


# -- rendering ---------------------------------------------------------------


def test_render_matches_contract_example():
    value = SurdRational({2: Fraction(-7, 16), 3: Fraction(1, 81)})
    assert value.render() == "-7/16*sqrt(2) + 1/81*sqrt(3)"


def test_render_ordering_and_signs():
    value = SurdRational({1: Fraction(317, 1728), 2: Fraction(1, 8), 3: Fraction(-1, 6), 5: Fraction(-4, 125)})
    assert value.render() == "317/1728 + 1/8*sqrt(2) - 1/6*sqrt(3) - 4/125*sqrt(5)"
    assert SurdRational().render() == "0"
    assert SurdRational.from_fraction(2).render() == "2"


# -- truncated polynomials ---------------------------------------------------


def test_truncpoly_truncates_on_multiply():
    two_plus_eps = TruncPoly(("eps",), (1,), {(0,): 2, (1,): 1})
    squared = two_plus_eps * two_plus_eps
    assert squared == TruncPoly(("eps",), (1,), {(0,): 4, (1,): 4})


def test_truncpoly_bivariate_and_substitution():
    poly = TruncPoly(("eps", "mu"), (2, 1), {(0, 0): 1, (1, 1): Fraction(3, 2), (2, 0): -1})
    at_mu = poly.substitute({"mu": Fraction(2)})
    assert at_mu == TruncPoly(("eps",), (2,), {(0,): 1, (1,): 3, (2,): -1})
    full = poly.substitute({"mu": Fraction(2), "eps": Fraction(1, 2)})
    assert full == SurdRational.from_fraction(Fraction(1) + Fraction(3, 2) - Fraction(1, 4))


def test_truncpoly_substitute_surd_value():
    poly = TruncPoly(("eps",), (2,), {(2,): 1})
    assert poly.substitute({"eps": SurdRational.sqrt_int(2)}) == SurdRational.from_fraction(2)


def test_truncpoly_render():
    poly = TruncPoly(("eps",), (2,), {(0,): SurdRational({2: Fraction(-1, 8)}), (1,): Fraction(1, 2)})
    assert poly.render() == "(-1/8*sqrt(2)) + (1/2)*eps"


def test_truncpoly_mixed_variables_rejected():
    a = TruncPoly(("eps",), (2,), {(1,): 1})
    b = TruncPoly(("mu",), (2,), {(1,): 1})
    with pytest.raises(MixedBackendError):
        a + b


# -- to_decimal --------------------------------------------------------------


def test_to_decimal_second_virial_anchor():
    assert to_decimal(SurdRational({2: Fraction(-1, 8)}), 6) == "-0.176777"


def test_to_decimal_zero():
    assert to_decimal(SurdRational(), 6) == "0.000000"


def test_to_decimal_third_virial_anchor():
    value = SurdRational({1: Fraction(1, 8), 3: Fraction(-2, 27)})  # 1/8 - 2/(9*sqrt(3))
    assert to_decimal(value, 6) == "-0.003300"


def test_to_decimal_fraction_and_decimal_inputs():
    assert to_decimal(Fraction(1, 8), 3) == "0.125"
    assert to_decimal(Fraction(1, 8), 2) == "0.12"  # half-even
    assert to_decimal(Decimal("-1.25"), 1) == "-1.2"


def test_to_decimal_requires_substituted_poly():
    with pytest.raises(UnboundVariableError):
        to_decimal(TruncPoly(("eps",), (1,), {(1,): 1}), 6)


def test_to_decimal_survives_cancellation():
    # ~1e-6 value assembled from O(0.1) terms; 12 places must all be right
    value = (
        SurdRational({1: Fraction(317, 1728), 2: Fraction(1, 8)})
        + SurdRational({3: Fraction(-1, 6), 5: Fraction(-4, 125)})
    )
    oracle = surd_oracle_decimal(value.terms, prec=80)
    assert to_decimal(value, 12) == f"{oracle:.12f}"


# -- backends ----------------------------------------------------------------


def test_decimal_backend_half_power_matches_surd():
    backend = DecimalBackend(50)
    for n, k in [(2, 5), (3, 7), (4, 5), (12, 3)]:
        exact = surd_oracle_decimal(half_power(n, k).terms, prec=70)
        assert sig_agree(backend.half_power(n, k), exact, 48)


def test_truncpoly_backend_scalars():
    backend = TruncPolyBackend(("eps",), (3,))
    assert backend.one == TruncPoly.constant(("eps",), (3,), 1)
    assert backend.half_power(2, 5) == TruncPoly.constant(("eps",), (3,), SurdRational({2: Fraction(1, 8)}))


# -- ring axioms (property-based) --------------------------------------------

RADICANDS = [1, 2, 3, 5, 6, 7, 10, 11, 13, 15]

fractions_st = st.fractions(min_value=-4, max_value=4, max_denominator=12)

surds_st = st.dictionaries(st.sampled_from(RADICANDS), fractions_st, max_size=3).map(SurdRational)


@st.composite
def truncpolys_st(draw):
    exponents = st.tuples(st.integers(0, 2), st.integers(0, 1))
    coeffs = draw(st.dictionaries(exponents, fractions_st, max_size=4))
    return TruncPoly(("eps", "mu"), (2, 1), coeffs)


@given(surds_st, surds_st, surds_st)
@settings(max_examples=150)
def test_surd_ring_axioms(a, b, c):
    zero, one = SurdRational(), SurdRational.from_fraction(1)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a + (-a) == zero


@given(truncpolys_st(), truncpolys_st(), truncpolys_st())
@settings(max_examples=100)
def test_truncpoly_ring_axioms(a, b, c):
    zero = TruncPoly(("eps", "mu"), (2, 1))
    one = TruncPoly.constant(("eps", "mu"), (2, 1), 1)
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c
    assert a + zero == a
    assert a * one == a
    assert a + (-a) == zero


# -- exact vs decimal expression agreement ------------------------------------

_leaf_const = fractions_st.map(lambda f: ("const", f))
_leaf_halfpow = st.tuples(st.integers(1, 12), st.sampled_from([1, 3, 5])).map(
    lambda nk: ("halfpow", nk)
)
_trees = st.recursive(
    st.one_of(_leaf_const, _leaf_halfpow),
    lambda children: st.one_of(
        st.tuples(st.sampled_from(["add", "sub", "mul"]), children, children),
        st.tuples(
            st.just("divq"),
            children,
            fractions_st.filter(lambda f: f != 0),
        ),
    ),
    max_leaves=8,
)


def _eval_tree(tree, backend):
    kind = tree[0]
    if kind == "const":
        return backend.from_fraction(tree[1])
    if kind == "halfpow":
        n, k = tree[1]
        return backend.half_power(n, k)
    if kind == "divq":
        with backend.arith():
            return _eval_tree(tree[1], backend) / backend.from_fraction(tree[2])
    left, right = _eval_tree(tree[1], backend), _eval_tree(tree[2], backend)
    with backend.arith():
        if kind == "add":
            return left + right
        if kind == "sub":
            return left - right
        return left * right


@given(_trees)
@settings(max_examples=120, deadline=None)
def test_exact_and_decimal_backends_agree_within_one_ulp(tree):
    digits = 12
    exact_str = to_decimal(_eval_tree(tree, SURD), digits)
    decimal_str = to_decimal(_eval_tree(tree, DecimalBackend(40)), digits)
    ulp = abs(Decimal(exact_str) - Decimal(decimal_str))
    assert ulp <= Decimal(1).scaleb(-digits)
