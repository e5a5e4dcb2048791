"""Exact coefficient rings and the high-precision decimal fallback.

Every series in this package is generic over one scalar backend:

  rational   fractions.Fraction
  surd       SurdRational -- finite sums  sum_r c_r*sqrt(r)  with rational c_r
             and square-free radicands r.  The ring is closed under addition
             and multiplication, and under division by nonzero rationals,
             which is all the series algebra ever needs.  It hosts every
             coefficient of the form  rational / n^(k/2).
  truncpoly  TruncPoly -- polynomials in one or two formal deviation
             variables (e.g. "eps", "mu") with SurdRational coefficients,
             truncated at fixed per-variable degree bounds.
  decimal    decimal.Decimal at a stated significant-digit budget (plus
             internal guard digits), for values that leave the surd ring.

Values are immutable and the operations are pure functions, so everything
here is safe to share between threads.
"""

from __future__ import annotations

import math
from contextlib import nullcontext
from dataclasses import dataclass
from decimal import Context, Decimal, ROUND_HALF_EVEN, localcontext
from fractions import Fraction
from functools import lru_cache
from typing import Mapping, Union

from .errors import (
    MixedBackendError,
    UnboundVariableError,
    UnsupportedBackendError,
    ZeroLinearCoefficientError,
)

__all__ = [
    "radical_normalize",
    "half_power",
    "SurdRational",
    "TruncPoly",
    "Scalar",
    "RationalBackend",
    "SurdBackend",
    "TruncPolyBackend",
    "DecimalBackend",
    "RATIONAL",
    "SURD",
    "is_zero",
    "to_decimal",
]

# Guard digits carried by the decimal backend above its stated budget.  The
# high-order virial coefficients arise from ~5-digit cancellations between
# O(0.1) terms, so the stated budget alone would not survive a 40-digit
# cross-check against the exact ring.
_GUARD_DIGITS = 15


@lru_cache(maxsize=None)
def radical_normalize(n: int) -> tuple[int, int]:
    """Split a positive integer as n = s**2 * r with r square-free.

    Deterministic trial division; idempotent on the r output.
    """
    if n < 1:
        raise ValueError(f"radicand must be a positive integer, got {n}")
    s, r, m = 1, 1, n
    d = 2
    while d * d <= m:
        if m % d == 0:
            e = 0
            while m % d == 0:
                m //= d
                e += 1
            s *= d ** (e // 2)
            if e % 2:
                r *= d
        d += 1 if d == 2 else 2
    return s, r * m


def half_power(n: int, k: int) -> "SurdRational":
    """Exact n**(-k/2) for odd k, as sqrt(n) / n**((k+1)/2) in the surd ring."""
    if n < 1:
        raise ValueError(f"base must be a positive integer, got {n}")
    if k < 1 or k % 2 == 0:
        raise ValueError(f"exponent numerator must be an odd positive integer, got {k}")
    s, r = radical_normalize(n)
    return SurdRational({r: Fraction(s, n ** ((k + 1) // 2))})


class SurdRational:
    """Element of Q[sqrt(r) : r square-free]: a finite map radicand -> coefficient.

    Radicand 1 carries the pure-rational part; zero coefficients are never
    stored, so the value 0 has an empty map.  sqrt(a)*sqrt(b) normalizes via
    ab = s**2 * r with r square-free, keeping the ring closed.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[int, Fraction | int] | None = None) -> None:
        clean: dict[int, Fraction] = {}
        if terms:
            for rad, coeff in terms.items():
                coeff = Fraction(coeff)
                if not coeff:
                    continue
                s, r = radical_normalize(rad)
                clean[r] = clean.get(r, Fraction(0)) + coeff * s
        self._terms = {r: c for r, c in sorted(clean.items()) if c}

    @classmethod
    def from_fraction(cls, value: Fraction | int) -> "SurdRational":
        return cls({1: Fraction(value)})

    @classmethod
    def sqrt_int(cls, n: int) -> "SurdRational":
        return cls({n: Fraction(1)})

    @property
    def terms(self) -> dict[int, Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return all(r == 1 for r in self._terms)

    def rational_part(self) -> Fraction:
        """The whole value as a Fraction; raises if any surd term is present."""
        if not self.is_rational():
            raise ValueError(f"{self.render()} is not rational")
        return self._terms.get(1, Fraction(0))

    # -- ring operations ---------------------------------------------------

    def __add__(self, other: object) -> "SurdRational":
        if isinstance(other, (int, Fraction)):
            other = SurdRational.from_fraction(other)
        if isinstance(other, SurdRational):
            merged = dict(self._terms)
            for r, c in other._terms.items():
                merged[r] = merged.get(r, Fraction(0)) + c
            out = SurdRational.__new__(SurdRational)
            out._terms = {r: c for r, c in sorted(merged.items()) if c}
            return out
        if isinstance(other, (Decimal, TruncPoly)):
            raise MixedBackendError(f"cannot mix SurdRational with {type(other).__name__}")
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "SurdRational":
        out = SurdRational.__new__(SurdRational)
        out._terms = {r: -c for r, c in self._terms.items()}
        return out

    def __sub__(self, other: object) -> "SurdRational":
        result = self.__add__(-other if isinstance(other, (int, Fraction, SurdRational)) else other)
        return result

    def __rsub__(self, other: object) -> "SurdRational":
        return (-self).__add__(other)

    def __mul__(self, other: object) -> "SurdRational":
        if isinstance(other, (int, Fraction)):
            if not other:
                return SurdRational()
            out = SurdRational.__new__(SurdRational)
            out._terms = {r: c * other for r, c in self._terms.items()}
            return out
        if isinstance(other, SurdRational):
            acc: dict[int, Fraction] = {}
            for r1, c1 in self._terms.items():
                for r2, c2 in other._terms.items():
                    # r1, r2 square-free: r1*r2 = g**2 * (r1/g)*(r2/g) with g = gcd
                    g = math.gcd(r1, r2)
                    rad = (r1 // g) * (r2 // g)
                    val = c1 * c2 * g
                    prev = acc.get(rad)
                    acc[rad] = val if prev is None else prev + val
            out = SurdRational.__new__(SurdRational)
            out._terms = {r: c for r, c in sorted(acc.items()) if c}
            return out
        if isinstance(other, (Decimal, TruncPoly)):
            raise MixedBackendError(f"cannot mix SurdRational with {type(other).__name__}")
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "SurdRational":
        if isinstance(other, SurdRational):
            if not other.is_rational():
                raise ValueError(
                    "general surd inversion is not supported; divisors must be rational"
                )
            other = other.rational_part()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of SurdRational by zero")
            return self * (Fraction(1) / Fraction(other))
        raise MixedBackendError(f"SurdRational can only be divided by a nonzero rational, got {type(other).__name__}")

    def __pow__(self, exponent: int) -> "SurdRational":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("SurdRational powers must be nonnegative integers")
        out = SurdRational.from_fraction(1)
        base = self
        e = exponent
        while e:
            if e & 1:
                out = out * base
            base = base * base
            e >>= 1
        return out

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = SurdRational.from_fraction(other)
        if isinstance(other, SurdRational):
            return self._terms == other._terms
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._terms.items()))

    # -- rendering and numeric evaluation -----------------------------------

    def render(self) -> str:
        """Canonical text form: terms by ascending radicand, e.g. '-7/16*sqrt(2) + 1/81*sqrt(3)'."""
        if not self._terms:
            return "0"
        parts = []
        for i, (r, c) in enumerate(self._terms.items()):
            body = str(abs(c)) if r == 1 else f"{abs(c)}*sqrt({r})"
            if i == 0:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SurdRational({self.render()!r})"

    def decimal_value(self, prec: int) -> Decimal:
        """Approximate value at the given working precision (not a rounding contract)."""
        with localcontext(Context(prec=prec)):
            total = Decimal(0)
            for r, c in self._terms.items():
                term = Decimal(c.numerator) / Decimal(c.denominator)
                if r != 1:
                    term *= Decimal(r).sqrt()
                total += term
            return +total


class TruncPoly:
    """Polynomial in one or two named formal deviations, truncated at fixed bounds.

    Coefficients are SurdRational; exponent tuples never exceed the per-variable
    bounds (arithmetic truncates, never grows bounds); zero coefficients are
    never stored.
    """

    __slots__ = ("_vars", "_bounds", "_coeffs")

    def __init__(
        self,
        variables: tuple[str, ...],
        bounds: tuple[int, ...],
        coeffs: Mapping[tuple[int, ...], SurdRational | Fraction | int] | None = None,
    ) -> None:
        if not 1 <= len(variables) <= 2 or len(bounds) != len(variables):
            raise ValueError("TruncPoly takes one or two variables with matching bounds")
        if any(b < 0 for b in bounds):
            raise ValueError("order bounds must be nonnegative")
        self._vars = tuple(variables)
        self._bounds = tuple(bounds)
        clean: dict[tuple[int, ...], SurdRational] = {}
        if coeffs:
            for expo, c in coeffs.items():
                expo = tuple(expo)
                if len(expo) != len(self._vars) or any(e < 0 for e in expo):
                    raise ValueError(f"bad exponent tuple {expo}")
                if any(e > b for e, b in zip(expo, self._bounds)):
                    continue
                if not isinstance(c, SurdRational):
                    c = SurdRational.from_fraction(c)
                if c.is_zero():
                    continue
                prev = clean.get(expo)
                c = c if prev is None else prev + c
                clean[expo] = c
        self._coeffs = {e: c for e, c in sorted(clean.items()) if not c.is_zero()}

    @classmethod
    def constant(cls, variables, bounds, value) -> "TruncPoly":
        return cls(variables, bounds, {(0,) * len(variables): value})

    @classmethod
    def variable(cls, variables, bounds, name) -> "TruncPoly":
        expo = tuple(1 if v == name else 0 for v in variables)
        if 1 not in expo:
            raise ValueError(f"{name!r} is not one of {variables}")
        return cls(variables, bounds, {expo: Fraction(1)})

    @property
    def variables(self) -> tuple[str, ...]:
        return self._vars

    @property
    def bounds(self) -> tuple[int, ...]:
        return self._bounds

    @property
    def coeffs(self) -> dict[tuple[int, ...], SurdRational]:
        return dict(self._coeffs)

    def coefficient(self, expo: tuple[int, ...]) -> SurdRational:
        return self._coeffs.get(tuple(expo), SurdRational())

    def is_zero(self) -> bool:
        return not self._coeffs

    def _check_compatible(self, other: "TruncPoly") -> tuple[int, ...]:
        if self._vars != other._vars:
            raise MixedBackendError(
                f"cannot combine polynomials in {self._vars} with {other._vars}"
            )
        return tuple(min(a, b) for a, b in zip(self._bounds, other._bounds))

    def _as_poly(self, value) -> "TruncPoly | None":
        if isinstance(value, (int, Fraction, SurdRational)):
            return TruncPoly.constant(self._vars, self._bounds, value)
        if isinstance(value, TruncPoly):
            return value
        if isinstance(value, Decimal):
            raise MixedBackendError("cannot mix TruncPoly with Decimal")
        return None

    def __add__(self, other: object) -> "TruncPoly":
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        bounds = self._check_compatible(other)
        merged: dict[tuple[int, ...], SurdRational] = dict(self._coeffs)
        for e, c in other._coeffs.items():
            prev = merged.get(e)
            merged[e] = c if prev is None else prev + c
        return TruncPoly(self._vars, bounds, merged)

    __radd__ = __add__

    def __neg__(self) -> "TruncPoly":
        return TruncPoly(self._vars, self._bounds, {e: -c for e, c in self._coeffs.items()})

    def __sub__(self, other: object) -> "TruncPoly":
        other = self._as_poly(other)
        if other is None:
            return NotImplemented
        return self.__add__(-other)

    def __rsub__(self, other: object) -> "TruncPoly":
        return (-self).__add__(other)

    def __mul__(self, other: object) -> "TruncPoly":
        if isinstance(other, (int, Fraction, SurdRational)):
            return TruncPoly(
                self._vars, self._bounds, {e: c * other for e, c in self._coeffs.items()}
            )
        if isinstance(other, TruncPoly):
            bounds = self._check_compatible(other)
            acc: dict[tuple[int, ...], SurdRational] = {}
            for e1, c1 in self._coeffs.items():
                for e2, c2 in other._coeffs.items():
                    expo = tuple(a + b for a, b in zip(e1, e2))
                    if any(e > b for e, b in zip(expo, bounds)):
                        continue
                    val = c1 * c2
                    prev = acc.get(expo)
                    acc[expo] = val if prev is None else prev + val
            return TruncPoly(self._vars, bounds, acc)
        if isinstance(other, Decimal):
            raise MixedBackendError("cannot mix TruncPoly with Decimal")
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> "TruncPoly":
        if isinstance(other, SurdRational):
            other = other.rational_part()
        if isinstance(other, (int, Fraction)):
            if not other:
                raise ZeroDivisionError("division of TruncPoly by zero")
            inv = Fraction(1) / Fraction(other)
            return self * inv
        raise MixedBackendError("TruncPoly can only be divided by a nonzero rational")

    def __pow__(self, exponent: int) -> "TruncPoly":
        if not isinstance(exponent, int) or exponent < 0:
            raise ValueError("TruncPoly powers must be nonnegative integers")
        out = TruncPoly.constant(self._vars, self._bounds, 1)
        for _ in range(exponent):
            out = out * self
        return out

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction, SurdRational)):
            other = TruncPoly.constant(self._vars, self._bounds, other)
        if isinstance(other, TruncPoly):
            return (
                self._vars == other._vars
                and self._bounds == other._bounds
                and self._coeffs == other._coeffs
            )
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self._vars, self._bounds, tuple(self._coeffs.items())))

    def substitute(self, values: Mapping[str, "Fraction | int | SurdRational"]) -> "TruncPoly | SurdRational":
        """Substitute exact values for some or all variables.

        Full substitution returns a SurdRational; partial substitution returns
        a TruncPoly over the remaining variables with their original bounds.
        """
        unknown = set(values) - set(self._vars)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        remaining = tuple(v for v in self._vars if v not in values)
        subst: dict[str, SurdRational] = {}
        for name, val in values.items():
            subst[name] = val if isinstance(val, SurdRational) else SurdRational.from_fraction(val)
        if remaining:
            keep_bounds = tuple(b for v, b in zip(self._vars, self._bounds) if v not in values)
            acc_poly: dict[tuple[int, ...], SurdRational] = {}
            for expo, c in self._coeffs.items():
                factor = c
                kept: list[int] = []
                for v, e in zip(self._vars, expo):
                    if v in subst:
                        factor = factor * (subst[v] ** e)
                    else:
                        kept.append(e)
                key = tuple(kept)
                prev = acc_poly.get(key)
                acc_poly[key] = factor if prev is None else prev + factor
            return TruncPoly(remaining, keep_bounds, acc_poly)
        acc = SurdRational()
        for expo, c in self._coeffs.items():
            factor = c
            for v, e in zip(self._vars, expo):
                factor = factor * (subst[v] ** e)
            acc = acc + factor
        return acc

    def render(self) -> str:
        """Canonical text form: '(c00) + (c10)*eps + (c01)*mu + ...' in exponent order."""
        if not self._coeffs:
            return "0"
        parts = []
        for expo, c in self._coeffs.items():
            factors = [f"({c.render()})"]
            for v, e in zip(self._vars, expo):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"TruncPoly({self._vars!r}, {self._bounds!r}, {self.render()!r})"


Scalar = Union[Fraction, SurdRational, TruncPoly, Decimal]


def is_zero(scalar: Scalar) -> bool:
    if isinstance(scalar, (SurdRational, TruncPoly)):
        return scalar.is_zero()
    return scalar == 0


# --------------------------------------------------------------------------
# Backends
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class RationalBackend:
    """Plain Fraction scalars.  Hosts structure-function values and test series."""

    name: str = "rational"
    is_exact: bool = True

    def arith(self):
        return nullcontext()

    @property
    def zero(self) -> Fraction:
        return Fraction(0)

    @property
    def one(self) -> Fraction:
        return Fraction(1)

    def from_fraction(self, value) -> Fraction:
        return Fraction(value)

    def half_power(self, n: int, k: int) -> Fraction:
        s, r = radical_normalize(n)
        if r != 1:
            raise UnsupportedBackendError(
                f"{n}**(-{k}/2) is irrational; use the surd or decimal backend"
            )
        return Fraction(s, n ** ((k + 1) // 2))

    def invert_unit(self, scalar: Fraction) -> Fraction:
        if not scalar:
            raise ZeroLinearCoefficientError("cannot invert zero")
        return Fraction(1) / scalar

    def describe(self) -> str:
        return "rational"


@dataclass(frozen=True)
class SurdBackend:
    """SurdRational scalars: the default exact backend for all series work."""

    name: str = "surd"
    is_exact: bool = True

    def arith(self):
        return nullcontext()

    @property
    def zero(self) -> SurdRational:
        return SurdRational()

    @property
    def one(self) -> SurdRational:
        return SurdRational.from_fraction(1)

    def from_fraction(self, value) -> SurdRational:
        return SurdRational.from_fraction(Fraction(value))

    def half_power(self, n: int, k: int) -> SurdRational:
        return half_power(n, k)

    def invert_unit(self, scalar: SurdRational) -> SurdRational:
        if scalar.is_zero():
            raise ZeroLinearCoefficientError("cannot invert zero")
        if not scalar.is_rational():
            raise ZeroLinearCoefficientError(
                f"linear coefficient {scalar.render()} is not an invertible rational"
            )
        return SurdRational.from_fraction(Fraction(1) / scalar.rational_part())

    def describe(self) -> str:
        return "exact"


@dataclass(frozen=True)
class TruncPolyBackend:
    """TruncPoly scalars over fixed variables and bounds (e.g. series in eps)."""

    variables: tuple[str, ...]
    bounds: tuple[int, ...]
    name: str = "truncpoly"
    is_exact: bool = True

    def arith(self):
        return nullcontext()

    @property
    def zero(self) -> TruncPoly:
        return TruncPoly(self.variables, self.bounds)

    @property
    def one(self) -> TruncPoly:
        return TruncPoly.constant(self.variables, self.bounds, 1)

    def from_fraction(self, value) -> TruncPoly:
        return TruncPoly.constant(self.variables, self.bounds, Fraction(value))

    def from_surd(self, value: SurdRational) -> TruncPoly:
        return TruncPoly.constant(self.variables, self.bounds, value)

    def half_power(self, n: int, k: int) -> TruncPoly:
        return self.from_surd(half_power(n, k))

    def invert_unit(self, scalar: TruncPoly) -> TruncPoly:
        const = scalar.coefficient((0,) * len(self.variables))
        if scalar.is_zero() or scalar != const:
            raise ZeroLinearCoefficientError(
                "linear coefficient must be a constant polynomial to invert"
            )
        if not const.is_rational():
            raise ZeroLinearCoefficientError(
                f"linear coefficient {const.render()} is not an invertible rational"
            )
        return self.from_fraction(Fraction(1) / const.rational_part())

    def describe(self) -> str:
        spec = ",".join(f"{v}<={b}" for v, b in zip(self.variables, self.bounds))
        return f"truncpoly[{spec}]"


@dataclass(frozen=True)
class DecimalBackend:
    """decimal.Decimal scalars at `digits` significant digits (+ guard digits)."""

    digits: int = 50
    name: str = "decimal"
    is_exact: bool = False

    def __post_init__(self):
        if self.digits < 1:
            raise ValueError("digit budget must be >= 1")

    @property
    def context(self) -> Context:
        return Context(prec=self.digits + _GUARD_DIGITS, Emax=10**9, Emin=-(10**9))

    def arith(self):
        return localcontext(self.context)

    @property
    def zero(self) -> Decimal:
        return Decimal(0)

    @property
    def one(self) -> Decimal:
        return Decimal(1)

    def from_fraction(self, value) -> Decimal:
        value = Fraction(value)
        with self.arith():
            return Decimal(value.numerator) / Decimal(value.denominator)

    def half_power(self, n: int, k: int) -> Decimal:
        with self.arith():
            return Decimal(n).sqrt() / Decimal(n) ** ((k + 1) // 2)

    def invert_unit(self, scalar: Decimal) -> Decimal:
        if scalar == 0:
            raise ZeroLinearCoefficientError("cannot invert zero")
        with self.arith():
            return Decimal(1) / scalar

    def describe(self) -> str:
        return f"decimal:{self.digits}"


RATIONAL = RationalBackend()
SURD = SurdBackend()

Backend = Union[RationalBackend, SurdBackend, TruncPolyBackend, DecimalBackend]


# --------------------------------------------------------------------------
# Decimal rendering
# --------------------------------------------------------------------------


def _fixed_from_fraction(value: Fraction, digits: int) -> str:
    """Fixed-point rendering of an exact rational, round-half-even, `digits` places."""
    scaled = value * Fraction(10) ** digits
    num, den = scaled.numerator, scaled.denominator
    q, r = divmod(num, den)
    if 2 * r > den or (2 * r == den and q % 2):
        q += 1
    sign = "-" if q < 0 else ""
    digits_str = str(abs(q)).rjust(digits + 1, "0")
    whole, frac = digits_str[:-digits] or "0", digits_str[-digits:]
    if digits == 0:
        return sign + whole
    return f"{sign}{whole}.{frac}" if q else f"0.{'0' * digits}"


def _fixed_from_decimal(value: Decimal, digits: int) -> str:
    with localcontext(Context(prec=max(value.adjusted() + digits + 10, 25))):
        quantum = Decimal(1).scaleb(-digits)
        out = value.quantize(quantum, rounding=ROUND_HALF_EVEN)
    if not out:
        out = abs(out)  # never render "-0.000..."
    return str(out) if digits == 0 else f"{out:.{digits}f}"


def to_decimal(scalar: Scalar, digits: int) -> str:
    """Correctly rounded fixed-point rendering with `digits` digits after the point.

    Exact scalars are rounded from their true value (adaptive precision for
    irrational surd sums; surds with distinct radicands are linearly
    independent over Q, so a nonzero sum can never sit exactly on a rounding
    boundary and the refinement terminates).  TruncPoly values must be
    substituted first.
    """
    if digits < 1:
        raise ValueError("digit budget must be >= 1")
    if isinstance(scalar, TruncPoly):
        raise UnboundVariableError(
            f"substitute values for {scalar.variables} before rendering decimally"
        )
    if isinstance(scalar, (int, Fraction)):
        return _fixed_from_fraction(Fraction(scalar), digits)
    if isinstance(scalar, Decimal):
        return _fixed_from_decimal(scalar, digits)
    if isinstance(scalar, SurdRational):
        if scalar.is_zero():
            return _fixed_from_fraction(Fraction(0), digits)
        if scalar.is_rational():
            return _fixed_from_fraction(scalar.rational_part(), digits)
        prec = digits + 25
        previous = None
        while True:
            rendered = _fixed_from_decimal(scalar.decimal_value(prec), digits)
            if rendered == previous:
                return rendered
            previous = rendered
            prec += 20
    raise TypeError(f"unsupported scalar type {type(scalar).__name__}")
