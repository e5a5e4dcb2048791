"""Deformation structure functions phi(n) and their exact evaluation.

A structure function defines a deformed oscillator through the spectrum of
its number operator; every variant here satisfies phi(0) = 0 and phi(1) = 1.
The catalogue:

  QBasic(q)                   phi(n) = 1 + q + ... + q**(n-1)   (the basic
                              number [n]_q, evaluated as a geometric sum so
                              q = 1 never divides by zero)
  Quadratic(mu)               phi(n) = (1+mu)*n - mu*n**2       (composite,
                              two-constituent bosons; mu = 1/m cuts the
                              spectrum off at n = m+1)
  QuadraticOfQBasic(mu, q)    phi(n) = (1+mu)*[n]_q - mu*[n]_q**2
  QBasicOfQuadratic(q, mu)    phi(n) = (1 - q**((1+mu)*n - mu*n**2)) / (1-q);
                              the rational exponent leaves the surd ring, so
                              this variant evaluates on the decimal backend
                              only
  Interpolated(t, mu, q)      t*QuadraticOfQBasic + (1-t)*QBasicOfQuadratic
  QBasicSeries(order)         [n]_q with q = 1 + eps kept as a truncated
                              polynomial in eps

`eval_structure` evaluates any variant on a backend; `eval_eps` and
`monomial_expansion` expose the eps-expansion of the basic number in the
binomial and monomial bases.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction

from .errors import DescriptorError, UnsupportedBackendError
from .exact import (
    Backend,
    DecimalBackend,
    Scalar,
    TruncPoly,
    TruncPolyBackend,
)

__all__ = [
    "StructureFunction",
    "QBasic",
    "Quadratic",
    "QuadraticOfQBasic",
    "QBasicOfQuadratic",
    "Interpolated",
    "QBasicSeries",
    "UNDEFORMED",
    "basic_number",
    "quadratic_number",
    "eval_structure",
    "eval_eps",
    "monomial_expansion",
    "stirling_first",
    "parse_descriptor",
    "mu_parameter",
    "is_unit_fraction_mu",
]


def basic_number(q: Fraction, n: int) -> Fraction:
    """[n]_q as the geometric sum 1 + q + ... + q**(n-1) (exact, q = 1 allowed)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    total, power = Fraction(0), Fraction(1)
    for _ in range(n):
        total += power
        power *= q
    return total


def quadratic_number(mu: Fraction, n: int) -> Fraction:
    """(1+mu)*n - mu*n**2, the quadratically deformed number."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return (1 + mu) * n - mu * n * n


@dataclass(frozen=True)
class QBasic:
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 1:
            raise ValueError("QBasic stores q != 1; the undeformed limit is Quadratic(0) or QuadraticOfQBasic(mu, 1)")

    def describe(self) -> str:
        return f"q:{self.q}"


@dataclass(frozen=True)
class Quadratic:
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))

    def describe(self) -> str:
        return f"mu:{self.mu}"


@dataclass(frozen=True)
class QuadraticOfQBasic:
    """Quadratic deformation applied on top of the basic number: phi_mu([n]_q)."""

    mu: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        object.__setattr__(self, "q", Fraction(self.q))

    def describe(self) -> str:
        return f"mu-q:{self.mu},{self.q}"


@dataclass(frozen=True)
class QBasicOfQuadratic:
    """Basic number applied on top of the quadratic deformation: phi_q([n]_mu)."""

    q: Fraction
    mu: Fraction

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        object.__setattr__(self, "mu", Fraction(self.mu))
        if self.q == 1:
            raise ValueError("QBasicOfQuadratic stores q != 1; its q -> 1 limit is Quadratic(mu)")
        if self.q <= 0:
            raise ValueError("QBasicOfQuadratic needs q > 0 (rational powers of q)")

    def describe(self) -> str:
        return f"q-mu:{self.q},{self.mu}"


@dataclass(frozen=True)
class Interpolated:
    """Convex combination t*QuadraticOfQBasic + (1-t)*QBasicOfQuadratic."""

    t: Fraction
    mu: Fraction
    q: Fraction

    def __post_init__(self):
        object.__setattr__(self, "t", Fraction(self.t))
        object.__setattr__(self, "mu", Fraction(self.mu))
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q == 1:
            raise ValueError("Interpolated stores q != 1 (its QBasicOfQuadratic leg requires it)")
        if self.q <= 0:
            raise ValueError("Interpolated needs q > 0")

    def describe(self) -> str:
        return f"t:{self.t};mu:{self.mu};q:{self.q}"


@dataclass(frozen=True)
class QBasicSeries:
    """[n]_q with q = 1 + eps, kept as a TruncPoly in eps up to `order`."""

    order: int

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("order must be nonnegative")

    def describe(self) -> str:
        return f"q-eps:order={self.order}"


StructureFunction = (
    QBasic | Quadratic | QuadraticOfQBasic | QBasicOfQuadratic | Interpolated | QBasicSeries
)

#: phi(n) = n: the undeformed Bose gas.
UNDEFORMED = Quadratic(Fraction(0))


def _rational_value(sf: StructureFunction, n: int) -> Fraction:
    if isinstance(sf, QBasic):
        return basic_number(sf.q, n)
    if isinstance(sf, Quadratic):
        return quadratic_number(sf.mu, n)
    if isinstance(sf, QuadraticOfQBasic):
        base = basic_number(sf.q, n)
        return (1 + sf.mu) * base - sf.mu * base * base
    raise TypeError(f"{type(sf).__name__} has no rational closed value")


def eval_structure(sf: StructureFunction, n: int, backend: Backend) -> Scalar:
    """phi(n) as a scalar of the requested backend.

    QBasicOfQuadratic (and Interpolated with t != 1) raise
    UnsupportedBackendError on exact backends: q**((1+mu)*n - mu*n**2) leaves
    the surd ring for non-integer exponents, and the artifact treats the whole
    variant as decimal-only rather than special-casing lucky exponents.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if isinstance(sf, (QBasic, Quadratic, QuadraticOfQBasic)):
        return backend.from_fraction(_rational_value(sf, n))
    if isinstance(sf, QBasicSeries):
        if not isinstance(backend, TruncPolyBackend) or backend.variables != ("eps",):
            raise UnsupportedBackendError(
                "QBasicSeries evaluates only on a TruncPoly backend in eps"
            )
        order = min(sf.order, backend.bounds[0])
        return eval_eps(n, order, bound=backend.bounds[0])
    if isinstance(sf, Interpolated) and sf.t == 1:
        return eval_structure(QuadraticOfQBasic(sf.mu, sf.q), n, backend)
    if isinstance(sf, (QBasicOfQuadratic, Interpolated)):
        if not isinstance(backend, DecimalBackend):
            raise UnsupportedBackendError(
                f"{sf.describe()} needs the decimal backend: rational powers of q leave the exact ring"
            )
        with backend.arith():
            if isinstance(sf, QBasicOfQuadratic):
                return _qbasic_of_quadratic_decimal(sf, n, backend)
            part_a = backend.from_fraction(_rational_value(QuadraticOfQBasic(sf.mu, sf.q), n))
            part_b = _qbasic_of_quadratic_decimal(QBasicOfQuadratic(sf.q, sf.mu), n, backend)
            t = backend.from_fraction(sf.t)
            return t * part_a + (1 - t) * part_b
    raise TypeError(f"unknown structure function {type(sf).__name__}")


def _qbasic_of_quadratic_decimal(sf: QBasicOfQuadratic, n: int, backend: DecimalBackend):
    exponent = quadratic_number(sf.mu, n)
    q_dec = backend.from_fraction(sf.q)
    if exponent.denominator == 1:
        power = q_dec ** int(exponent)
    else:
        e_dec = backend.from_fraction(exponent)
        power = (e_dec * q_dec.ln()).exp()
    return (1 - power) / (1 - q_dec)


def eval_eps(n: int, order: int, bound: int | None = None) -> TruncPoly:
    """[n]_q at q = 1 + eps: the exact polynomial sum_i C(n, i+1) * eps**i.

    The polynomial has true degree n - 1; `order` truncates it.  `bound` sets
    the TruncPoly order bound (defaults to `order`) so results can live
    alongside scalars of a wider backend.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if order < 0:
        raise ValueError("order must be nonnegative")
    bound = order if bound is None else bound
    coeffs = {(i,): Fraction(math.comb(n, i + 1)) for i in range(min(order, n - 1) + 1)}
    return TruncPoly(("eps",), (bound,), coeffs)


def stirling_first(m: int, k: int) -> int:
    """Signed Stirling numbers of the first kind: x(x-1)...(x-m+1) = sum_k s(m,k) x**k."""
    if m < 0 or k < 0:
        raise ValueError("indices must be nonnegative")
    return _stirling_row(m)[k] if k <= m else 0


def _stirling_row(m: int) -> list[int]:
    row = [1]
    for n in range(m):
        nxt = [0] * (n + 2)
        for k in range(n + 2):
            nxt[k] = (row[k - 1] if k >= 1 else 0) - n * (row[k] if k <= n else 0)
        row = nxt
    return row


def monomial_expansion(order_eps: int, order_n: int) -> dict[tuple[int, int], Fraction]:
    """Coefficients of [N]_q in the monomial basis: (N-power, eps-power) -> rational.

    Obtained from the binomial-basis expansion sum_i eps**i * (N)_(i+1)/(i+1)!
    by converting the falling factorials with signed Stirling numbers of the
    first kind: the coefficient of N**k * eps**i is s(i+1, k)/(i+1)!.
    """
    if order_eps < 1 or order_n < 1:
        raise ValueError("orders must be >= 1")
    table: dict[tuple[int, int], Fraction] = {}
    for i in range(order_eps + 1):
        row = _stirling_row(i + 1)
        denom = math.factorial(i + 1)
        for k in range(1, min(i + 1, order_n) + 1):
            value = Fraction(row[k], denom)
            if value:
                table[(k, i)] = value
    return table


# --------------------------------------------------------------------------
# Descriptor grammar (shared by the CLI and by golden files)
# --------------------------------------------------------------------------


_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")


def _parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise DescriptorError(f"not a rational number (use p or p/q, not decimals): {text!r}")
    try:
        return Fraction(text)
    except ZeroDivisionError as exc:
        raise DescriptorError(f"zero denominator: {text!r}") from exc


def parse_descriptor(text: str) -> StructureFunction:
    """Parse `q:3/2`, `mu:1/4`, `mu-q:1/4,3/2`, `q-mu:3/2,1/4`,
    `t:1/2;mu:1/4;q:3/2`, or `q-eps:order=6`."""
    text = text.strip()
    if text.startswith("t:"):
        fields = {}
        for part in text.split(";"):
            key, _, value = part.partition(":")
            if not value:
                raise DescriptorError(f"malformed descriptor part {part!r}")
            fields[key.strip()] = value.strip()
        if set(fields) != {"t", "mu", "q"}:
            raise DescriptorError("t-descriptor needs exactly t:, mu:, q: parts")
        try:
            return Interpolated(
                _parse_rational(fields["t"]),
                _parse_rational(fields["mu"]),
                _parse_rational(fields["q"]),
            )
        except ValueError as exc:
            raise DescriptorError(str(exc)) from exc
    kind, sep, rest = text.partition(":")
    if not sep:
        raise DescriptorError(f"malformed descriptor {text!r}")
    try:
        if kind == "q":
            return QBasic(_parse_rational(rest))
        if kind == "mu":
            return Quadratic(_parse_rational(rest))
        if kind in ("mu-q", "q-mu"):
            parts = rest.split(",")
            if len(parts) != 2:
                raise DescriptorError(f"{kind} descriptor needs two parameters")
            a, b = (_parse_rational(p) for p in parts)
            return QuadraticOfQBasic(a, b) if kind == "mu-q" else QBasicOfQuadratic(a, b)
        if kind == "q-eps":
            key, _, value = rest.partition("=")
            if key.strip() != "order":
                raise DescriptorError("q-eps descriptor takes order=<int>")
            try:
                return QBasicSeries(int(value))
            except ValueError as exc:
                raise DescriptorError(f"not an integer order: {value!r}") from exc
    except DescriptorError:
        raise
    except ValueError as exc:
        raise DescriptorError(str(exc)) from exc
    raise DescriptorError(f"unknown structure-function kind {kind!r}")


def mu_parameter(sf: StructureFunction) -> Fraction | None:
    """The mu parameter of a variant, if it has one."""
    return getattr(sf, "mu", None)


def is_unit_fraction_mu(sf: StructureFunction) -> bool | None:
    """Whether mu = 1/m for an integer m >= 1 (None when the variant has no mu).

    mu = 1/m is the regime in which the quadratic deformation realizes
    two-constituent composite bosons; general rational mu is accepted and this
    flag is reported in output metadata rather than enforced.
    """
    mu = mu_parameter(sf)
    if mu is None:
        return None
    return mu > 0 and mu.numerator == 1
