"""Perturbative view of the deformations: the single-mode ladder Hamiltonian
H = (phi(N+1) + phi(N))/2 split into a free part plus interaction terms.

For the basic number with q = 1 + eps the split is exact and term i is a
polynomial in the number operator N:

  term 0 = N + 1/2                  (free oscillator, energy scale = 1)
  term i = (2N + 1 - i)/(2*(i+1)!) * N(N-1)...(N-i+1)      for i >= 1

so that sum_i eps**i * term_i(N) = ([N+1]_q + [N]_q)/2 as a polynomial
identity in eps.  The two-parameter deformation adds a row linear in mu
(the quadratic deformation enters the ladder average linearly), computed by
exact expansion of (phi(N+1) + phi(N))/2 for phi = (1+mu)*[.]_q - mu*[.]_q**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

__all__ = [
    "NumberPoly",
    "HamiltonianSplit",
    "TwoParamSplit",
    "hamiltonian_split",
    "two_param_split",
    "binomial_poly",
]


class NumberPoly:
    """Polynomial in the number operator N with rational coefficients."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[Fraction | int] = ()) -> None:
        cleaned = [Fraction(c) for c in coeffs]
        while cleaned and not cleaned[-1]:
            cleaned.pop()
        self.coeffs = tuple(cleaned)

    @classmethod
    def constant(cls, value) -> "NumberPoly":
        return cls([Fraction(value)])

    @classmethod
    def variable(cls) -> "NumberPoly":
        return cls([0, 1])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1 if self.coeffs else -1

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: object) -> "NumberPoly":
        if isinstance(other, (int, Fraction)):
            other = NumberPoly.constant(other)
        if not isinstance(other, NumberPoly):
            return NotImplemented
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [Fraction(0)] * (n - len(self.coeffs))
        b = list(other.coeffs) + [Fraction(0)] * (n - len(other.coeffs))
        return NumberPoly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __neg__(self) -> "NumberPoly":
        return NumberPoly([-c for c in self.coeffs])

    def __sub__(self, other: object) -> "NumberPoly":
        if isinstance(other, (int, Fraction)):
            other = NumberPoly.constant(other)
        if not isinstance(other, NumberPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other: object) -> "NumberPoly":
        if isinstance(other, (int, Fraction)):
            return NumberPoly([c * other for c in self.coeffs])
        if not isinstance(other, NumberPoly):
            return NotImplemented
        if self.is_zero() or other.is_zero():
            return NumberPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return NumberPoly(out)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "NumberPoly":
        return NumberPoly([c / other for c in self.coeffs])

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = NumberPoly.constant(other)
        if not isinstance(other, NumberPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __call__(self, n) -> Fraction:
        total = Fraction(0)
        for c in reversed(self.coeffs):
            total = total * n + c
        return total

    def shifted(self) -> "NumberPoly":
        """The polynomial of N+1: p(N+1)."""
        out = NumberPoly()
        base = NumberPoly([1])
        step = NumberPoly([1, 1])
        for c in self.coeffs:
            out = out + base * c
            base = base * step
        return out

    def render(self) -> str:
        """Canonical text form: '1/2 + 1*N + 3/4*N^2' (ascending powers)."""
        if not self.coeffs:
            return "0"
        parts = []
        first = True
        for p, c in enumerate(self.coeffs):
            if not c:
                continue
            body = str(abs(c)) if p == 0 else f"{abs(c)}*N" if p == 1 else f"{abs(c)}*N^{p}"
            if first:
                parts.append(("-" if c < 0 else "") + body)
                first = False
            else:
                parts.append(("- " if c < 0 else "+ ") + body)
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"NumberPoly({self.render()!r})"


def binomial_poly(k: int) -> NumberPoly:
    """C(N, k) as a polynomial in N: N(N-1)...(N-k+1)/k!."""
    poly = NumberPoly([1])
    for j in range(k):
        poly = poly * NumberPoly([-j, 1])
    return poly / math.factorial(k)


@dataclass(frozen=True)
class HamiltonianSplit:
    """Ladder-average Hamiltonian as exact polynomials per power of eps."""

    order: int
    terms: tuple[NumberPoly, ...]

    def term(self, i: int) -> NumberPoly:
        return self.terms[i]

    def evaluate(self, n, eps) -> Fraction:
        """sum_i eps**i * term_i(n) for rational eps and (usually integer) n."""
        eps = Fraction(eps)
        total, power = Fraction(0), Fraction(1)
        for poly in self.terms:
            total += power * poly(n)
            power *= eps
        return total


def hamiltonian_split(order: int) -> HamiltonianSplit:
    """Split ([N+1]_q + [N]_q)/2, q = 1 + eps, into polynomials per eps power.

    Term i for i >= 1 is (2N+1-i)/(2*(i+1)!) times the falling factorial
    N(N-1)...(N-i+1); term 0 is the free part N + 1/2.  Each term i has
    degree i+1 (degree 1 for i = 0).
    """
    if order < 0:
        raise ValueError("order must be nonnegative")
    terms = [NumberPoly([Fraction(1, 2), 1])]
    falling = NumberPoly([1])
    for i in range(1, order + 1):
        falling = falling * NumberPoly([-(i - 1), 1])  # now N(N-1)...(N-i+1)
        prefactor = NumberPoly([1 - i, 2]) / (2 * math.factorial(i + 1))
        terms.append(prefactor * falling)
    return HamiltonianSplit(order=order, terms=tuple(terms))


@dataclass(frozen=True)
class TwoParamSplit:
    """Ladder average of the two-parameter deformation as a double expansion.

    terms[(i, j)] is the polynomial in N multiplying eps**i * mu**j.  The
    structure function is linear in mu, so only the rows j = 0 and j = 1 are
    ever nonzero; the (0, 0) entry is the free part N + 1/2.
    """

    order_eps: int
    order_mu: int
    terms: dict[tuple[int, int], NumberPoly]

    def term(self, i: int, j: int) -> NumberPoly:
        return self.terms.get((i, j), NumberPoly())

    def evaluate(self, n, eps, mu) -> Fraction:
        eps, mu = Fraction(eps), Fraction(mu)
        total = Fraction(0)
        for (i, j), poly in self.terms.items():
            total += eps**i * mu**j * poly(n)
        return total


def two_param_split(order_eps: int, order_mu: int) -> TwoParamSplit:
    """Exact bivariate truncation of ((phi(N+1) + phi(N))/2 for the combined
    deformation phi = (1+mu)*[.]_q - mu*[.]_q**2, q = 1 + eps.

    The mu-row at eps = 0 is the direct quadratic-deformation average minus
    the free part; the eps-row at mu = 0 reproduces hamiltonian_split.
    """
    if order_eps < 0 or order_mu < 0:
        raise ValueError("orders must be nonnegative")
    # [N]_q = sum_i eps**i * C(N, i+1), as polynomials in N per eps power
    basic = [binomial_poly(i + 1) for i in range(order_eps + 1)]
    shifted = [poly.shifted() for poly in basic]

    def square(rows: list[NumberPoly]) -> list[NumberPoly]:
        out = [NumberPoly() for _ in range(order_eps + 1)]
        for a in range(order_eps + 1):
            if rows[a].is_zero():
                continue
            for b in range(order_eps + 1 - a):
                out[a + b] = out[a + b] + rows[a] * rows[b]
        return out

    terms: dict[tuple[int, int], NumberPoly] = {}
    for i in range(order_eps + 1):
        avg = (basic[i] + shifted[i]) / 2
        if not avg.is_zero():
            terms[(i, 0)] = avg
    if order_mu >= 1:
        sq_basic = square(basic)
        sq_shifted = square(shifted)
        for i in range(order_eps + 1):
            row = (basic[i] - sq_basic[i] + shifted[i] - sq_shifted[i]) / 2
            if not row.is_zero():
                terms[(i, 1)] = row
    return TwoParamSplit(order_eps=order_eps, order_mu=order_mu, terms=terms)
