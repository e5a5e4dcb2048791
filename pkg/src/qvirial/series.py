"""Truncated formal power series: arithmetic, composition, reversion, and the
generalized Jackson / Euler operators.

A PowerSeries holds exactly K+1 coefficients c_0..c_K of one backend (zeros
stored explicitly, so order bookkeeping stays honest).  Operations never
extend K; combining series of different K truncates to the smaller.

The two operators that drive the gas pipeline:

  jackson_apply(sf, f)   c_n -> phi(n) * c_n      (the z-multiplied deformed
                         derivative z*D_z; the undeformed case is the Euler
                         operator z d/dz)
  euler_inverse(f)       c_n -> c_n / n           (its undeformed inverse,
                         defined for series with no constant term)

`revert` computes the compositional inverse order by order (a triangular
solve equivalent to Lagrange inversion), exactly over exact backends.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .errors import (
    MixedBackendError,
    NonzeroConstantTermError,
    ZeroLinearCoefficientError,
)
from .exact import Backend, Scalar, is_zero
from .structfn import StructureFunction, eval_structure

__all__ = [
    "PowerSeries",
    "compose",
    "revert",
    "jackson_apply",
    "euler_inverse",
]


class PowerSeries:
    """sum_{n=0}^{K} c_n * var**n with all coefficients on one backend."""

    __slots__ = ("var", "backend", "coeffs")

    def __init__(self, var: str, backend: Backend, coeffs: Sequence[Scalar]) -> None:
        if not coeffs:
            raise ValueError("a series needs at least the constant coefficient")
        self.var = var
        self.backend = backend
        self.coeffs = tuple(coeffs)

    @classmethod
    def from_terms(
        cls, var: str, backend: Backend, order: int, terms: dict[int, Scalar]
    ) -> "PowerSeries":
        zero = backend.zero
        return cls(var, backend, [terms.get(n, zero) for n in range(order + 1)])

    @classmethod
    def zero(cls, var: str, backend: Backend, order: int) -> "PowerSeries":
        return cls(var, backend, [backend.zero] * (order + 1))

    @classmethod
    def identity(cls, var: str, backend: Backend, order: int) -> "PowerSeries":
        return cls.from_terms(var, backend, order, {1: backend.one})

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, n: int) -> Scalar:
        return self.coeffs[n]

    def __iter__(self) -> Iterable[Scalar]:
        return iter(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PowerSeries):
            return NotImplemented
        return (
            self.var == other.var
            and self.backend == other.backend
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        return f"PowerSeries({self.var!r}, {self.backend.describe()}, K={self.order})"

    def _align(self, other: "PowerSeries") -> int:
        if not isinstance(other, PowerSeries):
            raise TypeError(f"expected a PowerSeries, got {type(other).__name__}")
        if self.backend != other.backend:
            raise MixedBackendError(
                f"cannot combine {self.backend.describe()} with {other.backend.describe()} series"
            )
        if self.var != other.var:
            raise ValueError(f"variable mismatch: {self.var!r} vs {other.var!r}")
        return min(self.order, other.order)

    def __add__(self, other: "PowerSeries") -> "PowerSeries":
        k = self._align(other)
        with self.backend.arith():
            return PowerSeries(
                self.var, self.backend,
                [self.coeffs[n] + other.coeffs[n] for n in range(k + 1)],
            )

    def __sub__(self, other: "PowerSeries") -> "PowerSeries":
        k = self._align(other)
        with self.backend.arith():
            return PowerSeries(
                self.var, self.backend,
                [self.coeffs[n] - other.coeffs[n] for n in range(k + 1)],
            )

    def __neg__(self) -> "PowerSeries":
        with self.backend.arith():
            return PowerSeries(self.var, self.backend, [-c for c in self.coeffs])

    def __mul__(self, other: "PowerSeries") -> "PowerSeries":
        k = self._align(other)
        a, b = self.coeffs, other.coeffs
        zero = self.backend.zero
        with self.backend.arith():
            out = [zero] * (k + 1)
            for i in range(min(len(a) - 1, k) + 1):
                ai = a[i]
                if is_zero(ai):
                    continue
                for j in range(min(len(b) - 1, k - i) + 1):
                    bj = b[j]
                    if is_zero(bj):
                        continue
                    out[i + j] = out[i + j] + ai * bj
            return PowerSeries(self.var, self.backend, out)

    def scale(self, scalar: Scalar) -> "PowerSeries":
        with self.backend.arith():
            return PowerSeries(self.var, self.backend, [c * scalar for c in self.coeffs])

    def truncate(self, order: int) -> "PowerSeries":
        if order >= self.order:
            return self
        return PowerSeries(self.var, self.backend, self.coeffs[: order + 1])


def compose(outer: PowerSeries, inner: PowerSeries) -> PowerSeries:
    """outer(inner), truncated at min(K_outer, K_inner); inner needs c_0 = 0."""
    if outer.backend != inner.backend:
        raise MixedBackendError(
            f"cannot compose {outer.backend.describe()} with {inner.backend.describe()} series"
        )
    if not is_zero(inner.coeffs[0]):
        raise NonzeroConstantTermError("compose needs an inner series with zero constant term")
    k = min(outer.order, inner.order)
    backend = outer.backend
    with backend.arith():
        inner_k = PowerSeries(inner.var, backend, inner.coeffs[: k + 1])
        acc = PowerSeries.from_terms(inner.var, backend, k, {0: outer.coeffs[k]})
        for j in range(k - 1, -1, -1):
            acc = acc * inner_k
            acc = PowerSeries(
                inner.var, backend,
                (acc.coeffs[0] + outer.coeffs[j],) + acc.coeffs[1:],
            )
        return acc


def revert(f: PowerSeries, var: str | None = None) -> PowerSeries:
    """Compositional inverse g with compose(f, g) = identity to order K.

    Needs c_0 = 0 and an invertible rational c_1 (every series in the gas
    pipeline has c_1 = phi(1) = 1).  Solved coefficient by coefficient: the
    power table P[j][m] = [x^m] g**j is filled from already-known lower-order
    coefficients, and each new g_m makes [x^m] f(g) vanish.
    """
    if not is_zero(f.coeffs[0]):
        raise NonzeroConstantTermError("revert needs a series with zero constant term")
    k = f.order
    if k < 1 or is_zero(f.coeffs[1]):
        raise ZeroLinearCoefficientError("revert needs a nonzero linear coefficient")
    backend = f.backend
    inv_c1 = backend.invert_unit(f.coeffs[1])
    if var is None:
        var = "x" if f.var == "z" else "z"
    zero = backend.zero
    with backend.arith():
        g: list[Scalar] = [zero, inv_c1]
        # power[j] holds [x^m] g**j for the g known so far; power[1] aliases g
        power: list[list[Scalar]] = [[], g]
        for m in range(2, k + 1):
            power.append([zero] * m)  # row for j = m, filled below
            residual = zero
            for j in range(2, m + 1):
                row_prev, row = power[j - 1], power[j]
                coeff = zero
                for i in range(j - 1, m):
                    prev = row_prev[i] if i < len(row_prev) else zero
                    if is_zero(prev):
                        continue
                    coeff = coeff + prev * g[m - i]
                row.append(coeff)
                if not is_zero(f.coeffs[j]):
                    residual = residual + f.coeffs[j] * coeff
            g.append(-residual * inv_c1)
        return PowerSeries(var, backend, g)


def jackson_apply(sf: StructureFunction, f: PowerSeries) -> PowerSeries:
    """Apply the z-multiplied generalized Jackson derivative: c_n -> phi(n)*c_n."""
    backend = f.backend
    with backend.arith():
        return PowerSeries(
            f.var, backend,
            [eval_structure(sf, n, backend) * c for n, c in enumerate(f.coeffs)],
        )


def euler_inverse(f: PowerSeries) -> PowerSeries:
    """Invert the undeformed Euler operator z d/dz: c_n -> c_n / n (needs c_0 = 0)."""
    if not is_zero(f.coeffs[0]):
        raise NonzeroConstantTermError("euler_inverse needs a series with zero constant term")
    backend = f.backend
    with backend.arith():
        out = [backend.zero]
        out.extend(c / n for n, c in enumerate(f.coeffs) if n >= 1)
        return PowerSeries(f.var, backend, out)
