"""The deformed Bose gas pipeline, in reduced units.

Everything is computed per V/lambda**3 (lambda the thermal wavelength), with
the oscillator energy scale treated as a unit scalar, so no dimensional
constants appear.  For a structure function phi and fugacity z:

  log-partition density      sum_n z**n / n**(5/2)
  particle density  x(z)   = sum_n phi(n) * z**n / n**(5/2)     (x = lambda**3/v)
  pressure series          = sum_n phi(n) * z**n / n**(7/2)     (P*v/kT numerator)
  fugacity of density z(x) = reversion of x(z)
  virial expansion         = pressure(z(x)) / x = sum_k V_k x**(k-1)

Closed forms for V_2..V_5 as polynomials in phi(2)..phi(5) are provided in
two modes: "corrected", which the engine reversion reproduces exactly, and
"paper-verbatim", which keeps a misprinted fifth-order term from the source
publication for errata reporting (its third term reads -2*phi(3)**3/3**5
where the reversion algebra forces +2*phi(3)**2/3**5).
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal
from fractions import Fraction

from .errors import UnsupportedOrderError
from .exact import (
    Backend,
    SURD,
    Scalar,
    SurdRational,
    TruncPolyBackend,
    is_zero,
)
from .series import PowerSeries, compose, euler_inverse, jackson_apply, revert
from .structfn import (
    QBasicSeries,
    StructureFunction,
    UNDEFORMED,
    eval_structure,
    is_unit_fraction_mu,
    mu_parameter,
)

__all__ = [
    "GasModel",
    "VirialTable",
    "log_partition_series",
    "particle_series",
    "pressure_series",
    "fugacity_of_density",
    "virial_coefficients",
    "closed_form_virial",
    "second_virial_deviation",
    "CLOSED_FORM_MAX_ORDER",
]

CLOSED_FORM_MAX_ORDER = 5


@dataclass(frozen=True)
class GasModel:
    """A structure function, a truncation order, and a coefficient backend."""

    sf: StructureFunction
    order: int = 8
    backend: Backend = SURD

    def __post_init__(self):
        if self.order < 2:
            raise ValueError("truncation order must be >= 2 (at least one nontrivial virial coefficient)")


def log_partition_series(order: int, backend: Backend = SURD, var: str = "z") -> PowerSeries:
    """Reduced log-partition series sum_{n>=1} z**n / n**(5/2)."""
    if order < 1:
        raise ValueError("order must be >= 1")
    coeffs: list[Scalar] = [backend.zero]
    coeffs.extend(backend.half_power(n, 5) for n in range(1, order + 1))
    return PowerSeries(var, backend, coeffs)


def particle_series(model: GasModel) -> PowerSeries:
    """Reduced particle-number series x(z) = sum_n phi(n) z**n / n**(5/2)."""
    return jackson_apply(model.sf, log_partition_series(model.order, model.backend))


def pressure_series(model: GasModel) -> PowerSeries:
    """Reduced pressure series sum_n phi(n) z**n / n**(7/2)."""
    return euler_inverse(particle_series(model))


def fugacity_of_density(model: GasModel) -> PowerSeries:
    """z as a series in the reduced density x = lambda**3/v (reversion of x(z))."""
    return revert(particle_series(model), var="x")


@dataclass(frozen=True)
class VirialTable:
    """Virial coefficients V_1..V_K with provenance and admissibility metadata.

    first_nonpositive_phi flags the smallest n with phi(n) <= 0 (the quadratic
    deformation at mu = 1/m cuts the spectrum at n = m+1); the series is still
    computed formally, physical admissibility being the caller's judgement.
    """

    sf: StructureFunction
    order: int
    backend: Backend
    values: tuple[Scalar, ...]
    provenance: tuple[str, ...]
    mu: Fraction | None = None
    mu_unit_fraction: bool | None = None
    first_nonpositive_phi: int | None = None

    def coefficient(self, k: int) -> Scalar:
        if not 1 <= k <= self.order:
            raise IndexError(f"k must be in 1..{self.order}")
        return self.values[k - 1]

    def __iter__(self):
        return iter(enumerate(self.values, start=1))


def _first_nonpositive_phi(model: GasModel) -> int | None:
    if isinstance(model.backend, TruncPolyBackend) or isinstance(model.sf, QBasicSeries):
        return None  # sign is undefined for symbolic deviations
    for n in range(1, model.order + 1):
        value = eval_structure(model.sf, n, model.backend)
        if isinstance(value, SurdRational):
            nonpositive = value.is_zero() or value.rational_part() <= 0
        elif isinstance(value, Decimal):
            nonpositive = value <= 0
        else:
            nonpositive = value <= 0
        if nonpositive:
            return n
    return None


def virial_coefficients(model: GasModel) -> VirialTable:
    """Engine virial table: compose the pressure series with z(x) and read off
    the coefficients of x**(k-1) (after dividing once by x)."""
    pressure = pressure_series(model)
    fugacity = fugacity_of_density(model)
    expansion = compose(pressure, fugacity)
    assert is_zero(expansion.coeffs[0])
    return VirialTable(
        sf=model.sf,
        order=model.order,
        backend=model.backend,
        values=tuple(expansion.coeffs[1:]),
        provenance=("engine",) * model.order,
        mu=mu_parameter(model.sf),
        mu_unit_fraction=is_unit_fraction_mu(model.sf),
        first_nonpositive_phi=_first_nonpositive_phi(model),
    )


def closed_form_virial(
    sf: StructureFunction,
    k: int,
    mode: str = "corrected",
    backend: Backend = SURD,
) -> Scalar:
    """V_k (k = 2..5) as an explicit polynomial in phi(2)..phi(5).

    mode="corrected" is what the reversion algebra gives (and what reproduces
    the known undeformed gas values); mode="paper-verbatim" substitutes the
    misprinted fifth-order third term -2*phi(3)**3/3**5 exactly as printed.
    """
    if mode not in ("corrected", "paper-verbatim"):
        raise ValueError(f"unknown mode {mode!r}")
    if not 2 <= k <= CLOSED_FORM_MAX_ORDER:
        raise UnsupportedOrderError(
            f"closed forms exist for k = 2..{CLOSED_FORM_MAX_ORDER}; use the engine for k = {k}"
        )
    hp = backend.half_power
    rat = backend.from_fraction
    phi = {n: eval_structure(sf, n, backend) for n in range(2, k + 1)}
    with backend.arith():
        if k == 2:
            return -(phi[2] * hp(2, 7))
        if k == 3:
            return phi[2] * phi[2] * rat(Fraction(1, 32)) - 2 * phi[3] * hp(3, 7)
        if k == 4:
            return (
                -3 * phi[4] * hp(4, 7)
                + phi[2] * phi[3] * hp(2, 5) * hp(3, 3)
                - 5 * phi[2] ** 3 * hp(2, 17)
            )
        third = (
            phi[3] ** 2 * rat(Fraction(2, 243))
            if mode == "corrected"
            else -(phi[3] ** 3 * rat(Fraction(2, 243)))
        )
        return (
            -4 * phi[5] * hp(5, 7)
            + phi[2] * phi[4] * hp(2, 11)
            + third
            - phi[2] ** 2 * phi[3] * rat(Fraction(1, 8)) * hp(3, 3)
            + phi[2] ** 4 * rat(Fraction(7, 1024))
        )


def second_virial_deviation(sf: StructureFunction, backend: Backend = SURD) -> Scalar:
    """V_2(sf) - V_2(undeformed) = (2 - phi(2)) / 2**(7/2).

    Reduces to (1-q)/2**(7/2) when mu = 0 and to mu/2**(5/2) when q = 1.
    """
    phi2 = eval_structure(sf, 2, backend)
    phi2_flat = eval_structure(UNDEFORMED, 2, backend)
    with backend.arith():
        return (phi2_flat - phi2) * backend.half_power(2, 7)
