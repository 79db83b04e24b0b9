"""Exact weighted spherical integration and the radius expansions around 0.

All integrals are normalized by the total weighted surface mass, so no
transcendental constant ever appears: for a homogeneous polynomial of even
degree 2n the normalized integral is an iterated-Laplacian value divided by
2^(2n) n! (lam + 1)_n, odd degrees integrate to zero, and everything else
is linearity.  The radius expansions (plain and with an h-harmonic factor)
and Hobson's expansion of p(D) applied to radial polynomials are finite,
exact objects here because inputs are polynomials.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .dunkl import apply_operator_poly, laplacian
from .harmonic import require_h_harmonic
from .polyring import Poly, RationalLike, as_fraction, pochhammer
from .reflection import DunklContext


@dataclass(frozen=True)
class PizzettiSeries:
    """Coefficients c_n of sum c_n r^(m+2n); finite and exact for polynomials."""

    m: int
    coefficients: tuple[Fraction, ...]

    def eval_rational(self, r: RationalLike) -> Fraction:
        r = as_fraction(r)
        return sum(
            (c * r ** (self.m + 2 * n) for n, c in enumerate(self.coefficients)),
            Fraction(0),
        )

    def eval_float(self, r: float) -> float:
        return sum(float(c) * r ** (self.m + 2 * n) for n, c in enumerate(self.coefficients))

    def radius_poly(self) -> dict[int, Fraction]:
        """Nonzero coefficients keyed by the power of the radius."""
        return {self.m + 2 * n: c for n, c in enumerate(self.coefficients) if c}


@dataclass(frozen=True)
class RadialPowerSum:
    """A finite sum of even radius powers, f0(rho) = sum c_j rho^(2j)."""

    terms: tuple[tuple[int, Fraction], ...]

    @classmethod
    def from_pairs(cls, pairs: Sequence[tuple[int, RationalLike]]) -> RadialPowerSum:
        acc: dict[int, Fraction] = {}
        for j, c in pairs:
            if j < 0:
                raise ValueError("radial exponents must be >= 0")
            acc[j] = acc.get(j, Fraction(0)) + as_fraction(c)
        return cls(tuple(sorted((j, c) for j, c in acc.items() if c)))

    def to_poly(self, dim: int) -> Poly:
        norm2 = Poly.norm_squared(dim)
        out = Poly.zero(dim)
        for j, c in self.terms:
            out = out + (norm2**j) * c
        return out


def sphere_integrate(ctx: DunklContext, p: Poly) -> Fraction:
    """Normalized weighted spherical integral of an arbitrary polynomial.

    Odd-degree parts vanish by antipodal symmetry of the squared weight.
    """
    if p.dim != ctx.dim:
        raise ValueError("polynomial dimension does not match the context")
    lam = ctx.lambda_kappa
    total = Fraction(0)
    for degree, part in p.homogeneous_parts():
        if degree % 2:
            continue
        n = degree // 2
        value = part
        for _ in range(n):
            value = laplacian(ctx, value)
        total += value.constant_term() / (
            Fraction(2 ** (2 * n)) * math.factorial(n) * pochhammer(lam + 1, n)
        )
    return total


def pair_integral(ctx: DunklContext, q: Poly, p: Poly) -> Fraction:
    """Normalized integral of q p over the weighted sphere.

    q must be h-harmonic homogeneous of degree m and p homogeneous of
    degree l; the value is q(D) Lap^n p / (2^(m+2n) n! (lam+1)_(m+n)) when
    l - m = 2n >= 0, and zero when l - m is negative or odd.
    """
    m = require_h_harmonic(ctx, q)
    if not p.is_homogeneous():
        raise ValueError("p must be homogeneous")
    l = p.degree()
    if l < 0:
        return Fraction(0)
    gap = l - m
    if gap < 0 or gap % 2:
        return Fraction(0)
    n = gap // 2
    value = p
    for _ in range(n):
        value = laplacian(ctx, value)
    value = apply_operator_poly(ctx, q, value)
    return value.constant_term() / (
        Fraction(2 ** (m + 2 * n)) * math.factorial(n) * pochhammer(ctx.lambda_kappa + 1, m + n)
    )


def extended_pizzetti(ctx: DunklContext, q: Poly, f: Poly, n_terms: int) -> PizzettiSeries:
    """Radius expansion of the weighted spherical mean of q(y) f(ry).

    c_n = (q(D) Lap^n f)(0) / (n! (lam+1)_(m+n) 2^(m+2n)) for n = 0..n_terms.
    For polynomial f the expansion is exact once m + 2 n_terms reaches the
    degree of f; beyond that every coefficient is zero.
    """
    m = require_h_harmonic(ctx, q)
    if f.dim != ctx.dim:
        raise ValueError("f dimension does not match the context")
    if n_terms < 0:
        raise ValueError("the number of series terms must be >= 0")
    lam = ctx.lambda_kappa
    coeffs = []
    g = f
    for n in range(n_terms + 1):
        if n:
            g = laplacian(ctx, g)
        value = apply_operator_poly(ctx, q, g).constant_term()
        coeffs.append(
            value
            / (math.factorial(n) * pochhammer(lam + 1, m + n) * Fraction(2 ** (m + 2 * n)))
        )
    return PizzettiSeries(m, tuple(coeffs))


def pizzetti(ctx: DunklContext, f: Poly, n_terms: int) -> PizzettiSeries:
    """Radius expansion of the plain weighted spherical mean of f(ry)."""
    return extended_pizzetti(ctx, Poly.const(ctx.dim, 1), f, n_terms)


def _radial_derivative_power(j: int, k: int) -> tuple[Fraction, int]:
    """Apply (rho^-1 d/drho)^k to rho^(2j): coefficient and new half-exponent."""
    if j - k < 0:
        return Fraction(0), 0
    coeff = Fraction(2**k) * Fraction(math.factorial(j), math.factorial(j - k))
    return coeff, j - k


def hobson_apply(ctx: DunklContext, p: Poly, f0: RadialPowerSum) -> Poly:
    """Hobson's expansion of p(D) applied to the radial polynomial f0(|x|).

    p(D) f = sum over i of (1 / (2^i i!)) [(rho^-1 d/drho)^(m-i) f0] Lap^i p,
    where each radial term rho^(2j) differentiates to
    2^(m-i) j!/(j-m+i)! rho^(2j-2m+2i), dropping out when j - m + i < 0.
    Must agree with the direct operator substitution p(D) f0(|x|).
    """
    if p.dim != ctx.dim:
        raise ValueError("polynomial dimension does not match the context")
    if not p.is_homogeneous():
        raise ValueError("p must be homogeneous")
    if p.is_zero:
        return p
    m = p.degree()
    norm2 = Poly.norm_squared(ctx.dim)
    out = Poly.zero(ctx.dim)
    lap = p
    for i in range(m // 2 + 1):
        if i:
            lap = laplacian(ctx, lap)
            if lap.is_zero:
                break
        radial = Poly.zero(ctx.dim)
        for j, c in f0.terms:
            coeff, half = _radial_derivative_power(j, m - i)
            if coeff:
                radial = radial + (norm2**half) * (c * coeff)
        if not radial.is_zero:
            out = out + radial * lap * Fraction(1, 2**i * math.factorial(i))
    return out


def harmonic_radial_power(ctx: DunklContext, q: Poly, j: int) -> Poly:
    """q(D) applied to |x|^(2j) for h-harmonic homogeneous q, in closed form.

    Zero when j < m; otherwise 2^m j!/(j-m)! |x|^(2j-2m) q(x).
    """
    m = require_h_harmonic(ctx, q)
    if j < 0:
        raise ValueError("the radial exponent must be >= 0")
    if j < m:
        return Poly.zero(ctx.dim)
    coeff = Fraction(2**m) * Fraction(math.factorial(j), math.factorial(j - m))
    return (Poly.norm_squared(ctx.dim) ** (j - m)) * q * coeff


def pizzetti_from_hobson(ctx: DunklContext, q: Poly, f: Poly, n_terms: int) -> PizzettiSeries:
    """Recompute the extended radius expansion through the plain one.

    The plain expansion of the product q f has coefficients built from
    iterated Laplacians of the product only; its first m coefficients must
    vanish (that is the radial-power identity at work), and the survivors,
    reindexed by m, must match :func:`extended_pizzetti` exactly.  This is
    the strongest internal cross-check between the two expansion routes.
    """
    m = require_h_harmonic(ctx, q)
    base = pizzetti(ctx, q * f, m + n_terms)
    for j in range(m):
        if base.coefficients[j]:
            raise AssertionError(
                f"product-series coefficient {j} should vanish below degree {m}; this is a bug"
            )
    return PizzettiSeries(m, base.coefficients[m : m + n_terms + 1])


def bessel_form_eval(
    ctx: DunklContext,
    q: Poly,
    f: Poly,
    r: float,
    *,
    variant: str = "lambda_plus_one",
) -> float:
    """Numeric value of the normalized-Bessel operator form of the expansion.

    The series of the entire Bessel-type function, with its squared argument
    replaced by minus the Laplacian, telescopes into
    prefactor * (r/2)^m * sum over n of (q(D) Lap^n f)(0) (r/2)^(2n) / (n! (a+1)_n)
    with a = lam + m.  Two candidate prefactors exist in the literature,
    1/(lam)_m and 1/(lam+1)_m; only ``lambda_plus_one`` reproduces the exact
    expansion (the default), and the tests pin that resolution down.
    """
    m = require_h_harmonic(ctx, q)
    if f.dim != ctx.dim:
        raise ValueError("f dimension does not match the context")
    lam = ctx.lambda_kappa
    if variant == "lambda_plus_one":
        prefactor = 1.0 / float(pochhammer(lam + 1, m))
    elif variant == "lambda":
        base = pochhammer(lam, m)
        if not base:
            raise ValueError("the lambda-based prefactor degenerates at lambda = 0")
        prefactor = 1.0 / float(base)
    else:
        raise ValueError(f"unknown prefactor variant {variant!r}")
    alpha = float(lam + m)
    half_r = r / 2.0
    n_max = max(0, (f.degree() - m + 1) // 2) if not f.is_zero else 0
    total = 0.0
    term = 1.0
    g = f
    for n in range(n_max + 1):
        if n:
            g = laplacian(ctx, g)
            term *= half_r * half_r / (n * (alpha + n))
        moment = float(apply_operator_poly(ctx, q, g).constant_term())
        total += moment * term
    return prefactor * half_r**m * total
