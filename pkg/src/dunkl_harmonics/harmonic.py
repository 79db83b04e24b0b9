"""h-harmonic polynomials: projection, canonical decomposition, exact bases.

A polynomial is h-harmonic when the Dunkl Laplacian kills it.  Every
homogeneous polynomial of degree n splits uniquely as a sum of
|x|^(2i) p_(n-2i) with h-harmonic components, and the closed-form
coefficients of that splitting are implemented verbatim; the reconstruction
identity is the independent check, exercised by the tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import _linalg
from .dunkl import laplacian, pairing
from .polyring import Poly, monomials_of_degree, pochhammer
from .reflection import DunklContext


@dataclass(frozen=True)
class HarmonicDecomposition:
    """Components p_(n-2i), i = 0..floor(n/2), of a homogeneous polynomial."""

    degree: int
    components: tuple[tuple[int, Poly], ...]

    def component(self, i: int) -> Poly:
        return self.components[i][1]

    def reconstruct(self) -> Poly:
        dim = self.components[0][1].dim
        norm2 = Poly.norm_squared(dim)
        total = Poly.zero(dim)
        for i, part in self.components:
            if not part.is_zero:
                total = total + (norm2**i) * part
        return total


def is_h_harmonic(ctx: DunklContext, p: Poly) -> bool:
    return laplacian(ctx, p).is_zero


def require_h_harmonic(ctx: DunklContext, q: Poly) -> int:
    """Validate a nonzero homogeneous h-harmonic factor and return its degree."""
    if q.dim != ctx.dim:
        raise ValueError("q dimension does not match the context")
    if q.is_zero:
        raise ValueError("the harmonic factor q must be nonzero")
    if not q.is_homogeneous():
        raise ValueError("q must be homogeneous")
    if not is_h_harmonic(ctx, q):
        raise ValueError("q must be h-harmonic")
    return q.degree()


def _require_homogeneous(p: Poly, what: str) -> int:
    if not p.is_homogeneous():
        raise ValueError(f"{what} must be homogeneous")
    return p.degree()


def proj(ctx: DunklContext, n: int, p: Poly) -> Poly:
    """Project a homogeneous polynomial of degree n onto the h-harmonics.

    proj p = sum over j of |x|^(2j) Lap^j p / (4^j j! (-lam - n + 1)_j);
    the denominators never vanish for dimension >= 2 and kappa >= 0.
    The projection fixes every h-harmonic of degree n.
    """
    if p.is_zero:
        return p
    deg = _require_homogeneous(p, "projection input")
    if deg != n:
        raise ValueError(f"input has degree {deg}, expected {n}")
    lam = ctx.lambda_kappa
    norm2 = Poly.norm_squared(ctx.dim)
    out = p
    lap = p
    radial = Poly.const(ctx.dim, 1)
    for j in range(1, n // 2 + 1):
        lap = laplacian(ctx, lap)
        if lap.is_zero:
            break
        radial = radial * norm2
        denom = Fraction(4**j) * math.factorial(j) * pochhammer(-lam - n + 1, j)
        out = out + radial * lap * (Fraction(1) / denom)
    return out


def canonical_decompose(ctx: DunklContext, p: Poly) -> HarmonicDecomposition:
    """Split a homogeneous p as sum of |x|^(2i) p_(n-2i), all components h-harmonic.

    p_(n-2i) = proj(Lap^i p) / (4^i i! (lam + 1 + n - 2i)_i).
    """
    if p.dim != ctx.dim:
        raise ValueError("polynomial dimension does not match the context")
    if p.is_zero:
        return HarmonicDecomposition(0, ((0, p),))
    n = _require_homogeneous(p, "decomposition input")
    lam = ctx.lambda_kappa
    comps = []
    lap = p
    for i in range(n // 2 + 1):
        if i:
            lap = laplacian(ctx, lap)
        denom = Fraction(4**i) * math.factorial(i) * pochhammer(lam + 1 + n - 2 * i, i)
        comps.append((i, proj(ctx, n - 2 * i, lap) * (Fraction(1) / denom)))
    return HarmonicDecomposition(n, tuple(comps))


def h_harmonic_basis(ctx: DunklContext, n: int) -> list[Poly]:
    """Exact rational basis of the degree-n h-harmonics.

    Computed as the kernel of the Laplacian from degree n to degree n - 2 by
    rational Gaussian elimination over the graded-lex monomial basis; the
    result is deterministic and each vector is scaled to a primitive integer
    form with positive leading coefficient.
    """
    if n < 0:
        raise ValueError("degree must be >= 0")
    monos = monomials_of_degree(ctx.dim, n)
    if n < 2:
        return [Poly.monomial(ctx.dim, m) for m in monos]
    target = monomials_of_degree(ctx.dim, n - 2)
    index = {m: i for i, m in enumerate(target)}
    matrix = [[Fraction(0)] * len(monos) for _ in target]
    for col, mono in enumerate(monos):
        image = laplacian(ctx, Poly.monomial(ctx.dim, mono))
        for m, c in image.terms.items():
            matrix[index[m]][col] = c
    basis = []
    for vec in _linalg.nullspace(matrix, len(monos)):
        basis.append(_primitive(Poly(ctx.dim, dict(zip(monos, vec)))))
    return basis


def _primitive(p: Poly) -> Poly:
    """Clear denominators, divide by the content, make the leading term positive."""
    if p.is_zero:
        return p
    denom_lcm = 1
    for c in p.terms.values():
        denom_lcm = denom_lcm * c.denominator // math.gcd(denom_lcm, c.denominator)
    nums = [c.numerator * (denom_lcm // c.denominator) for c in p.terms.values()]
    content = 0
    for v in nums:
        content = math.gcd(content, v)
    scale = Fraction(denom_lcm, content)
    lead = max(p.terms, key=lambda m: (sum(m), m))
    if p.terms[lead] < 0:
        scale = -scale
    return p * scale


def orthogonality_rhs(ctx: DunklContext, p: Poly, q: Poly) -> Fraction:
    """Pairing-side value of the spherical orthogonality relation.

    For h-harmonic homogeneous p, q of degrees l, m this equals the
    normalized weighted spherical integral of p q: the pairing divided by
    2^m (lam + 1)_m, and zero when l differs from m.
    """
    for name, poly in (("p", p), ("q", q)):
        if not is_h_harmonic(ctx, poly):
            raise ValueError(f"{name} must be h-harmonic")
        _require_homogeneous(poly, name)
    if p.degree() != q.degree():
        return Fraction(0)
    m = q.degree()
    if m < 0:
        return Fraction(0)
    return pairing(ctx, p, q) / (Fraction(2**m) * pochhammer(ctx.lambda_kappa + 1, m))


def reduce_mod_sphere(ctx: DunklContext, p: Poly) -> Poly:
    """Canonical representative of p modulo the ideal of the unit sphere.

    Each homogeneous part is canonically decomposed and every |x|^(2i)
    factor replaced by 1, giving equality of polynomials as functions on
    the sphere.
    """
    out = Poly.zero(ctx.dim)
    for _, part in p.homogeneous_parts():
        for _, comp in canonical_decompose(ctx, part).components:
            out = out + comp
    return out
