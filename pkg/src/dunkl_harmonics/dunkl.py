"""The Dunkl operator, its Laplacian, operator substitution, and the pairing.

Everything here is exact.  For a homogeneous input of degree n the operator
output is homogeneous of degree n - 1 (zero when n = 0) and the Laplacian
output of degree n - 2; both facts fall out of the difference-quotient form
and are exercised by the test suite rather than asserted per call.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyring import Poly, RationalLike, as_fraction
from .reflection import DunklContext


def _require_ctx_dim(ctx: DunklContext, p: Poly) -> None:
    if p.dim != ctx.dim:
        raise ValueError(f"polynomial dimension {p.dim} does not match context dimension {ctx.dim}")


def _difference_parts(ctx: DunklContext, p: Poly) -> list[tuple[tuple[Fraction, ...], Fraction, Poly]]:
    """Per-root divided differences (root, kappa, (p - p.r_alpha)/<alpha,x>)."""
    return [(root, kappa, p.divided_difference(root)) for root, kappa in ctx.active_roots]


def dunkl_apply(ctx: DunklContext, xi: Sequence[RationalLike], p: Poly) -> Poly:
    """Apply the Dunkl operator in direction ``xi``.

    D_xi p = d_xi p + sum over positive roots of
    kappa_alpha <alpha, xi> (p(x) - p(r_alpha x)) / <alpha, x>.
    """
    _require_ctx_dim(ctx, p)
    v = [as_fraction(c) for c in xi]
    if len(v) != ctx.dim or not any(v):
        raise ValueError("xi must be a nonzero vector of the ambient dimension")
    out = Poly.zero(ctx.dim)
    for j, c in enumerate(v):
        if c:
            out = out + p.partial(j + 1) * c
    for root, kappa in ctx.active_roots:
        proj = sum((a * b for a, b in zip(root, v)), Fraction(0))
        if proj:
            out = out + p.divided_difference(root) * (kappa * proj)
    return out


def dunkl_axis(ctx: DunklContext, axis: int, p: Poly) -> Poly:
    """D_j for the standard basis direction, 1-based axis index."""
    if not 1 <= axis <= ctx.dim:
        raise ValueError(f"axis {axis} out of range 1..{ctx.dim}")
    _require_ctx_dim(ctx, p)
    out = p.partial(axis)
    j = axis - 1
    for root, kappa in ctx.active_roots:
        aj = root[j]
        if aj:
            out = out + p.divided_difference(root) * (kappa * aj)
    return out


def dunkl_gradient(ctx: DunklContext, p: Poly) -> list[Poly]:
    """All coordinate Dunkl derivatives, sharing the divided differences."""
    _require_ctx_dim(ctx, p)
    diffs = _difference_parts(ctx, p)
    grad = []
    for j in range(ctx.dim):
        g = p.partial(j + 1)
        for root, kappa, dd in diffs:
            aj = root[j]
            if aj:
                g = g + dd * (kappa * aj)
        grad.append(g)
    return grad


def laplacian(ctx: DunklContext, p: Poly) -> Poly:
    """The Dunkl Laplacian, the sum of the squared coordinate operators."""
    _require_ctx_dim(ctx, p)
    out = Poly.zero(ctx.dim)
    for j, g in enumerate(dunkl_gradient(ctx, p)):
        if not g.is_zero:
            out = out + dunkl_axis(ctx, j + 1, g)
    return out


def apply_operator_poly(ctx: DunklContext, q: Poly, p: Poly) -> Poly:
    """Substitute the coordinate Dunkl operators into q and apply to p.

    Each monomial x^beta of q acts as the product of the per-axis operators;
    the operators commute, so the fixed ascending axis order is immaterial
    (and that commutation is itself a verified property).
    """
    _require_ctx_dim(ctx, q)
    _require_ctx_dim(ctx, p)
    out = Poly.zero(ctx.dim)
    for mono, coeff in q.terms.items():
        r = p
        for j, e in enumerate(mono):
            for _ in range(e):
                if r.is_zero:
                    break
                r = dunkl_axis(ctx, j + 1, r)
            if r.is_zero:
                break
        if not r.is_zero:
            out = out + r * coeff
    return out


def pairing(ctx: DunklContext, p: Poly, q: Poly) -> Fraction:
    """The bilinear form (p(D) q)(0): symmetric, and zero across degrees."""
    return apply_operator_poly(ctx, p, q).constant_term()
