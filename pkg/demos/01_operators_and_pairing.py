"""A first walk through the deformed derivative calculus.

Pick a reflection group and multiplicities, apply the deformed directional
derivative and its Laplacian, and evaluate the bilinear pairing.  Every
value printed below is an exact rational; nothing is approximated.
"""

from fractions import Fraction

from dunkl_harmonics import (
    dunkl_apply,
    laplacian,
    make_context,
    pairing,
    parse,
    Poly,
)

# the sign-flip group on R^2 with one multiplicity per coordinate mirror
ctx = make_context("z2", 2, [Fraction(1, 2), Fraction(1, 2)])
print(f"group: {ctx.label()},  spectral constant lambda = {ctx.lambda_kappa}")

x1 = parse("x1", 2)
print("\nApplying the deformed derivative along e1:")
print("  D_1 x1      =", dunkl_apply(ctx, [1, 0], x1))
print("  D_1 x2      =", dunkl_apply(ctx, [1, 0], parse("x2", 2)))
print("  D_1 x1^3    =", dunkl_apply(ctx, [1, 0], parse("x1^3", 2)))

# the deformation vanishes at kappa = 0: plain partial derivatives return
flat = make_context("z2", 2, [0, 0])
print("\nAt kappa = 0 the operator is the plain derivative:")
print("  D_1 x1^3    =", dunkl_apply(flat, [1, 0], parse("x1^3", 2)))

# the Laplacian of |x|^2 measures the total multiplicity: 4 (lambda + 1)
norm2 = Poly.norm_squared(2)
print("\nLaplacian of |x|^2 (equals 4 lambda + 4):")
print("  Lap |x|^2   =", laplacian(ctx, norm2))

# the pairing (p(D) q)(0) is symmetric and positive definite
p = parse("x1^2 - x2^2", 2)
q = parse("x1*x2", 2)
print("\nThe bilinear pairing:")
print("  <x1, x1>    =", pairing(ctx, x1, x1))
print("  <p, q>      =", pairing(ctx, p, q), " (different symmetry types)")
print("  <p, p>      =", pairing(ctx, p, p))
print("  symmetric?  ", pairing(ctx, p, q) == pairing(ctx, q, p))
