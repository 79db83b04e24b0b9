from fractions import Fraction

import pytest

from dunkl_harmonics import (
    BiPoly,
    Poly,
    UniPoly,
    dunkl_axis,
    funk_hecke_check,
    funk_hecke_coeff,
    funk_hecke_coeff_moments,
    gegenbauer,
    gegenbauer_rodrigues,
    h_harmonic_basis,
    intertwiner_apply,
    make_context,
    parse,
    pochhammer,
    reduce_mod_sphere,
    reproducing_check,
    reproducing_kernel,
    sphere_integrate,
)
from dunkl_harmonics.verify import random_poly


def F(a, b=1):
    return Fraction(a, b)


class TestGegenbauer:
    def test_degree_zero(self):
        assert gegenbauer(0, F(3, 2)) == UniPoly.one()

    def test_degree_one(self):
        lam = F(5, 4)
        assert gegenbauer(1, lam) == UniPoly.from_coefficients([0, 2 * lam])

    def test_degree_two(self):
        lam = F(2, 3)
        # 2 lam (lam + 1) t^2 - lam, from the recurrence by hand
        assert gegenbauer(2, lam) == UniPoly.from_coefficients([-lam, 0, 2 * lam * (lam + 1)])

    def test_rodrigues_route_agrees(self):
        for lam in (F(1, 2), F(1), F(7, 3)):
            for m in range(5):
                assert gegenbauer(m, lam) == gegenbauer_rodrigues(m, lam)

    def test_nonpositive_index_rejected(self):
        with pytest.raises(ValueError):
            gegenbauer(2, 0)
        with pytest.raises(ValueError):
            gegenbauer_rodrigues(2, F(-1, 2))


class TestUniPoly:
    def test_arithmetic(self):
        p = UniPoly.from_coefficients([1, 2])
        q = UniPoly.from_coefficients([0, 1, 3])
        assert (p * q).coefficients == (F(0), F(1), F(5), F(6))
        assert (p + q).coefficients == (F(1), F(3), F(3))
        assert (p - p) == UniPoly.zero()

    def test_derivative_and_eval(self):
        p = UniPoly.from_coefficients([5, 0, 3])
        assert p.derivative() == UniPoly.from_coefficients([0, 6])
        assert p.eval_rational(F(1, 2)) == 5 + F(3, 4)

    def test_trailing_zeros_pruned(self):
        assert UniPoly.from_coefficients([1, 0, 0]).coefficients == (F(1),)

    def test_str(self):
        assert str(UniPoly.from_coefficients([-1, 0, 2])) == "2*t^2 - 1"


class TestIntertwiner:
    def test_fixes_constants(self, nonzero_corpus):
        for ctx in nonzero_corpus:
            assert intertwiner_apply(ctx, Poly.const(ctx.dim, 4)) == Poly.const(ctx.dim, 4)

    def test_identity_at_kappa_zero(self, rng, z2_2_zero):
        for _ in range(5):
            p = random_poly(rng, 2, 5)
            assert intertwiner_apply(z2_2_zero, p) == p

    def test_sign_flip_coordinate(self, z2_2):
        # 1/(1 + 2 kappa_1) x1, from solving the one-dimensional system
        assert intertwiner_apply(z2_2, parse("x1", 2)) == parse("1/2*x1", 2)

    def test_defining_property(self, rng, nonzero_corpus, d3):
        for ctx in list(nonzero_corpus) + [d3]:
            for _ in range(4):
                n = rng.randint(1, 5)
                p = random_poly(rng, ctx.dim, n, homogeneous=True, max_terms=4)
                vp = intertwiner_apply(ctx, p)
                assert vp.is_homogeneous() and (vp.is_zero or vp.degree() == n)
                for j in range(1, ctx.dim + 1):
                    assert dunkl_axis(ctx, j, vp) == intertwiner_apply(ctx, p.partial(j))

    def test_linear(self, rng, b2):
        p = random_poly(rng, 2, 4)
        q = random_poly(rng, 2, 4)
        assert intertwiner_apply(b2, p + q) == intertwiner_apply(b2, p) + intertwiner_apply(b2, q)


class TestFunkHeckeCoeff:
    def test_unit(self, nonzero_corpus):
        for ctx in nonzero_corpus:
            assert funk_hecke_coeff(ctx, 0, UniPoly.one()) == 1

    def test_cubic_value(self, nonzero_corpus):
        for ctx in nonzero_corpus:
            lam = ctx.lambda_kappa
            got = funk_hecke_coeff(ctx, 1, UniPoly.t_power(3))
            assert got == F(3) / (4 * (lam + 1) * (lam + 2))

    def test_parity_vanishing(self, z2_3):
        assert funk_hecke_coeff(z2_3, 2, UniPoly.t_power(1)) == 0
        assert funk_hecke_coeff(z2_3, 1, UniPoly.t_power(2)) == 0

    def test_monomial_closed_form(self, b2):
        lam = b2.lambda_kappa
        import math

        for m in range(4):
            for n in range(4):
                l = m + 2 * n
                got = funk_hecke_coeff(b2, m, UniPoly.t_power(l))
                want = F(math.factorial(l)) / (
                    F(2**l) * math.factorial(n) * pochhammer(lam + 1, m + n)
                )
                assert got == want

    def test_moment_route_agrees(self, rng, nonzero_corpus):
        for ctx in nonzero_corpus:
            for m in range(4):
                phi = UniPoly.from_coefficients(
                    [F(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(7)]
                )
                assert funk_hecke_coeff(ctx, m, phi) == funk_hecke_coeff_moments(ctx, m, phi)

    def test_gegenbauer_orthogonality(self, nonzero_corpus):
        for ctx in nonzero_corpus:
            lam = ctx.lambda_kappa
            for m in range(6):
                for n in range(6):
                    want = F(0) if m != n else lam / (n + lam)
                    assert funk_hecke_coeff(ctx, m, gegenbauer(n, lam)) == want
                    assert funk_hecke_coeff_moments(ctx, m, gegenbauer(n, lam)) == want


class TestBiPoly:
    def test_inner_power_diagonal(self):
        bp = BiPoly.inner_power(2, 2)
        # (x1 y1 + x2 y2)^2 with y-block as variables 3, 4
        expected = parse("x1^2*x3^2 + 2*x1*x2*x3*x4 + x2^2*x4^2", 4)
        assert bp.poly == expected

    def test_integrate_y(self, z2_2):
        bp = BiPoly.inner_power(2, 2)
        got = bp.integrate_y(z2_2)
        want = parse("x1^2", 2) * sphere_integrate(z2_2, parse("x1^2", 2)) + parse(
            "x2^2", 2
        ) * sphere_integrate(z2_2, parse("x2^2", 2))
        assert got == want

    def test_mul_y(self):
        bp = BiPoly.inner_power(2, 1)
        out = bp.mul_y(parse("x2", 2))
        assert out.poly == parse("x1*x3*x4 + x2*x4^2", 4)


class TestFunkHeckeCheck:
    def test_monomial_profiles(self, z2_2, b2):
        for ctx in (z2_2, b2):
            for m in range(3):
                q = h_harmonic_basis(ctx, m)[0]
                for l in range(6):
                    result = funk_hecke_check(ctx, UniPoly.t_power(l), q)
                    assert result.holds

    def test_eigenvalue_scales_harmonic(self, z2_3):
        q = h_harmonic_basis(z2_3, 1)[1]
        result = funk_hecke_check(z2_3, UniPoly.t_power(3), q)
        assert result.holds
        assert result.rhs == reduce_mod_sphere(z2_3, q * result.coefficient)

    def test_low_degree_profile_vanishes(self, a2):
        q = h_harmonic_basis(a2, 2)[0]
        result = funk_hecke_check(a2, UniPoly.t_power(1), q)
        assert result.holds
        assert result.lhs.is_zero and result.rhs.is_zero

    def test_classical_case(self, z2_2_zero):
        # lambda = 0: still covered by the monomial rule and the classical integral
        q = parse("x1", 2)
        result = funk_hecke_check(z2_2_zero, UniPoly.t_power(1), q)
        assert result.holds
        assert result.coefficient == F(1, 2)
        assert result.lhs == parse("1/2*x1", 2)

    def test_linearity_in_profile(self, rng, b2):
        q = h_harmonic_basis(b2, 1)[0]
        phi = UniPoly.from_coefficients([F(rng.randint(-3, 3), 2) for _ in range(6)])
        combo = funk_hecke_check(b2, phi, q)
        assert combo.holds
        total = F(0)
        for l, c in enumerate(phi.coefficients):
            total += c * funk_hecke_coeff(b2, 1, UniPoly.t_power(l))
        assert combo.coefficient == total

    def test_rejects_non_harmonic(self, z2_2):
        with pytest.raises(ValueError):
            funk_hecke_check(z2_2, UniPoly.one(), Poly.norm_squared(2))


class TestReproducing:
    def test_kernel_degree_zero(self, z2_2):
        kernel = reproducing_kernel(z2_2, 0)
        assert kernel.poly == Poly.const(4, 1)

    def test_kernel_classical_linear(self):
        ctx = make_context("z2", 3, [0, 0, 0])
        kernel = reproducing_kernel(ctx, 1)
        assert kernel.poly == parse("3*x1*x4 + 3*x2*x5 + 3*x3*x6", 6)

    def test_delta_behavior(self, z2_2, a2):
        for ctx in (z2_2, a2):
            for n in range(3):
                for m in range(3):
                    for q in h_harmonic_basis(ctx, m)[:2]:
                        assert reproducing_check(ctx, n, q)

    def test_rejects_degenerate_index(self, z2_2_zero):
        with pytest.raises(ValueError):
            reproducing_kernel(z2_2_zero, 1)
