"""Reflection groups with rational root coordinates, and their weights.

The catalog covers the families that admit rational-coordinate reduced
root systems: sign flips (``z2``), the symmetric group acting on all d
coordinates (``a``), hyperoctahedral (``b``), and demihyperoctahedral
(``d``).  Dihedral groups with irrational standard roots are deliberately
absent; ``b`` at d = 2 supplies the square-symmetry case.  Roots are kept
in their integer-coordinate normalization: every exposed quantity is
invariant under rescaling a root orbit by a positive rational.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .polyring import RationalLike, as_fraction

Vector = tuple[Fraction, ...]

FAMILY_ORBITS = {"z2": None, "a": 1, "b": 2, "d": 1}


def _dot(u: Sequence[Fraction], v: Sequence[Fraction]) -> Fraction:
    return sum((a * b for a, b in zip(u, v)), Fraction(0))


def _unit(dim: int, i: int, sign: int = 1) -> Vector:
    return tuple(Fraction(sign if j == i else 0) for j in range(dim))


@dataclass(frozen=True, eq=False)
class RootSystem:
    """A reduced root system given by positive roots and orbit multiplicities.

    ``orbit_ids[k]`` is the orbit of ``positive_roots[k]``; ``kappa_by_orbit``
    assigns one multiplicity per orbit, so invariance under the group action
    holds by construction (and is asserted for catalog systems).
    """

    dim: int
    positive_roots: tuple[Vector, ...]
    orbit_ids: tuple[int, ...]
    kappa_by_orbit: tuple[Fraction, ...]
    family: str | None = None

    def __post_init__(self):
        if self.dim < 2:
            raise ValueError("dimension must be >= 2")
        if len(self.orbit_ids) != len(self.positive_roots):
            raise ValueError("need one orbit id per positive root")
        if any(k < 0 for k in self.kappa_by_orbit):
            raise ValueError("multiplicities must be non-negative")
        if any(oid not in range(len(self.kappa_by_orbit)) for oid in self.orbit_ids):
            raise ValueError("orbit id out of range")
        for idx, root in enumerate(self.positive_roots):
            if len(root) != self.dim or not any(root):
                raise ValueError(f"root #{idx} is not a nonzero vector of dimension {self.dim}")
        # reduced: positive roots pairwise non-parallel
        for i in range(len(self.positive_roots)):
            for j in range(i + 1, len(self.positive_roots)):
                u, v = self.positive_roots[i], self.positive_roots[j]
                if all(u[a] * v[b] == u[b] * v[a] for a in range(self.dim) for b in range(self.dim)):
                    raise ValueError(f"roots #{i} and #{j} are parallel; the system must be reduced")

    def kappa_of(self, index: int) -> Fraction:
        return self.kappa_by_orbit[self.orbit_ids[index]]

    def orbit_of(self, root: Sequence[RationalLike]) -> int:
        key = tuple(as_fraction(v) for v in root)
        for idx, r in enumerate(self.positive_roots):
            if r == key:
                return self.orbit_ids[idx]
        raise ValueError(f"{key!r} is not a positive root of this system")

    def kappa_sum(self) -> Fraction:
        return sum((self.kappa_of(i) for i in range(len(self.positive_roots))), Fraction(0))


@dataclass(frozen=True, eq=False)
class DunklContext:
    """A root system together with its derived spectral constant.

    ``lambda_kappa`` is d/2 - 1 plus the sum of all positive-root
    multiplicities. ``active_roots`` pre-filters the roots with nonzero
    multiplicity, which are the only ones entering the difference part of
    the Dunkl operator.
    """

    root_system: RootSystem
    lambda_kappa: Fraction
    active_roots: tuple[tuple[Vector, Fraction], ...]

    @classmethod
    def from_root_system(cls, rs: RootSystem) -> DunklContext:
        lam = Fraction(rs.dim, 2) - 1 + rs.kappa_sum()
        active = tuple(
            (root, rs.kappa_of(i))
            for i, root in enumerate(rs.positive_roots)
            if rs.kappa_of(i)
        )
        return cls(rs, lam, active)

    @property
    def dim(self) -> int:
        return self.root_system.dim

    @property
    def family(self) -> str | None:
        return self.root_system.family

    def label(self) -> str:
        fam = self.family or "custom"
        if fam == "z2":
            fam = f"z2^{self.dim}"
        elif fam == "a":
            fam = f"a{self.dim - 1}"
        else:
            fam = f"{fam}{self.dim}" if fam in ("b", "d") else fam
        kappas = ",".join(str(k) for k in self.root_system.kappa_by_orbit)
        return f"{fam}[kappa={kappas}]"


def _catalog_roots(family: str, d: int) -> tuple[list[Vector], list[int]]:
    roots: list[Vector] = []
    orbits: list[int] = []
    if family == "z2":
        for i in range(d):
            roots.append(_unit(d, i))
            orbits.append(i)
    elif family == "a":
        for i in range(d):
            for j in range(i + 1, d):
                roots.append(tuple(Fraction(1 if k == i else -1 if k == j else 0) for k in range(d)))
                orbits.append(0)
    elif family == "b":
        for i in range(d):
            roots.append(_unit(d, i))
            orbits.append(0)
        for i in range(d):
            for j in range(i + 1, d):
                for sj in (-1, 1):
                    roots.append(tuple(Fraction(1 if k == i else sj if k == j else 0) for k in range(d)))
                    orbits.append(1)
    elif family == "d":
        for i in range(d):
            for j in range(i + 1, d):
                for sj in (-1, 1):
                    roots.append(tuple(Fraction(1 if k == i else sj if k == j else 0) for k in range(d)))
                    orbits.append(0)
    else:
        raise ValueError(f"unknown family {family!r}; expected one of z2, a, b, d")
    return roots, orbits


def make_context(family: str, d: int, kappa_by_orbit: Sequence[RationalLike]) -> DunklContext:
    """Build a catalog context.

    ``family`` is one of ``z2`` (d orbits), ``a`` (1 orbit, the symmetric
    group acting on d coordinates), ``b`` (2 orbits: coordinate roots then
    the two-coordinate roots), ``d`` (1 orbit).  ``d`` is the ambient
    dimension, at least 2.
    """
    family = family.lower()
    if d < 2:
        raise ValueError("dimension must be >= 2")
    kappas = tuple(as_fraction(k) for k in kappa_by_orbit)
    if any(k < 0 for k in kappas):
        raise ValueError("multiplicities must be non-negative")
    expected = FAMILY_ORBITS.get(family)
    if family not in FAMILY_ORBITS:
        raise ValueError(f"unknown family {family!r}; expected one of z2, a, b, d")
    n_orbits = d if expected is None else expected
    if len(kappas) != n_orbits:
        raise ValueError(f"family {family!r} at d={d} takes {n_orbits} multiplicities, got {len(kappas)}")
    roots, orbits = _catalog_roots(family, d)
    rs = RootSystem(d, tuple(roots), tuple(orbits), kappas, family=family)
    _assert_orbit_invariance(rs)
    return DunklContext.from_root_system(rs)


def _assert_orbit_invariance(rs: RootSystem) -> None:
    """Reflections must permute the root set and preserve multiplicities."""
    index = {root: i for i, root in enumerate(rs.positive_roots)}
    for beta in rs.positive_roots:
        bb = _dot(beta, beta)
        for i, alpha in enumerate(rs.positive_roots):
            factor = 2 * _dot(beta, alpha) / bb
            image = tuple(a - factor * b for a, b in zip(alpha, beta))
            pos = image if image in index else tuple(-v for v in image)
            if pos not in index:
                raise AssertionError(f"reflection across {beta} maps {alpha} outside the root set")
            if rs.orbit_ids[index[pos]] != rs.orbit_ids[i]:
                raise AssertionError(
                    f"orbit assignment not invariant: {alpha} -> {pos} changes orbit"
                )


def reflection_matrix(ctx: DunklContext, alpha: Sequence[RationalLike]) -> list[list[Fraction]]:
    """Matrix of the reflection across alpha-perp, for a positive root alpha."""
    a = tuple(as_fraction(v) for v in alpha)
    if a not in ctx.root_system.positive_roots:
        raise ValueError(f"{a!r} is not a positive root of this context")
    norm2 = _dot(a, a)
    d = ctx.dim
    return [
        [(Fraction(1) if i == j else Fraction(0)) - 2 * a[i] * a[j] / norm2 for j in range(d)]
        for i in range(d)
    ]


def weight_eval(ctx: DunklContext, point: Sequence[float]) -> float:
    """The weight h(x) = prod |<alpha, x>|^kappa_alpha over positive roots.

    Float-valued; exponents may be non-integers.  Used by the floating
    oracle only; the exact engine never needs the weight pointwise.
    """
    if len(point) != ctx.dim:
        raise ValueError("point length must equal the dimension")
    rs = ctx.root_system
    value = 1.0
    for i, root in enumerate(rs.positive_roots):
        kappa = rs.kappa_of(i)
        if not kappa:
            continue
        dot = sum(float(a) * x for a, x in zip(root, point))
        value *= abs(dot) ** float(kappa)
    return value


def context_from_descriptor(descriptor: str, kappa_by_orbit: Sequence[RationalLike]) -> DunklContext:
    """Parse a group descriptor string: ``z2^D``, ``aR``, ``bD``, ``dD``.

    For the ``a`` family the number is the Coxeter rank, so ``a2`` is the
    symmetric group on 3 letters acting in dimension 3.
    """
    import re

    text = descriptor.strip().lower()
    m = re.fullmatch(r"z2\^(\d+)", text)
    if m:
        return make_context("z2", int(m.group(1)), kappa_by_orbit)
    m = re.fullmatch(r"([abd])(\d+)", text)
    if m:
        family, num = m.group(1), int(m.group(2))
        d = num + 1 if family == "a" else num
        return make_context(family, d, kappa_by_orbit)
    raise ValueError(f"bad group descriptor {descriptor!r}; expected z2^D, aR, bD, or dD")
