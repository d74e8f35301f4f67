"""The three ambient families: P^n, degree-q hypersurfaces in P^{n+1},
and Hirzebruch surfaces F_m, together with their intrinsic data.

Hypersurface classes live in the truncated subring generated by the
hyperplane section h with deg(h^n) = q; smoothness and genericity are
modeling assumptions and are not checked.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .chow import ChowError, CycleClass, GradeError, Scalar


@dataclass(frozen=True)
class AmbientModel:
    kind: str  # "projective_space" | "hypersurface" | "hirzebruch"
    n: int = 0  # dimension (projective_space, hypersurface)
    q: int = 0  # hypersurface degree
    m: int = 0  # Hirzebruch twist

    @property
    def dim(self) -> int:
        return 2 if self.kind == "hirzebruch" else self.n

    def basis_size(self, grade: int) -> int:
        if self.kind == "hirzebruch" and grade == 1:
            return 2
        return 1

    def basis_names(self, grade: int) -> tuple[str, ...]:
        if self.kind == "hirzebruch":
            return {0: ("",), 1: ("C0", "f"), 2: ("pt",)}[grade]
        gen = "H" if self.kind == "projective_space" else "h"
        if grade == 0:
            return ("",)
        if grade == 1:
            return (gen,)
        return (f"{gen}^{grade}",)

    def __str__(self) -> str:
        if self.kind == "projective_space":
            return f"P^{self.n}"
        if self.kind == "hypersurface":
            return f"X_{self.q} in P^{self.n + 1}"
        return f"F_{self.m}"

    # -- class constructors ------------------------------------------------

    def cycle(self, grade: int, *coeffs: Scalar) -> CycleClass:
        return CycleClass(self, grade, tuple(Fraction(c) for c in coeffs))

    def zero(self, grade: int) -> CycleClass:
        return CycleClass(self, grade, (0,) * self.basis_size(grade))

    def unit(self) -> CycleClass:
        return self.cycle(0, 1)

    def point(self, c: Scalar = 1) -> CycleClass:
        return self.cycle(self.dim, c)

    def divisor(self, *coeffs: Scalar) -> CycleClass:
        """Grade-1 class: one coefficient on P^n/hypersurface, (C0, f)
        coordinates on F_m."""
        return self.cycle(1, *coeffs)


@dataclass(frozen=True)
class ChernData:
    rank: int
    c1: CycleClass
    c2: CycleClass

    def __post_init__(self):
        if self.rank < 1:
            raise ChowError("rank must be positive")
        if self.c1.model != self.c2.model:
            raise ChowError("c1 and c2 must live on one model")
        if self.c1.grade != 1 or self.c2.grade != 2:
            raise GradeError("ChernData needs c1 in grade 1, c2 in grade 2")


def projective_space(n: int) -> AmbientModel:
    if n < 2:
        raise ChowError(f"projective space needs n >= 2, got {n}")
    return AmbientModel("projective_space", n=n)


def hypersurface(n: int, q: int) -> AmbientModel:
    if n < 2 or q < 1:
        raise ChowError(f"hypersurface needs n >= 2 and q >= 1, got ({n}, {q})")
    return AmbientModel("hypersurface", n=n, q=q)


def hirzebruch(m: int) -> AmbientModel:
    if m < 1:
        raise ChowError(f"Hirzebruch surface needs m >= 1, got {m}")
    return AmbientModel("hirzebruch", m=m)


def c_infinity(model: AmbientModel) -> CycleClass:
    """The section C_inf ~ C0 + m*f on F_m."""
    if model.kind != "hirzebruch":
        raise ChowError("C_inf only exists on a Hirzebruch surface")
    return model.divisor(1, model.m)


def tangent_chern(model: AmbientModel) -> ChernData:
    """Rank, c1 and c2 of the tangent bundle.

    Hypersurface values truncate (1+h)^{n+2} / (1+qh): c1 = (n+2-q)h,
    c2 = (C(n+2,2) - q(n+2) + q^2) h^2.  On F_m, c2 equals the Euler
    number 4 and c1 = 2C0 + (m+2)f.
    """
    if model.kind == "projective_space":
        n = model.n
        return ChernData(n, model.divisor(n + 1),
                         model.cycle(2, comb(n + 1, 2)))
    if model.kind == "hypersurface":
        n, q = model.n, model.q
        c2 = comb(n + 2, 2) - q * (n + 2) + q * q
        return ChernData(n, model.divisor(n + 2 - q), model.cycle(2, c2))
    return ChernData(2, model.divisor(2, model.m + 2), model.point(4))


def canonical_class(model: AmbientModel) -> CycleClass:
    return -tangent_chern(model).c1


def default_polarization(model: AmbientModel) -> CycleClass:
    """H on P^n, h on a hypersurface, the interior ample class
    C0 + (m+1)f on F_m."""
    if model.kind == "hirzebruch":
        return model.divisor(1, model.m + 1)
    return model.divisor(1)


def is_nef(model: AmbientModel, divisor: CycleClass) -> bool:
    """Nefness against the Mori cone: a single sign on Picard-rank-one
    models; on F_m, nonnegative pairing with both f and C0."""
    if divisor.model != model:
        raise ChowError("divisor does not live on this model")
    if divisor.grade != 1:
        raise GradeError("nefness is a codimension-1 question")
    if model.kind == "hirzebruch":
        a, b = divisor.coeffs
        return a >= 0 and b - a * model.m >= 0
    return divisor.coeffs[0] >= 0
