"""Logarithmic Chern classes, the extension-sheaf Chern data, and slopes.

For a pair (X, D) with D = sum D_i simple normal crossing:

    c1(T_X(-log D)) = -(K_X + D)
    c2(T_X(-log D)) = c2(T_X) + K_X.D + D^2 - sum_{i<j} D_i.D_j

The extension of T_X(-log D) by the trivial sheaf has the same c1 and
c2 for every extension class, so no extension class appears in the API.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from . import chow
from .chow import ChowError, CycleClass, GradeError
from .models import (AmbientModel, ChernData, default_polarization,
                     hypersurface, projective_space, tangent_chern)


def _is_effective(model: AmbientModel, cls: CycleClass) -> bool:
    coeffs = cls.coeffs
    if any(c.denominator != 1 for c in coeffs):
        return False
    if model.kind == "hirzebruch":
        a, b = coeffs
        return a >= 0 and b >= 0 and (a, b) != (0, 0)
    return coeffs[0] >= 1


@dataclass(frozen=True)
class LogPair:
    """An ambient model with an ordered list of labeled prime-divisor
    classes. Distinct components may share a class (two hyperplanes are
    two components); the SNC hypothesis is a modeling assumption."""

    model: AmbientModel
    components: tuple[tuple[str, CycleClass], ...] = field(default=())

    def __post_init__(self):
        object.__setattr__(self, "components", tuple(self.components))
        labels = [label for label, _ in self.components]
        if len(set(labels)) != len(labels):
            raise ChowError(f"duplicate component labels in {labels}")
        for label, cls in self.components:
            if cls.model != self.model:
                raise ChowError(
                    f"component {label!r} lives on {cls.model}, "
                    f"not {self.model}")
            if cls.grade != 1:
                raise GradeError(f"component {label!r} must have grade 1")
            if not _is_effective(self.model, cls):
                raise ChowError(
                    f"component {label!r} = {cls} is not an effective "
                    "prime-divisor class on this model")

    @property
    def classes(self) -> tuple[CycleClass, ...]:
        return tuple(cls for _, cls in self.components)

    def boundary(self) -> CycleClass:
        """The total divisor D = sum D_i (zero if there are no components)."""
        total = self.model.zero(1)
        for cls in self.classes:
            total = total + cls
        return total


def pn_pair(n: int, degrees) -> LogPair:
    """Convenience: (P^n, D) with D_i of the given degrees."""
    model = projective_space(n)
    comps = tuple((f"D{i + 1}", model.divisor(d))
                  for i, d in enumerate(degrees))
    return LogPair(model, comps)


def hypersurface_pair(n: int, q: int, l: int) -> LogPair:
    """Convenience: degree-q hypersurface with l degree-1 components."""
    model = hypersurface(n, q)
    comps = tuple((f"D{i + 1}", model.divisor(1)) for i in range(l))
    return LogPair(model, comps)


def log_c1(pair: LogPair) -> CycleClass:
    return tangent_chern(pair.model).c1 - pair.boundary()


def log_c2(pair: LogPair) -> CycleClass:
    tangent = tangent_chern(pair.model)
    D = pair.boundary()
    K = -tangent.c1
    result = tangent.c2 + chow.mul(K, D) + chow.mul(D, D)
    classes = pair.classes
    for i in range(len(classes)):
        for j in range(i + 1, len(classes)):
            result = result - chow.mul(classes[i], classes[j])
    return result


def log_chern(pair: LogPair) -> ChernData:
    """(rank, c1, c2) of the logarithmic tangent bundle itself."""
    return ChernData(pair.model.dim, log_c1(pair), log_c2(pair))


def extension_chern(pair: LogPair) -> ChernData:
    """Chern data of the rank-(dim+1) extension by the trivial sheaf;
    c1 and c2 agree with the logarithmic tangent bundle."""
    return ChernData(pair.model.dim + 1, log_c1(pair), log_c2(pair))


def slope(model: AmbientModel, c1: CycleClass, rank: int,
          H: CycleClass) -> Fraction:
    """mu_H = c1 . H^{n-1} / rank."""
    if rank < 1:
        raise ChowError("rank must be positive")
    if c1.grade != 1 or H.grade != 1:
        raise GradeError("slope needs grade-1 classes")
    return chow.pair_with_polarization(c1, H, model.dim - 1) / rank


def wedge_cotangent_slope(n: int, r: int) -> Fraction:
    """Slope of the r-th wedge of the cotangent bundle on P^n, from
    c1(wedge^r Omega^1) = -C(n-1, r-1)(n+1) H and rank C(n, r)."""
    if not 1 <= r <= n:
        raise ChowError(f"need 1 <= r <= n, got r={r}, n={n}")
    model = projective_space(n)
    c1 = model.divisor(-comb(n - 1, r - 1) * (n + 1))
    return slope(model, c1, comb(n, r), default_polarization(model))
