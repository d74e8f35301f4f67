"""Bogomolov-Gieseker discriminants and the two equality predicates.

For a rank-r sheaf the discriminant against a polarization H is

    (c2 - (r-1)/(2r) * c1^2) . H^{n-2}

evaluated as an exact rational; on a surface H^0 is the identity.  The
two predicates test the rank-n and rank-(n+1) coefficients (n-1)/2n and
n/(2(n+1)) on one shared (c1^2.H^{n-2}, c2.H^{n-2}) pair: the latter
equals the discriminant of the trivial-sheaf extension, which has the
same c1 and c2.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from . import chow
from .chow import ChowError, CycleClass, GradeError
from .logchern import LogPair, log_c1, log_c2
from .models import (AmbientModel, ChernData, canonical_class,
                     default_polarization, is_nef)


@dataclass(frozen=True)
class BGReport:
    rank: int  # dim X: rank of the logarithmic tangent bundle
    c1_sq: Fraction  # c1^2 . H^{n-2}
    c2_eval: Fraction  # c2 . H^{n-2}
    discriminant: Fraction
    equality_n: bool
    equality_n_plus_1: bool
    minus_k_plus_d_nef: bool
    polarization: CycleClass


def evaluate_pair(chern: ChernData, H: CycleClass) -> tuple[Fraction, Fraction]:
    """(c1^2 . H^{n-2}, c2 . H^{n-2}) as exact rationals."""
    if H.grade != 1:
        raise GradeError("polarization must have grade 1")
    model = chern.c1.model
    if H.model != model:
        raise ChowError("polarization lives on a different model")
    k = model.dim - 2
    c1_sq = chow.pair_with_polarization(chow.mul(chern.c1, chern.c1), H, k)
    c2_eval = chow.pair_with_polarization(chern.c2, H, k)
    return c1_sq, c2_eval


def discriminant(chern: ChernData, H: CycleClass) -> Fraction:
    c1_sq, c2_eval = evaluate_pair(chern, H)
    r = chern.rank
    return c2_eval - Fraction(r - 1, 2 * r) * c1_sq


def _equality(pair: LogPair, H: CycleClass | None, rank: int) -> bool:
    model = pair.model
    if H is None:
        H = default_polarization(model)
    chern = ChernData(rank, log_c1(pair), log_c2(pair))
    return discriminant(chern, H) == 0


def check_equality_n(pair: LogPair, H: CycleClass | None = None) -> bool:
    """Vanishing at the rank-n coefficient (n-1)/2n."""
    return _equality(pair, H, pair.model.dim)


def check_equality_n_plus_1(pair: LogPair, H: CycleClass | None = None) -> bool:
    """Vanishing at the rank-(n+1) coefficient n/(2(n+1))."""
    return _equality(pair, H, pair.model.dim + 1)


def full_report(pair: LogPair, H: CycleClass | None = None) -> BGReport:
    model = pair.model
    if H is None:
        H = default_polarization(model)
    n = model.dim
    chern = ChernData(n, log_c1(pair), log_c2(pair))
    c1_sq, c2_eval = evaluate_pair(chern, H)
    anti_log_canonical = -canonical_class(model) - pair.boundary()
    return BGReport(
        rank=n,
        c1_sq=c1_sq,
        c2_eval=c2_eval,
        discriminant=c2_eval - Fraction(n - 1, 2 * n) * c1_sq,
        equality_n=(c2_eval - Fraction(n - 1, 2 * n) * c1_sq == 0),
        equality_n_plus_1=(c2_eval - Fraction(n, 2 * (n + 1)) * c1_sq == 0),
        minus_k_plus_d_nef=is_nef(model, anti_log_canonical),
        polarization=H,
    )
