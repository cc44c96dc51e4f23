# src/residues/grothendieck.py
"""
Résidus exacts : résidu de Laurent en une variable et résidu de Grothendieck
local en deux variables par la loi de transformation.
"""
import logging
from fractions import Fraction
from typing import List, Optional, Tuple

from core.settings import FoliaSettings, resolve_settings
from src.algebra.polynomial import MPoly
from src.algebra.series import TruncSeries
from src.errors import ArityMismatch, ExponentCapExceeded, OriginNotAZero, RingMismatch
from src.ideals.hilbert import zero_dim_degree
from src.ideals.ideal import Ideal
from src.ideals.lift import CofactorBasis
from src.ideals.saturation import saturation

logger = logging.getLogger(__name__)


def univariate_residue(num: MPoly, den: MPoly) -> Fraction:
    """
    Coefficient de t^-1 dans le développement de Laurent de num/den en t = 0.

    den = t^k · u avec u(0) ≠ 0 ; le résultat est le coefficient de t^(k-1) dans
    num · u^-1 (nul si k = 0).
    """
    if num.ring.nvars != 1 or den.ring != num.ring:
        raise ArityMismatch("Le résidu univarié exige num et den dans un même anneau à une variable.")
    if den.is_zero():
        raise ZeroDivisionError("Dénominateur nul dans un résidu.")
    k = den.low_degree()
    if k == 0 or num.is_zero():
        return Fraction(0)
    ring = den.ring
    unit = MPoly(ring, {(m[0] - k,): c for m, c in den.terms.items()})
    cap = k - 1
    quotient = TruncSeries(num, cap) * TruncSeries(unit, cap).inverse()
    return quotient.coefficient((cap,))


def _local_unit(I: Ideal, settings: FoliaSettings) -> MPoly:
    """u avec u(0) = 1 et u ∈ I : (x, y)^∞ ; u tue les zéros de I hors de l'origine."""
    ring = I.ring
    K = saturation(I, Ideal.irrelevant(ring), settings=settings)
    if K.is_unit():
        return ring.one()
    gens = list(ring.gens()) + list(K.generators)
    cofactors = CofactorBasis(gens, settings=settings).lift(ring.one())
    if cofactors is None:
        # l'origine n'est pas un zéro de I
        raise OriginNotAZero("L'origine n'est pas un zéro isolé de (P, Q).")
    u = ring.zero()
    for c, k in zip(cofactors[2:], K.generators):
        u = u + c * k
    return u


def transformation_exponent(
    P: MPoly, Q: MPoly, u: MPoly, settings: Optional[FoliaSettings] = None
) -> Tuple[int, List[List[MPoly]]]:
    """
    Plus petit N avec u·x^N, u·y^N dans (P, Q), et la matrice A de la loi de
    transformation : (u x^N, u y^N) = A · (P, Q).

    Lève:
        ExponentCapExceeded: aucun N <= residue_exponent_cap.
    """
    settings = resolve_settings(settings)
    ring = P.ring
    basis = CofactorBasis([P, Q], settings=settings)
    x, y = ring.gens()
    for N in range(1, settings.residue_exponent_cap + 1):
        settings.checkpoint()
        row_x = basis.lift(u * x**N)
        if row_x is None:
            continue
        row_y = basis.lift(u * y**N)
        if row_y is None:
            continue
        logger.debug("Loi de transformation : N = %d.", N)
        return N, [row_x, row_y]
    raise ExponentCapExceeded(
        f"Aucun exposant N <= {settings.residue_exponent_cap} avec x^N, y^N dans (P, Q) localement."
    )


def _poly_det2(A: List[List[MPoly]]) -> MPoly:
    return A[0][0] * A[1][1] - A[0][1] * A[1][0]


def grothendieck_residue_2d(
    h: MPoly, P: MPoly, Q: MPoly, settings: Optional[FoliaSettings] = None
) -> Fraction:
    """
    Res_0 [h dx∧dy / (P, Q)] à l'origine.

    Paramètres:
        h, P, Q (MPoly): Polynômes en 2 variables ; (P, Q) de dimension zéro.

    Retourne:
        Fraction: coefficient de x^(N-1) y^(N-1) dans h · det(A) · u^-2.

    Lève:
        OriginNotAZero: P(0) ou Q(0) non nul.
        NotZeroDimensional: (P, Q) n'est pas de dimension zéro.
        ExponentCapExceeded: exposant de transformation introuvable.
    """
    settings = resolve_settings(settings)
    ring = P.ring
    if ring.nvars != 2 or Q.ring != ring or h.ring != ring:
        raise RingMismatch("Le résidu de Grothendieck exige h, P, Q dans un même anneau à 2 variables.")
    if P.constant_term() != 0 or Q.constant_term() != 0:
        raise OriginNotAZero(f"L'origine n'est pas un zéro de (P, Q) = ({P}, {Q}).")
    I = Ideal(ring, [P, Q])
    zero_dim_degree(I, settings=settings)
    if h.is_zero():
        return Fraction(0)
    u = _local_unit(I, settings)
    N, A = transformation_exponent(P, Q, u, settings)
    cap = 2 * N - 2
    numerator = TruncSeries(h * _poly_det2(A), cap)
    u_inv = TruncSeries(u, cap).inverse()
    return (numerator * u_inv * u_inv).coefficient((N - 1, N - 1))

