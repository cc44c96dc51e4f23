# src/forms/families.py
"""Constructeurs des familles classiques : feuilletages logarithmiques et pinceaux."""
import logging
from fractions import Fraction
from typing import Sequence

import sympy

from src.algebra.polynomial import MPoly, sympy_gcd
from src.algebra.rational import format_rat, to_rat
from src.errors import DescentViolation, NonHomogeneous, NonReducedPencil, NotCoprime, WeightCondition
from src.forms.exterior import PolyForm, one_form_from_gradient
from src.forms.foliation import FoliationP3, validate_foliation

logger = logging.getLogger(__name__)


def _check_homogeneous(polys: Sequence[MPoly]):
    for f in polys:
        if f.is_zero() or not f.is_homogeneous():
            raise NonHomogeneous(f"L'hypersurface {f} n'est pas donnée par un polynôme homogène non nul.")


def _check_coprime(polys: Sequence[MPoly]):
    for i in range(len(polys)):
        for j in range(i + 1, len(polys)):
            g = sympy_gcd([polys[i], polys[j]])
            if not g.is_constant():
                raise NotCoprime(f"{polys[i]} et {polys[j]} ont le facteur commun {g}.")


def _is_squarefree(f: MPoly) -> bool:
    symbols = sympy.symbols(f.ring.names)
    _, parts = sympy.sqf_list(f.to_sympy(symbols), *symbols)
    return all(mult == 1 for _, mult in parts)


def build_logarithmic(hypersurfaces: Sequence[MPoly], weights: Sequence) -> FoliationP3:
    """
    omega = (Π F_j) Σ λ_i dF_i / F_i = Σ λ_i (Π_{j≠i} F_j) dF_i.

    Paramètres:
        hypersurfaces (list[MPoly]): F_i homogènes, deux à deux premiers entre eux.
        weights (list): Poids λ_i rationnels avec Σ λ_i deg F_i = 0.

    Retourne:
        FoliationP3: feuilletage de degré Σ deg F_i − 2.
    """
    hypersurfaces = list(hypersurfaces)
    weights = [to_rat(w) for w in weights]
    if len(hypersurfaces) != len(weights):
        raise WeightCondition(
            f"{len(hypersurfaces)} hypersurfaces pour {len(weights)} poids."
        )
    if len(hypersurfaces) < 2:
        raise WeightCondition("Un feuilletage logarithmique exige au moins deux hypersurfaces.")
    _check_homogeneous(hypersurfaces)
    degrees = [f.degree() for f in hypersurfaces]
    total = sum((w * k for w, k in zip(weights, degrees)), Fraction(0))
    if total != 0:
        raise WeightCondition(f"Σ λ_i deg F_i = {format_rat(total)} ≠ 0.")
    _check_coprime(hypersurfaces)

    ring = hypersurfaces[0].ring
    omega = PolyForm.zero(ring, 1)
    for i, (f, w) in enumerate(zip(hypersurfaces, weights)):
        if w == 0:
            continue
        others = ring.one()
        for j, g in enumerate(hypersurfaces):
            if j != i:
                others = others * g
        omega = omega + one_form_from_gradient(f).scale(others * w)
    d = sum(degrees) - 2
    logger.debug("Feuilletage logarithmique de degré %d (%d hypersurfaces).", d, len(hypersurfaces))
    return validate_foliation(omega, d)


def build_pencil(F: MPoly, G: MPoly, p: int, q: int) -> FoliationP3:
    """
    Pinceau (ramifié) F^p / G^q : omega = p·G dF − q·F dG, de degré deg F + deg G − 2.
    """
    _check_homogeneous([F, G])
    if p <= 0 or q <= 0:
        raise DescentViolation(f"Exposants du pinceau non positifs : p = {p}, q = {q}.")
    if p * F.degree() != q * G.degree():
        raise DescentViolation(
            f"p·deg F = {p * F.degree()} ≠ q·deg G = {q * G.degree()}."
        )
    for f in (F, G):
        if not _is_squarefree(f):
            raise NonReducedPencil(f"{f} n'est pas réduit (facteur multiple).")
    _check_coprime([F, G])
    omega = one_form_from_gradient(F).scale(G * p) - one_form_from_gradient(G).scale(F * q)
    return validate_foliation(omega, F.degree() + G.degree() - 2)
