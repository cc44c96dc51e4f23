# src/residues/baum_bott.py
"""
Résidus de Baum-Bott d'un feuilletage le long des composantes de son lieu singulier
et vérification de la somme Σ BB(Z)·deg Z = (d + 2)².
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple, Union

from core.settings import FoliaSettings, resolve_settings
from src.algebra.polynomial import MPoly
from src.algebra.rational import format_rat, to_rat
from src.errors import DegenerateJacobian
from src.forms.foliation import FoliationP3
from src.residues.grothendieck import grothendieck_residue_2d, univariate_residue
from src.singularities.scheme import CurveComponent
from src.singularities.transversal import LocalModel2D, transversal_model

logger = logging.getLogger(__name__)

NONDEGENERATE = "nondegenerate"
GROTHENDIECK = "grothendieck"
UNIVARIATE = "univariate"


@dataclass(frozen=True)
class BBResidue:
    """
    Résidu de Baum-Bott.

    Attributs:
        value (Fraction): Résidu avec le numérateur (tr DX)².
        method (str): "nondegenerate", "grothendieck" ou "univariate".
        where (str): Composante ou point concerné.
        literal_value (Fraction | None): Res_0[tr(DX) dx∧dy / (P, Q)], valeur de
            la formule à numérateur non élevé au carré, conservée pour l'avertissement.
        trace, det (Fraction | None): Jacobien au point (cas non dégénéré).
    """

    value: Fraction
    method: str
    where: str = ""
    literal_value: Optional[Fraction] = None
    trace: Optional[Fraction] = None
    det: Optional[Fraction] = None

    def literal_warning(self) -> Optional[str]:
        if self.literal_value is None or self.literal_value == self.value:
            return None
        return (
            f"{self.where} : le numérateur tr(DX) non élevé au carré donnerait "
            f"{format_rat(self.literal_value)} au lieu de {format_rat(self.value)}"
        )


def bb_nondegenerate(model: LocalModel2D, point: Optional[Sequence] = None) -> BBResidue:
    """
    tr² / det du jacobien de (P, Q) au point (par défaut le point de base du modèle).

    Lève:
        DegenerateJacobian: det = 0 ; utiliser bb_grothendieck.
    """
    if point is not None:
        model = LocalModel2D(model.P, model.Q, tuple(point), model.label)
    jac = model.jacobian()
    trace = jac[0][0] + jac[1][1]
    det = jac[0][0] * jac[1][1] - jac[0][1] * jac[1][0]
    if det == 0:
        raise DegenerateJacobian(
            f"Jacobien de (P, Q) dégénéré en {model.base} : passer par le résidu de Grothendieck."
        )
    return BBResidue(trace**2 / det, NONDEGENERATE, model.label, trace / det, trace, det)


def bb_grothendieck(model: LocalModel2D, settings: Optional[FoliaSettings] = None) -> BBResidue:
    """Res_0 [(tr DX)² dx∧dy / (P, Q)] par la loi de transformation."""
    settings = resolve_settings(settings)
    model = model.centered()
    tr = model.divergence()
    value = grothendieck_residue_2d(tr * tr, model.P, model.Q, settings)
    literal = grothendieck_residue_2d(tr, model.P, model.Q, settings)
    return BBResidue(value, GROTHENDIECK, model.label, literal)


def bb_residue(model: LocalModel2D, settings: Optional[FoliaSettings] = None) -> BBResidue:
    """Forme close si le jacobien est inversible, résidu de Grothendieck sinon."""
    try:
        return bb_nondegenerate(model)
    except DegenerateJacobian:
        logger.debug("Jacobien dégénéré pour %s : résidu de Grothendieck.", model.label)
        return bb_grothendieck(model, settings)


def bb_component(
    F: FoliationP3,
    component: CurveComponent,
    point: Optional[Sequence] = None,
    settings: Optional[FoliaSettings] = None,
) -> BBResidue:
    """BB(Z) calculé sur le modèle transverse en un point lisse de la composante."""
    model = transversal_model(F, component, point)
    residue = bb_residue(model, settings)
    return BBResidue(
        residue.value,
        residue.method,
        component.name,
        residue.literal_value,
        residue.trace,
        residue.det,
    )


def bb_normal_form_residue(g1: MPoly, g2: MPoly) -> BBResidue:
    """
    res_{t=0} [(g1 g2)² / g1 dt] pour la forme normale x dx + g1(y)(1 + x g2(y)) dy.

    g1 et g2 sont des polynômes en une variable.
    """
    value = univariate_residue((g1 * g2) ** 2, g1)
    return BBResidue(value, UNIVARIATE, "forme normale non-Kupka")


@dataclass(frozen=True)
class BBSumReport:
    degree: int
    total: Fraction
    expected: int
    holds: bool
    terms: Tuple[Tuple[Fraction, int], ...]
    note: Optional[str] = None


SumEntry = Tuple[Union[BBResidue, Fraction, int, str], int]


def bb_sum_check(d: int, entries: Sequence[SumEntry]) -> BBSumReport:
    """
    Compare Σ BB(Z)·deg Z à (d + 2)² ; l'écart est un verdict, pas une erreur.

    Une somme nulle sur des composantes toutes non-Kupka à partie linéaire non nulle
    est l'obstruction qui force une composante Kupka ou un point lisse de 1-jet nul.
    """
    terms = []
    for residue, deg in entries:
        value = residue.value if isinstance(residue, BBResidue) else to_rat(residue)
        terms.append((value, int(deg)))
    total = sum((v * k for v, k in terms), Fraction(0))
    expected = (d + 2) ** 2
    holds = total == expected
    note = None
    if not terms:
        note = "aucune donnée de résidu : la somme est incomplète"
    elif not holds and total == 0:
        note = (
            f"somme nulle ≠ {expected} : les composantes ne peuvent pas toutes être non-Kupka "
            "à 1-jet non nul"
        )
    return BBSumReport(d, total, expected, holds, tuple(terms), note)
