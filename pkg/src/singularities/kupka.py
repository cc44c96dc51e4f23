# src/singularities/kupka.py
"""Classification d'un point singulier : Kupka / non-Kupka, puis sous-classe simple."""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from core.settings import FoliaSettings, resolve_settings
from src.algebra.linear import charpoly_coefficients
from src.algebra.rational import to_rat
from src.errors import NotSingularPoint
from src.forms.exterior import PolyForm, rot
from src.forms.foliation import FoliationP3, chart_point, chart_restrict, first_nonzero_chart
from src.ideals.ideal import Ideal
from src.ideals.local import LocalMultiplicity, local_multiplicity_at_origin

logger = logging.getLogger(__name__)

KUPKA = "Kupka"
NON_KUPKA = "nonKupka"

LOGARITHMIC = "logarithmic"
DEGENERATED = "degenerated"
NILPOTENT = "nilpotent"
NONE_OF_THESE = "none"


@dataclass(frozen=True)
class PointClass:
    """
    Résultat de classify_point.

    simple_subclass, sigma et rot_milnor ne sont renseignés que pour un point
    non-Kupka ; sigma = (σ1, σ2, σ3) du polynôme caractéristique de la partie
    linéaire de rot.
    """

    point: Tuple[Fraction, ...]
    kind: str
    jet1_nonzero: bool
    simple_subclass: Optional[str] = None
    sigma: Optional[Tuple[Fraction, ...]] = None
    rot_milnor: Optional[LocalMultiplicity] = None
    chart: int = 0

    @property
    def is_kupka(self) -> bool:
        return self.kind == KUPKA


def simple_subclass(sigma: Sequence[Fraction], linear_nonzero: bool, jet2_nonzero: bool) -> str:
    """Sous-classe lue sur (σ1, σ2, σ3) sans calculer les valeurs propres."""
    s1, s2, s3 = sigma
    if s3 != 0:
        return LOGARITHMIC if jet2_nonzero else NONE_OF_THESE
    if s2 != 0 and s1 == 0:
        return DEGENERATED
    if s1 == 0 and s2 == 0 and linear_nonzero:
        return NILPOTENT
    return NONE_OF_THESE


def local_germ(F: FoliationP3, point: Sequence) -> Tuple[PolyForm, int]:
    """Forme affine translatée : le point projectif devient l'origine de sa carte."""
    chart = first_nonzero_chart(point)
    alpha = chart_restrict(F, chart)
    return alpha.translate(chart_point(point, chart)), chart


def classify_germ(alpha: PolyForm, settings: Optional[FoliaSettings] = None):
    """Sous-classe d'un germe affine à l'origine : (sous-classe, sigma, mu(rot))."""
    X = rot(alpha)
    linear = X.linear_part()
    sigma = tuple(charpoly_coefficients(linear))
    linear_nonzero = any(v != 0 for row in linear for v in row)
    jet2_nonzero = not alpha.truncate(2).is_zero()
    subclass = simple_subclass(sigma, linear_nonzero, jet2_nonzero)
    mu = local_multiplicity_at_origin(Ideal(X.ring, X.components), settings)
    return subclass, sigma, mu


def classify_point(F: FoliationP3, point: Sequence, settings: Optional[FoliaSettings] = None) -> PointClass:
    """
    Paramètres:
        F (FoliationP3): Le feuilletage.
        point (list): Point projectif rationnel.

    Retourne:
        PointClass: Kupka si un coefficient de d omega est non nul en p.

    Lève:
        NotSingularPoint: omega(p) ≠ 0.
    """
    settings = resolve_settings(settings)
    point = tuple(to_rat(v) for v in point)
    for k, a in enumerate(F.coefficients):
        value = a.evaluate(point)
        if value != 0:
            raise NotSingularPoint(
                f"Le point {list(map(str, point))} n'est pas singulier (A{k}(p) = {value})."
            )
    germ, chart = local_germ(F, point)
    jet1_nonzero = not germ.truncate(1).is_zero()
    d_values = [b.evaluate(point) for b in F.d_omega_coefficients()]
    if any(v != 0 for v in d_values):
        return PointClass(point, KUPKA, jet1_nonzero, chart=chart)
    subclass, sigma, mu = classify_germ(germ, settings)
    logger.debug("Point non-Kupka %s : sous-classe %s, sigma %s.", point, subclass, sigma)
    return PointClass(point, NON_KUPKA, jet1_nonzero, subclass, sigma, mu, chart)
