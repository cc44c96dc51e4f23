# src/singularities/milnor.py
"""Nombres de Milnor mu(omega, p) = dim O_p / (coefficients), en projectif ou en affine."""
from typing import Optional, Sequence, Union

from core.settings import FoliaSettings
from src.algebra.rational import to_rat
from src.forms.exterior import PolyForm, PolyVectorField, rot
from src.forms.foliation import FoliationP3, chart_point, chart_restrict, first_nonzero_chart
from src.ideals.ideal import Ideal
from src.ideals.local import LocalMultiplicity, local_multiplicity


def milnor(
    target: Union[FoliationP3, PolyForm, PolyVectorField],
    point: Sequence,
    settings: Optional[FoliaSettings] = None,
) -> LocalMultiplicity:
    """
    Multiplicité locale de l'idéal des coefficients.

    Un feuilletage de P^3 est restreint à la carte de la première coordonnée non
    nulle du point ; une forme affine ou un champ de vecteurs sont pris tels quels.
    """
    if isinstance(target, FoliationP3):
        chart = first_nonzero_chart(point)
        alpha = chart_restrict(target, chart)
        affine_point = chart_point(point, chart)
        result = local_multiplicity(Ideal(alpha.ring, alpha.coefficients()), affine_point, settings)
        return LocalMultiplicity(tuple(to_rat(v) for v in point), result.value)
    if isinstance(target, PolyVectorField):
        return local_multiplicity(Ideal(target.ring, target.components), point, settings)
    return local_multiplicity(Ideal(target.ring, target.coefficients()), point, settings)


def rot_milnor(alpha: PolyForm, point: Sequence, settings: Optional[FoliaSettings] = None) -> LocalMultiplicity:
    """mu(rot omega, p) pour une forme affine en 3 variables."""
    return milnor(rot(alpha), point, settings)
