# src/singularities/scheme.py
"""
Schéma singulier d'un feuilletage : idéal des coefficients saturé, données de
Hilbert, composantes déclarées par l'utilisateur (vérifiées, jamais calculées).
"""
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.settings import FoliaSettings, resolve_settings
from src.algebra.binary_forms import BinForm
from src.algebra.polynomial import MPoly
from src.algebra.rational import to_rat
from src.errors import (
    ComponentContainment,
    ParametrizationMismatch,
    ResidualNotZeroDimensional,
    UnknownComponent,
)
from src.forms.exterior import PolyForm
from src.forms.foliation import FoliationP3
from src.ideals.hilbert import HilbertData, hilbert_data, zero_dim_degree
from src.ideals.ideal import Ideal
from src.ideals.saturation import intersect_all, saturate_irrelevant, saturation

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CurveComponent:
    """
    Composante déclarée du lieu singulier.

    Attributs:
        name (str): Nom donné dans le fichier d'entrée.
        ideal (Ideal): Idéal (homogène en projectif) de la composante.
        param (tuple[BinForm] | None): Paramétrage [s:t] -> P^3 de degré commun e.
        hilbert (HilbertData | None): Données de Hilbert (projectif seulement).
        birational (bool): Paramétrage déclaré birationnel (e = deg Z vérifié).
        embedded (bool): Composante immergée (point) plutôt que courbe.
        point (tuple | None): Point lisse déclaré pour le modèle transverse.
    """

    name: str
    ideal: Ideal
    param: Optional[Tuple[BinForm, ...]] = None
    hilbert: Optional[HilbertData] = None
    birational: bool = False
    embedded: bool = False
    point: Optional[Tuple[Fraction, ...]] = None

    @property
    def param_degree(self) -> Optional[int]:
        if not self.param:
            return None
        return max(f.degree for f in self.param if not f.is_zero())

    def param_images(self) -> List[MPoly]:
        return [f.poly for f in self.param]

    def evaluate_param(self, s, t) -> Tuple[Fraction, ...]:
        """Image du paramètre [s:t], normalisée (première coordonnée non nulle = 1)."""
        values = [f.poly.evaluate([s, t]) for f in self.param]
        return normalize_point(values)


def normalize_point(values: Sequence) -> Tuple[Fraction, ...]:
    values = [to_rat(v) for v in values]
    pivot = next((v for v in values if v != 0), None)
    if pivot is None:
        raise ValueError("Le point nul n'est pas un point projectif.")
    return tuple(v / pivot for v in values)


def make_component(
    name: str,
    ideal: Ideal,
    param: Optional[Sequence[BinForm]] = None,
    birational: bool = False,
    embedded: bool = False,
    point: Optional[Sequence] = None,
    projective: bool = True,
    settings: Optional[FoliaSettings] = None,
) -> CurveComponent:
    """
    Construit et vérifie une composante : le paramétrage annule chaque générateur,
    et un paramétrage birationnel a le degré de la courbe.
    """
    param_t = tuple(param) if param else None
    if param_t is not None:
        if len(param_t) != ideal.ring.nvars:
            raise ParametrizationMismatch(
                f"Composante {name} : {len(param_t)} formes pour {ideal.ring.nvars} coordonnées."
            )
        degrees = {f.degree for f in param_t if not f.is_zero()}
        if len(degrees) != 1:
            raise ParametrizationMismatch(
                f"Composante {name} : les formes du paramétrage n'ont pas un degré commun."
            )
        images = [f.poly for f in param_t]
        for g in ideal.generators:
            if not g.substitute(images).is_zero():
                raise ParametrizationMismatch(
                    f"Composante {name} : le générateur {g} ne s'annule pas sur le paramétrage."
                )
    hilbert = None
    if projective:
        hilbert = hilbert_data(ideal, saturate=True, settings=settings)
        if birational and param_t is not None:
            e = max(f.degree for f in param_t if not f.is_zero())
            if e != hilbert.degree:
                raise ParametrizationMismatch(
                    f"Composante {name} : paramétrage de degré {e} déclaré birationnel, "
                    f"mais la courbe est de degré {hilbert.degree}."
                )
    pt = tuple(to_rat(v) for v in point) if point is not None else None
    if pt is not None:
        for g in ideal.generators:
            if g.evaluate(pt) != 0:
                raise ParametrizationMismatch(
                    f"Composante {name} : le point déclaré n'annule pas {g}."
                )
    return CurveComponent(name, ideal, param_t, hilbert, birational, embedded, pt)


@dataclass(frozen=True)
class SingularScheme:
    """
    Schéma singulier saturé et composantes vérifiées.

    decomposition_holds vaut None sans composante déclarée, sinon indique si l'idéal
    est l'intersection des composantes déclarées.
    curve_hilbert porte degré et genre de la partie courbe déclarée (projectif).
    """

    ideal: Ideal
    hilbert: Optional[HilbertData]
    components: Tuple[CurveComponent, ...] = field(default_factory=tuple)
    decomposition_holds: Optional[bool] = None
    residual_zero_dimensional: Optional[bool] = None
    curve_hilbert: Optional[HilbertData] = None

    def component(self, name: str) -> CurveComponent:
        for c in self.components:
            if c.name == name:
                return c
        known = ", ".join(c.name for c in self.components) or "aucune"
        raise UnknownComponent(f"Composante inconnue : {name} (déclarées : {known}).")

    def curve_components(self) -> List[CurveComponent]:
        return [c for c in self.components if not c.embedded]


def _check_containment(generators: Sequence[MPoly], component: CurveComponent):
    missing = component.ideal.first_non_member(generators)
    if missing is not None:
        raise ComponentContainment(
            f"La composante {component.name} ne contient pas le schéma singulier : "
            f"le générateur {missing} ne s'y annule pas."
        )


def _decomposition(ideal: Ideal, components: Sequence[CurveComponent], settings) -> Optional[bool]:
    if not components:
        return None
    meet = intersect_all([c.ideal for c in components], settings)
    return meet == ideal


def curve_part(components: Sequence[CurveComponent], settings: Optional[FoliaSettings] = None) -> Optional[Ideal]:
    curves = [c for c in components if not c.embedded]
    if not curves:
        return None
    return intersect_all([c.ideal for c in curves], settings)


def singular_scheme(
    F: FoliationP3,
    components: Sequence[CurveComponent] = (),
    settings: Optional[FoliaSettings] = None,
) -> SingularScheme:
    """
    Paramètres:
        F (FoliationP3): Feuilletage validé.
        components (list[CurveComponent]): Composantes déclarées.

    Retourne:
        SingularScheme: idéal saturé par (x0, ..., x3), Hilbert, vérifications.

    Lève:
        ComponentContainment: une composante ne contient pas le schéma.
    """
    settings = resolve_settings(settings)
    coeffs = F.coefficients
    ideal = saturate_irrelevant(Ideal(F.ring, coeffs), settings)
    hilbert = hilbert_data(ideal, settings=settings)
    logger.debug("Schéma singulier : dim %d, degré %d.", hilbert.dim_proj, hilbert.degree)
    for c in components:
        _check_containment(coeffs, c)
    decomposition = _decomposition(ideal, components, settings)
    residual_ok = None
    curve_hilbert = None
    curves = curve_part(components, settings)
    if curves is not None:
        curve_hilbert = hilbert_data(curves, saturate=True, settings=settings)
        residual = saturate_irrelevant(saturation(ideal, curves, settings=settings), settings)
        residual_ok = residual.is_unit() or hilbert_data(residual, settings=settings).dim_proj <= 0
        if not residual_ok:
            logger.warning("D'autres composantes de dimension 1 existent hors des composantes déclarées.")
    return SingularScheme(ideal, hilbert, tuple(components), decomposition, residual_ok, curve_hilbert)


def affine_singular_scheme(
    alpha: PolyForm,
    components: Sequence[CurveComponent] = (),
    settings: Optional[FoliaSettings] = None,
) -> SingularScheme:
    """Version affine : idéal des coefficients, inclusions et décomposition (courbes ∩ points immergés)."""
    settings = resolve_settings(settings)
    coeffs = alpha.coefficients()
    ideal = Ideal(alpha.ring, coeffs)
    for c in components:
        _check_containment(coeffs, c)
    decomposition = _decomposition(ideal, components, settings)
    return SingularScheme(ideal, None, tuple(components), decomposition, None)


def isolated_count(F: FoliationP3, curve_ideal: Ideal, settings: Optional[FoliaSettings] = None) -> int:
    """
    ℓ(S_3) : longueur de la partie de dimension zéro, obtenue en saturant l'idéal du
    schéma singulier par la partie courbe déclarée.

    Lève:
        ComponentContainment: la partie courbe ne contient pas le schéma.
        ResidualNotZeroDimensional: le résidu a encore une composante de dimension 1.
    """
    settings = resolve_settings(settings)
    ideal = saturate_irrelevant(Ideal(F.ring, F.coefficients), settings)
    missing = curve_ideal.first_non_member(ideal.generators)
    if missing is not None:
        raise ComponentContainment(
            f"La partie courbe ne contient pas le schéma singulier (générateur {missing})."
        )
    residual = saturation(ideal, curve_ideal, settings=settings)
    residual = saturate_irrelevant(residual, settings)
    if residual.is_unit():
        return 0
    data = hilbert_data(residual, settings=settings)
    if data.dim_proj > 0:
        raise ResidualNotZeroDimensional(
            f"Le résidu {residual} est de dimension {data.dim_proj} : la partie courbe déclarée "
            f"n'épuise pas les composantes de dimension 1."
        )
    logger.debug("Partie isolée de longueur %d.", data.degree)
    return zero_dim_degree(residual, projective=True, settings=settings)


def sample_component_points(component: CurveComponent, count: int = 20) -> List[Tuple[Fraction, ...]]:
    """Points rationnels de la composante : images de [k:1] et [1:0] par le paramétrage."""
    if not component.param:
        raise ParametrizationMismatch(f"La composante {component.name} n'a pas de paramétrage.")
    points = []
    seen = set()
    candidates = [(Fraction(1), Fraction(0))]
    k = 0
    while len(candidates) < 4 * count:
        candidates.append((Fraction(k), Fraction(1)))
        if k:
            candidates.append((Fraction(-k), Fraction(1)))
            candidates.append((Fraction(1), Fraction(k + 1)))
        k += 1
    for s, t in candidates:
        values = [f.poly.evaluate([s, t]) for f in component.param]
        if not any(values):
            continue
        pt = normalize_point(values)
        if pt not in seen:
            seen.add(pt)
            points.append(pt)
        if len(points) == count:
            break
    return points

