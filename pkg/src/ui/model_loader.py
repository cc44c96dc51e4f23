# src/ui/model_loader.py
"""Construit les objets mathématiques (feuilletage, composantes, germes) d'un document .fol."""
import logging
from dataclasses import dataclass
from typing import Optional, Tuple

from core.settings import FoliaSettings
from src.algebra.binary_forms import BINARY_RING, BinForm
from src.algebra.polynomial import MPoly, PolyRing
from src.errors import DegreeMismatch, EmptyInput, UnknownComponent
from src.forms.exterior import PolyForm
from src.forms.families import build_logarithmic, build_pencil
from src.forms.foliation import FoliationP3, validate_foliation
from src.ideals.ideal import Ideal
from src.singularities.scheme import CurveComponent, make_component
from src.ui.form_parser import (
    ComponentSpec,
    FormSpec,
    evaluate_constant,
    evaluate_one_form,
    evaluate_polynomial,
    parse_form,
)

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class LoadedModel:
    """
    Document .fol interprété.

    Un document à 4 variables décrit un feuilletage de P^3 (foliation renseigné) ;
    sinon omega est une 1-forme affine.
    """

    spec: FormSpec
    ring: PolyRing
    omega: Optional[PolyForm]
    foliation: Optional[FoliationP3]
    components: Tuple[CurveComponent, ...]
    eta: Optional[PolyForm]
    map_images: Optional[Tuple[MPoly, ...]]
    source: str = ""

    @property
    def projective(self) -> bool:
        return self.foliation is not None

    @property
    def expects(self) -> Tuple[Tuple[str, str], ...]:
        return self.spec.expects

    def component(self, name: str) -> CurveComponent:
        for c in self.components:
            if c.name == name:
                return c
        known = ", ".join(c.name for c in self.components) or "aucune"
        raise UnknownComponent(f"Composante inconnue : {name} (déclarées : {known}).")

    def require_omega(self) -> PolyForm:
        if self.omega is None:
            raise EmptyInput(f"{self.source or 'Le document'} ne définit pas de 1-forme.")
        return self.omega

    def require_foliation(self) -> FoliationP3:
        if self.foliation is None:
            raise EmptyInput(
                f"{self.source or 'Le document'} ne définit pas de feuilletage de P^3 "
                "(4 variables requises)."
            )
        return self.foliation


def _build_omega(spec: FormSpec, ring: PolyRing) -> Tuple[Optional[PolyForm], Optional[FoliationP3]]:
    if spec.log is not None:
        hyps, weights = spec.log
        F = build_logarithmic(
            [evaluate_polynomial(h, ring) for h in hyps], [evaluate_constant(w) for w in weights]
        )
        return F.omega, F
    if spec.pencil is not None:
        f, g, p, q = spec.pencil
        F = build_pencil(
            evaluate_polynomial(f, ring),
            evaluate_polynomial(g, ring),
            int(evaluate_constant(p)),
            int(evaluate_constant(q)),
        )
        return F.omega, F
    if spec.form is not None:
        return evaluate_one_form(spec.form, ring), None
    return None, None


def _build_component(c: ComponentSpec, ring: PolyRing, projective: bool, settings) -> CurveComponent:
    ideal = Ideal(ring, [evaluate_polynomial(g, ring) for g in c.ideal])
    param = None
    if c.param is not None:
        param = [BinForm(evaluate_polynomial(p, BINARY_RING)) for p in c.param]
    point = [evaluate_constant(v) for v in c.point] if c.point is not None else None
    return make_component(
        c.name,
        ideal,
        param=param,
        birational=c.birational,
        embedded=c.embedded,
        point=point,
        projective=projective,
        settings=settings,
    )


def build_model(spec: FormSpec, settings: Optional[FoliaSettings] = None, source: str = "") -> LoadedModel:
    """
    Paramètres:
        spec (FormSpec): Document analysé.
        source (str): Provenance (pour les messages).

    Retourne:
        LoadedModel: forme validée (feuilletage de P^3 si 4 variables), composantes vérifiées.

    Lève:
        FoliaError: toute erreur de validation des constructeurs et des composantes.
    """
    ring = PolyRing(spec.variables)
    projective = ring.nvars == 4
    omega, foliation = _build_omega(spec, ring)
    if projective and omega is not None and foliation is None:
        degree = spec.degree
        if degree is None:
            if omega.is_zero():
                raise EmptyInput("La forme nulle ne définit pas de feuilletage.")
            degree = omega.degree() - 1
        foliation = validate_foliation(omega, degree)
    elif foliation is not None and spec.degree is not None and spec.degree != foliation.degree:
        raise DegreeMismatch(
            f"Degré annoncé {spec.degree}, mais le constructeur donne un feuilletage de degré "
            f"{foliation.degree}."
        )
    components = tuple(_build_component(c, ring, projective, settings) for c in spec.components)
    eta = None
    if spec.eta is not None:
        names, body = spec.eta
        eta = evaluate_one_form(body, PolyRing(names))
    images = None
    if spec.map is not None:
        images = tuple(evaluate_polynomial(m, ring) for m in spec.map)
    logger.debug("Document %s : %d variables, %d composantes.", source, ring.nvars, len(components))
    return LoadedModel(spec, ring, omega, foliation, components, eta, images, source)


def load_model(text: str, settings: Optional[FoliaSettings] = None, source: str = "") -> LoadedModel:
    return build_model(parse_form(text), settings, source)
