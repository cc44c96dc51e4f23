# src/singularities/divisors.py
"""
Diviseur non-Kupka d'une composante paramétrée et bilan de la formule de degré
deg(K_F|Z) − deg(K_Z).
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from src.algebra.binary_forms import BinForm, BinaryFactor, factor_binary, gcd_binary
from src.errors import ComponentEntirelyNonKupka, ParametrizationMismatch, UndefinedGenus
from src.forms.foliation import FoliationP3
from src.ideals.hilbert import HilbertData
from src.singularities.scheme import CurveComponent, normalize_point

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class NKPoint:
    """Point (ou facteur irréductible) du diviseur, avec son ordre."""

    factor: BinaryFactor
    order: int
    image: Optional[Tuple[Fraction, ...]]

    @property
    def label(self) -> str:
        return self.factor.label()

    @property
    def degree(self) -> int:
        return self.factor.form.degree


@dataclass(frozen=True)
class NKDivisor:
    component: CurveComponent
    points: Tuple[NKPoint, ...]
    total_degree: int
    gcd: BinForm

    def render(self) -> str:
        body = ", ".join(f"{p.label}:{p.order}" for p in self.points)
        return "{" + body + "}, total " + str(self.total_degree)


def pulled_back_coefficients(F: FoliationP3, component: CurveComponent) -> List[BinForm]:
    """Les six coefficients de d omega tirés en arrière le long du paramétrage."""
    if not component.param:
        raise ParametrizationMismatch(f"La composante {component.name} n'a pas de paramétrage.")
    images = component.param_images()
    return [BinForm(b.substitute(images)) for b in F.d_omega_coefficients()]


def nk_divisor(F: FoliationP3, component: CurveComponent) -> NKDivisor:
    """
    Paramètres:
        F (FoliationP3): Le feuilletage.
        component (CurveComponent): Composante munie d'un paramétrage.

    Retourne:
        NKDivisor: facteurs du pgcd des tirés en arrière non nuls, avec multiplicités.

    Lève:
        ComponentEntirelyNonKupka: les six tirés en arrière sont identiquement nuls.
    """
    pulled = [f for f in pulled_back_coefficients(F, component) if not f.is_zero()]
    if not pulled:
        raise ComponentEntirelyNonKupka(
            f"d omega s'annule identiquement sur la composante {component.name}."
        )
    g = gcd_binary(pulled[0], rest=pulled[1:])
    if g.degree == 0:
        return NKDivisor(component, (), 0, g)
    points = []
    for factor in factor_binary(g):
        image = None
        if factor.root is not None:
            image = component.evaluate_param(*factor.root)
        points.append(NKPoint(factor, factor.multiplicity, image))
    total = sum(p.order * p.degree for p in points)
    logger.debug("Diviseur non-Kupka de %s : %s.", component.name, g)
    return NKDivisor(component, tuple(points), total, g)


def nk_divisor_or_none(F: FoliationP3, component: CurveComponent) -> Optional[NKDivisor]:
    """Comme nk_divisor, mais None pour une composante entièrement non-Kupka."""
    try:
        return nk_divisor(F, component)
    except ComponentEntirelyNonKupka as err:
        logger.info("%s", err)
        return None


def distinct_points(divisors: Sequence[NKDivisor]) -> int:
    """
    Nombre de points non-Kupka distincts : images rationnelles identifiées entre
    branches, facteurs non linéaires comptés par leur degré.
    """
    rational = set()
    other = 0
    for div in divisors:
        for p in div.points:
            if p.image is not None:
                rational.add(normalize_point(p.image))
            else:
                other += p.degree
    return len(rational) + other


@dataclass(frozen=True)
class NKCountReport:
    """
    Bilan de la formule de degré sur une courbe Z.

    Attributs:
        deg_KF_restricted (int): (d − 2)·deg Z.
        deg_KZ (int): 2 p_a − 2.
        stated_difference (int): deg_KF_restricted − deg_KZ, l'orientation énoncée.
        example_orientation (int): deg_KZ − deg_KF_restricted, celle des exemples.
        observed_total (int | None): Somme des degrés des diviseurs par branche,
            seulement si les composantes paramétrées recouvrent Z.
        distinct_points (int | None): Points non-Kupka distincts sur la courbe (même condition).
        nk_total (int | None): ℓ(S_3) + points distincts, si ℓ(S_3) est connu et
            qu'aucune composante n'est entièrement non-Kupka.
        entirely_non_kupka (tuple[str]): Composantes où d omega s'annule identiquement,
            exclues des totaux.
    """

    degree: int
    curve_degree: int
    p_a: int
    deg_KF_restricted: int
    deg_KZ: int
    stated_difference: int
    example_orientation: int
    observed_total: Optional[int] = None
    distinct_points: Optional[int] = None
    nk_total: Optional[int] = None
    entirely_non_kupka: Tuple[str, ...] = ()


def nk_count(
    F: FoliationP3,
    hilbert: HilbertData,
    divisors: Sequence[NKDivisor] = (),
    isolated: Optional[int] = None,
    covers_curve: bool = True,
    entirely_non_kupka: Sequence[str] = (),
) -> NKCountReport:
    """
    Confronte (d − 2)·deg Z et 2 p_a − 2 sans les réconcilier.

    Paramètres:
        divisors (list[NKDivisor]): Diviseurs des composantes paramétrées retenues.
        isolated (int | None): ℓ(S_3), si connu.
        covers_curve (bool): Les composantes retenues forment toute la partie courbe Z.
        entirely_non_kupka (list[str]): Composantes retenues sans diviseur (d omega ≡ 0).

    Lève:
        UndefinedGenus: Z n'est pas une courbe (p_a indéfini).
    """
    if hilbert.dim_proj != 1 or hilbert.p_a is None:
        raise UndefinedGenus(
            f"Genre arithmétique indéfini : le schéma est de dimension {hilbert.dim_proj}."
        )
    kf = (F.degree - 2) * hilbert.degree
    kz = 2 * hilbert.p_a - 2
    observed = distinct = total = None
    if covers_curve and divisors:
        observed = sum(d.total_degree for d in divisors)
        distinct = distinct_points(divisors)
        if isolated is not None and not entirely_non_kupka:
            total = isolated + distinct
    elif divisors:
        logger.debug("Composantes partielles : totaux observés non calculés.")
    return NKCountReport(
        degree=F.degree,
        curve_degree=hilbert.degree,
        p_a=hilbert.p_a,
        deg_KF_restricted=kf,
        deg_KZ=kz,
        stated_difference=kf - kz,
        example_orientation=kz - kf,
        observed_total=observed,
        distinct_points=distinct,
        nk_total=total,
        entirely_non_kupka=tuple(entirely_non_kupka),
    )
