# src/forms/foliation.py
"""
Feuilletages de codimension un de P^3 : validation d'une 1-forme homogène
(condition d'Euler, intégrabilité, absence de partie de codimension 1), cartes
affines et changements de coordonnées.
"""
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import List, Optional, Sequence

from src.algebra.linear import determinant, inverse, mat_vec
from src.algebra.polynomial import MPoly, PolyRing, sympy_gcd
from src.algebra.rational import to_rat
from src.errors import (
    ArityMismatch,
    CodimensionOnePart,
    DegreeMismatch,
    EmptyInput,
    EulerConditionFailed,
    NonHomogeneous,
    NotIntegrable,
    SingularSystem,
)
from src.forms.exterior import (
    PolyForm,
    PolyVectorField,
    contract,
    ext_d,
    integrability_defect,
    pullback,
)

logger = logging.getLogger(__name__)

P3_RING = PolyRing(("x0", "x1", "x2", "x3"))


@dataclass(frozen=True)
class FoliationP3:
    """
    Feuilletage de degré d de P^3 : omega est une 1-forme en 4 variables dont les
    coefficients sont homogènes de degré d + 1, avec i_R omega = 0 et omega ∧ d omega = 0.

    Ne pas construire directement : passer par validate_foliation.
    """

    omega: PolyForm
    degree: int

    @property
    def ring(self) -> PolyRing:
        return self.omega.ring

    @property
    def coefficients(self) -> List[MPoly]:
        return self.omega.coefficients()

    @cached_property
    def d_omega(self) -> PolyForm:
        return ext_d(self.omega)

    def d_omega_coefficients(self) -> List[MPoly]:
        """Les six coefficients de d omega, clés (i, j) en ordre lexicographique."""
        keys = [(i, j) for i in range(4) for j in range(i + 1, 4)]
        return [self.d_omega.coefficient(k) for k in keys]

    def render(self) -> str:
        return self.omega.render()


def validate_foliation(omega: PolyForm, d: int) -> FoliationP3:
    """
    Vérifie qu'une 1-forme définit un feuilletage de degré d de P^3.

    Paramètres:
        omega (PolyForm): 1-forme en 4 variables homogènes.
        d (int): Degré annoncé (coefficients de degré d + 1).

    Retourne:
        FoliationP3: la valeur validée.

    Lève:
        NonHomogeneous, DegreeMismatch, EulerConditionFailed, NotIntegrable,
        CodimensionOnePart.
    """
    if omega.grade != 1 or omega.ring.nvars != 4:
        raise ArityMismatch(
            f"Un feuilletage de P^3 est une 1-forme en 4 variables (reçu : degré {omega.grade}, "
            f"{omega.ring.nvars} variables)."
        )
    if d < 0:
        raise DegreeMismatch(f"Degré de feuilletage négatif : {d}")
    if omega.is_zero():
        raise EmptyInput("La forme nulle ne définit pas de feuilletage.")
    for key, coeff in sorted(omega.components.items()):
        if not coeff.is_homogeneous():
            raise NonHomogeneous(
                f"Le coefficient de d{omega.ring.names[key[0]]} ({coeff}) n'est pas homogène."
            )
        if coeff.degree() != d + 1:
            raise DegreeMismatch(
                f"Le coefficient de d{omega.ring.names[key[0]]} est de degré {coeff.degree()}, "
                f"attendu {d + 1} pour un feuilletage de degré {d}."
            )

    euler = contract(PolyVectorField.radial(omega.ring), omega).coefficient(())
    if not euler.is_zero():
        raise EulerConditionFailed(f"i_R omega = {euler} n'est pas nul.")

    defect = integrability_defect(omega)
    if not defect.is_zero():
        key = min(defect.components)
        names = "^".join("d" + omega.ring.names[i] for i in key)
        raise NotIntegrable(
            f"omega ∧ d omega ≠ 0 (coefficient de {names} : {defect.components[key]})."
        )

    common = sympy_gcd(omega.components.values())
    if not common.is_constant():
        raise CodimensionOnePart(
            f"Les coefficients ont le facteur commun {common} : le lieu singulier a une "
            f"partie de codimension 1."
        )
    logger.debug("Feuilletage de degré %d validé.", d)
    return FoliationP3(omega, d)


def chart_restrict(F, chart: int) -> PolyForm:
    """
    Restriction à la carte x_chart = 1 : 1-forme en les 3 autres variables.
    """
    omega = F.omega if isinstance(F, FoliationP3) else F
    ring = omega.ring
    if not 0 <= chart < ring.nvars:
        raise ArityMismatch(f"Carte {chart} hors de 0..{ring.nvars - 1}.")
    keep = [i for i in range(ring.nvars) if i != chart]
    affine = PolyRing(tuple(ring.names[i] for i in keep))
    images = []
    for i in range(ring.nvars):
        images.append(affine.one() if i == chart else affine.var(keep.index(i)))
    comps = {}
    for key, c in omega.components.items():
        if chart in key:
            continue
        new_key = tuple(keep.index(i) for i in key)
        comps[new_key] = c.substitute(images)
    return PolyForm(affine, omega.grade, comps)


def chart_point(point: Sequence, chart: int) -> List:
    """Coordonnées affines d'un point projectif dans la carte x_chart = 1."""
    point = [to_rat(v) for v in point]
    if point[chart] == 0:
        raise ValueError(f"Le point {point} n'est pas dans la carte x{chart} = 1.")
    return [v / point[chart] for i, v in enumerate(point) if i != chart]


def first_nonzero_chart(point: Sequence) -> int:
    for i, v in enumerate(point):
        if to_rat(v) != 0:
            return i
    raise ValueError("Le point nul n'est pas un point projectif.")


def rehomogenize(alpha: PolyForm, chart: int, target: Optional[PolyRing] = None) -> PolyForm:
    """
    Inverse de chart_restrict : Omega = x_c·Σ A_i dx_i − (Σ x_i A_i) dx_c, où les A_i
    sont les coefficients de alpha homogénéisés au degré maximal.
    """
    if alpha.grade != 1:
        raise ValueError("rehomogenize exige une 1-forme.")
    n = alpha.ring.nvars + 1
    if target is None:
        names = list(alpha.ring.names)
        names.insert(chart, _fresh_name(alpha.ring.names, "x"))
        target = PolyRing(tuple(names))
    keep = [i for i in range(n) if i != chart]
    coeffs = alpha.coefficients()
    top = max((c.degree() for c in coeffs if not c.is_zero()), default=0)
    homog = [c.homogenize(target, keep, chart, top) for c in coeffs]
    xc = target.var(chart)
    comps = {}
    contraction = target.zero()
    for i, a in zip(keep, homog):
        comps[(i,)] = xc * a
        contraction = contraction + target.var(i) * a
    comps[(chart,)] = -contraction
    return PolyForm(target, 1, comps)


def _fresh_name(names: Sequence[str], base: str) -> str:
    k = 0
    while f"{base}{k}" in names:
        k += 1
    return f"{base}{k}"


def linear_change(F: FoliationP3, matrix: Sequence[Sequence]) -> FoliationP3:
    """Tiré en arrière par x = M·y (M inversible) ; le degré est conservé."""
    matrix = [[to_rat(v) for v in row] for row in matrix]
    if len(matrix) != 4 or any(len(r) != 4 for r in matrix):
        raise ArityMismatch("Un changement de coordonnées de P^3 est une matrice 4x4.")
    if determinant(matrix) == 0:
        raise SingularSystem("La matrice du changement de coordonnées est singulière.")
    ring = F.ring
    images = [
        sum((ring.var(j) * matrix[i][j] for j in range(4)), ring.zero()) for i in range(4)
    ]
    return validate_foliation(pullback(F.omega, images), F.degree)


def transform_point(matrix: Sequence[Sequence], point: Sequence) -> List:
    """Image y = M^-1 x d'un point : le point p de F devient M^-1 p pour linear_change(F, M)."""
    return mat_vec(inverse(matrix), point)


def nonkupka_normal_form(ring: PolyRing, g1: MPoly, g2: MPoly) -> PolyForm:
    """
    x dx + g1(y)(1 + x g2(y)) dy dans l'anneau affine ring (x, y en tête).

    Les variables au-delà de la deuxième n'apparaissent pas.
    """
    x = ring.var(0)
    return PolyForm(ring, 1, {(0,): x, (1,): g1 * (ring.one() + x * g2)})


def euler_identity_holds(F: FoliationP3) -> bool:
    """i_R d omega = (d + 2) omega."""
    lhs = contract(PolyVectorField.radial(F.ring), F.d_omega)
    return lhs == F.omega.scale(F.degree + 2)
