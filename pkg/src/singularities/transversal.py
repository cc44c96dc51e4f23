# src/singularities/transversal.py
"""
Modèle transverse d'un feuilletage le long d'une composante : restriction de la
forme au 2-plan de coordonnées passant par un point lisse, transverse à la tangente.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence, Tuple

from src.algebra.linear import nullspace
from src.algebra.polynomial import MPoly, PolyRing
from src.algebra.rational import format_rat, to_rat
from src.errors import ParametrizationMismatch
from src.forms.foliation import FoliationP3, chart_point, chart_restrict, first_nonzero_chart
from src.singularities.scheme import CurveComponent

logger = logging.getLogger(__name__)

MODEL_RING = PolyRing(("a", "b"))


@dataclass(frozen=True)
class LocalModel2D:
    """
    Germe plan omega|_U = P db − Q da, de champ dual X = P ∂a + Q ∂b.

    Attributs:
        P, Q (MPoly): Polynômes en 2 variables, nuls au point de base.
        base (tuple): Point de base (l'origine par défaut).
        label (str): Description (composante, point, plan).
    """

    P: MPoly
    Q: MPoly
    base: Tuple[Fraction, Fraction] = (Fraction(0), Fraction(0))
    label: str = ""

    def __post_init__(self):
        if self.P.ring.nvars != 2 or self.Q.ring != self.P.ring:
            raise ValueError("Un modèle local exige P et Q dans un même anneau à 2 variables.")
        object.__setattr__(self, "base", tuple(to_rat(v) for v in self.base))
        if self.P.evaluate(self.base) != 0 or self.Q.evaluate(self.base) != 0:
            raise ValueError(f"(P, Q) ne s'annule pas au point de base {self.base}.")

    def centered(self) -> "LocalModel2D":
        """Le même modèle, point de base ramené à l'origine."""
        if all(v == 0 for v in self.base):
            return self
        return LocalModel2D(self.P.translate(self.base), self.Q.translate(self.base), label=self.label)

    def jacobian(self):
        """Matrice de (P, Q) au point de base."""
        return [
            [self.P.diff(0).evaluate(self.base), self.P.diff(1).evaluate(self.base)],
            [self.Q.diff(0).evaluate(self.base), self.Q.diff(1).evaluate(self.base)],
        ]

    def divergence(self) -> MPoly:
        """tr DX = ∂P/∂a + ∂Q/∂b (polynôme)."""
        return self.P.diff(0) + self.Q.diff(1)


def _affine_generators(component: CurveComponent, chart: int, ring: PolyRing):
    keep = [i for i in range(4) if i != chart]
    images = [ring.one() if i == chart else ring.var(keep.index(i)) for i in range(4)]
    return [g.substitute(images) for g in component.ideal.generators]


def transversal_model(
    F: FoliationP3, component: CurveComponent, point: Optional[Sequence] = None
) -> LocalModel2D:
    """
    Paramètres:
        F (FoliationP3): Le feuilletage.
        component (CurveComponent): Composante courbe du lieu singulier.
        point (list): Point lisse de la composante (par défaut son point déclaré).

    Retourne:
        LocalModel2D: P = coefficient de db, Q = −coefficient de da, dans le premier
        plan de coordonnées (x_i, x_j) dont la direction restante x_k n'est pas
        orthogonale à la tangente.

    Lève:
        ParametrizationMismatch: pas de point, point hors de la composante ou singulier.
    """
    if point is None:
        point = component.point
    if point is None:
        raise ParametrizationMismatch(
            f"Composante {component.name} : aucun point déclaré pour le modèle transverse."
        )
    point = [to_rat(v) for v in point]
    for g in component.ideal.generators:
        if g.evaluate(point) != 0:
            raise ParametrizationMismatch(
                f"Composante {component.name} : le point {point} n'annule pas {g}."
            )
    chart = first_nonzero_chart(point)
    alpha = chart_restrict(F, chart)
    ring = alpha.ring
    q = chart_point(point, chart)

    gens = _affine_generators(component, chart, ring)
    rows = [[g.diff(j).evaluate(q) for j in range(3)] for g in gens]
    kernel = nullspace(rows, 3)
    if len(kernel) != 1:
        raise ParametrizationMismatch(
            f"Composante {component.name} : le point {point} n'est pas un point lisse "
            f"d'une courbe (espace tangent de dimension {len(kernel)})."
        )
    tangent = kernel[0]
    i, j = next(
        (i, j)
        for i in range(3)
        for j in range(i + 1, 3)
        if tangent[3 - i - j] != 0
    )

    moved = alpha.translate(q)
    images = [MODEL_RING.zero()] * 3
    images[i] = MODEL_RING.var(0)
    images[j] = MODEL_RING.var(1)
    P = moved.coefficient((j,)).substitute(images)
    Q = -moved.coefficient((i,)).substitute(images)
    label = f"{component.name} en [{':'.join(format_rat(v) for v in point)}], plan ({ring.names[i]}, {ring.names[j]})"
    logger.debug("Modèle transverse %s : P = %s, Q = %s.", label, P, Q)
    return LocalModel2D(P, Q, label=label)
