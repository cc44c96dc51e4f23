# src/singularities/koszul.py
"""
Générateurs du faisceau tangent d'un germe en 3 variables : X = rot(omega) et S avec
i_X i_S dV ≡ omega, via la 2-forme theta solution de i_X theta = omega.
"""
import logging
from dataclasses import dataclass
from typing import Dict, List, Optional, Tuple

from core.settings import FoliaSettings, resolve_settings
from src.algebra.linear import solve_linear
from src.algebra.polynomial import MPoly
from src.errors import NotIntegrable, NotIsolated, UnsolvableSystem
from src.forms.exterior import (
    PolyForm,
    PolyVectorField,
    apply_one_form,
    contract,
    rot,
    two_form_to_field,
)
from src.ideals.ideal import Ideal
from src.ideals.local import LocalMultiplicity, local_multiplicity_at_origin
from src.singularities.first_integrals import monomials_of_degree

logger = logging.getLogger(__name__)

_THETA_KEYS = ((0, 1), (0, 2), (1, 2))


@dataclass(frozen=True)
class KoszulPair:
    """
    (X, S) avec omega(X) = 0 exactement et omega − i_X i_S dV sans terme de degré <= cap.
    """

    X: PolyVectorField
    S: PolyVectorField
    theta: PolyForm
    cap: int
    rot_milnor: LocalMultiplicity
    residual: PolyForm

    @property
    def certified(self) -> bool:
        return self.residual.is_zero()


def _solve_theta(X: PolyVectorField, omega: PolyForm, degree: int, theta_degree: int) -> Optional[PolyForm]:
    ring = omega.ring
    n = ring.nvars
    unknowns: List[Tuple[Tuple[int, int], tuple]] = []
    for key in _THETA_KEYS:
        for k in range(theta_degree + 1):
            unknowns.extend((key, mu) for mu in monomials_of_degree(n, k))
    equations: Dict[Tuple[int, tuple], int] = {}
    for i in range(n):
        for k in range(degree + 1):
            for nu in monomials_of_degree(n, k):
                equations[(i, nu)] = len(equations)
    rows = [[0] * len(unknowns) for _ in equations]
    for col, (key, mu) in enumerate(unknowns):
        basis = PolyForm(ring, 2, {key: ring.monomial(mu)})
        image = contract(X, basis)
        for (i,), c in image.components.items():
            for nu, v in c.truncate(degree).terms.items():
                rows[equations[(i, nu)]][col] += v
    rhs = [0] * len(equations)
    for (i,), c in omega.components.items():
        for nu, v in c.truncate(degree).terms.items():
            rhs[equations[(i, nu)]] = v
    solution = solve_linear(rows, rhs)
    if solution is None:
        return None
    comps: Dict[Tuple[int, int], MPoly] = {key: ring.zero() for key in _THETA_KEYS}
    for (key, mu), value in zip(unknowns, solution):
        if value:
            comps[key] = comps[key] + ring.monomial(mu, value)
    return PolyForm(ring, 2, comps)


def koszul_generators(
    omega: PolyForm, cap: Optional[int] = None, settings: Optional[FoliaSettings] = None
) -> KoszulPair:
    """
    Paramètres:
        omega (PolyForm): 1-forme intégrable en 3 variables, rot(omega) à zéro isolé en 0.
        cap (int): Degré de troncature (par défaut settings.koszul_cap).

    Retourne:
        KoszulPair: X = rot(omega), S tel que theta = i_S dV.

    Lève:
        NotIntegrable: omega(rot omega) ≠ 0.
        NotIsolated: le zéro de rot(omega) en 0 n'est pas isolé.
        UnsolvableSystem: i_X theta = omega sans solution à un degré < cap.
    """
    settings = resolve_settings(settings)
    cap = settings.koszul_cap if cap is None else cap
    X = rot(omega)
    if not apply_one_form(omega, X).is_zero():
        raise NotIntegrable("omega(rot omega) ≠ 0 : la forme n'est pas intégrable.")
    mu = local_multiplicity_at_origin(Ideal(X.ring, X.components), settings)
    if not mu.is_finite:
        raise NotIsolated(f"rot(omega) n'a pas de zéro isolé en 0 (mu = {mu.value}).")
    vanishing = all(c.constant_term() == 0 for c in X.components)
    theta = None
    for D in range(1, cap + 1):
        settings.checkpoint()
        theta = _solve_theta(X, omega, D, D - 1 if vanishing else D)
        if theta is None:
            raise UnsolvableSystem(f"i_X theta = omega n'a pas de solution au degré {D}.")
    S = two_form_to_field(theta)
    residual = (omega - contract(X, theta)).truncate(cap)
    logger.debug("Générateurs de Koszul certifiés jusqu'au degré %d.", cap)
    return KoszulPair(X, S, theta, cap, mu, residual)
