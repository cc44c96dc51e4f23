# src/singularities/first_integrals.py
"""
Intégrales premières tronquées d'une 1-forme régulière en 0 (Frobenius), résolues
degré par degré, et leur composition avec une application polynomiale.
"""
import logging
from dataclasses import dataclass
from itertools import combinations_with_replacement
from typing import Dict, List, Optional, Sequence

from core.settings import FoliaSettings, resolve_settings
from src.algebra.linear import solve_linear
from src.algebra.monomials import Mono
from src.algebra.polynomial import MPoly, PolyRing
from src.algebra.series import TruncSeries
from src.errors import SingularGerm, UnsolvableSystem
from src.forms.exterior import PolyForm, ext_d, integrability_defect, wedge

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TruncFirstIntegral:
    """
    H tronquée au degré cap avec dH ∧ eta nul jusqu'au degré cap − 1.

    residual_order est le plus petit degré d'un terme non nul de dH ∧ eta
    (None si le résidu est nul).
    """

    H: TruncSeries
    cap: int
    residual: PolyForm
    residual_order: Optional[int]
    pivot: str
    integrable: bool

    @property
    def certified(self) -> bool:
        return self.residual_order is None or self.residual_order >= self.cap


@dataclass(frozen=True)
class CompositeFirstIntegral:
    H: TruncSeries
    cap: int
    residual: PolyForm
    residual_order: Optional[int]
    differential_at_origin_nonzero: bool

    @property
    def certified(self) -> bool:
        return self.residual_order is None or self.residual_order >= self.cap


def monomials_of_degree(nvars: int, k: int) -> List[Mono]:
    out = []
    for combo in combinations_with_replacement(range(nvars), k):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        out.append(tuple(m))
    return out


def _residual(H: MPoly, eta: PolyForm) -> PolyForm:
    return wedge(ext_d(PolyForm.function(H)), eta)


def _residual_order(residual: PolyForm) -> Optional[int]:
    if residual.is_zero():
        return None
    return min(c.low_degree() for c in residual.components.values())


def _is_integrable(eta: PolyForm) -> bool:
    if eta.ring.nvars < 3:
        return True
    return integrability_defect(eta).is_zero()


def frobenius_first_integral(
    eta: PolyForm, cap: Optional[int] = None, settings: Optional[FoliaSettings] = None
) -> TruncFirstIntegral:
    """
    Résout dH ∧ eta ≡ 0 modulo les termes de degré >= cap.

    H(0) = 0 et la partie linéaire de H est proportionnelle à eta(0), normalisée pour
    que la première variable k avec a_k(0) ≠ 0 ait le coefficient 1 ; les variables
    libres de chaque système homogène sont fixées à 0.

    Lève:
        SingularGerm: eta(0) = 0.
        UnsolvableSystem: système incompatible à un degré (eta non intégrable).
    """
    settings = resolve_settings(settings)
    cap = settings.first_integral_cap if cap is None else cap
    if cap < 1:
        raise ValueError(f"Degré de troncature invalide : {cap}")
    ring = eta.ring
    n = ring.nvars
    coeffs = eta.coefficients()
    a0 = [c.constant_term() for c in coeffs]
    pivot = next((k for k, v in enumerate(a0) if v != 0), None)
    if pivot is None:
        raise SingularGerm("eta(0) = 0 : le germe est singulier, pas d'intégrale première de Frobenius.")
    integrable = _is_integrable(eta)
    if not integrable:
        logger.warning("eta ∧ d eta ≠ 0 : la résolution échouera à un degré fini.")

    H = MPoly(ring, {tuple(int(i == k) for i in range(n)): a0[k] / a0[pivot] for k in range(n)})
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for m in range(1, cap):
        settings.checkpoint()
        known = _residual(H, eta)
        unknowns = monomials_of_degree(n, m + 1)
        targets = monomials_of_degree(n, m)
        index = {mono: r for r, mono in enumerate(targets)}
        rows: List[List] = []
        rhs: List = []
        for i, j in pairs:
            block: Dict[int, List] = {r: [0] * len(unknowns) for r in range(len(targets))}
            for col, mu in enumerate(unknowns):
                term = ring.monomial(mu)
                contribution = term.diff(i) * a0[j] - term.diff(j) * a0[i]
                for nu, c in contribution.terms.items():
                    block[index[nu]][col] += c
            part = known.coefficient((i, j)).homogeneous_component(m)
            for r, nu in enumerate(targets):
                rows.append(block[r])
                rhs.append(-part.coefficient(nu))
        solution = solve_linear(rows, rhs)
        if solution is None:
            raise UnsolvableSystem(
                f"Système incompatible au degré {m} : pas d'intégrale première tronquée."
            )
        H = H + MPoly(ring, {mu: c for mu, c in zip(unknowns, solution)})
    residual = _residual(H, eta)
    order = _residual_order(residual)
    logger.debug("Intégrale première tronquée au degré %d, résidu d'ordre %s.", cap, order)
    return TruncFirstIntegral(TruncSeries(H, cap), cap, residual, order, ring.names[pivot], integrable)


def compose_first_integral(
    first_integral: TruncFirstIntegral, images: Sequence[MPoly], omega: PolyForm
) -> CompositeFirstIntegral:
    """
    H1 = H ∘ phi pour phi sans terme constant ; résidu dH1 ∧ omega avec omega = phi* eta.
    """
    cap = first_integral.cap
    target: PolyRing = omega.ring
    H1 = first_integral.H.compose(images, target)
    residual = _residual(H1.body, omega)
    order = _residual_order(residual)
    gradient = [H1.body.diff(i).constant_term() for i in range(target.nvars)]
    return CompositeFirstIntegral(H1, cap, residual, order, any(v != 0 for v in gradient))


def residual_vanishes_below(residual: PolyForm, degree: int) -> bool:
    """Tous les termes du résidu de degré < degree sont nuls."""
    return all(c.truncate(degree - 1).is_zero() for c in residual.components.values())

