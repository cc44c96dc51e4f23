# src/ideals/local.py
"""
Multiplicité locale dim_Q O_p / I par base standard de Mora (ordre local "ds").

Le point est d'abord ramené à l'origine. La forme normale de Mora choisit le
réducteur d'écart minimal ; un plafond de degré transforme une non-terminaison
éventuelle en diagnostic, avec escalade jusqu'à une limite.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Union

from core.settings import FoliaSettings, resolve_settings
from src.algebra.monomials import Mono, local_order, mono_div, mono_divides, mono_lcm
from src.algebra.rational import format_rat, to_rat
from src.ideals.groebner import Poly, lead_monomial, sub_multiple
from src.ideals.hilbert import count_standard_monomials
from src.ideals.ideal import Ideal
from src.errors import NotZeroDimensional

logger = logging.getLogger(__name__)

INFINITE = "infinite"
INCONCLUSIVE = "inconclusive"


class _DegreeCapReached(Exception):
    pass


@dataclass(frozen=True)
class LocalMultiplicity:
    """
    Multiplicité locale en un point rationnel.

    value: entier >= 0, ou "infinite" (point non isolé), ou "inconclusive"
    (plafond de degré atteint).
    """

    point: tuple
    value: Union[int, str]

    @property
    def is_finite(self) -> bool:
        return isinstance(self.value, int)

    def render(self) -> str:
        coords = ", ".join(format_rat(c) for c in self.point)
        return f"mu([{coords}]) = {self.value}"


def _ecart(p: Poly, lm: Mono) -> int:
    return max(sum(m) for m in p) - sum(lm)


def _total_degree(p: Poly) -> int:
    return max(sum(m) for m in p)


def _spoly(f: Poly, g: Poly, order) -> Poly:
    lf = lead_monomial(f, order)
    lg = lead_monomial(g, order)
    lcm = mono_lcm(lf, lg)
    out: Poly = {}
    sub_multiple(out, f, -1 / f[lf], mono_div(lcm, lf))
    sub_multiple(out, g, 1 / g[lg], mono_div(lcm, lg))
    return out


def mora_normal_form(f: Poly, basis: Sequence[Poly], order, degree_cap: int) -> Poly:
    """Forme normale faible de Mora (réduction de tête, écart minimal)."""
    h = dict(f)
    T: List[Poly] = list(basis)
    while h:
        lm_h = lead_monomial(h, order)
        candidates = [g for g in T if mono_divides(lead_monomial(g, order), lm_h)]
        if not candidates:
            return h
        g = min(candidates, key=lambda q: _ecart(q, lead_monomial(q, order)))
        if _ecart(g, lead_monomial(g, order)) > _ecart(h, lm_h):
            T.append(dict(h))
        h = _spoly(h, g, order)
        if h and _total_degree(h) > degree_cap:
            raise _DegreeCapReached()
    return h


def standard_basis(generators: Sequence[Poly], nvars: int, degree_cap: int,
                   settings: Optional[FoliaSettings] = None) -> List[Poly]:
    """Base standard pour l'ordre local, construite sur toutes les paires."""
    settings = resolve_settings(settings)
    order = local_order(nvars)
    S: List[Poly] = [dict(g) for g in generators if g]
    pairs = [(i, j) for j in range(len(S)) for i in range(j)]
    while pairs:
        settings.checkpoint()
        i, j = pairs.pop(0)
        h = mora_normal_form(_spoly(S[i], S[j], order), S, order, degree_cap)
        if h:
            S.append(h)
            k = len(S) - 1
            pairs.extend((a, k) for a in range(k))
    return S


def local_multiplicity(I, point: Sequence, settings: Optional[FoliaSettings] = None) -> LocalMultiplicity:
    """
    dim_Q O_p / I pour un point rationnel p.

    Paramètres:
        I (Ideal | list[MPoly]): L'idéal.
        point (list): Coordonnées rationnelles du point.

    Retourne:
        LocalMultiplicity: valeur entière, "infinite" si p n'est pas isolé,
        "inconclusive" si le plafond de degré maximal est atteint.
    """
    settings = resolve_settings(settings)
    gens = list(getattr(I, "generators", I))
    point = tuple(to_rat(v) for v in point)
    if not gens:
        return LocalMultiplicity(point, INFINITE)
    nvars = gens[0].ring.nvars
    moved = [g.translate(point) for g in gens]
    if any(g.constant_term() != 0 for g in moved):
        return LocalMultiplicity(point, 0)

    order = local_order(nvars)
    cap = settings.mora_degree_cap
    while True:
        try:
            S = standard_basis([g.terms for g in moved], nvars, cap, settings)
            break
        except _DegreeCapReached:
            if cap >= settings.mora_degree_limit:
                logger.warning("Mora : plafond de degré %d atteint en %s.", cap, point)
                return LocalMultiplicity(point, INCONCLUSIVE)
            cap = min(2 * cap, settings.mora_degree_limit)
            logger.debug("Mora : escalade du plafond de degré à %d.", cap)

    lead = [lead_monomial(g, order) for g in S]
    if any(sum(m) == 0 for m in lead):
        return LocalMultiplicity(point, 0)
    try:
        value = count_standard_monomials(lead, nvars)
    except NotZeroDimensional:
        return LocalMultiplicity(point, INFINITE)
    return LocalMultiplicity(point, value)


def local_multiplicity_at_origin(I: Ideal, settings: Optional[FoliaSettings] = None) -> LocalMultiplicity:
    return local_multiplicity(I, [Fraction(0)] * I.ring.nvars, settings)
