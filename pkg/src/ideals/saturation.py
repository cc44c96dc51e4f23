# src/ideals/saturation.py
"""
Élimination, intersection, quotients et saturations.

Toutes les constructions passent par une variable auxiliaire ajoutée en fin d'anneau
puis éliminée (ordre par blocs), sauf la saturation par une variable d'un idéal
homogène qui utilise grevlex avec cette variable en dernière position.
"""
import logging
from typing import List, Optional, Sequence

from core.settings import FoliaSettings
from src.algebra.monomials import elimination, grevlex_last
from src.algebra.polynomial import MPoly, PolyRing
from src.errors import NonHomogeneous, RingMismatch
from src.ideals.ideal import Ideal

logger = logging.getLogger(__name__)


def _lift_to(p: MPoly, ring: PolyRing) -> MPoly:
    return p.change_ring(ring, tuple(range(p.ring.nvars)))


def _restrict(p: MPoly, ring: PolyRing) -> MPoly:
    # p ne dépend que des premières variables
    return MPoly(ring, {m[: ring.nvars]: c for m, c in p.terms.items()})


def _aux_ring(ring: PolyRing, name: str) -> PolyRing:
    candidate = name
    while candidate in ring.names:
        candidate = "_" + candidate
    return ring.extend([candidate])


def eliminate_last(generators: Sequence[MPoly], ring: PolyRing, settings: Optional[FoliaSettings] = None) -> Ideal:
    """
    Intersection de l'idéal engendré (dans ring + 1 variable) avec l'anneau ring.

    Paramètres:
        generators (list[MPoly]): Polynômes de l'anneau étendu (variable éliminée en dernier).
        ring (PolyRing): L'anneau d'origine.
    """
    big = generators[0].ring
    order = elimination(big.nvars, (big.nvars - 1,))
    gb = Ideal(big, generators).groebner(order, settings)
    kept = [_restrict(g, ring) for g in gb.basis if g.degree_in(big.nvars - 1) == 0]
    return Ideal(ring, kept)


def intersection(I: Ideal, K: Ideal, settings: Optional[FoliaSettings] = None) -> Ideal:
    """I ∩ K par élimination de t dans t·I + (1 - t)·K."""
    if I.ring != K.ring:
        raise RingMismatch("Intersection d'idéaux d'anneaux différents.")
    if I.is_zero() or K.is_zero():
        return Ideal(I.ring)
    if I.is_unit():
        return K
    if K.is_unit():
        return I
    big = _aux_ring(I.ring, "t")
    t = big.var(big.nvars - 1)
    one_minus_t = big.one() - t
    gens = [t * _lift_to(f, big) for f in I.generators]
    gens += [one_minus_t * _lift_to(g, big) for g in K.generators]
    return eliminate_last(gens, I.ring, settings)


def intersect_all(ideals: Sequence[Ideal], settings: Optional[FoliaSettings] = None) -> Ideal:
    if not ideals:
        raise ValueError("Intersection d'une liste vide d'idéaux.")
    result = ideals[0]
    for other in ideals[1:]:
        result = intersection(result, other, settings)
    return result


def quotient_by_element(I: Ideal, f: MPoly, settings: Optional[FoliaSettings] = None) -> Ideal:
    """I : f = (I ∩ (f)) / f."""
    if f.is_zero():
        return Ideal.unit(I.ring)
    meet = intersection(I, Ideal(I.ring, [f]), settings)
    return Ideal(I.ring, [g.exact_div(f) for g in meet.reduced().generators])


def ideal_quotient(I: Ideal, J: Ideal, settings: Optional[FoliaSettings] = None) -> Ideal:
    """I : J = ∩_j (I : f_j)."""
    if J.is_zero():
        return Ideal.unit(I.ring)
    return intersect_all([quotient_by_element(I, f, settings) for f in J.generators], settings)


def saturate_by_element(I: Ideal, f: MPoly, settings: Optional[FoliaSettings] = None) -> Ideal:
    """I : f^∞ = (I + (1 - w·f)) ∩ Q[x] (astuce de Rabinowitsch)."""
    if f.is_zero():
        return Ideal.unit(I.ring)
    if f.is_constant():
        return I
    big = _aux_ring(I.ring, "w")
    w = big.var(big.nvars - 1)
    gens = [_lift_to(g, big) for g in I.generators]
    gens.append(big.one() - w * _lift_to(f, big))
    return eliminate_last(gens, I.ring, settings)


def saturation(I: Ideal, J: Ideal, method: str = "elimination", settings: Optional[FoliaSettings] = None) -> Ideal:
    """
    I : J^∞.

    method="elimination" : intersection des I : f_j^∞ (Rabinowitsch) ;
    method="quotient" : quotients I : J itérés jusqu'à stabilisation.
    """
    if I.ring != J.ring:
        raise RingMismatch("Saturation d'idéaux d'anneaux différents.")
    if J.is_zero():
        return Ideal.unit(I.ring)
    if method == "elimination":
        parts = [saturate_by_element(I, f, settings) for f in J.generators]
        return intersect_all(parts, settings)
    if method == "quotient":
        current = I
        step = 0
        while True:
            step += 1
            nxt = ideal_quotient(current, J, settings)
            if nxt == current:
                logger.debug("Saturation stabilisée après %d quotients.", step)
                return current
            current = nxt
    raise ValueError(f"Méthode de saturation inconnue : {method}")


def saturate_by_variable(I: Ideal, i: int, settings: Optional[FoliaSettings] = None) -> Ideal:
    """
    I : x_i^∞ pour un idéal homogène : base grevlex avec x_i en dernier, puis chaque
    élément est divisé par la plus grande puissance de x_i qui le divise.
    """
    if not I.is_homogeneous():
        raise NonHomogeneous("La saturation par variable exige un idéal homogène.")
    if I.is_zero():
        return I
    gb = I.groebner(grevlex_last(I.ring.nvars, i), settings)
    gens: List[MPoly] = []
    for g in gb.basis:
        k = min(m[i] for m in g.terms)
        if k:
            g = MPoly(g.ring, {m[:i] + (m[i] - k,) + m[i + 1:]: c for m, c in g.terms.items()})
        gens.append(g)
    return Ideal(I.ring, gens)


def saturate_irrelevant(I: Ideal, settings: Optional[FoliaSettings] = None) -> Ideal:
    """I : (x_0, ..., x_n)^∞ pour un idéal homogène."""
    if I.is_zero() or I.is_unit():
        return I
    parts = [saturate_by_variable(I, i, settings) for i in range(I.ring.nvars)]
    if all(p == I for p in parts):
        return I
    logger.debug("Composante irrelevante détectée ; intersection des saturations par variable.")
    return intersect_all(parts, settings)


def radical_member(f: MPoly, I: Ideal, settings: Optional[FoliaSettings] = None) -> bool:
    """f ∈ √I  ⇔  1 ∈ I + (1 - w·f)."""
    if f.is_zero():
        return True
    big = _aux_ring(I.ring, "w")
    w = big.var(big.nvars - 1)
    gens = [_lift_to(g, big) for g in I.generators]
    gens.append(big.one() - w * _lift_to(f, big))
    return Ideal(big, gens).is_unit()


def eliminate_variables(I: Ideal, keep: Sequence[int], settings: Optional[FoliaSettings] = None) -> Ideal:
    """I ∩ Q[x_keep] (les autres variables forment le bloc éliminé)."""
    n = I.ring.nvars
    block = tuple(i for i in range(n) if i not in keep)
    if not block:
        return I
    gb = I.groebner(elimination(n, block), settings)
    return Ideal(I.ring, [g for g in gb.basis if all(m[b] == 0 for m in g.terms for b in block)])
