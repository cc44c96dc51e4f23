# src/ideals/groebner.py
"""
Bases de Gröbner réduites (Buchberger).

Le noyau travaille sur des dictionnaires monôme -> Fraction. Sélection des paires
par sucre puis par ordre du ppcm, critères de Gebauer-Möller, normalisation unitaire
après chaque réduction. Le résultat est déterministe pour (générateurs, ordre).
"""
import logging
from fractions import Fraction
from typing import Dict, List, Optional, Sequence, Set, Tuple

from core.settings import FoliaSettings, resolve_settings
from src.algebra.monomials import (
    Mono,
    MonomialOrder,
    grevlex,
    mono_coprime,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    zero_mono,
)
from src.algebra.polynomial import MPoly, PolyRing
from src.errors import RingMismatch

logger = logging.getLogger(__name__)

Poly = Dict[Mono, Fraction]


# --- Primitives sur dictionnaires ---
def lead_monomial(p: Poly, order: MonomialOrder) -> Mono:
    return max(p, key=order.key)


def make_monic(p: Poly, order: MonomialOrder) -> Poly:
    lm = lead_monomial(p, order)
    c = p[lm]
    if c == 1:
        return p
    inv = 1 / c
    return {m: v * inv for m, v in p.items()}


def sub_multiple(p: Poly, g: Poly, c: Fraction, shift: Mono) -> None:
    """p <- p - c * x^shift * g (en place)."""
    for m, v in g.items():
        mm = mono_mul(m, shift)
        w = p.get(mm, 0) - c * v
        if w:
            p[mm] = w
        else:
            p.pop(mm, None)


def s_polynomial(f: Poly, g: Poly, order: MonomialOrder) -> Poly:
    lf = lead_monomial(f, order)
    lg = lead_monomial(g, order)
    lcm = mono_lcm(lf, lg)
    result: Poly = {}
    sub_multiple(result, f, -1 / f[lf], mono_div(lcm, lf))
    sub_multiple(result, g, 1 / g[lg], mono_div(lcm, lg))
    return result


def reduce_lead(f: Poly, basis: Sequence[Tuple[Mono, Poly]], order: MonomialOrder) -> Poly:
    """Réduction de tête seulement : s'arrête dès que le terme de tête est irréductible."""
    p = dict(f)
    while p:
        m = lead_monomial(p, order)
        for lm, g in basis:
            if mono_divides(lm, m):
                sub_multiple(p, g, p[m] / g[lm], mono_div(m, lm))
                break
        else:
            return p
    return p


def reduce_full(f: Poly, basis: Sequence[Tuple[Mono, Poly]], order: MonomialOrder) -> Poly:
    """Forme normale complète de f par rapport à basis (liste (monôme de tête, poly))."""
    p = dict(f)
    remainder: Poly = {}
    while p:
        m = lead_monomial(p, order)
        for lm, g in basis:
            if mono_divides(lm, m):
                sub_multiple(p, g, p[m] / g[lm], mono_div(m, lm))
                break
        else:
            remainder[m] = p.pop(m)
    return remainder


# --- Mise à jour de Gebauer-Möller ---
def _update(
    lms: List[Mono],
    pairs: Set[Tuple[int, int]],
    lmf: Mono,
    order: MonomialOrder,
) -> Set[Tuple[int, int]]:
    k = len(lms)

    def can_drop(pair):
        i, j = pair
        gam = mono_lcm(lms[i], lms[j])
        return (
            mono_divides(lmf, gam)
            and gam != mono_lcm(lms[i], lmf)
            and gam != mono_lcm(lms[j], lmf)
        )

    kept = {p for p in pairs if not can_drop(p)}

    lcms: Dict[Mono, List[int]] = {}
    for i in range(k):
        lcms.setdefault(mono_lcm(lms[i], lmf), []).append(i)
    minimal: List[Mono] = []
    for gam in sorted(lcms, key=order.key):
        if any(mono_divides(m, gam) for m in minimal):
            continue
        minimal.append(gam)
        if not any(mono_coprime(lms[i], lmf) for i in lcms[gam]):
            kept.add((lcms[gam][0], k))
    return kept


def buchberger(
    generators: Sequence[Poly],
    order: MonomialOrder,
    settings: Optional[FoliaSettings] = None,
) -> List[Poly]:
    """
    Base de Gröbner réduite, unitaire, triée par monôme de tête décroissant.

    Retourne [] pour l'idéal nul et [{0: 1}] pour l'idéal unité.
    """
    settings = resolve_settings(settings)
    nvars = order.nvars
    one = {zero_mono(nvars): Fraction(1)}

    polys: List[Poly] = []
    lms: List[Mono] = []
    sugars: List[int] = []
    pairs: Set[Tuple[int, int]] = set()

    def add(h: Poly, sugar: int) -> bool:
        nonlocal pairs
        h = make_monic(h, order)
        lm = lead_monomial(h, order)
        if sum(lm) == 0:
            return True
        pairs = _update(lms, pairs, lm, order)
        polys.append(h)
        lms.append(lm)
        sugars.append(sugar)
        return False

    for f in generators:
        if not f:
            continue
        h = reduce_lead(f, list(zip(lms, polys)), order)
        if h and add(h, max(sum(m) for m in f)):
            return [one]
    if not polys:
        return []

    processed = 0
    while pairs:
        settings.checkpoint()

        def pair_key(p):
            i, j = p
            lcm = mono_lcm(lms[i], lms[j])
            deg = sum(lcm)
            sugar = max(sugars[i] + deg - sum(lms[i]), sugars[j] + deg - sum(lms[j]))
            return (sugar, order.key(lcm), i, j)

        best = min(pairs, key=pair_key)
        pairs.discard(best)
        sugar = pair_key(best)[0]
        i, j = best
        s = s_polynomial(polys[i], polys[j], order)
        h = reduce_lead(s, list(zip(lms, polys)), order)
        processed += 1
        if h and add(h, sugar):
            logger.debug("Idéal unité détecté après %d paires.", processed)
            return [one]

    logger.debug("Buchberger : %d paires traitées, %d éléments avant réduction.", processed, len(polys))
    return _interreduce(polys, lms, order)


def _interreduce(polys: List[Poly], lms: List[Mono], order: MonomialOrder) -> List[Poly]:
    # base minimale : on écarte les éléments dont la tête est divisible par une autre
    keep = []
    for i, lm in enumerate(lms):
        dominated = False
        for j, other in enumerate(lms):
            if j == i:
                continue
            if mono_divides(other, lm) and (other != lm or j < i):
                dominated = True
                break
        if not dominated:
            keep.append(i)
    basis = [(lms[i], polys[i]) for i in keep]
    reduced = []
    for k, (lm, g) in enumerate(basis):
        others = basis[:k] + basis[k + 1:]
        tail = dict(g)
        head = tail.pop(lm)
        r = reduce_full(tail, others, order)
        r[lm] = head
        reduced.append(make_monic(r, order))
    reduced.sort(key=lambda p: order.key(lead_monomial(p, order)), reverse=True)
    return reduced


# --- Interface MPoly ---
class GroebnerBasis:
    """Base de Gröbner réduite d'un idéal pour un ordre donné."""

    def __init__(self, ring: PolyRing, order: MonomialOrder, basis: List[Poly]):
        self.ring = ring
        self.order = order
        self._dicts = basis
        self._pairs = [(lead_monomial(g, order), g) for g in basis]
        self.basis: Tuple[MPoly, ...] = tuple(MPoly(ring, g) for g in basis)

    def __len__(self):
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def lead_monomials(self) -> List[Mono]:
        return [lm for lm, _ in self._pairs]

    def is_unit(self) -> bool:
        return len(self._dicts) == 1 and all(sum(m) == 0 for m in self._dicts[0])

    def reduce(self, p: MPoly) -> MPoly:
        if p.ring != self.ring:
            raise RingMismatch(f"Polynôme de {p.ring} réduit par une base de {self.ring}.")
        return MPoly(self.ring, reduce_full(p.terms, self._pairs, self.order))

    def contains(self, p: MPoly) -> bool:
        return self.reduce(p).is_zero()

    def s_polynomials_reduce_to_zero(self) -> bool:
        """Certificat de Buchberger : toutes les S-paires se réduisent à zéro."""
        for i in range(len(self._dicts)):
            for j in range(i + 1, len(self._dicts)):
                s = s_polynomial(self._dicts[i], self._dicts[j], self.order)
                if reduce_full(s, self._pairs, self.order):
                    return False
        return True

    def __eq__(self, other):
        return (
            isinstance(other, GroebnerBasis)
            and self.ring == other.ring
            and self.order == other.order
            and self.basis == other.basis
        )

    def render(self) -> List[str]:
        return [g.render() for g in self.basis]


def groebner(generators, order: Optional[MonomialOrder] = None, settings: Optional[FoliaSettings] = None) -> GroebnerBasis:
    """
    Base de Gröbner réduite d'une liste de polynômes (ou d'un Ideal).

    Args:
        generators: Ideal ou suite de MPoly d'un même anneau.
        order (MonomialOrder): grevlex par défaut.

    Returns:
        GroebnerBasis
    """
    gens = list(getattr(generators, "generators", generators))
    if not gens:
        raise ValueError("Aucun générateur fourni.")
    ring = gens[0].ring
    order = order or grevlex(ring.nvars)
    basis = buchberger([g.terms for g in gens], order, settings)
    return GroebnerBasis(ring, order, basis)


def normal_form(p: MPoly, G: GroebnerBasis) -> MPoly:
    return G.reduce(p)
