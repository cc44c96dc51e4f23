# src/ideals/lift.py
"""Appartenance avec cofacteurs : f = Σ c_i g_i pour les générateurs donnés."""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

from core.settings import FoliaSettings, resolve_settings
from src.algebra.monomials import MonomialOrder, grevlex, mono_div, mono_divides, mono_lcm, zero_mono
from src.algebra.polynomial import MPoly
from src.ideals.groebner import Poly, lead_monomial, sub_multiple

# Un élément suivi : (polynôme, cofacteurs) avec poly = Σ cof[k] * générateur[k]
Tracked = Tuple[Poly, List[Poly]]


def _sub_tracked(target: Tracked, source: Tracked, c: Fraction, shift) -> None:
    sub_multiple(target[0], source[0], c, shift)
    for k, cof in enumerate(source[1]):
        if cof:
            sub_multiple(target[1][k], cof, c, shift)


def _copy(t: Tracked) -> Tracked:
    return dict(t[0]), [dict(c) for c in t[1]]


def _scale(t: Tracked, c: Fraction) -> Tracked:
    return ({m: v * c for m, v in t[0].items()}, [{m: v * c for m, v in cof.items()} for cof in t[1]])


def _top_reduce(t: Tracked, basis: List[Tracked], order: MonomialOrder) -> Tracked:
    t = _copy(t)
    while t[0]:
        m = lead_monomial(t[0], order)
        for g in basis:
            lm = lead_monomial(g[0], order)
            if mono_divides(lm, m):
                _sub_tracked(t, g, t[0][m] / g[0][lm], mono_div(m, lm))
                break
        else:
            return t
    return t


class CofactorBasis:
    """Base de Gröbner (non réduite) dont chaque élément connaît ses cofacteurs."""

    def __init__(self, generators: Sequence[MPoly], order: Optional[MonomialOrder] = None,
                 settings: Optional[FoliaSettings] = None):
        settings = resolve_settings(settings)
        gens = list(generators)
        self.ring = gens[0].ring
        self.order = order or grevlex(self.ring.nvars)
        self.generators = gens
        n = len(gens)
        basis: List[Tracked] = []
        for k, g in enumerate(gens):
            if g.is_zero():
                continue
            unit = [dict() for _ in range(n)]
            unit[k] = {zero_mono(self.ring.nvars): Fraction(1)}
            basis.append((dict(g.terms), unit))
        pairs = [(i, j) for j in range(len(basis)) for i in range(j)]
        while pairs:
            settings.checkpoint()
            pairs.sort(key=lambda p: (sum(self._lcm(basis, p)), self.order.key(self._lcm(basis, p)), p))
            i, j = pairs.pop(0)
            fi, fj = basis[i], basis[j]
            li = lead_monomial(fi[0], self.order)
            lj = lead_monomial(fj[0], self.order)
            if all(a == 0 or b == 0 for a, b in zip(li, lj)):
                continue
            lcm = mono_lcm(li, lj)
            s: Tracked = ({}, [dict() for _ in range(n)])
            _sub_tracked(s, fi, -1 / fi[0][li], mono_div(lcm, li))
            _sub_tracked(s, fj, 1 / fj[0][lj], mono_div(lcm, lj))
            h = _top_reduce(s, basis, self.order)
            if h[0]:
                lm = lead_monomial(h[0], self.order)
                h = _scale(h, 1 / h[0][lm])
                basis.append(h)
                k = len(basis) - 1
                pairs.extend((i2, k) for i2 in range(k))
        self._basis = basis

    def _lcm(self, basis, pair):
        i, j = pair
        return mono_lcm(lead_monomial(basis[i][0], self.order), lead_monomial(basis[j][0], self.order))

    def lift(self, f: MPoly) -> Optional[List[MPoly]]:
        """Cofacteurs c avec f = Σ c_i g_i, ou None si f n'est pas dans l'idéal."""
        n = len(self.generators)
        t: Tracked = (dict(f.terms), [dict() for _ in range(n)])
        # t suit f - Σ q_k g_k : on accumule l'opposé des cofacteurs
        while t[0]:
            m = lead_monomial(t[0], self.order)
            for g in self._basis:
                lm = lead_monomial(g[0], self.order)
                if mono_divides(lm, m):
                    _sub_tracked(t, g, t[0][m] / g[0][lm], mono_div(m, lm))
                    break
            else:
                return None
        return [MPoly(self.ring, {mm: -v for mm, v in cof.items()}) for cof in t[1]]


def lift(f: MPoly, generators: Sequence[MPoly], settings: Optional[FoliaSettings] = None) -> Optional[List[MPoly]]:
    """Raccourci : cofacteurs de f dans l'idéal engendré par generators, ou None."""
    return CofactorBasis(generators, settings=settings).lift(f)
