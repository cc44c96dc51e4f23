# src/algebra/binary_forms.py
"""
Formes binaires homogènes en (s, t) : pgcd par sous-résultants et factorisation sur Q.

Le pgcd se calcule sur la carte t = 1 (polynômes univariés en s) ; la puissance de t
perdue en déshomogénéisant est rétablie séparément.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import sympy
from sympy.polys.polytools import subresultants

from src.algebra.polynomial import MPoly, PolyRing
from src.algebra.rational import format_rat, to_rat
from src.errors import EmptyInput, InexactDivision, NonHomogeneous, RingMismatch

BINARY_RING = PolyRing(("s", "t"))
_S, _T = sympy.symbols("s t")


class BinForm:
    """Forme binaire homogène (MPoly de l'anneau (s, t))."""

    __slots__ = ("poly",)

    def __init__(self, poly: MPoly):
        if poly.ring.nvars != 2:
            raise RingMismatch(f"Une forme binaire vit dans un anneau à 2 variables, pas {poly.ring}.")
        if not poly.is_homogeneous():
            raise NonHomogeneous(f"La forme binaire {poly} n'est pas homogène.")
        self.poly = poly.change_ring(BINARY_RING, (0, 1)) if poly.ring != BINARY_RING else poly

    @classmethod
    def from_coefficients(cls, coeffs: Sequence, degree: int) -> "BinForm":
        """coeffs[k] = coefficient de s^(degree-k) t^k."""
        terms = {(degree - k, k): to_rat(c) for k, c in enumerate(coeffs)}
        return cls(MPoly(BINARY_RING, terms))

    @property
    def degree(self):
        return self.poly.degree()

    def is_zero(self) -> bool:
        return self.poly.is_zero()

    def t_order(self) -> int:
        """Plus grande puissance de t qui divise la forme."""
        return min(m[1] for m in self.poly.terms)

    def dehomogenize(self) -> sympy.Poly:
        """Polynôme univarié f(s, 1) sur QQ."""
        expr = sum(
            (sympy.Rational(c.numerator, c.denominator) * _S ** m[0] for m, c in self.poly.terms.items()),
            sympy.Integer(0),
        )
        return sympy.Poly(expr, _S, domain="QQ")

    @classmethod
    def homogenize(cls, poly: sympy.Poly, degree: int) -> "BinForm":
        terms = {}
        for (k,), c in poly.terms():
            terms[(k, degree - k)] = to_rat(c)
        return cls(MPoly(BINARY_RING, terms))

    def monic(self) -> "BinForm":
        """Normalise le terme de plus haute puissance de s à 1."""
        if self.is_zero():
            return self
        top = max(self.poly.terms, key=lambda m: m[0])
        return BinForm(self.poly.scale(1 / self.poly.terms[top]))

    def __mul__(self, other: "BinForm") -> "BinForm":
        return BinForm(self.poly * other.poly)

    def __eq__(self, other):
        return isinstance(other, BinForm) and self.poly == other.poly

    def __hash__(self):
        return hash(self.poly)

    def divides(self, other: "BinForm") -> bool:
        try:
            other.poly.exact_div(self.poly)
            return True
        except InexactDivision:
            return False

    def render(self) -> str:
        return self.poly.render()

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"BinForm({self.render()!r})"


def _univariate_gcd(a: sympy.Poly, b: sympy.Poly) -> sympy.Poly:
    if a.is_zero:
        return b
    if b.is_zero:
        return a
    if a.degree() < b.degree():
        a, b = b, a
    prs = subresultants(a, b)
    last = [p for p in prs if not p.is_zero][-1]
    last = sympy.Poly(last, _S, domain="QQ")
    return last.monic() if last.degree() > 0 else sympy.Poly(1, _S, domain="QQ")


def gcd_binary(a: BinForm, b: Optional[BinForm] = None, rest: Sequence[BinForm] = ()) -> BinForm:
    """
    pgcd unitaire de formes binaires non nulles.

    Args:
        a, b (BinForm): Les deux premières formes.
        rest (list[BinForm]): Formes supplémentaires.

    Returns:
        BinForm: t^(min des ordres en t) * homogénéisé du pgcd sur la carte t = 1.
    """
    forms = [f for f in [a, b, *rest] if f is not None]
    if not forms:
        raise EmptyInput("pgcd d'une liste vide de formes binaires.")
    for f in forms:
        if f.is_zero():
            raise ValueError("Le pgcd binaire n'accepte que des formes non nulles.")
    t_power = min(f.t_order() for f in forms)
    g = forms[0].dehomogenize()
    for f in forms[1:]:
        g = _univariate_gcd(g, f.dehomogenize())
    g = g.monic() if g.degree() > 0 else sympy.Poly(1, _S, domain="QQ")
    core = BinForm.homogenize(g, g.degree())
    t_part = BinForm(MPoly(BINARY_RING, {(0, t_power): Fraction(1)}))
    return (core * t_part).monic()


@dataclass(frozen=True)
class BinaryFactor:
    """Facteur irréductible sur Q d'une forme binaire, avec sa racine [s:t] si linéaire."""

    form: BinForm
    multiplicity: int
    root: Optional[Tuple[Fraction, Fraction]]

    def label(self) -> str:
        if self.root is None:
            return f"{self.form.render()}=0"
        s, t = self.root
        if t == 0:
            return "t=0"
        if s == 0:
            return "s=0"
        return f"s={format_rat(s)}*t"


def factor_binary(f: BinForm) -> List[BinaryFactor]:
    """Factorisation de f en facteurs irréductibles sur Q (sans la constante)."""
    if f.is_zero():
        raise ValueError("La forme nulle n'a pas de factorisation.")
    factors: List[BinaryFactor] = []
    k = f.t_order()
    if k:
        t_form = BinForm(MPoly(BINARY_RING, {(0, 1): Fraction(1)}))
        factors.append(BinaryFactor(t_form, k, (Fraction(1), Fraction(0))))
    g = f.dehomogenize()
    if g.degree() > 0:
        _, parts = g.factor_list()
        for part, mult in parts:
            part = sympy.Poly(part, _S, domain="QQ").monic()
            form = BinForm.homogenize(part, part.degree())
            root = None
            if part.degree() == 1:
                # s + c t  ->  [s:t] = [-c:1]
                c = to_rat(part.coeff_monomial(1))
                root = (-c, Fraction(1))
            factors.append(BinaryFactor(form, int(mult), root))
    factors.sort(key=lambda fac: (fac.form.degree, fac.form.render()))
    return factors
