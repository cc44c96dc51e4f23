# src/algebra/polynomial.py
"""
Polynômes multivariés creux à coefficients rationnels exacts.

Un MPoly est une table monôme -> coefficient non nul, attachée à un PolyRing
(noms des variables). Les valeurs sont immuables après construction.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Iterable, Optional, Sequence, Tuple

import sympy

from src.algebra.monomials import (
    Mono,
    MonomialOrder,
    grevlex,
    grevlex_key,
    mono_divides,
    mono_div,
    mono_mul,
    unit_mono,
    zero_mono,
)
from src.algebra.rational import format_rat, to_rat
from src.errors import ArityMismatch, InexactDivision, RingMismatch


class NegInf:
    """Degré du polynôme nul : inférieur à tout entier, interdit en arithmétique."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "-inf"

    def __lt__(self, other):
        return not isinstance(other, NegInf)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, NegInf)

    def __eq__(self, other):
        return isinstance(other, NegInf)

    def __hash__(self):
        return hash("NegInf")

    def _refuse(self, *_):
        raise TypeError("Le degré du polynôme nul n'admet pas d'arithmétique.")

    __add__ = __radd__ = __sub__ = __rsub__ = __mul__ = __rmul__ = _refuse
    __int__ = __index__ = _refuse


NEG_INF = NegInf()


@dataclass(frozen=True)
class PolyRing:
    """Anneau de polynômes Q[names]."""

    names: Tuple[str, ...]

    def __post_init__(self):
        object.__setattr__(self, "names", tuple(self.names))
        if len(set(self.names)) != len(self.names):
            raise ValueError(f"Noms de variables dupliqués : {self.names}")

    @property
    def nvars(self) -> int:
        return len(self.names)

    def index(self, name: str) -> int:
        try:
            return self.names.index(name)
        except ValueError:
            raise RingMismatch(f"La variable '{name}' n'appartient pas à l'anneau {self}.")

    def zero(self) -> "MPoly":
        return MPoly(self, {})

    def one(self) -> "MPoly":
        return self.const(1)

    def const(self, c) -> "MPoly":
        c = to_rat(c)
        return MPoly(self, {zero_mono(self.nvars): c} if c else {})

    def var(self, i) -> "MPoly":
        if isinstance(i, str):
            i = self.index(i)
        return MPoly(self, {unit_mono(self.nvars, i): Fraction(1)})

    def gens(self) -> Tuple["MPoly", ...]:
        return tuple(self.var(i) for i in range(self.nvars))

    def monomial(self, m: Mono, c=1) -> "MPoly":
        c = to_rat(c)
        return MPoly(self, {tuple(m): c} if c else {})

    def extend(self, extra: Sequence[str]) -> "PolyRing":
        """Anneau avec des variables ajoutées en fin de liste."""
        return PolyRing(self.names + tuple(extra))

    def __str__(self):
        return "Q[" + ", ".join(self.names) + "]"


class MPoly:
    __slots__ = ("ring", "terms")

    def __init__(self, ring: PolyRing, terms: Optional[Dict[Mono, Fraction]] = None):
        self.ring = ring
        clean = {}
        if terms:
            n = ring.nvars
            for m, c in terms.items():
                if len(m) != n:
                    raise RingMismatch(
                        f"Monôme {m} de longueur {len(m)} dans un anneau à {n} variables."
                    )
                c = to_rat(c)
                if c:
                    clean[tuple(m)] = c
        self.terms = clean

    @classmethod
    def _raw(cls, ring: PolyRing, terms: Dict[Mono, Fraction]) -> "MPoly":
        # termes déjà nettoyés (coefficients Fraction non nuls)
        p = cls.__new__(cls)
        p.ring = ring
        p.terms = terms
        return p

    # --- Propriétés de base ---
    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def __len__(self):
        return len(self.terms)

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def constant_term(self) -> Fraction:
        return self.terms.get(zero_mono(self.ring.nvars), Fraction(0))

    def coefficient(self, m: Mono) -> Fraction:
        return self.terms.get(tuple(m), Fraction(0))

    def degree(self):
        """Degré total ; NEG_INF pour le polynôme nul."""
        if not self.terms:
            return NEG_INF
        return max(sum(m) for m in self.terms)

    def low_degree(self):
        """Ordre (plus petit degré total d'un terme) ; NEG_INF pour le polynôme nul."""
        if not self.terms:
            return NEG_INF
        return min(sum(m) for m in self.terms)

    def degree_in(self, i: int):
        if not self.terms:
            return NEG_INF
        return max(m[i] for m in self.terms)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self.terms}) <= 1

    def homogeneous_component(self, k: int) -> "MPoly":
        return MPoly._raw(self.ring, {m: c for m, c in self.terms.items() if sum(m) == k})

    def truncate(self, cap: int) -> "MPoly":
        """Supprime les termes de degré total > cap."""
        return MPoly._raw(self.ring, {m: c for m, c in self.terms.items() if sum(m) <= cap})

    def variables(self) -> Tuple[int, ...]:
        used = set()
        for m in self.terms:
            used.update(i for i, e in enumerate(m) if e)
        return tuple(sorted(used))

    # --- Ordre ---
    def sorted_terms(self, order: Optional[MonomialOrder] = None):
        key = order.key if order is not None else grevlex_key
        return sorted(self.terms.items(), key=lambda mc: key(mc[0]), reverse=True)

    def lead(self, order: MonomialOrder) -> Tuple[Mono, Fraction]:
        if not self.terms:
            raise ValueError("Le polynôme nul n'a pas de terme de tête.")
        m = max(self.terms, key=order.key)
        return m, self.terms[m]

    def lead_monomial(self, order: MonomialOrder) -> Mono:
        return self.lead(order)[0]

    def monic(self, order: Optional[MonomialOrder] = None) -> "MPoly":
        if not self.terms:
            return self
        order = order or grevlex(self.ring.nvars)
        _, c = self.lead(order)
        return self.scale(1 / c)

    # --- Arithmétique ---
    def _check(self, other: "MPoly"):
        if not isinstance(other, MPoly):
            raise TypeError(f"Opérande non polynomial : {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatch(f"Anneaux différents : {self.ring} et {other.ring}.")

    def _coerce(self, other) -> "MPoly":
        if isinstance(other, MPoly):
            self._check(other)
            return other
        return self.ring.const(other)

    def __add__(self, other):
        other = self._coerce(other)
        terms = dict(self.terms)
        for m, c in other.terms.items():
            v = terms.get(m, 0) + c
            if v:
                terms[m] = v
            else:
                terms.pop(m, None)
        return MPoly._raw(self.ring, terms)

    __radd__ = __add__

    def __neg__(self):
        return MPoly._raw(self.ring, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, MPoly):
            return self.scale(other)
        self._check(other)
        terms: Dict[Mono, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = mono_mul(m1, m2)
                v = terms.get(m, 0) + c1 * c2
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return MPoly._raw(self.ring, terms)

    def __rmul__(self, other):
        return self.scale(other)

    def __truediv__(self, other):
        if isinstance(other, MPoly):
            return self.exact_div(other)
        c = to_rat(other)
        if c == 0:
            raise ZeroDivisionError("Division d'un polynôme par zéro.")
        return self.scale(1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError(f"Exposant invalide : {k}")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def scale(self, c) -> "MPoly":
        c = to_rat(c)
        if not c:
            return self.ring.zero()
        return MPoly._raw(self.ring, {m: v * c for m, v in self.terms.items()})

    def __eq__(self, other):
        if isinstance(other, MPoly):
            return self.ring == other.ring and self.terms == other.terms
        try:
            return self.terms == self.ring.const(other).terms
        except (TypeError, ValueError):
            return NotImplemented

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    def exact_div(self, divisor: "MPoly") -> "MPoly":
        """Division exacte ; InexactDivision si le reste est non nul."""
        self._check(divisor)
        if divisor.is_zero():
            raise ZeroDivisionError("Division par le polynôme nul.")
        order = grevlex(self.ring.nvars)
        lm_d, lc_d = divisor.lead(order)
        remainder = dict(self.terms)
        quotient: Dict[Mono, Fraction] = {}
        while remainder:
            m = max(remainder, key=order.key)
            if not mono_divides(lm_d, m):
                raise InexactDivision(f"{divisor} ne divise pas {self}.")
            shift = mono_div(m, lm_d)
            c = remainder[m] / lc_d
            quotient[shift] = c
            for md, cd in divisor.terms.items():
                mm = mono_mul(md, shift)
                v = remainder.get(mm, 0) - c * cd
                if v:
                    remainder[mm] = v
                else:
                    remainder.pop(mm, None)
        return MPoly._raw(self.ring, quotient)

    # --- Calcul ---
    def diff(self, i: int) -> "MPoly":
        if not 0 <= i < self.ring.nvars:
            raise RingMismatch(f"Indice de variable {i} hors de l'anneau {self.ring}.")
        terms = {}
        for m, c in self.terms.items():
            e = m[i]
            if e:
                mm = m[:i] + (e - 1,) + m[i + 1:]
                terms[mm] = c * e
        return MPoly._raw(self.ring, terms)

    def substitute(self, images: Sequence["MPoly"]) -> "MPoly":
        """Morphisme d'anneaux x_i -> images[i] (toutes dans un même anneau cible)."""
        images = list(images)
        if len(images) != self.ring.nvars:
            raise ArityMismatch(
                f"{len(images)} images fournies pour {self.ring.nvars} variables."
            )
        if not images:
            return self
        target = images[0].ring
        for img in images:
            if img.ring != target:
                raise RingMismatch("Les images d'une substitution doivent partager un anneau.")
        # puissances mises en cache par variable
        powers = [{0: target.one()} for _ in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                k = max(k for k in cache if k < e)
                p = cache[k]
                for j in range(k + 1, e + 1):
                    p = p * images[i]
                    cache[j] = p
            return cache[e]

        result = target.zero()
        for m, c in self.terms.items():
            term = target.const(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            result = result + term
        return result

    def evaluate(self, point: Sequence) -> Fraction:
        point = [to_rat(v) for v in point]
        if len(point) != self.ring.nvars:
            raise ArityMismatch(f"Point de dimension {len(point)} pour {self.ring.nvars} variables.")
        total = Fraction(0)
        for m, c in self.terms.items():
            v = c
            for x, e in zip(point, m):
                if e:
                    v *= x**e
            total += v
        return total

    def translate(self, point: Sequence) -> "MPoly":
        """f(x + p) : amène le point p à l'origine."""
        point = [to_rat(v) for v in point]
        if len(point) != self.ring.nvars:
            raise ArityMismatch(f"Point de dimension {len(point)} pour {self.ring.nvars} variables.")
        if not any(point):
            return self
        gens = self.ring.gens()
        return self.substitute([g + v for g, v in zip(gens, point)])

    def change_ring(self, ring: PolyRing, index_map: Sequence[int]) -> "MPoly":
        """Réinterprète dans `ring` : la variable i devient index_map[i]."""
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * ring.nvars
            for i, e in enumerate(m):
                if e:
                    mm[index_map[i]] += e
            terms[tuple(mm)] = c
        return MPoly._raw(ring, terms)

    def homogenize(self, target: PolyRing, index_map: Sequence[int], hvar: int, degree: int = None) -> "MPoly":
        """Homogénéise au degré `degree` (par défaut le degré total) avec la variable hvar."""
        if degree is None:
            degree = self.degree() if self.terms else 0
        terms = {}
        for m, c in self.terms.items():
            mm = [0] * target.nvars
            for i, e in enumerate(m):
                mm[index_map[i]] += e
            mm[hvar] += degree - sum(m)
            terms[tuple(mm)] = c
        return MPoly._raw(target, terms)

    # --- Rendu ---
    def render(self) -> str:
        """Rendu déterministe : termes en ordre grevlex décroissant, `*` et `^` explicites."""
        if not self.terms:
            return "0"
        out = []
        for k, (m, c) in enumerate(self.sorted_terms()):
            mono = "*".join(
                name if e == 1 else f"{name}^{e}"
                for name, e in zip(self.ring.names, m)
                if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = format_rat(a)
            elif a == 1:
                body = mono
            else:
                body = f"{format_rat(a)}*{mono}"
            if k == 0:
                out.append(("-" if sign == "-" else "") + body)
            else:
                out.append(f" {sign} {body}")
        return "".join(out)

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"MPoly({self.render()!r})"

    # --- Passerelle sympy ---
    def to_sympy(self, symbols=None):
        symbols = symbols or sympy.symbols(self.ring.names)
        if self.ring.nvars == 1 and not isinstance(symbols, (list, tuple)):
            symbols = (symbols,)
        expr = sympy.Integer(0)
        for m, c in self.terms.items():
            term = sympy.Rational(c.numerator, c.denominator)
            for s, e in zip(symbols, m):
                if e:
                    term *= s**e
            expr += term
        return expr

    @classmethod
    def from_sympy(cls, expr, ring: PolyRing, symbols=None) -> "MPoly":
        symbols = symbols or sympy.symbols(ring.names)
        if ring.nvars == 1 and not isinstance(symbols, (list, tuple)):
            symbols = (symbols,)
        poly = sympy.Poly(sympy.expand(expr), *symbols, domain="QQ")
        terms = {tuple(m): to_rat(c) for m, c in poly.terms()}
        return cls(ring, terms)


def poly_arith(a: MPoly, b: MPoly, kind: str) -> MPoly:
    """Opération exacte add/sub/mul entre deux polynômes d'un même anneau."""
    if a.ring != b.ring:
        raise RingMismatch(f"Anneaux différents : {a.ring} et {b.ring}.")
    if kind == "add":
        return a + b
    if kind == "sub":
        return a - b
    if kind == "mul":
        return a * b
    raise ValueError(f"Opération inconnue : {kind}")


def partial_derivative(p: MPoly, var: int) -> MPoly:
    return p.diff(var)


def substitute(p: MPoly, images: Sequence[MPoly]) -> MPoly:
    return p.substitute(images)


def sympy_gcd(polys: Iterable[MPoly]) -> MPoly:
    """pgcd multivarié (sympy), normalisé unitaire en grevlex."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        raise ValueError("pgcd d'une liste vide.")
    ring = polys[0].ring
    symbols = sympy.symbols(ring.names)
    if ring.nvars == 1:
        symbols = (symbols,) if not isinstance(symbols, (list, tuple)) else symbols
    g = sympy.gcd_list([p.to_sympy(symbols) for p in polys], *symbols)
    return MPoly.from_sympy(g, ring, symbols).monic()
