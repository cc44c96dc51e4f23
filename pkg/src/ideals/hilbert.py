# src/ideals/hilbert.py
"""
Série et polynôme de Hilbert d'un idéal homogène, à partir des monômes de tête
d'une base grevlex : numérateur N(t) de HS = N(t)/(1-t)^n, simplifié en h(t)/(1-t)^r.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations_with_replacement
from typing import List, Optional, Sequence, Tuple

from scipy.special import comb, factorial

from core.settings import FoliaSettings
from src.algebra.monomials import Mono, grevlex, mono_div, mono_divides, mono_gcd
from src.algebra.rational import format_rat
from src.errors import NonHomogeneous, NotZeroDimensional
from src.ideals.ideal import Ideal
from src.ideals.saturation import saturate_irrelevant

logger = logging.getLogger(__name__)

IntPoly = List[int]


# --- Polynômes entiers en t (listes de coefficients, degré croissant) ---
def _trim(p: IntPoly) -> IntPoly:
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _sub(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * max(len(a), len(b))
    for i, v in enumerate(a):
        out[i] += v
    for i, v in enumerate(b):
        out[i] -= v
    return _trim(out)


def _mul(a: IntPoly, b: IntPoly) -> IntPoly:
    out = [0] * (len(a) + len(b) - 1)
    for i, u in enumerate(a):
        if u:
            for j, v in enumerate(b):
                out[i + j] += u * v
    return _trim(out)


def _shift(a: IntPoly, k: int) -> IntPoly:
    return [0] * k + list(a)


def _minimalize(monos: Sequence[Mono]) -> List[Mono]:
    unique = sorted(set(monos), key=lambda m: (sum(m), m))
    minimal: List[Mono] = []
    for m in unique:
        if not any(mono_divides(g, m) for g in minimal):
            minimal.append(m)
    return minimal


def hilbert_numerator(monos: Sequence[Mono]) -> IntPoly:
    """
    N(t) tel que la série de Hilbert de Q[x]/(monos) soit N(t)/(1-t)^n.

    Récurrence : N(M + (m)) = N(M) - t^deg(m) · N(M : m).
    """
    gens = _minimalize(monos)
    if not gens:
        return [1]
    pairwise_coprime = all(
        not any(a and b for a, b in zip(gens[i], gens[j]))
        for i in range(len(gens))
        for j in range(i + 1, len(gens))
    )
    if pairwise_coprime:
        result = [1]
        for m in gens:
            result = _mul(result, _sub([1], _shift([1], sum(m))))
        return result
    last = gens[-1]
    rest = gens[:-1]
    colon = [mono_div(g, mono_gcd(g, last)) for g in rest]
    return _sub(hilbert_numerator(rest), _shift(hilbert_numerator(colon), sum(last)))


def _divide_one_minus_t(p: IntPoly) -> IntPoly:
    # p(1) = 0 : p = (1 - t) q ; q_k = sum_{i<=k} p_i
    q = []
    acc = 0
    for v in p[:-1]:
        acc += v
        q.append(acc)
    return _trim(q) if q else [0]


def _binomial_poly(shift: int, r: int) -> List[Fraction]:
    """Coefficients (croissants) en k de C(k - shift + r - 1, r - 1)."""
    poly = [Fraction(1)]
    for i in range(1, r):
        # facteur (k - shift + i)
        root = Fraction(-shift + i)
        nxt = [Fraction(0)] * (len(poly) + 1)
        for d, c in enumerate(poly):
            nxt[d] += c * root
            nxt[d + 1] += c
        poly = nxt
    denom = int(factorial(r - 1, exact=True)) if r > 1 else 1
    return [c / denom for c in poly]


@dataclass(frozen=True)
class HilbertData:
    """
    Invariants de Hilbert d'un schéma projectif.

    Attributs:
        dim_proj (int): Dimension projective (-1 pour le schéma vide).
        degree (int): Degré du schéma (0 si vide).
        hilbert_poly (tuple[Fraction]): Coefficients croissants de P(k).
        p_a (int | None): Genre arithmétique 1 - P(0), seulement si dim_proj = 1.
        numerator (tuple[int]): h(t) avec HS = h(t)/(1-t)^(dim_proj+1).
        nvars (int): Nombre de variables de l'anneau ambiant.
        full_numerator (tuple[int]): N(t) avec HS = N(t)/(1-t)^nvars.
    """

    dim_proj: int
    degree: int
    hilbert_poly: Tuple[Fraction, ...]
    p_a: Optional[int]
    numerator: Tuple[int, ...]
    nvars: int
    full_numerator: Tuple[int, ...]

    def hilbert_polynomial(self, k: int) -> Fraction:
        return sum((c * k**i for i, c in enumerate(self.hilbert_poly)), Fraction(0))

    def hilbert_function(self, k: int) -> int:
        """dim_Q (Q[x]/I)_k, lu sur la série N(t)/(1-t)^n."""
        n = self.nvars
        total = 0
        for j, c in enumerate(self.full_numerator):
            if c and k - j >= 0:
                total += c * int(comb(k - j + n - 1, n - 1, exact=True))
        return total

    def render_polynomial(self, var: str = "k") -> str:
        parts = []
        for i in range(len(self.hilbert_poly) - 1, -1, -1):
            c = self.hilbert_poly[i]
            if c == 0:
                continue
            a = abs(c)
            if i == 0:
                body = format_rat(a)
            else:
                mono = var if i == 1 else f"{var}^{i}"
                body = mono if a == 1 else f"{format_rat(a)}*{mono}"
            if not parts:
                parts.append(("-" if c < 0 else "") + body)
            else:
                parts.append((" - " if c < 0 else " + ") + body)
        return "".join(parts) if parts else "0"


def hilbert_data(I: Ideal, saturate: bool = False, settings: Optional[FoliaSettings] = None) -> HilbertData:
    """
    Données de Hilbert d'un idéal homogène (supposé saturé, sauf si saturate=True).

    Returns:
        HilbertData: dimension, degré, polynôme de Hilbert et genre arithmétique.
    """
    if not I.is_homogeneous():
        raise NonHomogeneous(f"L'idéal {I} n'est pas homogène.")
    if saturate:
        I = saturate_irrelevant(I, settings)
    n = I.ring.nvars
    if I.is_zero():
        lead: List[Mono] = []
    else:
        lead = I.groebner(grevlex(n), settings).lead_monomials()
    full = hilbert_numerator(lead)
    h = list(full)
    r = n
    while r > 0 and sum(h) == 0 and any(h):
        h = _divide_one_minus_t(h)
        r -= 1
    if not any(h):
        # idéal unité : série nulle
        r = 0
    dim_proj = r - 1
    degree = sum(h) if r >= 1 else 0

    poly = [Fraction(0)]
    if r >= 1:
        for j, hj in enumerate(h):
            if not hj:
                continue
            term = _binomial_poly(j, r)
            if len(term) > len(poly):
                poly += [Fraction(0)] * (len(term) - len(poly))
            for d, c in enumerate(term):
                poly[d] += hj * c
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()

    p_a = None
    if dim_proj == 1:
        p_a_value = 1 - poly[0]
        p_a = int(p_a_value) if p_a_value.denominator == 1 else None
    logger.debug("Hilbert : dim %d, degré %d, P = %s.", dim_proj, degree, poly)
    return HilbertData(dim_proj, degree, tuple(poly), p_a, tuple(h), n, tuple(full))


def standard_monomial_count(lead: Sequence[Mono], nvars: int, k: int) -> int:
    """Comptage direct des monômes de degré k hors de l'idéal des monômes de tête."""
    count = 0
    for combo in combinations_with_replacement(range(nvars), k):
        m = [0] * nvars
        for i in combo:
            m[i] += 1
        m = tuple(m)
        if not any(mono_divides(g, m) for g in lead):
            count += 1
    return count


def _standard_monomials(lead: Sequence[Mono], nvars: int) -> List[Mono]:
    """Monômes hors de l'idéal engendré par lead (supposé de colongueur finie)."""
    bounds = []
    for i in range(nvars):
        powers = [g[i] for g in lead if all(e == 0 for j, e in enumerate(g) if j != i) and g[i] > 0]
        if not powers:
            raise NotZeroDimensional(f"Aucune puissance pure de la variable {i} parmi les têtes.")
        bounds.append(min(powers))
    out: List[Mono] = []
    stack: List[Mono] = [(0,) * nvars]
    seen = set(stack)
    while stack:
        m = stack.pop()
        if any(mono_divides(g, m) for g in lead):
            continue
        out.append(m)
        for i in range(nvars):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt[i] < bounds[i] and nxt not in seen:
                seen.add(nxt)
                stack.append(nxt)
    return out


def count_standard_monomials(lead: Sequence[Mono], nvars: int) -> int:
    return len(_standard_monomials(lead, nvars))


def zero_dim_degree(I: Ideal, projective: bool = False, settings: Optional[FoliaSettings] = None) -> int:
    """
    Longueur d'un schéma de dimension zéro.

    Affine : dim_Q Q[x]/I (monômes standard d'une base grevlex).
    Projectif : polynôme de Hilbert constant de l'idéal saturé.
    """
    if projective:
        data = hilbert_data(I, saturate=True, settings=settings)
        if data.dim_proj > 0:
            raise NotZeroDimensional(
                f"Le schéma projectif défini par {I} est de dimension {data.dim_proj}."
            )
        return data.degree
    if I.is_zero():
        raise NotZeroDimensional("L'idéal nul n'est pas de dimension zéro.")
    gb = I.groebner(grevlex(I.ring.nvars), settings)
    if gb.is_unit():
        return 0
    try:
        return count_standard_monomials(gb.lead_monomials(), I.ring.nvars)
    except NotZeroDimensional:
        raise NotZeroDimensional(f"L'idéal affine {I} n'est pas de dimension zéro.")
