# src/residues/characteristic.py
"""
Classes caractéristiques tronquées dans Q[h]/h^(n+1) : classes de Chern des fibrés
associés à un feuilletage, caractère de Chern, classe de Todd de P^n et
Hirzebruch-Riemann-Roch.
"""
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from scipy.special import factorial

from src.algebra.rational import format_rat, to_rat
from src.errors import OddDegree


@dataclass(frozen=True)
class TruncCohElem:
    """
    Élément de Q[h]/h^(n+1) ; coeffs[k] est le coefficient de h^k.
    """

    n: int
    coeffs: Tuple[Fraction, ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError(f"Dimension ambiante négative : {self.n}")
        values = [to_rat(c) for c in self.coeffs][: self.n + 1]
        values += [Fraction(0)] * (self.n + 1 - len(values))
        object.__setattr__(self, "coeffs", tuple(values))

    @classmethod
    def of(cls, n: int, *coeffs) -> "TruncCohElem":
        return cls(n, tuple(coeffs))

    @classmethod
    def one(cls, n: int) -> "TruncCohElem":
        return cls(n, (1,))

    def _check(self, other: "TruncCohElem"):
        if other.n != self.n:
            raise ValueError(f"Troncatures différentes : h^{self.n + 1} et h^{other.n + 1}.")

    def __add__(self, other: "TruncCohElem") -> "TruncCohElem":
        self._check(other)
        return TruncCohElem(self.n, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "TruncCohElem") -> "TruncCohElem":
        self._check(other)
        return TruncCohElem(self.n, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other) -> "TruncCohElem":
        if not isinstance(other, TruncCohElem):
            c = to_rat(other)
            return TruncCohElem(self.n, tuple(c * a for a in self.coeffs))
        self._check(other)
        out = [Fraction(0)] * (self.n + 1)
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j in range(self.n + 1 - i):
                out[i + j] += a * other.coeffs[j]
        return TruncCohElem(self.n, tuple(out))

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncCohElem":
        result = TruncCohElem.one(self.n)
        for _ in range(k):
            result = result * self
        return result

    def inverse(self) -> "TruncCohElem":
        """Inverse d'un élément de terme constant non nul."""
        a0 = self.coeffs[0]
        if a0 == 0:
            raise ZeroDivisionError("Seul un élément de terme constant non nul est inversible.")
        inv = [1 / a0]
        for k in range(1, self.n + 1):
            s = sum(self.coeffs[i] * inv[k - i] for i in range(1, k + 1))
            inv.append(-s / a0)
        return TruncCohElem(self.n, tuple(inv))

    def top(self) -> Fraction:
        return self.coeffs[self.n]

    def render(self) -> str:
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            body = format_rat(abs(c))
            if k:
                power = "h" if k == 1 else f"h^{k}"
                if abs(c) == 1:
                    body = power
                elif c.denominator != 1:
                    body = f"({body}){power}"
                else:
                    body = f"{body}{power}"
            parts.append((sign, body))
        if not parts:
            return "0"
        first_sign, first = parts[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in parts[1:]:
            text += f" {sign} {body}"
        return text

    def __str__(self):
        return self.render()


# --- Feuilletages ---
def chern_radial(d: int) -> TruncCohElem:
    """
    (1 + ((d+2)/2) h)² dans Q[h]/h^4, vérifié égal à 1 + (d+2)h + ((d+2)²/4)h².

    Lève:
        OddDegree: d impair ((d+2)/2 n'est pas entier).
    """
    if d % 2:
        raise OddDegree(
            f"Degré {d} impair : (d+2)/2 = {d + 2}/2 n'est pas entier, le fibré de type radial "
            "n'a pas de racine carrée entière."
        )
    half = TruncCohElem.of(3, 1, Fraction(d + 2, 2))
    square = half * half
    expected = TruncCohElem.of(3, 1, d + 2, Fraction((d + 2) ** 2, 4))
    if square != expected:
        raise ArithmeticError(f"(1 + {d + 2}/2 h)² = {square} ≠ {expected}")
    return square


@dataclass(frozen=True)
class KupkaChernData:
    """
    c(V) = 1 + (d+2)h + K h² et le tordu E = V(−(d+2)/2), c1(E) = 0.
    """

    degree: int
    kupka_degree: int
    c_V: TruncCohElem
    c2_E: Fraction

    @property
    def radial(self) -> bool:
        return self.c2_E == 0


def chern_kupka(d: int, kupka_degree: int) -> KupkaChernData:
    """
    Lève:
        OddDegree: d impair (le tordu par (d+2)/2 n'existe pas).
    """
    if d % 2:
        raise OddDegree(f"Degré {d} impair : la torsion par −(d+2)/2 n'est pas entière.")
    c_V = TruncCohElem.of(3, 1, d + 2, kupka_degree)
    c2_E = Fraction(kupka_degree) - Fraction((d + 2) ** 2, 4)
    return KupkaChernData(d, kupka_degree, c_V, c2_E)


# --- Caractère de Chern, Todd, Riemann-Roch ---
def _power_sums(classes: Sequence, n: int):
    c = [Fraction(0)] * (n + 1)
    for i, v in enumerate(classes[:n], start=1):
        c[i] = to_rat(v)
    p = [Fraction(0)] * (n + 1)
    for k in range(1, n + 1):
        s = Fraction((-1) ** (k - 1) * k) * c[k]
        for i in range(1, k):
            s += (-1) ** (i - 1) * c[i] * p[k - i]
        p[k] = s
    return p


def chern_character(rank: int, classes: Sequence, n: int) -> TruncCohElem:
    """ch = rang + Σ p_k / k! h^k, les sommes de Newton p_k étant tirées des c_i."""
    p = _power_sums(list(classes), n)
    coeffs = [Fraction(rank)]
    for k in range(1, n + 1):
        coeffs.append(p[k] / int(factorial(k, exact=True)))
    return TruncCohElem(n, tuple(coeffs))


def todd_projective(n: int) -> TruncCohElem:
    """Td(P^n) = (h / (1 − e^(−h)))^(n+1)."""
    series = [Fraction((-1) ** k, int(factorial(k + 1, exact=True))) for k in range(n + 1)]
    return TruncCohElem(n, tuple(series)).inverse() ** (n + 1)


def hirzebruch_riemann_roch(rank: int, classes: Sequence, n: int) -> Fraction:
    """χ = [ch · Td(P^n)]_n."""
    return (chern_character(rank, classes, n) * todd_projective(n)).top()


def euler_char_rrh(c1, c2) -> Fraction:
    """χ d'un fibré de rang 2 sur P^2 de classes (c1, c2)."""
    return hirzebruch_riemann_roch(2, [c1, c2], 2)
