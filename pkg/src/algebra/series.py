# src/algebra/series.py
from fractions import Fraction
from typing import Sequence

from src.algebra.polynomial import MPoly, PolyRing
from src.errors import CapMismatch, RingMismatch


class TruncSeries:
    """
    Série entière tronquée : polynôme dont tous les termes ont un degré total <= cap.

    Toute opération re-tronque ; deux séries ne se combinent que si elles partagent
    l'anneau et le degré de troncature.
    """

    __slots__ = ("ring", "cap", "body")

    def __init__(self, body: MPoly, cap: int):
        if cap < 0:
            raise ValueError(f"Degré de troncature négatif : {cap}")
        self.ring: PolyRing = body.ring
        self.cap = cap
        self.body = body.truncate(cap)

    @classmethod
    def zero(cls, ring: PolyRing, cap: int) -> "TruncSeries":
        return cls(ring.zero(), cap)

    @classmethod
    def one(cls, ring: PolyRing, cap: int) -> "TruncSeries":
        return cls(ring.one(), cap)

    def _check(self, other: "TruncSeries"):
        if other.ring != self.ring:
            raise RingMismatch(f"Séries d'anneaux différents : {self.ring} et {other.ring}.")
        if other.cap != self.cap:
            raise CapMismatch(f"Degrés de troncature différents : {self.cap} et {other.cap}.")

    def __add__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.body + other.body, self.cap)

    def __sub__(self, other: "TruncSeries") -> "TruncSeries":
        self._check(other)
        return TruncSeries(self.body - other.body, self.cap)

    def __neg__(self) -> "TruncSeries":
        return TruncSeries(-self.body, self.cap)

    def __mul__(self, other) -> "TruncSeries":
        if not isinstance(other, TruncSeries):
            return TruncSeries(self.body.scale(other), self.cap)
        self._check(other)
        cap = self.cap
        terms = {}
        for m1, c1 in self.body.terms.items():
            d1 = sum(m1)
            for m2, c2 in other.body.terms.items():
                if d1 + sum(m2) > cap:
                    continue
                m = tuple(a + b for a, b in zip(m1, m2))
                v = terms.get(m, 0) + c1 * c2
                if v:
                    terms[m] = v
                else:
                    terms.pop(m, None)
        return TruncSeries(MPoly(self.ring, terms), cap)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "TruncSeries":
        result = TruncSeries.one(self.ring, self.cap)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        return (
            isinstance(other, TruncSeries)
            and self.cap == other.cap
            and self.body == other.body
        )

    def __hash__(self):
        return hash((self.cap, self.body))

    def constant_term(self) -> Fraction:
        return self.body.constant_term()

    def inverse(self) -> "TruncSeries":
        """Inverse d'une unité u = c(1 + v) : c^-1 * somme des (-v)^k, k <= cap."""
        c = self.constant_term()
        if c == 0:
            raise ZeroDivisionError("Seule une série de terme constant non nul est inversible.")
        v = TruncSeries((self.body - self.ring.const(c)).scale(1 / c), self.cap)
        term = TruncSeries.one(self.ring, self.cap)
        total = TruncSeries.one(self.ring, self.cap)
        minus_v = -v
        for _ in range(self.cap):
            term = term * minus_v
            if term.body.is_zero():
                break
            total = total + term
        return total * (1 / c)

    def compose(self, images: Sequence[MPoly], target: PolyRing = None) -> "TruncSeries":
        """Composition avec des images sans terme constant (ordre >= 1), tronquée au même cap."""
        images = list(images)
        for img in images:
            if img.constant_term() != 0:
                raise ValueError("Les images d'une composition de séries doivent s'annuler en 0.")
        target = target or images[0].ring
        images = [TruncSeries(img, self.cap) for img in images]
        result = TruncSeries.zero(target, self.cap)
        for m, c in self.body.terms.items():
            term = TruncSeries(target.const(c), self.cap)
            for img, e in zip(images, m):
                if e:
                    term = term * (img**e)
            result = result + term
        return result

    def coefficient(self, m) -> Fraction:
        return self.body.coefficient(m)

    def render(self) -> str:
        return f"{self.body.render()} + O({self.cap + 1})"

    def __repr__(self):
        return f"TruncSeries({self.render()!r})"


def series_arith(a: TruncSeries, b: TruncSeries, kind: str) -> TruncSeries:
    """add/mul de deux séries tronquées de même anneau et même cap."""
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    raise ValueError(f"Opération inconnue : {kind}")

