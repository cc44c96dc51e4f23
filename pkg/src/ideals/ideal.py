# src/ideals/ideal.py
from typing import Dict, Iterable, Optional, Sequence, Tuple

from core.settings import FoliaSettings
from src.algebra.monomials import MonomialOrder, grevlex
from src.algebra.polynomial import MPoly, PolyRing
from src.errors import RingMismatch
from src.ideals.groebner import GroebnerBasis, groebner


class Ideal:
    """
    Idéal de Q[x] donné par des générateurs non nuls.

    Les bases de Gröbner sont calculées à la demande et mises en cache par ordre ;
    le cache ne change jamais l'idéal représenté.
    """

    def __init__(self, ring: PolyRing, generators: Iterable[MPoly] = ()):
        gens = []
        for g in generators:
            if g.ring != ring:
                raise RingMismatch(f"Générateur {g} hors de l'anneau {ring}.")
            if not g.is_zero() and g not in gens:
                gens.append(g)
        self.ring = ring
        self.generators: Tuple[MPoly, ...] = tuple(gens)
        self._gb_cache: Dict[MonomialOrder, GroebnerBasis] = {}

    @classmethod
    def of(cls, *generators: MPoly) -> "Ideal":
        if not generators:
            raise ValueError("Ideal.of exige au moins un générateur (utiliser Ideal(ring)).")
        return cls(generators[0].ring, generators)

    @classmethod
    def unit(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, [ring.one()])

    @classmethod
    def irrelevant(cls, ring: PolyRing) -> "Ideal":
        return cls(ring, ring.gens())

    def groebner(self, order: Optional[MonomialOrder] = None, settings: Optional[FoliaSettings] = None) -> GroebnerBasis:
        order = order or grevlex(self.ring.nvars)
        gb = self._gb_cache.get(order)
        if gb is None:
            if self.is_zero():
                gb = GroebnerBasis(self.ring, order, [])
            else:
                gb = groebner(self.generators, order, settings)
            self._gb_cache[order] = gb
        return gb

    def reduced(self, order: Optional[MonomialOrder] = None) -> "Ideal":
        """Même idéal, générateurs = base de Gröbner réduite."""
        return Ideal(self.ring, self.groebner(order).basis)

    # --- Prédicats ---
    def is_zero(self) -> bool:
        return not self.generators

    def is_unit(self) -> bool:
        return not self.is_zero() and self.groebner().is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.generators)

    def contains(self, p: MPoly) -> bool:
        if p.is_zero():
            return True
        if self.is_zero():
            return False
        return self.groebner().contains(p)

    def first_non_member(self, polys: Iterable[MPoly]) -> Optional[MPoly]:
        for p in polys:
            if not self.contains(p):
                return p
        return None

    def is_subset(self, other: "Ideal") -> bool:
        """self ⊆ other."""
        return other.first_non_member(self.generators) is None

    def __eq__(self, other):
        if not isinstance(other, Ideal) or other.ring != self.ring:
            return False
        return self.groebner().basis == other.groebner().basis

    def __hash__(self):
        return hash((self.ring, self.groebner().basis))

    # --- Opérations ---
    def __add__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch("Somme d'idéaux d'anneaux différents.")
        return Ideal(self.ring, self.generators + other.generators)

    def __mul__(self, other: "Ideal") -> "Ideal":
        if other.ring != self.ring:
            raise RingMismatch("Produit d'idéaux d'anneaux différents.")
        return Ideal(self.ring, [f * g for f in self.generators for g in other.generators])

    def map(self, images: Sequence[MPoly]) -> "Ideal":
        """Image par la substitution x_i -> images[i]."""
        target = images[0].ring
        return Ideal(target, [g.substitute(images) for g in self.generators])

    def translate(self, point) -> "Ideal":
        return Ideal(self.ring, [g.translate(point) for g in self.generators])

    def render(self) -> str:
        return "(" + ", ".join(g.render() for g in self.generators) + ")"

    def __str__(self):
        return self.render()

    def __repr__(self):
        return f"Ideal{self.render()}"
