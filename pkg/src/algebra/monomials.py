# src/algebra/monomials.py
from dataclasses import dataclass, field
from typing import Callable, Tuple

# Un monôme est un tuple d'exposants de longueur égale au nombre de variables.
Mono = Tuple[int, ...]


def mono_mul(a: Mono, b: Mono) -> Mono:
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a: Mono, b: Mono) -> bool:
    """a divise b."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a: Mono, b: Mono) -> Mono:
    """a / b, supposé exact."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a: Mono, b: Mono) -> Mono:
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a: Mono, b: Mono) -> Mono:
    return tuple(min(x, y) for x, y in zip(a, b))


def mono_coprime(a: Mono, b: Mono) -> bool:
    return all(x == 0 or y == 0 for x, y in zip(a, b))


def zero_mono(n: int) -> Mono:
    return (0,) * n


def unit_mono(n: int, i: int, power: int = 1) -> Mono:
    return tuple(power if k == i else 0 for k in range(n))


def grevlex_key(m: Mono):
    return (sum(m), tuple(-e for e in reversed(m)))


def local_key(m: Mono):
    # ordre local "ds" : degré total bas d'abord, puis grevlex
    return (-sum(m), tuple(-e for e in reversed(m)))


ORDER_KINDS = ("grevlex", "lex", "local", "elim")


@dataclass(frozen=True)
class MonomialOrder:
    """
    Ordre monomial : une clé telle que clé plus grande = monôme plus grand.

    kind: "grevlex", "lex", "local" (anti-gradué, pour les bases standard de Mora)
    ou "elim" (grevlex sur le bloc éliminé, puis grevlex sur le reste).
    permutation: ordre de priorité des variables (la première est la plus grande).
    """

    kind: str
    nvars: int
    permutation: Tuple[int, ...] = ()
    block: Tuple[int, ...] = ()
    _key: Callable = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if self.kind not in ORDER_KINDS:
            raise ValueError(f"Ordre monomial inconnu : {self.kind}")
        perm = self.permutation or tuple(range(self.nvars))
        if sorted(perm) != list(range(self.nvars)):
            raise ValueError(f"Permutation invalide {perm} pour {self.nvars} variables.")
        object.__setattr__(self, "permutation", tuple(perm))

        if self.kind == "grevlex":
            key = lambda m: grevlex_key(tuple(m[i] for i in perm))
        elif self.kind == "lex":
            key = lambda m: tuple(m[i] for i in perm)
        elif self.kind == "local":
            key = lambda m: local_key(tuple(m[i] for i in perm))
        else:
            block = tuple(self.block)
            rest = tuple(i for i in perm if i not in block)
            if not block:
                raise ValueError("L'ordre d'élimination exige un bloc non vide.")
            key = lambda m: (
                grevlex_key(tuple(m[i] for i in block)),
                grevlex_key(tuple(m[i] for i in rest)),
            )
        object.__setattr__(self, "_key", key)

    def key(self, m: Mono):
        return self._key(m)


def grevlex(nvars: int, permutation: Tuple[int, ...] = ()) -> MonomialOrder:
    return MonomialOrder("grevlex", nvars, permutation)


def lex(nvars: int, permutation: Tuple[int, ...] = ()) -> MonomialOrder:
    return MonomialOrder("lex", nvars, permutation)


def local_order(nvars: int) -> MonomialOrder:
    return MonomialOrder("local", nvars)


def elimination(nvars: int, block: Tuple[int, ...]) -> MonomialOrder:
    return MonomialOrder("elim", nvars, (), tuple(block))


def grevlex_last(nvars: int, last: int) -> MonomialOrder:
    """grevlex avec la variable `last` en dernière position (la plus petite)."""
    perm = tuple(i for i in range(nvars) if i != last) + (last,)
    return grevlex(nvars, perm)
