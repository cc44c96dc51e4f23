# src/algebra/rational.py
from fractions import Fraction
from numbers import Rational

# Les scalaires de folia sont des rationnels exacts (toujours réduits, dénominateur > 0).
Rat = Fraction

ZERO = Fraction(0)
ONE = Fraction(1)


def to_rat(value) -> Fraction:
    """
    Convertit un entier, un Fraction ou une chaîne "p/q" en rationnel exact.

    Les flottants sont refusés : aucune valeur approchée ne doit entrer dans le noyau.
    """
    if isinstance(value, bool):
        raise TypeError("Un booléen n'est pas un scalaire rationnel.")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, Rational):
        return Fraction(value.numerator, value.denominator)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except ValueError:
            raise ValueError(f"'{value}' n'est pas un rationnel valide.")
    if hasattr(value, "p") and hasattr(value, "q"):
        # sympy.Rational / sympy.Integer
        return Fraction(int(value.p), int(value.q))
    if hasattr(value, "numerator") and hasattr(value, "denominator"):
        # éléments de QQ (PythonMPQ, gmpy2.mpq)
        return Fraction(int(value.numerator), int(value.denominator))
    raise TypeError(f"Type scalaire non supporté : {type(value).__name__}")


def format_rat(q: Fraction) -> str:
    """Rendu texte : '3', '-1/2'."""
    q = to_rat(q)
    if q.denominator == 1:
        return str(q.numerator)
    return f"{q.numerator}/{q.denominator}"


def rat_to_json(q: Fraction) -> str:
    """Sérialisation stable des rapports : toujours 'num/den'."""
    q = to_rat(q)
    return f"{q.numerator}/{q.denominator}"

