# src/algebra/linear.py
"""Algèbre linéaire exacte sur Q (DomainMatrix de sympy)."""
from fractions import Fraction
from typing import List, Optional, Sequence, Tuple

import numpy as np
from sympy import QQ
from sympy.polys.matrices import DomainMatrix

from src.algebra.rational import to_rat

Matrix = List[List[Fraction]]


def to_domain_matrix(rows: Sequence[Sequence], ncols: int = None) -> DomainMatrix:
    rows = [list(r) for r in rows]
    nrows = len(rows)
    if ncols is None:
        ncols = len(rows[0]) if rows else 0
    data = [[QQ(to_rat(v).numerator, to_rat(v).denominator) for v in r] for r in rows]
    return DomainMatrix(data, (nrows, ncols), QQ)


def from_domain_matrix(M: DomainMatrix) -> Matrix:
    return [[to_rat(v) for v in row] for row in M.to_list()]


def matrix_rank(rows: Sequence[Sequence]) -> int:
    if not rows or not len(rows[0]):
        return 0
    return int(to_domain_matrix(rows).rank())


def rref(rows: Sequence[Sequence]) -> Tuple[Matrix, Tuple[int, ...]]:
    if not rows:
        return [], ()
    R, pivots = to_domain_matrix(rows).rref()
    return from_domain_matrix(R), tuple(pivots)


def solve_linear(rows: Sequence[Sequence], rhs: Sequence) -> Optional[List[Fraction]]:
    """
    Solution particulière de A·x = b (variables libres mises à zéro).

    Retourne None si le système est incompatible.
    """
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    if nrows == 0:
        return [Fraction(0)] * ncols
    augmented = [list(r) + [rhs[i]] for i, r in enumerate(rows)]
    R, pivots = rref(augmented)
    if ncols in pivots:
        return None
    solution = [Fraction(0)] * ncols
    for row_index, col in enumerate(pivots):
        solution[col] = R[row_index][ncols]
    return solution


def nullspace(rows: Sequence[Sequence], ncols: int = None) -> Matrix:
    """Base du noyau (vecteurs lus sur la forme échelonnée réduite)."""
    ncols = len(rows[0]) if rows else (ncols or 0)
    if not rows:
        return [[Fraction(int(i == j)) for j in range(ncols)] for i in range(ncols)]
    R, pivots = rref(rows)
    basis = []
    for free in (c for c in range(ncols) if c not in pivots):
        vec = [Fraction(0)] * ncols
        vec[free] = Fraction(1)
        for row_index, col in enumerate(pivots):
            vec[col] = -R[row_index][free]
        basis.append(vec)
    return basis


def determinant(rows: Sequence[Sequence]) -> Fraction:
    return to_rat(to_domain_matrix(rows).det())


def inverse(rows: Sequence[Sequence]) -> Matrix:
    return from_domain_matrix(to_domain_matrix(rows).inv())


def charpoly_coefficients(rows: Sequence[Sequence]) -> List[Fraction]:
    """
    Coefficients (sigma_1, ..., sigma_n) du polynôme caractéristique
    t^n - sigma_1 t^(n-1) + sigma_2 t^(n-2) - ...
    """
    coeffs = [to_rat(c) for c in to_domain_matrix(rows).charpoly()]
    return [c if k % 2 == 0 else -c for k, c in enumerate(coeffs)][1:]


def mat_vec(rows: Sequence[Sequence], vec: Sequence) -> List[Fraction]:
    return [sum((to_rat(a) * to_rat(b) for a, b in zip(r, vec)), Fraction(0)) for r in rows]


def random_unimodular_matrix(n: int, rng: np.random.Generator, steps: int = 6) -> Matrix:
    """
    Matrice entière de déterminant ±1 : produit d'opérations élémentaires
    et d'une permutation tirées par le générateur numpy.
    """
    M = np.eye(n, dtype=np.int64)
    M = M[rng.permutation(n)]
    for _ in range(steps):
        i, j = rng.choice(n, size=2, replace=False)
        k = int(rng.integers(-2, 3))
        M[i] = M[i] + k * M[j]
    return [[Fraction(int(v)) for v in row] for row in M]


def random_invertible_matrix(n: int, rng: np.random.Generator, low: int = -3, high: int = 4) -> Matrix:
    """Matrice entière inversible sur Q, coefficients dans [low, high)."""
    while True:
        M = rng.integers(low, high, size=(n, n))
        rows = [[Fraction(int(v)) for v in row] for row in M]
        if determinant(rows) != 0:
            return rows
