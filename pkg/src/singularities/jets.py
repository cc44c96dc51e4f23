# src/singularities/jets.py
"""Trichotomie au niveau du 1-jet d'un germe singulier de 1-forme."""
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Optional, Tuple

from src.algebra.linear import matrix_rank
from src.errors import NotSingularPoint
from src.forms.exterior import PolyForm

CASE1_PRODUCT = "case1_product"
CASE2OR3_XDX = "case2or3_xdx"
JET1_ZERO = "jet1_zero"
OUTSIDE_HYPOTHESES = "outside_hypotheses"

_VERDICTS = {0: JET1_ZERO, 1: CASE2OR3_XDX, 2: CASE1_PRODUCT}


@dataclass(frozen=True)
class JetClass:
    """
    Verdict sur j1 omega.

    rank est la codimension du lieu singulier de j1 omega ; note précise les cas
    que le 1-jet ne sépare pas.
    """

    verdict: str
    witness: PolyForm
    rank: int
    matrix: Tuple[Tuple[Fraction, ...], ...]
    note: Optional[str] = None


def linear_part_matrix(alpha: PolyForm) -> List[List[Fraction]]:
    """M[i][j] = coefficient de x_j dans le coefficient de dx_i."""
    n = alpha.ring.nvars
    rows = []
    for a in alpha.coefficients():
        rows.append([a.coefficient(tuple(int(k == j) for k in range(n))) for j in range(n)])
    return rows


def jet_classify(alpha: PolyForm) -> JetClass:
    if alpha.grade != 1:
        raise ValueError("jet_classify exige une 1-forme.")
    for k, a in enumerate(alpha.coefficients()):
        if a.constant_term() != 0:
            raise NotSingularPoint(
                f"L'origine n'est pas singulière : le coefficient de d{alpha.ring.names[k]} vaut "
                f"{a.constant_term()} en 0."
            )
    matrix = linear_part_matrix(alpha)
    rank = matrix_rank(matrix)
    witness = PolyForm(
        alpha.ring, 1, {k: c.homogeneous_component(1) for k, c in alpha.components.items()}
    )
    verdict = _VERDICTS.get(rank, OUTSIDE_HYPOTHESES)
    note = None
    if verdict == CASE2OR3_XDX:
        note = (
            "cas (2) et (3) non séparables au niveau du 1-jet ; une intégrale première "
            "tronquée n'est qu'un indice du cas (3)"
        )
    elif verdict == OUTSIDE_HYPOTHESES:
        note = f"partie linéaire de rang {rank} : lieu singulier de j1 de codimension {rank}"
    return JetClass(verdict, witness, rank, tuple(tuple(r) for r in matrix), note)
