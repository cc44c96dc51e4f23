# src/errors.py
"""
Erreurs de folia.

Chaque échec identifiable porte un code stable (utilisé par la CLI et les rapports JSON)
et un message en français qui nomme l'objet fautif.
"""


class FoliaError(ValueError):
    """Erreur de base : entrée invalide ou calcul impossible."""

    code = "folia_error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def __str__(self) -> str:
        return self.message


# --- Noyau algébrique ---
class RingMismatch(FoliaError):
    code = "ring_mismatch"


class ArityMismatch(FoliaError):
    code = "arity_mismatch"


class CapMismatch(FoliaError):
    code = "cap_mismatch"


class EmptyInput(FoliaError):
    code = "empty_input"


class NonHomogeneous(FoliaError):
    code = "non_homogeneous"


class InexactDivision(FoliaError):
    code = "inexact_division"


class SingularSystem(FoliaError):
    code = "singular_system"


# --- Calcul extérieur et feuilletages ---
class GradeOverflow(FoliaError):
    code = "grade_overflow"


class EulerConditionFailed(FoliaError):
    code = "euler_condition"


class NotIntegrable(FoliaError):
    code = "not_integrable"


class CodimensionOnePart(FoliaError):
    code = "codimension_one"


class DegreeMismatch(FoliaError):
    code = "degree_mismatch"


# --- Idéaux ---
class NotZeroDimensional(FoliaError):
    code = "not_zero_dimensional"


class UndefinedGenus(FoliaError):
    code = "undefined_genus"


# --- Singularités ---
class ComponentContainment(FoliaError):
    code = "component_containment"


class ParametrizationMismatch(FoliaError):
    code = "parametrization_mismatch"


class NotSingularPoint(FoliaError):
    code = "not_singular_point"


class ComponentEntirelyNonKupka(FoliaError):
    code = "component_entirely_non_kupka"


class NotIsolated(FoliaError):
    code = "not_isolated"


class SingularGerm(FoliaError):
    code = "singular_germ"


class UnsolvableSystem(FoliaError):
    code = "unsolvable_system"


class ResidualNotZeroDimensional(FoliaError):
    code = "residual_not_zero_dimensional"


# --- Résidus ---
class OriginNotAZero(FoliaError):
    code = "origin_not_a_zero"


class DegenerateJacobian(FoliaError):
    code = "degenerate_jacobian"


class ExponentCapExceeded(FoliaError):
    code = "exponent_cap_exceeded"


class OddDegree(FoliaError):
    code = "odd_degree"


# --- Constructeurs de familles ---
class WeightCondition(FoliaError):
    code = "weight_condition"


class DescentViolation(FoliaError):
    code = "descent_violation"


class NonReducedPencil(FoliaError):
    code = "non_reduced_pencil"


class NotCoprime(FoliaError):
    code = "not_coprime"


# --- Langage .fol et CLI ---
class FormSyntaxError(FoliaError):
    code = "syntax_error"

    def __init__(self, message: str, line: int = 0, column: int = 0):
        self.line = line
        self.column = column
        if line:
            message = f"ligne {line}, colonne {column} : {message}"
        super().__init__(message)


class UndeclaredVariable(FormSyntaxError):
    code = "undeclared_variable"


class NonlinearDifferential(FormSyntaxError):
    code = "nonlinear_differential"


class UnknownComponent(FoliaError):
    code = "unknown_component"


class ComputationCancelled(FoliaError):
    code = "cancelled"
