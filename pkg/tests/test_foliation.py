import unittest
import sys
import os
from fractions import Fraction

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.algebra.linear import random_unimodular_matrix
from src.algebra.polynomial import PolyRing
from src.errors import (
    ArityMismatch,
    CodimensionOnePart,
    DegreeMismatch,
    EmptyInput,
    EulerConditionFailed,
    NonHomogeneous,
    NotIntegrable,
    SingularSystem,
)
from src.forms.exterior import PolyForm, integrability_defect
from src.forms.families import build_logarithmic
from src.forms.foliation import (
    P3_RING,
    chart_point,
    chart_restrict,
    euler_identity_holds,
    first_nonzero_chart,
    linear_change,
    nonkupka_normal_form,
    rehomogenize,
    transform_point,
    validate_foliation,
)

x0, x1, x2, x3 = P3_RING.gens()
ZERO = P3_RING.zero()


def pencil_form():
    """x0 dx1 − x1 dx0 : le pinceau de plans par la droite x0 = x1 = 0."""
    return PolyForm.one_form([-x1, x0, ZERO, ZERO])


class TestValidateFoliation(unittest.TestCase):
    """
    Classe de tests pour la validation d'un feuilletage de P^3.
    """

    def test_pencil_is_valid(self):
        """
        Teste qu'un pinceau de plans est un feuilletage de degré 0.
        """
        F = validate_foliation(pencil_form(), 0)
        self.assertEqual(F.degree, 0, msg="Degré du pinceau")
        self.assertTrue(euler_identity_holds(F), msg="i_R dω = (d + 2) ω")
        self.assertEqual(F.d_omega_coefficients(), [2 * P3_RING.one()] + [ZERO] * 5, msg="dω = 2 dx0∧dx1")

    def test_rejections(self):
        """
        Teste chaque motif de refus, dans l'ordre des vérifications.
        """
        with self.assertRaises(ArityMismatch):
            validate_foliation(PolyForm.differential(PolyRing(("x", "y", "z")), 0), 0)
        with self.assertRaises(EmptyInput):
            validate_foliation(PolyForm.zero(P3_RING, 1), 0)
        with self.assertRaises(NonHomogeneous):
            validate_foliation(PolyForm.one_form([-x1, x0 + x0**2, ZERO, ZERO]), 0)
        with self.assertRaises(DegreeMismatch):
            validate_foliation(pencil_form(), 1)
        with self.assertRaises(EulerConditionFailed):
            validate_foliation(PolyForm.one_form([x0, ZERO, ZERO, ZERO]), 0)
        with self.assertRaises(NotIntegrable):
            validate_foliation(PolyForm.one_form([-x1, x0, -x3, x2]), 0)
        with self.assertRaises(CodimensionOnePart):
            validate_foliation(pencil_form().scale(x2), 1)


class TestCharts(unittest.TestCase):
    """
    Classe de tests pour les cartes affines et la réhomogénéisation.
    """

    def test_restrict_then_rehomogenize(self):
        """
        Teste que la réhomogénéisation redonne la forme à un facteur x_c près.
        """
        F = validate_foliation(pencil_form(), 0)
        self.assertEqual(rehomogenize(chart_restrict(F, 3), 3, P3_RING), F.omega.scale(x3), msg="Carte x3 = 1")
        self.assertEqual(rehomogenize(chart_restrict(F, 0), 0, P3_RING), F.omega, msg="Carte x0 = 1")

    def test_restricted_form_names(self):
        """
        Teste l'anneau affine de la carte : la variable de carte disparaît.
        """
        alpha = chart_restrict(pencil_form(), 2)
        self.assertEqual(alpha.ring.names, ("x0", "x1", "x3"), msg="Variables de la carte x2 = 1")
        self.assertEqual(alpha.render(), "(-x1)*dx0 + (x0)*dx1", msg="Restriction du pinceau")

    def test_chart_points(self):
        """
        Teste les coordonnées affines d'un point et le choix de la première carte.
        """
        self.assertEqual(chart_point([2, 4, 0, 6], 0), [2, 0, 3], msg="[2:4:0:6] dans x0 = 1")
        self.assertEqual(first_nonzero_chart([0, 0, 3, 1]), 2, msg="Première coordonnée non nulle")
        with self.assertRaises(ValueError):
            chart_point([0, 1, 0, 0], 0)
        with self.assertRaises(ValueError):
            first_nonzero_chart([0, 0, 0, 0])


class TestLinearChange(unittest.TestCase):
    """
    Classe de tests pour les changements de coordonnées linéaires.
    """

    def test_invariance_of_validity(self):
        """
        Teste qu'un changement unimodulaire aléatoire conserve validité et degré.
        """
        rng = np.random.default_rng(17)
        F = build_logarithmic([x0, x1, x2, x3], [1, 2, -1, -2])
        for _ in range(5):
            M = random_unimodular_matrix(4, rng)
            G = linear_change(F, M)
            self.assertEqual(G.degree, 2, msg="Degré conservé")
            self.assertTrue(euler_identity_holds(G), msg="Identité d'Euler conservée")

    def test_point_transport(self):
        """
        Teste que le point transporté est un zéro de la forme transformée.
        """
        F = validate_foliation(pencil_form(), 0)
        M = [[1, 1, 0, 0], [0, 1, 0, 0], [0, 0, 1, 2], [0, 0, 0, 1]]
        G = linear_change(F, M)
        q = transform_point(M, [0, 0, 1, 1])
        self.assertEqual(q, [0, 0, -1, 1], msg="M^-1 p")
        self.assertTrue(all(v == 0 for v in G.omega.evaluate(q).values()), msg="Le point reste singulier")

    def test_singular_matrix(self):
        """
        Teste le refus d'une matrice singulière.
        """
        F = validate_foliation(pencil_form(), 0)
        with self.assertRaises(SingularSystem):
            linear_change(F, [[1, 0, 0, 0], [1, 0, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])


class TestNormalForm(unittest.TestCase):
    """
    Classe de tests pour la forme normale x dx + g1(y)(1 + x g2(y)) dy.
    """

    def test_integrable(self):
        """
        Teste l'intégrabilité de la forme normale en trois variables.
        """
        ring = PolyRing(("x", "y", "z"))
        y = ring.var(1)
        omega = nonkupka_normal_form(ring, y**2, y + Fraction(1, 3))
        self.assertTrue(integrability_defect(omega).is_zero(), msg="ω∧dω = 0")
        self.assertEqual(omega.coefficient((0,)), ring.var(0), msg="Coefficient de dx")


if __name__ == "__main__":
    unittest.main()
