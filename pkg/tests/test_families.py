import unittest
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.errors import DescentViolation, NonHomogeneous, NonReducedPencil, NotCoprime, WeightCondition
from src.forms.exterior import PolyForm
from src.forms.families import build_logarithmic, build_pencil
from src.forms.foliation import P3_RING, euler_identity_holds

x0, x1, x2, x3 = P3_RING.gens()
ZERO = P3_RING.zero()


class TestLogarithmic(unittest.TestCase):
    """
    Classe de tests pour les feuilletages logarithmiques.
    """

    def test_tetrahedron(self):
        """
        Teste le feuilletage logarithmique des quatre plans de coordonnées (degré 2).
        """
        F = build_logarithmic([x0, x1, x2, x3], [1, 2, -1, -2])
        self.assertEqual(F.degree, 2, msg="Degré Σ deg F_i − 2")
        self.assertTrue(euler_identity_holds(F), msg="Identité d'Euler")
        self.assertEqual(F.omega.coefficient((0,)), x1 * x2 * x3, msg="λ_0 Π_{j≠0} F_j")
        self.assertEqual(F.omega.coefficient((3,)), -2 * x0 * x1 * x2, msg="λ_3 Π_{j≠3} F_j")

    def test_quadric_and_planes(self):
        """
        Teste deux plans et une quadrique lisse de poids (1, 1, −1).
        """
        Q = x0**2 + x1**2 + x2 * x3
        F = build_logarithmic([x0, x1, Q], [1, 1, -1])
        self.assertEqual(F.degree, 2, msg="1 + 1 + 2 − 2")

    def test_weight_conditions(self):
        """
        Teste les refus sur les poids : nombre, cardinal et somme pondérée.
        """
        with self.assertRaises(WeightCondition):
            build_logarithmic([x0, x1], [1])
        with self.assertRaises(WeightCondition):
            build_logarithmic([x0], [0])
        with self.assertRaises(WeightCondition):
            build_logarithmic([x0, x1], [1, 1])

    def test_hypersurface_conditions(self):
        """
        Teste les refus sur les hypersurfaces : non homogène, facteur commun.
        """
        with self.assertRaises(NonHomogeneous):
            build_logarithmic([x0 + x1**2, x1], [1, -1])
        with self.assertRaises(NotCoprime):
            build_logarithmic([x0, x0 * x1], [2, -1])


class TestPencil(unittest.TestCase):
    """
    Classe de tests pour les pinceaux (ramifiés) F^p / G^q.
    """

    def test_pencil_of_planes(self):
        """
        Teste le pinceau x0 / x1 : la forme x1 dx0 − x0 dx1 de degré 0.
        """
        F = build_pencil(x0, x1, 1, 1)
        self.assertEqual(F.degree, 0, msg="Degré 0")
        self.assertEqual(F.omega, PolyForm.one_form([x1, -x0, ZERO, ZERO]), msg="p G dF − q F dG")

    def test_branched_pencil(self):
        """
        Teste le pinceau ramifié x3^2 / (x0 x2 − x1^2 − x3^2) de degré 1.
        """
        F = build_pencil(x3, x0 * x2 - x1**2 - x3**2, 2, 1)
        self.assertEqual(F.degree, 1, msg="1 + 2 − 2")

    def test_rejections(self):
        """
        Teste les refus : exposants, facteur multiple, facteur commun.
        """
        with self.assertRaises(DescentViolation):
            build_pencil(x0, x1 * x2, 1, 1)
        with self.assertRaises(DescentViolation):
            build_pencil(x0, x1, 0, 0)
        with self.assertRaises(NonReducedPencil):
            build_pencil(x0**2, x1**2, 1, 1)
        with self.assertRaises(NotCoprime):
            build_pencil(x0 * x1, x0 * x2, 1, 1)


if __name__ == "__main__":
    unittest.main()
