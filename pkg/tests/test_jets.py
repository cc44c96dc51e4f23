import unittest
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.algebra.polynomial import PolyRing
from src.errors import NotSingularPoint
from src.forms.exterior import PolyForm
from src.singularities.jets import (
    CASE1_PRODUCT,
    CASE2OR3_XDX,
    JET1_ZERO,
    OUTSIDE_HYPOTHESES,
    jet_classify,
    linear_part_matrix,
)

RING3 = PolyRing(("x", "y", "z"))
x, y, z = RING3.gens()
ZERO = RING3.zero()


class TestJetClassify(unittest.TestCase):
    """
    Classe de tests pour la trichotomie au niveau du 1-jet.
    """

    def test_xdx_germ(self):
        """
        Teste le germe x dx + (1 + x y^2 z) d(y^2 z) : 1-jet x dx.
        """
        f = y**2 * z
        alpha = PolyForm.one_form([x, (1 + x * f) * f.diff(1), (1 + x * f) * f.diff(2)])
        jc = jet_classify(alpha)
        self.assertEqual(jc.verdict, CASE2OR3_XDX, msg="Partie linéaire de rang 1")
        self.assertEqual(jc.rank, 1, msg="Rang")
        self.assertIsNotNone(jc.note, msg="Cas (2) et (3) non séparés")
        self.assertEqual(jc.witness, PolyForm.one_form([x, ZERO, ZERO]), msg="j1 = x dx")

    def test_product_case(self):
        """
        Teste y dx + x dy = d(xy) : rang 2.
        """
        jc = jet_classify(PolyForm.one_form([y, x, ZERO]))
        self.assertEqual(jc.verdict, CASE1_PRODUCT, msg="d(xy)")
        self.assertIsNone(jc.note, msg="Pas de note")

    def test_zero_jet(self):
        """
        Teste x^2 dy : 1-jet nul.
        """
        self.assertEqual(jet_classify(PolyForm.one_form([ZERO, x**2, ZERO])).verdict, JET1_ZERO, msg="j1 = 0")

    def test_outside_hypotheses(self):
        """
        Teste x dx + y dy + z dz : rang 3, hors des cas traités.
        """
        jc = jet_classify(PolyForm.one_form([x, y, z]))
        self.assertEqual(jc.verdict, OUTSIDE_HYPOTHESES, msg="Rang 3")
        self.assertIn("rang 3", jc.note, msg="La note donne le rang")

    def test_rejections(self):
        """
        Teste le refus d'un point régulier et d'une 2-forme.
        """
        with self.assertRaises(NotSingularPoint):
            jet_classify(PolyForm.one_form([RING3.one(), x, ZERO]))
        with self.assertRaises(ValueError):
            jet_classify(PolyForm(RING3, 2, {(0, 1): x}))

    def test_linear_part_matrix(self):
        """
        Teste M[i][j] = coefficient de x_j dans le coefficient de dx_i.
        """
        matrix = linear_part_matrix(PolyForm.one_form([2 * y, ZERO, x - 3 * z]))
        self.assertEqual(matrix, [[0, 2, 0], [0, 0, 0], [1, 0, -3]], msg="Matrice de la partie linéaire")


if __name__ == "__main__":
    unittest.main()
