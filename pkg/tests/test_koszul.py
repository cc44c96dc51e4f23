import unittest
import sys
import os

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from data.catalog_loader import read_source
from src.algebra.polynomial import PolyRing
from src.errors import NotIntegrable, NotIsolated
from src.forms.exterior import PolyForm, apply_one_form, contract, rot
from src.singularities.koszul import koszul_generators
from src.singularities.kupka import local_germ
from src.ui.model_loader import load_model

RING3 = PolyRing(("x", "y", "z"))


class TestKoszulGenerators(unittest.TestCase):
    """
    Classe de tests pour les générateurs (rot omega, S) du faisceau tangent.
    """

    def test_tetrahedron_vertex(self):
        """
        Teste le germe au sommet [0:0:0:1] du tétraèdre : i_X theta = omega exactement.
        """
        model = load_model(read_source("tetrahedron")[0], source="tetrahedron")
        germ, _ = local_germ(model.foliation, [0, 0, 0, 1])
        pair = koszul_generators(germ, cap=3)
        self.assertTrue(pair.certified, msg="Résidu nul jusqu'au degré 3")
        self.assertEqual(pair.rot_milnor.value, 1, msg="mu(rot omega) = 1")
        self.assertEqual(pair.X, rot(germ), msg="X = rot omega")
        self.assertTrue(apply_one_form(germ, pair.X).is_zero(), msg="omega(X) = 0")
        self.assertEqual(contract(pair.X, pair.theta).truncate(3), germ.truncate(3), msg="i_X theta")

    def test_not_isolated(self):
        """
        Teste x^2 dy : rot omega = 2x ∂z n'a pas de zéro isolé.
        """
        x, _, _ = RING3.gens()
        zero = RING3.zero()
        with self.assertRaises(NotIsolated):
            koszul_generators(PolyForm.one_form([zero, x**2, zero]))

    def test_not_integrable(self):
        """
        Teste la forme de contact dz - y dx.
        """
        _, y, _ = RING3.gens()
        with self.assertRaises(NotIntegrable):
            koszul_generators(PolyForm.one_form([-y, RING3.zero(), RING3.one()]))


if __name__ == "__main__":
    unittest.main()
