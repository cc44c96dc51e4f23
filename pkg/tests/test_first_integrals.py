import unittest
import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from data.catalog_loader import read_source
from src.algebra.polynomial import PolyRing
from src.errors import SingularGerm, UnsolvableSystem
from src.forms.exterior import PolyForm
from src.singularities.first_integrals import (
    compose_first_integral,
    frobenius_first_integral,
    monomials_of_degree,
    residual_vanishes_below,
)
from src.ui.model_loader import load_model

RING2 = PolyRing(("x", "y"))
RING3 = PolyRing(("x", "y", "z"))


class TestFrobeniusFirstIntegral(unittest.TestCase):
    """
    Classe de tests pour les intégrales premières tronquées.
    """

    def test_exact_form(self):
        """
        Teste dx + y dy = d(x + y^2/2).
        """
        x, y = RING2.gens()
        fi = frobenius_first_integral(PolyForm.one_form([RING2.one(), y]), cap=4)
        self.assertEqual(fi.H.body, x + y**2 * Fraction(1, 2), msg="H = x + y^2/2")
        self.assertTrue(fi.certified, msg="Résidu nul")
        self.assertIsNone(fi.residual_order, msg="dH ∧ eta = 0")
        self.assertEqual(fi.pivot, "x", msg="Pivot sur dx")

    def test_catalog_germ_and_composition(self):
        """
        Teste eta = x dx + (1 + x t) dt puis H ∘ (x, y^2 z) sur le germe du catalogue.
        """
        model = load_model(read_source("example_germ")[0], source="example_germ")
        fi = frobenius_first_integral(model.eta, cap=8)
        self.assertTrue(fi.certified, msg="Intégrale première de eta")
        self.assertEqual(fi.pivot, "t", msg="eta(0) = dt")
        self.assertTrue(fi.integrable, msg="En deux variables eta est intégrable")
        composite = compose_first_integral(fi, model.map_images, model.omega)
        self.assertTrue(composite.certified, msg="H ∘ phi intégrale première de omega")
        self.assertFalse(composite.differential_at_origin_nonzero, msg="d(H ∘ phi)(0) = 0")

    def test_singular_germ(self):
        """
        Teste le refus d'un germe singulier x dy - y dx.
        """
        x, y = RING2.gens()
        with self.assertRaises(SingularGerm):
            frobenius_first_integral(PolyForm.one_form([-y, x]))

    def test_contact_form(self):
        """
        Teste la forme de contact dz - y dx : système incompatible.
        """
        _, y, _ = RING3.gens()
        eta = PolyForm.one_form([-y, RING3.zero(), RING3.one()])
        with self.assertLogs("src.singularities.first_integrals", level="WARNING"):
            with self.assertRaises(UnsolvableSystem):
                frobenius_first_integral(eta, cap=3)

    def test_invalid_cap(self):
        """
        Teste le refus d'un degré de troncature nul.
        """
        with self.assertRaises(ValueError):
            frobenius_first_integral(PolyForm.one_form([RING2.one(), RING2.zero()]), cap=0)


class TestHelpers(unittest.TestCase):
    """
    Classe de tests pour les utilitaires de résolution degré par degré.
    """

    def test_monomials_of_degree(self):
        """
        Teste le nombre de monômes de degré k en n variables.
        """
        self.assertEqual(len(monomials_of_degree(3, 2)), 6, msg="C(4, 2)")
        self.assertEqual(monomials_of_degree(2, 1), [(1, 0), (0, 1)], msg="Degré 1")

    def test_residual_vanishes_below(self):
        """
        Teste la détection de l'ordre d'un résidu.
        """
        x, y = RING2.gens()
        residual = PolyForm(RING2, 2, {(0, 1): x**3 + y**4})
        self.assertTrue(residual_vanishes_below(residual, 3), msg="Pas de terme de degré < 3")
        self.assertFalse(residual_vanishes_below(residual, 4), msg="Terme x^3")


if __name__ == "__main__":
    unittest.main()
