import unittest
import sys
import os
from fractions import Fraction

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.algebra.binary_forms import BINARY_RING, BinForm, factor_binary, gcd_binary
from src.algebra.polynomial import PolyRing
from src.errors import EmptyInput, NonHomogeneous, RingMismatch

s, t = BINARY_RING.gens()


class TestBinForm(unittest.TestCase):
    """
    Classe de tests pour les formes binaires homogènes.
    """

    def test_rejects_non_homogeneous(self):
        """
        Teste le refus d'une forme non homogène ou d'un anneau à 3 variables.
        """
        with self.assertRaises(NonHomogeneous):
            BinForm(s**2 + t)
        with self.assertRaises(RingMismatch):
            BinForm(PolyRing(("a", "b", "c")).var(0))

    def test_from_coefficients(self):
        """
        Teste la construction par coefficients : coeffs[k] devant s^(d-k) t^k.
        """
        f = BinForm.from_coefficients([1, 0, -1], 2)
        self.assertEqual(f.poly, s**2 - t**2, msg="s^2 - t^2")
        self.assertEqual(f.degree, 2, msg="Degré 2")

    def test_t_order(self):
        """
        Teste la plus grande puissance de t qui divise la forme.
        """
        self.assertEqual(BinForm(s * t**2 + t**3).t_order(), 2, msg="t^2 divise s*t^2 + t^3")
        self.assertEqual(BinForm(s**3).t_order(), 0, msg="t ne divise pas s^3")


class TestGcdBinary(unittest.TestCase):
    """
    Classe de tests pour le pgcd de formes binaires.
    """

    def test_common_factor(self):
        """
        Teste le pgcd de deux formes ayant un facteur linéaire commun.
        """
        a = BinForm((s - 2 * t) * (s + t))
        b = BinForm((s - 2 * t) * s)
        self.assertEqual(gcd_binary(a, b).poly, s - 2 * t, msg="pgcd = s - 2t")

    def test_t_power_restored(self):
        """
        Teste que la puissance de t perdue sur la carte t = 1 est rétablie.
        """
        self.assertEqual(gcd_binary(BinForm(s * t), BinForm(t**2)).poly, t, msg="pgcd(st, t^2) = t")
        self.assertEqual(
            gcd_binary(BinForm(s * t**2), BinForm(t**3), rest=[BinForm(s**2 * t**2)]).poly,
            t**2,
            msg="pgcd de trois formes",
        )

    def test_coprime(self):
        """
        Teste que des formes premières entre elles ont pour pgcd 1.
        """
        g = gcd_binary(BinForm(s**2 + t**2), BinForm(s * t))
        self.assertEqual(g.poly, BINARY_RING.one(), msg="s^2 + t^2 et st sont premiers entre eux")

    def test_invalid_inputs(self):
        """
        Teste les entrées refusées : liste vide et forme nulle.
        """
        with self.assertRaises(EmptyInput):
            gcd_binary(None)
        with self.assertRaises(ValueError):
            gcd_binary(BinForm(s), BinForm(BINARY_RING.zero()))

    def test_gcd_divides_inputs(self):
        """
        Teste que le pgcd de trois formes divise chacune d'elles.
        """
        a = BinForm(t**2 * (s - t) * (s + 3 * t) ** 2)
        b = BinForm(t * (s + 3 * t) * (s**2 + t**2))
        c = BinForm(s * t**3 * (s + 3 * t))
        g = gcd_binary(a, b, rest=[c])
        self.assertEqual(g.poly, t * (s + 3 * t), msg="pgcd = t(s + 3t)")
        for f in (a, b, c):
            self.assertTrue(g.divides(f), msg=f"Le pgcd divise {f.render()}")
        self.assertFalse(BinForm(s - t).divides(b), msg="s - t ne divise pas b")


class TestFactorBinary(unittest.TestCase):
    """
    Classe de tests pour la factorisation des formes binaires sur Q.
    """

    def test_linear_factors_and_labels(self):
        """
        Teste la factorisation de st(s - t) et les étiquettes des racines.
        """
        factors = factor_binary(BinForm(s * t * (s - t)))
        self.assertEqual([f.label() for f in factors], ["s=0", "s=1*t", "t=0"], msg="Étiquettes triées")
        self.assertEqual([f.multiplicity for f in factors], [1, 1, 1], msg="Facteurs simples")
        self.assertEqual(factors[1].root, (Fraction(1), Fraction(1)), msg="Racine [1:1]")

    def test_multiplicity(self):
        """
        Teste la multiplicité d'un facteur répété.
        """
        factors = factor_binary(BinForm(t**3 * (2 * s + t) ** 2))
        by_label = {f.label(): f.multiplicity for f in factors}
        self.assertEqual(by_label, {"t=0": 3, "s=-1/2*t": 2}, msg="t^3 (2s + t)^2")

    def test_irreducible_quadratic(self):
        """
        Teste un facteur quadratique irréductible sur Q (sans racine rationnelle).
        """
        factors = factor_binary(BinForm(s**2 + t**2))
        self.assertEqual(len(factors), 1, msg="s^2 + t^2 est irréductible")
        self.assertIsNone(factors[0].root, msg="Pas de racine rationnelle")
        self.assertEqual(factors[0].label(), "s^2 + t^2=0", msg="Étiquette d'un facteur non linéaire")

    def test_product_of_factors(self):
        """
        Teste que le produit des facteurs redonne la forme à une constante près.
        """
        f = BinForm(3 * s**4 * t - 3 * s**2 * t**3)
        product = BinForm(BINARY_RING.one())
        for fac in factor_binary(f):
            for _ in range(fac.multiplicity):
                product = product * fac.form
        self.assertEqual(product.monic(), f.monic(), msg="Produit des facteurs")


if __name__ == "__main__":
    unittest.main()
