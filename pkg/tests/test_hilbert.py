import unittest
import sys
import os
from fractions import Fraction

import numpy as np

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.algebra.polynomial import PolyRing
from src.errors import NonHomogeneous, NotZeroDimensional
from src.forms.foliation import P3_RING
from src.ideals.hilbert import hilbert_data, hilbert_numerator, standard_monomial_count, zero_dim_degree
from src.ideals.ideal import Ideal
from src.ideals.saturation import intersection

x0, x1, x2, x3 = P3_RING.gens()


class TestHilbertCurves(unittest.TestCase):
    """
    Classe de tests pour le degré et le genre arithmétique de courbes de P^3.
    """

    def check_curve(self, ideal, degree, p_a):
        data = hilbert_data(ideal)
        self.assertEqual(data.dim_proj, 1, msg=f"{ideal} est une courbe")
        self.assertEqual(data.degree, degree, msg=f"Degré de {ideal}")
        self.assertEqual(data.p_a, p_a, msg=f"Genre arithmétique de {ideal}")

    def test_line(self):
        """
        Teste une droite : degré 1, genre 0, P(k) = k + 1.
        """
        self.check_curve(Ideal.of(x0, x1), 1, 0)
        self.assertEqual(hilbert_data(Ideal.of(x0, x1)).render_polynomial(), "k + 1", msg="P(k)")

    def test_plane_curves(self):
        """
        Teste une conique (genre 0) et une cubique plane (genre 1).
        """
        self.check_curve(Ideal.of(x0, x1**2 + x2 * x3), 2, 0)
        self.check_curve(Ideal.of(x0, x1**3 + x2**3 + x3**3), 3, 1)

    def test_twisted_cubic(self):
        """
        Teste la cubique gauche : P(k) = 3k + 1.
        """
        ideal = Ideal.of(x0 * x2 - x1**2, x1 * x3 - x2**2, x0 * x3 - x1 * x2)
        self.check_curve(ideal, 3, 0)
        data = hilbert_data(ideal)
        self.assertEqual(data.hilbert_poly, (Fraction(1), Fraction(3)), msg="3k + 1")
        for k in range(1, 6):
            self.assertEqual(data.hilbert_polynomial(k), 3 * k + 1, msg=f"P({k})")
            self.assertEqual(data.hilbert_function(k), 3 * k + 1, msg=f"Fonction de Hilbert en {k}")

    def test_skew_lines(self):
        """
        Teste deux droites disjointes : genre arithmétique -1.
        """
        self.check_curve(intersection(Ideal.of(x0, x1), Ideal.of(x2, x3)), 2, -1)

    def test_tetrahedron_edges(self):
        """
        Teste les six arêtes du tétraèdre : degré 6, genre 3.
        """
        self.check_curve(Ideal.of(x0 * x1 * x2, x0 * x1 * x3, x0 * x2 * x3, x1 * x2 * x3), 6, 3)

    def test_saturate_option(self):
        """
        Teste que saturate=True ignore une composante irrelevante.
        """
        m = Ideal.irrelevant(P3_RING)
        I = intersection(Ideal.of(x0, x1), m * m * m)
        self.assertEqual(hilbert_data(I, saturate=True).p_a, 0, msg="Genre de la droite après saturation")

    def test_non_homogeneous(self):
        """
        Teste le refus d'un idéal non homogène.
        """
        with self.assertRaises(NonHomogeneous):
            hilbert_data(Ideal.of(x0 - 1))


class TestHilbertFunction(unittest.TestCase):
    """
    Classe de tests de la série de Hilbert contre un comptage direct des monômes standard.
    """

    def test_random_monomial_ideals(self):
        """
        Teste HF(k) = nombre de monômes standard sur des idéaux monomiaux aléatoires.
        """
        rng = np.random.default_rng(2024)
        for _ in range(100):
            lead = [tuple(int(e) for e in rng.integers(0, 3, size=4)) for _ in range(3)]
            lead = [m for m in lead if sum(m)]
            if not lead:
                continue
            ideal = Ideal(P3_RING, [P3_RING.monomial(m) for m in lead])
            data = hilbert_data(ideal)
            for k in range(9):
                self.assertEqual(
                    data.hilbert_function(k),
                    standard_monomial_count(lead, 4, k),
                    msg=f"HF({k}) pour {lead}",
                )

    def test_numerator_of_complete_intersection(self):
        """
        Teste N(t) = (1 - t^2)(1 - t^3) pour (x^2, y^3).
        """
        self.assertEqual(hilbert_numerator([(2, 0), (0, 3)]), [1, 0, -1, -1, 0, 1], msg="N(t)")


class TestZeroDimensionalDegree(unittest.TestCase):
    """
    Classe de tests pour la longueur des schémas de dimension zéro.
    """

    def test_affine(self):
        """
        Teste dim Q[x, y]/I sur deux idéaux affines.
        """
        ring = PolyRing(("x", "y"))
        x, y = ring.gens()
        self.assertEqual(zero_dim_degree(Ideal.of(x**2, y**3)), 6, msg="(x^2, y^3)")
        self.assertEqual(zero_dim_degree(Ideal.of(x**2 - y, y**2)), 4, msg="(x^2 - y, y^2)")
        self.assertEqual(zero_dim_degree(Ideal.of(x, x - 1)), 0, msg="Idéal unité")
        with self.assertRaises(NotZeroDimensional):
            zero_dim_degree(Ideal.of(x))

    def test_projective(self):
        """
        Teste deux points de P^2 et le refus d'une droite.
        """
        ring = PolyRing(("x0", "x1", "x2"))
        a, b, c = ring.gens()
        self.assertEqual(zero_dim_degree(Ideal.of(b, a * (a - c)), projective=True), 2, msg="Deux points")
        with self.assertRaises(NotZeroDimensional):
            zero_dim_degree(Ideal.of(a), projective=True)


if __name__ == "__main__":
    unittest.main()
