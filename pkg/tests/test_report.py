import unittest
import sys
import os
import json
from fractions import Fraction

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from src.ui.display_results import format_table
from src.ui.report import REPORT_VERSION, Report, render_value, report_to_dict, report_to_json


class TestReport(unittest.TestCase):
    """
    Classe de tests pour les rapports des commandes.
    """

    def test_render_value(self):
        """
        Teste le rendu texte des booléens, rationnels, listes et valeurs absentes.
        """
        self.assertEqual(render_value(True), "yes", msg="Booléen")
        self.assertEqual(render_value(Fraction(-1, 2)), "-1/2", msg="Rationnel")
        self.assertEqual(render_value(Fraction(4)), "4", msg="Rationnel entier")
        self.assertEqual(render_value(None), "n/a", msg="Valeur absente")
        self.assertEqual(render_value([Fraction(0), 1, "x"]), "[0, 1, x]", msg="Liste")

    def test_json_is_stable(self):
        """
        Teste la sérialisation : rationnels en 'num/den', clés triées, durée optionnelle.
        """
        report = Report("residues", {"source": "pencil"})
        report.results.update({"bb.axis": Fraction(4), "holds": True, "sigma": [Fraction(-7), 0]})
        report.tables["Résidus"] = [{"component": "axis", "BB": Fraction(9, 2)}]
        data = json.loads(report_to_json(report))
        self.assertEqual(data["version"], REPORT_VERSION, msg="Version du format")
        self.assertEqual(data["results"]["bb.axis"], "4/1", msg="Toujours num/den")
        self.assertEqual(data["results"]["sigma"], ["-7/1", 0], msg="Listes sérialisées")
        self.assertEqual(data["tables"]["Résidus"][0]["BB"], "9/2", msg="Tableaux sérialisés")
        self.assertNotIn("timing", data, msg="Pas de durée par défaut")
        report.timing = 0.1234567
        self.assertEqual(report_to_dict(report)["timing"], 0.123457, msg="Durée arrondie")
        self.assertEqual(report_to_json(report), report_to_json(report), msg="Sortie déterministe")

    def test_check_expectations(self):
        """
        Teste la comparaison aux attentes : clés absentes ignorées, écarts signalés.
        """
        report = Report("singular")
        report.results.update({"scheme_degree": 6, "p_a": 3})
        report.check_expectations([("scheme_degree", "6"), ("p_a", "2"), ("bb_sum", "16")])
        self.assertEqual(len(report.warnings), 1, msg="Un seul écart")
        self.assertIn("attente 'p_a' non vérifiée : attendu 2, obtenu 3", report.warnings[0], msg="Message")
        self.assertTrue(report.ok, msg="Un écart d'attente n'est pas un verdict")


class TestFormatTable(unittest.TestCase):
    """
    Classe de tests pour la mise en forme des tableaux.
    """

    def test_table(self):
        """
        Teste un tableau à deux lignes et le tableau vide.
        """
        text = format_table([{"component": "e01", "BB": Fraction(-1, 2)}, {"component": "e02", "BB": 4}])
        lines = text.splitlines()
        self.assertEqual(len(lines), 3, msg="En-tête et deux lignes")
        self.assertIn("-1/2", lines[1], msg="Rationnel rendu")
        self.assertEqual(format_table([]), "(vide)", msg="Tableau vide")


if __name__ == "__main__":
    unittest.main()
