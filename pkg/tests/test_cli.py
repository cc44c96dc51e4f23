import unittest
import sys
import os
import json
import signal
import tempfile

from click.testing import CliRunner

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from core.settings import FoliaSettings
from src.errors import ComputationCancelled
from src.ui.cli_interface import (
    EXIT_CANCELLED,
    EXIT_INPUT_ERROR,
    EXIT_OK,
    EXIT_VERDICT,
    cli,
    handles_errors,
    install_interrupt,
)


class TestCliCommands(unittest.TestCase):
    """
    Classe de tests pour les commandes de la CLI sur les exemples du catalogue.
    """

    def setUp(self):
        self.runner = CliRunner()

    def invoke(self, *args):
        return self.runner.invoke(cli, list(args))

    def test_check(self):
        """
        Teste la validation d'un feuilletage de P^3 et d'un germe affine.
        """
        result = self.invoke("check", "pencil")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("valid foliation, degree 0", result.stdout, msg="Degré du pinceau")
        result = self.invoke("check", "example_germ")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("valid integrable 1-form in 3 variables", result.stdout, msg="Germe intégrable")

    def test_singular(self):
        """
        Teste le schéma singulier du tétraèdre.
        """
        result = self.invoke("singular", "tetrahedron")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("degree 6, arithmetic genus 3", result.stdout, msg="Six arêtes")
        self.assertIn("intersection of declared components: yes", result.stdout, msg="Décomposition")
        self.assertNotIn("attente", result.stderr, msg="Attentes du catalogue vérifiées")

    def test_classify(self):
        """
        Teste la classification d'un sommet et le refus d'un point régulier.
        """
        result = self.invoke("classify", "tetrahedron", "--point", "0:0:0:1")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("nonKupka, subclass logarithmic", result.stdout, msg="Sous-classe")
        self.assertIn("mu(rot) = 1", result.stdout, msg="mu(rot)")
        result = self.invoke("classify", "tetrahedron", "--point", "[1:1:1:1]")
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="Point régulier")
        self.assertIn("Erreur [not_singular_point]", result.stderr, msg="Code d'erreur")

    def test_nk_divisor(self):
        """
        Teste le diviseur non-Kupka d'une arête choisie.
        """
        result = self.invoke("nk-divisor", "tetrahedron", "--component", "edge23")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("edge23: divisor {s=0:1, t=0:1}, total 2", result.stdout, msg="Diviseur")
        result = self.invoke("nk-divisor", "tetrahedron", "--component", "edge45")
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="Composante inconnue")

    def test_nk_count(self):
        """
        Teste les deux orientations de la formule de degré sur le tétraèdre.
        """
        result = self.invoke("nk-count", "tetrahedron")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("deg_KF - deg_KZ = -4, deg_KZ - deg_KF = 4", result.stdout, msg="Orientations")
        self.assertIn("per-branch total 12, distinct points 4", result.stdout, msg="Comptages")

    def test_milnor(self):
        """
        Teste mu au point isolé du pinceau ramifié.
        """
        result = self.invoke("milnor", "branched_pencil", "--point", "0:0:0:1")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("mu(omega) = 1 at [0:0:0:1]", result.stdout, msg="Milnor")

    def test_residues_keep_component_order(self):
        """
        Teste les résidus des arêtes en parallèle : ordre des composantes conservé.
        """
        result = self.invoke("residues", "tetrahedron", "--jobs", "3")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        lines = [line for line in result.stdout.splitlines() if ": BB = " in line]
        self.assertEqual(
            [line.split(":")[0] for line in lines],
            ["edge01", "edge02", "edge03", "edge12", "edge13", "edge23"],
            msg="Ordre d'entrée",
        )
        self.assertIn("edge01: BB = -1/2 (nondegenerate)", result.stdout, msg="BB(e01)")

    def test_residues_literal_warning(self):
        """
        Teste l'avertissement sur le numérateur non élevé au carré.
        """
        result = self.invoke("residues", "pencil")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("axis: BB = 4 (nondegenerate)", result.stdout, msg="BB(axe)")
        self.assertIn("2 au lieu de 4", result.stderr, msg="Avertissement")

    def test_sum_check(self):
        """
        Teste les codes de sortie de la vérification de somme.
        """
        result = self.invoke("sum-check", "--degree", "0", "--entry", "4:1")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("sum = 4 = 4 = (0+2)^2", result.stdout, msg="Somme vérifiée")
        result = self.invoke("sum-check", "--degree", "1", "--entry", "9/2:1")
        self.assertEqual(result.exit_code, EXIT_VERDICT, msg="Somme fausse")
        result = self.invoke("sum-check")
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="Aucune donnée")
        result = self.invoke("sum-check", "tetrahedron")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("sum = 16 = 16", result.stdout, msg="Somme du tétraèdre")

    def test_residues_and_sum_check_on_files(self):
        """
        Teste residues et sum-check lus depuis un document : code 0 et somme (d + 2)^2.
        """
        result = self.invoke("residues", "pencil", "--jobs", "2")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("axis: BB = 4", result.stdout, msg="BB(axe)")
        result = self.invoke("sum-check", "branched_pencil")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("conic: BB = 9/2", result.stdout, msg="BB(conique)")
        self.assertIn("sum = 9 = 9 = (1+2)^2", result.stdout, msg="Somme du pinceau ramifié")
        result = self.invoke("sum-check", "pencil")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("sum = 4 = 4 = (0+2)^2", result.stdout, msg="Somme du pinceau")

    def test_nk_count_with_entirely_non_kupka_component(self):
        """
        Teste nk-count sur L(1,1,2) : la droite entièrement non-Kupka est listée, pas fatale.
        """
        result = self.invoke("nk-count", "log112")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("curve: degree 5, arithmetic genus 2", result.stdout, msg="Partie courbe")
        self.assertIn("entirely non-Kupka: line01", result.stdout, msg="Composante listée")
        self.assertIn("exclues des totaux : line01", result.stderr, msg="Avertissement")
        self.assertNotIn("non-Kupka count with isolated part", result.stdout, msg="Pas de total fini")
        self.assertNotIn("non vérifiée", result.stderr, msg="Attentes du catalogue vérifiées")
        result = self.invoke("nk-divisor", "log112", "--component", "line01")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("line01: entirely non-Kupka", result.stdout, msg="nk-divisor")

    def test_nk_count_partial_selection(self):
        """
        Teste nk-count sur une seule arête : pas de totaux observés.
        """
        result = self.invoke("nk-count", "tetrahedron", "--component", "edge01")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("do not cover the curve part, no totals", result.stdout, msg="Sélection partielle")
        self.assertNotIn("per-branch total", result.stdout, msg="Pas de total par branche")
        self.assertNotIn("non-Kupka count with isolated part", result.stdout, msg="Pas de total")

    def test_singular_reports_curve_part(self):
        """
        Teste singular sur L(1,1,2) : genre du schéma entier et de la partie courbe déclarée.
        """
        result = self.invoke("singular", "log112")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("declared curve part: degree 5, arithmetic genus 2", result.stdout, msg="Partie courbe")
        self.assertNotIn("non vérifiée", result.stderr, msg="Attentes du catalogue vérifiées")

    def test_germ_commands(self):
        """
        Teste jet, first-integral et koszul sur des germes.
        """
        result = self.invoke("jet", "example_germ")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("1-jet class: case2or3_xdx (rank 1)", result.stdout, msg="Verdict du 1-jet")
        result = self.invoke("first-integral", "example_germ", "--cap", "6")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("dH1(0) nonzero: no", result.stdout, msg="Différentielle nulle en 0")
        result = self.invoke("koszul", "tetrahedron", "--point", "0:0:0:1", "--cap", "3")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("mu(rot omega) = 1", result.stdout, msg="mu(rot)")
        result = self.invoke("koszul", "tetrahedron")
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="--point requis en projectif")

    def test_characteristic_classes(self):
        """
        Teste chern et rrh.
        """
        result = self.invoke("chern", "--degree", "2")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("1 + 4h + 4h^2", result.stdout, msg="(1 + 2h)^2")
        result = self.invoke("chern", "--degree", "1")
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="Degré impair")
        self.assertIn("Erreur [odd_degree]", result.stderr, msg="Code d'erreur")
        result = self.invoke("chern", "--degree", "2", "--kupka-degree", "3")
        self.assertIn("c2(E) = -1", result.stdout, msg="c2(E)")
        result = self.invoke("rrh", "--c1", "0", "--c2", "0")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("chi = 2", result.stdout, msg="O ⊕ O sur P^2")

    def test_catalog_and_unknown_source(self):
        """
        Teste la liste du catalogue et le refus d'une source inconnue.
        """
        result = self.invoke("catalog")
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("tetrahedron", result.stdout, msg="Entrée listée")
        result = self.invoke("check", "inexistant")
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="Source inconnue")
        self.assertIn("Erreur [file_not_found]", result.stderr, msg="Code d'erreur")


class TestCliFiles(unittest.TestCase):
    """
    Classe de tests pour les fichiers utilisateur et le rapport JSON.
    """

    def setUp(self):
        self.runner = CliRunner()
        self.tmp = tempfile.TemporaryDirectory()
        self.addCleanup(self.tmp.cleanup)

    def write(self, name, text):
        path = os.path.join(self.tmp.name, name)
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
        return path

    def test_json_report(self):
        """
        Teste l'écriture du rapport JSON, rationnels en 'num/den'.
        """
        path = os.path.join(self.tmp.name, "report.json")
        result = self.runner.invoke(cli, ["sum-check", "--degree", "0", "--entry", "4:1", "--json", path])
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        self.assertEqual(data["command"], "sum-check", msg="Commande")
        self.assertEqual(data["results"]["bb_sum"], "4/1", msg="Rationnel sérialisé")
        self.assertTrue(data["ok"], msg="Verdict")
        self.assertNotIn("timing", data, msg="Durée absente sans --timing")

    def test_failed_expectation(self):
        """
        Teste l'avertissement quand une attente du document n'est pas vérifiée.
        """
        path = self.write("pencil.fol", "vars x0, x1, x2, x3\nform x0*dx1 - x1*dx0\nexpect degree 3\n")
        result = self.runner.invoke(cli, ["check", path])
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("attente 'degree' non vérifiée : attendu 3, obtenu 0", result.stderr, msg="Attente")

    def test_invalid_documents(self):
        """
        Teste les codes d'erreur pour un document mal formé ou non intégrable.
        """
        path = self.write("bad.fol", "vars x0, x1, x2, x3\nform x0*dx1 +\n")
        result = self.runner.invoke(cli, ["check", path])
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="Syntaxe")
        self.assertIn("Erreur [syntax_error]: ligne 2", result.stderr, msg="Position")
        path = self.write("contact.fol", "vars x, y, z\nform dz - y*dx\n")
        result = self.runner.invoke(cli, ["check", path])
        self.assertEqual(result.exit_code, EXIT_INPUT_ERROR, msg="Non intégrable")
        self.assertIn("Erreur [not_integrable]", result.stderr, msg="Code d'erreur")

    def test_timing(self):
        """
        Teste l'ajout de la durée avec --timing.
        """
        result = self.runner.invoke(cli, ["singular", "pencil", "--timing"])
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIn("time:", result.stdout, msg="Durée affichée")


class TestInterrupt(unittest.TestCase):
    """
    Classe de tests pour l'annulation par Ctrl-C.
    """

    def test_sigint_cancels_token(self):
        """
        Teste que SIGINT déclenche le jeton puis rétablit le gestionnaire précédent.
        """
        previous = signal.getsignal(signal.SIGINT)
        self.addCleanup(signal.signal, signal.SIGINT, previous)
        settings = FoliaSettings()
        install_interrupt(settings)
        self.assertIsNot(signal.getsignal(signal.SIGINT), previous, msg="Gestionnaire installé")
        signal.raise_signal(signal.SIGINT)
        self.assertTrue(settings.token.cancelled, msg="Jeton déclenché")
        self.assertIs(signal.getsignal(signal.SIGINT), previous, msg="Second Ctrl-C : gestionnaire d'origine")
        with self.assertRaises(ComputationCancelled):
            settings.checkpoint()

    def test_cancelled_exit_code(self):
        """
        Teste le code de sortie 130 d'un calcul annulé.
        """

        @handles_errors
        def interrupted():
            cancelled_settings().checkpoint()

        with self.assertRaises(SystemExit) as ctx:
            interrupted()
        self.assertEqual(ctx.exception.code, EXIT_CANCELLED, msg="Code 130")

    def test_handler_restored_after_command(self):
        """
        Teste que le gestionnaire SIGINT d'origine est rétabli à la fin d'une commande.
        """
        previous = signal.getsignal(signal.SIGINT)
        result = CliRunner().invoke(cli, ["check", "pencil"])
        self.assertEqual(result.exit_code, EXIT_OK, msg=result.output)
        self.assertIs(signal.getsignal(signal.SIGINT), previous, msg="Gestionnaire rétabli")


def cancelled_settings():
    settings = FoliaSettings()
    settings.token.cancel()
    return settings


if __name__ == "__main__":
    unittest.main()
