import unittest
import sys
import os
import threading

sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), "..")))

from core.component_runner import run_over_components, timed
from core.settings import DEFAULT_SETTINGS, FoliaSettings, resolve_settings
from src.errors import ComputationCancelled


class TestFoliaSettings(unittest.TestCase):
    """
    Classe de tests pour les paramètres de calcul.
    """

    def test_defaults_and_validation(self):
        """
        Teste les valeurs par défaut et le refus des plafonds invalides.
        """
        self.assertIs(resolve_settings(None), DEFAULT_SETTINGS, msg="Réglages par défaut")
        self.assertEqual(DEFAULT_SETTINGS.jobs, 1, msg="Séquentiel par défaut")
        with self.assertRaises(ValueError):
            FoliaSettings(koszul_cap=0)
        with self.assertRaises(ValueError):
            FoliaSettings(mora_degree_cap=30, mora_degree_limit=10)

    def test_from_env(self):
        """
        Teste la lecture des variables FOLIA_*.
        """
        settings = FoliaSettings.from_env({"FOLIA_KOSZUL_CAP": "9", "FOLIA_JOBS": "4", "OTHER": "x"})
        self.assertEqual(settings.koszul_cap, 9, msg="FOLIA_KOSZUL_CAP")
        self.assertEqual(settings.jobs, 4, msg="FOLIA_JOBS")
        with self.assertRaises(ValueError):
            FoliaSettings.from_env({"FOLIA_JOBS": "beaucoup"})

    def test_with_overrides(self):
        """
        Teste que les surcharges None sont ignorées.
        """
        base = FoliaSettings(first_integral_cap=5)
        settings = base.with_overrides(first_integral_cap=None, jobs=2)
        self.assertEqual(settings.first_integral_cap, 5, msg="None conservé")
        self.assertEqual(settings.jobs, 2, msg="Surcharge appliquée")

    def test_cancellation(self):
        """
        Teste l'annulation coopérative par le jeton.
        """
        settings = FoliaSettings()
        settings.checkpoint()
        settings.token.cancel()
        with self.assertRaises(ComputationCancelled):
            settings.checkpoint()


class TestComponentRunner(unittest.TestCase):
    """
    Classe de tests pour l'exécution sur plusieurs composantes.
    """

    def test_order_preserved(self):
        """
        Teste que les résultats suivent l'ordre d'entrée, en séquentiel comme en parallèle.
        """
        items = list(range(12))
        expected = [k * k + 1 for k in items]
        self.assertEqual(run_over_components(items, lambda k, shift: k * k + shift, 1, shift=1), expected, msg="Séquentiel")
        self.assertEqual(run_over_components(items, lambda k, shift: k * k + shift, 4, shift=1), expected, msg="Parallèle")

    def test_parallel_uses_threads(self):
        """
        Teste que plusieurs tâches sont effectivement utilisées.
        """
        names = set()

        def record(item):
            names.add(threading.current_thread().name)
            return item

        barrier = threading.Barrier(2)

        def wait(item):
            barrier.wait(timeout=5)
            return record(item)

        self.assertEqual(run_over_components([1, 2], wait, 2), [1, 2], msg="Deux tâches simultanées")
        self.assertEqual(len(names), 2, msg="Deux fils d'exécution")

    def test_errors(self):
        """
        Teste le refus de jobs < 1 et la propagation des erreurs des tâches.
        """
        with self.assertRaises(ValueError):
            run_over_components([1], lambda k: k, 0)

        def fail(item):
            if item == 2:
                raise ComputationCancelled("arrêt")
            return item

        with self.assertRaises(ComputationCancelled):
            run_over_components([1, 2, 3], fail, 2)

    def test_timed(self):
        """
        Teste que timed renvoie le résultat et une durée positive.
        """
        result, seconds = timed(sum, [1, 2, 3])
        self.assertEqual(result, 6, msg="Résultat")
        self.assertGreaterEqual(seconds, 0, msg="Durée")


if __name__ == "__main__":
    unittest.main()
