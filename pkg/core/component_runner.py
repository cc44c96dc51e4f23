# core/component_runner.py
import logging
import time
from concurrent.futures import ThreadPoolExecutor

logger = logging.getLogger(__name__)


def run_over_components(items, analysis_function, jobs: int = 1, **analysis_kwargs):
    """
    Applique une analyse à chaque composante (ou point) d'une liste.

    Paramètres:
        items (list): Composantes, points ou modèles à analyser.
        analysis_function (callable): Fonction appelée comme analysis_function(item, **analysis_kwargs).
        jobs (int): Nombre de tâches parallèles ; 1 pour un calcul séquentiel.
        **analysis_kwargs: Arguments supplémentaires transmis à chaque appel.

    Returns:
        list: Les résultats, dans l'ordre des éléments d'entrée quel que soit jobs.
    """
    items = list(items)
    if jobs < 1:
        raise ValueError(f"Nombre de tâches invalide : {jobs}")
    if jobs == 1 or len(items) <= 1:
        return [analysis_function(item, **analysis_kwargs) for item in items]

    logger.debug("Analyse de %d éléments sur %d tâches.", len(items), jobs)
    with ThreadPoolExecutor(max_workers=jobs) as pool:
        futures = [pool.submit(analysis_function, item, **analysis_kwargs) for item in items]
        # result() relance l'exception de la première tâche en échec, dans l'ordre d'entrée
        return [f.result() for f in futures]


def timed(function, *args, **kwargs):
    """Returns: tuple (résultat, durée en secondes)."""
    start = time.perf_counter()
    result = function(*args, **kwargs)
    return result, time.perf_counter() - start
