# core/settings.py
import os
import threading
from dataclasses import dataclass, field, replace

from src.errors import ComputationCancelled


class CancellationToken:
    """Jeton d'annulation coopératif partagé entre la CLI et les boucles longues."""

    def __init__(self):
        self._event = threading.Event()

    def cancel(self) -> None:
        self._event.set()

    @property
    def cancelled(self) -> bool:
        return self._event.is_set()


@dataclass(frozen=True)
class FoliaSettings:
    """
    Paramètres de calcul de folia.

    Paramètres:
        first_integral_cap (int): Degré de troncature des intégrales premières.
        koszul_cap (int): Degré de troncature pour les générateurs de Koszul.
        mora_degree_cap (int): Plafond de degré initial de la forme normale de Mora.
        mora_degree_limit (int): Plafond maximal après escalade (au-delà: "inconclusive").
        residue_exponent_cap (int): Exposant N maximal de la loi de transformation.
        jobs (int): Nombre de tâches parallèles sur les composantes.
        timing (bool): Ajoute les durées aux rapports.
    """

    first_integral_cap: int = 8
    koszul_cap: int = 6
    mora_degree_cap: int = 20
    mora_degree_limit: int = 80
    residue_exponent_cap: int = 24
    jobs: int = 1
    timing: bool = False
    token: CancellationToken = field(default_factory=CancellationToken, compare=False)

    def __post_init__(self):
        for name in (
            "first_integral_cap",
            "koszul_cap",
            "mora_degree_cap",
            "residue_exponent_cap",
            "jobs",
        ):
            if getattr(self, name) < 1:
                raise ValueError(f"Le paramètre {name} doit être un entier positif.")
        if self.mora_degree_limit < self.mora_degree_cap:
            raise ValueError(
                "Le plafond maximal de Mora doit être supérieur au plafond initial."
            )

    def checkpoint(self) -> None:
        """Lève ComputationCancelled si le jeton a été déclenché."""
        if self.token.cancelled:
            raise ComputationCancelled("Calcul interrompu à la demande de l'utilisateur.")

    def with_overrides(self, **overrides) -> "FoliaSettings":
        """Copie avec les valeurs non nulles de overrides."""
        values = {k: v for k, v in overrides.items() if v is not None}
        return replace(self, **values)

    @classmethod
    def from_env(cls, environ=None) -> "FoliaSettings":
        """Lit les surcharges FOLIA_* (ex: FOLIA_KOSZUL_CAP=8)."""
        environ = os.environ if environ is None else environ
        values = {}
        for name in (
            "first_integral_cap",
            "koszul_cap",
            "mora_degree_cap",
            "mora_degree_limit",
            "residue_exponent_cap",
            "jobs",
        ):
            raw = environ.get(f"FOLIA_{name.upper()}")
            if raw is None:
                continue
            try:
                values[name] = int(raw)
            except ValueError:
                raise ValueError(
                    f"Variable FOLIA_{name.upper()} invalide : '{raw}' n'est pas un entier."
                )
        return cls(**values)


DEFAULT_SETTINGS = FoliaSettings()


def resolve_settings(settings: "FoliaSettings | None") -> FoliaSettings:
    return DEFAULT_SETTINGS if settings is None else settings
