# src/ui/report.py
"""
Rapport d'une commande folia : lignes de texte, valeurs structurées, tableaux et
avertissements, avec une sérialisation JSON stable (rationnels en "num/den").
"""
import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Dict, List, Optional

from src.algebra.rational import format_rat, rat_to_json

REPORT_VERSION = 1


@dataclass
class Report:
    """
    Attributs:
        command (str): Nom de la commande.
        inputs (dict): Écho des entrées (fichier, options).
        lines (list[str]): Résumé texte, dans l'ordre d'affichage.
        results (dict): Valeurs structurées (clés comparées aux lignes 'expect').
        tables (dict[str, list[dict]]): Tableaux nommés (une ligne par composante ou point).
        warnings (list[str]): Avertissements (attentes non vérifiées, numérateur littéral...).
        ok (bool): Verdict ; False donne le code de sortie 1.
        timing (float | None): Durée du calcul, seulement avec --timing.
    """

    command: str
    inputs: Dict[str, object] = field(default_factory=dict)
    lines: List[str] = field(default_factory=list)
    results: Dict[str, object] = field(default_factory=dict)
    tables: Dict[str, List[Dict[str, object]]] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)
    ok: bool = True
    timing: Optional[float] = None

    def line(self, text: str) -> None:
        self.lines.append(text)

    def warn(self, text: str) -> None:
        self.warnings.append(text)

    def check_expectations(self, expects) -> None:
        """Compare les lignes 'expect' du document aux résultats calculés par cette commande."""
        for key, expected in expects:
            if key not in self.results:
                continue
            got = render_value(self.results[key])
            if got != expected:
                self.warn(f"attente '{key}' non vérifiée : attendu {expected}, obtenu {got}")


def render_value(value) -> str:
    """Rendu texte déterministe d'une valeur de rapport."""
    if isinstance(value, bool):
        return "yes" if value else "no"
    if isinstance(value, Fraction):
        return format_rat(value)
    if value is None:
        return "n/a"
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(render_value(v) for v in value) + "]"
    return str(value)


def _jsonable(value):
    if isinstance(value, bool) or value is None:
        return value
    if isinstance(value, Fraction):
        return rat_to_json(value)
    if isinstance(value, int):
        return value
    if isinstance(value, float):
        return round(value, 6)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return str(value)


def report_to_dict(report: Report) -> dict:
    data = {
        "version": REPORT_VERSION,
        "command": report.command,
        "inputs": _jsonable(report.inputs),
        "results": _jsonable(report.results),
        "tables": _jsonable(report.tables),
        "warnings": list(report.warnings),
        "ok": report.ok,
    }
    if report.timing is not None:
        data["timing"] = _jsonable(report.timing)
    return data


def report_to_json(report: Report) -> str:
    return json.dumps(report_to_dict(report), sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def write_json_report(report: Report, path: str) -> None:
    Path(path).write_text(report_to_json(report), encoding="utf-8")
