# src/ui/display_results.py
import click
import pandas as pd

from src.ui.report import Report, render_value


def format_table(rows) -> str:
    """
    Met en forme une liste de dictionnaires (une ligne par composante ou point).

    Args:
        rows (list[dict]): Lignes du tableau, toutes avec les mêmes clés.

    Returns:
        str: Le tableau aligné, sans index.
    """
    if not rows:
        return "(vide)"
    frame = pd.DataFrame([{k: render_value(v) for k, v in row.items()} for row in rows])
    return frame.to_string(index=False)


def display_report(report: Report):
    """
    Affiche un rapport sur la sortie standard ; les avertissements vont sur stderr.

    Args:
        report (Report): Rapport produit par une commande.
    """
    click.echo("--- Résultats ---")
    for text in report.lines:
        click.echo(text)
    for name, rows in report.tables.items():
        click.echo(f"\n--- {name} ---")
        click.echo(format_table(rows))
    if report.timing is not None:
        click.echo(f"\ntime: {report.timing:.3f} s")
    for text in report.warnings:
        click.echo(f"Avertissement : {text}", err=True)
