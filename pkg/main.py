# main.py
from src.ui.cli_interface import cli


def main():
    """
    Point d'entrée de folia.
    Délègue à la CLI : lecture du document .fol, calcul, affichage des résultats.
    """
    cli(prog_name="folia")


if __name__ == "__main__":
    main()
