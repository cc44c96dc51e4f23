# data/catalog_loader.py
from pathlib import Path

CATALOG_DIR = Path(__file__).resolve().parent / "catalog"
SUFFIX = ".fol"


def list_catalog() -> list[str]:
    """
    Liste les exemples livrés avec folia.

    Returns:
        list[str]: Noms des entrées (sans l'extension .fol), triés.
    """
    return sorted(p.stem for p in CATALOG_DIR.glob(f"*{SUFFIX}"))


def catalog_path(name: str) -> Path:
    """
    Chemin d'une entrée du catalogue.

    Paramètres:
        name (str): Nom de l'entrée (ex: 'tetrahedron').

    Returns:
        Path: Le fichier .fol correspondant.
    """
    path = CATALOG_DIR / f"{name}{SUFFIX}"
    if not path.is_file():
        known = ", ".join(list_catalog())
        raise FileNotFoundError(f"Entrée de catalogue inconnue : '{name}' (disponibles : {known}).")
    return path


def read_source(source: str) -> tuple[str, str]:
    """
    Lit un fichier .fol donné par son chemin ou par son nom de catalogue.

    Paramètres:
        source (str): Chemin d'un fichier, ou nom d'une entrée du catalogue.

    Returns:
        tuple[str, str]: (texte du document, chemin résolu).
    """
    path = Path(source)
    if not path.is_file():
        path = catalog_path(source)
    return path.read_text(encoding="utf-8"), str(path)


def catalog_title(name: str) -> str:
    """Première ligne 'title "..."' d'une entrée, ou son nom à défaut."""
    for line in catalog_path(name).read_text(encoding="utf-8").splitlines():
        line = line.strip()
        if line.startswith("title "):
            return line[len("title "):].strip().strip('"')
    return name
