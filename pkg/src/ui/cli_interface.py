# src/ui/cli_interface.py
"""
Commandes de la CLI folia.

Chaque commande lit un document .fol (chemin ou nom de catalogue), appelle le module
de calcul correspondant et produit un Report. Codes de sortie : 0 succès, 1 verdict
négatif (somme de Baum-Bott fausse, certificat non obtenu), 2 erreur d'entrée,
130 calcul interrompu par Ctrl-C.
"""
import functools
import logging
import signal
import sys
import threading
from fractions import Fraction

import click

from core.component_runner import run_over_components, timed
from core.settings import FoliaSettings
from data.catalog_loader import catalog_title, list_catalog, read_source
from src.algebra.rational import format_rat, to_rat
from src.errors import ComputationCancelled, EmptyInput, FoliaError, NotIntegrable, ResidualNotZeroDimensional
from src.forms.exterior import integrability_defect
from src.ideals.hilbert import hilbert_data
from src.residues.baum_bott import bb_component, bb_sum_check
from src.residues.characteristic import chern_kupka, chern_radial, hirzebruch_riemann_roch
from src.singularities.divisors import nk_count, nk_divisor_or_none
from src.singularities.first_integrals import compose_first_integral, frobenius_first_integral
from src.singularities.jets import jet_classify
from src.singularities.koszul import koszul_generators
from src.singularities.kupka import NON_KUPKA, classify_point, local_germ
from src.singularities.milnor import milnor, rot_milnor
from src.singularities.scheme import affine_singular_scheme, curve_part, isolated_count, singular_scheme
from src.ui.display_results import display_report, format_table
from src.ui.model_loader import LoadedModel, load_model
from src.ui.report import Report, write_json_report

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_VERDICT = 1
EXIT_INPUT_ERROR = 2
EXIT_CANCELLED = 130


# --- Types de paramètres ---
class PointType(click.ParamType):
    """Point rationnel '0:0:0:1', '[1:1:1:0]' ou '1/2,0,0'."""

    name = "point"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        body = value.strip().strip("[]")
        sep = ":" if ":" in body else ","
        try:
            return tuple(to_rat(v) for v in body.split(sep))
        except (TypeError, ValueError):
            self.fail(f"point invalide : '{value}'", param, ctx)


class EntryType(click.ParamType):
    """Terme 'VALEUR:DEGRE' d'une somme de résidus, ex: '9/2:2'."""

    name = "entry"

    def convert(self, value, param, ctx):
        if isinstance(value, tuple):
            return value
        residue, _, degree = value.rpartition(":")
        try:
            return to_rat(residue), int(degree)
        except (TypeError, ValueError):
            self.fail(f"terme invalide : '{value}' (attendu VALEUR:DEGRE)", param, ctx)


POINT = PointType()
ENTRY = EntryType()


# --- Options communes ---
def common_options(fn):
    fn = click.option("--json", "json_path", type=click.Path(dir_okay=False), help="Écrit le rapport JSON.")(fn)
    fn = click.option("--jobs", type=int, default=None, help="Tâches parallèles sur les composantes.")(fn)
    fn = click.option("--timing", is_flag=True, help="Ajoute la durée du calcul au rapport.")(fn)
    fn = click.option("--verbose", "-v", is_flag=True, help="Journal détaillé sur stderr.")(fn)
    return fn


def configure_logging(verbose: bool) -> None:
    level = logging.DEBUG if verbose else logging.WARNING
    root = logging.getLogger()
    root.handlers.clear()
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(levelname)s %(name)s: %(message)s"))
    root.addHandler(handler)
    root.setLevel(level)


def make_settings(jobs=None, timing=False, **caps) -> FoliaSettings:
    """Environnement FOLIA_* puis options de la ligne de commande ; Ctrl-C annule le calcul."""
    settings = FoliaSettings.from_env().with_overrides(jobs=jobs, timing=timing or None, **caps)
    install_interrupt(settings)
    return settings


def interrupt_handler(settings: FoliaSettings, previous):
    """
    Gestionnaire SIGINT : déclenche le jeton, puis rend la main au gestionnaire précédent
    pour qu'un second Ctrl-C interrompe immédiatement.
    """

    def on_interrupt(signum, frame):
        logger.warning("Interruption demandée : arrêt au prochain point de contrôle.")
        settings.token.cancel()
        signal.signal(signal.SIGINT, previous)

    return on_interrupt


def install_interrupt(settings: FoliaSettings) -> None:
    if threading.current_thread() is not threading.main_thread():
        return
    previous = signal.getsignal(signal.SIGINT) or signal.default_int_handler
    signal.signal(signal.SIGINT, interrupt_handler(settings, previous))
    ctx = click.get_current_context(silent=True)
    if ctx is not None:
        ctx.call_on_close(lambda: signal.signal(signal.SIGINT, previous))


def handles_errors(fn):
    """Traduit les erreurs de folia en 'Erreur [code]: message' ; code de sortie 2, ou 130 si interrompu."""

    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except ComputationCancelled as err:
            click.echo(f"Erreur [{err.code}]: {err}", err=True)
            sys.exit(EXIT_CANCELLED)
        except FoliaError as err:
            click.echo(f"Erreur [{err.code}]: {err}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
        except FileNotFoundError as err:
            click.echo(f"Erreur [file_not_found]: {err}", err=True)
            sys.exit(EXIT_INPUT_ERROR)
        except ValueError as err:
            click.echo(f"Erreur [invalid_value]: {err}", err=True)
            sys.exit(EXIT_INPUT_ERROR)

    return wrapper


def load(source: str, settings: FoliaSettings) -> LoadedModel:
    text, path = read_source(source)
    return load_model(text, settings, path)


def finish(report: Report, model=None, json_path=None):
    """Compare les attentes, affiche, écrit le JSON et sort avec le bon code."""
    if model is not None:
        report.check_expectations(model.expects)
    display_report(report)
    if json_path:
        write_json_report(report, json_path)
    sys.exit(EXIT_OK if report.ok else EXIT_VERDICT)


def run_timed(report: Report, settings: FoliaSettings, function, *args, **kwargs):
    result, seconds = timed(function, *args, **kwargs)
    if settings.timing:
        report.timing = seconds
    return result


def point_text(point) -> str:
    return "[" + ":".join(format_rat(v) for v in point) + "]"


def selected_components(model: LoadedModel, names, predicate=None):
    if names:
        return [model.component(n) for n in names]
    comps = [c for c in model.components if not c.embedded]
    if predicate is not None:
        comps = [c for c in comps if predicate(c)]
    return comps


def affine_germ(model: LoadedModel, point):
    """Germe à l'origine : forme affine translatée, ou carte d'un feuilletage en un point."""
    if model.projective:
        if point is None:
            raise EmptyInput("Un point --point est requis pour un feuilletage de P^3.")
        germ, _ = local_germ(model.foliation, point)
        return germ
    omega = model.require_omega()
    return omega.translate(point) if point is not None else omega


@click.group(context_settings={"help_option_names": ["-h", "--help"]})
@click.version_option("1.0.0", prog_name="folia")
def cli():
    """folia : lieux singuliers des feuilletages de codimension un de P^3."""


# --- Commandes sur les documents .fol ---
@cli.command()
@click.argument("source")
@common_options
@handles_errors
def check(source, json_path, jobs, timing, verbose):
    """Valide la forme (feuilletage de P^3, ou 1-forme affine intégrable)."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    report = Report("check", {"source": model.source})
    if model.projective:
        F = model.foliation
        report.line(f"valid foliation, degree {F.degree}")
        report.results.update({"valid": True, "degree": F.degree, "omega": F.render()})
    else:
        omega = model.require_omega()
        if not integrability_defect(omega).is_zero():
            raise NotIntegrable("omega ∧ d omega ≠ 0 : la forme affine n'est pas intégrable.")
        report.line(f"valid integrable 1-form in {omega.ring.nvars} variables")
        report.results.update({"valid": True, "omega": omega.render()})
    finish(report, model, json_path)


@cli.command()
@click.argument("source")
@common_options
@handles_errors
def singular(source, json_path, jobs, timing, verbose):
    """Schéma singulier : idéal saturé, Hilbert, composantes déclarées."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    report = Report("singular", {"source": model.source})
    if model.projective:
        scheme = run_timed(report, settings, singular_scheme, model.foliation, model.components, settings)
        h = scheme.hilbert
        report.line(f"singular scheme: dimension {h.dim_proj}, degree {h.degree}, arithmetic genus {h.p_a}")
        report.results.update({"scheme_degree": h.degree, "dimension": h.dim_proj, "p_a": h.p_a})
        ch = scheme.curve_hilbert
        if ch is not None:
            report.line(f"declared curve part: degree {ch.degree}, arithmetic genus {ch.p_a}")
            report.results.update({"curve_degree": ch.degree, "curve_p_a": ch.p_a})
    else:
        scheme = run_timed(
            report, settings, affine_singular_scheme, model.require_omega(), model.components, settings
        )
        report.line(f"coefficient ideal: {scheme.ideal}")
    report.results["ideal"] = scheme.ideal.render()
    if scheme.decomposition_holds is not None:
        report.line(f"ideal equals intersection of declared components: {'yes' if scheme.decomposition_holds else 'no'}")
        report.results["decomposition"] = scheme.decomposition_holds
    if scheme.residual_zero_dimensional is False:
        report.warn("d'autres composantes de dimension 1 existent hors des composantes déclarées")
    if model.components:
        rows = []
        for c in model.components:
            row = {"component": c.name, "ideal": c.ideal.render(), "embedded": c.embedded}
            if c.hilbert is not None:
                row["degree"] = c.hilbert.degree
                row["p_a"] = c.hilbert.p_a
            rows.append(row)
        report.tables["Composantes"] = rows
    finish(report, model, json_path)


@cli.command()
@click.argument("source")
@click.option("--point", type=POINT, required=True, help="Point projectif, ex: 0:0:0:1.")
@common_options
@handles_errors
def classify(source, point, json_path, jobs, timing, verbose):
    """Kupka / non-Kupka en un point singulier, puis sous-classe simple."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    F = model.require_foliation()
    report = Report("classify", {"source": model.source, "point": point_text(point)})
    pc = run_timed(report, settings, classify_point, F, point, settings)
    report.results.update({"kind": pc.kind, "jet1_nonzero": pc.jet1_nonzero})
    if pc.kind == NON_KUPKA:
        report.line(f"point {point_text(pc.point)}: {pc.kind}, subclass {pc.simple_subclass}")
        report.line(f"sigma = ({', '.join(format_rat(s) for s in pc.sigma)})")
        report.line(f"mu(rot) = {pc.rot_milnor.value}")
        report.results.update(
            {"subclass": pc.simple_subclass, "sigma": list(pc.sigma), "mu_rot": pc.rot_milnor.value}
        )
    else:
        report.line(f"point {point_text(pc.point)}: {pc.kind}")
    report.line(f"1-jet nonzero: {'yes' if pc.jet1_nonzero else 'no'}")
    finish(report, model, json_path)


def _divisor_of(component, foliation):
    return nk_divisor_or_none(foliation, component)


@cli.command("nk-divisor")
@click.argument("source")
@click.option("--component", "names", multiple=True, help="Composante (répétable ; défaut : toutes).")
@common_options
@handles_errors
def nk_divisor_command(source, names, json_path, jobs, timing, verbose):
    """Diviseur non-Kupka le long de composantes paramétrées."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    F = model.require_foliation()
    comps = selected_components(model, names, lambda c: c.param is not None)
    report = Report("nk-divisor", {"source": model.source, "components": [c.name for c in comps]})
    divisors = run_timed(report, settings, run_over_components, comps, _divisor_of, settings.jobs, foliation=F)
    rows = []
    for comp, div in zip(comps, divisors):
        name = comp.name
        if div is None:
            report.line(f"{name}: entirely non-Kupka")
            report.results[f"divisor.{name}"] = None
            continue
        report.line(f"{name}: divisor {div.render()}")
        report.results[f"divisor.{name}"] = div.total_degree
        for p in div.points:
            rows.append(
                {
                    "component": name,
                    "factor": p.label,
                    "order": p.order,
                    "point": point_text(p.image) if p.image is not None else None,
                }
            )
    if rows:
        report.tables["Points non-Kupka"] = rows
    finish(report, model, json_path)


@cli.command("nk-count")
@click.argument("source")
@click.option("--component", "names", multiple=True, help="Composantes paramétrées à utiliser.")
@common_options
@handles_errors
def nk_count_command(source, names, json_path, jobs, timing, verbose):
    """Formule de degré : (d − 2)·deg Z face à 2 p_a − 2."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    F = model.require_foliation()
    report = Report("nk-count", {"source": model.source})
    curves = curve_part(model.components, settings)
    if curves is not None:
        hilbert = hilbert_data(curves, saturate=True, settings=settings)
    else:
        hilbert = singular_scheme(F, (), settings).hilbert
    comps = selected_components(model, names, lambda c: c.param is not None)
    selected = {c.name for c in comps}
    covers = bool(comps) and all(c.name in selected for c in model.components if not c.embedded)
    found = run_over_components(comps, _divisor_of, settings.jobs, foliation=F)
    divisors = [div for div in found if div is not None]
    entirely = [c.name for c, div in zip(comps, found) if div is None]
    if entirely:
        report.warn(f"composantes entièrement non-Kupka, exclues des totaux : {', '.join(entirely)}")
    isolated = None
    if curves is not None:
        try:
            isolated = isolated_count(F, curves, settings)
        except ResidualNotZeroDimensional as err:
            report.warn(str(err))
    nk = run_timed(report, settings, nk_count, F, hilbert, divisors, isolated, covers, entirely)
    report.line(f"curve: degree {nk.curve_degree}, arithmetic genus {nk.p_a}")
    report.line(f"deg_KF = {nk.deg_KF_restricted}, deg_KZ = {nk.deg_KZ}")
    report.line(f"deg_KF - deg_KZ = {nk.stated_difference}, deg_KZ - deg_KF = {nk.example_orientation}")
    if nk.observed_total is not None:
        report.line(f"non-Kupka divisors: per-branch total {nk.observed_total}, distinct points {nk.distinct_points}")
    elif divisors:
        report.line("non-Kupka divisors: selected components do not cover the curve part, no totals")
    if nk.entirely_non_kupka:
        report.line(f"entirely non-Kupka: {', '.join(nk.entirely_non_kupka)}")
    if nk.nk_total is not None:
        report.line(f"non-Kupka count with isolated part: {nk.nk_total}")
    report.results.update(
        {
            "curve_degree": nk.curve_degree,
            "curve_p_a": nk.p_a,
            "deg_KF": nk.deg_KF_restricted,
            "deg_KZ": nk.deg_KZ,
            "stated_difference": nk.stated_difference,
            "example_orientation": nk.example_orientation,
            "per_branch_total": nk.observed_total,
            "distinct_points": nk.distinct_points,
            "nk_total": nk.nk_total,
        }
    )
    finish(report, model, json_path)


@cli.command("milnor")
@click.argument("source")
@click.option("--point", type=POINT, required=True, help="Point (projectif ou affine).")
@common_options
@handles_errors
def milnor_command(source, point, json_path, jobs, timing, verbose):
    """Nombre de Milnor mu(omega, p) ; en affine, aussi mu(rot omega, p)."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    report = Report("milnor", {"source": model.source, "point": point_text(point)})
    target = model.foliation if model.projective else model.require_omega()
    mu = run_timed(report, settings, milnor, target, point, settings)
    report.line(f"mu(omega) = {mu.value} at {point_text(point)}")
    report.results["mu"] = mu.value
    if not model.projective and target.ring.nvars == 3:
        mu_rot = rot_milnor(target, point, settings)
        report.line(f"mu(rot omega) = {mu_rot.value}")
        report.results["mu_rot"] = mu_rot.value
    if not mu.is_finite:
        report.warn(f"multiplicité {mu.value} en {point_text(point)}")
    finish(report, model, json_path)


@cli.command("isolated-count")
@click.argument("source")
@common_options
@handles_errors
def isolated_count_command(source, json_path, jobs, timing, verbose):
    """Longueur de la partie isolée, hors des courbes déclarées."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    F = model.require_foliation()
    curves = curve_part(model.components, settings)
    if curves is None:
        raise EmptyInput("Aucune composante courbe déclarée : la partie isolée n'est pas définie.")
    report = Report("isolated-count", {"source": model.source})
    length = run_timed(report, settings, isolated_count, F, curves, settings)
    report.line(f"isolated length = {length}")
    report.results["isolated"] = length
    finish(report, model, json_path)


def _residue_of(component, foliation, settings):
    return bb_component(foliation, component, settings=settings)


def compute_residues(model: LoadedModel, names, settings: FoliaSettings, report: Report):
    F = model.require_foliation()
    comps = selected_components(model, names)
    missing = [c.name for c in comps if c.point is None]
    if missing and not names:
        report.warn(f"composantes sans point déclaré, ignorées : {', '.join(missing)}")
        comps = [c for c in comps if c.point is not None]
    worker = functools.partial(_residue_of, foliation=F, settings=settings)
    residues = run_timed(report, settings, run_over_components, comps, worker, settings.jobs)
    rows = []
    for comp, res in zip(comps, residues):
        degree = comp.hilbert.degree if comp.hilbert is not None else None
        report.line(f"{comp.name}: BB = {format_rat(res.value)} ({res.method})")
        report.results[f"bb.{comp.name}"] = res.value
        rows.append(
            {
                "component": comp.name,
                "degree": degree,
                "BB": res.value,
                "trace": res.trace,
                "det": res.det,
                "method": res.method,
            }
        )
        warning = res.literal_warning()
        if warning:
            report.warn(warning)
    if rows:
        report.tables["Résidus de Baum-Bott"] = rows
    return comps, residues


@cli.command()
@click.argument("source")
@click.option("--component", "names", multiple=True, help="Composante (répétable ; défaut : toutes).")
@common_options
@handles_errors
def residues(source, names, json_path, jobs, timing, verbose):
    """Résidus de Baum-Bott transverses des composantes de codimension deux."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    report = Report("residues", {"source": model.source})
    compute_residues(model, names, settings, report)
    finish(report, model, json_path)


@cli.command("sum-check")
@click.argument("source", required=False)
@click.option("--degree", type=int, default=None, help="Degré d du feuilletage (sans fichier).")
@click.option("--entry", "entries", type=ENTRY, multiple=True, help="Terme VALEUR:DEGRE (répétable).")
@common_options
@handles_errors
def sum_check(source, degree, entries, json_path, jobs, timing, verbose):
    """Vérifie Σ BB(Z)·deg Z = (d + 2)² ; code 1 si la somme est fausse."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = None
    if source is not None:
        model = load(source, settings)
        report = Report("sum-check", {"source": model.source})
        F = model.require_foliation()
        scheme = singular_scheme(F, model.components, settings)
        if scheme.residual_zero_dimensional is False:
            report.warn("d'autres composantes de dimension 1 existent : la somme est incomplète")
        comps, values = compute_residues(model, (), settings, report)
        terms = [(res, comp.hilbert.degree) for comp, res in zip(comps, values)]
        d = F.degree
    else:
        if degree is None:
            raise EmptyInput("sum-check attend un fichier, ou --degree avec des --entry.")
        report = Report("sum-check", {"degree": degree, "entries": [f"{format_rat(v)}:{k}" for v, k in entries]})
        terms = list(entries)
        d = degree
    summary = bb_sum_check(d, terms)
    relation = "=" if summary.holds else "≠"
    report.line(f"sum = {format_rat(summary.total)} {relation} {summary.expected} = ({d}+2)^2")
    report.results.update({"bb_sum": summary.total, "expected": summary.expected, "holds": summary.holds})
    if summary.note:
        report.warn(summary.note)
    report.ok = summary.holds
    finish(report, model, json_path)


@cli.command()
@click.argument("source")
@click.option("--point", type=POINT, default=None, help="Point du germe (défaut : origine).")
@common_options
@handles_errors
def jet(source, point, json_path, jobs, timing, verbose):
    """Trichotomie du 1-jet d'un germe singulier."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing)
    model = load(source, settings)
    germ = affine_germ(model, point)
    report = Report("jet", {"source": model.source})
    jc = run_timed(report, settings, jet_classify, germ)
    report.line(f"1-jet class: {jc.verdict} (rank {jc.rank})")
    report.line(f"j1 = {jc.witness.render()}")
    if jc.note:
        report.line(f"note: {jc.note}")
    report.results.update({"jet_class": jc.verdict, "rank": jc.rank, "witness": jc.witness.render()})
    finish(report, model, json_path)


@cli.command("first-integral")
@click.argument("source")
@click.option("--cap", type=int, default=None, help="Degré de troncature.")
@common_options
@handles_errors
def first_integral(source, cap, json_path, jobs, timing, verbose):
    """Intégrale première tronquée de eta (ou de omega), composée avec 'map' si déclarée."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing, first_integral_cap=cap)
    model = load(source, settings)
    eta = model.eta if model.eta is not None else model.require_omega()
    report = Report("first-integral", {"source": model.source, "cap": settings.first_integral_cap})
    fi = run_timed(report, settings, frobenius_first_integral, eta, settings.first_integral_cap, settings)
    report.line(f"H = {fi.H.render()}")
    report.line(f"dH ∧ eta vanishes through degree {fi.cap - 1}: {'yes' if fi.certified else 'no'}")
    report.results.update({"H": fi.H.render(), "certified": fi.certified, "residual_order": fi.residual_order})
    ok = fi.certified
    if model.eta is not None and model.map_images is not None:
        composite = compose_first_integral(fi, model.map_images, model.require_omega())
        report.line(f"H1 = {composite.H.render()}")
        report.line(f"dH1 ∧ omega vanishes through degree {composite.cap - 1}: {'yes' if composite.certified else 'no'}")
        report.line(f"dH1(0) nonzero: {'yes' if composite.differential_at_origin_nonzero else 'no'}")
        report.results.update(
            {
                "H1": composite.H.render(),
                "composite_certified": composite.certified,
                "dH1_nonzero_at_origin": composite.differential_at_origin_nonzero,
            }
        )
        ok = ok and composite.certified
    report.ok = ok
    finish(report, model, json_path)


@cli.command()
@click.argument("source")
@click.option("--cap", type=int, default=None, help="Degré de troncature.")
@click.option("--point", type=POINT, default=None, help="Point du germe (défaut : origine).")
@common_options
@handles_errors
def koszul(source, cap, point, json_path, jobs, timing, verbose):
    """Générateurs (X, S) avec omega = i_X i_S dV, à l'ordre cap."""
    configure_logging(verbose)
    settings = make_settings(jobs, timing, koszul_cap=cap)
    model = load(source, settings)
    germ = affine_germ(model, point)
    report = Report("koszul", {"source": model.source, "cap": settings.koszul_cap})
    pair = run_timed(report, settings, koszul_generators, germ, settings.koszul_cap, settings)
    report.line(f"X = rot(omega) = {pair.X.render()}")
    report.line(f"S = {pair.S.render()}")
    report.line(f"mu(rot omega) = {pair.rot_milnor.value}")
    report.line(f"omega - i_X theta vanishes through degree {pair.cap}: {'yes' if pair.certified else 'no'}")
    report.results.update(
        {"X": pair.X.render(), "S": pair.S.render(), "mu_rot": pair.rot_milnor.value, "certified": pair.certified}
    )
    report.ok = pair.certified
    finish(report, model, json_path)


# --- Classes caractéristiques ---
@cli.command()
@click.option("--degree", "d", type=int, required=True, help="Degré d du feuilletage.")
@click.option("--radial", is_flag=True, help="Type transverse radial (défaut).")
@click.option("--kupka-degree", type=int, default=None, help="Degré de l'ensemble de Kupka.")
@common_options
@handles_errors
def chern(d, radial, kupka_degree, json_path, jobs, timing, verbose):
    """Classes de Chern du fibré de rang deux associé à un feuilletage de P^3."""
    configure_logging(verbose)
    report = Report("chern", {"degree": d})
    if kupka_degree is not None and not radial:
        data = chern_kupka(d, kupka_degree)
        report.inputs["kupka_degree"] = kupka_degree
        report.line(f"c(V) = {data.c_V}")
        report.line(f"c2(E) = {format_rat(data.c2_E)} for E = V(-{format_rat(Fraction(d + 2, 2))})")
        report.line(f"radial transversal type: {'yes' if data.radial else 'no'}")
        report.results.update({"c_V": str(data.c_V), "c2_E": data.c2_E, "radial": data.radial})
    else:
        c = chern_radial(d)
        half = format_rat(Fraction(d + 2, 2))
        report.line(f"c(V) = {c} = (1 + {half}h)^2")
        report.results.update({"c_V": str(c), "c1": c.coeffs[1], "c2": c.coeffs[2]})
    finish(report, None, json_path)


@cli.command()
@click.option("--c1", type=str, required=True, help="Première classe de Chern (rationnel).")
@click.option("--c2", type=str, required=True, help="Deuxième classe de Chern (rationnel).")
@click.option("--rank", type=int, default=2, show_default=True, help="Rang du fibré.")
@click.option("--dim", "n", type=int, default=2, show_default=True, help="Dimension n de P^n.")
@common_options
@handles_errors
def rrh(c1, c2, rank, n, json_path, jobs, timing, verbose):
    """Caractéristique d'Euler par Hirzebruch-Riemann-Roch sur P^n."""
    configure_logging(verbose)
    chi = hirzebruch_riemann_roch(rank, [to_rat(c1), to_rat(c2)], n)
    report = Report("rrh", {"c1": c1, "c2": c2, "rank": rank, "n": n})
    report.line(f"chi = {format_rat(chi)}")
    report.results["chi"] = chi
    finish(report, None, json_path)


@cli.command()
def catalog():
    """Liste les exemples livrés."""
    rows = [{"name": name, "title": catalog_title(name)} for name in list_catalog()]
    click.echo(format_table(rows))
