# trcng/main.py
"""
Interface en ligne de commande.

Codes de sortie : 0 succès, 1 usage ou format invalide, 2 résultats
inconnus (budget épuisé), 3 borne violée.
"""
import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Dict, List, Optional, Tuple

from trcng.core.config import settings
from trcng.core.exceptions import (
    BudgetExhaustedError,
    ConstructionError,
    DisconnectedGraphError,
    GraphFormatError,
    InvalidParameterError,
    PreconditionError,
)
from trcng.core.logger import setup_logger
from trcng.models.graph import Graph
from trcng.schemas.coloring import TotalColoring
from trcng.schemas.family import FamilyKind, FamilySpec
from trcng.schemas.solver import Budget
from trcng.services import constructions, families
from trcng.services.classifier import classify, trc
from trcng.services.coloring import emit_coloring_text, parse_coloring_text, verify_trc
from trcng.services.graph_core import complement, emit_edge_list, emit_graph6, parse_graph6, read_graph
from trcng.services.ng_harness import atlas_graph6, ng_scan, probe_two_connected
from trcng.utils.cache import ResultCache
from trcng.utils.export import CSVExporter, records_lines, to_dot
from trcng.utils.validators import validate_connected, validate_jobs, validate_scan_order

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_UNKNOWN = 2
EXIT_VIOLATION = 3


# ===================================================================
#  Entrées / sorties
# ===================================================================

def load_graph(source: str) -> Graph:
    """Fichier (graph6 ou liste d'arêtes) si le chemin existe, sinon chaîne graph6"""
    path = Path(source)
    if path.is_file():
        return read_graph(path.read_text(encoding="utf-8"))
    return parse_graph6(source)


def budget_from_args(args: argparse.Namespace) -> Budget:
    return Budget(
        node_cap=args.node_cap if args.node_cap is not None else settings.SOLVER_NODE_CAP,
        time_cap=args.time_cap if args.time_cap is not None else settings.SOLVER_TIME_CAP,
    )


def emit_graph(graph: Graph, fmt: str) -> str:
    return emit_edge_list(graph) if fmt == "edgelist" else emit_graph6(graph) + "\n"


def write_dot(path: Optional[str], graph: Graph, coloring: Optional[TotalColoring]) -> None:
    if path and coloring is not None:
        Path(path).write_text(to_dot(graph, coloring), encoding="utf-8")
        logger.info(f"Certificat DOT écrit dans {path}")


# ===================================================================
#  Recettes de la commande color
# ===================================================================

def _params(spec: FamilySpec, kind: FamilyKind) -> List[int]:
    if spec.kind != kind:
        raise InvalidParameterError(f"Cette recette attend une famille {kind.value}, reçu {spec.kind.value}")
    return spec.params


RECIPES: Dict[str, Callable[[FamilySpec], Tuple[Graph, TotalColoring]]] = {
    "bell": lambda spec: (lambda g: (g, constructions.color_B_ell(g)))(families.generate(spec)),
    "cycle": lambda spec: (
        families.cycle(_params(spec, FamilyKind.CYCLE)[0]),
        constructions.color_cycle(_params(spec, FamilyKind.CYCLE)[0]),
    ),
    "co-path": lambda spec: (
        complement(families.path(_params(spec, FamilyKind.PATH)[0])),
        constructions.color_complement_of_path(_params(spec, FamilyKind.PATH)[0]),
    ),
    "co-spider": lambda spec: (
        complement(families.generate(spec)),
        constructions.color_complement_of_spider(*_params(spec, FamilyKind.SPIDER)),
    ),
    "layers": lambda spec: (
        complement(families.generate(spec)),
        constructions.color_via_distance_layers(families.generate(spec)),
    ),
    "diam2": lambda spec: (lambda g: (g, constructions.color_two_connected_diam2(g)))(families.generate(spec)),
    "kbip": lambda spec: (
        families.generate(spec),
        constructions.color_complete_bipartite_strong(*sorted(_params(spec, FamilyKind.KBIP))),
    ),
    "co-diam3": lambda spec: (
        complement(families.generate(spec)),
        constructions.color_complement_of_diam3_2connected(families.generate(spec)),
    ),
}


# ===================================================================
#  Sous-commandes
# ===================================================================

def cmd_solve(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    validate_connected(graph)
    result = trc(graph, budget_from_args(args))
    if args.json:
        print(result.model_dump_json())
    else:
        print(f"trc={result.label()} method={result.method.value} nodes={result.nodes} elapsed={result.elapsed:.3f}s")
        if result.certificate is not None:
            print(emit_coloring_text(graph, result.certificate), end="")
    write_dot(args.dot, graph, result.certificate)
    return EXIT_OK if result.exact else EXIT_UNKNOWN


def cmd_verify(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    coloring = parse_coloring_text(Path(args.coloring).read_text(encoding="utf-8"), graph)
    report = verify_trc(graph, coloring, with_paths=args.paths)
    print(report.model_dump_json())
    return EXIT_OK if report.valid else EXIT_USAGE


def cmd_color(args: argparse.Namespace) -> int:
    spec = FamilySpec.parse(args.family)
    graph, coloring = RECIPES[args.recipe](spec)
    print(emit_coloring_text(graph, coloring), end="")
    write_dot(args.dot, graph, coloring)
    return EXIT_OK


def cmd_classify(args: argparse.Namespace) -> int:
    graph = load_graph(args.graph)
    validate_connected(graph)
    report = classify(graph)
    print(report.model_dump_json() if args.json else report.summary())
    return EXIT_OK


def cmd_complement(args: argparse.Namespace) -> int:
    print(emit_graph(complement(load_graph(args.graph)), args.format), end="")
    return EXIT_OK


def cmd_gen(args: argparse.Namespace) -> int:
    print(emit_graph(families.generate(FamilySpec.parse(args.family)), args.format), end="")
    return EXIT_OK


def _scan_lines(args: argparse.Namespace) -> List[str]:
    if args.input:
        return Path(args.input).read_text(encoding="utf-8").splitlines()
    if args.n is None:
        raise InvalidParameterError("ng-scan exige --n ou --in")
    validate_scan_order(args.n)
    return atlas_graph6(args.n)


def cmd_ng_scan(args: argparse.Namespace) -> int:
    lines = _scan_lines(args)
    cache = None if args.no_cache else ResultCache(args.cache)
    records, summary = ng_scan(
        lines,
        budget=budget_from_args(args),
        jobs=validate_jobs(args.jobs),
        cache=cache,
        checks=not args.no_checks,
    )
    if args.out == "csv":
        CSVExporter().write(records, sys.stdout)
    else:
        for line in records_lines(records, summary):
            print(line)
    print(
        f"n={summary.n} scanned={summary.scanned} co-connected={summary.co_connected} "
        f"max={summary.max_sum} argmax={','.join(summary.argmax)} "
        f"violations={len(summary.violations)} failed-checks={len(summary.failed_findings())} "
        f"unknowns={summary.unknowns} malformed={summary.malformed}",
        file=sys.stderr,
    )
    for finding in summary.failed_findings():
        print(f"échec {finding.kind.value} : {finding.graph6} ({finding.message})", file=sys.stderr)
    if summary.violations or summary.failed_findings():
        return EXIT_VIOLATION
    if summary.unknowns:
        return EXIT_UNKNOWN
    return EXIT_OK


def cmd_probe(args: argparse.Namespace) -> int:
    sources = Path(args.input).read_text(encoding="utf-8").splitlines() if args.input else [args.graph]
    budget = budget_from_args(args)
    for number, line in enumerate(sources, start=1):
        line = line.strip()
        if not line or line.startswith(">>graph6<<"):
            continue
        graph = parse_graph6(line, number) if args.input else load_graph(line)
        finding = probe_two_connected(graph, budget, key=line)
        if finding is not None:
            print(finding.model_dump_json())
    return EXIT_OK


# ===================================================================
#  Point d'entrée
# ===================================================================

def _add_budget(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--node-cap", type=int, default=None, help="Plafond de nœuds de recherche")
    parser.add_argument("--time-cap", type=float, default=None, help="Plafond de temps en secondes")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="trcng",
        description="Nombre de connexion total arc-en-ciel et bornes de Nordhaus-Gaddum.",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    parser.add_argument("--version", action="version", version=f"{settings.APP_NAME} {settings.APP_VERSION}")
    parser.add_argument("--log-level", default=None, help="Niveau de journalisation (défaut : réglages)")
    subparsers = parser.add_subparsers(dest="command", required=True)

    # -- solve --
    p_solve = subparsers.add_parser("solve", help="Calcule trc(G)")
    p_solve.add_argument("graph", help="Chaîne graph6 ou fichier (graph6 / liste d'arêtes)")
    p_solve.add_argument("--json", action="store_true", help="Sortie TrcResult JSON")
    p_solve.add_argument("--dot", default=None, help="Fichier DOT du certificat")
    _add_budget(p_solve)
    p_solve.set_defaults(func=cmd_solve)

    # -- verify --
    p_verify = subparsers.add_parser("verify", help="Vérifie une coloration totale")
    p_verify.add_argument("graph")
    p_verify.add_argument("coloring", help="Fichier de coloration (n m k, sommets, arêtes)")
    p_verify.add_argument("--paths", action="store_true", help="Joindre un chemin témoin par paire")
    p_verify.set_defaults(func=cmd_verify)

    # -- color --
    p_color = subparsers.add_parser("color", help="Applique une recette de coloration")
    p_color.add_argument("recipe", choices=sorted(RECIPES))
    p_color.add_argument("family", help='Famille, ex. "bell:11,3", "kbip:3,30", "spider:2,2,1"')
    p_color.add_argument("--dot", default=None)
    p_color.set_defaults(func=cmd_color)

    # -- classify --
    p_classify = subparsers.add_parser("classify", help="Classe structurelle et trc théorique")
    p_classify.add_argument("graph")
    p_classify.add_argument("--json", action="store_true")
    p_classify.set_defaults(func=cmd_classify)

    # -- complement / gen --
    for name, func, help_text in (
        ("complement", cmd_complement, "Complémentaire d'un graphe"),
        ("gen", cmd_gen, "Génère une famille nommée"),
    ):
        p = subparsers.add_parser(name, help=help_text)
        p.add_argument("family" if name == "gen" else "graph")
        p.add_argument("--format", choices=["graph6", "edgelist"], default="graph6")
        p.set_defaults(func=func)

    # -- ng-scan --
    p_scan = subparsers.add_parser("ng-scan", help="Balayage Nordhaus-Gaddum")
    p_scan.add_argument("--n", type=int, default=None, help="Ordre (atlas networkx si --in absent)")
    p_scan.add_argument("--in", dest="input", default=None, help="Fichier graph6")
    p_scan.add_argument("--out", choices=["csv", "records"], default="csv")
    p_scan.add_argument("--jobs", type=int, default=settings.SCAN_JOBS)
    p_scan.add_argument("--cache", default=settings.CACHE_PATH, help="Fichier cache JSONL")
    p_scan.add_argument("--no-cache", action="store_true")
    p_scan.add_argument("--no-checks", action="store_true", help="Sans vérifications de diamètre")
    _add_budget(p_scan)
    p_scan.set_defaults(func=cmd_ng_scan)

    # -- probe --
    p_probe = subparsers.add_parser("probe", help="Sonde trc <= n - 1 sur des graphes 2-connexes")
    p_probe.add_argument("graph", nargs="?", default=None)
    p_probe.add_argument("--in", dest="input", default=None)
    _add_budget(p_probe)
    p_probe.set_defaults(func=cmd_probe)

    return parser


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    setup_logger(args.log_level)
    if args.command == "probe" and not (args.graph or args.input):
        parser.error("probe exige un graphe ou --in")
    try:
        return args.func(args)
    except (
        GraphFormatError,
        InvalidParameterError,
        DisconnectedGraphError,
        PreconditionError,
        ConstructionError,
        OSError,
    ) as e:
        logger.error(f"{args.command} : {e}")
        print(f"erreur : {e}", file=sys.stderr)
        return EXIT_USAGE
    except BudgetExhaustedError as e:
        print(f"budget épuisé : {e}", file=sys.stderr)
        return EXIT_UNKNOWN


if __name__ == "__main__":
    sys.exit(main())
