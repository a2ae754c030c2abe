# trcng/services/ng_harness.py
"""
Balayage Nordhaus-Gaddum : trc(G) + trc(complément) pour chaque graphe
d'un flux graph6 dont le graphe et le complémentaire sont connexes.

Les enregistrements sont indépendants ; le calcul est distribué sur un
pool de processus et réassemblé dans l'ordre d'entrée. Le cache n'est
lu et écrit que par le processus parent.
"""
import logging
import time
from multiprocessing import Pool
from typing import Iterable, List, Optional, Tuple

import networkx as nx

from trcng.core.exceptions import GraphFormatError, InvalidParameterError, TRCError
from trcng.models.graph import Graph
from trcng.schemas.scan import Finding, FindingKind, NGRecord, ScanSummary, Verdict
from trcng.schemas.solver import Budget, Method, TrcResult
from trcng.services import families
from trcng.services.classifier import trc, trc_by_theory
from trcng.services.constructions import color_complement_of_path
from trcng.services.graph_core import (
    complement,
    diameter,
    has_spanning_double_star,
    is_connected,
    is_double_star,
    structural_profile,
)
from trcng.utils.cache import ResultCache, get_cache_key
from trcng.utils.graph6 import emit_graph6, parse_graph6

logger = logging.getLogger(__name__)

# Ordre maximal couvert par l'atlas de networkx
ATLAS_MAX_ORDER = 7


def ng_bound(n: int) -> int:
    """Borne de trc(G) + trc(complément) : 10 pour n = 4, 2n + 1 pour n = 5, 2n ensuite"""
    if n < 4:
        raise InvalidParameterError("Aucune paire co-connexe pour n < 4")
    if n == 4:
        return 2 * n + 2
    if n == 5:
        return 2 * n + 1
    return 2 * n


def verdict_for(trc_g: TrcResult, trc_co: TrcResult, bound: int) -> Verdict:
    if trc_g.hi + trc_co.hi <= bound:
        return Verdict.HOLDS
    if trc_g.exact and trc_co.exact:
        return Verdict.VIOLATED
    return Verdict.UNKNOWN


# ----------------------------------------------------------------------
# Vérifications structurelles
# ----------------------------------------------------------------------

def check_diameter_pair(graph: Graph, co_graph: Graph, key: str = "") -> List[Finding]:
    """
    Diamètre > 3 d'un côté impose diamètre 2 de l'autre ; diamètre 3 impose
    une double étoile couvrante dans l'autre
    """
    findings = []
    for side, other in ((graph, co_graph), (co_graph, graph)):
        d, d_other = diameter(side), diameter(other)
        if d > 3:
            findings.append(Finding(
                kind=FindingKind.DIAMETER_PAIR,
                graph6=key,
                ok=d_other == 2,
                message=f"diam = {d}, diam du complémentaire = {d_other}",
            ))
        elif d == 3:
            star = has_spanning_double_star(other)
            findings.append(Finding(
                kind=FindingKind.DOUBLE_STAR,
                graph6=key,
                ok=star is not None,
                message="double étoile couvrante " + (f"centres {star[0]}, {star[1]}" if star else "absente"),
            ))
    return findings


def check_double_star_bound(graph: Graph, co_trc: TrcResult, key: str = "") -> Optional[Finding]:
    """
    diam(G) = 3 et complément connexe : trc(complément) <= n + 1, avec
    égalité seulement pour une double étoile
    """
    co_graph = complement(graph)
    if diameter(graph) != 3 or not is_connected(co_graph):
        return None
    n = graph.n
    ok = co_trc.lo <= n + 1
    if co_trc.exact:
        ok = ok and (co_trc.lo == n + 1) == is_double_star(co_graph)
    return Finding(
        kind=FindingKind.DOUBLE_STAR_BOUND,
        graph6=key,
        ok=ok,
        message=f"trc(complément) = {co_trc.label()}, n + 1 = {n + 1}",
    )


def probe_two_connected(graph: Graph, budget: Optional[Budget] = None, key: str = "") -> Optional[Finding]:
    """
    Sonde empirique : trc <= n - 1 (n <= 10 ou n = 12), trc <= n sinon,
    pour un graphe 2-connexe. Rapporte sans jamais lever.
    """
    if not structural_profile(graph).two_connected:
        return None
    n = graph.n
    cap = n - 1 if n <= 10 or n == 12 else n
    result = trc(graph, budget)
    return Finding(
        kind=FindingKind.TWO_CONNECTED_PROBE,
        graph6=key,
        ok=result.hi <= cap or (not result.exact and result.lo <= cap),
        message=f"trc = {result.label()}, plafond {cap}",
    )


# ----------------------------------------------------------------------
# Paires extrémales et sources de graphes
# ----------------------------------------------------------------------

def tightness_pair(n: int) -> NGRecord:
    """
    P_n et son complémentaire : 2n - 3 par la formule des arbres, 3 par la
    coloration explicite du complémentaire, soit 2n sans aucune recherche
    """
    if n < 5:
        raise InvalidParameterError("La paire extrémale P_n n'est construite que pour n >= 5")
    path = families.path(n)
    trc_g = trc_by_theory(path)
    coloring = color_complement_of_path(n)
    return NGRecord(
        graph6=emit_graph6(path),
        n=n,
        trc_lo=trc_g.lo,
        trc_hi=trc_g.hi,
        cotrc_lo=coloring.palette,
        cotrc_hi=coloring.palette,
        bound=ng_bound(n),
        verdict=Verdict.HOLDS if trc_g.hi + coloring.palette <= ng_bound(n) else Verdict.VIOLATED,
        method_g=trc_g.method,
        method_gbar=Method.CONSTRUCTION,
    )


def atlas_graph6(n: int) -> List[str]:
    """Lignes graph6 de tous les graphes d'ordre n de l'atlas (n <= 7)"""
    if not 1 <= n <= ATLAS_MAX_ORDER:
        raise InvalidParameterError(f"L'atlas couvre les ordres 1..{ATLAS_MAX_ORDER}, fournir --in pour n = {n}")
    return [
        emit_graph6(Graph.from_networkx(g))
        for g in nx.graph_atlas_g()
        if g.number_of_nodes() == n
    ]


# ----------------------------------------------------------------------
# Balayage
# ----------------------------------------------------------------------

ScanTask = Tuple[str, Graph, Optional[Budget], Optional[TrcResult], Optional[TrcResult], bool]
ScanOutcome = Tuple[Optional[NGRecord], List[Finding], Optional[TrcResult], Optional[TrcResult], Optional[str]]


def _scan_one(task: ScanTask) -> ScanOutcome:
    """Travail d'un processus : une paire (G, complément)"""
    key, graph, budget, cached_g, cached_co, checks = task
    co_graph = complement(graph)
    if not is_connected(graph) or not is_connected(co_graph):
        return None, [], None, None, None
    try:
        trc_g = cached_g or trc(graph, budget)
        trc_co = cached_co or trc(co_graph, budget)
    except TRCError as e:
        logger.error(f"{key} : {e}")
        return None, [], None, None, str(e)

    bound = ng_bound(graph.n)
    record = NGRecord(
        graph6=key,
        n=graph.n,
        trc_lo=trc_g.lo,
        trc_hi=trc_g.hi,
        cotrc_lo=trc_co.lo,
        cotrc_hi=trc_co.hi,
        bound=bound,
        verdict=verdict_for(trc_g, trc_co, bound),
        method_g=trc_g.method,
        method_gbar=trc_co.method,
    )
    findings: List[Finding] = []
    if checks:
        findings.extend(check_diameter_pair(graph, co_graph, key))
        for side, other_trc in ((graph, trc_co), (co_graph, trc_g)):
            finding = check_double_star_bound(side, other_trc, key)
            if finding is not None:
                findings.append(finding)
    return record, findings, trc_g, trc_co, None


def _read_tasks(
    lines: Iterable[str],
    budget: Optional[Budget],
    cache: Optional[ResultCache],
    checks: bool,
    summary: ScanSummary,
) -> List[ScanTask]:
    tasks: List[ScanTask] = []
    for number, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            graph = parse_graph6(line, number)
        except GraphFormatError as e:
            logger.warning(f"Ligne ignorée : {e}")
            summary.malformed += 1
            continue
        cached_g = cache.get(get_cache_key("g", line)) if cache else None
        cached_co = cache.get(get_cache_key("co", line)) if cache else None
        tasks.append((line, graph, budget, _usable(cached_g), _usable(cached_co), checks))
    return tasks


def _usable(cached: Optional[TrcResult]) -> Optional[TrcResult]:
    """Seule une valeur exacte en cache dispense du calcul"""
    return cached if cached is not None and cached.exact else None


def ng_scan(
    lines: Iterable[str],
    budget: Optional[Budget] = None,
    jobs: int = 1,
    cache: Optional[ResultCache] = None,
    checks: bool = True,
) -> Tuple[List[NGRecord], ScanSummary]:
    """
    Balaye un flux graph6

    Args:
        lines: lignes graph6 (en-tête >>graph6<< et lignes vides tolérés)
        budget: budget par appel au solveur
        jobs: nombre de processus
        cache: cache de résultats, lu et écrit par ce processus seulement
        checks: exécuter les vérifications de diamètre et de double étoile

    Returns:
        (enregistrements dans l'ordre d'entrée, résumé)
    """
    started = time.monotonic()
    summary = ScanSummary()
    tasks = _read_tasks(lines, budget, cache, checks, summary)
    logger.info(f"Balayage de {len(tasks)} graphes ({jobs} processus)")

    if jobs > 1 and len(tasks) > 1:
        with Pool(processes=jobs) as pool:
            outcomes = pool.map(_scan_one, tasks)
    else:
        outcomes = list(map(_scan_one, tasks))

    records: List[NGRecord] = []
    orders = set()
    for task, (record, findings, trc_g, trc_co, error) in zip(tasks, outcomes):
        key, graph = task[0], task[1]
        summary.scanned += 1
        orders.add(graph.n)
        if error is not None:
            summary.unknowns += 1
            continue
        if record is None:
            continue
        if cache is not None:
            cache.put(get_cache_key("g", key), trc_g)
            cache.put(get_cache_key("co", key), trc_co)
        summary.co_connected += 1
        summary.findings.extend(findings)
        records.append(record)

        if record.verdict == Verdict.VIOLATED:
            logger.error(f"Borne violée par {key} : {record.sum_lo} > {record.bound}")
            summary.violations.append(key)
        elif record.verdict == Verdict.UNKNOWN:
            summary.unknowns += 1
        if record.exact:
            if summary.max_sum is None or record.sum_lo > summary.max_sum:
                summary.max_sum, summary.argmax = record.sum_lo, [key]
            elif record.sum_lo == summary.max_sum:
                summary.argmax.append(key)

    summary.n = orders.pop() if len(orders) == 1 else None
    summary.runtime = time.monotonic() - started
    failed = summary.failed_findings()
    if failed:
        logger.error(f"{len(failed)} vérification(s) structurelle(s) en échec")
    logger.info(
        f"Balayage terminé : {summary.co_connected} paires, max {summary.max_sum}, "
        f"{len(summary.violations)} violation(s), {summary.unknowns} inconnue(s)"
    )
    return records, summary
