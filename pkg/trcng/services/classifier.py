# trcng/services/classifier.py
"""
Reconnaissance structurelle et valeur théorique de trc.

Les classes reconnues sont celles que l'on peut définir sans figure :
arbres par nombre de feuilles, cycles, B_l, graphes unicycliques
(circonférence, arbres non triviaux, adjacence, feuilles), graphes
spéciaux H1..H4 et graphes multicycliques par relation diamètre / ordre.

La valeur théorique est toujours intersectée avec l'intervalle
[lower_bound, upper_bound] du moteur de bornes.
"""
import logging
import time
from dataclasses import dataclass
from typing import Optional, Tuple

import networkx as nx

from trcng.models.graph import Graph
from trcng.schemas.classification import ClassReport, CoarseClass
from trcng.schemas.family import FamilyKind, FamilySpec
from trcng.schemas.graph import StructuralProfile, UnicyclicDecomposition
from trcng.schemas.solver import BoundReport, Budget, Method, TrcResult
from trcng.services import families
from trcng.services.constructions import b_ell_shape, b_ell_trc, cycle_trc
from trcng.services.exact_solver import bound_report, solve_trc
from trcng.services.graph_core import structural_profile, unicyclic_decompose

logger = logging.getLogger(__name__)

SPECIAL_GRAPHS = (FamilyKind.H1, FamilyKind.H2, FamilyKind.H3, FamilyKind.H4)


@dataclass
class _Claim:
    """Intervalle théorique ; None = pas de borne de ce côté"""
    lo: Optional[int]
    hi: Optional[int]
    tag: str
    subclass: Optional[str] = None
    primed: bool = False

    @classmethod
    def exact(cls, value: int, tag: str, subclass: Optional[str] = None) -> "_Claim":
        return cls(value, value, tag, subclass)

    @classmethod
    def at_most(cls, value: int, tag: str, subclass: Optional[str] = None, primed: bool = False) -> "_Claim":
        return cls(None, value, tag, subclass, primed)


def _special_kind(graph: Graph) -> Optional[FamilyKind]:
    if graph.n != 6:
        return None
    g = graph.to_networkx()
    for kind in SPECIAL_GRAPHS:
        if nx.is_isomorphic(g, families.generate(FamilySpec.build(kind)).to_networkx()):
            return kind
    return None


# ----------------------------------------------------------------------
# Graphes unicycliques
# ----------------------------------------------------------------------

def _triangle_claim(n: int, k: int, j: int) -> _Claim:
    name = f"G_{k}^{j}"
    if k == 3:
        return _Claim.exact(2 * n - j - 3, "unicyclic-l3", name)
    if k == 2:
        if j == 2:
            return _Claim.exact(2 * n - 5, "unicyclic-l3", name)
        if j == 3:
            return _Claim.exact(2 * n - 6, "unicyclic-l3", name)
        if j == 4:
            return _Claim(2 * n - 8, 2 * n - 7, "unicyclic-l3", name, primed=True)
        if j == 5:
            return _Claim.at_most(2 * n - 8, "unicyclic-l3", name, primed=True)
        return _Claim.at_most(2 * n - 9, "unicyclic-l3", name)
    # k == 1, j >= 2 (G_1^1 = B_3)
    if j == 2:
        return _Claim.exact(2 * n - 6, "unicyclic-l3", name)
    if j == 3:
        return _Claim(2 * n - 8, 2 * n - 7, "unicyclic-l3", name, primed=True)
    return _Claim(2 * n - j - 5, min(2 * n - j - 4, 2 * n - 9), "unicyclic-l3", name)


def _square_claim(n: int, dec: UnicyclicDecomposition, j: int) -> _Claim:
    nontrivial = dec.nontrivial_indices
    trivial = dec.trivial_indices
    k = len(nontrivial)
    if k == 1:
        index = 1
    elif k == 2:
        index = 2 if dec.cyclic_gap(*trivial) == 1 else 3
    else:
        index = k + 1
    name = f"H_{index}^{j}"
    tag = "unicyclic-l4"

    if index == 1:
        if j == 2:
            return _Claim(2 * n - 8, 2 * n - 7, tag, name, primed=True)
        if j == 3:
            return _Claim.at_most(2 * n - 8, tag, name, primed=True)
    elif index == 2:
        if j == 2:
            return _Claim.exact(2 * n - 7, tag, name)
        if j == 3:
            return _Claim.exact(2 * n - 8, tag, name)
    elif index == 3:
        if j == 2:
            return _Claim.exact(2 * n - 5, tag, name)
        if j == 3:
            return _Claim(2 * n - 8, 2 * n - 7, tag, name, primed=True)
        if j == 4:
            return _Claim.at_most(2 * n - 8, tag, name, primed=True)
    elif index == 4:
        if j == 3:
            return _Claim.exact(2 * n - 7, tag, name)
        if j == 4:
            # l'arbre à deux feuilles est-il voisin de l'élément trivial ?
            empty = trivial[0]
            double = next(i for i in nontrivial if dec.leaf_count[i] == 2)
            if dec.cyclic_gap(empty, double) == 1:
                return _Claim.exact(2 * n - 8, tag, name + "'")
    elif index == 5 and j == 4:
        return _Claim.exact(2 * n - 7, tag, name)
    return _Claim.at_most(2 * n - 9, tag, name)


def _pentagon_claim(n: int, dec: UnicyclicDecomposition, j: int) -> _Claim:
    nontrivial = dec.nontrivial_indices
    trivial = dec.trivial_indices
    k = len(nontrivial)
    tag = "unicyclic-l5"
    if k == 1:
        index = 1
    elif k == 2:
        index = 3 if dec.cyclic_gap(*nontrivial) == 1 else 2
    elif k == 3:
        index = 4 if dec.cyclic_gap(*trivial) == 1 else 5
    else:
        return _Claim.at_most(2 * n - 9, tag, f"I^{j}")
    name = f"I_{index}^{j}"

    if index == 2 and j == 2:
        return _Claim.exact(2 * n - 7, tag, name)
    if (index, j) in ((1, 2), (2, 3), (3, 2), (4, 3)):
        return _Claim.exact(2 * n - 8, tag, name)
    return _Claim.at_most(2 * n - 9, tag, name)


def _unicyclic_claim(graph: Graph, profile: StructuralProfile, dec: UnicyclicDecomposition) -> _Claim:
    n, ell, j = graph.n, dec.ell, profile.leaves
    k = len(dec.nontrivial_indices)
    if ell == 3:
        claim = _triangle_claim(n, k, j)
    elif ell == 4:
        claim = _square_claim(n, dec, j)
    elif ell == 5:
        claim = _pentagon_claim(n, dec, j)
    elif ell == 6 and k == 2 and profile.diam == n - 3:
        claim = _Claim.exact(2 * n - 7, "unicyclic-l6", "J_1")
    else:
        claim = _Claim.at_most(2 * n - 9, "unicyclic-long")

    if ell in (3, 4):
        # trc <= n + n' - 3 pour l = 3, 4
        cap = n + profile.inner - 3
        claim.hi = cap if claim.hi is None else min(claim.hi, cap)
    return claim


# ----------------------------------------------------------------------
# Graphes à au moins deux cycles
# ----------------------------------------------------------------------

def _multicyclic_claim(graph: Graph, profile: StructuralProfile) -> _Claim:
    n, ell, diam = graph.n, profile.circumference, profile.diam
    tag = f"multicyclic-l{ell}"
    if ell == 3:
        if diam == n - 3:
            return _Claim.exact(2 * n - 7, tag, "G4")
        return _Claim.at_most(2 * n - 8, tag, primed=True)
    if ell == 4:
        if diam == n - 2:
            return _Claim.exact(2 * n - 5, tag, "H6")
        if diam == n - 3:
            return _Claim.exact(2 * n - 7, tag, "H7")
        return _Claim.at_most(2 * n - 8, tag, primed=True)
    if ell == 5:
        if diam == n - 3:
            return _Claim.exact(2 * n - 7, tag, "I6")
        return _Claim.at_most(2 * n - 8, tag, primed=True)
    if ell == 6 and diam == n - 3:
        return _Claim.exact(2 * n - 7, tag, "J2")
    return _Claim.at_most(2 * n - 9, tag)


# ----------------------------------------------------------------------
# API
# ----------------------------------------------------------------------

def _classify(graph: Graph) -> Tuple[ClassReport, BoundReport]:
    profile = structural_profile(graph)
    bounds = bound_report(graph)
    n = graph.n
    dec = unicyclic_decompose(graph)
    report_fields = dict(n=n, ell=profile.circumference, leaf_count=profile.leaves)

    if graph.is_complete():
        coarse, claim = CoarseClass.COMPLETE, _Claim.exact(1, "complete")
    elif profile.circumference == 0:
        j = profile.leaves
        coarse = CoarseClass.PATH if j == 2 else CoarseClass.TREE
        claim = _Claim.exact(n + profile.inner - 1, "tree-formula", f"T^{j}")
    elif dec is not None and dec.ell == n:
        coarse, claim = CoarseClass.CYCLE, _Claim.exact(cycle_trc(n), "cycle-table", f"C_{n}")
    elif dec is not None and b_ell_shape(graph) is not None:
        coarse = CoarseClass.B_ELL
        claim = _Claim.exact(b_ell_trc(dec.ell, n - dec.ell), "b-ell-formula", f"B_{dec.ell}")
    elif dec is not None:
        coarse, claim = CoarseClass.UNICYCLIC, _unicyclic_claim(graph, profile, dec)
        report_fields["nontrivial_pattern"] = dec.nontrivial_flags
    elif (special := _special_kind(graph)) is not None:
        coarse, claim = CoarseClass.SPECIAL_H, _Claim.exact(4, "special", special.value.upper())
    elif profile.circumference_exact:
        coarse, claim = CoarseClass.MULTICYCLIC, _multicyclic_claim(graph, profile)
    else:
        coarse, claim = CoarseClass.OTHER, _Claim(None, None, "bounds")

    lo, hi = bounds.lower.value, bounds.upper.value
    theory_lo = lo if claim.lo is None else max(lo, claim.lo)
    theory_hi = hi if claim.hi is None else min(hi, claim.hi)
    if theory_lo > theory_hi:
        logger.warning(
            f"Intervalle théorique [{claim.lo}, {claim.hi}] ({claim.tag}) incompatible "
            f"avec les bornes [{lo}, {hi}], repli sur les bornes"
        )
        theory_lo, theory_hi, claim.tag = lo, hi, "bounds"

    report = ClassReport(
        coarse_class=coarse,
        subclass=claim.subclass,
        primed_ambiguity=claim.primed and theory_lo < theory_hi,
        trc_lo=theory_lo,
        trc_hi=theory_hi,
        theorem_tag=claim.tag,
        **report_fields,
    )
    return report, bounds


def classify(graph: Graph) -> ClassReport:
    """
    Classe structurelle et intervalle théorique de trc

    Args:
        graph: graphe connexe

    Returns:
        ClassReport ; trc_lo / trc_hi déjà intersectés avec le moteur de bornes
    """
    return _classify(graph)[0]


def trc_by_theory(graph: Graph) -> TrcResult:
    """
    Valeur exacte ou intervalle de trc sans recherche

    Le certificat du moteur de bornes est joint lorsqu'il atteint la borne haute.
    """
    report, bounds = _classify(graph)
    upper = bounds.upper
    certificate = upper.certificate if upper.certificate.palette == report.trc_hi else None
    return TrcResult(lo=report.trc_lo, hi=report.trc_hi, certificate=certificate, method=Method.THEORY)


def trc(graph: Graph, budget: Optional[Budget] = None) -> TrcResult:
    """
    Valeur théorique si elle est exacte, sinon recherche exacte intersectée
    avec l'intervalle théorique

    Args:
        graph: graphe connexe
        budget: budget de la recherche

    Returns:
        TrcResult ; method indique le chemin suivi
    """
    started = time.monotonic()
    theory = trc_by_theory(graph)
    if theory.exact:
        return theory

    searched = solve_trc(graph, budget)
    if searched.exact:
        return searched

    lo, hi = max(theory.lo, searched.lo), min(theory.hi, searched.hi)
    if lo > hi:
        logger.warning(f"Théorie [{theory.lo}, {theory.hi}] et recherche [{searched.lo}, {searched.hi}] disjointes")
        lo, hi = searched.lo, searched.hi
    certificate = searched.certificate if searched.certificate is not None and searched.certificate.palette == hi else None
    narrowed = (lo, hi) != (searched.lo, searched.hi)
    return TrcResult(
        lo=lo,
        hi=hi,
        certificate=certificate,
        method=Method.THEORY if narrowed else searched.method,
        unknown=lo < hi,
        nodes=searched.nodes,
        elapsed=time.monotonic() - started,
    )
