# trcng/utils/export.py
import csv
import logging
from io import StringIO
from pathlib import Path
from typing import IO, Iterable, List, Optional

import jinja2

from trcng.models.graph import Graph
from trcng.schemas.coloring import TotalColoring
from trcng.schemas.scan import NGRecord, ScanSummary
from trcng.services.coloring import check_shape

logger = logging.getLogger(__name__)

CSV_HEADER = ["graph6", "n", "trc", "cotrc", "sum", "bound", "verdict", "method"]


class CSVExporter:
    """Rapport de scan au format CSV"""

    def __init__(self, delimiter: str = ","):
        self.delimiter = delimiter

    def write(self, records: Iterable[NGRecord], handle: IO[str]) -> int:
        """
        Écrit l'en-tête puis une ligne par enregistrement

        Returns:
            Nombre de lignes écrites (hors en-tête)
        """
        writer = csv.DictWriter(
            handle,
            fieldnames=CSV_HEADER,
            delimiter=self.delimiter,
            quotechar='"',
            quoting=csv.QUOTE_MINIMAL,
            lineterminator="\n",
        )
        writer.writeheader()
        count = 0
        for record in records:
            writer.writerow(record.csv_row())
            count += 1
        return count

    def export_to_csv_string(self, records: Iterable[NGRecord]) -> str:
        output = StringIO()
        self.write(records, output)
        return output.getvalue()

    def export_to_csv(self, records: Iterable[NGRecord], path: Path) -> str:
        with open(path, "w", newline="", encoding="utf-8") as handle:
            count = self.write(records, handle)
        logger.info(f"Fichier CSV généré : {path} ({count} lignes)")
        return str(path)


def records_lines(records: Iterable[NGRecord], summary: Optional[ScanSummary] = None) -> List[str]:
    """Une ligne JSON par enregistrement, puis le résumé s'il est fourni"""
    lines = [record.model_dump_json() for record in records]
    if summary is not None:
        lines.append(summary.model_dump_json())
    return lines


class DotExporter:
    """Certificat de coloration au format DOT, rendu par un template jinja2"""

    def __init__(self):
        self.template_dir = Path(__file__).parent.parent / "templates"
        self.template_env = jinja2.Environment(
            loader=jinja2.FileSystemLoader(str(self.template_dir)),
            autoescape=False,
        )

    def render(self, graph: Graph, coloring: TotalColoring, name: str = "G") -> str:
        check_shape(graph, coloring)
        template = self.template_env.get_template("coloring.dot.j2")
        return template.render(
            name=name,
            vertices=[{"id": v, "color": c} for v, c in enumerate(coloring.vertex_colors)],
            edges=[{"u": u, "v": v, "color": c} for (u, v), c in zip(graph.edges, coloring.edge_colors)],
        ) + "\n"


def to_dot(graph: Graph, coloring: TotalColoring, name: str = "G") -> str:
    return DotExporter().render(graph, coloring, name)
