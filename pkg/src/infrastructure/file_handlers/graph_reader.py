"""
Text graph file reading and writing

Format::

    # optional comments
    vertices 4
    0 1
    1 2
    2 2

One edge per line; a loop repeats its vertex.
"""

import logging
from pathlib import Path
from typing import List, Tuple

from ...core.exceptions import FileProcessingError, ParseError
from ...core.models.multigraph import MultiGraph


class GraphFileHandler:
    """
    Reads and writes multigraphs in the text graph format
    """

    HEADER = "vertices"

    def __init__(self):
        self.logger = logging.getLogger(__name__)

    def read_graph(self, file_path: Path) -> MultiGraph:
        """
        Read a graph file

        Raises:
            FileProcessingError: If the file cannot be read
            ParseError: If the content is malformed
        """
        try:
            text = Path(file_path).read_text(encoding="utf-8")
        except UnicodeDecodeError as e:
            raise ParseError(f"Not UTF-8 text at byte {e.start}", source=str(file_path))
        except OSError as e:
            raise FileProcessingError(f"Failed to read graph file: {e}", str(file_path))

        graph = self.parse_graph_text(text, source=str(file_path))
        self.logger.info(f"Read {graph} from {file_path}")
        return graph

    def parse_graph_text(self, text: str, source: str = "<text>") -> MultiGraph:
        """
        Parse graph text

        Raises:
            ParseError: With the offending line number
        """
        vertex_count = None
        pairs: List[Tuple[int, int]] = []

        for line_number, raw_line in enumerate(text.splitlines(), start=1):
            line = raw_line.split("#", 1)[0].strip()
            if not line:
                continue

            fields = line.split()
            if vertex_count is None:
                if len(fields) != 2 or fields[0].lower() != self.HEADER:
                    raise ParseError(f"Expected header 'vertices N', got {line!r}",
                                     source=source, line_number=line_number)
                vertex_count = self._read_index(fields[1], source, line_number)
                continue

            if len(fields) != 2:
                raise ParseError(f"Expected an edge 'u v', got {line!r}",
                                 source=source, line_number=line_number)
            a = self._read_index(fields[0], source, line_number)
            b = self._read_index(fields[1], source, line_number)
            if a >= vertex_count or b >= vertex_count:
                raise ParseError(f"Edge {a} {b} refers to a vertex outside 0..{vertex_count - 1}",
                                 source=source, line_number=line_number)
            pairs.append((a, b))

        if vertex_count is None:
            raise ParseError("Missing 'vertices N' header", source=source)

        return MultiGraph.from_pairs(vertex_count, pairs)

    @staticmethod
    def _read_index(token: str, source: str, line_number: int) -> int:
        if not token.isdigit():
            raise ParseError(f"Expected a non-negative integer, got {token!r}",
                             source=source, line_number=line_number)
        return int(token)

    def format_graph(self, graph: MultiGraph, comment: str = "") -> str:
        """Render a graph in the text graph format"""
        lines = []
        if comment:
            lines.extend(f"# {line}" for line in comment.splitlines())
        lines.append(f"{self.HEADER} {graph.vertex_count}")
        lines.extend(f"{a} {b}" for a, b in graph.pairs())
        return "\n".join(lines) + "\n"

    def write_graph(self, graph: MultiGraph, file_path: Path, comment: str = "") -> Path:
        """
        Write a graph file, creating parent directories

        Raises:
            FileProcessingError: If the file cannot be written
        """
        path = Path(file_path)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(self.format_graph(graph, comment), encoding="utf-8")
        except OSError as e:
            raise FileProcessingError(f"Failed to write graph file: {e}", str(path))

        self.logger.info(f"Wrote {graph} to {path}")
        return path
