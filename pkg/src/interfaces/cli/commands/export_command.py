"""
Graph export CLI command
"""

from pathlib import Path

import click

from .base_command import BaseCommand
from ....application.dto.compute_request import ComputeRequest
from ....core.exceptions import ValidationError
from ....core.services.benzenoid import ChainFamily, build_dual_chain
from ....infrastructure.config.settings import ExitCode, Settings


class ExportCommand(BaseCommand):
    """
    Writes a family member, or the fan-like dual of a chain, as a graph file
    """

    def execute(self, output: Path, dual: bool = False, **options) -> int:
        try:
            request = ComputeRequest(**options)
            graph, source, _ = self.app.compute_use_case.resolve(request)

            if dual:
                if request.family not in Settings.CHAIN_FAMILIES:
                    raise ValidationError("Only benzenoid chains have a dual to export")
                graph = build_dual_chain(ChainFamily.from_label(request.family), request.n)
                source = f"dual of {source}"

            path = self.app.graph_handler.write_graph(graph, output, comment=source)
        except Exception as e:
            return self.fail(e)

        click.echo(self.app.i18n.get("cli.export.written", filename=str(path)))
        return int(ExitCode.OK)
