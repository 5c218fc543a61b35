"""
Spanning-tree count CLI command
"""

import click

from .base_command import BaseCommand
from ....application.dto.compute_request import TauRequest
from ....infrastructure.config.settings import ExitCode


class TauCommand(BaseCommand):
    """
    Prints the number of spanning trees of a benzenoid chain
    """

    def execute(self, family: str, n: int, method: str, verbose: bool = False) -> int:
        try:
            response = self.app.tau_use_case.execute(TauRequest(family=family, n=n, method=method))
        except Exception as e:
            return self.fail(e)

        if verbose:
            click.echo(self.app.i18n.get("cli.tau.info", family=response.family,
                                         n=response.n, method=response.method), err=True)
        click.echo(str(response.count))
        return int(ExitCode.OK)
