"""
Compute and evaluate CLI commands
"""

import click

from .base_command import BaseCommand
from ....application.dto.compute_request import ComputeRequest
from ....core.exceptions import ValidationError
from ....core.services.tutte_engine import SPECIALIZATION_POINTS, specializations
from ....infrastructure.config.settings import ExitCode


class ComputeCommand(BaseCommand):
    """
    Prints the Tutte polynomial of the requested graph
    """

    def execute(self, verbose: bool = False, **options) -> int:
        """
        Execute the compute command

        Args:
            verbose: Also report size, method and timing on stderr
            **options: ComputeRequest fields

        Returns:
            Exit code
        """
        try:
            request = ComputeRequest(**options)
            response = self.app.compute_use_case.execute(request)
        except Exception as e:
            return self.fail(e)

        click.echo(self.app.polynomial_writer.render(
            response.polynomial, request.output_format, response.metadata()))

        if verbose:
            click.echo(self.app.i18n.get(
                "cli.compute.info",
                source=response.source,
                vertices=response.vertex_count,
                edges=response.edge_count,
                method=response.method,
                elapsed=f"{response.elapsed_seconds:.3f}",
            ), err=True)
        return int(ExitCode.OK)


class EvaluateCommand(BaseCommand):
    """
    Prints counting specializations of the Tutte polynomial, or its value
    at one integer point
    """

    def execute(self, x=None, y=None, **options) -> int:
        """
        Execute the evaluate command

        Args:
            x, y: Evaluation point; both or neither must be given
            **options: ComputeRequest fields

        Returns:
            Exit code
        """
        try:
            if (x is None) != (y is None):
                raise ValidationError("Give both --x and --y, or neither")
            request = ComputeRequest(**options)
            polynomial = self.app.compute_use_case.execute(request).polynomial
        except Exception as e:
            return self.fail(e)

        if x is not None:
            label = self.app.i18n.get("evaluate.point", x=x, y=y)
            click.echo(f"{label} = {polynomial.evaluate(x, y)}")
            return int(ExitCode.OK)

        values = specializations(polynomial)
        for name in SPECIALIZATION_POINTS:
            click.echo(f"{self.app.i18n.get(f'evaluate.{name}')}: {values[name]}")
        return int(ExitCode.OK)
