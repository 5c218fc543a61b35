"""
Verification CLI command
"""

import click

from .base_command import BaseCommand
from ....application.dto.compute_request import VerifyRequest
from ....core.models.report import CheckResult, VerificationReport
from ....infrastructure.config.settings import ExitCode


class VerifyCommand(BaseCommand):
    """
    Runs verification scopes and prints one line per check
    """

    def execute(self, scope: str, failures_only: bool = False) -> int:
        """
        Execute the verify command

        Args:
            scope: Scope name or ``all``
            failures_only: Print only failing checks

        Returns:
            0 if every check passed, 1 otherwise
        """
        try:
            request = VerifyRequest(scope=scope)
        except Exception as e:
            return self.fail(e)

        i18n = self.app.i18n
        click.echo(i18n.get("cli.verify.start", scopes=", ".join(request.scopes)))

        def show(result: CheckResult):
            if result.passed and not failures_only:
                click.echo(i18n.get("cli.verify.pass", scope=result.scope, name=result.name))
            elif not result.passed:
                click.echo(i18n.get("cli.verify.fail", scope=result.scope,
                                    name=result.name, detail=result.detail))

        report = self.app.verify_use_case.execute(request, on_result=show)
        self._print_summary(report)

        if report.passed:
            click.echo(i18n.get("cli.verify.ok", count=len(report.results)))
            return int(ExitCode.OK)

        first = report.first_failure
        click.echo(i18n.get("cli.verify.failed", failed=len(report.failures), count=len(report.results),
                            counterexample=f"[{first.scope}] {first.counterexample}"), err=True)
        return int(ExitCode.VERIFICATION_FAILED)

    def _print_summary(self, report: VerificationReport):
        for tally in report.summary().values():
            click.echo(self.app.i18n.get("cli.verify.summary", scope=tally.scope,
                                         passed=tally.passed, total=tally.total))
