"""
Shared behaviour of CLI commands
"""

import click

from ....core.exceptions import (
    InfeasibleMethod, TooManyEdges, TutteEngineException, VerificationFailure
)
from ....infrastructure.config.settings import ExitCode


def exit_code_for(error: Exception) -> ExitCode:
    """Map an exception to the CLI exit-code contract"""
    if isinstance(error, VerificationFailure):
        return ExitCode.VERIFICATION_FAILED
    if isinstance(error, (TooManyEdges, InfeasibleMethod)):
        return ExitCode.INFEASIBLE
    return ExitCode.INPUT_ERROR


class BaseCommand:
    """
    Base for CLI command objects; ``execute`` returns an exit code
    """

    def __init__(self, app):
        """
        Initialize command

        Args:
            app: CLI application instance
        """
        self.app = app

    def fail(self, error: Exception) -> int:
        """Report an error on stderr and return its exit code"""
        code = exit_code_for(error)

        if isinstance(error, TutteEngineException):
            key = "cli.error.infeasible" if code is ExitCode.INFEASIBLE else "cli.error.input"
            self.app.logger.info(f"{type(error).__name__}: {error}")
        else:
            key = "cli.error.unexpected"
            self.app.logger.exception("Unexpected error in CLI command")

        click.echo(self.app.i18n.get(key, message=str(error)), err=True)
        return int(code)
