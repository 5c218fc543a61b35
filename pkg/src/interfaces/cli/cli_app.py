"""
Command Line Interface application
"""

import logging
from pathlib import Path
from typing import Optional, Sequence

import click

from .commands.compute_command import ComputeCommand, EvaluateCommand
from .commands.export_command import ExportCommand
from .commands.tau_command import TauCommand
from .commands.verify_command import VerifyCommand
from ...application.use_cases.compute_polynomial import ComputePolynomialUseCase
from ...application.use_cases.count_spanning_trees import CountSpanningTreesUseCase
from ...application.use_cases.verify_results import VerifyResultsUseCase
from ...core.services.tutte_engine import TutteEngine
from ...infrastructure.config.settings import ComputeMethod, OutputFormat, Settings, TauMethod
from ...infrastructure.file_handlers.graph_reader import GraphFileHandler
from ...infrastructure.file_handlers.polynomial_writer import PolynomialWriter
from ...infrastructure.localization.i18n import LocalizationManager


def source_options(func):
    """Options selecting the graph: a named family, a graph file or a marked base"""
    options = [
        click.option('--family', type=click.Choice(Settings.family_names()),
                     help='Named family: linear, pyrene, triphenylene, fan or wheel'),
        click.option('--n', 'n', type=int, help='Family member index'),
        click.option('--graph', 'graph_file', type=click.Path(path_type=Path),
                     help='Graph file ("vertices N" then one "u v" per line)'),
        click.option('--base', 'base_file', type=click.Path(path_type=Path),
                     help='Base graph file of a fan-like family'),
        click.option('--marks', help='Marked base vertices "v,u" or "v,u,w"'),
        click.option('--shape', help='Family shape: F, F+, F++, W, G, +G or +G+'),
    ]
    for option in reversed(options):
        func = option(func)
    return func


class CLIApp:
    """
    Command Line Interface application for the Tutte polynomial engine
    """

    def __init__(self, config: dict, localization_manager: LocalizationManager):
        """
        Initialize CLI application

        Args:
            config: Application configuration
            localization_manager: Localization manager
        """
        self.config = config
        self.i18n = localization_manager
        self.logger = logging.getLogger(__name__)

        self._setup_services()

    def _setup_services(self):
        """Setup application services"""
        verification = self.config.get('verification', {})

        self.engine = TutteEngine.from_config(self.config)
        self.graph_handler = GraphFileHandler()
        self.polynomial_writer = PolynomialWriter()

        self.compute_use_case = ComputePolynomialUseCase(self.engine, self.graph_handler)
        self.tau_use_case = CountSpanningTreesUseCase(
            kirchhoff_max_vertices=int(verification.get('kirchhoff_max_vertices', 2000)))
        self.verify_use_case = VerifyResultsUseCase(self.engine, verification)

    def build_cli(self) -> click.Group:
        """Create the click command group bound to this application"""
        default_format = self.config.get('output', {}).get('format', OutputFormat.TEXT.value)

        @click.group()
        @click.option('--verbose', '-v', is_flag=True, help='Enable verbose logging')
        @click.option('--lang', '--language', type=click.Choice(Settings.SUPPORTED_LANGUAGES),
                      help='Interface language (en=English, ru=Russian)')
        @click.pass_context
        def cli(ctx, verbose, lang):
            """Fan-like Tutte - exact Tutte polynomials of multigraphs

            Example usage:
            python main.py compute --family pyrene --n 1
            python main.py tau --family triphenylene --n 2
            python main.py verify appendix
            """
            if verbose:
                logging.getLogger().setLevel(logging.DEBUG)
                for handler in logging.getLogger().handlers:
                    handler.setLevel(logging.DEBUG)

            if lang:
                self.i18n.switch_language(lang)

            ctx.ensure_object(dict)
            ctx.obj['app'] = self
            ctx.obj['verbose'] = verbose

        @cli.command('compute')
        @source_options
        @click.option('--method', type=click.Choice([m.value for m in ComputeMethod]),
                      default=ComputeMethod.AUTO.value, show_default=True,
                      help='auto prefers the closed form for families')
        @click.option('--format', 'output_format', type=click.Choice([f.value for f in OutputFormat]),
                      default=default_format, show_default=True, help='Output format')
        @click.option('--strategy', type=click.Choice(['power', 'binomial']), default='power',
                      show_default=True, help='Closed-form evaluation strategy')
        @click.pass_context
        def compute(ctx, **options):
            """Print the Tutte polynomial of a family member or a graph file

            Examples:
            python main.py compute --family fan --n 2 --method delcon
            python main.py compute --graph attached_assets/k4.txt --format json
            python main.py compute --base attached_assets/p3.txt --marks 0,1,2 --shape +G+ --n 3
            """
            app = ctx.obj['app']
            ctx.exit(ComputeCommand(app).execute(verbose=ctx.obj['verbose'], **options))

        @cli.command('evaluate')
        @source_options
        @click.option('--method', type=click.Choice([m.value for m in ComputeMethod]),
                      default=ComputeMethod.AUTO.value, show_default=True)
        @click.option('--x', 'x', type=int, help='Evaluate at this x (with --y)')
        @click.option('--y', 'y', type=int, help='Evaluate at this y (with --x)')
        @click.pass_context
        def evaluate(ctx, **options):
            """Print counting specializations of the Tutte polynomial

            Example:
            python main.py evaluate --family pyrene --n 1
            """
            app = ctx.obj['app']
            ctx.exit(EvaluateCommand(app).execute(**options))

        @cli.command('tau')
        @click.option('--family', required=True, type=click.Choice(Settings.CHAIN_FAMILIES))
        @click.option('--n', 'n', required=True, type=int)
        @click.option('--method', type=click.Choice([m.value for m in TauMethod]),
                      default=TauMethod.RECURRENCE.value, show_default=True)
        @click.pass_context
        def tau(ctx, family, n, method):
            """Print the number of spanning trees of a benzenoid chain

            Example:
            python main.py tau --family pyrene --n 3
            """
            app = ctx.obj['app']
            ctx.exit(TauCommand(app).execute(family, n, method, verbose=ctx.obj['verbose']))

        @cli.command('verify')
        @click.argument('scope', type=click.Choice(Settings.VERIFY_SCOPES), default='all')
        @click.option('--failures-only', is_flag=True, help='Print only failing checks')
        @click.pass_context
        def verify(ctx, scope, failures_only):
            """Run cross-method verification checks

            Exit status is 0 when every check passes and 1 otherwise.
            """
            app = ctx.obj['app']
            ctx.exit(VerifyCommand(app).execute(scope, failures_only=failures_only))

        @cli.command('export')
        @source_options
        @click.option('--output', '-o', required=True, type=click.Path(path_type=Path),
                      help='Graph file to write')
        @click.option('--dual', is_flag=True, help='Export the fan-like dual of a chain')
        @click.pass_context
        def export(ctx, **options):
            """Write a family member as a graph file

            Example:
            python main.py export --family pyrene --n 2 --dual -o output/pyrene_dual_2.txt
            """
            app = ctx.obj['app']
            ctx.exit(ExportCommand(app).execute(**options))

        @cli.command('version')
        def version():
            """Show version information"""
            app_name = self.config.get('application', {}).get('name', Settings.APP_NAME)
            app_version = self.config.get('application', {}).get('version', Settings.APP_VERSION)
            click.echo(f"{app_name} v{app_version}")

        return cli

    def run(self, args: Optional[Sequence[str]] = None):
        """Run the CLI application"""
        self.build_cli()(args=args)
