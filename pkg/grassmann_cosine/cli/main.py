"""
Command Line Interface for the Grassmann cosine transform toolkit
"""
import sys
import argparse
import logging
from pathlib import Path
from typing import List, Optional

from pydantic import ValidationError

from .. import __version__
from ..config.settings import get_settings
from ..core.exceptions import DomainError, GrassmannCosineException, ProfileParseError, SpecMismatch
from .commands import CheckCommand, LimitCommand, SpectrumCommand, TransformCommand

# exit codes
EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_INTERRUPTED = 130


def setup_logging() -> None:
    """Setup logging configuration; stdout is reserved for tables"""
    current = get_settings()
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if current.log_file:
        log_file = Path(current.log_file)
        log_file.parent.mkdir(parents=True, exist_ok=True)
        handlers.append(logging.FileHandler(log_file))

    logging.basicConfig(
        level=getattr(logging, current.log_level),
        format=current.log_format,
        handlers=handlers,
        force=True,
    )


def display_banner() -> None:
    """Display application banner on stderr"""
    current = get_settings()
    lines = [
        "=" * 70,
        f"Grassmann cosine transform v{__version__}",
        "=" * 70,
        f"Threads: {current.threads}",
        f"Nodes per dimension: {current.nodes_per_dim}",
        f"Refinement tolerance: {current.rel_tol:g}",
        "=" * 70,
    ]
    print("\n".join(lines), file=sys.stderr)


class CLIApplication:
    """Main CLI application class"""

    def __init__(self):
        self.logger = logging.getLogger("cli.main")
        self.commands = {
            command.name: command
            for command in (SpectrumCommand(), TransformCommand(), LimitCommand(), CheckCommand())
        }

    def create_parser(self) -> argparse.ArgumentParser:
        """Create the argument parser"""
        parser = argparse.ArgumentParser(
            prog="python -m grassmann_cosine",
            description="Cosine-lambda transforms on Grassmann manifolds Gr(p, K^n)",
            formatter_class=argparse.RawDescriptionHelpFormatter,
            epilog="""
Examples:
  python -m grassmann_cosine spectrum --p 2 --q 3 --field R --max-degree 4 --lambda 1
  python -m grassmann_cosine transform --p 2 --q 2 --f prod_cos2 --lambda 1 --method both
  python -m grassmann_cosine transform --p 1 --q 2 --f "1 + 3*c1^2" --lambda 0.5
  python -m grassmann_cosine limit --p 2 --q 2 --f sum_cos2 --pole -1
  python -m grassmann_cosine check --suite lemma58
  python -m grassmann_cosine check --suite haar --seed 7 --format json --out haar.json

Environment: GCT_THREADS, GCT_NODES_PER_DIM, GCT_REL_TOL, GCT_LOG_LEVEL, GCT_LOG_FILE
            """
        )

        subparsers = parser.add_subparsers(
            dest="command",
            help="Available commands",
            metavar="{" + ",".join(self.commands) + "}",
        )

        for command in self.commands.values():
            command.register_parser(subparsers)

        parser.add_argument(
            "--debug",
            action="store_true",
            help="Enable debug logging",
        )

        parser.add_argument(
            "--no-banner",
            action="store_true",
            help="Skip banner display",
        )

        return parser

    def run(self, args: argparse.Namespace) -> int:
        """
        Run the CLI application

        Args:
            args: Parsed command line arguments

        Returns:
            Exit code: 0 ok, 1 failed checks or engine error, 2 usage error
        """
        try:
            if args.debug:
                logging.getLogger().setLevel(logging.DEBUG)

            if not args.no_banner:
                display_banner()

            if args.command in self.commands:
                return self.commands[args.command].execute(args)
            self.logger.error("No command specified. Use --help for usage information.")
            return EXIT_USAGE

        except KeyboardInterrupt:
            self.logger.info("Operation cancelled by user")
            return EXIT_INTERRUPTED

        except (DomainError, ProfileParseError, SpecMismatch, ValidationError) as e:
            self.logger.error(f"Invalid arguments: {e}")
            return EXIT_USAGE

        except GrassmannCosineException as e:
            self.logger.error(f"{type(e).__name__}: {e}")
            if args.debug:
                self.logger.exception("Traceback")
            return EXIT_FAILURE

        except Exception as e:
            self.logger.error(f"Unexpected error: {e}")
            if args.debug:
                import traceback
                traceback.print_exc()
            return EXIT_FAILURE


def main_cli(argv: Optional[List[str]] = None) -> int:
    """Main CLI entry point"""
    setup_logging()

    app = CLIApplication()
    parser = app.create_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK

    # If no command provided, show help
    if not args.command:
        parser.print_help(sys.stderr)
        return EXIT_USAGE

    return app.run(args)


if __name__ == "__main__":
    sys.exit(main_cli())
