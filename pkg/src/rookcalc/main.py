"""
rookcalc command-line entrypoint
"""
import os
import sys
import logging
from typing import Optional, Sequence

from .cli import COMMANDS, parse_args
from .constants import DEFAULT_LOG_LEVEL, ENV_LOG_LEVEL, EXIT_IDENTITY_FAILED
from .errors import RookcalcError


def setup_logging():
    """Setup logging configuration; records go to stderr so stdout stays machine-readable"""
    log_level = os.getenv(ENV_LOG_LEVEL, DEFAULT_LOG_LEVEL).upper()

    logging.basicConfig(
        level=getattr(logging, log_level, logging.WARNING),
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        stream=sys.stderr
    )


def write_output(text: str, path: Optional[str]):
    if path is None:
        sys.stdout.write(text)
        sys.stdout.flush()
        return
    with open(path, 'w', newline='') as f:
        f.write(text)


def run(argv: Optional[Sequence[str]] = None) -> int:
    """
    Run one command

    Args:
        argv: Arguments without the program name; defaults to sys.argv[1:]

    Returns:
        Process exit code
    """
    logger = logging.getLogger(__name__)
    argv = sys.argv[1:] if argv is None else list(argv)

    try:
        config = parse_args(argv)
        logger.debug(f"Running {config.command} with {config.bindings} ranges {config.ranges}")
        text, code = COMMANDS[config.command](config)
        write_output(text, config.output)
        return code

    except RookcalcError as e:
        logger.debug(f"{type(e).__name__}: {e}", exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except Exception as e:
        logger.error(f"Unexpected failure: {e}", exc_info=True)
        return EXIT_IDENTITY_FAILED


def main():
    """Main entrypoint for rookcalc"""
    setup_logging()
    sys.exit(run())


if __name__ == '__main__':
    main()
