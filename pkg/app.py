"""Quiverlab command-line entry point."""

import logging
import sys

from dotenv import load_dotenv

load_dotenv()

from core.config import log_level
from cli.commands import run

logging.basicConfig(
    level=log_level(),
    stream=sys.stderr,
    format="%(asctime)s %(levelname)s %(name)s: %(message)s",
)

if __name__ == "__main__":
    sys.exit(run(sys.argv[1:]))
