"""Log handler setup for the command-line frontend.

The library itself only creates module loggers; handlers are installed here,
on stderr, so stdout stays reserved for the JSON report.
"""

import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger

from fundamental_pairs.config import config


def configure_logging(level: Optional[str] = None, fmt: Optional[str] = None) -> None:
    """Install a single stderr handler on the root logger."""
    level = (level or config.log_level).upper()
    fmt = fmt or config.log_format

    handler = logging.StreamHandler(sys.stderr)
    if fmt == "json":
        handler.setFormatter(
            jsonlogger.JsonFormatter("%(asctime)s %(name)s %(levelname)s %(message)s")
        )
    else:
        handler.setFormatter(
            logging.Formatter("%(asctime)s - %(name)s - %(levelname)s - %(message)s")
        )

    logging.basicConfig(
        level=getattr(logging, level, logging.INFO),
        handlers=[handler],
        force=True,
    )
