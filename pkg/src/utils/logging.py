"""
Logging setup shared by the CLI and the MCP server.
"""

import logging
import sys
from typing import Optional

from pythonjsonlogger import jsonlogger
from rich.console import Console
from rich.logging import RichHandler

LOG_FORMAT = "%(asctime)s - %(name)s - %(levelname)s - %(message)s"


def setup_logging(level: str = "INFO", fmt: str = "text", stream: Optional[object] = None) -> None:
    """
    Configure the root logger.

    Args:
        level: log level name
        fmt: ``text`` for rich console output, ``json`` for one JSON object per line
        stream: destination stream, stderr by default
    """
    stream = stream or sys.stderr
    root = logging.getLogger()
    for handler in list(root.handlers):
        root.removeHandler(handler)

    if fmt == "json":
        handler: logging.Handler = logging.StreamHandler(stream)
        handler.setFormatter(jsonlogger.JsonFormatter(LOG_FORMAT))
    else:
        handler = RichHandler(
            console=Console(file=stream),
            show_path=False,
            rich_tracebacks=True,
        )
        handler.setFormatter(logging.Formatter("%(name)s - %(message)s"))

    root.addHandler(handler)
    root.setLevel(level.upper())
