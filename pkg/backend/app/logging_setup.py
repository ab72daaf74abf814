import logging

from rich.console import Console
from rich.logging import RichHandler

# stdout carries the JSON report, so all diagnostics go to stderr
stderr_console = Console(stderr=True)

_configured = False


def configure_logging(level: str = "WARNING") -> None:
    """Install a single rich handler on the root logger (idempotent)."""
    global _configured
    if _configured:
        logging.getLogger().setLevel(level)
        return
    logging.basicConfig(
        level=level,
        format="%(name)s: %(message)s",
        handlers=[RichHandler(console=stderr_console, show_path=False)],
    )
    _configured = True
