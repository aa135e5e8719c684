import logging
from dataclasses import dataclass, field
from typing import Any

import click
from rich.console import Console
from rich.logging import RichHandler
from rich.text import Text

from .commands import chronomatch


@dataclass
class CmApp:
    console: Console = field(default_factory=Console)
    err_console: Console = field(default_factory=lambda: Console(stderr=True))

    def __call__(self, args: list[str] | None = None) -> Any:
        return chronomatch.main(args, prog_name="cm", obj=self)

    def print(self, text_alike: Any, style: str = "") -> None:
        if isinstance(text_alike, str):
            text_alike = Text(text_alike, style=style or "cyan")
        self.console.print(text_alike)

    def echo(self, text: str) -> None:
        """Write plain text, such as CSV, to standard output"""
        click.echo(text, nl=False)

    def info(self, text: str) -> None:
        self.err_console.print(Text(text, style="green"))

    def configure_logging(self, level: str) -> None:
        """Send the package logs to standard error through rich"""
        logger = logging.getLogger("chronomatch")
        for handler in list(logger.handlers):
            if isinstance(handler, RichHandler):
                logger.removeHandler(handler)
        handler = RichHandler(console=self.err_console, show_path=False)
        handler.setFormatter(logging.Formatter("%(message)s"))
        logger.addHandler(handler)
        logger.setLevel(level.upper())
