from collections.abc import Iterable, Iterator, Sized
import logging
from typing import Any, TypeVar

from rich.console import Console
from rich.logging import RichHandler
from rich.progress import BarColumn, MofNCompleteColumn, Progress, SpinnerColumn, TextColumn, TimeElapsedColumn
from rich.status import Status

T = TypeVar("T")

# Diagnostics go to stderr; stdout is reserved for reports, Cayley tables and DOT text
_console = Console(stderr=True)

_logger_registry: dict[str, "RichLogger"] = {}
_level = logging.INFO


class RichLogger(logging.Logger):
    """A rich-enhanced logger that inherits from logging.Logger."""

    def __init__(self, name: str) -> None:
        super().__init__(name)
        self.console = _console
        self._setup_logger()

    def _setup_logger(self) -> None:
        """Setup the logger with Rich handler."""
        self.setLevel(_level)

        # Prevent propagation to root logger to avoid duplicate output
        self.propagate = False

        for handler in self.handlers[:]:
            self.removeHandler(handler)

        rich_handler = RichHandler(
            console=self.console, show_time=False, show_path=False, rich_tracebacks=True, markup=True
        )
        rich_handler.setLevel(logging.DEBUG)
        self.addHandler(rich_handler)

    def _styled(self, level: int, prefix: str, msg: object, args: tuple, kwargs: dict[str, Any]) -> None:
        message = str(msg) % args if args else str(msg)
        extra = kwargs.pop("extra", {})
        extra["markup"] = True
        kwargs.setdefault("stacklevel", 3)
        super().log(level, f"{prefix} {message}", extra=extra, **kwargs)

    def info(self, msg, *args, **kwargs) -> None:
        """Log info message with rich formatting."""
        self._styled(logging.INFO, "[green]✓[/green]", msg, args, kwargs)

    def error(self, msg, *args, **kwargs) -> None:
        """Log error message with rich formatting."""
        self._styled(logging.ERROR, "[red]✗[/red]", msg, args, kwargs)

    def warning(self, msg, *args, **kwargs) -> None:
        """Log warning message with rich formatting."""
        self._styled(logging.WARNING, "[yellow]⚠[/yellow]", msg, args, kwargs)

    def debug(self, msg, *args, **kwargs) -> None:
        """Log debug message with rich formatting."""
        self._styled(logging.DEBUG, "[dim]•[/dim]", msg, args, kwargs)

    def exception(self, msg, *args, exc_info=True, **kwargs) -> None:
        """Log exception with rich formatting."""
        self._styled(logging.ERROR, "[red]💥[/red]", msg, args, {"exc_info": exc_info, **kwargs})

    def print(self, *args, **kwargs) -> None:
        """Print directly to the diagnostics console."""
        self.console.print(*args, **kwargs)

    def status(self, *args, **kwargs) -> Status:
        """Create a status context manager."""
        return self.console.status(*args, **kwargs)

    def progress(self, sequence: Iterable[T], description: str = "Processing") -> Iterator[T]:
        """Iterate over ``sequence`` while showing a transient progress bar."""
        progress = Progress(
            SpinnerColumn(),
            TextColumn("[progress.description]{task.description}"),
            BarColumn(),
            MofNCompleteColumn(),
            TimeElapsedColumn(),
            console=self.console,
            transient=True,
        )
        total = len(sequence) if isinstance(sequence, Sized) else None
        with progress:
            task_id = progress.add_task(description, total=total)
            for item in sequence:
                yield item
                progress.advance(task_id, 1)


def get_logger(name: str) -> RichLogger:
    """Get a rich-enhanced logger instance."""
    if name in _logger_registry:
        return _logger_registry[name]

    if name in logging.Logger.manager.loggerDict:
        existing_logger = logging.getLogger(name)
        if isinstance(existing_logger, RichLogger):
            _logger_registry[name] = existing_logger
            return existing_logger
        # A plain logger was created earlier under this name; replace it
        del logging.Logger.manager.loggerDict[name]

    logging.setLoggerClass(RichLogger)
    logger = logging.getLogger(name)
    logging.setLoggerClass(logging.Logger)

    _logger_registry[name] = logger  # type: ignore[assignment]
    return logger  # type: ignore[return-value]


def set_log_level(level: int) -> None:
    """Set the level of every registered logger and of loggers created later."""
    global _level
    _level = level
    for logger in _logger_registry.values():
        logger.setLevel(level)
