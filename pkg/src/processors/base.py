"""Base interface for input-file processors."""

import time
from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from pathlib import Path
from typing import Generic, Optional, TypeVar

from src.core.exceptions import OutputError
from src.core.logging import elapsed_ms, get_logger

T = TypeVar("T")

logger = get_logger(__name__)


@dataclass
class ParseResult(Generic[T]):
    """
    Result of parsing one input file.

    Fatal problems are raised by the processor; ``warnings`` collects the
    recoverable ones (ignored columns, unknown keys).
    """

    value: T
    source: str
    processor_name: str
    processing_time_ms: int = 0
    warnings: list[str] = field(default_factory=list)

    @property
    def has_warnings(self) -> bool:
        """Check if parsing produced warnings."""
        return len(self.warnings) > 0


class FileProcessor(ABC, Generic[T]):
    """
    Abstract base class for input-file processors.

    Subclasses implement :meth:`parse_text`; reading, timing and warning
    logging are shared.
    """

    def __init__(self, name: str):
        """
        Initialize processor.

        Args:
            name: Name used in log events and results
        """
        self.name = name

    @abstractmethod
    def parse_text(self, text: str, result_warnings: list[str]) -> T:
        """
        Parse file contents.

        Args:
            text: Decoded file contents
            result_warnings: List to append recoverable problems to

        Returns:
            Parsed value
        """

    def process(self, path: str | Path) -> ParseResult[T]:
        """
        Read and parse a file.

        Args:
            path: File to read

        Returns:
            ParseResult with the parsed value

        Raises:
            OutputError: If the file cannot be read
        """
        path = Path(path)
        start = time.perf_counter()
        try:
            text = path.read_text(encoding="utf-8")
        except (OSError, UnicodeDecodeError) as e:
            raise OutputError(f"Cannot read {path}: {e}", path=str(path)) from e
        return self.process_text(text, source=str(path), start=start)

    def process_text(
        self, text: str, source: str = "<string>", start: Optional[float] = None
    ) -> ParseResult[T]:
        """Parse already-loaded contents."""
        start = time.perf_counter() if start is None else start
        warnings: list[str] = []
        value = self.parse_text(text, warnings)
        for warning in warnings:
            logger.warning("input_warning", processor=self.name, source=source, warning=warning)
        return ParseResult(
            value=value,
            source=source,
            processor_name=self.name,
            processing_time_ms=elapsed_ms(start),
            warnings=warnings,
        )
