"""Spectroscopy CSV files: ``phi_ext,frequency_ghz,label[,weight]``."""

import io

import pandas as pd
import pydantic

from src.core.exceptions import DataFormatError
from src.processors.base import FileProcessor
from src.schemas.fitting import OBSERVABLE_LABELS, TransitionObservation

REQUIRED_COLUMNS = ("phi_ext", "frequency_ghz", "label")
OPTIONAL_COLUMNS = ("weight",)
ALLOWED_LABELS = {label.value for label in OBSERVABLE_LABELS}

# Header occupies line 1, so data row i sits on line i + 2
FIRST_DATA_LINE = 2


def _number(frame: pd.DataFrame, column: str, index: int) -> float:
    raw = frame.at[index, column].strip()
    try:
        return float(raw)
    except ValueError as e:
        raise DataFormatError(
            f"Row {index + FIRST_DATA_LINE}: column '{column}' is not a number: {raw!r}",
            row=index + FIRST_DATA_LINE,
        ) from e


class SpectroscopyProcessor(FileProcessor[list[TransitionObservation]]):
    """Parse labelled transition frequencies for the spectrum fit."""

    def __init__(self) -> None:
        super().__init__(name="spectroscopy_csv")

    def parse_text(
        self, text: str, result_warnings: list[str]
    ) -> list[TransitionObservation]:
        """
        Parse rows into observations; a missing weight column means weight 1.

        Raises:
            DataFormatError: If the file is empty, a required column is missing,
                or a row holds a bad number or label (the error carries the row)
        """
        try:
            frame = pd.read_csv(
                io.StringIO(text),
                dtype=str,
                keep_default_na=False,
                skipinitialspace=True,
                comment="#",
            )
        except pd.errors.EmptyDataError as e:
            raise DataFormatError("Spectroscopy file is empty") from e
        except pd.errors.ParserError as e:
            raise DataFormatError(f"Malformed spectroscopy CSV: {e}") from e

        frame = frame.fillna("")
        frame.columns = [str(c).strip() for c in frame.columns]
        missing = [c for c in REQUIRED_COLUMNS if c not in frame.columns]
        if missing:
            raise DataFormatError(f"Missing required column(s): {', '.join(missing)}")
        for column in frame.columns:
            if column not in REQUIRED_COLUMNS + OPTIONAL_COLUMNS:
                result_warnings.append(f"Unknown column '{column}' ignored")
        if frame.empty:
            raise DataFormatError("Spectroscopy file has a header but no data rows")

        has_weight = "weight" in frame.columns
        observations = []
        for index in range(len(frame)):
            line = index + FIRST_DATA_LINE
            label = frame.at[index, "label"].strip().lower()
            if label not in ALLOWED_LABELS:
                raise DataFormatError(
                    f"Row {line}: unknown label {label!r}, expected one of "
                    f"{sorted(ALLOWED_LABELS)}",
                    row=line,
                )
            weight = _number(frame, "weight", index) if has_weight else 1.0
            try:
                observations.append(
                    TransitionObservation(
                        phi_ext=_number(frame, "phi_ext", index),
                        frequency=_number(frame, "frequency_ghz", index),
                        label=label,
                        weight=weight,
                    )
                )
            except pydantic.ValidationError as e:
                first = e.errors()[0]
                raise DataFormatError(f"Row {line}: {first['msg']}", row=line) from e
        return observations
