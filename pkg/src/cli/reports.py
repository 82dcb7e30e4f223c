# proj/src/cli/reports.py
"""
Rendering of command results as JSON, CSV or coloured text, and parsing of
spectrum tables back into rows.
"""

import io
import json
import sys
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Union

import pandas as pd
from colorama import Fore, Style
from pydantic import BaseModel

from src.core.exceptions import InputFileError, UsageError
from src.spectra.sphere_spectra import SpectrumRow

Payload = Union[BaseModel, Sequence[BaseModel]]
FORMATS = ("json", "csv", "text")

_INT_COLUMNS = ("n", "j", "l", "sign", "eigenvalue_num", "eigenvalue_den", "multiplicity")


def _jsonable(payload: Payload) -> Any:
    if isinstance(payload, BaseModel):
        return payload.model_dump(mode="json")
    return [item.model_dump(mode="json") for item in payload]


def _rational_strings(value: Any) -> Any:
    """{"num", "den"} objects become 'num/den' strings for flat tables."""
    if isinstance(value, dict):
        if set(value) == {"num", "den"}:
            return f"{value['num']}/{value['den']}" if value["den"] != 1 else str(value["num"])
        return {k: _rational_strings(v) for k, v in value.items()}
    if isinstance(value, list):
        return [_rational_strings(v) for v in value]
    return value


def to_json(payload: Payload) -> str:
    return json.dumps(_jsonable(payload), indent=2, ensure_ascii=False) + "\n"


def to_csv(payload: Payload) -> str:
    records = _jsonable(payload)
    if isinstance(records, dict):
        records = [records]
    frame = pd.json_normalize([_rational_strings(r) for r in records], sep=".")
    for column in frame.columns:
        frame[column] = frame[column].map(lambda v: json.dumps(v) if isinstance(v, list) else v)
    return frame.to_csv(index=False, lineterminator="\n")


def _status(flag: bool) -> str:
    return f"{Fore.GREEN}PASS{Style.RESET_ALL}" if flag else f"{Fore.RED}FAIL{Style.RESET_ALL}"


def _text_lines(record: Dict[str, Any], indent: str = "") -> List[str]:
    lines = []
    for key, value in record.items():
        if isinstance(value, bool) and key in ("passed", "holds"):
            lines.append(f"{indent}{key}: {_status(value)}")
        elif isinstance(value, dict) and set(value) != {"num", "den"}:
            lines.append(f"{indent}{key}:")
            lines += _text_lines(value, indent + "  ")
        else:
            lines.append(f"{indent}{key}: {_rational_strings(value)}")
    return lines


def to_text(payload: Payload) -> str:
    records = _jsonable(payload)
    if isinstance(records, dict):
        records = [records]
    blocks = ["\n".join(_text_lines(r)) for r in records]
    return "\n\n".join(blocks) + "\n"


def render(payload: Payload, fmt: str) -> str:
    """
    Render a model or list of models

    Args:
        payload (Payload): pydantic model(s) to render
        fmt (str): 'json', 'csv' or 'text'

    Returns:
        str: deterministic document text
    """
    if fmt == "json":
        return to_json(payload)
    if fmt == "csv":
        return to_csv(payload)
    if fmt == "text":
        return to_text(payload)
    raise UsageError(f"unknown output format {fmt!r}; expected one of {FORMATS}")


def write_output(text: str, output: Optional[str]) -> None:
    if output is None:
        sys.stdout.write(text)
        return
    path = Path(output)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(text)


def spectrum_from_json(text: str) -> List[SpectrumRow]:
    return [SpectrumRow.model_validate(record) for record in json.loads(text)]


def spectrum_from_csv(text: str) -> List[SpectrumRow]:
    frame = pd.read_csv(io.StringIO(text), dtype=str)
    rows = []
    for record in frame.to_dict(orient="records"):
        rows.append(SpectrumRow(**{k: (int(v) if k in _INT_COLUMNS else v) for k, v in record.items()}))
    return rows


def read_spectrum(path: Union[str, Path]) -> List[SpectrumRow]:
    """
    Load a spectrum table written by the spectra command

    Raises:
        InputFileError: on a missing or unparsable table
    """
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as e:
        raise InputFileError(f"cannot read spectrum table: {e}", path=str(path))
    try:
        if path.suffix == ".csv":
            return spectrum_from_csv(text)
        return spectrum_from_json(text)
    except (ValueError, KeyError, TypeError) as e:
        raise InputFileError(f"malformed spectrum table: {e}", path=str(path))
