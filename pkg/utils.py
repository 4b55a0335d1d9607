from pathlib import Path
from typing import Any
import json
import logging

from exceptions import DatumFormatError, InputError, MissingInputError

logger = logging.getLogger(__name__)


def read_json(path: Path) -> Any:
    """Read a JSON document, raising MissingInputError or DatumFormatError."""
    path = Path(path)
    if not path.absolute().exists():
        raise MissingInputError(f'File not found: {path}')
    logger.debug('Reading %s', path)
    try:
        with open(path, 'r', encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise DatumFormatError(f'Invalid JSON: {e.msg}', path=str(path),
                               location=f'line {e.lineno}, column {e.colno}') from e
    except OSError as e:
        raise MissingInputError(f'Cannot read {path}: {e}') from e


def check_fields(data: Any, required: set[str], optional: set[str], path: Path | str) -> None:
    if not isinstance(data, dict):
        raise DatumFormatError('Top level must be a JSON object', path=str(path))
    unknown = set(data) - required - optional
    if unknown:
        raise DatumFormatError(f'Unknown fields: {", ".join(sorted(unknown))}',
                               path=str(path), location=', '.join(sorted(unknown)))
    missing = required - set(data)
    if missing:
        raise DatumFormatError(f'Missing fields: {", ".join(sorted(missing))}',
                               path=str(path), location=', '.join(sorted(missing)))


def int_vector(value: Any, length: int, path: Path | str, location: str) -> tuple[int, ...]:
    if not isinstance(value, list) or any(isinstance(v, bool) or not isinstance(v, int) for v in value):
        raise DatumFormatError('Expected a list of integers', path=str(path), location=location)
    if len(value) != length:
        raise DatumFormatError(f'Expected {length} entries, got {len(value)}',
                               path=str(path), location=location)
    return tuple(value)


def int_rows(value: Any, rows: int, cols: int, path: Path | str, location: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(value, list) or len(value) != rows:
        count = len(value) if isinstance(value, list) else 'no'
        raise DatumFormatError(f'Expected {rows} rows, got {count}', path=str(path), location=location)
    return tuple(int_vector(row, cols, path, f'{location}[{r}]') for r, row in enumerate(value))


def write_text(path: Path, content: str) -> None:
    """Write content, creating missing parent directories; OS failures become InputError."""
    path = Path(path).absolute()
    logger.debug('Writing %d characters to %s', len(content), path)
    try:
        path.parent.mkdir(parents=True, exist_ok=True)
        with open(path, 'w', encoding='utf-8', newline='\n') as f:
            f.write(content)
    except OSError as e:
        raise InputError(f'Cannot write {path}: {e}') from e
