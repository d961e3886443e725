"""CSV output of harness records and loading of user sample files."""
import csv
import re
import sys
from contextlib import contextmanager
from enum import Enum
from pathlib import Path
from typing import IO, Iterable, List, Optional, Sequence, Tuple, Type, TypeVar, Union

import numpy as np
from pydantic import BaseModel

from app.core.config import settings
from app.core.errors import DataFileError, WrongNodeFamilyError
from app.services.interpolation.nodes import (
    IntervalMap,
    NodeFamily,
    SampleSet,
    make_interval,
    make_nodes,
)

Record = TypeVar("Record", bound=BaseModel)
Destination = Union[str, Path, IO[str], None]

_SPLIT = re.compile(r"[,\s]+")


def format_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, Enum):
        return str(value.value)
    if isinstance(value, bool):
        return str(value).lower()
    if isinstance(value, (float, np.floating)):
        return f"{float(value):.{settings.CSV_FLOAT_DIGITS}g}"
    return str(value)


@contextmanager
def _open(destination: Destination):
    if destination is None or destination == "-":
        yield sys.stdout
    elif hasattr(destination, "write"):
        yield destination
    else:
        with Path(destination).open("w", newline="", encoding="utf-8") as f:
            yield f


def write_rows(header: Sequence[str], rows: Iterable[Sequence], destination: Destination = None) -> None:
    """Header plus rows; cells go through format_cell so floats keep 17 significant digits."""
    with _open(destination) as f:
        writer = csv.writer(f, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([format_cell(v) for v in row])


def export_csv(
    records: Sequence[BaseModel],
    destination: Destination = None,
    record_type: Optional[Type[BaseModel]] = None,
) -> None:
    """One row per record in input order; columns in the model's declared field order.

    An empty list needs record_type to produce its header-only file.
    """
    record_type = record_type or (type(records[0]) if records else None)
    if record_type is None:
        raise ValueError("record_type is required to export an empty record list")
    if any(type(r) is not record_type for r in records):
        raise ValueError(f"records must all be {record_type.__name__}")

    fields = list(record_type.model_fields)
    write_rows(fields, ([getattr(r, name) for name in fields] for r in records), destination)


def read_csv(path: Union[str, Path], record_type: Type[Record]) -> List[Record]:
    with Path(path).open(newline="", encoding="utf-8") as f:
        return [
            record_type(**{k: (v if v != "" else None) for k, v in row.items()})
            for row in csv.DictReader(f)
        ]


def load_data_file(path: Union[str, Path]) -> Tuple[np.ndarray, np.ndarray]:
    """Two columns (x, y), comma or whitespace separated, `#` comments, x strictly ascending."""
    xs, ys = [], []
    with Path(path).open(encoding="utf-8") as f:
        for lineno, raw in enumerate(f, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            cells = [c for c in _SPLIT.split(line) if c]
            if len(cells) != 2:
                raise DataFileError(f"{path}:{lineno}: expected 2 columns, got {len(cells)}")
            try:
                x, y = float(cells[0]), float(cells[1])
            except ValueError:
                raise DataFileError(f"{path}:{lineno}: not a number: {line!r}") from None
            xs.append(x)
            ys.append(y)

    x = np.array(xs)
    y = np.array(ys)
    if x.size < 2:
        raise DataFileError(f"{path}: need at least 2 samples, got {x.size}")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise DataFileError(f"{path}: non-finite sample")
    if np.any(np.diff(x) <= 0):
        raise DataFileError(f"{path}: abscissae must be strictly ascending")
    return x, y


def check_equidistant(x: np.ndarray, rtol: Optional[float] = None) -> None:
    rtol = settings.EQUIDISTANT_RTOL if rtol is None else rtol
    h = (x[-1] - x[0]) / (x.size - 1)
    deviation = float(np.max(np.abs(np.diff(x) - h)) / abs(h))
    if deviation > rtol:
        raise WrongNodeFamilyError(
            f"abscissae are not equidistant: relative spacing deviation {deviation:.3g} > {rtol:g}"
        )


def check_chebyshev(x: np.ndarray, family: NodeFamily, interval: IntervalMap, rtol: Optional[float] = None) -> None:
    rtol = settings.EQUIDISTANT_RTOL if rtol is None else rtol
    expected = np.sort(np.asarray(interval.from_unit(make_nodes(family, x.size - 1).nodes)))
    deviation = float(np.max(np.abs(np.sort(x) - expected)) / (interval.b - interval.a))
    if deviation > rtol:
        raise WrongNodeFamilyError(
            f"abscissae are not the {family.value} points of [{interval.a:g}, {interval.b:g}]: "
            f"relative deviation {deviation:.3g} > {rtol:g}"
        )


def _data_interval(x: np.ndarray, family: NodeFamily) -> IntervalMap:
    """Interval implied by the data span; first-kind points stop short of the endpoints."""
    mid = 0.5 * (x[0] + x[-1])
    half = 0.5 * (x[-1] - x[0])
    if family is NodeFamily.CHEB1:
        half /= np.cos(np.pi / (2 * x.size))
        return make_interval(float(mid - half), float(mid + half))
    return make_interval(float(x[0]), float(x[-1]))


def check_span(x: np.ndarray, interval: IntervalMap) -> None:
    """Equidistant data must span the whole interval."""
    tol = settings.EQUIDISTANT_RTOL * (interval.b - interval.a)
    if abs(x[0] - interval.a) > tol or abs(x[-1] - interval.b) > tol:
        raise DataFileError(
            f"equidistant data span [{x[0]:g}, {x[-1]:g}] does not match interval "
            f"[{interval.a:g}, {interval.b:g}]"
        )


def data_samples(
    x: np.ndarray, y: np.ndarray, family: NodeFamily, interval: Optional[IntervalMap] = None
) -> Tuple[SampleSet, IntervalMap]:
    """SampleSet on [-1, 1] for the given node family, plus the map back to the data interval.

    Without an explicit interval it is inferred from the data span.
    """
    family = NodeFamily(family)
    interval = interval or _data_interval(x, family)
    n = x.size - 1
    if family is NodeFamily.EQUIDISTANT:
        check_equidistant(x)
        check_span(x, interval)
        values = y
    else:
        check_chebyshev(x, family, interval)
        # Chebyshev node sets run in decreasing order
        values = y[::-1]
    return SampleSet(nodes=make_nodes(family, n), values=values), interval
