"""Signal and spectrum files in three formats.

csv   one decimal real per line, '.' separator, no header; complex
      vectors use two columns per line, ``re,im``.
json  a single top-level array of numbers; complex vectors are arrays
      of ``[re, im]`` pairs.
bin   8-byte ASCII magic ``HFORGE01``, an unsigned 64-bit little-endian
      sample count, then that many IEEE-754 binary64 little-endian
      samples. Complex vectors are stored as interleaved re,im doubles
      with count = 2N. Round-trips are bit-exact.

Text formats write shortest-round-trip decimal (Python repr), so values
read back exactly equal as well.
"""

from __future__ import annotations

import json
import struct
from pathlib import Path

import numpy as np

__all__ = [
    "FORMATS",
    "BIN_MAGIC",
    "SignalFileError",
    "ParseError",
    "EmptySignalError",
    "MagicMismatchError",
    "TruncatedPayloadError",
    "infer_format",
    "read_signal",
    "read_complex_spectrum",
    "write_spectrum",
]

FORMATS = ("csv", "json", "bin")
BIN_MAGIC = b"HFORGE01"

_SUFFIXES = {".csv": "csv", ".json": "json", ".bin": "bin"}


class SignalFileError(ValueError):
    """Base for malformed signal/spectrum files."""


class ParseError(SignalFileError):
    pass


class EmptySignalError(SignalFileError):
    pass


class MagicMismatchError(SignalFileError):
    pass


class TruncatedPayloadError(SignalFileError):
    pass


def infer_format(path) -> str:
    suffix = Path(path).suffix.lower()
    try:
        return _SUFFIXES[suffix]
    except KeyError:
        raise SignalFileError(
            f"cannot infer format from {path!r}; pass one of {FORMATS}"
        ) from None


def _check_format(fmt: str) -> str:
    if fmt not in FORMATS:
        raise SignalFileError(f"unknown format {fmt!r}; expected one of {FORMATS}")
    return fmt


def _parse_float(token: str, where: str) -> float:
    try:
        return float(token)
    except ValueError:
        raise ParseError(f"{where}: cannot parse {token!r} as a number") from None


def _read_csv(path) -> np.ndarray:
    values = []
    width = None
    with open(path, "r", encoding="ascii") as fh:
        lines = fh.read().split("\n")
    # a single trailing newline leaves one empty string at the end
    if lines and lines[-1] == "":
        lines.pop()
    for lineno, line in enumerate(lines, start=1):
        fields = line.split(",")
        if width is None:
            width = len(fields)
            if width not in (1, 2):
                raise ParseError(f"line {lineno}: expected 1 or 2 columns, got {width}")
        elif len(fields) != width:
            raise ParseError(
                f"line {lineno}: expected {width} column(s), got {len(fields)}"
            )
        values.append([_parse_float(f, f"line {lineno}") for f in fields])
    if not values:
        raise EmptySignalError(f"{path}: no samples")
    arr = np.asarray(values, dtype=np.float64)
    if arr.shape[1] == 1:
        return arr[:, 0]
    return arr[:, 0] + 1j * arr[:, 1]


def _read_json(path) -> np.ndarray:
    with open(path, "r", encoding="utf-8") as fh:
        try:
            payload = json.load(fh)
        except json.JSONDecodeError as exc:
            raise ParseError(f"{path}: invalid json ({exc})") from None
    if not isinstance(payload, list):
        raise ParseError(f"{path}: top-level value must be an array")
    if not payload:
        raise EmptySignalError(f"{path}: no samples")
    if all(isinstance(x, (int, float)) and not isinstance(x, bool) for x in payload):
        return np.asarray(payload, dtype=np.float64)
    if all(
        isinstance(x, list)
        and len(x) == 2
        and all(isinstance(p, (int, float)) and not isinstance(p, bool) for p in x)
        for x in payload
    ):
        arr = np.asarray(payload, dtype=np.float64)
        return arr[:, 0] + 1j * arr[:, 1]
    raise ParseError(f"{path}: entries must all be numbers or all [re, im] pairs")


def _read_bin(path) -> np.ndarray:
    data = Path(path).read_bytes()
    if len(data) < len(BIN_MAGIC) or data[: len(BIN_MAGIC)] != BIN_MAGIC:
        raise MagicMismatchError(f"{path}: bad or missing magic")
    if len(data) < len(BIN_MAGIC) + 8:
        raise TruncatedPayloadError(f"{path}: missing sample count")
    (count,) = struct.unpack_from("<Q", data, len(BIN_MAGIC))
    if count == 0:
        raise EmptySignalError(f"{path}: sample count is zero")
    body = data[len(BIN_MAGIC) + 8 :]
    expected = 8 * count
    if len(body) < expected:
        raise TruncatedPayloadError(
            f"{path}: payload holds {len(body)} bytes, header promises {expected}"
        )
    if len(body) > expected:
        raise ParseError(f"{path}: {len(body) - expected} trailing bytes after payload")
    return np.frombuffer(body, dtype="<f8").astype(np.float64)


_READERS = {"csv": _read_csv, "json": _read_json, "bin": _read_bin}


def read_signal(path, fmt: str | None = None) -> np.ndarray:
    """Read a real sample vector; raises SignalFileError subclasses on bad files."""
    fmt = _check_format(fmt) if fmt else infer_format(path)
    arr = _READERS[fmt](path)
    if np.iscomplexobj(arr):
        raise ParseError(f"{path}: expected a real signal, found complex pairs")
    return arr


def read_complex_spectrum(path, fmt: str | None = None) -> np.ndarray:
    """Read a complex vector (re,im columns / pair arrays / interleaved bin)."""
    fmt = _check_format(fmt) if fmt else infer_format(path)
    arr = _READERS[fmt](path)
    if not np.iscomplexobj(arr):
        if fmt == "bin":
            if arr.size % 2 != 0:
                raise ParseError(f"{path}: odd sample count cannot hold re,im pairs")
            return arr[0::2] + 1j * arr[1::2]
        raise ParseError(f"{path}: expected complex pairs, found a real vector")
    return arr


def _write_csv(path, values: np.ndarray) -> None:
    with open(path, "w", encoding="ascii") as fh:
        if np.iscomplexobj(values):
            for z in values:
                fh.write(f"{float(z.real)!r},{float(z.imag)!r}\n")
        else:
            for x in values:
                fh.write(f"{float(x)!r}\n")


def _write_json(path, values: np.ndarray) -> None:
    if np.iscomplexobj(values):
        payload = [[float(z.real), float(z.imag)] for z in values]
    else:
        payload = [float(x) for x in values]
    with open(path, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
        fh.write("\n")


def _write_bin(path, values: np.ndarray) -> None:
    if np.iscomplexobj(values):
        flat = np.ascontiguousarray(values, dtype=np.complex128).view(np.float64)
    else:
        flat = np.ascontiguousarray(values, dtype=np.float64)
    with open(path, "wb") as fh:
        fh.write(BIN_MAGIC)
        fh.write(struct.pack("<Q", flat.size))
        fh.write(flat.astype("<f8").tobytes())


_WRITERS = {"csv": _write_csv, "json": _write_json, "bin": _write_bin}


def write_spectrum(path, values, fmt: str | None = None) -> None:
    """Write a real or complex vector; format inferred from the suffix if omitted."""
    fmt = _check_format(fmt) if fmt else infer_format(path)
    values = np.asarray(values)
    if values.ndim != 1 or values.size < 1:
        raise ValueError("expected a non-empty 1-D vector")
    _WRITERS[fmt](path, values)
