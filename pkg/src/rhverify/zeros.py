"""Zero ordinates of zeta: Odlyzko-format text files and a binary cache.

Text format: one decimal ordinate per non-blank line, surrounding
whitespace ignored, strictly increasing, first value in [14.13, 14.14].

Cache format (``<source>.cache``, written beside the source file), all
little-endian:

    bytes 0..7          uint64   number of ordinates n
    bytes 8..8+8n       float64  the ordinates, in order
    next 32 bytes                SHA-256 digest of the source file bytes

A cache whose digest does not match the current source is ignored and
rewritten.
"""
from __future__ import annotations

import hashlib
import math
import os
import struct
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import numpy as np

from .errors import OrderError, ParseError, RangeError, TruncationExceedsTable

FIRST_ORDINATE_RANGE = (14.13, 14.14)
DUPLICATE_TOL = 1e-9
CACHE_SUFFIX = ".cache"
REFERENCE_TABLE = "zeros1_head.txt"


@dataclass(frozen=True)
class ZeroOrdinate:
    index: int
    t: float


@dataclass(frozen=True)
class HypotheticalZero:
    """A zero sigma + i t with multiplicity, used to exercise zero terms.

    These never enter a catalog; they are passed to evaluators separately.
    """

    sigma: float
    t: float
    multiplicity: int = 1

    def __post_init__(self):
        if not 0.0 < self.sigma < 1.0:
            raise ValueError("hypothetical zero must lie in the strip 0 < sigma < 1")
        if int(self.multiplicity) < 1:
            raise ValueError("multiplicity must be >= 1")


@dataclass(frozen=True)
class ZeroCatalog:
    ordinates: tuple[ZeroOrdinate, ...]
    source_path: str = ""
    values: np.ndarray = field(default=None, repr=False, compare=False)

    def __post_init__(self):
        if self.values is None:
            object.__setattr__(self, "values", np.array([z.t for z in self.ordinates], float))
        self.values.setflags(write=False)

    @classmethod
    def from_values(cls, values, source_path=""):
        arr = np.asarray(values, dtype=float).copy()
        _validate(arr, source_path)
        ords = tuple(ZeroOrdinate(i + 1, float(t)) for i, t in enumerate(arr))
        return cls(ords, str(source_path), arr)

    @property
    def count(self) -> int:
        return len(self.ordinates)

    @property
    def t_max(self) -> float:
        return float(self.values[-1]) if self.count else 0.0

    def __len__(self):
        return self.count


def _validate(arr, source_path=""):
    if arr.size == 0:
        return
    if not np.all(np.isfinite(arr)):
        raise ParseError(int(np.argmin(np.isfinite(arr))) + 1, "non-finite", source_path)
    # Ordering first: a shuffled table should be reported as such, even when
    # its first line also happens to be out of range.
    gaps = np.diff(arr)
    bad = np.nonzero(gaps <= DUPLICATE_TOL)[0]
    if bad.size:
        i = int(bad[0])
        raise OrderError(
            f"ordinates not strictly increasing at index {i + 2}: "
            f"{arr[i]!r} then {arr[i + 1]!r}"
        )
    lo, hi = FIRST_ORDINATE_RANGE
    if not lo <= arr[0] <= hi:
        raise RangeError(f"first ordinate {arr[0]!r} is outside [{lo}, {hi}]")


def parse_odlyzko(text, source_path=""):
    values = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        item = line.strip()
        if not item:
            continue
        try:
            v = float(item)
        except ValueError:
            raise ParseError(lineno, item, source_path) from None
        if not math.isfinite(v) or v <= 0:
            raise ParseError(lineno, item, source_path)
        values.append(v)
    return np.array(values, dtype=float)


def cache_path_for(path) -> Path:
    path = Path(path)
    return path.with_name(path.name + CACHE_SUFFIX)


def write_cache(values, digest, path):
    values = np.asarray(values, dtype="<f8")
    with open(path, "wb") as fh:
        fh.write(struct.pack("<Q", values.size))
        fh.write(values.tobytes())
        fh.write(digest)


def read_cache(path):
    """Return (values, digest) from a cache file, or None when malformed."""
    try:
        raw = Path(path).read_bytes()
    except OSError:
        return None
    if len(raw) < 8 + 32:
        return None
    (n,) = struct.unpack_from("<Q", raw, 0)
    if len(raw) != 8 + 8 * n + 32:
        return None
    values = np.frombuffer(raw, dtype="<f8", count=n, offset=8).astype(float)
    return values, raw[8 + 8 * n:]


def load_odlyzko(path, use_cache=True) -> ZeroCatalog:
    """Parse and validate an ordinate file, going through the binary cache."""
    path = Path(path)
    data = path.read_bytes()
    digest = hashlib.sha256(data).digest()
    cache = cache_path_for(path)
    if use_cache:
        hit = read_cache(cache)
        if hit is not None and hit[1] == digest:
            return ZeroCatalog.from_values(hit[0], str(path))
    values = parse_odlyzko(data.decode("ascii", errors="replace"), str(path))
    catalog = ZeroCatalog.from_values(values, str(path))
    if use_cache:
        try:
            write_cache(values, digest, cache)
        except OSError:
            pass  # read-only location; the parse result is still valid
    return catalog


def reference_table_path() -> Path:
    """Location of the bundled table of the first 1600 ordinates (t up to 2090)."""
    return Path(str(resources.files("rhverify") / "data" / REFERENCE_TABLE))


def load_reference() -> ZeroCatalog:
    # The package directory may be read-only; skip the sidecar cache.
    return load_odlyzko(reference_table_path(), use_cache=os.access(
        reference_table_path().parent, os.W_OK))


def zeros_up_to(catalog: ZeroCatalog, T: float) -> list[ZeroOrdinate]:
    """All catalogued ordinates <= T.

    Raises TruncationExceedsTable when T lies beyond the last ordinate, since
    the table then cannot tell whether zeros are missing below T.  An empty
    catalog is an explicit empty zero set and yields [] for every T.
    """
    if T < 0:
        raise ValueError("T must be non-negative")
    if T < FIRST_ORDINATE_RANGE[0] or catalog.count == 0:
        return []
    if T > catalog.t_max:
        raise TruncationExceedsTable(
            f"T={T} exceeds the last catalogued ordinate {catalog.t_max} "
            f"({catalog.count} zeros in {catalog.source_path or 'catalog'})"
        )
    n = int(np.searchsorted(catalog.values, T, side="right"))
    return list(catalog.ordinates[:n])


def ordinates_up_to(catalog: ZeroCatalog | None, T: float, strict=True) -> np.ndarray:
    """Float array version of :func:`zeros_up_to`.

    With ``strict=False`` a short (or missing) table just yields what it has;
    this suits panel split points, which only help the quadrature.
    """
    if catalog is None:
        if strict:
            raise TruncationExceedsTable("no zero catalog supplied")
        return np.empty(0)
    if strict:
        zeros_up_to(catalog, T)
    n = int(np.searchsorted(catalog.values, T, side="right"))
    return catalog.values[:n]


def riemann_von_mangoldt(T: float) -> float:
    """First-order zero count (T / 2 pi) ln(T / 2 pi e) + 7/8."""
    x = T / (2 * math.pi)
    return x * math.log(x / math.e) + 7.0 / 8.0
