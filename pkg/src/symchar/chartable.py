"""Ordinary character values of symmetric groups, exactly.

Values come from the Murnaghan-Nakayama rule: strip a border strip for
each part of the class label, largest part first, summing (-1)^height
over all ways to strip.  Strips are manipulated on first-column hook
lengths (beta numbers), where removing a strip of length t is replacing
a beta number b by b - t.  Results are memoized on the pair (remaining
shape, remaining class suffix), which is shared heavily across a table
because classes are processed in a fixed order.

Tables can be cached on disk as a single JSON document per n (format
"symchar-table-v1") with integer values serialized as decimal strings;
writes are atomic (temp file then rename).
"""

from __future__ import annotations

import hashlib
import json
import math
import os
import random
import tempfile
from concurrent.futures import ThreadPoolExecutor
from functools import cache
from pathlib import Path

from .errors import (
    CacheChecksumError,
    CacheCorruptError,
    CacheMissError,
    CacheVersionError,
    ConsistencyError,
    DomainError,
    ResourceBudgetError,
    SizeMismatchError,
)
from .partitions import (
    Partition,
    class_size,
    class_sign,
    conjugate,
    dimension,
    enumerate_partitions,
    partition_text,
    parse_partition,
)

__all__ = [
    "CharacterTable",
    "mn_value",
    "character_table",
    "central_character",
    "save_table",
    "load_table",
    "verify_row_orthogonality",
    "verify_column_orthogonality",
    "verify_degrees",
]

CACHE_FORMAT = "symchar-table-v1"
TABLE_BUDGET = 18


def _beta_set(shape: tuple[int, ...]) -> list[int]:
    length = len(shape)
    return [shape[i] + (length - 1 - i) for i in range(length)]


def _shape_from_beta(beta: list[int]) -> tuple[int, ...]:
    beta = sorted(beta, reverse=True)
    length = len(beta)
    parts = [beta[i] - (length - 1 - i) for i in range(length)]
    return tuple(p for p in parts if p > 0)


@cache
def _mn(shape: tuple[int, ...], parts: tuple[int, ...]) -> int:
    if not parts:
        return 1
    t = parts[0]
    rest = parts[1:]
    beta = _beta_set(shape)
    members = set(beta)
    total = 0
    for b in beta:
        c = b - t
        if c < 0 or c in members:
            continue
        height = sum(1 for x in beta if c < x < b)
        sub = _shape_from_beta([x for x in beta if x != b] + [c])
        term = _mn(sub, rest)
        total += -term if height % 2 else term
    return total


def mn_value(lam, mu) -> int:
    """Character value chi^lam on the class of cycle type mu."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if lam.n != mu.n:
        raise SizeMismatchError(
            f"character label {tuple(lam)} and class label {tuple(mu)} "
            f"have different weights {lam.n} != {mu.n}"
        )
    return _mn(tuple(lam), tuple(mu))


class CharacterTable:
    """Full table of chi^lam(mu) for all lam, mu partitions of n.

    Rows and columns both run in descending lexicographic order.
    """

    def __init__(self, n: int, rows, cols, values):
        self.n = n
        self.rows = tuple(rows)
        self.cols = tuple(cols)
        self.values = tuple(tuple(v) for v in values)
        self._row_index = {r: i for i, r in enumerate(self.rows)}
        self._col_index = {c: i for i, c in enumerate(self.cols)}

    def value(self, lam, mu) -> int:
        lam = lam if isinstance(lam, Partition) else Partition(lam)
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        try:
            return self.values[self._row_index[lam]][self._col_index[mu]]
        except KeyError:
            raise DomainError(
                f"label {tuple(lam)} or {tuple(mu)} is not a partition of {self.n}"
            ) from None

    def degree(self, lam) -> int:
        return self.value(lam, Partition([1] * self.n) if self.n else Partition())

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CharacterTable)
            and self.n == other.n
            and self.rows == other.rows
            and self.cols == other.cols
            and self.values == other.values
        )

    def __repr__(self) -> str:
        return f"CharacterTable(n={self.n}, size={len(self.rows)})"


_TABLE_CACHE: dict[int, CharacterTable] = {}


def character_table(n: int, threads: int = 1) -> CharacterTable:
    """Character table of S_n.  Budget: n <= 18."""
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n > TABLE_BUDGET:
        raise ResourceBudgetError(
            f"full table for n={n} exceeds the desk budget n <= {TABLE_BUDGET}"
        )
    if n in _TABLE_CACHE:
        return _TABLE_CACHE[n]
    labels = enumerate_partitions(n)
    col_tuples = [tuple(mu) for mu in labels]

    def row_for(lam: Partition) -> tuple[int, ...]:
        shape = tuple(lam)
        return tuple(_mn(shape, mu) for mu in col_tuples)

    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            values = list(pool.map(row_for, labels))
    else:
        values = [row_for(lam) for lam in labels]
    table = CharacterTable(n, labels, labels, values)
    _TABLE_CACHE[n] = table
    return table


def central_character(lam, mu) -> int:
    """Eigenvalue of the class sum of mu acting on the module labelled lam.

    Equals chi^lam(mu) * |class mu| / chi^lam(1) and is always a rational
    integer; a non-exact division here would mean a character or class
    size bug, so it raises ConsistencyError rather than DomainError.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    chi = mn_value(lam, mu)
    num = chi * class_size(mu)
    dim = dimension(lam)
    q, r = divmod(num, dim)
    if r:
        raise ConsistencyError(
            f"central character of {tuple(lam)} at {tuple(mu)} is not integral"
        )
    return q


def verify_row_orthogonality(table: CharacterTable) -> bool:
    """First orthogonality: sum_mu K_mu chi^lam(mu) chi^nu(mu) = n! delta."""
    sizes = [class_size(mu) for mu in table.cols]
    target = math.factorial(table.n)
    for i, row_i in enumerate(table.values):
        for j in range(i, len(table.values)):
            row_j = table.values[j]
            total = sum(k * a * b for k, a, b in zip(sizes, row_i, row_j))
            if total != (target if i == j else 0):
                return False
    return True


def verify_column_orthogonality(table: CharacterTable) -> bool:
    """Second orthogonality: sum_lam chi^lam(mu) chi^lam(nu) = delta * |centralizer|."""
    n_fact = math.factorial(table.n)
    cols = list(zip(*table.values))
    for i, col_i in enumerate(cols):
        for j in range(i, len(cols)):
            col_j = cols[j]
            total = sum(a * b for a, b in zip(col_i, col_j))
            expected = n_fact // class_size(table.cols[i]) if i == j else 0
            if total != expected:
                return False
    return True


def verify_degrees(table: CharacterTable) -> bool:
    """Identity column must reproduce the hook-length-formula dimensions."""
    identity = Partition([1] * table.n)
    return all(table.value(lam, identity) == dimension(lam) for lam in table.rows)


def verify_conjugate_symmetry(table: CharacterTable) -> bool:
    """chi^(lam')(mu) = sign(mu) * chi^lam(mu)."""
    signs = [class_sign(mu) for mu in table.cols]
    for lam in table.rows:
        lam_c = conjugate(lam)
        row = table.values[table._row_index[lam]]
        row_c = table.values[table._row_index[lam_c]]
        if any(rc != s * r for rc, s, r in zip(row_c, signs, row)):
            return False
    return True


def _cache_path(n: int, cache_dir) -> Path:
    return Path(cache_dir) / f"table-{n}.json"


def _checksum(n: int, row_labels, col_labels, values) -> str:
    doc = json.dumps([n, row_labels, col_labels, values], separators=(",", ":"))
    return hashlib.sha256(doc.encode("utf-8")).hexdigest()


def save_table(table: CharacterTable, cache_dir) -> Path:
    """Write the table atomically; returns the file path."""
    cache_dir = Path(cache_dir)
    cache_dir.mkdir(parents=True, exist_ok=True)
    row_labels = [partition_text(r) for r in table.rows]
    col_labels = [partition_text(c) for c in table.cols]
    values = [[str(v) for v in row] for row in table.values]
    doc = {
        "format": CACHE_FORMAT,
        "n": table.n,
        "row_labels": row_labels,
        "col_labels": col_labels,
        "values": values,
        "checksum": _checksum(table.n, row_labels, col_labels, values),
    }
    path = _cache_path(table.n, cache_dir)
    fd, tmp_name = tempfile.mkstemp(dir=cache_dir, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            json.dump(doc, fh, indent=1)
        os.replace(tmp_name, path)
    except BaseException:
        if os.path.exists(tmp_name):
            os.unlink(tmp_name)
        raise
    return path


def load_table(n: int, cache_dir) -> CharacterTable:
    """Load a cached table, validating version, checksum and a spot check.

    Raises CacheMissError when no file exists, CacheCorruptError for
    unreadable or structurally wrong files, CacheVersionError for a wrong
    format tag, CacheChecksumError when the payload does not match its
    recorded checksum.
    """
    path = _cache_path(n, cache_dir)
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except FileNotFoundError as exc:
        raise CacheMissError(f"no cached table for n={n} in {cache_dir}") from exc
    except OSError as exc:
        raise CacheCorruptError(f"cannot read table cache {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise CacheCorruptError(f"table cache {path} is not valid JSON") from exc
    if not isinstance(doc, dict) or "format" not in doc:
        raise CacheCorruptError(f"table cache {path} has no format header")
    if doc["format"] != CACHE_FORMAT:
        raise CacheVersionError(
            f"table cache {path} has format {doc['format']!r}, expected {CACHE_FORMAT!r}"
        )
    try:
        stored_n = doc["n"]
        row_labels = list(doc["row_labels"])
        col_labels = list(doc["col_labels"])
        raw_values = list(doc["values"])
        stored_checksum = doc["checksum"]
    except KeyError as exc:
        raise CacheCorruptError(f"table cache {path} is missing field {exc}") from exc
    if stored_n != n:
        raise CacheCorruptError(f"table cache {path} is for n={stored_n}, expected {n}")
    if _checksum(stored_n, row_labels, col_labels, raw_values) != stored_checksum:
        raise CacheChecksumError(f"table cache {path} failed its checksum")
    try:
        rows = [parse_partition(s) for s in row_labels]
        cols = [parse_partition(s) for s in col_labels]
        values = [[int(v) for v in row] for row in raw_values]
    except (DomainError, ValueError) as exc:
        raise CacheCorruptError(f"table cache {path} has malformed entries") from exc
    if [r.n for r in rows] != [n] * len(rows) or [c.n for c in cols] != [n] * len(cols):
        raise CacheCorruptError(f"table cache {path} has labels of the wrong weight")
    table = CharacterTable(n, rows, cols, values)
    # Spot check: one random pair of rows must satisfy first orthogonality.
    rng = random.Random()
    i = rng.randrange(len(rows))
    j = rng.randrange(len(rows))
    sizes = [class_size(mu) for mu in cols]
    total = sum(k * a * b for k, a, b in zip(sizes, table.values[i], table.values[j]))
    expected = math.factorial(n) if i == j else 0
    if total != expected:
        raise CacheCorruptError(
            f"table cache {path} failed an orthogonality spot check on rows {i}, {j}"
        )
    return table
