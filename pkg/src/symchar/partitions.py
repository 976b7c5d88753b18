"""Integer partitions as character labels and cycle-type labels.

A partition is a weakly decreasing tuple of positive integers.  Character
labels are genuine partitions of n; cycle-type labels are stored padded
with 1-parts to full weight n, so a label always knows its ambient group.

Canonical text form is comma-separated parts with a caret for repeats:
``"3,2,1^4"`` means (3, 2, 1, 1, 1, 1).  The parser accepts both the
expanded and the caret form; the printer uses the caret once a part
repeats three times or more.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import DomainError

__all__ = [
    "Partition",
    "HookGrid",
    "parse_partition",
    "partition_text",
    "class_display_text",
    "enumerate_partitions",
    "iter_partitions",
    "conjugate",
    "is_self_conjugate",
    "is_regular",
    "hook_grid",
    "hook_rows",
    "diagonal_hooks",
    "diagonal_length",
    "p_core",
    "class_size",
    "centralizer_order",
    "support",
    "is_odd_class",
    "class_sign",
    "dimension",
    "content_sum",
    "element_order",
    "class_is_ell_prime",
    "pad_to",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        t = tuple(parts)
        for x in t:
            if not isinstance(x, int) or isinstance(x, bool) or x < 1:
                raise DomainError(f"partition parts must be positive integers, got {x!r}")
        if any(t[i] < t[i + 1] for i in range(len(t) - 1)):
            raise DomainError(f"partition parts must be weakly decreasing, got {t}")
        return tuple.__new__(cls, t)

    @classmethod
    def from_text(cls, text: str) -> "Partition":
        return parse_partition(text)

    @property
    def n(self) -> int:
        return sum(self)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(self)

    @property
    def text(self) -> str:
        return partition_text(self)

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def __repr__(self) -> str:
        return f"Partition({tuple(self)!r})"


def _as_partition(lam) -> Partition:
    return lam if isinstance(lam, Partition) else Partition(lam)


def parse_partition(text: str) -> Partition:
    """Parse canonical text form; accepts caret shorthand and plain lists."""
    s = text.strip()
    if not s:
        return Partition()
    parts: list[int] = []
    for token in s.split(","):
        token = token.strip()
        if "^" in token:
            base_s, _, count_s = token.partition("^")
            try:
                base, count = int(base_s), int(count_s)
            except ValueError:
                raise DomainError(f"bad partition token {token!r} in {text!r}") from None
            if count < 1:
                raise DomainError(f"repeat count must be >= 1 in token {token!r}")
            parts.extend([base] * count)
        else:
            try:
                parts.append(int(token))
            except ValueError:
                raise DomainError(f"bad partition token {token!r} in {text!r}") from None
    return Partition(parts)


def partition_text(lam) -> str:
    """Canonical text form, inverse to :func:`parse_partition`."""
    lam = _as_partition(lam)
    pieces: list[str] = []
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        run = j - i
        if run >= 3:
            pieces.append(f"{lam[i]}^{run}")
        else:
            pieces.extend([str(lam[i])] * run)
        i = j
    return ",".join(pieces)


def class_display_text(mu) -> str:
    """Display form of a cycle-type label with 1-parts suppressed.

    The identity class displays as ``"1"``.
    """
    mu = _as_partition(mu)
    trimmed = Partition(p for p in mu if p > 1)
    return partition_text(trimmed) if trimmed else "1"


@lru_cache(maxsize=None)
def _partitions_tuple(n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),)
    out: list[tuple[int, ...]] = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_tuple(n - first, first):
            out.append((first,) + rest)
    return tuple(out)


def enumerate_partitions(n: int) -> list[Partition]:
    """All partitions of n in descending lexicographic order.

    First entry is (n), last is (1^n); length is p(n).
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"need a nonnegative integer, got {n!r}")
    return [Partition(t) for t in _partitions_tuple(n, n)]


def iter_partitions(n: int) -> Iterator[Partition]:
    """Stream partitions of n in descending lexicographic order, uncached.

    Same order as :func:`enumerate_partitions`; use for n large enough
    that materializing the full list is unwelcome.
    """
    if not isinstance(n, int) or n < 0:
        raise DomainError(f"need a nonnegative integer, got {n!r}")

    def gen(m: int, largest: int) -> Iterator[tuple[int, ...]]:
        if m == 0:
            yield ()
            return
        for first in range(min(m, largest), 0, -1):
            for rest in gen(m - first, first):
                yield (first,) + rest

    for t in gen(n, n):
        yield Partition(t)


def conjugate(lam) -> Partition:
    """Transpose of the Young diagram."""
    lam = _as_partition(lam)
    if not lam:
        return Partition()
    out = []
    for j in range(1, lam[0] + 1):
        out.append(sum(1 for p in lam if p >= j))
    return Partition(out)


def is_self_conjugate(lam) -> bool:
    lam = _as_partition(lam)
    return lam == conjugate(lam)


def is_regular(lam, ell: int) -> bool:
    """True if no part repeats ell or more times."""
    lam = _as_partition(lam)
    if not isinstance(ell, int) or ell < 2:
        raise DomainError(f"regularity index must be an integer >= 2, got {ell!r}")
    i = 0
    while i < len(lam):
        j = i
        while j < len(lam) and lam[j] == lam[i]:
            j += 1
        if j - i >= ell:
            return False
        i = j
    return True


def hook_rows(lam) -> list[list[int]]:
    """Hook lengths row by row: entry [i][j] is the hook at cell (i+1, j+1)."""
    lam = _as_partition(lam)
    conj = conjugate(lam)
    return [
        [(lam[i] - (j + 1)) + (conj[j] - (i + 1)) + 1 for j in range(lam[i])]
        for i in range(len(lam))
    ]


@dataclass(frozen=True)
class HookGrid:
    """Hook lengths keyed by 1-based cell coordinates."""

    cells: dict[tuple[int, int], int]

    def row(self, i: int) -> list[int]:
        return [h for (r, _c), h in sorted(self.cells.items()) if r == i]

    def column(self, j: int) -> list[int]:
        return [h for (_r, c), h in sorted(self.cells.items()) if c == j]

    def multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.cells.values()))


def hook_grid(lam) -> HookGrid:
    rows = hook_rows(lam)
    cells = {(i + 1, j + 1): h for i, row in enumerate(rows) for j, h in enumerate(row)}
    return HookGrid(cells)


def diagonal_length(lam) -> int:
    """Number of cells on the main diagonal of the Young diagram."""
    lam = _as_partition(lam)
    return sum(1 for i, p in enumerate(lam) if p >= i + 1)


def diagonal_hooks(lam) -> Partition:
    """Principal hook lengths h(1,1) > h(2,2) > ...; they partition n."""
    lam = _as_partition(lam)
    conj = conjugate(lam)
    out = []
    for i in range(diagonal_length(lam)):
        out.append((lam[i] - (i + 1)) + (conj[i] - (i + 1)) + 1)
    return Partition(out)


def p_core(lam, p: int) -> Partition:
    """Partition left after removing all rim hooks of length p.

    Computed on the first-column hook lengths (beta-set): repeatedly
    replace a beta number b by b - p while the result is a fresh
    nonnegative value.  The outcome is independent of removal order.
    """
    lam = _as_partition(lam)
    if not isinstance(p, int) or p < 2:
        raise DomainError(f"hook length must be an integer >= 2, got {p!r}")
    length = len(lam)
    beta = {lam[i] + (length - 1 - i) for i in range(length)}
    changed = True
    while changed:
        changed = False
        for b in sorted(beta):
            if b - p >= 0 and (b - p) not in beta:
                beta.remove(b)
                beta.add(b - p)
                changed = True
    ordered = sorted(beta, reverse=True)
    parts = [b - (length - 1 - i) for i, b in enumerate(ordered)]
    return Partition(p for p in parts if p > 0)


def centralizer_order(mu) -> int:
    """Order of the centralizer in S_n of an element of cycle type mu."""
    mu = _as_partition(mu)
    order = 1
    i = 0
    while i < len(mu):
        j = i
        while j < len(mu) and mu[j] == mu[i]:
            j += 1
        a = j - i
        order *= mu[i] ** a * math.factorial(a)
        i = j
    return order


def class_size(mu) -> int:
    """Size of the S_n conjugacy class with cycle type mu (n = |mu|)."""
    mu = _as_partition(mu)
    return math.factorial(mu.n) // centralizer_order(mu)


def support(mu) -> int:
    """Number of points moved by an element of cycle type mu."""
    mu = _as_partition(mu)
    return mu.n - sum(1 for p in mu if p == 1)


def is_odd_class(mu) -> bool:
    """True if elements of cycle type mu are odd permutations."""
    mu = _as_partition(mu)
    return sum(p - 1 for p in mu) % 2 == 1


def class_sign(mu) -> int:
    """Sign character value on the class mu: +1 or -1."""
    return -1 if is_odd_class(mu) else 1


def dimension(lam) -> int:
    """Degree of the irreducible character labelled lam (hook length formula)."""
    lam = _as_partition(lam)
    denom = 1
    for row in hook_rows(lam):
        for h in row:
            denom *= h
    return math.factorial(lam.n) // denom


def content_sum(lam) -> int:
    """Sum of j - i over cells (i, j) of the diagram."""
    lam = _as_partition(lam)
    total = 0
    for i, p in enumerate(lam):
        # row contents are -i, -i+1, ..., -i+p-1 (0-based row index i)
        total += p * (p - 1) // 2 - i * p
    return total


def element_order(mu) -> int:
    """Order of a permutation with cycle type mu (lcm of the parts)."""
    mu = _as_partition(mu)
    return math.lcm(*mu) if mu else 1


def class_is_ell_prime(mu, ell: int, convention: str = "order") -> bool:
    """Whether the class mu consists of ell'-elements.

    convention "order": the element order is not divisible by ell (the
    default).  convention "parts": no part of mu is divisible by ell.
    The two agree whenever ell is a prime power; "order" implies "parts".
    """
    mu = _as_partition(mu)
    if not isinstance(ell, int) or ell < 2:
        raise DomainError(f"ell must be an integer >= 2, got {ell!r}")
    if convention == "order":
        return element_order(mu) % ell != 0
    if convention == "parts":
        return all(p % ell != 0 for p in mu)
    raise DomainError(f"unknown ell-prime convention {convention!r}")


def pad_to(mu, n: int) -> Partition:
    """Pad a cycle type with 1-parts up to weight n."""
    mu = _as_partition(mu)
    if mu.n > n:
        raise DomainError(f"cycle type {tuple(mu)} does not fit in weight {n}")
    return Partition(tuple(mu) + (1,) * (n - mu.n))
