"""Centers of the rational group algebras of S_n and A_n.

Class sums multiply with nonnegative integer structure constants.  They
are computed by the fixed-representative count: fix one permutation g of
cycle type mu, run h over the full conjugacy class of nu, and tally the
cycle types of g*h.  Then c^rho = K_mu * count(rho) / K_rho, and every
division must be exact (a remainder would be a bug, not bad input).

For A_n the class basis refines the S_n one: an even S_n class whose
cycle type has distinct odd parts splits into two A_n classes of half
the size.  The "+" class is by convention the A_n class of the canonical
representative (cycles filled with consecutive points, longest first);
membership is decided by the parity of a conjugating permutation, which
is well defined because the centralizer of such an element is generated
by its own cycles and hence lies in A_n.
"""

from __future__ import annotations

import itertools
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .chartable import central_character
from .errors import (
    ConsistencyError,
    DomainError,
    ResourceBudgetError,
    SizeMismatchError,
)
from .partitions import (
    Partition,
    class_size,
    enumerate_partitions,
    is_odd_class,
    pad_to,
    parse_partition,
    partition_text,
    support,
)

__all__ = [
    "ALGEBRA_SN",
    "ALGEBRA_AN",
    "ClassLabel",
    "CentralElement",
    "is_split_type",
    "sn_labels",
    "an_labels",
    "an_class_size",
    "parse_class_label",
    "product_sn",
    "product_an",
    "multiply_elements",
    "sn_product_table",
    "an_product_table",
    "lemma_coefficient",
    "lemma_extra_support_labels",
    "generating_set",
    "closure_dimension",
    "generation_target",
    "sn_table_entry",
    "verify_transposition_square",
    "verify_cycle_positivity",
    "admissible_coefficient_quadruples",
    "verify_coefficient_formula",
    "verify_central_homomorphism",
    "verify_product_identities",
    "verify_an_counting",
    "verify_generation",
]

ALGEBRA_SN = "Sn"
ALGEBRA_AN = "An"

PRODUCT_BUDGET = 10
AN_PRODUCT_BUDGET = 9
CLOSURE_BUDGET = 9
TABLE_BUDGET = 9


def is_split_type(mu) -> bool:
    """Whether the S_n class of type mu splits into two A_n classes."""
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if mu.n < 3 or is_odd_class(mu):
        return False
    distinct = len(set(mu)) == len(mu)
    return distinct and all(p % 2 == 1 for p in mu)


@dataclass(frozen=True)
class ClassLabel:
    """A conjugacy-class label: cycle type plus an optional split half."""

    cycle_type: Partition
    split_sign: str | None = None

    def __post_init__(self):
        ct = self.cycle_type
        if not isinstance(ct, Partition):
            object.__setattr__(self, "cycle_type", Partition(ct))
        if self.split_sign not in (None, "+", "-"):
            raise DomainError(f"split sign must be '+', '-' or None, got {self.split_sign!r}")
        if self.split_sign is not None and not is_split_type(self.cycle_type):
            raise DomainError(
                f"class {tuple(self.cycle_type)} does not split; sign label is invalid"
            )

    @property
    def n(self) -> int:
        return self.cycle_type.n

    @property
    def text(self) -> str:
        return partition_text(self.cycle_type) + (self.split_sign or "")

    def __repr__(self) -> str:
        return f"ClassLabel({self.text!r})"


def parse_class_label(text: str, n: int | None = None) -> ClassLabel:
    """Parse ``"3,2"`` or ``"5+"``; pads the cycle type to weight n if given."""
    s = text.strip()
    sign = None
    if s.endswith(("+", "-")):
        sign = s[-1]
        s = s[:-1]
    mu = parse_partition(s)
    if n is not None:
        mu = pad_to(mu, n)
    return ClassLabel(mu, sign)


def sn_labels(n: int) -> list[ClassLabel]:
    """Class labels of S_n in descending lexicographic order."""
    return [ClassLabel(mu) for mu in enumerate_partitions(n)]


def an_labels(n: int) -> list[ClassLabel]:
    """Class labels of A_n: even classes, split ones contributing two labels."""
    out: list[ClassLabel] = []
    for mu in enumerate_partitions(n):
        if is_odd_class(mu):
            continue
        if is_split_type(mu):
            out.append(ClassLabel(mu, "+"))
            out.append(ClassLabel(mu, "-"))
        else:
            out.append(ClassLabel(mu))
    return out


def an_class_size(label: ClassLabel) -> int:
    k = class_size(label.cycle_type)
    if label.split_sign is not None:
        if k % 2:
            raise ConsistencyError(f"split class {label.text} has odd parent size {k}")
        return k // 2
    return k


def _labels_for(n: int, algebra: str) -> list[ClassLabel]:
    if algebra == ALGEBRA_SN:
        return sn_labels(n)
    if algebra == ALGEBRA_AN:
        return an_labels(n)
    raise DomainError(f"unknown algebra {algebra!r}")


class CentralElement:
    """A rational linear combination of class sums."""

    def __init__(self, n: int, algebra: str, coeffs: dict):
        if algebra not in (ALGEBRA_SN, ALGEBRA_AN):
            raise DomainError(f"unknown algebra {algebra!r}")
        self.n = n
        self.algebra = algebra
        clean: dict[ClassLabel, Fraction] = {}
        for label, coeff in coeffs.items():
            if not isinstance(label, ClassLabel):
                label = ClassLabel(label)
            if label.n != n:
                raise DomainError(f"label {label.text} has weight {label.n}, expected {n}")
            if algebra == ALGEBRA_SN and label.split_sign is not None:
                raise DomainError(f"split label {label.text} is not an S_n class")
            if algebra == ALGEBRA_AN:
                if is_odd_class(label.cycle_type):
                    raise DomainError(f"odd class {label.text} is not an A_n class")
                if is_split_type(label.cycle_type) and label.split_sign is None:
                    raise DomainError(
                        f"class {label.text} splits; a bare label is not an A_n basis element"
                    )
            coeff = Fraction(coeff)
            if coeff:
                clean[label] = coeff
        self.coeffs = clean

    @classmethod
    def basis(cls, label, n: int, algebra: str = ALGEBRA_SN) -> "CentralElement":
        if not isinstance(label, ClassLabel):
            label = ClassLabel(label)
        return cls(n, algebra, {label: Fraction(1)})

    @classmethod
    def identity(cls, n: int, algebra: str = ALGEBRA_SN) -> "CentralElement":
        return cls.basis(ClassLabel(pad_to(Partition(), n)), n, algebra)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, CentralElement)
            and self.n == other.n
            and self.algebra == other.algebra
            and self.coeffs == other.coeffs
        )

    def __repr__(self) -> str:
        terms = ", ".join(
            f"{coeff}*[{label.text}]" for label, coeff in sorted(
                self.coeffs.items(), key=lambda kv: (kv[0].cycle_type, kv[0].split_sign or "")
            )
        )
        return f"CentralElement({self.algebra}, n={self.n}, {terms or '0'})"


# --- permutation plumbing (0-based image tuples) ---


def _canonical_rep(mu: Partition, n: int) -> tuple[int, ...]:
    """Cycles filled with consecutive points, longest cycle first."""
    perm = list(range(n))
    pos = 0
    for part in mu:
        if part >= 2:
            for i in range(part - 1):
                perm[pos + i] = pos + i + 1
            perm[pos + part - 1] = pos
        pos += part
    return tuple(perm)


def _cycle_type(perm: tuple[int, ...]) -> tuple[int, ...]:
    n = len(perm)
    seen = bytearray(n)
    parts = []
    for i in range(n):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
            length += 1
        parts.append(length)
    parts.sort(reverse=True)
    return tuple(parts)


def _parity(perm: tuple[int, ...]) -> int:
    """0 for even permutations, 1 for odd."""
    n = len(perm)
    seen = bytearray(n)
    cycles = 0
    for i in range(n):
        if seen[i]:
            continue
        cycles += 1
        j = i
        while not seen[j]:
            seen[j] = 1
            j = perm[j]
    return (n - cycles) % 2


def _iter_class(mu: Partition, n: int):
    """Yield every permutation of cycle type mu exactly once.

    The smallest unplaced point always starts the next cycle (possibly a
    fixed point), and its cycle length is chosen among the distinct
    lengths still owed; this enumerates each element once without a
    separate dedup pass.
    """
    if mu.n != n:
        raise SizeMismatchError(f"cycle type {tuple(mu)} is not a class of S_{n}")
    lengths = sorted(mu, reverse=True)
    perm = list(range(n))

    def rec(avail: list[int], remaining: tuple[int, ...]):
        if not remaining:
            yield tuple(perm)
            return
        first = avail[0]
        rest = avail[1:]
        tried = set()
        for idx, length in enumerate(remaining):
            if length in tried:
                continue
            tried.add(length)
            next_remaining = remaining[:idx] + remaining[idx + 1 :]
            for arrangement in itertools.permutations(rest, length - 1):
                prev = first
                for x in arrangement:
                    perm[prev] = x
                    prev = x
                perm[prev] = first
                chosen = set(arrangement)
                yield from rec([x for x in rest if x not in chosen], next_remaining)
                perm[first] = first
                for x in arrangement:
                    perm[x] = x

    yield from rec(list(range(n)), tuple(lengths))


def _split_sign_of(perm: tuple[int, ...], n: int) -> str:
    """Which A_n half-class a permutation of split cycle type lies in."""
    mu = Partition(_cycle_type(perm))
    # Extract cycles keyed by length (lengths are distinct for split types).
    seen = bytearray(n)
    cycles_by_length: dict[int, list[int]] = {}
    for i in range(n):
        if seen[i]:
            continue
        cycle = []
        j = i
        while not seen[j]:
            seen[j] = 1
            cycle.append(j)
            j = perm[j]
        cycles_by_length[len(cycle)] = cycle
    # Build a conjugator sigma with sigma * rep * sigma^-1 = perm.
    sigma = [0] * n
    pos = 0
    for part in mu:
        cycle = cycles_by_length[part]
        start = cycle.index(min(cycle))
        rotated = cycle[start:] + cycle[:start]
        for i in range(part):
            sigma[pos + i] = rotated[i]
        pos += part
    return "-" if _parity(tuple(sigma)) else "+"


def _compose(g: tuple[int, ...], h: tuple[int, ...]) -> tuple[int, ...]:
    return tuple(map(g.__getitem__, h))


# --- products ---


def _check_product_budget(n: int, budget: int) -> None:
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if n > budget:
        raise ResourceBudgetError(
            f"class-sum product at n={n} exceeds the desk budget n <= {budget}"
        )


def _sn_counts(mu: Partition, nu: Partition, n: int) -> Counter:
    """Counter of cycle types of g*h for fixed g of type mu, h over class nu."""
    g = _canonical_rep(mu, n)
    counts: Counter = Counter()
    getitem = g.__getitem__
    for h in _iter_class(nu, n):
        counts[_cycle_type(tuple(map(getitem, h)))] += 1
    return counts


def product_sn(mu, nu, n: int) -> CentralElement:
    """Product of two class sums in the center of QS_n."""
    _check_product_budget(n, PRODUCT_BUDGET)
    mu = pad_to(mu, n)
    nu = pad_to(nu, n)
    # Enumerate the smaller class; the product is symmetric.
    if class_size(nu) > class_size(mu):
        mu, nu = nu, mu
    counts = _sn_counts(mu, nu, n)
    k_mu = class_size(mu)
    coeffs = {}
    for rho, count in counts.items():
        rho = Partition(rho)
        num = k_mu * count
        k_rho = class_size(rho)
        q, r = divmod(num, k_rho)
        if r:
            raise ConsistencyError(
                f"structure constant for {tuple(rho)} in s_{tuple(mu)} s_{tuple(nu)} "
                "is not integral"
            )
        coeffs[ClassLabel(rho)] = Fraction(q)
    return CentralElement(n, ALGEBRA_SN, coeffs)


def _an_rep(label: ClassLabel, n: int) -> tuple[int, ...]:
    rep = _canonical_rep(label.cycle_type, n)
    if label.split_sign == "-":
        # Conjugate by the transposition t = (0 1) to land in the other half.
        def t(v: int) -> int:
            return 1 if v == 0 else 0 if v == 1 else v

        return tuple(t(rep[t(i)]) for i in range(n))
    return rep


def _validate_an_label(label: ClassLabel, n: int) -> ClassLabel:
    if not isinstance(label, ClassLabel):
        label = ClassLabel(label)
    if label.n != n:
        raise DomainError(f"label {label.text} has weight {label.n}, expected {n}")
    if is_odd_class(label.cycle_type):
        raise DomainError(f"odd class {label.text} is not an A_n class")
    if is_split_type(label.cycle_type):
        if label.split_sign is None:
            raise DomainError(f"class {label.text} splits; specify a half with '+' or '-'")
    elif label.split_sign is not None:
        raise DomainError(f"class {label.text} does not split")
    return label


def _an_elements(label: ClassLabel, n: int):
    if label.split_sign is None:
        yield from _iter_class(label.cycle_type, n)
        return
    for h in _iter_class(label.cycle_type, n):
        if _split_sign_of(h, n) == label.split_sign:
            yield h


def _an_classify(perm: tuple[int, ...], n: int) -> ClassLabel:
    rho = Partition(_cycle_type(perm))
    if is_split_type(rho):
        return ClassLabel(rho, _split_sign_of(perm, n))
    return ClassLabel(rho)


def product_an(x, y, n: int) -> CentralElement:
    """Product of two A_n class sums in the center of QA_n."""
    _check_product_budget(n, AN_PRODUCT_BUDGET)
    x = _validate_an_label(x, n)
    y = _validate_an_label(y, n)
    if an_class_size(y) > an_class_size(x):
        x, y = y, x
    g = _an_rep(x, n)
    getitem = g.__getitem__
    counts: Counter = Counter()
    for h in _an_elements(y, n):
        counts[_an_classify(tuple(map(getitem, h)), n)] += 1
    size_x = an_class_size(x)
    coeffs = {}
    for rho_label, count in counts.items():
        num = size_x * count
        k_rho = an_class_size(rho_label)
        q, r = divmod(num, k_rho)
        if r:
            raise ConsistencyError(
                f"structure constant for {rho_label.text} in {x.text} * {y.text} "
                "is not integral"
            )
        coeffs[rho_label] = Fraction(q)
    return CentralElement(n, ALGEBRA_AN, coeffs)


# --- full product tables, cached per n ---

_SN_TABLE: dict[int, dict] = {}
_AN_TABLE: dict[int, dict] = {}


def sn_product_table(n: int) -> dict:
    """Structure constants for every unordered pair of S_n classes.

    Maps (mu, nu) with mu before nu in enumeration order to a dict
    rho -> integer coefficient.  Budget: n <= 9.
    """
    _check_product_budget(n, TABLE_BUDGET)
    if n in _SN_TABLE:
        return _SN_TABLE[n]
    labels = enumerate_partitions(n)
    index = {mu: i for i, mu in enumerate(labels)}
    reps = {mu: _canonical_rep(mu, n) for mu in labels}
    sizes = {mu: class_size(mu) for mu in labels}
    identity = labels[-1]
    table: dict = {}
    for nu in labels:
        elements = list(_iter_class(nu, n))
        for mu in labels:
            if index[mu] > index[nu]:
                continue
            if mu == identity or nu == identity:
                other = nu if mu == identity else mu
                table[(mu, nu)] = {other: 1}
                continue
            getitem = reps[mu].__getitem__
            counts: Counter = Counter()
            for h in elements:
                counts[_cycle_type(tuple(map(getitem, h)))] += 1
            k_mu = sizes[mu]
            entry = {}
            for rho, count in counts.items():
                rho_p = Partition(rho)
                q, r = divmod(k_mu * count, sizes[rho_p])
                if r:
                    raise ConsistencyError(
                        f"structure constant for {rho} in s_{tuple(mu)} s_{tuple(nu)} "
                        "is not integral"
                    )
                entry[rho_p] = q
            table[(mu, nu)] = entry
    _SN_TABLE[n] = table
    return table


def sn_table_entry(table: dict, mu: Partition, nu: Partition) -> dict:
    return table[(mu, nu)] if (mu, nu) in table else table[(nu, mu)]


def an_product_table(n: int) -> dict:
    """Structure constants for every unordered pair of A_n class labels."""
    _check_product_budget(n, AN_PRODUCT_BUDGET)
    if n in _AN_TABLE:
        return _AN_TABLE[n]
    labels = an_labels(n)
    index = {lab: i for i, lab in enumerate(labels)}
    table: dict = {}
    by_type: dict[Partition, list[ClassLabel]] = {}
    for lab in labels:
        by_type.setdefault(lab.cycle_type, []).append(lab)
    identity = ClassLabel(pad_to(Partition(), n))
    for nu_type, nu_labs in by_type.items():
        buckets: dict[ClassLabel, list] = {lab: [] for lab in nu_labs}
        for h in _iter_class(nu_type, n):
            buckets[_an_classify(h, n)].append(h)
        for y, elements in buckets.items():
            for x in labels:
                if index[x] > index[y]:
                    continue
                if x == identity or y == identity:
                    other = y if x == identity else x
                    table[(x, y)] = {other: 1}
                    continue
                getitem = _an_rep(x, n).__getitem__
                counts: Counter = Counter()
                for h in elements:
                    counts[_an_classify(tuple(map(getitem, h)), n)] += 1
                size_x = an_class_size(x)
                entry = {}
                for rho_label, count in counts.items():
                    q, r = divmod(size_x * count, an_class_size(rho_label))
                    if r:
                        raise ConsistencyError(
                            f"structure constant for {rho_label.text} in "
                            f"{x.text} * {y.text} is not integral"
                        )
                    entry[rho_label] = q
                table[(x, y)] = entry
    _AN_TABLE[n] = table
    return table


def multiply_elements(x: CentralElement, y: CentralElement) -> CentralElement:
    """Bilinear product of two central elements via the cached tables."""
    if x.n != y.n or x.algebra != y.algebra:
        raise DomainError("can only multiply elements of the same algebra")
    n, algebra = x.n, x.algebra
    if algebra == ALGEBRA_SN:
        table = sn_product_table(n)

        def entry(a: ClassLabel, b: ClassLabel) -> dict:
            raw = sn_table_entry(table, a.cycle_type, b.cycle_type)
            return {ClassLabel(r): c for r, c in raw.items()}

    else:
        table = an_product_table(n)

        def entry(a: ClassLabel, b: ClassLabel) -> dict:
            return table[(a, b)] if (a, b) in table else table[(b, a)]

    out: dict[ClassLabel, Fraction] = {}
    for a, ca in x.coeffs.items():
        for b, cb in y.coeffs.items():
            scale = ca * cb
            for rho, c in entry(a, b).items():
                out[rho] = out.get(rho, Fraction(0)) + scale * c
    return CentralElement(n, algebra, out)


# --- the two-part coefficient formula and its support tail ---


def lemma_coefficient(k: int, l: int, a: int, b: int, n: int) -> int:
    """Coefficient of the class (a, b, 1^(n-a-b)) in s_(k) * s_(l).

    Valid for k, l >= 3 with k + l <= n + 2 and a, b >= 2 with
    a + b = k + l - 2; equals a * b * min(k-1, l-1, a, b).
    """
    for name, value in (("k", k), ("l", l), ("a", a), ("b", b), ("n", n)):
        if not isinstance(value, int):
            raise DomainError(f"{name} must be an integer, got {value!r}")
    if k < 3 or l < 3:
        raise DomainError(f"need k, l >= 3, got k={k}, l={l}")
    if k + l > n + 2:
        raise DomainError(f"need k + l <= n + 2, got k+l={k + l}, n={n}")
    if a < 2 or b < 2:
        raise DomainError(f"need a, b >= 2, got a={a}, b={b}")
    if a + b != k + l - 2:
        raise DomainError(f"need a + b = k + l - 2, got a+b={a + b}, k+l-2={k + l - 2}")
    return a * b * min(k - 1, l - 1, a, b)


def lemma_extra_support_labels(k: int, l: int, n: int) -> list[Partition]:
    """Beyond the (a, b) family, the only labels of support >= k + l - 2
    that may occur in s_(k) * s_(l)."""
    if k < 3 or l < 3 or k + l > n + 2:
        raise DomainError(f"need k, l >= 3 and k + l <= n + 2, got k={k}, l={l}, n={n}")
    out = []
    if k + l - 1 <= n:
        out.append(pad_to(Partition([k + l - 1]), n))
    if k + l <= n:
        out.append(pad_to(Partition(sorted((k, l), reverse=True)), n))
    return out


# --- generating sets ---


def generating_set(kind: str, n: int, ell: int | None = None):
    """Named generating families for the class algebras.

    "Xl" (ell > 2) and "Yl" (odd ell > 1) return S_n class sums; "XAn"
    returns A_n elements (whole-class sums over all-odd types plus the
    "+" halves of the split ones).  "Zl" (ell >= 1) returns the class
    labels of the odd ell'-elements of even-cycle/near-cycle shape used
    by the vanishing oracles, not a generation claim.
    """
    if not isinstance(n, int) or n < 1:
        raise DomainError(f"n must be a positive integer, got {n!r}")
    if kind == "Xl":
        if not isinstance(ell, int) or ell <= 2:
            raise DomainError(f"kind Xl needs an integer ell > 2, got {ell!r}")
        labels = [pad_to(Partition([i] if i > 1 else []), n) for i in range(1, n + 1) if i % ell]
        j = 1
        while ell * j < n:
            if ell * j > 1:
                labels.append(pad_to(Partition([ell * j - 1, 2]), n))
            j += 1
        return [CentralElement.basis(ClassLabel(mu), n) for mu in labels]
    if kind == "Yl":
        if not isinstance(ell, int) or ell < 3 or ell % 2 == 0:
            raise DomainError(f"kind Yl needs an odd integer ell > 1, got {ell!r}")
        labels = [
            pad_to(Partition([i] if i > 1 else []), n)
            for i in range(1, n + 1)
            if i % 2 == 1 or i % ell
        ]
        j = 1
        while 2 * ell * j < n:
            labels.append(pad_to(Partition([2 * ell * j - 1, 2]), n))
            j += 1
        return [CentralElement.basis(ClassLabel(mu), n) for mu in labels]
    if kind == "Zl":
        if not isinstance(ell, int) or ell < 1:
            raise DomainError(f"kind Zl needs an integer ell >= 1, got {ell!r}")
        labels = [pad_to(Partition([2 * j]), n) for j in range(1, n // 2 + 1) if j % ell]
        k = 1
        while 2 * k * ell < n:
            if 2 * k * ell > 1:
                labels.append(pad_to(Partition([2 * k * ell - 1, 2]), n))
            k += 1
        return [ClassLabel(mu) for mu in labels]
    if kind == "XAn":
        out = []
        for lam in enumerate_partitions(n):
            if any(p % 2 == 0 for p in lam):
                continue
            if is_split_type(lam):
                out.append(
                    CentralElement(
                        n,
                        ALGEBRA_AN,
                        {ClassLabel(lam, "+"): 1, ClassLabel(lam, "-"): 1},
                    )
                )
            else:
                out.append(CentralElement.basis(ClassLabel(lam), n, ALGEBRA_AN))
        for lam in enumerate_partitions(n):
            if is_split_type(lam):
                out.append(CentralElement.basis(ClassLabel(lam, "+"), n, ALGEBRA_AN))
        return out
    raise DomainError(f"unknown generating-set kind {kind!r}")


# --- span closure ---


def closure_dimension(gens, n: int, algebra: str = ALGEBRA_SN) -> int:
    """Dimension of the unital subalgebra generated by the given elements.

    Exact rational row reduction with deterministic pivoting (first
    nonzero coordinate in label order); products are adjoined until the
    span stabilizes.  Budget: n <= 9.
    """
    _check_product_budget(n, CLOSURE_BUDGET)
    labels = _labels_for(n, algebra)
    index = {lab: i for i, lab in enumerate(labels)}
    if algebra == ALGEBRA_SN:
        raw = sn_product_table(n)
        pair_table = {
            (index[ClassLabel(mu)], index[ClassLabel(nu)]): {
                index[ClassLabel(rho)]: c for rho, c in entry.items()
            }
            for (mu, nu), entry in raw.items()
        }
    else:
        raw = an_product_table(n)
        pair_table = {
            (index[x], index[y]): {index[rho]: c for rho, c in entry.items()}
            for (x, y), entry in raw.items()
        }

    def mult(v: dict, w: dict) -> dict:
        out: dict[int, Fraction] = {}
        for a, ca in v.items():
            for b, cb in w.items():
                entry = pair_table[(a, b)] if (a, b) in pair_table else pair_table[(b, a)]
                scale = ca * cb
                for r, c in entry.items():
                    new = out.get(r, Fraction(0)) + scale * c
                    if new:
                        out[r] = new
                    elif r in out:
                        del out[r]
        return out

    rows: dict[int, dict] = {}

    def reduce(v: dict) -> dict:
        v = dict(v)
        for pivot in sorted(rows):
            coeff = v.get(pivot)
            if coeff:
                for col, c in rows[pivot].items():
                    new = v.get(col, Fraction(0)) - coeff * c
                    if new:
                        v[col] = new
                    elif col in v:
                        del v[col]
        return v

    def add(v: dict) -> bool:
        v = reduce(v)
        if not v:
            return False
        pivot = min(v)
        lead = v[pivot]
        rows[pivot] = {col: c / lead for col, c in v.items()}
        return True

    def vector_of(element: CentralElement) -> dict:
        if element.n != n or element.algebra != algebra:
            raise DomainError("generator does not live in the requested algebra")
        return {index[lab]: Fraction(c) for lab, c in element.coeffs.items()}

    seeds = [vector_of(CentralElement.identity(n, algebra))]
    seeds.extend(vector_of(g) for g in gens)
    for s in seeds:
        add(s)
    changed = True
    while changed:
        changed = False
        snapshot = [dict(rows[p]) for p in sorted(rows)]
        for i in range(len(snapshot)):
            for j in range(i, len(snapshot)):
                if add(mult(snapshot[i], snapshot[j])):
                    changed = True
    return len(rows)


def generation_target(n: int, algebra: str) -> int:
    return len(_labels_for(n, algebra))


# --- verification sweeps used by the acceptance suite and the CLI ---


def verify_transposition_square(n: int) -> bool:
    """s_(2)^2 = 2 s_(2,2) + 3 s_(3) + (n(n-1)/2) s_(1)."""
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    got = product_sn(Partition([2]), Partition([2]), n)
    expected = CentralElement(
        n,
        ALGEBRA_SN,
        {
            ClassLabel(pad_to(Partition([2, 2]), n)): 2,
            ClassLabel(pad_to(Partition([3]), n)): 3,
            ClassLabel(pad_to(Partition(), n)): Fraction(n * (n - 1), 2),
        },
    )
    return got == expected


def verify_cycle_positivity(n: int) -> bool:
    """In s_(2) * s_(m-1), the m-cycle class has strictly positive weight."""
    for m in range(2, n + 1):
        left = Partition([2])
        right = Partition([m - 1]) if m - 1 >= 2 else Partition()
        prod = product_sn(left, right, n)
        target = ClassLabel(pad_to(Partition([m]), n))
        if prod.coeffs.get(target, 0) <= 0:
            return False
    return True


def admissible_coefficient_quadruples(n: int):
    """All (k, l, a, b) the two-part coefficient formula covers at this n."""
    for k in range(3, n + 2):
        for l in range(3, k + 1):
            if k + l > n + 2:
                continue
            for a in range(2, k + l - 3):
                b = k + l - 2 - a
                if b < 2 or a < b:
                    continue
                yield (k, l, a, b)


def verify_coefficient_formula(n: int) -> list[str]:
    """Check the formula and its support tail against brute-force products.

    Returns human-readable failure descriptions; empty means success.
    """
    failures = []
    seen_pairs = set()
    for k, l, a, b in admissible_coefficient_quadruples(n):
        prod = product_sn(Partition([k]), Partition([l]), n)
        target = ClassLabel(pad_to(Partition([a, b]), n))
        got = prod.coeffs.get(target, Fraction(0))
        want = lemma_coefficient(k, l, a, b, n)
        if got != want:
            failures.append(f"(k,l,a,b)=({k},{l},{a},{b}): got {got}, formula {want}")
        if (k, l) in seen_pairs:
            continue
        seen_pairs.add((k, l))
        allowed = {
            ClassLabel(pad_to(Partition([x, y]), n))
            for x in range(2, k + l - 3)
            for y in (k + l - 2 - x,)
            if y >= 2 and x >= y
        }
        allowed.update(ClassLabel(mu) for mu in lemma_extra_support_labels(k, l, n))
        for label in prod.coeffs:
            if support(label.cycle_type) >= k + l - 2 and label not in allowed:
                failures.append(
                    f"(k,l)=({k},{l}): unexpected high-support label {label.text}"
                )
    return failures


def verify_central_homomorphism(n: int) -> bool:
    """omega_lam(s_mu) omega_lam(s_nu) = sum_rho c^rho omega_lam(s_rho)."""
    table = sn_product_table(n)
    labels = enumerate_partitions(n)
    omega = {
        lam: {mu: central_character(lam, mu) for mu in labels} for lam in labels
    }
    for lam in labels:
        om = omega[lam]
        for i, mu in enumerate(labels):
            for nu in labels[i:]:
                entry = sn_table_entry(table, mu, nu)
                rhs = sum(c * om[rho] for rho, c in entry.items())
                if om[mu] * om[nu] != rhs:
                    return False
    return True


def verify_product_identities(n: int) -> dict:
    """Counting, support and parity constraints over the full S_n table."""
    table = sn_product_table(n)
    sizes = {mu: class_size(mu) for mu in enumerate_partitions(n)}
    counting = True
    support_ok = True
    parity_ok = True
    for (mu, nu), entry in table.items():
        if sum(c * sizes[rho] for rho, c in entry.items()) != sizes[mu] * sizes[nu]:
            counting = False
        bound = support(mu) + support(nu)
        if any(support(rho) > bound for rho in entry):
            support_ok = False
        odd = is_odd_class(mu) ^ is_odd_class(nu)
        for rho in entry:
            if is_odd_class(rho) != odd:
                parity_ok = False
    return {"counting": counting, "support": support_ok, "parity": parity_ok}


def verify_an_counting(n: int) -> bool:
    """Weighted coefficient sums match the pair count |C_x| * |C_y|."""
    table = an_product_table(n)
    for (x, y), entry in table.items():
        total = sum(c * an_class_size(rho) for rho, c in entry.items())
        if total != an_class_size(x) * an_class_size(y):
            return False
    return True


def verify_generation(kind: str, n: int, ell: int | None = None) -> dict:
    """Closure dimension of a named family against the full class count."""
    gens = generating_set(kind, n, ell)
    if kind == "Zl":
        raise DomainError("Zl is a vanishing family, not a generation claim")
    algebra = ALGEBRA_AN if kind == "XAn" else ALGEBRA_SN
    dim = closure_dimension(gens, n, algebra)
    target = generation_target(n, algebra)
    return {"kind": kind, "ell": ell, "n": n, "dimension": dim, "target": target,
            "generates": dim == target}
