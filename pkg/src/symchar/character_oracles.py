"""Character-level oracles: vanishing, agreement, split values, fixtures.

Everything here is exhaustive and exact.  The oracles enumerate actual
character values (from the exact integer table) rather than reasoning
about them, so an empty counterexample list is a finite proof for the
stated range, and search results are genuine minima for their budgets.

Split classes of A_n take irrational values (u + v*sqrt(d)); these are
kept exact in :class:`QuadraticValue`, so the A_n orthogonality check is
an integer identity, not a floating-point approximation.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction

from .chartable import CharacterTable, character_table, mn_value
from .errors import ConsistencyError, DomainError, SizeMismatchError
from .partitions import (
    Partition,
    class_is_ell_prime,
    class_size,
    conjugate,
    content_sum,
    diagonal_hooks,
    enumerate_partitions,
    is_odd_class,
    is_regular,
    is_self_conjugate,
    iter_partitions,
    p_core,
    pad_to,
)

__all__ = [
    "QuadraticValue",
    "regular_classes",
    "even_length_cycle_classes",
    "odd_ell_prime_classes",
    "transposition_class",
    "vanishing_counterexamples",
    "agreement_kernel",
    "SearchResult",
    "min_vanishing_set",
    "min_distinguishing_set",
    "pair_certifies_vanishing",
    "split_values",
    "split_class_of",
    "an_character_rows",
    "verify_an_orthogonality",
    "restriction_agreement",
    "verify_restriction_pairs",
    "DecompositionFixture",
    "FixtureReport",
    "FIXTURE_D3_5",
    "FIXTURE_TRIVIAL",
    "FIXTURES",
    "perturbed_fixture",
    "verify_decomposition_fixture",
]


# --- exact arithmetic in Q(sqrt(d)) ---


def _squarefree_split(m: int) -> tuple[int, int]:
    """m = s*s*f with f squarefree; returns (s, f).  Requires m >= 1."""
    s, f = 1, 1
    q = 2
    while q * q <= m:
        exp = 0
        while m % q == 0:
            m //= q
            exp += 1
        s *= q ** (exp // 2)
        if exp % 2:
            f *= q
        q += 1 if q == 2 else 2
    return s, f * m


@dataclass(frozen=True)
class QuadraticValue:
    """An exact value u + v*sqrt(d) with rational u, v and squarefree d.

    Canonical form: v = 0 forces d = 0, and any square factor of d is
    folded into v (so a perfect-square radicand collapses to a rational).
    Equality and hashing are therefore structural.
    """

    u: Fraction
    v: Fraction = Fraction(0)
    d: int = 0

    def __post_init__(self):
        u = Fraction(self.u)
        v = Fraction(self.v)
        d = self.d
        if not isinstance(d, int) or isinstance(d, bool):
            raise DomainError(f"discriminant must be an integer, got {d!r}")
        if v == 0 or d == 0:
            v, d = Fraction(0), 0
        else:
            sign = 1 if d > 0 else -1
            s, f = _squarefree_split(abs(d))
            v *= s
            d = sign * f
            if d == 1:
                u += v
                v, d = Fraction(0), 0
        object.__setattr__(self, "u", u)
        object.__setattr__(self, "v", v)
        object.__setattr__(self, "d", d)

    @property
    def is_rational(self) -> bool:
        return self.v == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self.u

    def _common_d(self, other: "QuadraticValue") -> int:
        if self.d and other.d and self.d != other.d:
            raise DomainError(
                f"incompatible discriminants {self.d} and {other.d}"
            )
        return self.d or other.d

    def __add__(self, other) -> "QuadraticValue":
        other = _as_quadratic(other)
        d = self._common_d(other)
        return QuadraticValue(self.u + other.u, self.v + other.v, d)

    __radd__ = __add__

    def __neg__(self) -> "QuadraticValue":
        return QuadraticValue(-self.u, -self.v, self.d)

    def __sub__(self, other) -> "QuadraticValue":
        return self + (-_as_quadratic(other))

    def __mul__(self, other) -> "QuadraticValue":
        other = _as_quadratic(other)
        d = self._common_d(other)
        return QuadraticValue(
            self.u * other.u + self.v * other.v * d,
            self.u * other.v + self.v * other.u,
            d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "QuadraticValue":
        """The field automorphism sqrt(d) -> -sqrt(d)."""
        return QuadraticValue(self.u, -self.v, self.d)

    def hermitian(self) -> "QuadraticValue":
        """Complex conjugation: negates v only for imaginary sqrt(d)."""
        return self.conjugate() if self.d < 0 else self

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.u)
        u, v, d = self.u, self.v, self.d
        vs = f"{v}*" if v not in (1, -1) else ("-" if v == -1 else "")
        if u == 0:
            return f"{vs}sqrt({d})"
        op = "+" if v > 0 else "-"
        vabs = abs(v)
        vs = f"{vabs}*" if vabs != 1 else ""
        return f"{u} {op} {vs}sqrt({d})"


def _as_quadratic(x) -> QuadraticValue:
    if isinstance(x, QuadraticValue):
        return x
    if isinstance(x, (int, Fraction)):
        return QuadraticValue(Fraction(x))
    raise DomainError(f"cannot interpret {x!r} as a quadratic value")


# --- class families ---


def regular_classes(n: int, ell: int, convention: str = "order") -> list[Partition]:
    """Classes of ell'-elements of S_n, in descending lexicographic order."""
    if not isinstance(ell, int) or ell < 2:
        raise DomainError(f"ell must be an integer >= 2, got {ell!r}")
    return [
        mu for mu in enumerate_partitions(n) if class_is_ell_prime(mu, ell, convention)
    ]


def even_length_cycle_classes(n: int) -> list[Partition]:
    """The classes of a single even-length cycle: (2j, 1^(n-2j))."""
    return [pad_to(Partition([2 * j]), n) for j in range(1, n // 2 + 1)]


def odd_ell_prime_classes(n: int, ell: int, convention: str = "order") -> list[Partition]:
    """Classes of odd permutations whose elements are ell'-elements."""
    return [mu for mu in regular_classes(n, ell, convention) if is_odd_class(mu)]


def transposition_class(n: int) -> Partition:
    if n < 2:
        raise DomainError(f"no transpositions in S_{n}")
    return pad_to(Partition([2]), n)


def _normalize_classes(n: int, classes) -> list[Partition]:
    out = []
    seen = set()
    for mu in classes:
        mu = mu if isinstance(mu, Partition) else Partition(mu)
        if mu.n != n:
            raise SizeMismatchError(f"class {tuple(mu)} is not a class of S_{n}")
        if mu not in seen:
            seen.add(mu)
            out.append(mu)
    return out


# --- vanishing and agreement oracles ---


def vanishing_counterexamples(n: int, classes) -> list[Partition]:
    """Non-self-conjugate labels whose character vanishes on every given class.

    An empty result proves that common vanishing on this class set forces
    self-conjugacy, for this n.
    """
    classes = _normalize_classes(n, classes)
    table = character_table(n)
    out = []
    for lam in table.rows:
        if is_self_conjugate(lam):
            continue
        if all(table.value(lam, mu) == 0 for mu in classes):
            out.append(lam)
    return out


def agreement_kernel(n: int, classes) -> list[tuple[Partition, Partition]]:
    """Unordered pairs of distinct labels whose characters agree on the set.

    Pairs are returned with each member, and the pair list itself, in
    descending lexicographic order; empty means the class set separates
    all irreducible characters of S_n.
    """
    classes = _normalize_classes(n, classes)
    table = character_table(n)
    by_values: dict[tuple, list[Partition]] = {}
    for lam in table.rows:
        key = tuple(table.value(lam, mu) for mu in classes)
        by_values.setdefault(key, []).append(lam)
    pairs = []
    for group in by_values.values():
        if len(group) > 1:
            pairs.extend(itertools.combinations(group, 2))
    pairs.sort()
    pairs.reverse()
    return pairs


# --- minimal separating-set searches ---


@dataclass(frozen=True)
class SearchResult:
    """Outcome of a smallest-class-set search.

    When ``exhaustive`` is true, ``size`` is the exact minimum and
    ``witness`` a lexicographically first witness; otherwise no set of
    size <= max_size works, ``size`` = max_size + 1 is a lower bound and
    ``witness`` is None.
    """

    n: int
    predicate: str
    size: int
    witness: tuple[Partition, ...] | None
    exhaustive: bool


def _ascending_classes(n: int) -> list[Partition]:
    return list(reversed(enumerate_partitions(n)))


def _search(n: int, predicate_name: str, candidates, holds, max_size: int) -> SearchResult:
    if max_size < 1:
        raise DomainError(f"max_size must be >= 1, got {max_size}")
    for size in range(1, max_size + 1):
        for subset in itertools.combinations(candidates, size):
            if holds(subset):
                return SearchResult(n, predicate_name, size, subset, True)
    return SearchResult(n, predicate_name, max_size + 1, None, False)


def min_vanishing_set(n: int, max_size: int = 3) -> SearchResult:
    """Smallest class set whose common vanishing forces self-conjugacy.

    Candidate subsets are tried in increasing size, lexicographically by
    ascending class label; the identity class is excluded because no
    character vanishes there, which would make the property vacuous.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    table = character_table(n)
    candidates = [mu for mu in _ascending_classes(n) if mu != pad_to(Partition(), n)]
    targets = [lam for lam in table.rows if not is_self_conjugate(lam)]
    rows = {lam: {mu: table.value(lam, mu) for mu in candidates} for lam in targets}

    def holds(subset) -> bool:
        return not any(
            all(rows[lam][mu] == 0 for mu in subset) for lam in targets
        )

    return _search(n, "vanishing-forces-self-conjugate", candidates, holds, max_size)


def min_distinguishing_set(n: int, max_size: int = 3) -> SearchResult:
    """Smallest class set on which no two distinct characters agree.

    Same search order as :func:`min_vanishing_set`, but the identity
    class is a genuine candidate here (degrees separate characters).
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    table = character_table(n)
    candidates = _ascending_classes(n)
    count = len(table.rows)
    rows = {lam: {mu: table.value(lam, mu) for mu in candidates} for lam in table.rows}

    def holds(subset) -> bool:
        seen = {tuple(rows[lam][mu] for mu in subset) for lam in table.rows}
        return len(seen) == count

    return _search(n, "agreement-forces-equality", candidates, holds, max_size)


def pair_certifies_vanishing(n: int) -> bool:
    """Whether vanishing at both (2,1^(n-2)) and (4,1^(n-4)) forces λ = λ'.

    Streams over partitions without building the character table: the
    transposition value is zero exactly when the content sum is zero, so
    only that thin slice ever reaches the recursive evaluator.  Scales
    far beyond the full-table budget.
    """
    if n < 4:
        raise DomainError(f"need n >= 4, got {n}")
    four_cycle = pad_to(Partition([4]), n)
    for lam in iter_partitions(n):
        if content_sum(lam) != 0 or is_self_conjugate(lam):
            continue
        if mn_value(lam, four_cycle) == 0:
            return False
    return True


# --- split classes of A_n and their exact values ---


def split_class_of(lam) -> Partition:
    """The cycle type of the split class attached to a self-conjugate label:
    its diagonal hook lengths."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not is_self_conjugate(lam):
        raise DomainError(f"{tuple(lam)} is not self-conjugate")
    return Partition(diagonal_hooks(lam))


def split_values(lam) -> tuple[QuadraticValue, QuadraticValue]:
    """The two constituent values at the split class of a self-conjugate label.

    With diagonal hooks (q_1, ..., q_r) and e = (-1)^((n-r)/2), the two
    values are (e ± sqrt(e * q_1 * ... * q_r)) / 2; their sum is e.
    """
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not is_self_conjugate(lam):
        raise DomainError(f"{tuple(lam)} is not self-conjugate")
    hooks = diagonal_hooks(lam)
    r = len(hooks)
    eps = -1 if ((lam.n - r) // 2) % 2 else 1
    radicand = eps
    for q in hooks:
        radicand *= q
    half = Fraction(1, 2)
    plus = QuadraticValue(half * eps, half, radicand)
    minus = QuadraticValue(half * eps, -half, radicand)
    return plus, minus


def an_character_rows(n: int):
    """The irreducible characters of A_n as rows over the A_n class labels.

    Returns (labels, rows): each row maps every A_n class label to a
    QuadraticValue.  Conjugate pairs {λ, λ'} contribute one restricted
    row; each self-conjugate λ contributes two constituents that differ
    only on λ's own split class, where they take the conjugate pair of
    split values.
    """
    from .class_algebra import an_labels, is_split_type

    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    table = character_table(n)
    labels = an_labels(n)
    rows = []
    for lam in table.rows:
        lam_c = conjugate(lam)
        if lam_c < lam:
            continue  # one row per conjugate pair (either member gives the same row)
        if lam != lam_c:
            row = {}
            for lab in labels:
                row[lab] = QuadraticValue(Fraction(table.value(lam, lab.cycle_type)))
            rows.append(row)
            continue
        own = split_class_of(lam)
        if not is_split_type(own):
            # Degenerate tiny cases (n <= 2): the restriction stays irreducible.
            rows.append(
                {lab: QuadraticValue(Fraction(table.value(lam, lab.cycle_type))) for lab in labels}
            )
            continue
        plus_val, minus_val = split_values(lam)
        for first, second in ((plus_val, minus_val), (minus_val, plus_val)):
            row = {}
            for lab in labels:
                if lab.cycle_type == own:
                    row[lab] = first if lab.split_sign == "+" else second
                else:
                    row[lab] = QuadraticValue(Fraction(table.value(lam, lab.cycle_type), 2))
            rows.append(row)
    if len(rows) != len(labels):
        raise ConsistencyError(
            f"A_{n}: assembled {len(rows)} characters for {len(labels)} classes"
        )
    return labels, rows


def verify_an_orthogonality(n: int) -> bool:
    """Exact first orthogonality for the assembled A_n character rows."""
    from .class_algebra import an_class_size

    labels, rows = an_character_rows(n)
    sizes = {lab: an_class_size(lab) for lab in labels}
    group_order = sum(sizes.values())
    zero = QuadraticValue(Fraction(0))
    for i, xi in enumerate(rows):
        for j in range(i, len(rows)):
            xj = rows[j]
            total = zero
            for lab in labels:
                total = total + sizes[lab] * (xi[lab] * xj[lab].hermitian())
            expected = QuadraticValue(Fraction(group_order if i == j else 0))
            if total != expected:
                return False
    return True


# --- restriction agreement ---


def restriction_agreement(lam, mu) -> bool:
    """Whether two labels' characters agree on every even class of S_n.

    This is equality of the restrictions to A_n as class functions."""
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    mu = mu if isinstance(mu, Partition) else Partition(mu)
    if lam.n != mu.n:
        raise SizeMismatchError(
            f"labels {tuple(lam)} and {tuple(mu)} have different weights"
        )
    table = character_table(lam.n)
    return all(
        table.value(lam, nu) == table.value(mu, nu)
        for nu in table.cols
        if not is_odd_class(nu)
    )


def verify_restriction_pairs(n: int) -> bool:
    """restriction_agreement(λ, μ) holds exactly when μ ∈ {λ, λ'}."""
    labels = enumerate_partitions(n)
    table = character_table(n)
    even_cols = [nu for nu in table.cols if not is_odd_class(nu)]
    rows = {lam: tuple(table.value(lam, nu) for nu in even_cols) for lam in labels}
    for i, lam in enumerate(labels):
        for mu in labels[i:]:
            expected = mu in (lam, conjugate(lam))
            if (rows[lam] == rows[mu]) != expected:
                return False
    return True


# --- decomposition-matrix fixtures ---


@dataclass(frozen=True)
class DecompositionFixture:
    """A pinned decomposition matrix for S_n in characteristic p.

    ``row_labels`` must be all partitions of n and ``col_labels`` the
    p-regular ones; ``entries[i][j]`` counts the composition factors of
    the reduced row module labelled row_labels[i] of type col_labels[j].
    """

    name: str
    n: int
    p: int
    row_labels: tuple[Partition, ...]
    col_labels: tuple[Partition, ...]
    entries: tuple[tuple[int, ...], ...]


@dataclass
class FixtureReport:
    """Outcome of the fixture verification; ``ok`` means every check passed."""

    name: str
    labels_ok: bool = False
    wedge_ok: bool = False
    solvable: bool = False
    integral: bool = False
    blocks_ok: bool = False
    rows_match: bool = False
    rows_distinct: bool = False
    failures: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.labels_ok
            and self.wedge_ok
            and self.solvable
            and self.integral
            and self.blocks_ok
            and self.rows_match
            and self.rows_distinct
        )


def _fixture(name: str, n: int, p: int, rows, cols, entries) -> DecompositionFixture:
    return DecompositionFixture(
        name,
        n,
        p,
        tuple(Partition(r) for r in rows),
        tuple(Partition(c) for c in cols),
        tuple(tuple(row) for row in entries),
    )


FIXTURE_D3_5 = _fixture(
    "d3_5",
    5,
    3,
    [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1)],
    [(5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1)],
    [
        [1, 0, 0, 0, 0],
        [0, 1, 0, 0, 0],
        [0, 1, 1, 0, 0],
        [0, 0, 0, 1, 0],
        [1, 0, 0, 0, 1],
        [0, 0, 0, 0, 1],
        [0, 0, 1, 0, 0],
    ],
)

FIXTURE_TRIVIAL = _fixture("trivial_1", 1, 3, [(1,)], [(1,)], [[1]])

FIXTURES = {f.name: f for f in (FIXTURE_D3_5, FIXTURE_TRIVIAL)}


def perturbed_fixture(
    fixture: DecompositionFixture, row: int, col: int, delta: int
) -> DecompositionFixture:
    """Copy of a fixture with one entry shifted by delta."""
    entries = [list(r) for r in fixture.entries]
    entries[row][col] += delta
    return DecompositionFixture(
        f"{fixture.name}-perturbed-{row}-{col}-{delta:+d}",
        fixture.n,
        fixture.p,
        fixture.row_labels,
        fixture.col_labels,
        tuple(tuple(r) for r in entries),
    )


def _solve_square(matrix: list[list[Fraction]], rhs_rows: list[list[Fraction]]):
    """Solve M x = b for each b in rhs_rows; returns None if M is singular."""
    size = len(matrix)
    aug = [list(matrix[i]) + [rhs[i] for rhs in rhs_rows] for i in range(size)]
    width = size + len(rhs_rows)
    for col in range(size):
        pivot_row = next((r for r in range(col, size) if aug[r][col]), None)
        if pivot_row is None:
            return None
        aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        lead = aug[col][col]
        aug[col] = [x / lead for x in aug[col]]
        for r in range(size):
            if r != col and aug[r][col]:
                factor = aug[r][col]
                aug[r] = [x - factor * y for x, y in zip(aug[r], aug[col])]
    return [[aug[i][size + k] for i in range(size)] for k in range(len(rhs_rows))]


def verify_decomposition_fixture(fixture: DecompositionFixture) -> FixtureReport:
    """Check a pinned decomposition matrix against the exact character table.

    Stages: label validity; the wedge shape (p-regular rows, ordered
    before the p-singular ones, form a lower unitriangular square); a
    solve for the column class functions from the p-regular rows on the
    p'-classes; integrality of the solved values; the core/block support
    constraint on nonzero entries; reproduction of every character row;
    and row distinctness (for p = 2, equality exactly at conjugate pairs).
    """
    report = FixtureReport(fixture.name)
    n, p = fixture.n, fixture.p
    fail = report.failures.append

    expected_rows = set(enumerate_partitions(n))
    expected_cols = {lam for lam in expected_rows if is_regular(lam, p)}
    rows_given = set(fixture.row_labels)
    cols_given = set(fixture.col_labels)
    if rows_given != expected_rows or len(fixture.row_labels) != len(expected_rows):
        fail("(labels) row labels are not exactly the partitions of n")
    if cols_given != expected_cols or len(fixture.col_labels) != len(expected_cols):
        fail("(labels) column labels are not exactly the p-regular partitions")
    if len(fixture.entries) != len(fixture.row_labels) or any(
        len(r) != len(fixture.col_labels) for r in fixture.entries
    ):
        fail("(labels) entry matrix shape does not match the labels")
    elif any(
        not isinstance(e, int) or e < 0 for row in fixture.entries for e in row
    ):
        fail("(labels) entries must be non-negative integers")
    if report.failures:
        return report
    report.labels_ok = True

    row_index = {lam: i for i, lam in enumerate(fixture.row_labels)}
    col_index = {nu: j for j, nu in enumerate(fixture.col_labels)}
    entry = lambda lam, nu: fixture.entries[row_index[lam]][col_index[nu]]

    # Wedge: p-regular rows first, each block in descending lexicographic order.
    regular_rows = sorted(expected_cols, reverse=True)
    wedge_cols = sorted(expected_cols, reverse=True)
    report.wedge_ok = True
    for i, lam in enumerate(regular_rows):
        for j, nu in enumerate(wedge_cols):
            val = entry(lam, nu)
            if j == i and val != 1:
                report.wedge_ok = False
                fail(f"(wedge) diagonal entry at row {tuple(lam)} is {val}, want 1")
            elif j > i and val != 0:
                report.wedge_ok = False
                fail(
                    f"(wedge) entry at row {tuple(lam)}, column {tuple(nu)} "
                    f"is {val}, want 0 above the diagonal"
                )

    table = character_table(n)
    pp_classes = [mu for mu in table.cols if class_is_ell_prime(mu, p)]
    if len(pp_classes) != len(fixture.col_labels):
        fail(
            f"(solve) {len(fixture.col_labels)} columns but {len(pp_classes)} p'-classes"
        )
        return report

    matrix = [
        [Fraction(entry(lam, nu)) for nu in wedge_cols] for lam in regular_rows
    ]
    rhs = [
        [Fraction(table.value(lam, mu)) for lam in regular_rows] for mu in pp_classes
    ]
    solved = _solve_square(matrix, rhs)
    if solved is None:
        fail("(solve) p-regular row system is singular")
        return report
    report.solvable = True
    # phi[nu][mu]: the class-function value of column nu at the p'-class mu.
    phi = {
        nu: {mu: solved[k][i] for k, mu in enumerate(pp_classes)}
        for i, nu in enumerate(wedge_cols)
    }

    report.integral = True
    for nu in wedge_cols:
        for mu in pp_classes:
            if phi[nu][mu].denominator != 1:
                report.integral = False
                fail(
                    f"(integrality) column {tuple(nu)} takes value {phi[nu][mu]} "
                    f"at class {tuple(mu)}"
                )

    report.blocks_ok = True
    for lam in fixture.row_labels:
        for nu in fixture.col_labels:
            if entry(lam, nu) and p_core(lam, p) != p_core(nu, p):
                report.blocks_ok = False
                fail(
                    f"(blocks) nonzero entry at row {tuple(lam)}, column {tuple(nu)} "
                    "joins labels with different cores"
                )

    report.rows_match = True
    for lam in fixture.row_labels:
        for mu in pp_classes:
            total = sum(entry(lam, nu) * phi[nu][mu] for nu in fixture.col_labels)
            if total != table.value(lam, mu):
                report.rows_match = False
                fail(
                    f"(rows) row {tuple(lam)} at class {tuple(mu)}: "
                    f"matrix gives {total}, character value is {table.value(lam, mu)}"
                )

    report.rows_distinct = True
    vectors = {lam: tuple(fixture.entries[row_index[lam]]) for lam in fixture.row_labels}
    for lam, mu in itertools.combinations(fixture.row_labels, 2):
        equal = vectors[lam] == vectors[mu]
        if p == 2:
            if equal != (conjugate(lam) == mu):
                report.rows_distinct = False
                fail(
                    f"(distinct) rows {tuple(lam)} and {tuple(mu)}: "
                    f"{'equal' if equal else 'distinct'}, but conjugacy says otherwise"
                )
        elif equal:
            report.rows_distinct = False
            fail(f"(distinct) rows {tuple(lam)} and {tuple(mu)} coincide")
    return report
