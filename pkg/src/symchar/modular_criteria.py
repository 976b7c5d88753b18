"""Decision procedures for modular reducibility and restriction splitting.

All of these work over a field of odd characteristic, described by a
:class:`FieldSpec` (finite GF(p^k) or the algebraic closure).  They are
pure arithmetic on hook lengths: no module theory is performed, only the
closed-form criteria, so each answer comes with the condition that
decided it.

Characteristic 2 is rejected outright rather than approximated — the
odd-characteristic criteria are simply not true there.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, UnsupportedCharacteristicError
from .partitions import (
    Partition,
    conjugate,
    diagonal_hooks,
    hook_rows,
    is_self_conjugate,
)

__all__ = [
    "FieldSpec",
    "p_part",
    "fayers_reducible",
    "diagonal_hook_trigger",
    "is_square_in_field",
    "Decision",
    "restriction_decomposable",
    "hook_case",
    "verify_fayers_conjugation",
    "verify_hook_coprime_simplicity",
    "verify_diagonal_hook_implication",
    "verify_hook_case_agreement",
]

REASON_NOT_SELF_CONJUGATE = "i-not-self-conjugate"
REASON_NO_SQUARE_ROOT = "ii-discriminant-not-a-square"
REASON_NOT_SIMPLE = "iii-not-simple"


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    q = 2
    while q * q <= m:
        if m % q == 0:
            return False
        q += 1 if q == 2 else 2
    return True


def _check_odd_prime(p) -> int:
    if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
        raise DomainError(f"characteristic must be a prime, got {p!r}")
    if p == 2:
        raise UnsupportedCharacteristicError(
            "characteristic 2 is out of scope for these criteria"
        )
    return p


@dataclass(frozen=True)
class FieldSpec:
    """A field of odd characteristic: GF(p^k), or algebraically closed."""

    p: int
    k: int = 1
    algebraically_closed: bool = False

    def __post_init__(self):
        _check_odd_prime(self.p)
        if not self.algebraically_closed:
            if not isinstance(self.k, int) or isinstance(self.k, bool) or self.k < 1:
                raise DomainError(f"extension degree must be an integer >= 1, got {self.k!r}")

    @property
    def text(self) -> str:
        return f"closure(GF({self.p}))" if self.algebraically_closed else f"GF({self.p}^{self.k})"


def p_part(m: int, p: int) -> int:
    """Largest power of p dividing m (1 if coprime)."""
    if not isinstance(m, int) or isinstance(m, bool) or m < 1:
        raise DomainError(f"need a positive integer, got {m!r}")
    if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
        raise DomainError(f"need a prime, got {p!r}")
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def fayers_reducible(lam, p: int) -> bool:
    """Hook-length test for reducibility of the row module in odd characteristic.

    True iff some node a has p | hook(a) and both a node b in the same
    row and a node c in the same column whose hook p-parts differ from
    hook(a)'s.
    """
    p = _check_odd_prime(p)
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    rows = hook_rows(lam)
    if not rows:
        return False
    parts_grid = [[p_part(h, p) for h in row] for row in rows]
    cols: dict[int, list[int]] = {}
    for row in parts_grid:
        for j, hp in enumerate(row):
            cols.setdefault(j, []).append(hp)
    for row in parts_grid:
        for j, hp in enumerate(row):
            if hp == 1:
                continue  # p does not divide this hook
            if any(other != hp for other in row) and any(
                other != hp for other in cols[j]
            ):
                return True
    return False


def diagonal_hook_trigger(lam, p: int) -> bool:
    """Whether some principal hook of a self-conjugate label is divisible by p.

    A true answer forces reducibility (and is verified to, in the test
    sweeps); a false answer decides nothing by itself.
    """
    if not isinstance(p, int) or isinstance(p, bool) or not _is_prime(p):
        raise DomainError(f"need a prime, got {p!r}")
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not is_self_conjugate(lam):
        raise DomainError(f"{tuple(lam)} is not self-conjugate")
    return any(q % p == 0 for q in diagonal_hooks(lam))


def is_square_in_field(a: int, field: FieldSpec) -> bool:
    """Whether the integer a has a square root in the given field."""
    if not isinstance(a, int) or isinstance(a, bool):
        raise DomainError(f"need an integer, got {a!r}")
    if field.algebraically_closed:
        return True
    residue = a % field.p
    if residue == 0:
        return True
    if field.k % 2 == 0:
        return True  # the quadratic extension already contains every root
    return pow(residue, (field.p - 1) // 2, field.p) == 1


@dataclass(frozen=True)
class Decision:
    """A yes/no answer plus the first condition that failed (if any)."""

    decomposable: bool
    reasons: tuple[str, ...]


def _split_discriminant(lam: Partition) -> int:
    hooks = diagonal_hooks(lam)
    r = len(hooks)
    value = -1 if ((lam.n - r) // 2) % 2 else 1
    for q in hooks:
        value *= q
    return value


def restriction_decomposable(lam, field: FieldSpec) -> Decision:
    """Whether the row module splits on restriction to the even subgroup.

    Conditions, probed in a fixed order and reported by the first failure:
    (i) the label is self-conjugate; (iii) the module is simple (the
    hook-length reducibility test is negative); (ii) over a finite field,
    the signed product of the principal hooks is a square.  The order
    matters for (ii): whenever p divides a principal hook, (iii) already
    fails, so (ii) never evaluates a zero discriminant on accepted inputs.
    """
    if not isinstance(field, FieldSpec):
        raise DomainError(f"need a FieldSpec, got {field!r}")
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if not is_self_conjugate(lam):
        return Decision(False, (REASON_NOT_SELF_CONJUGATE,))
    if fayers_reducible(lam, field.p):
        return Decision(False, (REASON_NOT_SIMPLE,))
    if not field.algebraically_closed and not is_square_in_field(
        _split_discriminant(lam), field
    ):
        return Decision(False, (REASON_NO_SQUARE_ROOT,))
    return Decision(True, ())


def hook_case(n: int, r: int, field: FieldSpec) -> bool:
    """Closed-form answer for hook labels (n-r, 1^r) with 1 < r < n-1.

    Decomposable iff n = 2r + 1, p does not divide n, and the signed
    integer (-1)^((n-1)/2) * n is a square in the field.
    """
    if not isinstance(field, FieldSpec):
        raise DomainError(f"need a FieldSpec, got {field!r}")
    for name, value in (("n", n), ("r", r)):
        if not isinstance(value, int) or isinstance(value, bool):
            raise DomainError(f"{name} must be an integer, got {value!r}")
    if not 1 < r < n - 1:
        raise DomainError(f"need 1 < r < n - 1, got n={n}, r={r}")
    if n != 2 * r + 1:
        return False
    if n % field.p == 0:
        return False
    signed = n if ((n - 1) // 2) % 2 == 0 else -n
    return is_square_in_field(signed, field)


# --- verification sweeps ---


def verify_fayers_conjugation(n: int, p: int) -> bool:
    """Reducibility is invariant under conjugating the label."""
    from .partitions import enumerate_partitions

    return all(
        fayers_reducible(lam, p) == fayers_reducible(conjugate(lam), p)
        for lam in enumerate_partitions(n)
    )


def verify_hook_coprime_simplicity(n: int, p: int) -> bool:
    """If no hook is divisible by p, the reducibility test must be negative."""
    from .partitions import enumerate_partitions, hook_grid

    for lam in enumerate_partitions(n):
        if all(h % p for h in hook_grid(lam).multiset()) and fayers_reducible(lam, p):
            return False
    return True


def verify_diagonal_hook_implication(n: int, p: int) -> bool:
    """A p-divisible principal hook on a self-conjugate label forces reducibility."""
    from .partitions import enumerate_partitions

    for lam in enumerate_partitions(n):
        if not is_self_conjugate(lam):
            continue
        if diagonal_hook_trigger(lam, p) and not fayers_reducible(lam, p):
            return False
    return True


def verify_hook_case_agreement(n: int, field: FieldSpec) -> bool:
    """The closed form agrees with the general decision on all hook labels."""
    for r in range(2, n - 1):
        lam = Partition([n - r] + [1] * r)
        if hook_case(n, r, field) != restriction_decomposable(lam, field).decomposable:
            return False
    return True
