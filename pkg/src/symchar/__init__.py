"""Exact character computations for symmetric groups and their even subgroups.

Everything is integer or rational arithmetic — no floats except at the
final logarithm of the counting comparisons — so every equality the
package checks is an exact one.
"""

from .errors import (
    CacheChecksumError,
    CacheCorruptError,
    CacheError,
    CacheMissError,
    CacheVersionError,
    ConsistencyError,
    DomainError,
    ResourceBudgetError,
    SizeMismatchError,
    SymcharError,
    UnsupportedCharacteristicError,
)
from .partitions import (
    HookGrid,
    Partition,
    centralizer_order,
    class_display_text,
    class_is_ell_prime,
    class_size,
    class_sign,
    conjugate,
    content_sum,
    diagonal_hooks,
    diagonal_length,
    dimension,
    element_order,
    enumerate_partitions,
    hook_grid,
    hook_rows,
    is_odd_class,
    is_regular,
    is_self_conjugate,
    iter_partitions,
    p_core,
    pad_to,
    parse_partition,
    partition_text,
    support,
)
from .chartable import (
    CharacterTable,
    central_character,
    character_table,
    load_table,
    mn_value,
    save_table,
    verify_column_orthogonality,
    verify_conjugate_symmetry,
    verify_degrees,
    verify_row_orthogonality,
)
from .class_algebra import (
    ALGEBRA_AN,
    ALGEBRA_SN,
    CentralElement,
    ClassLabel,
    an_class_size,
    an_labels,
    an_product_table,
    closure_dimension,
    generating_set,
    is_split_type,
    lemma_coefficient,
    lemma_extra_support_labels,
    multiply_elements,
    parse_class_label,
    product_an,
    product_sn,
    sn_labels,
    sn_product_table,
)
from .character_oracles import (
    FIXTURES,
    DecompositionFixture,
    FixtureReport,
    QuadraticValue,
    SearchResult,
    agreement_kernel,
    an_character_rows,
    even_length_cycle_classes,
    min_distinguishing_set,
    min_vanishing_set,
    odd_ell_prime_classes,
    pair_certifies_vanishing,
    perturbed_fixture,
    regular_classes,
    restriction_agreement,
    split_class_of,
    split_values,
    transposition_class,
    vanishing_counterexamples,
    verify_an_orthogonality,
    verify_decomposition_fixture,
    verify_restriction_pairs,
)
from .modular_criteria import (
    Decision,
    FieldSpec,
    diagonal_hook_trigger,
    fayers_reducible,
    hook_case,
    is_square_in_field,
    p_part,
    restriction_decomposable,
)
from .regularity import (
    CountSeries,
    convergence_report,
    hagis_limit,
    partition_counts,
    regular_counts,
)

__version__ = "0.1.0"
