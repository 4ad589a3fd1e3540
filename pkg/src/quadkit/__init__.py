"""Quad squares over XOR-structured card decks: predicates, counts, orbits."""

from .quad_core import (
    AffineMap,
    DeckSpec,
    IndependenceError,
    affine_from_images,
    complete_quad,
    gf2_rank,
    is_card_quad,
    random_invertible_affine,
    xor_quad,
)
from .square_model import (
    COORDINATE_QUADS,
    NotAQuadError,
    QuadSquare,
    SquareFormatError,
    TypePattern,
    all_cells_distinct,
    attribute_values,
    coordinate_quads_xor_zero,
    format_square,
    has_quad_lines,
    is_latin,
    is_magic,
    is_semimagic,
    is_strongly_magic,
    line_type,
    lines,
    num_attributes,
    parse_square,
    type_pattern,
    value_distribution,
)
from .canonical import (
    is_type_c,
    reduce_to_type_c,
    symmetry_multiplier,
    total_from_type_c,
)
from .enumeration import (
    CapacityError,
    class_count_sequences,
    enumerate_type_c_magic,
    enumerate_type_c_semimagic,
    enumerate_type_c_strongly_magic,
    full_deck_count,
    iter_type_c_magic,
    iter_type_c_semimagic,
    iter_type_c_strongly_magic,
    magic_type_c_closed_form,
    semimagic_type_c_closed_form,
    sequence_terms,
    strongly_magic_quotient,
    strongly_magic_total,
    thread_count,
    type_c_strongly_magic_square,
)
from .decomposition import (
    BPrimeCase,
    RepeatPattern,
    b_prime_canonical,
    b_prime_reference_cases,
    classify_b_prime,
    coefficients_by_degree,
    count_legit_a,
    decompose_type_c,
    repeat_pattern,
    semimagic_type_c_by_decomposition,
    symmetry_factor,
)
from .latin import (
    all_latin_squares,
    are_orthogonal,
    assemble_cards,
    check_latin_combination,
    count_latin_quad_squares,
    count_latin_squares_order4,
    count_mols_pairs,
    is_latin_grid,
    reduced_latin_squares,
)
from .classify16 import (
    OrbitClass,
    canonical_form,
    check_s_column_proposition,
    classify_semimagic16,
    classify_strongly_magic16,
    realizable_distributions,
    realizable_pairs,
    strongly_magic_pair_table,
)

__version__ = "0.1.0"
