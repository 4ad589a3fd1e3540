"""High/low block split of type-C squares and the pattern-class census."""

import itertools

import pytest

from quadkit import reference
from quadkit.decomposition import (
    B_PRIME_MAX_BITS,
    BPrimeCase,
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
from quadkit.enumeration import CapacityError, semimagic_type_c_closed_form
from quadkit.quad_core import DeckSpec, gf2_rank
from quadkit.square_model import QuadSquare

EXAMPLE6 = QuadSquare(6, (0, 1, 2, 3, 4, 17, 32, 53, 8, 5, 6, 11, 12, 21, 36, 61))


# ---------------------------------------------------------------------------
# splitting


def test_decompose_splits_nibbles():
    low, high = decompose_type_c(EXAMPLE6)
    assert low.bits == 4 and high.bits == 6
    assert low.cells[7] == 5 and high.cells[7] == 48     # cell value 53
    assert low.cells[5] == 1 and high.cells[5] == 16     # cell value 17
    for p in range(16):
        assert low.cells[p] | high.cells[p] == EXAMPLE6.cells[p]
        assert high.cells[p] % 16 == 0


def test_decompose_identity_square():
    low, high = decompose_type_c(QuadSquare(4, tuple(range(16))))
    assert low.cells == tuple(range(16))
    assert high.cells == (0,) * 16


def test_decompose_requires_type_c():
    shifted = QuadSquare(5, tuple(c ^ 16 for c in range(16)))
    with pytest.raises(ValueError):
        decompose_type_c(shifted)


def test_high_block_has_zero_border_and_forced_lines():
    low, high = decompose_type_c(EXAMPLE6)
    cells = high.cells
    assert cells[0:4] == (0, 0, 0, 0) or cells[0] == 0
    assert all(cells[p] == 0 for p in (0, 1, 2, 3, 4, 8, 12))
    for i in range(4):
        row = cells[4 * i:4 * i + 4]
        assert row[0] ^ row[1] ^ row[2] ^ row[3] == 0
        col = cells[i::4]
        assert col[0] ^ col[1] ^ col[2] ^ col[3] == 0


# ---------------------------------------------------------------------------
# repeat patterns and their symmetry orbits


def test_repeat_pattern_groups_equal_values():
    square = QuadSquare(4, (0, 0, 1, 1, 0, 0, 1, 1, 2, 2, 3, 3, 2, 2, 3, 3))
    pattern = repeat_pattern(square)
    assert len(pattern.groups) == 4
    assert all(len(g) == 4 for g in pattern.groups)
    assert ((0, 0), (0, 1), (1, 0), (1, 1)) in pattern.groups


def test_repeat_pattern_all_distinct_is_trivial():
    pattern = repeat_pattern(QuadSquare(4, tuple(range(16))))
    assert pattern.nontrivial() == ()
    assert len(pattern.groups) == 16


def test_symmetry_factor_of_constant_block():
    assert symmetry_factor(QuadSquare(4, (0,) * 16)) == 1


def test_symmetry_factors_match_pinned_cases():
    cases = b_prime_reference_cases()
    for case, factor in zip(cases, reference.B_PRIME_SYMMETRY_FACTORS):
        assert case.symmetry_factor == factor
        assert symmetry_factor(case.representative) == factor


# ---------------------------------------------------------------------------
# pattern classes


def test_ten_stable_cases():
    cases = b_prime_reference_cases()
    assert len(cases) == 10
    for case, rep in zip(cases, reference.B_PRIME_REPRESENTATIVES):
        assert case.representative.cells == rep
    assert tuple(c.multiplicity_degree for c in cases) == reference.B_PRIME_DEGREES
    assert tuple(c.a_count for c in cases) == reference.B_PRIME_A_COUNTS
    assert tuple(c.symmetry_factor for c in cases) == reference.B_PRIME_SYMMETRY_FACTORS


def test_degrees_are_value_ranks():
    for case in b_prime_reference_cases():
        assert case.multiplicity_degree == gf2_rank(case.representative.cells)


def test_orbit_sizes_cover_the_state_space():
    for bits in (4, 5, 6, 7, 8):
        m = 1 << max(bits - 4, 0)
        cases = classify_b_prime(DeckSpec(bits))
        assert sum(c.orbit_size for c in cases) == m ** 4


def test_case_counts_by_deck_size():
    assert len(classify_b_prime(DeckSpec(4))) == 1
    assert len(classify_b_prime(DeckSpec(7))) == 9    # degree 4 needs 4 free bits
    assert len(classify_b_prime(DeckSpec(8))) == 10


def test_smaller_decks_see_prefixes_of_the_stable_list():
    stable = {c.representative.cells: c for c in b_prime_reference_cases()}
    for bits in (5, 6, 7):
        for case in classify_b_prime(DeckSpec(bits)):
            # pad the representative into the 16-value space for lookup
            match = stable[case.representative.cells]
            assert case.symmetry_factor == match.symmetry_factor
            assert case.multiplicity_degree == match.multiplicity_degree
            assert case.a_count == match.a_count


def test_classification_capacity_limit():
    assert B_PRIME_MAX_BITS == 9
    with pytest.raises(CapacityError):
        classify_b_prime(DeckSpec(10))


def test_b_prime_canonical_fixes_representatives():
    deck = DeckSpec(6)
    for case in classify_b_prime(deck):
        rep = case.representative
        assert b_prime_canonical(deck, rep) == rep


def test_b_prime_canonical_collapses_orbit_mates():
    deck = DeckSpec(6)
    case = classify_b_prime(deck)[1]
    x11, x12, x21, x22 = (case.representative.cell(1, 1), case.representative.cell(1, 2),
                          case.representative.cell(2, 1), case.representative.cell(2, 2))
    swapped = (x21, x22, x11, x12)   # rows 1 and 2 exchanged
    cells = (0, 0, 0, 0,
             0, swapped[0], swapped[1], swapped[0] ^ swapped[1],
             0, swapped[2], swapped[3], swapped[2] ^ swapped[3],
             0, swapped[0] ^ swapped[2], swapped[1] ^ swapped[3],
             swapped[0] ^ swapped[1] ^ swapped[2] ^ swapped[3])
    assert b_prime_canonical(deck, QuadSquare(2, cells)) == case.representative


def test_b_prime_canonical_validates_input():
    deck = DeckSpec(6)
    with pytest.raises(ValueError):
        b_prime_canonical(deck, QuadSquare(2, (1,) + (0,) * 15))
    with pytest.raises(ValueError):
        b_prime_canonical(deck, QuadSquare(4, (0, 0, 0, 0,
                                               0, 8, 8, 0,
                                               0, 8, 8, 0,
                                               0, 0, 0, 0)))


# ---------------------------------------------------------------------------
# combining with low squares


def test_count_legit_a_extremes():
    cases = b_prime_reference_cases()
    assert count_legit_a(cases[0]) == 112      # zero block: square must be distinct alone
    assert count_legit_a(cases[1]) == 1904
    assert count_legit_a(cases[-1]) == 65536   # all-distinct block frees every choice
    assert count_legit_a(cases[0].representative) == 112


def test_decomposition_sum_matches_closed_form():
    for bits in range(4, 9):
        deck = DeckSpec(bits)
        assert semimagic_type_c_by_decomposition(deck) == semimagic_type_c_closed_form(deck)


def test_coefficients_recovered_from_cases():
    expected = dict(enumerate(reference.SEMIMAGIC_TYPE_C_COEFFS))
    assert coefficients_by_degree() == expected


def test_real_squares_decompose_into_known_cases():
    from quadkit.enumeration import iter_type_c_semimagic

    deck = DeckSpec(5)
    reps = {c.representative.cells for c in classify_b_prime(deck)}
    for square in itertools.islice(iter_type_c_semimagic(deck), 0, 2000, 97):
        low, high = decompose_type_c(square)
        block = QuadSquare(1, tuple(c >> 4 for c in high.cells))
        assert b_prime_canonical(deck, block).cells in reps
