"""Type-C searches against closed forms and pinned counts."""

import itertools
import os

import pytest

from quadkit import reference
from quadkit.enumeration import (
    CapacityError,
    MAGIC_SEARCH_MAX_BITS,
    MAGIC_TYPE_C_COEFFS,
    SEMIMAGIC_SEARCH_MAX_BITS,
    SEMIMAGIC_TYPE_C_COEFFS,
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
from quadkit.canonical import is_type_c
from quadkit.quad_core import DeckSpec
from quadkit.square_model import is_magic, is_semimagic, is_strongly_magic


# ---------------------------------------------------------------------------
# pinned type-C counts


def test_semimagic_type_c_counts():
    assert enumerate_type_c_semimagic(DeckSpec(4)) == 112
    assert enumerate_type_c_semimagic(DeckSpec(5)) == 45280
    assert enumerate_type_c_semimagic(DeckSpec(6)) == 4023232


def test_magic_type_c_counts():
    assert enumerate_type_c_magic(DeckSpec(4)) == 10
    assert enumerate_type_c_magic(DeckSpec(5)) == 1370
    assert enumerate_type_c_magic(DeckSpec(6)) == 70138
    assert enumerate_type_c_magic(DeckSpec(7)) == 1159994


def test_strongly_magic_type_c_is_single():
    for bits in (4, 5, 6, 10):
        deck = DeckSpec(bits)
        assert enumerate_type_c_strongly_magic(deck) == 1
        square = type_c_strongly_magic_square(deck)
        assert square.cells == tuple(range(16))
        assert is_type_c(square)
        assert is_strongly_magic(square)


# ---------------------------------------------------------------------------
# closed forms


def test_closed_forms_match_search():
    for bits in (4, 5, 6):
        deck = DeckSpec(bits)
        assert semimagic_type_c_closed_form(deck) == enumerate_type_c_semimagic(deck)
    for bits in (4, 5, 6, 7):
        deck = DeckSpec(bits)
        assert magic_type_c_closed_form(deck) == enumerate_type_c_magic(deck)


def test_closed_forms_match_pinned_sequences():
    sem = reference.SEQUENCES[("semimagic", "type-c")]
    for i, value in enumerate(sem):
        assert semimagic_type_c_closed_form(DeckSpec(4 + i)) == value
    mag = reference.SEQUENCES[("magic", "type-c")]
    for i, value in enumerate(mag):
        assert magic_type_c_closed_form(DeckSpec(4 + i)) == value


def test_coefficient_tuples_are_pinned():
    assert SEMIMAGIC_TYPE_C_COEFFS == reference.SEMIMAGIC_TYPE_C_COEFFS
    assert MAGIC_TYPE_C_COEFFS == reference.MAGIC_TYPE_C_COEFFS


def test_degree_zero_coefficient_is_the_16_card_count():
    assert SEMIMAGIC_TYPE_C_COEFFS[0] == 112
    assert MAGIC_TYPE_C_COEFFS[0] == 10


# ---------------------------------------------------------------------------
# whole-deck totals


def test_strongly_magic_totals():
    expected = reference.SEQUENCES[("strongly-magic", "total")]
    for i, value in enumerate(expected):
        assert strongly_magic_total(DeckSpec(4 + i)) == value


def test_strongly_magic_quotients():
    expected = reference.SEQUENCES[("strongly-magic", "quotient")]
    for i, value in enumerate(expected):
        assert strongly_magic_quotient(DeckSpec(4 + i)) == value
    assert strongly_magic_quotient(DeckSpec(4)) == 1


def test_full_deck_counts_16_cards():
    assert full_deck_count("semimagic", DeckSpec(4)) == 36126720
    assert full_deck_count("magic", DeckSpec(4)) == 3225600
    assert full_deck_count("strongly-magic", DeckSpec(4)) == 322560
    with pytest.raises(CapacityError):
        full_deck_count("semimagic", DeckSpec(5))
    with pytest.raises(ValueError):
        full_deck_count("mystic", DeckSpec(4))


def test_full_deck_equals_scaled_type_c_at_16_cards():
    """With 16 cards every semimagic square is full-deck, so totals agree."""
    from quadkit.canonical import total_from_type_c

    assert full_deck_count("semimagic", DeckSpec(4)) == total_from_type_c(112, DeckSpec(4))
    assert full_deck_count("magic", DeckSpec(4)) == total_from_type_c(10, DeckSpec(4))
    assert full_deck_count("strongly-magic", DeckSpec(4)) == total_from_type_c(1, DeckSpec(4))


# ---------------------------------------------------------------------------
# class counts


def test_class_count_sequences():
    assert class_count_sequences("semimagic", DeckSpec(5)) == 2935
    assert class_count_sequences("magic", DeckSpec(6)) == 138
    assert class_count_sequences("magic", DeckSpec(9)) == 139
    assert class_count_sequences("semimagic", DeckSpec(9)) == 5626
    for i, value in enumerate(reference.SEQUENCES[("semimagic", "classes")]):
        assert class_count_sequences("semimagic", DeckSpec(4 + i)) == value
    for i, value in enumerate(reference.SEQUENCES[("magic", "classes")]):
        assert class_count_sequences("magic", DeckSpec(4 + i)) == value
    with pytest.raises(ValueError):
        class_count_sequences("strongly-magic", DeckSpec(4))


def test_class_counts_stabilize():
    assert class_count_sequences("semimagic", DeckSpec(20)) == sum(SEMIMAGIC_TYPE_C_COEFFS)
    assert class_count_sequences("magic", DeckSpec(20)) == sum(MAGIC_TYPE_C_COEFFS)


# ---------------------------------------------------------------------------
# sequence export


def test_sequence_terms_match_reference():
    for (kind, variant), values in reference.SEQUENCES.items():
        terms = sequence_terms(kind, variant, 4 + len(values) - 1)
        assert terms == list(values)


def test_sequence_terms_rejects_bad_input():
    with pytest.raises(ValueError):
        sequence_terms("semimagic", "quotient", 6)
    with pytest.raises(ValueError):
        sequence_terms("strongly-magic", "classes", 6)
    with pytest.raises(ValueError):
        sequence_terms("other", "total", 6)
    with pytest.raises(ValueError):
        sequence_terms("magic", "total", 3)


# ---------------------------------------------------------------------------
# iteration order and visitors


def test_iter_semimagic_squares_are_semimagic_type_c():
    squares = list(iter_type_c_semimagic(DeckSpec(4)))
    assert len(squares) == 112
    for square in squares:
        assert is_type_c(square)
        assert is_semimagic(square)
    free = [(s.cells[5], s.cells[6], s.cells[9], s.cells[10]) for s in squares]
    assert free == sorted(free)
    assert len(set(squares)) == 112


def test_iter_magic_squares_are_magic_type_c():
    squares = list(iter_type_c_magic(DeckSpec(5)))
    assert len(squares) == 1370
    for square in squares:
        assert is_type_c(square)
        assert is_magic(square)
    assert len(set(squares)) == 1370


def test_iter_strongly_magic():
    squares = list(iter_type_c_strongly_magic(DeckSpec(6)))
    assert len(squares) == 1
    assert squares[0].bits == 6


def test_visitor_sees_every_square():
    seen = []
    count = enumerate_type_c_semimagic(DeckSpec(4), visitor=seen.append)
    assert count == 112
    assert seen == list(iter_type_c_semimagic(DeckSpec(4)))


def test_search_is_exhaustive_at_16_cards():
    """Brute-force over raw 4-tuples of free cells agrees with the search."""
    border = {0, 1, 2, 3, 4, 8, 12}
    count = 0
    for c11, c12, c21, c22 in itertools.product(range(16), repeat=4):
        cells = (0, 1, 2, 3,
                 4, c11, c12, 4 ^ c11 ^ c12,
                 8, c21, c22, 8 ^ c21 ^ c22,
                 12, 1 ^ c11 ^ c21, 2 ^ c12 ^ c22, 15 ^ c11 ^ c12 ^ c21 ^ c22)
        inner = cells[5:8] + cells[9:12] + cells[13:16]
        if border & set(inner):
            continue
        if len(set(inner)) == 9:
            count += 1
    assert count == 112


# ---------------------------------------------------------------------------
# capacity and threads


def test_search_caps_cover_the_feasible_range():
    # 2**(4 * bits) and 2**(3 * bits) candidate tuples stay at or below 2**28
    assert 4 * SEMIMAGIC_SEARCH_MAX_BITS <= 28
    assert 3 * MAGIC_SEARCH_MAX_BITS <= 28
    assert issubclass(CapacityError, RuntimeError)


def test_thread_count_env(monkeypatch):
    monkeypatch.setenv("QUADKIT_THREADS", "3")
    assert thread_count() == 3
    monkeypatch.setenv("QUADKIT_THREADS", "abc")
    with pytest.raises(ValueError):
        thread_count()
    monkeypatch.setenv("QUADKIT_THREADS", "0")
    with pytest.raises(ValueError):
        thread_count()
    monkeypatch.delenv("QUADKIT_THREADS")
    assert thread_count() >= 1


def test_counts_independent_of_thread_count(monkeypatch):
    monkeypatch.setenv("QUADKIT_THREADS", "1")
    single = enumerate_type_c_semimagic(DeckSpec(5))
    monkeypatch.setenv("QUADKIT_THREADS", "4")
    multi = enumerate_type_c_semimagic(DeckSpec(5))
    assert single == multi == 45280
