"""Square predicates, line typing, attribute patterns, and parsing."""

import itertools

import pytest

from quadkit.quad_core import AffineMap
from quadkit.square_model import (
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

IDENTITY16 = QuadSquare(4, tuple(range(16)))

# Table 1 shape: rows are quads, columns repeat values pairwise.
TABLE1 = QuadSquare(4, (0, 1, 2, 3, 1, 0, 3, 2, 8, 9, 10, 11, 9, 8, 11, 10))

# Table 2 shape: a Latin square in the values 0..3.
TABLE2 = QuadSquare(4, (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0))

MAGIC_NOT_STRONG = QuadSquare(4, (0, 4, 8, 12, 3, 5, 11, 13, 2, 6, 10, 14, 1, 7, 9, 15))


# ---------------------------------------------------------------------------
# lines and line types


def test_lines_of_identity_square():
    rows_cols_diags = lines(IDENTITY16, with_diagonals=True)
    assert rows_cols_diags[1] == (4, 5, 6, 7)
    assert rows_cols_diags[4] == (0, 4, 8, 12)
    assert rows_cols_diags[8] == (0, 5, 10, 15)
    assert rows_cols_diags[9] == (3, 6, 9, 12)
    assert len(rows_cols_diags) == 10
    assert len(lines(IDENTITY16)) == 8


def test_line_type_examples():
    assert line_type((0, 1, 2, 3)) == "D"
    assert line_type((0, 0, 1, 1)) == "H"
    assert line_type((2, 2, 2, 2)) == "S"
    assert line_type((0, 1, 1, 1)) is None
    assert line_type((0, 0, 0, 1)) is None


def test_line_type_catches_every_multiset():
    for line in itertools.product(range(4), repeat=4):
        kind = line_type(line)
        counts = sorted(line.count(v) for v in set(line))
        if counts == [1, 1, 1, 1]:
            assert kind == "D"
        elif counts == [2, 2]:
            assert kind == "H"
        elif counts == [4]:
            assert kind == "S"
        else:
            assert kind is None


# ---------------------------------------------------------------------------
# predicates


def test_identity_square_is_strongly_magic():
    assert all_cells_distinct(IDENTITY16)
    assert has_quad_lines(IDENTITY16)
    assert is_semimagic(IDENTITY16)
    assert is_magic(IDENTITY16)
    assert is_strongly_magic(IDENTITY16)


def test_magic_but_not_strong_example():
    assert is_magic(MAGIC_NOT_STRONG)
    assert not is_strongly_magic(MAGIC_NOT_STRONG)


def test_repeated_cells_are_not_semimagic():
    square = QuadSquare(4, (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0))
    assert has_quad_lines(square)
    assert not all_cells_distinct(square)
    assert not is_semimagic(square)


def test_quad_rows_but_broken_column():
    cells = (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 15, 14, 13, 12)
    square = QuadSquare(4, cells)
    assert all_cells_distinct(square)
    assert not is_semimagic(square)


def test_coordinate_quads_count():
    assert len(COORDINATE_QUADS) == 140
    seen = set()
    for quad in COORDINATE_QUADS:
        assert quad[0] ^ quad[1] ^ quad[2] ^ quad[3] == 0
        assert len(set(quad)) == 4
        seen.add(tuple(sorted(quad)))
    assert len(seen) == 140


def test_coordinate_quads_xor_zero_matches_brute_force():
    assert coordinate_quads_xor_zero(tuple(range(16)))
    cells = MAGIC_NOT_STRONG.cells
    assert not coordinate_quads_xor_zero(cells)
    witnesses = [q for q in COORDINATE_QUADS
                 if cells[q[0]] ^ cells[q[1]] ^ cells[q[2]] ^ cells[q[3]] != 0]
    assert witnesses


def test_strong_implies_magic_implies_semimagic():
    affine = AffineMap(6, (3, 33, 18, 40, 12, 22), 9)
    square = QuadSquare(6, tuple(range(16))).transform(affine)
    assert is_strongly_magic(square)
    assert is_magic(square)
    assert is_semimagic(square)


def test_predicate_chain_on_type_c_squares():
    from quadkit.enumeration import iter_type_c_magic
    from quadkit.quad_core import DeckSpec

    for square in iter_type_c_magic(DeckSpec(4)):
        assert is_semimagic(square)
        if is_strongly_magic(square):
            assert is_magic(square)


# ---------------------------------------------------------------------------
# attributes and type patterns


def test_num_attributes():
    assert num_attributes(4) == 2
    assert num_attributes(5) == 3
    assert num_attributes(6) == 3
    assert num_attributes(9) == 5


def test_attribute_values_split_bit_pairs():
    assert attribute_values(IDENTITY16, 0) == tuple(c & 3 for c in range(16))
    assert attribute_values(IDENTITY16, 1) == tuple(c >> 2 for c in range(16))
    square = QuadSquare(6, tuple(range(32, 48)))
    assert attribute_values(square, 2) == (2,) * 16
    with pytest.raises(ValueError):
        attribute_values(IDENTITY16, 2)


def test_type_pattern_identity():
    assert type_pattern(IDENTITY16, 0) == TypePattern("DDDD", "SSSS")
    assert type_pattern(IDENTITY16, 1) == TypePattern("SSSS", "DDDD")


def test_type_pattern_table5_shape():
    square = QuadSquare(4, (0, 3, 5, 6, 9, 10, 12, 15, 2, 1, 7, 4, 11, 8, 14, 13))
    assert is_semimagic(square)
    assert type_pattern(square, 1) == TypePattern("HHHH", "HHHH")


def test_type_pattern_sorts_lines():
    # patterns are multisets: row order must not matter
    square = QuadSquare(4, (4, 5, 6, 7, 0, 1, 2, 3, 8, 9, 10, 11, 12, 13, 14, 15))
    assert type_pattern(square, 0) == TypePattern("DDDD", "SSSS")
    assert type_pattern(square, 1) == TypePattern("SSSS", "DDDD")


def test_type_pattern_rejects_non_quad_rows():
    square = QuadSquare(4, (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 15, 14, 13, 12))
    with pytest.raises(NotAQuadError):
        type_pattern(square, 0)


def test_pattern_trichotomy_for_quad_lines():
    """A quad's values in any 2-bit attribute form a D, H, or S line."""
    for quad in COORDINATE_QUADS:
        for shift in (0, 2):
            line = tuple(card >> shift & 3 for card in quad)
            assert line_type(line) in ("D", "H", "S")


def test_value_distribution():
    assert value_distribution(IDENTITY16, 0) == (4, 4, 4, 4)
    assert value_distribution(TABLE1, 1) == (0, 0, 8, 8)
    block = QuadSquare(4, (4, 5, 6, 7, 5, 4, 7, 6, 6, 7, 4, 5, 7, 6, 5, 4))
    assert value_distribution(block, 1) == (0, 0, 0, 16)
    assert value_distribution(block, 0) == (4, 4, 4, 4)


def test_distribution_counts_are_even_when_repeats_exist():
    """XOR-zero lines force paired repeats: no value appears 3 times."""
    for cells in itertools.product(range(4), repeat=4):
        if cells[0] ^ cells[1] ^ cells[2] ^ cells[3] != 0:
            continue
        counts = sorted(cells.count(v) for v in set(cells))
        assert counts in ([1, 1, 1, 1], [2, 2], [4])


# ---------------------------------------------------------------------------
# latin card squares


def test_is_latin_examples():
    from quadkit.latin import assemble_cards

    first = (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0)
    second = (0, 1, 2, 3, 2, 3, 0, 1, 3, 2, 1, 0, 1, 0, 3, 2)
    cards = assemble_cards((first, second))
    assert is_latin(QuadSquare(4, cards))
    assert not is_latin(IDENTITY16)       # attribute 0 is constant by column
    assert not is_latin(TABLE1)           # repeated cards
    assert not is_latin(TABLE2)           # attribute 1 is constant everywhere


# ---------------------------------------------------------------------------
# construction and transforms


def test_from_rows_and_accessors():
    square = QuadSquare.from_rows(4, [(0, 1, 2, 3), (4, 5, 6, 7),
                                      (8, 9, 10, 11), (12, 13, 14, 15)])
    assert square == IDENTITY16
    assert square.cell(1, 2) == 6
    assert square.row(2) == (8, 9, 10, 11)
    assert square.col(3) == (3, 7, 11, 15)
    assert square.rows() == ((0, 1, 2, 3), (4, 5, 6, 7), (8, 9, 10, 11), (12, 13, 14, 15))


def test_cell_range_checked():
    with pytest.raises(ValueError):
        QuadSquare(4, tuple(range(15)) + (16,))
    with pytest.raises(ValueError):
        QuadSquare(4, tuple(range(15)))


def test_transform_applies_cellwise():
    affine = AffineMap(4, (1, 2, 4, 8), 5)
    square = IDENTITY16.transform(affine)
    assert square.cells == tuple(c ^ 5 for c in range(16))


# ---------------------------------------------------------------------------
# parsing and formatting


def test_parse_square_round_trip():
    text = format_square(MAGIC_NOT_STRONG)
    assert parse_square(text, 4) == MAGIC_NOT_STRONG


def test_parse_square_base4_round_trip():
    affine = AffineMap(6, (3, 33, 18, 40, 12, 22), 9)
    square = QuadSquare(6, tuple(range(16))).transform(affine)
    text = format_square(square, base4=True)
    assert parse_square(text, 6, base4=True) == square


def test_parse_square_skips_comments_and_blanks():
    text = "# header\n0 1 2 3\n\n4 5 6 7\n8 9 10 11\n# trailing\n12 13 14 15\n"
    assert parse_square(text, 4) == IDENTITY16


def test_parse_square_reports_position():
    text = "0 1 2 3\n4 5 6 seven\n8 9 10 11\n12 13 14 15\n"
    with pytest.raises(SquareFormatError) as err:
        parse_square(text, 4)
    assert err.value.line == 2
    assert err.value.column == 7


def test_parse_square_rejects_wrong_shape():
    with pytest.raises(SquareFormatError):
        parse_square("0 1 2\n3 4 5\n6 7 8\n9 10 11\n", 4)
    with pytest.raises(SquareFormatError):
        parse_square("0 1 2 3\n4 5 6 7\n", 4)
    with pytest.raises(SquareFormatError):
        parse_square("0 1 2 3\n4 5 6 7\n8 9 10 11\n12 13 14 16\n", 4)


def test_format_square_shapes():
    assert format_square(IDENTITY16).splitlines()[0].split() == ["0", "1", "2", "3"]
    base4_rows = format_square(QuadSquare(6, tuple(range(16))), base4=True).splitlines()
    assert base4_rows[0].split() == ["000", "001", "002", "003"]
