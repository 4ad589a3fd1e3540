"""4x4 squares of cards or values: lines, D/H/S types, and the predicates.

A square stores 16 cells row-major.  Card squares hold distinct cards;
value grids (single attribute, repeats allowed) reuse the same type with a
smaller bit width.  Lines are the 4 rows, 4 columns and, on request, the
two unbroken diagonals.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations
from typing import NamedTuple

from .quad_core import AffineMap


class NotAQuadError(ValueError):
    """A line that was required to XOR to zero does not."""


class SquareFormatError(ValueError):
    """Square text that cannot be parsed; carries line/column of the fault."""

    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class QuadSquare:
    """16 cells row-major, each in [0, 2**bits)."""

    bits: int
    cells: tuple

    def __post_init__(self):
        if self.bits < 1:
            raise ValueError("bits must be positive")
        if len(self.cells) != 16:
            raise ValueError("a square has exactly 16 cells")
        size = 1 << self.bits
        for c in self.cells:
            if not 0 <= c < size:
                raise ValueError(f"cell {c} outside deck of {size} cards")

    @classmethod
    def from_rows(cls, bits: int, rows) -> "QuadSquare":
        cells = tuple(c for row in rows for c in row)
        return cls(bits, cells)

    def cell(self, i: int, j: int) -> int:
        return self.cells[4 * i + j]

    def row(self, i: int):
        return self.cells[4 * i:4 * i + 4]

    def col(self, j: int):
        return self.cells[j::4]

    def rows(self):
        return tuple(self.row(i) for i in range(4))

    def transform(self, affine: AffineMap) -> "QuadSquare":
        """Apply an affine deck symmetry to every cell."""
        if affine.bits != self.bits:
            raise ValueError("map and square use different deck sizes")
        return QuadSquare(self.bits, tuple(affine.apply(c) for c in self.cells))


def lines(square: QuadSquare, with_diagonals: bool = False):
    """Rows 0-3, then columns 0-3, then (optionally) main and anti diagonal."""
    out = [square.row(i) for i in range(4)]
    out += [square.col(j) for j in range(4)]
    if with_diagonals:
        c = square.cells
        out.append((c[0], c[5], c[10], c[15]))
        out.append((c[3], c[6], c[9], c[12]))
    return out


def line_type(values):
    """Classify an XOR-zero 4-tuple: "D" all different, "H" two pairs,
    "S" all same.  Returns None when the values do not XOR to zero.

    For XOR-zero tuples the trichotomy is exhaustive at any bit width: one
    repeated value forces the remaining two to be equal as well.
    """
    a, b, c, d = values
    if a ^ b ^ c ^ d != 0:
        return None
    distinct = len({a, b, c, d})
    if distinct == 4:
        return "D"
    if distinct == 1:
        return "S"
    return "H"


def all_cells_distinct(square: QuadSquare) -> bool:
    return len(set(square.cells)) == 16


def has_quad_lines(square: QuadSquare, with_diagonals: bool = False) -> bool:
    """Every row/column (and optionally diagonal) XORs to zero; repeats allowed."""
    return all(a ^ b ^ c ^ d == 0 for a, b, c, d in lines(square, with_diagonals))


def is_semimagic(square: QuadSquare) -> bool:
    """All 16 cards distinct and all 8 row/column lines are quads."""
    return all_cells_distinct(square) and has_quad_lines(square)


def is_magic(square: QuadSquare) -> bool:
    """Semimagic with both unbroken diagonals quads as well."""
    return all_cells_distinct(square) and has_quad_lines(square, with_diagonals=True)


def _coordinate_quads():
    # Cell positions are coordinates (i, j), encoded 4*i + j, which is itself
    # a 4-bit vector; a position subset is a coordinate quad when those
    # vectors XOR to zero.  Brute force over C(16, 4) finds all 140.
    quads = []
    for combo in combinations(range(16), 4):
        if combo[0] ^ combo[1] ^ combo[2] ^ combo[3] == 0:
            quads.append(combo)
    return tuple(quads)


COORDINATE_QUADS = _coordinate_quads()


def coordinate_quads_xor_zero(cells) -> bool:
    """Every one of the 140 coordinate-quad cell subsets XORs to zero."""
    for p, q, r, s in COORDINATE_QUADS:
        if cells[p] ^ cells[q] ^ cells[r] ^ cells[s] != 0:
            return False
    return True


def is_strongly_magic(square: QuadSquare) -> bool:
    """Distinct cards, and every coordinate quad maps to a card quad."""
    return all_cells_distinct(square) and coordinate_quads_xor_zero(square.cells)


def num_attributes(bits: int) -> int:
    """Attributes are the base-4 digits of a card: ceil(bits / 2) fields."""
    return (bits + 1) // 2


def attribute_values(square: QuadSquare, attribute: int):
    """The 16 cells projected to one 2-bit attribute field."""
    if not 0 <= attribute < num_attributes(square.bits):
        raise ValueError(f"square has {num_attributes(square.bits)} attributes, not index {attribute}")
    shift = 2 * attribute
    return tuple(c >> shift & 3 for c in square.cells)


class TypePattern(NamedTuple):
    """Row/column line-type multisets, each as a sorted 4-letter string."""

    rows: str
    cols: str


def type_pattern(square: QuadSquare, attribute: int) -> TypePattern:
    """D/H/S multiset of the rows and of the columns in one attribute."""
    values = attribute_values(square, attribute)
    row_types = []
    col_types = []
    for i in range(4):
        t = line_type(values[4 * i:4 * i + 4])
        if t is None:
            raise NotAQuadError(f"row {i} does not XOR to zero in attribute {attribute}")
        row_types.append(t)
    for j in range(4):
        t = line_type(values[j::4])
        if t is None:
            raise NotAQuadError(f"column {j} does not XOR to zero in attribute {attribute}")
        col_types.append(t)
    return TypePattern("".join(sorted(row_types)), "".join(sorted(col_types)))


def value_distribution(square: QuadSquare, attribute: int):
    """Sorted counts of the four attribute values over the 16 cells."""
    values = attribute_values(square, attribute)
    return tuple(sorted(values.count(v) for v in range(4)))


def is_latin(square: QuadSquare) -> bool:
    """Distinct cards and every attribute all-different on every row/column."""
    if not all_cells_distinct(square):
        return False
    for attribute in range(num_attributes(square.bits)):
        values = attribute_values(square, attribute)
        for k in range(4):
            if len(set(values[4 * k:4 * k + 4])) != 4:
                return False
            if len(set(values[k::4])) != 4:
                return False
    return True


# ---------------------------------------------------------------------------
# square text format (shared with the command line tool)
#
# Four data lines of four whitespace-separated tokens; lines starting with
# "#" are comments.  Tokens are decimal card ids, or with base4=True
# fixed-width base-4 strings of width ceil(bits / 2).


def parse_square(text: str, bits: int, base4: bool = False) -> QuadSquare:
    width = num_attributes(bits)
    size = 1 << bits
    cells = []
    data_rows = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if data_rows == 4:
            raise SquareFormatError("more than four data rows", lineno, 1)
        tokens = list(re.finditer(r"\S+", raw))
        if len(tokens) != 4:
            raise SquareFormatError(f"expected 4 values, found {len(tokens)}", lineno, 1)
        for match in tokens:
            token = match.group()
            column = match.start() + 1
            if base4:
                if len(token) != width or any(ch not in "0123" for ch in token):
                    raise SquareFormatError(
                        f"expected a base-4 string of width {width}, got {token!r}", lineno, column)
                value = int(token, 4)
            else:
                try:
                    value = int(token, 10)
                except ValueError:
                    raise SquareFormatError(f"not a decimal integer: {token!r}", lineno, column) from None
            if not 0 <= value < size:
                raise SquareFormatError(
                    f"card {value} outside deck of {size} cards", lineno, column)
            cells.append(value)
        data_rows += 1
    if data_rows != 4:
        raise SquareFormatError(f"expected 4 data rows, found {data_rows}", 1, 1)
    return QuadSquare(bits, tuple(cells))


def format_square(square: QuadSquare, base4: bool = False) -> str:
    width = num_attributes(square.bits)
    out = []
    for i in range(4):
        if base4:
            tokens = []
            for c in square.row(i):
                digits = [str(c >> 2 * (width - 1 - k) & 3) for k in range(width)]
                tokens.append("".join(digits))
        else:
            tokens = [str(c) for c in square.row(i)]
        out.append(" ".join(tokens))
    return "\n".join(out) + "\n"
