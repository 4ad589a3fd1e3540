"""Order-4 Latin squares and card assembly from per-attribute squares.

A square filled with one value grid per attribute yields distinct cards
exactly when no two positions agree on every attribute, so stacking
mutually "compatible" Latin squares (orthogonal in pairs is sufficient but
not necessary for three or more) builds squares whose rows and columns are
all-different in every attribute.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import permutations

import numpy as np

from .enumeration import CapacityError
from .square_model import QuadSquare

LATIN_COMBINATION_MAX_ATTRIBUTES = 3


def _grid_cells(square):
    cells = tuple(square.cells) if isinstance(square, QuadSquare) else tuple(square)
    if len(cells) != 16:
        raise ValueError("a value grid has 16 cells")
    return cells


def is_latin_grid(square) -> bool:
    """True for a 4x4 grid over values 0..3 with Latin rows and columns."""
    cells = _grid_cells(square)
    if any(not 0 <= v <= 3 for v in cells):
        return False
    for i in range(4):
        if len(set(cells[4 * i:4 * i + 4])) != 4:
            return False
        if len(set(cells[i::4])) != 4:
            return False
    return True


@lru_cache(maxsize=1)
def all_latin_squares():
    """The 576 order-4 Latin squares as 16-tuples, lexicographic."""
    rows = list(permutations(range(4)))
    squares = []

    def extend(chosen):
        if len(chosen) == 4:
            squares.append(tuple(v for row in chosen for v in row))
            return
        for row in rows:
            if all(row[j] != prev[j] for prev in chosen for j in range(4)):
                extend(chosen + [row])

    extend([])
    return tuple(sorted(squares))


def reduced_latin_squares():
    """Latin squares whose first row and first column are 0,1,2,3."""
    return tuple(s for s in all_latin_squares()
                 if s[:4] == (0, 1, 2, 3) and s[::4] == (0, 1, 2, 3))


def count_latin_squares_order4():
    """(number of order-4 Latin squares, number of reduced ones)."""
    return len(all_latin_squares()), len(reduced_latin_squares())


def are_orthogonal(first, second) -> bool:
    """True when superimposing the two grids yields all 16 value pairs."""
    a = _grid_cells(first)
    b = _grid_cells(second)
    return len({(a[p], b[p]) for p in range(16)}) == 16


@lru_cache(maxsize=1)
def _square_array():
    return np.array(all_latin_squares(), dtype=np.int64)


def _rows_all_distinct(matrix) -> np.ndarray:
    ordered = np.sort(matrix, axis=1)
    return (np.diff(ordered, axis=1) > 0).all(axis=1)


def count_mols_pairs() -> int:
    """Ordered pairs of orthogonal order-4 Latin squares."""
    arr = _square_array()
    total = 0
    for i in range(len(arr)):
        keys = arr[i] * 4 + arr
        total += int(_rows_all_distinct(keys).sum())
    return total


def assemble_cards(squares):
    """Stack per-attribute grids into cards: attribute k fills bits 2k+1,2k."""
    grids = [_grid_cells(s) for s in squares]
    if not grids:
        raise ValueError("at least one attribute grid is required")
    cards = []
    for p in range(16):
        card = 0
        for k, grid in enumerate(grids):
            value = grid[p]
            if not 0 <= value <= 3:
                raise ValueError(f"attribute values must be 0..3, got {value}")
            card |= value << (2 * k)
        cards.append(card)
    return tuple(cards)


def check_latin_combination(squares) -> bool:
    """True when the given Latin squares assemble into 16 distinct cards.

    Raises ValueError if any input grid is not Latin.
    """
    for s in squares:
        if not is_latin_grid(s):
            raise ValueError("every attribute grid must be an order-4 Latin square")
    return len(set(assemble_cards(squares))) == 16


def count_latin_quad_squares(attributes: int = 3) -> int:
    """Ordered tuples of Latin squares assembling into distinct cards.

    Factors out the 24 value relabelings of the first square (they act
    freely and preserve distinctness), then sweeps the rest exhaustively.
    For two attributes distinctness equals orthogonality, so this matches
    count_mols_pairs().
    """
    if attributes < 2:
        raise ValueError("a combination needs at least two attributes")
    if attributes > LATIN_COMBINATION_MAX_ATTRIBUTES:
        raise CapacityError(
            f"combinations of more than {LATIN_COMBINATION_MAX_ATTRIBUTES} "
            "Latin squares are refused (576**k grows too fast)")
    arr = _square_array()
    lead = [i for i in range(len(arr)) if tuple(arr[i, :4]) == (0, 1, 2, 3)]
    total = 0
    if attributes == 2:
        for i in lead:
            keys = arr[i] * 4 + arr
            total += int(_rows_all_distinct(keys).sum())
    else:
        for i in lead:
            for j in range(len(arr)):
                keys = (arr[i] * 4 + arr[j]) * 4 + arr
                total += int(_rows_all_distinct(keys).sum())
    return 24 * total
