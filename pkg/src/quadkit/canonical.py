"""Reduction of semimagic squares to type C and the deck-symmetry multiplier.

A type-C square has first row 0,1,2,3 and first column 0,4,8,12.  Every
semimagic square is carried to exactly one type-C square by exactly one
invertible affine map, so counting squares of any affine-invariant kind
reduces to counting type-C squares and multiplying by the orbit size
2^n (2^n - 1)(2^n - 2)(2^n - 4)(2^n - 8).
"""

from __future__ import annotations

from .quad_core import DeckSpec, affine_from_images
from .square_model import QuadSquare, is_semimagic

TYPE_C_ROW0 = (0, 1, 2, 3)
TYPE_C_COL0 = (0, 4, 8, 12)

# Anchor cells (0,0), (0,1), (0,2), (1,0), (2,0) and their type-C images.
_ANCHOR_POSITIONS = (0, 1, 2, 4, 8)
_ANCHOR_TARGETS = (0, 1, 2, 4, 8)


def symmetry_multiplier(deck: DeckSpec) -> int:
    """Number of invertible affine maps of the deck: the type-C orbit size."""
    s = deck.size
    return s * (s - 1) * (s - 2) * (s - 4) * (s - 8)


def total_from_type_c(type_c_count: int, deck: DeckSpec) -> int:
    """Scale a type-C count up to the whole deck."""
    return type_c_count * symmetry_multiplier(deck)


def is_type_c(square: QuadSquare) -> bool:
    return tuple(square.row(0)) == TYPE_C_ROW0 and tuple(square.col(0)) == TYPE_C_COL0


def reduce_to_type_c(square: QuadSquare):
    """The type-C square equivalent to a semimagic square, with its map.

    Returns (reduced, affine) where reduced = square mapped cellwise by
    affine.  The five anchor cells of a semimagic square always have
    independent differences (any dependency would force two equal cells),
    so IndependenceError here signals corrupted input, not a real square.
    """
    if not is_semimagic(square):
        raise ValueError("only semimagic squares reduce to type C")
    anchors = tuple(square.cells[p] for p in _ANCHOR_POSITIONS)
    affine = affine_from_images(square.bits, anchors, _ANCHOR_TARGETS)
    reduced = square.transform(affine)
    return reduced, affine
