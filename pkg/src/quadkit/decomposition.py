"""Splitting type-C squares into a low-card square and a high block.

Writing each cell as low nibble plus high part, a type-C semimagic square
over 2**n cards is a bits=4 type-C square A (the low nibbles) stacked with
16 times a "high block" B whose border is zero and whose rows and columns
XOR to zero.  B is determined by its four inner cells (1,1), (1,2), (2,1),
(2,2), and only the pattern of equal cells in B matters for which A make
the sum all-distinct.  Classifying B patterns therefore reduces the count
to a short sum over pattern classes.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations, product

import numpy as np

from .canonical import is_type_c
from .enumeration import CapacityError
from .quad_core import DeckSpec, gf2_rank
from .square_model import QuadSquare

B_PRIME_MAX_BITS = 9    # (2**(bits-4))**4 free states to orbit-partition


def decompose_type_c(square: QuadSquare):
    """Split a type-C square into (low card square, high block square).

    The low part keeps the bottom four bits of every cell and is itself a
    type-C square over 16 cards; the high part keeps the remaining bits
    (still shifted into place, so its cells are multiples of 16).
    """
    if not is_type_c(square):
        raise ValueError("decomposition is defined for type-C squares")
    low = tuple(c & 15 for c in square.cells)
    high = tuple(c & ~15 for c in square.cells)
    return QuadSquare(4, low), QuadSquare(square.bits, high)


@dataclass(frozen=True)
class RepeatPattern:
    """Partition of the 16 grid positions by equal cell value.

    groups holds tuples of (row, col) positions, each group sorted, the
    groups sorted among themselves; singleton groups are included.
    """
    groups: tuple

    def nontrivial(self):
        return tuple(g for g in self.groups if len(g) > 1)


def repeat_pattern(square: QuadSquare) -> RepeatPattern:
    by_value = {}
    for pos, value in enumerate(square.cells):
        by_value.setdefault(value, []).append((pos // 4, pos % 4))
    return RepeatPattern(tuple(sorted(tuple(g) for g in by_value.values())))


# ---------------------------------------------------------------------------
# the pattern symmetry group: permute rows 1..3, columns 1..3, transpose


@lru_cache(maxsize=1)
def _position_transforms():
    """The 72 position permutations fixing the border structure.

    Each entry maps cell index p to its image; the set is closed under
    composition (checked in the test suite).
    """
    out = []
    for row_map in permutations((1, 2, 3)):
        rm = (0,) + row_map
        for col_map in permutations((1, 2, 3)):
            cm = (0,) + col_map
            for transpose in (False, True):
                perm = [0] * 16
                for i in range(4):
                    for j in range(4):
                        ti, tj = (cm[j], rm[i]) if transpose else (rm[i], cm[j])
                        perm[4 * i + j] = 4 * ti + tj
                out.append(tuple(perm))
    return tuple(out)


def _pattern_groups(cells):
    by_value = {}
    for pos, value in enumerate(cells):
        by_value.setdefault(value, []).append(pos)
    return [g for g in by_value.values() if len(g) > 1]


def symmetry_factor(square: QuadSquare) -> int:
    """Orbit size of the square's repeat pattern under the 72 position maps."""
    groups = _pattern_groups(square.cells)
    images = set()
    for perm in _position_transforms():
        images.add(frozenset(frozenset(perm[p] for p in g) for g in groups))
    return len(images)


# ---------------------------------------------------------------------------
# high-block state space
#
# A high block is determined by the inner 2x2 free cells (values taken in
# the quotient space of the top bits, i.e. integers below M = 2**(bits-4));
# the remaining cells are XOR-forced.  Two blocks combine with the same set
# of low squares iff their repeat patterns agree, and the pattern classes
# are the orbits under row/column/transpose maps plus any invertible linear
# change of the value space.


def _state_cells(state):
    x11, x12, x21, x22 = state
    return (
        0, 0, 0, 0,
        0, x11, x12, x11 ^ x12,
        0, x21, x22, x21 ^ x22,
        0, x11 ^ x21, x12 ^ x22, x11 ^ x12 ^ x21 ^ x22)


def _state_generators(m: int):
    gens = [
        lambda s: (s[2], s[3], s[0], s[1]),                     # swap rows 1,2
        lambda s: (s[0], s[1], s[0] ^ s[2], s[1] ^ s[3]),       # swap rows 2,3
        lambda s: (s[1], s[0], s[3], s[2]),                     # swap cols 1,2
        lambda s: (s[0], s[0] ^ s[1], s[2], s[2] ^ s[3]),       # swap cols 2,3
        lambda s: (s[0], s[2], s[1], s[3]),                     # transpose
    ]
    if m >= 2:
        mask = (1 << m) - 1

        def bit_swap(v):
            return (v & ~3) | ((v & 1) << 1) | ((v >> 1) & 1)

        def bit_rotate(v):
            return ((v << 1) & mask) | (v >> (m - 1))

        def transvection(v):
            return v ^ ((v >> 1) & 1)

        # bit permutations plus one transvection generate GL(m, 2)
        for f in (bit_swap, bit_rotate, transvection):
            gens.append(lambda s, f=f: tuple(f(v) for v in s))
    return gens


def _orbit(state, gens):
    seen = {state}
    frontier = [state]
    while frontier:
        current = frontier.pop()
        for g in gens:
            image = g(current)
            if image not in seen:
                seen.add(image)
                frontier.append(image)
    return seen


@dataclass(frozen=True)
class BPrimeCase:
    """One high-block pattern class.

    representative: lexicographically least member (cells as a square over
    max(bits-4, 1) value bits), symmetry_factor: orbit size of its repeat
    pattern under the 72 position maps, multiplicity_degree: GF(2) rank of
    its values (how many independent high values it consumes), a_count:
    low squares combining with it to an all-distinct square, orbit_size:
    number of free-cell states in the class.
    """
    representative: QuadSquare
    symmetry_factor: int
    multiplicity_degree: int
    a_count: int
    orbit_size: int


@lru_cache(maxsize=None)
def _classify_b_prime_cached(bits: int):
    m = bits - 4
    size = 1 << max(m, 0)
    gens = _state_generators(m)
    seen = set()
    found = []
    for state in product(range(size), repeat=4):
        if state in seen:
            continue
        orbit = _orbit(state, gens)
        seen.update(orbit)
        rep = min(_state_cells(s) for s in orbit)
        found.append((rep, len(orbit)))
    found.sort()
    cases = []
    for rep, orbit_size in found:
        square = QuadSquare(max(m, 1), rep)
        cases.append(BPrimeCase(
            representative=square,
            symmetry_factor=symmetry_factor(square),
            multiplicity_degree=gf2_rank(rep),
            a_count=_count_legit_a(rep),
            orbit_size=orbit_size))
    return tuple(cases)


def classify_b_prime(deck: DeckSpec):
    """Pattern classes of high blocks for the given deck, lexicographic.

    The class list stabilizes at 10 once bits >= 8 (the degree-4 pattern
    needs four independent high values).
    """
    if deck.bits > B_PRIME_MAX_BITS:
        raise CapacityError(
            f"high-block classification above {B_PRIME_MAX_BITS} bits is refused "
            f"({(1 << (deck.bits - 4))**4} states)")
    return list(_classify_b_prime_cached(deck.bits))


def b_prime_reference_cases():
    """The stable list of 10 cases, computed at 8 bits."""
    return list(_classify_b_prime_cached(8))


def b_prime_canonical(deck: DeckSpec, square: QuadSquare) -> QuadSquare:
    """Lexicographically least high block in the given block's class."""
    m = deck.bits - 4
    state = (square.cell(1, 1), square.cell(1, 2), square.cell(2, 1), square.cell(2, 2))
    if square.cells != _state_cells(state):
        raise ValueError("not a high block: border must be zero and lines XOR-forced")
    if max(square.cells) >= (1 << max(m, 1)):
        raise ValueError(f"block values do not fit in {m} bits")
    rep = min(_state_cells(s) for s in _orbit(state, _state_generators(m)))
    return QuadSquare(square.bits, rep)


# ---------------------------------------------------------------------------
# combining with low squares


@lru_cache(maxsize=1)
def _low_square_table():
    """All 65536 candidate low squares (type-C borders, XOR-forced lines)."""
    idx = np.arange(16, dtype=np.int64)
    a11, a12, a21, a22 = (g.ravel() for g in np.meshgrid(idx, idx, idx, idx, indexing="ij"))
    cells = np.empty((65536, 16), dtype=np.int64)
    cells[:, 0] = 0
    cells[:, 1] = 1
    cells[:, 2] = 2
    cells[:, 3] = 3
    cells[:, 4] = 4
    cells[:, 5] = a11
    cells[:, 6] = a12
    cells[:, 7] = 4 ^ a11 ^ a12
    cells[:, 8] = 8
    cells[:, 9] = a21
    cells[:, 10] = a22
    cells[:, 11] = 8 ^ a21 ^ a22
    cells[:, 12] = 12
    cells[:, 13] = 1 ^ a11 ^ a21
    cells[:, 14] = 2 ^ a12 ^ a22
    cells[:, 15] = 15 ^ a11 ^ a12 ^ a21 ^ a22
    return cells


def _count_legit_a(block_cells) -> int:
    if max(block_cells) > 15:
        raise ValueError("pattern representatives live in the 16-value space")
    shifted = np.array(block_cells, dtype=np.int64) << 4
    combined = _low_square_table() | shifted[None, :]
    ordered = np.sort(combined, axis=1)
    return int((np.diff(ordered, axis=1) > 0).all(axis=1).sum())


def count_legit_a(case) -> int:
    """Low squares whose combination with the case pattern is all-distinct."""
    cells = case.representative.cells if isinstance(case, BPrimeCase) else case.cells
    return _count_legit_a(cells)


def semimagic_type_c_by_decomposition(deck: DeckSpec) -> int:
    """Type-C semimagic count as a sum over high-block pattern classes.

    Each case contributes F * #A times the number of ways to pick its
    multiplicity_degree independent high values among M = 2**(bits-4),
    which is (M-1)(M-2)(M-4)... — zero whenever the deck is too small.
    """
    m_size = 1 << (deck.bits - 4)
    total = 0
    for case in b_prime_reference_cases():
        term = case.symmetry_factor * case.a_count
        for k in range(case.multiplicity_degree):
            term *= m_size - (1 << k)
        total += term
    return total


def coefficients_by_degree() -> dict:
    """Closed-form coefficients recovered from the pattern classes.

    Grouping the decomposition sum by multiplicity degree d and expanding
    the products of (M - 2**k) in terms of (2**n - 16 * 2**k) shows the
    degree-d coefficient is sum(F * #A) / 16**d over degree-d cases.
    """
    raw = {}
    for case in b_prime_reference_cases():
        d = case.multiplicity_degree
        raw[d] = raw.get(d, 0) + case.symmetry_factor * case.a_count
    out = {}
    for d, value in sorted(raw.items()):
        coefficient, remainder = divmod(value, 16 ** d)
        assert remainder == 0
        out[d] = coefficient
    return out
