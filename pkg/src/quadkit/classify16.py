"""Symmetry classes of one-attribute 4x4 value grids with XOR-zero lines.

A value grid takes one of 4 values per cell; the lines of interest are the
rows and columns, each constrained to XOR to zero (the grid of any single
attribute of a semimagic square is of this shape).  The symmetry group is
value relabeling (all 24 permutations of 0..3), row order, column order,
and transposition: 24 * 24 * 24 * 2 = 27648 maps.  The canonical form of
a grid is the lexicographically least image (row-major); for a fixed cell
arrangement the least relabeling is the one induced by first occurrence,
so the canonical form is an exact minimum over the 1152 arrangements.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import permutations

import numpy as np

from .square_model import (
    QuadSquare,
    TypePattern,
    coordinate_quads_xor_zero,
    type_pattern,
    value_distribution,
)

GROUP_ORDER = 27648


@lru_cache(maxsize=1)
def _arrangements():
    """The 1152 row/column/transpose position maps, as index vectors."""
    perms = list(permutations(range(4)))
    out = []
    for rp in perms:
        for cp in perms:
            for transpose in (False, True):
                idx = np.empty(16, dtype=np.int64)
                for i in range(4):
                    for j in range(4):
                        si, sj = (rp[j], cp[i]) if transpose else (rp[i], cp[j])
                        idx[4 * i + j] = 4 * si + sj
                out.append(idx)
    return np.stack(out)


_WEIGHTS = 4 ** np.arange(15, -1, -1, dtype=np.int64)


def _canonical_keys(grids: np.ndarray) -> np.ndarray:
    """Canonical form of each grid row, packed as a base-4 integer."""
    n = grids.shape[0]
    best = np.full(n, np.iinfo(np.int64).max, dtype=np.int64)
    first = np.empty((n, 4), dtype=np.int64)
    labels = np.empty((n, 4), dtype=np.int64)
    ranks = np.broadcast_to(np.arange(4, dtype=np.int64), (n, 4))
    for idx in _arrangements():
        g = grids[:, idx]
        for v in range(4):
            eq = g == v
            first[:, v] = np.where(eq.any(axis=1), eq.argmax(axis=1), 16)
        order = np.argsort(first, axis=1, kind="stable")
        np.put_along_axis(labels, order, ranks, axis=1)
        relabeled = np.take_along_axis(labels, g, axis=1)
        np.minimum(best, relabeled @ _WEIGHTS, out=best)
    return best


def _decode_key(key: int):
    cells = []
    for shift in range(15, -1, -1):
        cells.append((key >> (2 * shift)) & 3)
    return tuple(cells)


def canonical_form(grid) -> QuadSquare:
    """Least grid in the symmetry class of the given 0..3-valued grid."""
    cells = tuple(grid.cells) if isinstance(grid, QuadSquare) else tuple(grid)
    if len(cells) != 16 or any(not 0 <= v <= 3 for v in cells):
        raise ValueError("a value grid has 16 cells with values 0..3")
    key = int(_canonical_keys(np.array([cells], dtype=np.int64))[0])
    return QuadSquare(2, _decode_key(key))


# ---------------------------------------------------------------------------
# the universe of XOR-zero-line grids


@lru_cache(maxsize=1)
def _line_grids():
    """All 262144 grids whose four rows and four columns XOR to zero.

    Rows 0..2 range over the 64 XOR-zero 4-tuples; row 3 is forced by the
    columns and is then XOR-zero itself.
    """
    rows = np.array(
        [(a, b, c, a ^ b ^ c) for a in range(4) for b in range(4) for c in range(4)],
        dtype=np.int64)
    n = len(rows)
    i, j, k = (g.ravel() for g in np.meshgrid(np.arange(n), np.arange(n), np.arange(n),
                                              indexing="ij"))
    grids = np.empty((n ** 3, 16), dtype=np.int64)
    grids[:, 0:4] = rows[i]
    grids[:, 4:8] = rows[j]
    grids[:, 8:12] = rows[k]
    grids[:, 12:16] = rows[i] ^ rows[j] ^ rows[k]
    return grids


def _line_codes(lines: np.ndarray) -> np.ndarray:
    """Type code per XOR-zero line: 0 = D (all distinct), 1 = H, 2 = S."""
    a, b, c, d = (lines[..., t] for t in range(4))
    eq = ((a == b).astype(np.int64) + (a == c) + (a == d)
          + (b == c) + (b == d) + (c == d))
    return np.where(eq == 0, 0, np.where(eq == 2, 1, 2))


_TYPE_LETTERS = "DHS"


def _pattern_ids(codes: np.ndarray) -> np.ndarray:
    """Multiset id for four line codes: 5 * (#D) + (#H)."""
    n_d = (codes == 0).sum(axis=1)
    n_h = (codes == 1).sum(axis=1)
    return 5 * n_d + n_h


def _pattern_string(pid: int) -> str:
    n_d, n_h = divmod(pid, 5)
    return "D" * n_d + "H" * n_h + "S" * (4 - n_d - n_h)


@lru_cache(maxsize=1)
def _grid_analysis():
    grids = _line_grids()
    row_codes = np.stack([_line_codes(grids[:, 4 * i:4 * i + 4]) for i in range(4)], axis=1)
    col_codes = np.stack([_line_codes(grids[:, i::4]) for i in range(4)], axis=1)
    row_pid = _pattern_ids(row_codes)
    col_pid = _pattern_ids(col_codes)
    counts = np.stack([(grids == v).sum(axis=1) for v in range(4)], axis=1)
    dist = np.sort(counts, axis=1)
    return grids, row_codes, col_codes, row_pid, col_pid, dist


def _pack_dist(dist: np.ndarray) -> np.ndarray:
    return dist[:, 0] | dist[:, 1] << 5 | dist[:, 2] << 10 | dist[:, 3] << 15


def _unpack_dist(key: int):
    return ((key >> 0) & 31, (key >> 5) & 31, (key >> 10) & 31, (key >> 15) & 31)


def realizable_distributions() -> dict:
    """Per line-type pattern, the value distributions that actually occur."""
    _, _, _, row_pid, col_pid, dist = _grid_analysis()
    packed = _pack_dist(dist)
    out = {}
    for pid in (row_pid, col_pid):
        for key in np.unique(pid * (1 << 20) + packed):
            key = int(key)
            out.setdefault(_pattern_string(key >> 20), set()).add(
                _unpack_dist(key & ((1 << 20) - 1)))
    return {p: frozenset(v) for p, v in out.items()}


def realizable_pairs() -> dict:
    """Per unordered (row pattern, column pattern) pair, the distributions.

    Pair keys are normalized lexicographically, matching TypePattern.
    """
    _, _, _, row_pid, col_pid, dist = _grid_analysis()
    low = np.minimum(row_pid, col_pid)
    high = np.maximum(row_pid, col_pid)
    packed = (low * 25 + high) * (1 << 20) + _pack_dist(dist)
    out = {}
    for key in np.unique(packed):
        key = int(key)
        pair_key, dist_key = divmod(key, 1 << 20)
        pair = (_pattern_string(pair_key // 25), _pattern_string(pair_key % 25))
        out.setdefault(tuple(sorted(pair)), set()).add(_unpack_dist(dist_key))
    return {p: frozenset(v) for p, v in out.items()}


# ---------------------------------------------------------------------------
# orbit classes


@dataclass(frozen=True)
class OrbitClass:
    """A symmetry class of value grids.

    canonical: least member, pattern: sorted row/column line types of the
    canonical member, distribution: sorted value counts, size: number of
    grids in the class.
    """
    canonical: QuadSquare
    pattern: TypePattern
    distribution: tuple
    size: int


def _classes_from_grids(grids: np.ndarray):
    keys = _canonical_keys(grids)
    uniq, counts = np.unique(keys, return_counts=True)
    out = []
    for key, size in zip(uniq, counts):
        square = QuadSquare(2, _decode_key(int(key)))
        out.append(OrbitClass(
            canonical=square,
            pattern=type_pattern(square, 0),
            distribution=value_distribution(square, 0),
            size=int(size)))
    return tuple(out)


@lru_cache(maxsize=1)
def _classify_semimagic16_cached():
    grids, _, _, _, _, dist = _grid_analysis()
    full = (dist == 4).all(axis=1)
    return _classes_from_grids(grids[full])


def classify_semimagic16():
    """Symmetry classes of grids with XOR-zero lines and distribution 4,4,4,4."""
    return list(_classify_semimagic16_cached())


@lru_cache(maxsize=1)
def _strongly_magic_grids():
    """All value grids whose 140 coordinate quads each XOR to zero.

    The quads {0, j, 4i, 4i+j} force cell (i,j) = row0[j] ^ d_i with
    d_0 = 0, d_3 = d_1 ^ d_2, so sweeping XOR-zero first rows and (d1, d2)
    covers every candidate exactly once; survivors of the full 140-subset
    check are the strongly magic grids.
    """
    first_rows = [(a, b, c, a ^ b ^ c) for a in range(4) for b in range(4) for c in range(4)]
    grids = []
    for row in first_rows:
        for d1 in range(4):
            for d2 in range(4):
                offsets = (0, d1, d2, d1 ^ d2)
                cells = tuple(row[j] ^ offsets[i] for i in range(4) for j in range(4))
                if coordinate_quads_xor_zero(cells):
                    grids.append(cells)
    return tuple(grids)


@lru_cache(maxsize=2)
def _classify_strongly_magic16_cached(require_full_deck: bool):
    grids = _strongly_magic_grids()
    if require_full_deck:
        grids = [g for g in grids if sorted(g.count(v) for v in range(4)) == [4, 4, 4, 4]]
    return _classes_from_grids(np.array(grids, dtype=np.int64))


def classify_strongly_magic16(require_full_deck: bool = False):
    """Symmetry classes of strongly magic value grids.

    With require_full_deck, only grids using each value four times count
    (the classes a full-deck strongly magic square can realize).
    """
    return list(_classify_strongly_magic16_cached(require_full_deck))


def strongly_magic_pair_table():
    """Uniform-pattern pair table: potential vs. strongly-magic-realized.

    potential: distributions occurring among XOR-zero-line grids for each
    unordered pair of uniform patterns (DDDD/HHHH/SSSS on both sides);
    realized: the same table restricted to strongly magic grids.
    """
    uniform = {"DDDD", "HHHH", "SSSS"}
    potential = {pair: dists for pair, dists in realizable_pairs().items()
                 if pair[0] in uniform and pair[1] in uniform}
    realized = {}
    for cells in _strongly_magic_grids():
        square = QuadSquare(2, cells)
        pattern = type_pattern(square, 0)
        rows, cols = pattern.rows, pattern.cols
        if rows in uniform and cols in uniform:
            pair = (rows, cols) if rows <= cols else (cols, rows)
            realized.setdefault(pair, set()).add(value_distribution(square, 0))
    return potential, {p: frozenset(v) for p, v in realized.items()}


def check_s_column_proposition() -> bool:
    """Full-deck grids with an S line on one side are all-D on the other."""
    _, row_codes, col_codes, _, _, dist = _grid_analysis()
    full = (dist == 4).all(axis=1)
    s_col = (col_codes == 2).any(axis=1)
    all_d_rows = (row_codes == 0).all(axis=1)
    s_row = (row_codes == 2).any(axis=1)
    all_d_cols = (col_codes == 0).all(axis=1)
    return bool(((~(full & s_col) | all_d_rows).all())
                and ((~(full & s_row) | all_d_cols).all()))
