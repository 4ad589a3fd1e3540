"""Exhaustive type-C searches, closed-form counts, and whole-deck totals.

Type-C searches fix the first row 0,1,2,3 and first column 0,4,8,12 and
sweep the free inner cells; the remaining cells are forced by line XOR
constraints, so only distinctness needs to be checked.  The distinctness
constraints on the forced cells separate into one-dimensional masks over
the two innermost free cells and their XOR, which is what the numpy inner
loops exploit.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache, partial

import numpy as np

from .canonical import total_from_type_c
from .quad_core import DeckSpec
from .square_model import COORDINATE_QUADS, QuadSquare, is_strongly_magic


class CapacityError(RuntimeError):
    """A search whose state space exceeds what this build will attempt."""


# Both caps keep the candidate space at or below 2**28 free-cell tuples.
SEMIMAGIC_SEARCH_MAX_BITS = 7   # four free cells: 2**(4 * bits) candidates
MAGIC_SEARCH_MAX_BITS = 9       # three free cells: 2**(3 * bits) candidates

# Fixed type-C border cards: row 0 and column 0.
_BORDER = (0, 1, 2, 3, 4, 8, 12)

# Closed-form coefficients of the type-C counts, indexed by the number of
# (2**n - 16), (2**n - 32), ... factors they multiply.
SEMIMAGIC_TYPE_C_COEFFS = (112, 2823, 2531, 159, 1)
MAGIC_TYPE_C_COEFFS = (10, 85, 43, 1)


def thread_count() -> int:
    """Worker count for counting searches; QUADKIT_THREADS overrides cores."""
    env = os.environ.get("QUADKIT_THREADS")
    if env is None:
        return os.cpu_count() or 1
    try:
        n = int(env)
    except ValueError:
        n = 0
    if n < 1:
        raise ValueError(f"QUADKIT_THREADS must be a positive integer, got {env!r}")
    return n


def _border_lut(bits: int) -> np.ndarray:
    lut = np.zeros(1 << bits, dtype=bool)
    lut[list(_BORDER)] = True
    return lut


# ---------------------------------------------------------------------------
# type-C semimagic search
#
# Free cells c11, c12, c21, c22 at positions (1,1), (1,2), (2,1), (2,2).
# Forced: c13 = 4^c11^c12 and c23 = 8^c21^c22 by row XOR, c31 = 1^c11^c21
# and c32 = 2^c12^c22 by column XOR, c33 = 3^c13^c23 (the final row is then
# XOR-zero automatically).  With X = c21, Y = c22 the six new cells are
# X, Y, a^X^Y, b^X, c^Y, d^X^Y for prefix constants a, b, c, d, so every
# pairwise-distinctness constraint depends only on X, on Y, or on X^Y.


def _semimagic_prefixes(bits: int, c11_values):
    """Valid (c11, c12) prefixes with their masks, in lexicographic order."""
    size = 1 << bits
    vals = np.arange(size, dtype=np.int64)
    border = _border_lut(bits)
    for c11 in c11_values:
        if border[c11]:
            continue
        for c12 in range(size):
            if border[c12] or c12 == c11:
                continue
            c13 = 4 ^ c11 ^ c12
            # c13 cannot collide with c11 or c12 (that would need c12 = 4
            # or c11 = 4), so only the border needs checking.
            if border[c13]:
                continue
            lut = border.copy()
            lut[[c11, c12, c13]] = True
            a = 8
            b = 1 ^ c11
            c = 2 ^ c12
            d = 15 ^ c11 ^ c12          # c33 = d ^ X ^ Y
            # b, c, a^d are nonzero because 1, 2 are border cards and
            # c13 != 3, so the constant distinctness constraints all hold.
            ok_x = ~(lut | lut[vals ^ b])
            ok_x[[a, d, a ^ c, c ^ d]] = False
            ok_y = ~(lut | lut[vals ^ c])
            ok_y[[a, d, a ^ b, b ^ d]] = False
            ok_z = ~(lut[vals ^ a] | lut[vals ^ d])
            ok_z[[0, b, c, b ^ c]] = False
            yield c11, c12, c13, d, ok_x, ok_y, ok_z


def _semimagic_count_block(bits: int, c11_values) -> int:
    size = 1 << bits
    vals = np.arange(size, dtype=np.int64)
    total = 0
    for *_prefix, ok_x, ok_y, ok_z in _semimagic_prefixes(bits, c11_values):
        xs = np.flatnonzero(ok_x)
        if xs.size == 0:
            continue
        hits = ok_z[xs[:, None] ^ vals[None, :]] & ok_y[None, :]
        total += int(hits.sum())
    return total


def iter_type_c_semimagic(deck: DeckSpec):
    """Type-C semimagic squares in lexicographic order of the free cells."""
    bits = deck.bits
    size = 1 << bits
    vals = np.arange(size, dtype=np.int64)
    for c11, c12, c13, d, ok_x, ok_y, ok_z in _semimagic_prefixes(bits, range(size)):
        for x in np.flatnonzero(ok_x):
            x = int(x)
            for y in np.flatnonzero(ok_y & ok_z[x ^ vals]):
                y = int(y)
                yield QuadSquare(bits, (
                    0, 1, 2, 3,
                    4, c11, c12, c13,
                    8, x, y, 8 ^ x ^ y,
                    12, 1 ^ c11 ^ x, 2 ^ c12 ^ y, d ^ x ^ y))


def _chunked_count(block, bits: int) -> int:
    size = 1 << bits
    workers = min(thread_count(), size)
    if workers <= 1:
        return block(bits, range(size))
    chunks = [c.tolist() for c in np.array_split(np.arange(size), workers) if c.size]
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(partial(block, bits), chunks))
    return sum(parts)


def enumerate_type_c_semimagic(deck: DeckSpec, visitor=None) -> int:
    """Count type-C semimagic squares; with a visitor, call it per square."""
    if visitor is None:
        return _chunked_count(_semimagic_count_block, deck.bits)
    count = 0
    for square in iter_type_c_semimagic(deck):
        visitor(square)
        count += 1
    return count


# ---------------------------------------------------------------------------
# type-C magic search
#
# Free cells c11, c12, c22; the broken-in anti-diagonal forces
# c21 = 15 ^ c12, and both diagonals plus the line constraints force the
# rest.  All remaining distinctness constraints on the forced cells are
# single lookups over Y = c22.


def _magic_prefixes(bits: int, c11_values):
    size = 1 << bits
    border = _border_lut(bits)
    for c11 in c11_values:
        if border[c11]:
            continue
        for c12 in range(size):
            c13 = 4 ^ c11 ^ c12
            c21 = 15 ^ c12
            c31 = 14 ^ c11 ^ c12        # 1 ^ c11 ^ c21
            fixed = (c11, c12, c13, c21, c31)
            if any(border[v] for v in fixed) or len(set(fixed)) != 5:
                continue
            a2 = 8 ^ c21                # c23 = a2 ^ Y
            c2 = 2 ^ c12                # c32 = c2 ^ Y
            e = c11                     # c33 = e ^ Y  (main diagonal)
            if a2 == e or c2 == e:      # c23 == c33 / c32 == c33 for every Y
                continue
            yield c11, c12, c13, c21, c31, a2, c2, e


def _magic_count_block(bits: int, c11_values) -> int:
    size = 1 << bits
    vals = np.arange(size, dtype=np.int64)
    border = _border_lut(bits)
    total = 0
    for c11, c12, c13, c21, c31, a2, c2, e in _magic_prefixes(bits, c11_values):
        lut = border.copy()
        lut[[c11, c12, c13, c21, c31]] = True
        ok = ~(lut | lut[vals ^ a2] | lut[vals ^ c2] | lut[vals ^ e])
        total += int(ok.sum())
    return total


def iter_type_c_magic(deck: DeckSpec):
    """Type-C magic squares in lexicographic order of c11, c12, c22."""
    bits = deck.bits
    size = 1 << bits
    vals = np.arange(size, dtype=np.int64)
    border = _border_lut(bits)
    for c11, c12, c13, c21, c31, a2, c2, e in _magic_prefixes(bits, range(size)):
        lut = border.copy()
        lut[[c11, c12, c13, c21, c31]] = True
        ok = ~(lut | lut[vals ^ a2] | lut[vals ^ c2] | lut[vals ^ e])
        for y in np.flatnonzero(ok):
            y = int(y)
            yield QuadSquare(bits, (
                0, 1, 2, 3,
                4, c11, c12, c13,
                8, c21, y, a2 ^ y,
                12, c31, c2 ^ y, e ^ y))


def enumerate_type_c_magic(deck: DeckSpec, visitor=None) -> int:
    """Count type-C magic squares; with a visitor, call it per square."""
    if visitor is None:
        return _chunked_count(_magic_count_block, deck.bits)
    count = 0
    for square in iter_type_c_magic(deck):
        visitor(square)
        count += 1
    return count


# ---------------------------------------------------------------------------
# type-C strongly magic


def type_c_strongly_magic_square(deck: DeckSpec) -> QuadSquare:
    """The unique type-C strongly magic square: cell (i,j) = 4*i ^ j.

    The coordinate quads {0, j, 4i, 4i+j} force every cell to equal
    col0[i] ^ row0[j], so 0..15 in order is the only candidate, and it
    passes the full predicate.
    """
    square = QuadSquare(deck.bits, tuple(range(16)))
    assert is_strongly_magic(square)
    return square


def enumerate_type_c_strongly_magic(deck: DeckSpec, visitor=None) -> int:
    square = type_c_strongly_magic_square(deck)
    if visitor is not None:
        visitor(square)
    return 1


def iter_type_c_strongly_magic(deck: DeckSpec):
    yield type_c_strongly_magic_square(deck)


# ---------------------------------------------------------------------------
# closed forms and totals


def _block_product(size: int, degree: int) -> int:
    out = 1
    for k in range(degree):
        out *= size - (16 << k)
    return out


def semimagic_type_c_closed_form(deck: DeckSpec) -> int:
    s = deck.size
    return sum(coef * _block_product(s, d) for d, coef in enumerate(SEMIMAGIC_TYPE_C_COEFFS))


def magic_type_c_closed_form(deck: DeckSpec) -> int:
    s = deck.size
    return sum(coef * _block_product(s, d) for d, coef in enumerate(MAGIC_TYPE_C_COEFFS))


def strongly_magic_total(deck: DeckSpec) -> int:
    """Whole-deck count of strongly magic squares: the orbit of one square."""
    return total_from_type_c(1, deck)


def strongly_magic_quotient(deck: DeckSpec) -> int:
    """strongly_magic_total(deck) divided (exactly) by its bits=4 value."""
    base = strongly_magic_total(DeckSpec(4))
    quotient, remainder = divmod(strongly_magic_total(deck), base)
    assert remainder == 0
    return quotient


def class_count_sequences(kind: str, deck: DeckSpec) -> int:
    """Affine classes of semimagic/magic squares over the given deck.

    The closed-form coefficient of degree d counts classes whose smallest
    realization needs 16 * 2**d cards, so the class count is the partial
    sum of coefficients over realizable degrees; it stabilizes at 5626
    (semimagic) and 139 (magic).
    """
    coeffs = {"semimagic": SEMIMAGIC_TYPE_C_COEFFS, "magic": MAGIC_TYPE_C_COEFFS}
    if kind not in coeffs:
        raise ValueError(f"no class sequence for kind {kind!r}")
    return sum(coef for d, coef in enumerate(coeffs[kind])
               if d == 0 or deck.size > (16 << (d - 1)))


# ---------------------------------------------------------------------------
# direct whole-deck counts at bits=4 (no type-C normalization)
#
# A 16-card semimagic square uses every card, so a square is an ordered
# pair of "half squares" (two disjoint quad rows) whose column XORs agree
# and whose card masks are complementary.  Counting matches of those
# signatures is exact and avoids the 3360**3 row triple loop.


@lru_cache(maxsize=1)
def _quad_rows16():
    rows = []
    for a in range(16):
        for b in range(16):
            if b == a:
                continue
            for c in range(16):
                if c == a or c == b:
                    continue
                rows.append((a, b, c, a ^ b ^ c))   # forced card never collides
    arr = np.array(rows, dtype=np.int64)
    masks = (1 << arr[:, 0]) | (1 << arr[:, 1]) | (1 << arr[:, 2]) | (1 << arr[:, 3])
    return arr, masks


@lru_cache(maxsize=1)
def _half_square_keys():
    """Signature keys of every ordered pair of disjoint quad rows.

    sem:  mask<<16 | column-xors          (rows in either half role)
    top:  mask<<24 | colx<<8 | diag<<4 | anti   for rows 0,1
    bot:  same fields read at the row 2,3 cell positions
    """
    rows, masks = _quad_rows16()
    sem_parts, top_parts, bot_parts = [], [], []
    for i in range(len(rows)):
        j = np.flatnonzero((masks & int(masks[i])) == 0)
        if j.size == 0:
            continue
        second = rows[j]
        x = rows[i][None, :] ^ second
        colx = x[:, 0] | x[:, 1] << 4 | x[:, 2] << 8 | x[:, 3] << 12
        pair_mask = int(masks[i]) | masks[j]
        sem_parts.append(pair_mask << 16 | colx)
        diag_top = rows[i, 0] ^ second[:, 1]    # cells (0,0), (1,1)
        anti_top = rows[i, 3] ^ second[:, 2]    # cells (0,3), (1,2)
        top_parts.append(pair_mask << 24 | colx << 8 | diag_top << 4 | anti_top)
        diag_bot = rows[i, 2] ^ second[:, 3]    # cells (2,2), (3,3)
        anti_bot = rows[i, 1] ^ second[:, 0]    # cells (2,1), (3,0)
        bot_parts.append(pair_mask << 24 | colx << 8 | diag_bot << 4 | anti_bot)
    return (np.concatenate(sem_parts), np.concatenate(top_parts), np.concatenate(bot_parts))


def _match_halves(top_keys, bottom_keys, mask_shift: int) -> int:
    keys_t, count_t = np.unique(top_keys, return_counts=True)
    keys_b, count_b = np.unique(bottom_keys, return_counts=True)
    partner = keys_t ^ (0xFFFF << mask_shift)   # complementary card mask
    pos = np.searchsorted(keys_b, partner)
    pos_c = np.clip(pos, 0, len(keys_b) - 1)
    found = keys_b[pos_c] == partner
    matched = np.where(found, count_b[pos_c], 0)
    return int((count_t * matched).sum())


def _full_deck_strongly_magic16() -> int:
    """Count by the forced translation shape, verified by the raw predicate.

    Coordinate quads {0, j, 4i, 4i+j} force cell (i,j) = row0[j] ^ d_i with
    d_0 = 0 and d_3 = d_1 ^ d_2 (column 0 is a quad), so every strongly
    magic square shows up exactly once as (row0, d1, d2); candidates are
    filtered with the full 140-subset check.
    """
    rows, _ = _quad_rows16()
    d1, d2 = np.meshgrid(np.arange(16), np.arange(16), indexing="ij")
    d1 = d1.ravel()[:, None]
    d2 = d2.ravel()[:, None]
    shifts = np.zeros((256, 16), dtype=np.int64)
    shifts[:, 4:8] = d1
    shifts[:, 8:12] = d2
    shifts[:, 12:16] = d1 ^ d2
    quads = np.array(COORDINATE_QUADS, dtype=np.int64)
    total = 0
    for start in range(0, len(rows), 128):
        chunk = rows[start:start + 128]
        cells = (np.tile(chunk, (1, 4))[:, None, :] ^ shifts[None, :, :]).reshape(-1, 16)
        ordered = np.sort(cells, axis=1)
        distinct = (np.diff(ordered, axis=1) > 0).all(axis=1)
        candidates = cells[distinct]
        values = candidates[:, quads]
        strong = (np.bitwise_xor.reduce(values, axis=2) == 0).all(axis=1)
        total += int(strong.sum())
    return total


def full_deck_count(kind: str, deck: DeckSpec) -> int:
    """Direct whole-deck count without type-C normalization (bits=4 only)."""
    if deck.bits != 4:
        raise CapacityError(
            f"direct whole-deck enumeration is only feasible at 4 bits, not {deck.bits}")
    sem_keys, top_keys, bot_keys = _half_square_keys()
    if kind == "semimagic":
        return _match_halves(sem_keys, sem_keys, 16)
    if kind == "magic":
        return _match_halves(top_keys, bot_keys, 24)
    if kind == "strongly-magic":
        return _full_deck_strongly_magic16()
    raise ValueError(f"unknown kind {kind!r}")


# ---------------------------------------------------------------------------
# sequence export


def sequence_terms(kind: str, variant: str, max_bits: int):
    """Terms for deck bits 4..max_bits; quotient only for strongly-magic."""
    if max_bits < 4:
        raise ValueError("max_bits must be at least 4")
    terms = []
    for bits in range(4, max_bits + 1):
        deck = DeckSpec(bits)
        if kind == "strongly-magic":
            if variant == "type-c":
                value = 1
            elif variant == "total":
                value = strongly_magic_total(deck)
            elif variant == "quotient":
                value = strongly_magic_quotient(deck)
            else:
                raise ValueError(f"no {variant!r} sequence for {kind}")
        elif kind in ("semimagic", "magic"):
            form = semimagic_type_c_closed_form if kind == "semimagic" else magic_type_c_closed_form
            if variant == "type-c":
                value = form(deck)
            elif variant == "total":
                value = total_from_type_c(form(deck), deck)
            elif variant == "classes":
                value = class_count_sequences(kind, deck)
            else:
                raise ValueError(f"no {variant!r} sequence for {kind}")
        else:
            raise ValueError(f"unknown kind {kind!r}")
        terms.append(value)
    return terms
