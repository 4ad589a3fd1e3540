"""Card arithmetic over GF(2)^n and the affine symmetry group of the deck.

A deck of 2**n cards is identified with the vector space GF(2)^n: card ids
are integers whose bits are the vector coordinates.  Four cards form a quad
exactly when their bitwise XOR is zero, so the quad structure is preserved
by precisely the invertible affine maps x -> Mx ^ t.
"""

from __future__ import annotations

import random
from dataclasses import dataclass


class IndependenceError(ValueError):
    """Anchor cards are affinely dependent; no invertible map exists."""


@dataclass(frozen=True)
class DeckSpec:
    """A deck of 2**bits cards; bits >= 4 so a 4x4 square can be filled."""

    bits: int

    def __post_init__(self):
        if self.bits < 4:
            raise ValueError(f"deck needs at least 16 cards (bits >= 4), got bits={self.bits}")

    @property
    def size(self) -> int:
        return 1 << self.bits

    @property
    def m(self) -> int:
        """Number of 16-card blocks in the deck: 2**(bits - 4)."""
        return 1 << (self.bits - 4)


def xor_quad(a: int, b: int, c: int, d: int) -> bool:
    """True when the four values XOR to zero (repeats allowed)."""
    return a ^ b ^ c ^ d == 0


def complete_quad(a: int, b: int, c: int) -> int:
    """The unique value completing a, b, c to an XOR-zero quadruple."""
    return a ^ b ^ c


def is_card_quad(a: int, b: int, c: int, d: int) -> bool:
    """True for four pairwise distinct cards whose XOR is zero."""
    return a ^ b ^ c ^ d == 0 and len({a, b, c, d}) == 4


def gf2_rank(vectors) -> int:
    """Rank over GF(2) of integer bit vectors (greedy xor basis)."""
    basis = []
    for v in vectors:
        for p in basis:
            v = min(v, v ^ p)
        if v:
            basis.append(v)
    return len(basis)


def solve_linear_columns(basis_in, basis_out, bits: int):
    """Columns of the linear map sending basis_in[i] -> basis_out[i].

    basis_in must be a basis of GF(2)^bits.  Gauss-Jordan elimination on
    (input, output) pairs keeps each row of the tableau a valid
    (x, L(x)) relation, and ends with rows (1 << j, column_j).
    """
    rows = list(zip(basis_in, basis_out))
    if len(rows) != bits:
        raise IndependenceError("need exactly one basis vector per bit")
    for j in range(bits):
        p = next((k for k in range(j, bits) if rows[k][0] >> j & 1), None)
        if p is None:
            raise IndependenceError("input vectors do not span the space")
        rows[j], rows[p] = rows[p], rows[j]
        pa, pb = rows[j]
        for k in range(bits):
            if k != j and rows[k][0] >> j & 1:
                rows[k] = (rows[k][0] ^ pa, rows[k][1] ^ pb)
    return tuple(b for _, b in rows)


@dataclass(frozen=True)
class AffineMap:
    """Invertible map x -> Mx ^ translation over GF(2)^bits.

    The matrix is stored by columns: cols[j] is the image of basis vector
    1 << j.  Construction rejects singular matrices.
    """

    bits: int
    cols: tuple
    translation: int

    def __post_init__(self):
        size = 1 << self.bits
        if len(self.cols) != self.bits:
            raise ValueError("need one matrix column per bit")
        if any(not 0 <= c < size for c in self.cols):
            raise ValueError("matrix column outside deck range")
        if not 0 <= self.translation < size:
            raise ValueError("translation outside deck range")
        if gf2_rank(self.cols) != self.bits:
            raise ValueError("matrix is singular over GF(2)")

    @classmethod
    def identity(cls, bits: int) -> "AffineMap":
        return cls(bits, tuple(1 << j for j in range(bits)), 0)

    def apply_linear(self, card: int) -> int:
        """Matrix part only (no translation); card range is not checked."""
        y = 0
        v = card
        while v:
            low = v & -v
            y ^= self.cols[low.bit_length() - 1]
            v ^= low
        return y

    def apply(self, card: int) -> int:
        if not 0 <= card < (1 << self.bits):
            raise ValueError(f"card {card} outside deck of {1 << self.bits} cards")
        return self.apply_linear(card) ^ self.translation

    __call__ = apply

    def inverse(self) -> "AffineMap":
        identity_cols = tuple(1 << j for j in range(self.bits))
        inv_cols = solve_linear_columns(self.cols, identity_cols, self.bits)
        inv = AffineMap(self.bits, inv_cols, 0)
        return AffineMap(self.bits, inv_cols, inv.apply_linear(self.translation))

    def compose(self, other: "AffineMap") -> "AffineMap":
        """The map x -> self(other(x))."""
        if self.bits != other.bits:
            raise ValueError("cannot compose maps over different decks")
        cols = tuple(self.apply_linear(c) for c in other.cols)
        return AffineMap(self.bits, cols, self.apply_linear(other.translation) ^ self.translation)

    def is_identity(self) -> bool:
        return self.translation == 0 and all(c == 1 << j for j, c in enumerate(self.cols))


def _extend_basis(vectors, bits: int):
    """Grow an independent list to a full basis, adding smallest free ints."""
    out = list(vectors)
    rank = gf2_rank(out)
    candidate = 1
    while rank < bits:
        if gf2_rank(out + [candidate]) > rank:
            out.append(candidate)
            rank += 1
        candidate += 1
    return out


def affine_from_images(bits: int, sources, targets) -> AffineMap:
    """Invertible affine map sending five source cards to five targets.

    The differences source[i] ^ source[0] (and likewise for targets) must be
    linearly independent, otherwise IndependenceError is raised.  The partial
    basis is completed with the lexicographically smallest free vectors on
    both sides, so the result is deterministic.
    """
    sources = tuple(sources)
    targets = tuple(targets)
    if len(sources) != 5 or len(targets) != 5:
        raise ValueError("need exactly five source and five target cards")
    size = 1 << bits
    for card in (*sources, *targets):
        if not 0 <= card < size:
            raise ValueError(f"card {card} outside deck of {size} cards")
    src_diffs = [s ^ sources[0] for s in sources[1:]]
    tgt_diffs = [t ^ targets[0] for t in targets[1:]]
    if gf2_rank(src_diffs) != 4:
        raise IndependenceError("source anchor differences are linearly dependent")
    if gf2_rank(tgt_diffs) != 4:
        raise IndependenceError("target anchor differences are linearly dependent")
    cols = solve_linear_columns(_extend_basis(src_diffs, bits), _extend_basis(tgt_diffs, bits), bits)
    linear = AffineMap(bits, cols, 0)
    return AffineMap(bits, cols, linear.apply_linear(sources[0]) ^ targets[0])


def random_invertible_affine(bits: int, rng=None) -> AffineMap:
    """A uniformly sampled invertible affine map (rejection on singular M)."""
    rng = rng if rng is not None else random.Random()
    size = 1 << bits
    while True:
        cols = tuple(rng.randrange(size) for _ in range(bits))
        if gf2_rank(cols) == bits:
            return AffineMap(bits, cols, rng.randrange(size))
