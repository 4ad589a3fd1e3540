"""Published reference values the verification suite checks against.

Sequence prefixes carry their OEIS ids.  The classification tables (type-C
magic squares at n=4, the high-block pattern classes, the 16-card
strongly magic grids, and the D/H/S realizability tables) are the known
results for the 16-card deck; `quadkit verify` recomputes all of them.
"""

from __future__ import annotations

# Terms start at deck bits = 4.
SEQUENCES = {
    # strongly magic quad squares over the whole deck (A362874)
    ("strongly-magic", "total"): [
        322560, 19998720, 839946240, 30478049280, 1036253675520, 34162943754240],
    # the same divided by the n=4 value (A308436)
    ("strongly-magic", "quotient"): [
        1, 62, 2604, 94488, 3212592, 105911904, 3439615168, 110880192896],
    # type-C semimagic squares (A362963)
    ("semimagic", "type-c"): [
        112, 45280, 4023232, 136941952, 3099135232, 58520273920, 1015268864512],
    # semimagic squares over the whole deck (A362964)
    ("semimagic", "total"): [
        36126720, 905542041600, 3379298591047680, 4173723561555394560,
        3211490275093527920640],
    # type-C magic squares (A361495)
    ("magic", "type-c"): [
        10, 1370, 70138, 1159994, 12654010, 116939450, 1003021498,
        8303802554, 67568410810],
    # magic squares over the whole deck (A361613)
    ("magic", "total"): [
        3225600, 27398246400, 58912149381120, 35354354296504320,
        13112764372566835200],
    # affine classes of semimagic / magic squares, cumulative by deck size
    ("semimagic", "classes"): [112, 2935, 5466, 5625, 5626, 5626, 5626],
    ("magic", "classes"): [10, 95, 138, 139, 139, 139, 139],
}

# The ten type-C magic squares of the 16-card deck.
MAGIC16_TYPE_C_SQUARES = (
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15),
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 11, 10, 12, 13, 15, 14),
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 14, 15, 12, 13, 10, 11),
    (0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 15, 14, 12, 13, 11, 10),
    (0, 1, 2, 3, 4, 6, 5, 7, 8, 10, 9, 11, 12, 13, 14, 15),
    (0, 1, 2, 3, 4, 7, 6, 5, 8, 9, 10, 11, 12, 15, 14, 13),
    (0, 1, 2, 3, 4, 9, 10, 7, 8, 5, 6, 11, 12, 13, 14, 15),
    (0, 1, 2, 3, 4, 10, 9, 7, 8, 6, 5, 11, 12, 13, 14, 15),
    (0, 1, 2, 3, 4, 13, 6, 15, 8, 9, 10, 11, 12, 5, 14, 7),
    (0, 1, 2, 3, 4, 15, 6, 13, 8, 9, 10, 11, 12, 7, 14, 5),
)

# High-block (B') pattern classes: canonical squares over the 16-value
# space, with their pattern symmetry factor F, multiplicity degree, and the
# number of low squares A that give an all-distinct combination.
B_PRIME_REPRESENTATIVES = (
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 2, 3, 0, 1, 2, 3),
    (0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 0, 1, 0, 1, 1, 0),
    (0, 0, 0, 0, 0, 0, 1, 1, 0, 1, 2, 3, 0, 1, 3, 2),
    (0, 0, 0, 0, 0, 0, 1, 1, 0, 2, 0, 2, 0, 2, 1, 3),
    (0, 0, 0, 0, 0, 0, 1, 1, 0, 2, 4, 6, 0, 2, 5, 7),
    (0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 3, 1, 0, 3, 1, 2),
    (0, 0, 0, 0, 0, 1, 2, 3, 0, 2, 4, 6, 0, 3, 6, 5),
    (0, 0, 0, 0, 0, 1, 2, 3, 0, 4, 8, 12, 0, 5, 10, 15),
)
B_PRIME_SYMMETRY_FACTORS = (1, 9, 6, 6, 9, 18, 9, 2, 6, 1)
B_PRIME_DEGREES = (0, 1, 2, 1, 2, 2, 3, 2, 3, 4)
B_PRIME_A_COUNTS = (112, 1904, 10752, 4672, 24320, 16384, 36864, 34816, 53248, 65536)

# Coefficients of the type-C closed forms, by multiplicity degree.
SEMIMAGIC_TYPE_C_COEFFS = (112, 2823, 2531, 159, 1)
MAGIC_TYPE_C_COEFFS = (10, 85, 43, 1)

# The seven strongly magic value grids of one attribute, up to symmetry.
# Row/column type pairs: DD, DH, DS, HH (two classes), HS, SS.
STRONGLY_MAGIC16_GRIDS = (
    (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0),
    (0, 1, 2, 3, 0, 1, 2, 3, 1, 0, 3, 2, 1, 0, 3, 2),
    (0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3),
    (0, 0, 1, 1, 0, 0, 1, 1, 1, 1, 0, 0, 1, 1, 0, 0),
    (0, 0, 1, 1, 0, 0, 1, 1, 2, 2, 3, 3, 2, 2, 3, 3),
    (0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1, 0, 0, 1, 1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
)

# Hand case analysis of full-deck 16-card semimagic value grids, keyed by
# unordered row/column pattern pair.  The analysis lists 20 normal forms.
# Four of them are redundant under the relabel/row/col/transpose group:
# the first three DDDD/DDDD forms are a single class (they are isotopic
# Latin squares; only the fourth, the XOR table, is separate), and the
# last two forms of DDHH/DDHH and of HHHH/HHHH are equivalent via a
# transposition composed with relabeling.  quadkit verify recomputes the
# orbits and reports the tally mismatch.
SEMIMAGIC16_CASE_FORMS = {
    ("DDDD", "DDDD"): (
        (0, 1, 2, 3, 1, 2, 3, 0, 2, 3, 0, 1, 3, 0, 1, 2),
        (0, 1, 2, 3, 1, 3, 0, 2, 2, 0, 3, 1, 3, 2, 1, 0),
        (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1),
        (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0),
    ),
    ("DDDD", "DDHH"): (
        (0, 1, 2, 3, 0, 3, 1, 2, 1, 0, 3, 2, 1, 2, 0, 3),
        (0, 1, 2, 3, 0, 2, 1, 3, 1, 0, 3, 2, 1, 3, 0, 2),
    ),
    ("DDDD", "HHHH"): (
        (0, 1, 2, 3, 0, 1, 2, 3, 1, 0, 3, 2, 1, 0, 3, 2),
        (0, 1, 2, 3, 0, 1, 2, 3, 1, 2, 3, 0, 1, 2, 3, 0),
        (0, 1, 2, 3, 0, 1, 3, 2, 1, 0, 2, 3, 1, 0, 3, 2),
    ),
    ("DDDD", "HHHS"): (
        (0, 1, 2, 3, 0, 1, 2, 3, 0, 2, 3, 1, 0, 2, 3, 1),
    ),
    ("DDDD", "HHSS"): (
        (0, 1, 2, 3, 0, 1, 2, 3, 1, 0, 2, 3, 1, 0, 2, 3),
    ),
    ("DDDD", "SSSS"): (
        (0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3, 0, 1, 2, 3),
    ),
    ("DDHH", "DDHH"): (
        (0, 1, 2, 3, 1, 0, 0, 1, 2, 3, 0, 1, 3, 2, 2, 3),
        (0, 1, 2, 3, 1, 2, 2, 1, 2, 3, 0, 1, 3, 0, 0, 3),
        (0, 1, 2, 3, 1, 0, 1, 0, 2, 3, 1, 0, 3, 2, 2, 3),
    ),
    ("DDHH", "HHHH"): (
        (0, 1, 2, 3, 0, 0, 2, 2, 1, 0, 3, 2, 1, 1, 3, 3),
        (0, 1, 2, 3, 0, 2, 2, 0, 1, 1, 3, 3, 1, 2, 3, 0),
    ),
    ("HHHH", "HHHH"): (
        (0, 0, 1, 1, 0, 0, 1, 1, 2, 2, 3, 3, 2, 2, 3, 3),
        (0, 0, 1, 1, 0, 0, 1, 1, 2, 3, 2, 3, 2, 3, 2, 3),
        (0, 0, 1, 1, 0, 0, 3, 3, 2, 2, 1, 1, 2, 2, 3, 3),
    ),
}

# The traditional per-pair tally of the forms above, 20 in total.
SEMIMAGIC16_CASE_COUNTS = {
    pair: len(forms) for pair, forms in SEMIMAGIC16_CASE_FORMS.items()
}

# Number of 4x4 grids over 0..3 with XOR-zero lines and every value used
# exactly four times; orbit sizes of the classes below sum to this.
SEMIMAGIC16_GRID_COUNT = 30072

# Orbit class counts the symmetry group actually produces, 16 in total.
SEMIMAGIC16_ORBIT_COUNTS = {
    ("DDDD", "DDDD"): 2,
    ("DDDD", "DDHH"): 2,
    ("DDDD", "HHHH"): 3,
    ("DDDD", "HHHS"): 1,
    ("DDDD", "HHSS"): 1,
    ("DDDD", "SSSS"): 1,
    ("DDHH", "DDHH"): 2,
    ("DDHH", "HHHH"): 2,
    ("HHHH", "HHHH"): 2,
}

# Realizable (line-type pattern -> value distributions) for 4x4 value grids
# whose rows and columns all XOR to zero.
DISTRIBUTION_TABLE = {
    "DDDD": {(4, 4, 4, 4)},
    "DDDH": {(3, 3, 5, 5)},
    "DDDS": {(3, 3, 3, 7)},
    "DDHH": {(2, 2, 6, 6), (2, 4, 4, 6), (4, 4, 4, 4)},
    "DDHS": {(2, 2, 4, 8), (2, 4, 4, 6)},
    "DDSS": {(2, 2, 2, 10), (2, 2, 6, 6)},
    "DHHH": {(1, 3, 5, 7), (1, 5, 5, 5), (3, 3, 3, 7), (3, 3, 5, 5)},
    "DHHS": {(1, 3, 3, 9), (1, 3, 5, 7), (3, 3, 5, 5)},
    "HHHH": {(0, 0, 8, 8), (0, 4, 4, 8), (0, 4, 6, 6), (2, 2, 4, 8),
             (2, 2, 6, 6), (2, 4, 4, 6), (4, 4, 4, 4)},
    "HHHS": {(0, 0, 6, 10), (0, 4, 4, 8), (2, 2, 2, 10), (2, 2, 6, 6),
             (2, 4, 4, 6), (4, 4, 4, 4)},
    "HHSS": {(0, 0, 4, 12), (0, 0, 8, 8), (0, 4, 4, 8), (2, 2, 6, 6),
             (4, 4, 4, 4)},
    "SSSS": {(0, 0, 0, 16), (0, 0, 8, 8), (4, 4, 4, 4)},
}

# Realizable ((row pattern, col pattern) -> distributions), pairs unordered.
PAIR_TABLE = {
    ("DDDD", "DDDD"): {(4, 4, 4, 4)},
    ("DDDD", "DDHH"): {(4, 4, 4, 4)},
    ("DDDD", "HHHH"): {(4, 4, 4, 4)},
    ("DDDD", "HHHS"): {(4, 4, 4, 4)},
    ("DDDD", "HHSS"): {(4, 4, 4, 4)},
    ("DDDD", "SSSS"): {(4, 4, 4, 4)},
    ("DDHH", "DDHH"): {(2, 2, 6, 6), (2, 4, 4, 6), (4, 4, 4, 4)},
    ("DDHH", "DDHS"): {(2, 4, 4, 6)},
    ("DDHH", "DDSS"): {(2, 2, 6, 6)},
    ("DDHH", "HHHH"): {(2, 2, 6, 6), (2, 4, 4, 6), (4, 4, 4, 4)},
    ("DDHH", "HHHS"): {(2, 2, 6, 6), (2, 4, 4, 6)},
    ("DDHH", "HHSS"): {(2, 2, 6, 6)},
    ("DDHS", "DDHS"): {(2, 2, 4, 8)},
    ("DDHS", "HHHH"): {(2, 2, 4, 8)},
    ("DDSS", "HHHS"): {(2, 2, 2, 10)},
    ("HHHH", "HHHH"): {(0, 0, 8, 8), (0, 4, 4, 8), (0, 4, 6, 6), (4, 4, 4, 4)},
    ("HHHH", "HHHS"): {(0, 4, 4, 8)},
    ("HHHH", "HHSS"): {(0, 0, 8, 8), (0, 4, 4, 8)},
    ("HHHH", "SSSS"): {(0, 0, 8, 8)},
    ("HHHS", "HHHS"): {(0, 0, 6, 10)},
    ("HHSS", "HHSS"): {(0, 0, 4, 12)},
    ("SSSS", "SSSS"): {(0, 0, 0, 16)},
    ("DDDH", "DDDH"): {(3, 3, 5, 5)},
    ("DDDH", "DHHH"): {(3, 3, 5, 5)},
    ("DDDH", "DHHS"): {(3, 3, 5, 5)},
    ("DDDS", "DDDS"): {(3, 3, 3, 7)},
    ("DDDS", "DHHH"): {(3, 3, 3, 7)},
    ("DHHH", "DHHH"): {(1, 3, 5, 7), (1, 5, 5, 5), (3, 3, 3, 7), (3, 3, 5, 5)},
    ("DHHH", "DHHS"): {(1, 3, 5, 7)},
    ("DHHS", "DHHS"): {(1, 3, 3, 9)},
}

# Uniform-type pairs that survive the line constraints alone (potential),
# before requiring all 140 coordinate quads.
STRONGLY_MAGIC_POTENTIAL_PAIRS = {
    ("DDDD", "DDDD"): {(4, 4, 4, 4)},
    ("DDDD", "HHHH"): {(4, 4, 4, 4)},
    ("DDDD", "SSSS"): {(4, 4, 4, 4)},
    ("HHHH", "HHHH"): {(0, 0, 8, 8), (0, 4, 4, 8), (0, 4, 6, 6), (4, 4, 4, 4)},
    ("HHHH", "SSSS"): {(0, 0, 8, 8)},
    ("SSSS", "SSSS"): {(0, 0, 0, 16)},
}

# ... and what strongly magic grids actually realize: the two HHHH/HHHH
# distributions (0,4,4,8) and (0,4,6,6) drop out.
STRONGLY_MAGIC_REALIZED_PAIRS = {
    ("DDDD", "DDDD"): {(4, 4, 4, 4)},
    ("DDDD", "HHHH"): {(4, 4, 4, 4)},
    ("DDDD", "SSSS"): {(4, 4, 4, 4)},
    ("HHHH", "HHHH"): {(0, 0, 8, 8), (4, 4, 4, 4)},
    ("HHHH", "SSSS"): {(0, 0, 8, 8)},
    ("SSSS", "SSSS"): {(0, 0, 0, 16)},
}

# Order-4 Latin squares: total, reduced, and ordered orthogonal pairs.
LATIN4_COUNT = 576          # A002860(4)
LATIN4_REDUCED_COUNT = 4    # A000315(4)
MOLS4_ORDERED_PAIRS = 6912

# A triple of order-4 Latin squares that does NOT assemble into distinct
# 64-deck cards (cards 0 and 21 each appear twice) ...
INCOMPATIBLE_LATIN_TRIPLE = (
    (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0),
    (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1),
    (0, 1, 2, 3, 1, 0, 3, 2, 3, 2, 0, 1, 2, 3, 1, 0),
)

# ... a triple that does ...
COMPATIBLE_LATIN_TRIPLE = (
    (0, 1, 2, 3, 1, 3, 0, 2, 2, 0, 3, 1, 3, 2, 1, 0),
    (0, 1, 3, 2, 2, 3, 1, 0, 3, 2, 0, 1, 1, 0, 2, 3),
    (0, 3, 1, 2, 3, 2, 0, 1, 2, 1, 3, 0, 1, 0, 2, 3),
)

# ... and three pairwise orthogonal squares.
ORTHOGONAL_LATIN_TRIPLE = (
    (0, 1, 2, 3, 1, 0, 3, 2, 2, 3, 0, 1, 3, 2, 1, 0),
    (0, 1, 2, 3, 2, 3, 0, 1, 3, 2, 1, 0, 1, 0, 3, 2),
    (0, 1, 2, 3, 3, 2, 1, 0, 1, 0, 3, 2, 2, 3, 0, 1),
)

# A 64-deck magic square that is not strongly magic: the coordinate quad
# (0,0),(1,3),(2,1),(3,2) picks cards 0, 13, 6, 9 which XOR to 2.
MAGIC_NOT_STRONG_EXAMPLE = (0, 4, 8, 12, 3, 5, 11, 13, 2, 6, 10, 14, 1, 7, 9, 15)

# A value grid whose rows and columns all XOR to zero but whose main
# diagonal does not.
SEMIMAGIC_GRID_EXAMPLE = (0, 1, 2, 3, 2, 3, 0, 1, 3, 0, 1, 2, 1, 2, 3, 0)

# A type-C semimagic square over the 64-card deck whose decomposition has
# low part A and high part B = rows (0,0,0,0 / 0,16,32,48) twice.
DECOMPOSITION_EXAMPLE = (0, 1, 2, 3, 4, 17, 32, 53, 8, 5, 6, 11, 12, 21, 36, 61)
