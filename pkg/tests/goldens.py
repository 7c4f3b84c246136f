"""Published reference data for the 2x2x2 case, transcribed by hand."""

DEGREE2_COLUMNS = ["00011000", "00100100", "01000010", "10000001"]

DEGREE2_ROWS = ["01100000", "10010000", "01001000", "10000100", "00101000", "10000010"]

DEGREE2_MATRIX = [
    [0, 1, 1, 0],
    [1, 0, 0, 1],
    [1, 0, 1, 0],
    [0, 1, 0, 1],
    [1, 1, 0, 0],
    [0, 0, 1, 1],
]

DEGREE4_COLUMNS = [
    "00022000", "00111100", "00200200", "01011010", "01100110", "01101001",
    "02000020", "10010110", "10011001", "10100101", "11000011", "20000002",
]

DEGREE4_ROWS = [
    "01111000", "01200100", "02100010", "10021000",
    "10110100", "11010010", "11100001", "20010001",
    "01012000", "01101100", "02001010", "10011100",
    "10100200", "11000110", "11001001", "20000101",
    "00112000", "00201100", "01101010", "10011010",
    "10100110", "10101001", "11000020", "20000011",
]

DEGREE4_GRID = """\
. 1 . 1 . 1 . . . . . .
. . 2 . 1 . . . . . . .
. . . . 1 . 2 . . . . .
2 . . . . . . . 1 . . .
. 1 . . . . . 1 . 1 . .
. . . 1 . . . 1 . . 1 .
. . . . . 1 . . . 1 1 .
. . . . . . . . 1 . . 2
2 . . 1 . . . . . . . .
. 1 . . 1 1 . . . . . .
. . . 1 . . 2 . . . . .
. 1 . . . . . 1 1 . . .
. . 2 . . . . . . 1 . .
. . . . 1 . . 1 . . 1 .
. . . . . 1 . . 1 . 1 .
. . . . . . . . . 1 . 2
2 1 . . . . . . . . . .
. 1 2 . . . . . . . . .
. . . 1 1 1 . . . . . .
. . . 1 . . . 1 1 . . .
. . . . 1 . . 1 . 1 . .
. . . . . 1 . . 1 1 . .
. . . . . . 2 . . . 1 .
. . . . . . . . . . 1 2"""


def grid_to_ints(grid):
    return [[0 if c == "." else int(c) for c in line.split()] for line in grid.splitlines()]


DEGREE4_MATRIX = grid_to_ints(DEGREE4_GRID)

# nonzero rows of the row canonical form: identity on the first 11 columns,
# last column below
DEGREE4_RREF_LAST_COLUMN = [-1, 2, -1, 2, 2, -4, -1, -4, 2, 2, 2]

DEGREE4_KERNEL = [1, -2, 1, -2, -2, 4, 1, 4, -2, -2, -2, 1]

# Cayley's hyperdeterminant as (coefficient, factors with 0-based subscripts)
HYPERDETERMINANT_TERMS = [
    (1, ["000", "000", "111", "111"]),
    (1, ["001", "001", "110", "110"]),
    (1, ["010", "010", "101", "101"]),
    (1, ["011", "011", "100", "100"]),
    (-2, ["000", "001", "110", "111"]),
    (-2, ["000", "010", "101", "111"]),
    (-2, ["000", "011", "100", "111"]),
    (-2, ["001", "010", "101", "110"]),
    (-2, ["001", "011", "100", "110"]),
    (-2, ["010", "011", "100", "101"]),
    (4, ["000", "011", "101", "110"]),
    (4, ["001", "010", "100", "111"]),
]

CELL_ORDER = ["000", "001", "010", "011", "100", "101", "110", "111"]


def hyperdeterminant_exponents():
    """``{exponent tuple: coefficient}`` built directly from the term list."""
    out = {}
    for coeff, factors in HYPERDETERMINANT_TERMS:
        exps = [0] * 8
        for f in factors:
            exps[CELL_ORDER.index(f)] += 1
        out[tuple(exps)] = coeff
    return out
