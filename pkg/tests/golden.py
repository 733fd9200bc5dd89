"""Frozen reference data for the test suite.

OEIS sequence prefixes plus values cross-computed once with independent
methods (brute-force simulation under several firing orders, direct
enumeration) and frozen here so the library is never checked against
itself.
"""

# The full arrival table for n=4: (index, y_min, values).
EXAMPLE_TABLE_N4 = (
    (0, 0, (16,)),
    (1, 0, (8, 8)),
    (2, 0, (4, 8, 4)),
    (3, 0, (2, 6, 6, 2)),
    (4, 0, (1, 4, 6, 4, 1)),
    (5, 1, (2, 5, 5, 2)),
    (6, 1, (1, 3, 4, 3, 1)),
    (7, 2, (1, 3, 3, 1)),
    (8, 3, (1, 2, 1)),
    (9, 4, (1, 1)),
)

# Distance distributions.
D4 = (2, 1, 2, 3, 0, 3, 2, 1, 2)
D15 = (
    545, 517, 489, 461, 433, 406, 380, 355, 332, 310,
    290, 271, 254, 253, 272, 282, 292, 300, 289, 309,
    312, 299, 353, 358, 389, 411, 425, 439, 474, 495,
    514, 437, 433, 427, 458, 426, 423, 407, 380, 360,
    321, 277, 232, 186, 108, 0, 108, 186, 232, 277,
    321, 360, 380, 407, 423, 426, 458, 427, 433, 437,
    514, 495, 474, 439, 425, 411, 389, 358, 353, 299,
    312, 309, 289, 300, 292, 282, 272, 253, 254, 271,
    290, 310, 332, 355, 380, 406, 433, 461, 489, 517,
    545,
)

# Sequence prefixes (see the OEIS ids in chipfire.sequences).
TOTAL_FIRINGS = (0, 1, 5, 15, 52, 163, 458, 1359, 4296, 12890, 38570)
NONZERO_ROWS = (1, 2, 4, 6, 10, 16, 24, 38, 60, 92, 144, 226, 362, 570, 906, 1430)
LONGEST_ROW_LENGTHS = (1, 2, 3, 4, 5, 6, 7, 8, 10, 13, 15, 19, 24, 30, 37, 46, 58, 73)
MINIMAL_ROW_SUMS = (2, 4, 8, 12, 18, 24, 32, 40, 50)  # j = 1..9
HALF_NONZERO_ROWS_10 = (1, 2, 3, 5, 8, 12, 19, 30, 46, 72)  # n = 1..10

# Row-length profile pieces for n=9: lengths 1..10, these 13 midsection
# values, 57 rows alternating 12/13 starting at 12, then 13 down to 2.
N9_MIDSECTION_LENGTHS = (9, 10, 11, 10, 11, 10, 11, 12, 11, 12, 11, 12, 11)


def n9_profile() -> tuple[int, ...]:
    lengths = list(range(1, 11))
    lengths += list(N9_MIDSECTION_LENGTHS)
    lengths += [12 if k % 2 == 0 else 13 for k in range(57)]
    lengths += list(range(13, 1, -1))
    return tuple(lengths)


# Landmark rows for n=11.
N11_TOP_LAST = (1, 11, 55, 165, 330, 462, 462, 330, 165, 55, 11, 1)
N11_LONGEST = (
    1, 6, 18, 38, 66, 102, 143, 181, 208, 218,
    208, 181, 143, 102, 66, 38, 18, 6, 1,
)
N11_LONGEST_FIRST_INDEX = 48  # first row of length 19, frozen from a scan
N11_BOTTOM_FIRST = (1, 3, 5, 7, 9, 11, 13, 15, 17, 18, 17, 15, 13, 11, 9, 7, 5, 3, 1)

# First differences of the landmark rows.
N11_TOP_LAST_DIFF = (1, 10, 44, 110, 165, 132, 0, -132, -165, -110, -44, -10, -1)
N11_LONGEST_DIFF = (
    1, 5, 12, 20, 28, 36, 41, 38, 27, 10,
    -10, -27, -38, -41, -36, -28, -20, -12, -5, -1,
)
N11_BOTTOM_FIRST_DIFF = (
    1, 2, 2, 2, 2, 2, 2, 2, 2, 1,
    -1, -2, -2, -2, -2, -2, -2, -2, -2, -1,
)
N11_BOTTOM_FIRST_SIGNS = "+" + "0" * 7 + "---" + "0" * 7 + "+"


def diff_top_rows(n: int) -> tuple[tuple[int, ...], ...]:
    """Difference rows 1..5 of the table for ``2**n`` chips, n > 3."""
    q = 1 << (n - 4)
    return (
        (16 * q, -16 * q),
        (8 * q, 0, -8 * q),
        (4 * q, 4 * q, -4 * q, -4 * q),
        (2 * q, 4 * q, 0, -4 * q, -2 * q),
        (q, 3 * q, 2 * q, -2 * q, -3 * q, -q),
    )


def diff_max_prefix(n: int) -> tuple[int, ...]:
    """Largest absolute entries of difference rows 1..5, n > 3."""
    return (1 << n, 1 << (n - 1), 1 << (n - 2), 1 << (n - 2), 3 << (n - 4))
