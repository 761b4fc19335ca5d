"""Arrays as they are printed, one string per block.

Each block is a rectangular excerpt of an infinite array, whitespace
separated.  Band rows are recovered with :func:`slkfrieze.frieze.parse_printed`;
the fixture tests re-parse these blocks and compare with the shipped data.
"""

PERIOD9 = """
  1   0   0   1  13  88 314  25   4   1   0   0
  2   1   0   0   1   7  25   2   1   2   1   0
138  72   1   0   0   1   4   1  49 138  72   1
389 203   3   1   0   0   1   2 138 389 203   3
203 106   2   3   1   0   0   1  72 203 106   2
  3   2   3  17   7   1   0   0   1   3   2   3
  1   3  17  97  40   6   1   0   0   1   3  17
  0   1   7  40  17   6  13   1   0   0   1   7
  0   0   1   6   6  25  88   7   1   0   0   1
"""

TAME_GENERIC = """
1 0 0 1 3 8 4 7 1 0 0
1 1 0 0 1 3 2 4 1 1 0
4 7 1 0 0 1 3 8 4 7 1
2 4 1 1 0 0 1 3 2 4 1
3 8 4 7 1 0 0 1 3 8 4
1 3 2 4 1 1 0 0 1 3 2
0 1 3 8 4 7 1 0 0 1 3
0 0 1 3 2 4 1 1 0 0 1
"""

TAME_NOT_GENERIC = """
 1  0  0  1  0  0  1  1  0  0
 1  1  0  0  1  1  1  1  1  0
 1  1  1  0  0  1  2  1  1  1
 1  0  0  1  0  0  1  1  0  0
 1  0 -1  1  1  0  0  1  0 -1
 0  1  0 -1  1  1  0  0  1  0
 0  0  1  0 -1  0  1  0  0  1
"""

WILD_PERIODIC = """
1 1 1 2 1 1 0 0
0 1 1 1 2 4 1 0
0 0 1 1 1 2 1 1
1 0 0 1 1 1 2 4
1 1 0 0 1 1 1 2
2 4 1 0 0 1 1 1
"""

SEGMENT_TEMPLATE = """
  1   4  a1  a2  a3  a4  a5  a6  a7   1   0   0   1   4  a1  a2  a3  a4  a5  a6  a7
  0   1  a8  a9 a10 a11 a12 a13 a14   1   1   0   0   1  a8  a9 a10 a11 a12 a13 a14
  0   0   1 a15 a16   4 a17 a18   4 a19 a20   1   0   0   1 a15 a16   4 a17 a18   4
  1   0   0   1   5 a21 a22 a23 a24 a25 a26 a27   1   0   0   1   5 a21 a22 a23 a24
  1   1   0   0   1 a28 a29 a30 a31 a32 a33 a18   1   1   0   0   1 a28 a29 a30 a31
a34 a35   1   0   0   1 a36 a37   4 a38 a39   4 a34 a35   1   0   0   1 a36 a37   4
a40 a41 a42   1   0   0   1   2 a43 a44 a45 a46 a40 a41 a42   1   0   0   1   2 a43
a47 a48 a49   1   1   0   0   1 a50 a51 a52 a53 a47 a48 a49   1   1   0   0   1 a50
a54 a55   4 a56 a57   1   0   0   1 a58  a1   4 a54 a55   4 a56 a57   1   0   0   1
a59 a60 a61 a62 a63 a64   1   0   0   1   2 a65 a59 a60 a61 a62 a63 a64   1   0   0
a66 a67 a68 a69 a70 a19   8   1   0   0   1 a71 a66 a67 a68 a69 a70 a19   8   1   0
a72 a21   4 a73 a74   4 a75 a76   1   0   0   1 a72 a21   4 a73 a74   4 a75 a76   1
"""

SEGMENT_0 = """
  1   4   9  60 160  29  45  18  20   1   0   0   1   4   9  60 160  29  45  18  20
  0   1   4  27  72  13  20   8   9   1   1   0   0   1   4  27  72  13  20   8   9
  0   0   1   7  19   4   8   3   4   4   7   1   0   0   1   7  19   4   8   3   4
  1   0   0   1   5   5  21   7  12  25  45   7   1   0   0   1   5   5  21   7  12
  1   1   0   0   1   2   9   3   5  10  18   3   1   1   0   0   1   2   9   3   5
  5   8   1   0   0   1   5   2   4   9  16   4   5   8   1   0   0   1   5   2   4
 21  35   5   1   0   0   1   2   7  20  35  12  21  35   5   1   0   0   1   2   7
 12  20   3   1   1   0   0   1   4  12  21   7  12  20   3   1   1   0   0   1   4
  8  13   4   7  16   1   0   0   1   5   9   4   8  13   4   7  16   1   0   0   1
  5   8   3   6  14   1   1   0   0   1   2   2   5   8   3   6  14   1   1   0   0
 20  32  11  21  49   4   8   1   0   0   1   7  20  32  11  21  49   4   8   1   0
  3   5   4  10  23   4  23   5   1   0   0   1   3   5   4  10  23   4  23   5   1
"""

SEGMENT_1 = """
    1     4    29    84   192    41   261    58    12     1     0     0     1     4    29    84   192    41   261    58    12
    0     1    12    35    80    17   108    24     5     1     1     0     0     1    12    35    80    17   108    24     5
    0     0     1     3     7     4    32     7     4    44    75     1     0     0     1     3     7     4    32     7     4
    1     0     0     1     5    49   437    95    68   833  1421    19     1     0     0     1     5    49   437    95    68
    1     1     0     0     1    18   161    35    25   306   522     7     1     1     0     0     1    18   161    35    25
   81   128     1     0     0     1     9     2     4    61   104     4    81   128     1     0     0     1     9     2     4
 3317  5243    41     1     0     0     1     2   107  1804  3075   148  3317  5243    41     1     0     0     1     2   107
 1860  2940    23     1     1     0     0     1    60  1012  1725    83  1860  2940    23     1     1     0     0     1    60
  112   177     4   123   280     1     0     0     1    17    29     4   112   177     4   123   280     1     0     0     1
 1053  1664    47  1598  3638    13     1     0     0     1     2    34  1053  1664    47  1598  3638    13     1     0     0
 3564  5632   159  5405 12305    44     8     1     0     0     1   115  3564  5632   159  5405 12305    44     8     1     0
   31    49     4   170   387     4   411    89     1     0     0     1    31    49     4   170   387     4   411    89     1
"""

# the twelve two-row pieces A_1 .. A_12 (k=3, n=5)
PIECES = (
    """
    1 1 1 1 1 1 1 0
    0 1 2 2 1 1 2 1
    """,
    """
    1 1 1 1 1 1 1 0
    0 1 2 2 1 2 4 1
    """,
    """
    1 1 1 1 1 2 1 0
    0 1 2 2 1 2 2 1
    """,
    """
    1 1 2 1 1 2 1 0
    0 1 4 2 1 2 2 1
    """,
    """
    1 2 1 1 1 1 1 0
    0 1 1 2 1 1 2 1
    """,
    """
    1 2 1 1 2 1 1 0
    0 1 1 1 1 1 2 1
    """,
    """
    1 2 1 1 2 2 1 0
    0 1 1 1 1 1 1 1
    """,
    """
    1 2 2 1 1 2 1 0
    0 1 2 2 1 2 2 1
    """,
    """
    1 2 2 1 2 2 1 0
    0 1 2 1 1 1 1 1
    """,
    """
    1 2 2 1 2 2 1 0
    0 1 2 1 1 2 2 1
    """,
    """
    1 2 2 1 2 4 1 0
    0 1 2 1 1 2 1 1
    """,
    """
    1 4 2 1 2 2 1 0
    0 1 1 1 1 1 1 1
    """,
)
