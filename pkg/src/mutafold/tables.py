"""Transcribed matrix tables: block matrix options, their covers, and the
exceptional unfoldings of the non-decomposable mutation-finite types.

Raw integer matrices only; interpretation lives in blocks.py and
unfolding.py.  A self-test in the suite re-verifies the defining column-sum
and sign conditions for every row, since transcription is the dominant error
source.  The one deliberate divergence from the printed source: the cover in
the V2~ regular row is not sign-consistent as printed; the upper triangle
together with skew-symmetry and the column-sum condition forces the version
below.
"""

# -- regular options: (base, cover) per new block tag ------------------------

REGULAR_NEW = {
    "IIIa~": (
        [[0, -1], [2, 0]],
        [[0, -1, -1], [1, 0, 0], [1, 0, 0]],
    ),
    "IIIb~": (
        [[0, -2], [1, 0]],
        [[0, 0, -1], [0, 0, -1], [1, 1, 0]],
    ),
    "IV~": (
        [[0, 1, -1], [-1, 0, 1], [2, -2, 0]],
        [[0, 1, -1, -1], [-1, 0, 1, 1], [1, -1, 0, 0], [1, -1, 0, 0]],
    ),
    "V1~": (
        [[0, 1, -1, 1], [-1, 0, 1, 0], [2, -2, 0, -2], [-1, 0, 1, 0]],
        [
            [0, 1, -1, -1, 1],
            [-1, 0, 1, 1, 0],
            [1, -1, 0, 0, -1],
            [1, -1, 0, 0, -1],
            [-1, 0, 1, 1, 0],
        ],
    ),
    "V2~": (
        [[0, 2, -2, 2], [-1, 0, 1, 0], [1, -1, 0, -1], [-1, 0, 1, 0]],
        [
            [0, 0, 1, -1, 1],
            [0, 0, 1, -1, 1],
            [-1, -1, 0, 1, 0],
            [1, 1, -1, 0, -1],
            [-1, -1, 0, 1, 0],
        ],
    ),
    "V12~": (
        [[0, 2, -2], [-1, 0, 1], [2, -2, 0]],
        [
            [0, 0, 1, -1, -1],
            [0, 0, 1, -1, -1],
            [-1, -1, 0, 1, 1],
            [1, 1, -1, 0, 0],
            [1, 1, -1, 0, 0],
        ],
    ),
    "VI~": (
        [
            [0, 1, 0, 1, -1],
            [-1, 0, -1, 0, 1],
            [0, 1, 0, 1, -1],
            [-1, 0, -1, 0, 1],
            [2, -2, 2, -2, 0],
        ],
        [
            [0, 1, 0, 1, -1, -1],
            [-1, 0, -1, 0, 1, 1],
            [0, 1, 0, 1, -1, -1],
            [-1, 0, -1, 0, 1, 1],
            [1, -1, 1, -1, 0, 0],
            [1, -1, 1, -1, 0, 0],
        ],
    ),
}

# -- irregular options: (base, cover, (shared, black, red)) ------------------
# shared/black/red partition the cover indices into the vertices common to
# both halves of the unfolding and the two same-type halves.

IRREGULAR_NEW = {
    "IIIa~": [
        (
            [[0, -2], [1, 0]],
            [[0, 0, -1], [0, 0, -1], [1, 1, 0]],
            ((3,), (1,), (2,)),
        ),
    ],
    "IIIb~": [
        (
            [[0, -1], [2, 0]],
            [[0, -1, -1], [1, 0, 0], [1, 0, 0]],
            ((1,), (2,), (3,)),
        ),
    ],
    "IV~": [
        (
            [[0, 1, -2], [-1, 0, 2], [1, -1, 0]],
            [
                [0, 0, 1, 0, -1],
                [0, 0, 0, 1, -1],
                [-1, 0, 0, 0, 1],
                [0, -1, 0, 0, 1],
                [1, 1, -1, -1, 0],
            ],
            ((5,), (1, 3), (2, 4)),
        ),
    ],
    "V1~": [
        (
            [[0, 1, -2, 1], [-1, 0, 2, 0], [1, -1, 0, -1], [-1, 0, 2, 0]],
            [
                [0, 0, 1, 0, -1, 1, 0],
                [0, 0, 0, 1, -1, 0, 1],
                [-1, 0, 0, 0, 1, 0, 0],
                [0, -1, 0, 0, 1, 0, 0],
                [1, 1, -1, -1, 0, -1, -1],
                [-1, 0, 0, 0, 1, 0, 0],
                [0, -1, 0, 0, 1, 0, 0],
            ],
            ((5,), (1, 3, 6), (2, 4, 7)),
        ),
    ],
    "V2~": [
        (
            [[0, 1, -1, 1], [-2, 0, 1, 0], [2, -1, 0, -1], [-2, 0, 1, 0]],
            [
                [0, 1, 1, -1, -1, 1, 1],
                [-1, 0, 0, 1, 0, 0, 0],
                [-1, 0, 0, 0, 1, 0, 0],
                [1, -1, 0, 0, 0, -1, 0],
                [1, 0, -1, 0, 0, 0, -1],
                [-1, 0, 0, 1, 0, 0, 0],
                [-1, 0, 0, 0, 1, 0, 0],
            ],
            ((1,), (2, 4, 6), (3, 5, 7)),
        ),
    ],
    "V12~": [
        (
            [[0, 1, -1], [-2, 0, 1], [4, -2, 0]],
            [
                [0, 1, 1, -1, -1, -1, -1],
                [-1, 0, 0, 1, 0, 1, 0],
                [-1, 0, 0, 0, 1, 0, 1],
                [1, -1, 0, 0, 0, 0, 0],
                [1, 0, -1, 0, 0, 0, 0],
                [1, -1, 0, 0, 0, 0, 0],
                [1, 0, -1, 0, 0, 0, 0],
            ],
            ((1,), (2, 4, 6), (3, 5, 7)),
        ),
        (
            [[0, 2, -4], [-1, 0, 2], [1, -1, 0]],
            [
                [0, 0, 0, 0, 1, 0, -1],
                [0, 0, 0, 0, 0, 1, -1],
                [0, 0, 0, 0, 1, 0, -1],
                [0, 0, 0, 0, 0, 1, -1],
                [-1, 0, -1, 0, 0, 0, 1],
                [0, -1, 0, -1, 0, 0, 1],
                [1, 1, 1, 1, -1, -1, 0],
            ],
            ((7,), (1, 3, 5), (2, 4, 6)),
        ),
        (
            [[0, 1, -2], [-2, 0, 2], [2, -1, 0]],
            [[0, 1, 1, -2], [-1, 0, 0, 1], [-1, 0, 0, 1], [2, -1, -1, 0]],
            ((1, 4), (2,), (3,)),
        ),
    ],
    "VI~": [],
}

# irregular rows usable by the red/black non-local construction: both ĨII
# orientations and the last V12~ row
NONLOCAL_IRREGULAR = {
    ("IIIa~", 0),
    ("IIIb~", 0),
    ("V12~", 2),
}

# -- exceptional unfoldings (non-decomposable mutation-finite types) ---------
# (type tag, variant label, base, cover, mutation class tag of the cover)

EXCEPTIONAL_UNFOLDINGS = [
    (
        "G2~",
        "G2~ (a)",
        [[0, 3, 0], [-1, 0, 1], [0, -1, 0]],
        [
            [0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0],
            [0, 0, 0, 1, 0],
            [-1, -1, -1, 0, 1],
            [0, 0, 0, -1, 0],
        ],
        "block-decomposable",
    ),
    (
        "G2~",
        "G2~ (b)",
        [[0, 1, 0], [-3, 0, 1], [0, -1, 0]],
        [
            [0, 1, 1, 1, 0, 0, 0],
            [-1, 0, 0, 0, 1, 0, 0],
            [-1, 0, 0, 0, 0, 1, 0],
            [-1, 0, 0, 0, 0, 0, 1],
            [0, -1, 0, 0, 0, 0, 0],
            [0, 0, -1, 0, 0, 0, 0],
            [0, 0, 0, -1, 0, 0, 0],
        ],
        "E6~",
    ),
    (
        "F4",
        "F4",
        [[0, 1, 0, 0], [-1, 0, 2, 0], [0, -1, 0, 1], [0, 0, -1, 0]],
        [
            [0, 0, 1, 0, 0, 0],
            [0, 0, 0, 1, 0, 0],
            [-1, 0, 0, 0, 1, 0],
            [0, -1, 0, 0, 1, 0],
            [0, 0, -1, -1, 0, 1],
            [0, 0, 0, 0, -1, 0],
        ],
        "E6",
    ),
    (
        "G2(*,+)",
        "G2(1,3) / G2(3,1)",
        [[0, 1, 0, 0], [-1, 0, 3, -3], [0, -1, 0, 2], [0, 1, -2, 0]],
        [
            [0, 0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
            [-1, 0, 0, 0, 0, 0, 1, -1],
            [0, -1, 0, 0, 0, 0, 1, -1],
            [0, 0, -1, 0, 0, 0, 1, -1],
            [0, 0, 0, -1, -1, -1, 0, 2],
            [0, 0, 0, 1, 1, 1, -2, 0],
        ],
        "E6(1,1)",
    ),
    (
        "G2(*,*)",
        "G2(3,3)",
        [[0, -1, 2, -1], [1, 0, -1, 0], [-2, 1, 0, 1], [3, 0, -3, 0]],
        [
            [0, -1, 2, -1, -1, -1],
            [1, 0, -1, 0, 0, 0],
            [-2, 1, 0, 1, 1, 1],
            [1, 0, -1, 0, 0, 0],
            [1, 0, -1, 0, 0, 0],
            [1, 0, -1, 0, 0, 0],
        ],
        "block-decomposable",
    ),
    (
        "G2(*,*)",
        "G2(1,1)",
        [[0, -1, 2, -3], [1, 0, -1, 0], [-2, 1, 0, 3], [1, 0, -1, 0]],
        [
            [0, 0, 0, -1, 0, 0, 1, 0, 1, -1],
            [0, 0, 0, 0, -1, 0, 1, 1, 0, -1],
            [0, 0, 0, 0, 0, -1, 0, 1, 1, -1],
            [1, 0, 0, 0, 0, 0, -1, 0, 0, 0],
            [0, 1, 0, 0, 0, 0, 0, -1, 0, 0],
            [0, 0, 1, 0, 0, 0, 0, 0, -1, 0],
            [-1, -1, 0, 1, 0, 0, 0, 0, 0, 1],
            [0, -1, -1, 0, 1, 0, 0, 0, 0, 1],
            [-1, 0, -1, 0, 0, 1, 0, 0, 0, 1],
            [1, 1, 1, 0, 0, 0, -1, -1, -1, 0],
        ],
        "E8(1,1)",
    ),
    (
        "F4~",
        "F4~ (a)",
        [
            [0, 1, 0, 0, 0],
            [-1, 0, 2, 0, 0],
            [0, -1, 0, 1, 0],
            [0, 0, -1, 0, 1],
            [0, 0, 0, -1, 0],
        ],
        [
            [0, 0, 1, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0],
            [-1, 0, 0, 0, 1, 0, 0],
            [0, -1, 0, 0, 1, 0, 0],
            [0, 0, -1, -1, 0, 1, 0],
            [0, 0, 0, 0, -1, 0, 1],
            [0, 0, 0, 0, 0, -1, 0],
        ],
        "E6~",
    ),
    (
        "F4~",
        "F4~ (b)",
        [
            [0, 1, 0, 0, 0],
            [-1, 0, 1, 0, 0],
            [0, -2, 0, 1, 0],
            [0, 0, -1, 0, 1],
            [0, 0, 0, -1, 0],
        ],
        [
            [0, 1, 0, 0, 0, 0, 0, 0],
            [-1, 0, 1, 1, 0, 0, 0, 0],
            [0, -1, 0, 0, 1, 0, 0, 0],
            [0, -1, 0, 0, 0, 1, 0, 0],
            [0, 0, -1, 0, 0, 0, 1, 0],
            [0, 0, 0, -1, 0, 0, 0, 1],
            [0, 0, 0, 0, -1, 0, 0, 0],
            [0, 0, 0, 0, 0, -1, 0, 0],
        ],
        "E7~",
    ),
    (
        "F4(*,+)",
        "F4(1,2) / F4(2,1)",
        [
            [0, 1, 0, 0, 0, 0],
            [-1, 0, 1, 0, 0, 0],
            [0, -1, 0, 2, -2, 0],
            [0, 0, -1, 0, 2, -1],
            [0, 0, 1, -2, 0, 1],
            [0, 0, 0, 1, -1, 0],
        ],
        [
            [0, 0, 1, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0, 0],
            [-1, 0, 0, 0, 1, 0, 0, 0, 0],
            [0, -1, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, -1, 0, 0, 0, 1, -1, 0],
            [0, 0, 0, -1, 0, 0, 1, -1, 0],
            [0, 0, 0, 0, -1, -1, 0, 2, -1],
            [0, 0, 0, 0, 1, 1, -2, 0, 1],
            [0, 0, 0, 0, 0, 0, 1, -1, 0],
        ],
        "E7(1,1)",
    ),
    (
        "F4(*,*)",
        "F4(2,2)",
        [
            [0, 1, 0, 0, 0, 0],
            [-1, 0, 1, -1, 0, 0],
            [0, -1, 0, 2, -1, 0],
            [0, 1, -2, 0, 1, 0],
            [0, 0, 2, -2, 0, -1],
            [0, 0, 0, 0, 1, 0],
        ],
        [
            [0, 1, 0, 0, 0, 0, 0, 0],
            [-1, 0, 1, -1, 0, 0, 0, 0],
            [0, -1, 0, 2, -1, -1, 0, 0],
            [0, 1, -2, 0, 1, 1, 0, 0],
            [0, 0, 1, -1, 0, 0, -1, 0],
            [0, 0, 1, -1, 0, 0, 0, -1],
            [0, 0, 0, 0, 1, 0, 0, 0],
            [0, 0, 0, 0, 0, 1, 0, 0],
        ],
        "E6(1,1)",
    ),
    (
        "F4(*,*)",
        "F4(1,1)",
        [
            [0, 1, 0, 0, 0, 0],
            [-1, 0, 1, -1, 0, 0],
            [0, -1, 0, 2, -2, 0],
            [0, 1, -2, 0, 2, 0],
            [0, 0, 1, -1, 0, -1],
            [0, 0, 0, 0, 1, 0],
        ],
        [
            [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
            [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
            [-1, 0, 0, 0, 1, 0, -1, 0, 0, 0],
            [0, -1, 0, 0, 0, 1, 0, -1, 0, 0],
            [0, 0, -1, 0, 0, 0, 1, 1, -1, 0],
            [0, 0, 0, -1, 0, 0, 1, 1, -1, 0],
            [0, 0, 1, 0, -1, -1, 0, 0, 1, 0],
            [0, 0, 0, 1, -1, -1, 0, 0, 1, 0],
            [0, 0, 0, 0, 1, 1, -1, -1, 0, -1],
            [0, 0, 0, 0, 0, 0, 0, 0, 1, 0],
        ],
        "E8(1,1)",
    ),
]

# -- worked gluing examples (used by the acceptance suite) -------------------

LOCAL_EXAMPLE_BASE = [
    [0, 1, -1, 0],
    [-2, 0, 2, 0],
    [1, -1, 0, 1],
    [0, 0, -2, 0],
]
LOCAL_EXAMPLE_COVER = [
    [0, 1, 1, -1, 0, 0],
    [-1, 0, 0, 1, 0, 0],
    [-1, 0, 0, 1, 0, 0],
    [1, -1, -1, 0, 1, 1],
    [0, 0, 0, -1, 0, 0],
    [0, 0, 0, -1, 0, 0],
]

NONLOCAL_EXAMPLE_BASE = [
    [0, 1, 0, 0],
    [-2, 0, 1, 0],
    [0, -1, 0, -2],
    [0, 0, 1, 0],
]
NONLOCAL_EXAMPLE_COVER = [
    [0, 1, 1, 0, 0, 0],
    [-1, 0, 0, 1, 0, 0],
    [-1, 0, 0, 0, 1, 0],
    [0, -1, 0, 0, 0, -1],
    [0, 0, -1, 0, 0, -1],
    [0, 0, 0, 1, 1, 0],
]

# -- small worked unfoldings ---------------------------------------------

SIMPLE_UNFOLDING_BASE = [[0, -1], [2, 0]]
SIMPLE_UNFOLDING_COVER = [[0, -1, -1], [1, 0, 0], [1, 0, 0]]

REJECTED_UNFOLDING_BASE = [[0, 2, -2], [-1, 0, 1], [2, -2, 0]]
REJECTED_UNFOLDING_COVER = [
    [0, 0, 1, -2, 0],
    [0, 0, 1, 0, -2],
    [-1, -1, 0, 1, 1],
    [2, 0, -1, 0, 0],
    [0, 2, -1, 0, 0],
]

G2_D4_BASE = [[0, 1], [-3, 0]]
G2_D4_COVER = [
    [0, 1, 1, 1],
    [-1, 0, 0, 0],
    [-1, 0, 0, 0],
    [-1, 0, 0, 0],
]
