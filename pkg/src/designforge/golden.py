"""Published example instances reproduced by the `reproduce` command.

Each entry freezes the full weight enumerator of one worked example; the
two moment entries pin the cyclic relatives whose duals have no words of
weight below 7.
"""

from __future__ import annotations

EXAMPLES: dict[str, dict] = {
    "3.3": {
        "family": "c1",
        "s": 3,
        "l": None,
        "params": [64, 19, 16],
        "enumerator": {0: 1, 16: 252, 24: 37632, 28: 107520, 32: 233478,
                       36: 107520, 40: 37632, 48: 252, 64: 1},
    },
    "3.4": {
        "family": "c1",
        "s": 4,
        "l": None,
        "params": [256, 25, 96],
        "enumerator": {0: 1, 96: 17136, 112: 2437120, 120: 6754304, 128: 15137310,
                       136: 6754304, 144: 2437120, 160: 17136, 256: 1},
    },
    "m4": {
        "family": "c1",
        "s": 2,
        "l": None,
        "params": [16, 11, 4],
        "enumerator": {0: 1, 4: 140, 6: 448, 8: 870, 10: 448, 12: 140, 16: 1},
    },
    "3.6": {
        "family": "c2",
        "s": 2,
        "l": 1,
        "params": [16, 11, 4],
        "enumerator": {0: 1, 4: 140, 6: 448, 8: 870, 10: 448, 12: 140, 16: 1},
    },
    "3.7": {
        "family": "c2",
        "s": 3,
        "l": 2,
        "params": [64, 16, 24],
        "enumerator": {0: 1, 24: 5040, 28: 12544, 32: 30366, 36: 12544, 40: 5040, 64: 1},
    },
    "3.8": {
        "family": "c2",
        "s": 3,
        "l": 1,
        "params": [64, 16, 16],
        "enumerator": {0: 1, 16: 84, 24: 3360, 28: 17920, 32: 22806,
                       36: 17920, 40: 3360, 48: 84, 64: 1},
    },
}

# (id, s, n, k): cyclic relatives whose first seven power moments must hold
PLESS_CASES = [
    ("pless-s3", 3, 63, 18),
    ("pless-s4", 4, 255, 24),
]
