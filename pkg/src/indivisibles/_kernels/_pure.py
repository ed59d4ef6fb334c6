"""Pure-Python/numpy fallback kernels, bit-identical with the compiled lane.

All integer work is uint64 arithmetic mod 2^64 (numpy wraps silently for
arrays), and mixed states below 2^53 convert to float64 exactly, so the two
lanes agree to the last bit.
"""

import numpy as np

_GAMMA = np.uint64(0x9E3779B97F4A7C15)
_MIX1 = np.uint64(0xBF58476D1CE4E5B9)
_MIX2 = np.uint64(0x94D049BB133111EB)
_SCALE = 1.0 / 9007199254740992.0  # 2^-53


def fill_uniform01(out, seed, start):
    """Fill ``out`` with stream values start .. start+len(out)-1 for ``seed``."""
    n = out.shape[0]
    z = np.uint64(seed) + (np.arange(1, n + 1, dtype=np.uint64) + np.uint64(start)) * _GAMMA
    z = (z ^ (z >> np.uint64(30))) * _MIX1
    z = (z ^ (z >> np.uint64(27))) * _MIX2
    z ^= z >> np.uint64(31)
    out[:] = (z >> np.uint64(11)).astype(np.float64) * _SCALE


def ordered_sum(values, init=0.0):
    """Strictly sequential left-to-right sum, seeded with ``init``."""
    acc = float(init)
    for v in np.asarray(values, dtype=np.float64).tolist():
        acc = acc + v
    return acc
