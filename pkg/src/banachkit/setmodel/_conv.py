import numpy as np
from scipy import signal


def diff_counts(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Pair counts for differences: ``out[i + (len(b) - 1 - j)] += a[i] * b[j]``.

    With ``a`` on [a0, a1] and ``b`` on [b0, b1] the output covers
    [a0 - b1, a1 - b0].  Counts are exact integers.
    """
    if a.size == 0 or b.size == 0:
        return np.zeros(max(a.size + b.size - 1, 0), dtype=np.int64)
    out = signal.convolve(a.astype(np.float64), b[::-1].astype(np.float64), method="auto")
    return np.rint(out).astype(np.int64)


def lag_counts(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """``out[j] = sum_i a[i + j] * b[i]`` for ``j = 0 .. len(a) - len(b)``."""
    out = signal.correlate(a.astype(np.float64), b.astype(np.float64), mode="valid", method="auto")
    return np.rint(out).astype(np.int64)
