"""Pure-Python (numpy) kernels; the reference the compiled core must match."""
import numpy as np


def rref_inplace(A, spec):
    """Reduce the int64 code array ``A`` to reduced row echelon form in place.

    Returns ``(rank, pivots)``; rows past ``rank`` end up zero.
    """
    rows, cols = A.shape
    r = 0
    pivots = []
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(A[r:, c])
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        lead = int(A[r, c])
        if lead != 1:
            A[r] = spec.mul(int(spec.inv(lead)), A[r])
        others = np.flatnonzero(A[:, c])
        others = others[others != r]
        if others.size:
            factors = A[others, c]
            A[others] = spec.sub(A[others], spec.mul(factors[:, None], A[r][None, :]))
        pivots.append(c)
        r += 1
    return r, pivots
