"""Vector-set helpers for tests: subspaces as frozensets of tuples."""
from itertools import product

import numpy as np


def vectors(F, n):
    return [tuple(v) for v in product(range(F.q), repeat=n)]


def span_set(F, rows, n):
    rows = [np.asarray(r, dtype=np.int64) for r in rows]
    out = set()
    for coeffs in product(range(F.q), repeat=len(rows)):
        v = np.zeros(n, dtype=np.int64)
        for c, r in zip(coeffs, rows):
            v = F.add(v, F.mul(c, r))
        out.add(tuple(int(x) for x in v))
    return frozenset(out)


def as_set(S):
    return span_set(S.spec, list(S.basis), S.ambient_dim)


def dot(F, a, b):
    acc = 0
    for x, y in zip(a, b):
        acc = F.add(acc, F.mul(int(x), int(y)))
    return int(acc)
