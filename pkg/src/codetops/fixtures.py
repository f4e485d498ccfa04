"""Built-in worked examples.

Each builder returns a :class:`Fixture` with the generator matrix and the
reference data quoted for that example (subspaces are given as coefficient
rows against the generator rows v_1, v_2, ...).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .errors import BadArgs
from .field import FieldSpec, field_of_order, make_field
from .matspace import MatrixGF, projective_points


@dataclass
class Fixture:
    name: str
    M: MatrixGF
    k: int
    data: dict = field(default_factory=dict)

    @property
    def spec(self) -> FieldSpec:
        return self.M.spec


def example1() -> Fixture:
    F = make_field(3)
    M = MatrixGF(F, [
        [1, 0, 0, 1, 1, 0, 1, 1, 1, 0, 1, 1],
        [0, 1, 0, 1, 0, 1, 1, 2, 0, 1, 1, 2],
        [0, 0, 1, 0, 1, 1, 1, 0, 2, 2, 2, 1],
    ])
    member = MatrixGF(F, [
        [1, 1, 0, 2, 1, 1, 2, 0, 1, 1, 2, 0],
        [1, 0, 1, 1, 2, 1, 2, 1, 0, 2, 0, 2],
    ])
    return Fixture("example1", M, 2, {"member": member, "dim_w": 1})


def _complement_generator(F: FieldSpec, d: int, excluded) -> MatrixGF:
    """Columns: every normalized projective point of GF(q)^d except ``excluded``, in order."""
    excluded = {tuple(int(x) for x in w) for w in excluded}
    cols = [w for w in projective_points(F, d) if w not in excluded]
    return MatrixGF(F, np.array(cols, dtype=np.int64).T)


def example2() -> Fixture:
    F = make_field(3)
    w = [(1, 2, 1, 2, 1, 2), (0, 1, 0, 1, 0, 1), (1, 0, 1, 0, 1, 0), (1, 1, 1, 1, 1, 1)]
    M = _complement_generator(F, 6, w)
    common = [(1, 0, 0, 0, 2, 0), (0, 1, 0, 0, 0, 2), (0, 0, 1, 0, 2, 0), (0, 0, 0, 1, 0, 2)]
    extra = {0: (1, 1, 0, 0, 0, 0), 1: (1, 0, 0, 0, 0, 0), 2: (0, 1, 0, 0, 0, 0), 3: (1, 2, 0, 0, 0, 0)}
    return Fixture("example2", M, 5, {
        "w": w,
        "w_perp": common,
        "common": common,
        "members": [common + [extra[i]] for i in range(4)],
        "dim_w": 2,
    })


def example3() -> Fixture:
    F = make_field(2)
    w = [(1, 0, 1, 0, 1, 0), (0, 1, 0, 1, 0, 1), (1, 1, 1, 0, 0, 0), (1, 1, 1, 1, 1, 1), (0, 1, 0, 0, 1, 0)]
    M = _complement_generator(F, 6, w)
    shared = [(1, 0, 1, 0, 0, 0), (0, 1, 1, 0, 1, 1), (0, 0, 0, 1, 0, 1)]
    tails = [
        [(0, 1, 0, 0, 0, 0), (0, 0, 0, 1, 0, 0)],
        [(0, 1, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0)],
        [(0, 0, 0, 1, 0, 0), (0, 0, 0, 0, 1, 0)],
        [(0, 1, 0, 1, 0, 0), (0, 0, 0, 1, 1, 0)],
        [(0, 0, 0, 1, 0, 0), (0, 1, 0, 0, 1, 0)],
    ]
    return Fixture("example3", M, 5, {
        "w": w,
        "w_perp": shared,
        "members": [shared + t for t in tails],
        "dim_w": 3,
        "dim_common": 3,
    })


def example4(q: int = 3) -> Fixture:
    F = field_of_order(q)
    if F.q == 2:
        raise BadArgs("example4 needs q > 2")
    M = MatrixGF(F, [
        [1, 0, 0, 1, 0],
        [0, 1, 0, 1, 1],
        [0, 0, 1, 0, 1],
    ])
    return Fixture("example4", M, 2, {"shapes": EXAMPLE4_SHAPES,
                                       "stabilizer_order": 8 * (F.q - 1),
                                       "orbit_size": 15 * (F.q - 1) ** 4})


# Monomial matrices with entries in {0, a, -a}: +1 stands for a, -1 for -a.
# In the fifth shape the (4,4) entry is missing from the source listing; it
# is 0 because row 4 already carries its nonzero entry in column 1.
EXAMPLE4_SHAPES = [
    [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, 1, 0], [0, 0, 0, 0, 1]],
    [[1, 0, 0, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, 0, -1], [0, 0, 0, 1, 0], [0, 0, -1, 0, 0]],
    [[0, 0, 1, 0, 0], [0, 1, 0, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 0, 1], [0, 0, 0, 1, 0]],
    [[0, 0, 1, 0, 0], [0, 1, 0, 0, 0], [0, 0, 0, -1, 0], [0, 0, 0, 0, 1], [-1, 0, 0, 0, 0]],
    [[0, 0, 0, 1, 0], [0, -1, 0, 0, 0], [0, 0, -1, 0, 0], [1, 0, 0, 0, 0], [0, 0, 0, 0, -1]],
    [[0, 0, 0, 1, 0], [0, -1, 0, 0, 0], [0, 0, 0, 0, 1], [1, 0, 0, 0, 0], [0, 0, 1, 0, 0]],
    [[0, 0, 0, 0, 1], [0, -1, 0, 0, 0], [-1, 0, 0, 0, 0], [0, 0, 1, 0, 0], [0, 0, 0, -1, 0]],
    [[0, 0, 0, 0, 1], [0, -1, 0, 0, 0], [0, 0, 0, 1, 0], [0, 0, 1, 0, 0], [1, 0, 0, 0, 0]],
]


def example5(t: int = 2, rows: int = 3) -> Fixture:
    """Binary code whose generator repeats each unit column t times."""
    F = make_field(2)
    n = t * rows
    M = np.zeros((rows, n), dtype=np.int64)
    for i in range(rows):
        M[i, i * t:(i + 1) * t] = 1
    return Fixture("example5", MatrixGF(F, M), rows - 1, {"t": t, "rows": rows})


FIXTURES = {
    "example1": example1,
    "example2": example2,
    "example3": example3,
    "example4": example4,
    "example5": example5,
}
