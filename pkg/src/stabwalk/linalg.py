"""Small exact linear algebra kernel over int and Fraction.

Everything here is sized for lattices of rank below ten, so clarity wins
over asymptotics.  No floating point anywhere.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence, Tuple, Union

Scalar = Union[int, Fraction]
Vec = Tuple[Fraction, ...]
IntVec = Tuple[int, ...]
IntMat = Tuple[IntVec, ...]


def to_vec(xs: Iterable[Scalar]) -> Vec:
    return tuple(Fraction(x) for x in xs)


def vadd(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple:
    return tuple(x + y for x, y in zip(a, b))


def vsub(a: Sequence[Scalar], b: Sequence[Scalar]) -> tuple:
    return tuple(x - y for x, y in zip(a, b))


def vneg(a: Sequence[Scalar]) -> tuple:
    return tuple(-x for x in a)


def vscale(c: Scalar, a: Sequence[Scalar]) -> tuple:
    return tuple(c * x for x in a)


def vdot(a: Sequence[Scalar], b: Sequence[Scalar]) -> Scalar:
    # plain coordinate pairing, used for the divisor/curve duality
    return sum(x * y for x, y in zip(a, b))


def identity_mat(n: int) -> IntMat:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def mat_vec(m: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> tuple:
    return tuple(sum(row[j] * v[j] for j in range(len(v))) for row in m)


def mat_mul(a: Sequence[Sequence[Scalar]], b: Sequence[Sequence[Scalar]]) -> tuple:
    n, k, m = len(a), len(b), len(b[0])
    return tuple(
        tuple(sum(a[i][t] * b[t][j] for t in range(k)) for j in range(m))
        for i in range(n)
    )


def transpose(m: Sequence[Sequence[Scalar]]) -> tuple:
    return tuple(zip(*m))


def det_int(m: Sequence[Sequence[int]]) -> int:
    """Determinant of an integer matrix by fraction-free (Bareiss) elimination."""
    n = len(m)
    if n == 0:
        return 1
    a = [list(row) for row in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def leading_minors(m: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    n = len(m)
    return tuple(
        det_int([row[: k + 1] for row in list(m)[: k + 1]]) for k in range(n)
    )


def mat_inverse(m: Sequence[Sequence[Scalar]]) -> Tuple[Vec, ...]:
    """Exact inverse by Gauss-Jordan elimination; raises on singular input."""
    n = len(m)
    a = [[Fraction(x) for x in row] + [Fraction(1 if i == j else 0) for j in range(n)]
         for i, row in enumerate(m)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            raise ZeroDivisionError("singular matrix")
        a[col], a[pivot] = a[pivot], a[col]
        pv = a[col][col]
        a[col] = [x / pv for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                f = a[r][col]
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return tuple(tuple(row[n:]) for row in a)


def int_mat_inverse(m: Sequence[Sequence[int]]) -> IntMat:
    """Inverse of a unimodular integer matrix, returned with integer entries."""
    inv = mat_inverse(m)
    out = []
    for row in inv:
        ints = []
        for x in row:
            if x.denominator != 1:
                raise ValueError("matrix is not unimodular")
            ints.append(int(x))
        out.append(tuple(ints))
    return tuple(out)
