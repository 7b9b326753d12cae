"""Exact linear algebra over Q and cyclotomic fields.

Matrices are numpy object arrays whose entries are ints, rationals or
:class:`~qsheets.cyclo.CycNumber`.  Products skip zero entries, which keeps
the sparse module matrices cheap.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable

import numpy as np

__all__ = [
    "EchelonBasis",
    "identity",
    "zeros",
    "matmul",
    "matpow",
    "is_zero",
    "mat_equal",
    "scalar_value",
    "rank",
    "nullspace",
    "solve",
    "inverse",
    "kron",
    "block_diag",
]


def zeros(n: int, m: int | None = None) -> np.ndarray:
    m = n if m is None else m
    out = np.empty((n, m), dtype=object)
    out.fill(0)
    return out


def identity(n: int) -> np.ndarray:
    out = zeros(n)
    for i in range(n):
        out[i, i] = 1
    return out


def as_matrix(rows) -> np.ndarray:
    a = np.empty((len(rows), len(rows[0]) if rows else 0), dtype=object)
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            a[i, j] = x
    return a


def matmul(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    n, k = A.shape
    k2, m = B.shape
    if k != k2:
        raise ValueError(f"shape mismatch {A.shape} @ {B.shape}")
    brows = []
    for r in range(k):
        brows.append([(j, B[r, j]) for j in range(m) if B[r, j]])
    out = zeros(n, m)
    for i in range(n):
        acc: dict[int, object] = {}
        for r in range(k):
            a = A[i, r]
            if not a:
                continue
            for j, b in brows[r]:
                v = a * b
                acc[j] = acc[j] + v if j in acc else v
        for j, v in acc.items():
            out[i, j] = v if v else 0
    return out


def matpow(A: np.ndarray, e: int) -> np.ndarray:
    if e < 0:
        return matpow(inverse(A), -e)
    result = identity(A.shape[0])
    base = A
    while e:
        if e & 1:
            result = matmul(result, base)
        e >>= 1
        if e:
            base = matmul(base, base)
    return result


def add(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return _clean(A + B)


def sub(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    return _clean(A - B)


def scale(c, A: np.ndarray) -> np.ndarray:
    out = zeros(*A.shape)
    if not c:
        return out
    for idx, x in np.ndenumerate(A):
        if x:
            out[idx] = c * x
    return out


def _clean(A: np.ndarray) -> np.ndarray:
    for idx, x in np.ndenumerate(A):
        if not isinstance(x, int) and not x:
            A[idx] = 0
    return A


def is_zero(A: np.ndarray) -> bool:
    return not any(bool(x) for x in A.flat)


def mat_equal(A: np.ndarray, B: np.ndarray) -> bool:
    if A.shape != B.shape:
        return False
    return all(x == y for x, y in zip(A.flat, B.flat))


def scalar_value(A: np.ndarray):
    """Return c if A == c * I, else None."""
    n = A.shape[0]
    if n == 0:
        return None
    c = A[0, 0]
    for i in range(n):
        for j in range(n):
            x = A[i, j]
            if i == j:
                if x != c:
                    return None
            elif x:
                return None
    return c


def kron(A: np.ndarray, B: np.ndarray) -> np.ndarray:
    n, m = A.shape
    p, q = B.shape
    out = zeros(n * p, m * q)
    for (i, j), a in np.ndenumerate(A):
        if a:
            for (k, l), b in np.ndenumerate(B):
                if b:
                    out[i * p + k, j * q + l] = a * b
    return out


def block_diag(*blocks: np.ndarray) -> np.ndarray:
    n = sum(b.shape[0] for b in blocks)
    out = zeros(n)
    o = 0
    for b in blocks:
        d = b.shape[0]
        out[o:o + d, o:o + d] = b
        o += d
    return out


# ---------------------------------------------------------------------------
# elimination on sparse rows
# ---------------------------------------------------------------------------

class EchelonBasis:
    """Incrementally maintained reduced echelon basis of a span of sparse
    vectors (dicts index -> value)."""

    def __init__(self):
        self.rows: list[dict] = []
        self.pivots: dict[int, int] = {}

    def __len__(self):
        return len(self.rows)

    def reduce(self, v: dict) -> dict:
        v = {i: x for i, x in v.items() if x}
        for p, ri in self.pivots.items():
            c = v.get(p)
            if c:
                for i, x in self.rows[ri].items():
                    y = v.get(i, 0) - c * x
                    if y:
                        v[i] = y
                    else:
                        v.pop(i, None)
        return v

    def add(self, v: dict) -> bool:
        """Insert ``v``; return True if it enlarged the span."""
        v = self.reduce(v)
        if not v:
            return False
        p = min(v)
        inv = _inv(v[p])
        v = {i: x * inv for i, x in v.items()}
        # keep the basis fully reduced
        for ri, row in enumerate(self.rows):
            c = row.get(p)
            if c:
                for i, x in v.items():
                    y = row.get(i, 0) - c * x
                    if y:
                        row[i] = y
                    else:
                        row.pop(i, None)
        self.pivots[p] = len(self.rows)
        self.rows.append(v)
        return True

    def contains(self, v: dict) -> bool:
        return not self.reduce(v)


def _inv(x):
    if isinstance(x, int):
        return x if x in (1, -1) else Fraction(1, x)
    return 1 / x


def _row_dicts(A) -> list[dict]:
    A = np.asarray(A, dtype=object)
    return [{j: A[i, j] for j in range(A.shape[1]) if A[i, j]} for i in range(A.shape[0])]


def rank(A) -> int:
    eb = EchelonBasis()
    for r in _row_dicts(A):
        eb.add(r)
    return len(eb)


def nullspace(A) -> list[list]:
    """Basis of {x : A x = 0} as dense lists."""
    A = np.asarray(A, dtype=object)
    n = A.shape[1]
    eb = EchelonBasis()
    for r in _row_dicts(A):
        eb.add(r)
    free = [j for j in range(n) if j not in eb.pivots]
    basis = []
    for f in free:
        x = [0] * n
        x[f] = 1
        for p, ri in eb.pivots.items():
            c = eb.rows[ri].get(f)
            if c:
                x[p] = -c
        basis.append(x)
    return basis


def solve(A, b: Iterable) -> list:
    """One solution of A x = b; raises ArithmeticError if inconsistent."""
    A = np.asarray(A, dtype=object)
    b = list(b)
    m, n = A.shape
    aug = zeros(m, n + 1)
    aug[:, :n] = A
    for i in range(m):
        aug[i, n] = b[i]
    eb = EchelonBasis()
    for r in _row_dicts(aug):
        eb.add(r)
    if n in eb.pivots:
        raise ArithmeticError("inconsistent linear system")
    x = [0] * n
    for p, ri in eb.pivots.items():
        x[p] = eb.rows[ri].get(n, 0)
    return x


def inverse(A: np.ndarray) -> np.ndarray:
    n = A.shape[0]
    out = zeros(n)
    aug = zeros(n, 2 * n)
    aug[:, :n] = A
    for i in range(n):
        aug[i, n + i] = 1
    eb = EchelonBasis()
    for r in _row_dicts(aug):
        eb.add(r)
    if any(j not in eb.pivots for j in range(n)):
        raise ZeroDivisionError("singular matrix")
    for i in range(n):
        row = eb.rows[eb.pivots[i]]
        for j in range(n):
            out[i, j] = row.get(n + j, 0)
    return out
