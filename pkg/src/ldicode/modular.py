"""Exact arithmetic over prime fields.

Matrices are plain integer numpy arrays; every function here returns entries
normalized to the least non-negative residue ``[0, q)``.  Nothing touches
floating point.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple, Sequence, Union

import numpy as np

from .errors import DimensionMismatch, NonPrimeModulus, RowOutOfRange, ZeroNoInverse

# Arbitrary-precision non-negative integers are plain Python ints.
BigUnsigned = int


def is_prime(v: int) -> bool:
    """Deterministic trial division; inputs are code-sized."""
    v = int(v)
    if v < 2:
        return False
    if v < 4:
        return True
    if v % 2 == 0:
        return False
    for f in range(3, math.isqrt(v) + 1, 2):
        if v % f == 0:
            return False
    return True


class PrimeModulus(int):
    """An ``int`` that is known to be prime.

    >>> PrimeModulus(7) + 1
    8
    >>> PrimeModulus(9)
    Traceback (most recent call last):
    ...
    ldicode.errors.NonPrimeModulus: 9 is not prime
    """

    def __new__(cls, value: int) -> "PrimeModulus":
        if isinstance(value, PrimeModulus):
            return value
        if isinstance(value, (bool, float)) or int(value) != value:
            raise NonPrimeModulus(f"{value!r} is not an integer modulus")
        if not is_prime(int(value)):
            raise NonPrimeModulus(f"{int(value)} is not prime")
        return super().__new__(cls, int(value))

    def __repr__(self) -> str:
        return f"PrimeModulus({int(self)})"

    def __str__(self) -> str:
        return int.__repr__(self)


def mod_inverse(a: int, m: int) -> int:
    """Return ``b`` in ``[1, m)`` with ``a*b = 1 (mod m)``."""
    m = PrimeModulus(m)
    a = int(a) % m
    if a == 0:
        raise ZeroNoInverse(f"0 has no inverse modulo {m}")
    return pow(a, -1, m)


# --- row operations -------------------------------------------------------
#
# Rows are 0-based.  Each step knows how to apply itself to an integer matrix
# either modulo q or over the integers (q=None).


@dataclass(frozen=True)
class RowSwap:
    i: int
    j: int

    def apply(self, matrix: np.ndarray, q: int | None = None) -> np.ndarray:
        _check_rows(matrix, self.i, self.j)
        out = matrix.copy()
        out[[self.i, self.j]] = out[[self.j, self.i]]
        return out


@dataclass(frozen=True)
class RowScale:
    i: int
    factor: int

    def apply(self, matrix: np.ndarray, q: int | None = None) -> np.ndarray:
        _check_rows(matrix, self.i)
        out = matrix.copy()
        out[self.i] = out[self.i] * self.factor
        return out % q if q is not None else out


@dataclass(frozen=True)
class RowAdd:
    """``row[target] += factor * row[source]``."""

    target: int
    source: int
    factor: int

    def apply(self, matrix: np.ndarray, q: int | None = None) -> np.ndarray:
        _check_rows(matrix, self.target, self.source)
        out = matrix.copy()
        out[self.target] = out[self.target] + self.factor * out[self.source]
        return out % q if q is not None else out


RowOp = Union[RowSwap, RowScale, RowAdd]


def _check_rows(matrix: np.ndarray, *rows: int) -> None:
    for r in rows:
        if not 0 <= r < matrix.shape[0]:
            raise RowOutOfRange(f"row {r} out of range for {matrix.shape[0]} rows")


def replay_row_ops(ops: Sequence[RowOp], matrix, q: int | None = None) -> np.ndarray:
    out = np.array(matrix, dtype=np.int64)
    if q is not None:
        out %= q
    for op in ops:
        out = op.apply(out, q)
    return out


class RREF(NamedTuple):
    matrix: np.ndarray
    rank: int
    pivots: tuple[int, ...]
    ops: tuple[RowOp, ...]


def as_matrix(m, q: int | None = None) -> np.ndarray:
    a = np.array(m, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1) if a.size else a.reshape(0, 0)
    if a.ndim != 2:
        raise DimensionMismatch(f"expected a 2-D matrix, got shape {a.shape}")
    return a % q if q is not None else a


def rref_mod(m, q: int, column_order: Sequence[int] | None = None) -> RREF:
    """Reduced row-echelon form over GF(q).

    Pivot columns are tried in ``column_order`` (default: left to right).  The
    returned ``ops`` replay on ``m`` to reproduce ``matrix`` exactly.
    """
    q = PrimeModulus(q)
    a = as_matrix(m, q)
    rows, cols = a.shape
    if column_order is None:
        column_order = range(cols)
    elif sorted(column_order) != list(range(cols)):
        raise DimensionMismatch("column_order must be a permutation of the columns")

    ops: list[RowOp] = []
    pivots: list[int] = []
    r = 0
    for col in column_order:
        if r == rows:
            break
        nz = np.flatnonzero(a[r:, col])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
            ops.append(RowSwap(r, i))
        inv = mod_inverse(int(a[r, col]), q)
        if inv != 1:
            a[r] = a[r] * inv % q
            ops.append(RowScale(r, inv))
        for t in range(rows):
            if t != r and a[t, col]:
                lam = int(-a[t, col]) % q
                a[t] = (a[t] + lam * a[r]) % q
                ops.append(RowAdd(t, r, lam))
        pivots.append(int(col))
        r += 1
    return RREF(a, r, tuple(pivots), tuple(ops))


def rank_mod(m, q: int) -> int:
    a = as_matrix(m)
    if a.size == 0:
        return 0
    return rref_mod(a, q).rank


def nullspace_mod(m, q: int) -> np.ndarray:
    """Basis (as rows) of ``{x : m @ x = 0 (mod q)}``."""
    q = PrimeModulus(q)
    a = as_matrix(m, q)
    cols = a.shape[1]
    red = rref_mod(a, q)
    free = [c for c in range(cols) if c not in red.pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, f in enumerate(free):
        basis[b, f] = 1
        for r, pc in enumerate(red.pivots):
            basis[b, pc] = -red.matrix[r, f] % q
    return basis


def solve_in_rowspace(m, v, q: int) -> np.ndarray | None:
    """Coefficients ``c`` with ``c @ m = v (mod q)``, or ``None`` if ``v`` is not in the row space.

    Free variables are set to zero, so the answer is unique when ``m`` has
    independent rows.
    """
    q = PrimeModulus(q)
    a = as_matrix(m, q)
    vec = np.array(v, dtype=np.int64).reshape(-1) % q
    if vec.shape[0] != a.shape[1]:
        raise DimensionMismatch(f"vector of length {vec.shape[0]} vs rows of length {a.shape[1]}")
    k = a.shape[0]
    # columns of the augmented system are the unknown coefficients
    aug = np.concatenate([a.T, vec.reshape(-1, 1)], axis=1)
    red = rref_mod(aug, q)
    if k in red.pivots:
        return None
    coeffs = np.zeros(k, dtype=np.int64)
    for r, pc in enumerate(red.pivots):
        coeffs[pc] = red.matrix[r, k]
    return coeffs


def eval_p_star(B: int, d: int) -> int:
    """Exact ``B**(2(d-1)) * (2(d-1))**(d-1)``, with ``0**0 == 1`` so ``d == 1`` gives 1."""
    if d < 1:
        raise ValueError(f"distance must be >= 1, got {d}")
    if B < 0:
        raise ValueError(f"B must be non-negative, got {B}")
    e = d - 1
    return int(B) ** (2 * e) * (2 * e) ** e
