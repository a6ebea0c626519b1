"""Symplectic products, commutator matrices and the derived code quantities.

Sign convention, fixed everywhere::

    a . b = sum_t  b_z[t] * a_x[t] - b_x[t] * a_z[t]

Commutation only cares whether this vanishes, but logged values keep the sign.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DependentGenerators, DimensionMismatch
from .modular import PrimeModulus, nullspace_mod, rank_mod, solve_in_rowspace
from .pauli import CodeSpec, PhiVector


def _entries(v) -> np.ndarray:
    if isinstance(v, PhiVector):
        return np.array(v.entries, dtype=object)
    return np.asarray(v).astype(object)


def symplectic_product(a, b, modulus: int | None = None) -> int:
    """Exact symplectic product of two phi vectors; reduced when ``modulus`` is a prime."""
    ea, eb = _entries(a), _entries(b)
    if ea.shape != eb.shape or ea.shape[0] % 2:
        raise DimensionMismatch(f"incompatible vectors of length {ea.shape[0]} and {eb.shape[0]}")
    n = ea.shape[0] // 2
    val = int((eb[n:] * ea[:n]).sum() - (eb[:n] * ea[n:]).sum()) if n else 0
    if modulus is not None:
        return val % PrimeModulus(modulus)
    return val


def product_matrix(rows_a, rows_b, modulus: int | None = None) -> np.ndarray:
    """``out[i, j] = rows_a[i] . rows_b[j]`` for whole matrices at once."""
    a = np.asarray(rows_a).astype(object)
    b = np.asarray(rows_b).astype(object)
    n = a.shape[1] // 2
    out = a[:, :n].dot(b[:, n:].T) - a[:, n:].dot(b[:, :n].T)
    if modulus is not None:
        out = out % PrimeModulus(modulus)
        return out.astype(np.int64)
    return out


@dataclass(frozen=True, eq=False)
class CommutatorMatrix:
    """Antisymmetric ``k x k`` matrix of pairwise products.

    ``entries`` holds Python ints (object dtype) when ``modulus`` is ``None``
    so arbitrarily large lifted codes stay exact.
    """

    entries: np.ndarray
    modulus: int | None

    @property
    def k(self) -> int:
        return self.entries.shape[0]

    def is_zero(self) -> bool:
        return not np.any(self.entries != 0)

    def nonzero_pairs(self) -> list[tuple[int, int, int]]:
        """``(i, j, value)`` with ``i < j`` for every non-commuting pair (0-based rows)."""
        k = self.k
        return [
            (i, j, int(self.entries[i, j]))
            for i in range(k)
            for j in range(i + 1, k)
            if self.entries[i, j] != 0
        ]

    def rank(self) -> int:
        if self.modulus is None:
            raise ValueError("rank is only defined here over a prime field")
        return rank_mod(self.entries.astype(np.int64), self.modulus)

    def tolist(self) -> list[list[int]]:
        return [[int(v) for v in row] for row in self.entries]


def commutator_matrix(code: CodeSpec, modulus: int | None | str = "code") -> CommutatorMatrix:
    """All pairwise products of the generators.

    ``modulus`` defaults to the code's own ``q``; pass ``None`` for the exact
    integer matrix or another prime to reread the entries there.
    """
    if modulus == "code":
        modulus = code.q
    return CommutatorMatrix(product_matrix(code.generators, code.generators, modulus), modulus)


def check_independent(code: CodeSpec, p: int | None = None) -> int:
    p = code.q if p is None else p
    r = rank_mod(code.generators, p)
    if r < code.k:
        raise DependentGenerators(f"generators have rank {r} < k={code.k} over GF({p})")
    return r


@dataclass(frozen=True)
class EntanglementReport:
    c: int
    s: int
    noncommuting_pairs: list[tuple[int, int, int]]


def min_entanglement(code: CodeSpec, p: int | None = None) -> EntanglementReport:
    """Minimal number of entangled pairs: half the rank of the commutator matrix over GF(p).

    ``p`` defaults to the code's ``q``.
    """
    p = code.q if p is None else PrimeModulus(p)
    check_independent(code, p)
    cm = commutator_matrix(code, p)
    r = cm.rank()
    # an alternating form over a field always has even rank
    assert r % 2 == 0, r
    c = r // 2
    return EntanglementReport(c=c, s=code.k - 2 * c, noncommuting_pairs=cm.nonzero_pairs())


def syndrome_matrix(generators, p: int) -> np.ndarray:
    """``S`` with ``S @ e = (e . g_i)_i  (mod p)``."""
    g = np.asarray(generators, dtype=np.int64) % p
    n = g.shape[1] // 2
    return np.concatenate([g[:, n:], -g[:, :n] % p], axis=1)


def undetectable_kernel(code: CodeSpec, p: int | None = None) -> list[PhiVector]:
    """Basis of the errors with zero syndrome against every generator, over GF(p)."""
    p = code.q if p is None else PrimeModulus(p)
    basis = nullspace_mod(syndrome_matrix(code.generators, p), p)
    return [PhiVector(tuple(r), p) for r in basis.tolist()]


def in_group(code: CodeSpec, e, p: int | None = None) -> bool:
    """Whether ``e`` lies in the GF(p) row space of the generators (phases ignored)."""
    p = code.q if p is None else PrimeModulus(p)
    vec = _entries(e)
    if vec.shape[0] != 2 * code.n:
        raise DimensionMismatch(f"error of length {vec.shape[0]} on a code with 2n={2 * code.n}")
    return solve_in_rowspace(code.generators, vec.astype(np.int64), p) is not None


def isotropic_dimension(generators, p: int) -> int:
    """Dimension over GF(p) of the row-space elements that commute with every row."""
    g = np.asarray(generators, dtype=np.int64) % p
    basis = g[list(_independent_rows(g, p))]
    if basis.shape[0] == 0:
        return 0
    cm = product_matrix(basis, g, p)
    return basis.shape[0] - rank_mod(cm, p)


def _independent_rows(g: np.ndarray, p: int) -> list[int]:
    keep: list[int] = []
    for i in range(g.shape[0]):
        if rank_mod(g[keep + [i]], p) == len(keep) + 1:
            keep.append(i)
    return keep
