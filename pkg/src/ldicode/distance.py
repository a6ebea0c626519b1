"""Brute-force distances of small codes.

An error is undetectable when its symplectic product with every generator
vanishes mod p.  Among those, the ones inside the row space of the
generators (the isotropic part) act trivially, so two numbers are reported:

* ``d_pure``: smallest weight of any nonzero undetectable error;
* ``d``: smallest weight of an undetectable error outside the row space, or
  ``None`` when every undetectable error is in the row space (no logical
  qudits are left).

``distance`` is ``d`` when it exists and ``d_pure`` otherwise, the usual
convention for codes that encode nothing.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

import numpy as np

from .errors import InstanceTooLarge
from .modular import PrimeModulus, as_matrix, rank_mod, solve_in_rowspace
from .pauli import CodeSpec, PhiVector, weights
from .symplectic import isotropic_dimension, syndrome_matrix

ORACLE_LIMIT = 10**7


@dataclass(frozen=True, eq=False)
class DistanceReport:
    d_pure: int | None
    d: int | None
    witness: PhiVector | None
    pure_witness: PhiVector | None
    degenerate: bool
    cap_hit: bool
    kernel_is_isotropic: bool
    max_weight: int
    candidates: dict[int, int] = field(default_factory=dict)

    @property
    def distance(self) -> int | None:
        return self.d if self.d is not None else self.d_pure


def _matrix(m, p: int) -> np.ndarray:
    if isinstance(m, CodeSpec):
        m = m.generators
    return as_matrix(m) % p


def _assignments(p: int, w: int) -> np.ndarray:
    """All ``(p^2-1)^w`` nonzero per-register (x, z) choices in lexicographic order."""
    pairs = [(a, b) for a in range(p) for b in range(p) if (a, b) != (0, 0)]
    if w == 0:
        return np.zeros((1, 0, 2), dtype=np.int64)
    idx = np.array(list(itertools.product(range(len(pairs)), repeat=w)), dtype=np.int64)
    return np.array(pairs, dtype=np.int64)[idx]


def detection_distance(m, p: int, max_weight: int | None = None) -> DistanceReport:
    """Search errors by increasing weight until a logical one (or the cap) is reached.

    Within a weight the order is: supports lexicographically, then assignments
    lexicographically, so the witness is reproducible.  Each weight class is
    scanned completely; ``candidates[w]`` counts what was tested.
    """
    p = PrimeModulus(p)
    g = _matrix(m, p)
    n = g.shape[1] // 2
    max_weight = n if max_weight is None else min(max_weight, n)
    syn = syndrome_matrix(g, p).T

    kernel_dim = 2 * n - rank_mod(syn.T, p)
    iso_dim = isotropic_dimension(g, p)
    kernel_is_isotropic = kernel_dim == iso_dim

    d_pure = d = None
    pure_witness = witness = None
    min_iso = None
    counts: dict[int, int] = {}
    for w in range(1, max_weight + 1):
        assign = _assignments(p, w)
        counts[w] = 0
        for support in itertools.combinations(range(n), w):
            cols = list(support)
            errs = np.zeros((assign.shape[0], 2 * n), dtype=np.int64)
            errs[:, cols] = assign[:, :, 0]
            errs[:, [n + c for c in cols]] = assign[:, :, 1]
            counts[w] += errs.shape[0]
            hits = np.flatnonzero(~np.any(errs @ syn % p, axis=1))
            for h in hits:
                e = errs[h]
                if d_pure is None:
                    d_pure, pure_witness = w, PhiVector(tuple(e), p)
                if solve_in_rowspace(g, e, p) is not None:
                    if min_iso is None:
                        min_iso = w
                elif d is None:
                    d, witness = w, PhiVector(tuple(e), p)
        if d is not None or (kernel_is_isotropic and d_pure is not None):
            break
        if kernel_dim == 0:
            break

    if kernel_is_isotropic:
        witness = pure_witness
        cap_hit = d_pure is None and kernel_dim > 0
    else:
        cap_hit = d is None
    headline = d if d is not None else d_pure
    degenerate = min_iso is not None and headline is not None and min_iso < headline
    return DistanceReport(
        d_pure, d, witness, pure_witness, degenerate, cap_hit, kernel_is_isotropic, max_weight, counts
    )


def expected_candidates(n: int, p: int, w: int) -> int:
    return math.comb(n, w) * (p * p - 1) ** w


def oracle_distance(m, p: int) -> DistanceReport:
    """Same report as :func:`detection_distance`, by scanning all ``p^(2n)`` vectors.

    Row-space membership comes from listing every GF(p) combination of the
    generators into a lookup table rather than from any elimination.
    """
    p = PrimeModulus(p)
    g = _matrix(m, p)
    k, two_n = g.shape
    n = two_n // 2
    total = p**two_n
    if total > ORACLE_LIMIT or p**k > ORACLE_LIMIT:
        raise InstanceTooLarge(f"{p}^{two_n} vectors exceed the oracle limit {ORACLE_LIMIT}")

    place = p ** np.arange(two_n, dtype=np.int64)
    in_rowspace = np.zeros(total, dtype=bool)
    for start in range(0, p**k, 1 << 18):
        coeffs = _digits(np.arange(start, min(start + (1 << 18), p**k)), p, k)
        vecs = coeffs @ g % p
        in_rowspace[vecs @ place] = True

    best: dict[str, tuple] = {}
    min_iso = None
    any_logical = False
    for start in range(0, total, 1 << 18):
        idx = np.arange(start, min(start + (1 << 18), total))
        vecs = _digits(idx, p, two_n)
        prods = _products(vecs, g, p)
        zero = ~np.any(prods, axis=1) & (idx != 0)
        if not zero.any():
            continue
        kv, ki = vecs[zero], idx[zero]
        wts = weights(kv)
        iso = in_rowspace[ki]
        any_logical |= bool((~iso).any())
        if iso.any():
            wmin = int(wts[iso].min())
            min_iso = wmin if min_iso is None else min(min_iso, wmin)
        for name, mask in (("pure", np.ones_like(iso)), ("logical", ~iso)):
            if not mask.any():
                continue
            wmin = int(wts[mask].min())
            for v in kv[mask & (wts == wmin)]:
                key = (wmin, _order_key(v, n))
                if name not in best or key < best[name][0]:
                    best[name] = (key, v)

    def unpack(name):
        if name not in best:
            return None, None
        (w, _), v = best[name]
        return w, PhiVector(tuple(v), p)

    d_pure, pure_witness = unpack("pure")
    d, witness = unpack("logical")
    kernel_is_isotropic = not any_logical
    if kernel_is_isotropic:
        witness = pure_witness
    headline = d if d is not None else d_pure
    degenerate = min_iso is not None and headline is not None and min_iso < headline
    return DistanceReport(d_pure, d, witness, pure_witness, degenerate, False, kernel_is_isotropic, n)


def _digits(idx: np.ndarray, p: int, width: int) -> np.ndarray:
    out = np.empty((idx.shape[0], width), dtype=np.int64)
    rest = idx.astype(np.int64)
    for t in range(width):
        rest, out[:, t] = np.divmod(rest, p)
    return out


def _products(vecs: np.ndarray, g: np.ndarray, p: int) -> np.ndarray:
    n = g.shape[1] // 2
    return (vecs[:, :n] @ g[:, n:].T - vecs[:, n:] @ g[:, :n].T) % p


def _order_key(v: np.ndarray, n: int) -> tuple:
    support = tuple(int(i) for i in range(n) if v[i] or v[n + i])
    assignment = tuple((int(v[i]), int(v[n + i])) for i in support)
    return support, assignment


def nondegeneracy_check(code, p: int, d: int) -> bool:
    """Whether every nonzero isotropic group element has weight at least ``d``.

    Enumerates all ``p^k`` combinations of the generators.
    """
    p = PrimeModulus(p)
    g = _matrix(code, p)
    k = g.shape[0]
    if p**k > ORACLE_LIMIT:
        raise InstanceTooLarge(f"{p}^{k} group elements exceed {ORACLE_LIMIT}")
    coeffs = _digits(np.arange(1, p**k), p, k)
    elems = coeffs @ g % p
    if elems.shape[0] == 0:
        return True
    iso = ~np.any(_products(elems, g, p), axis=1) & np.any(elems, axis=1)
    return bool(np.all(weights(elems[iso]) >= d))

