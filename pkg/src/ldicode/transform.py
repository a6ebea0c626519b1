"""Lifting an entanglement-assisted code to a commuting code over another prime.

Starting from the canonical form ``[I_k X2 | Z1 Z2]`` over GF(q), every pair
``i > j`` has an exact integer commutator ``c_ij``.  Writing

    c_ij = alpha_ij + m_ij q,     alpha_ij = c_ij mod q
    nu = q mod p,                 n_ij = -nu^{-1} alpha_ij
    L_ij = (m_ij - n_ij) q

and adding the strictly lower-triangular ``L`` to ``Z1`` leaves every entry
unchanged mod q while turning each commutator into ``alpha_ij + n_ij q``,
which vanishes mod p.  The only p-dependent quantity is ``nu^{-1}``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

import numpy as np

from .canonical import CanonicalForm, canonicalize
from .errors import LDIError, SameModulus
from .modular import PrimeModulus, eval_p_star, mod_inverse, rank_mod
from .pauli import CodeSpec
from .symplectic import product_matrix


@dataclass(frozen=True)
class PairTerms:
    i: int
    j: int
    c: int
    alpha: int
    m: int
    n: int
    L: int


@dataclass(frozen=True)
class CommutatorDecomposition:
    q: int
    p: int
    nu: int
    nu_inv: int
    pairs: tuple[PairTerms, ...]

    def L_matrix(self, k: int) -> np.ndarray:
        out = np.zeros((k, k), dtype=object)
        for t in self.pairs:
            out[t.i, t.j] = t.L
        return out


def decompose(canon: CanonicalForm, p: int, minimize_magnitude: bool = False) -> CommutatorDecomposition:
    """Split every lower-triangle commutator of ``canon`` for target prime ``p``.

    With ``minimize_magnitude`` the coefficient ``n_ij`` is re-centred into
    ``(-p/2, p/2]``; any shift by a multiple of ``p`` keeps the construction
    valid but changes the size of the lifted entries.
    """
    q = canon.code.q
    p = PrimeModulus(p)
    if p == q:
        raise SameModulus(f"target prime {p} equals the source dimension; q mod p = 0 has no inverse")
    nu = q % p
    nu_inv = mod_inverse(nu, p)
    c = product_matrix(canon.code.generators, canon.code.generators)
    k = canon.k
    pairs = []
    for i in range(k):
        for j in range(i):
            cij = int(c[i, j])
            alpha = cij % q
            m = (cij - alpha) // q
            n = -nu_inv * alpha
            if minimize_magnitude:
                n %= p
                if n > p // 2:
                    n -= p
            pairs.append(PairTerms(i, j, cij, alpha, m, n, (m - n) * q))
    return CommutatorDecomposition(int(q), int(p), nu, nu_inv, tuple(pairs))


@dataclass(frozen=True, eq=False)
class TransformResult:
    source: CanonicalForm
    target_p: int
    L: np.ndarray
    output: np.ndarray
    decomposition: CommutatorDecomposition

    @property
    def q(self) -> int:
        return self.source.code.q

    @property
    def label(self) -> str:
        """``"LDI"`` if one integer matrix commutes at every prime, else ``"effectively LDI"``."""
        c = product_matrix(self.output, self.output)
        return "LDI" if not np.any(c != 0) else "effectively LDI"

    @property
    def code(self) -> CodeSpec:
        """The lifted generators as an entanglement-free code over ``target_p``."""
        return CodeSpec(self.target_p, self.output, unbounded=True, c=0)


def lift(canon: CanonicalForm, L: np.ndarray) -> np.ndarray:
    """``[I_k X2 | Z1 + L  Z2]`` with exact integers."""
    g = canon.code.generators.astype(object)
    n, k = canon.code.n, canon.k
    g[:, n : n + k] = g[:, n : n + k] + L
    return g


def transform(code: CodeSpec, p: int, minimize_magnitude: bool = False) -> TransformResult:
    """Make ``code`` commute modulo ``p`` without changing it modulo ``q``.

    The returned result has already passed :func:`verify`; a failure there is
    an internal error, not a property of the input.
    """
    p = PrimeModulus(p)
    if p == code.q:
        raise SameModulus(f"target prime {p} equals the source dimension {code.q}")
    canon = canonicalize(code)
    dec = decompose(canon, p, minimize_magnitude)
    L = dec.L_matrix(canon.k)
    out = lift(canon, L)
    result = TransformResult(canon, p, L, np.array(out.tolist(), dtype=np.int64), dec)
    report = verify(result)
    if not report.ok:
        raise LDIError(f"internal check failed for p={p}: {report}")
    return result


@dataclass(frozen=True)
class VerificationReport:
    preserves_mod_q: bool
    commutes_mod_p: bool
    l_valid: bool
    max_entry_observed: int
    rank_mod_p: int
    noncommuting_pairs: list[tuple[int, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.preserves_mod_q and self.commutes_mod_p and self.l_valid


def check_lift(canonical, output, q: int, p: int, L=None) -> VerificationReport:
    """Check an arbitrary integer matrix against a canonical source.

    ``L`` defaults to the difference of the Z1 blocks; when supplied it must
    also account for every difference between ``output`` and ``canonical``.
    """
    src = np.array(canonical, dtype=object)
    out = np.array(output, dtype=object)
    k, two_n = src.shape
    n = two_n // 2
    diff = out - src
    if L is None:
        L = diff[:, n : n + k]
    L = np.array(L, dtype=object)
    placed = np.zeros_like(src)
    placed[:, n : n + k] = L
    l_valid = (
        L.shape == (k, k)
        and not np.any(np.triu(L) != 0)
        and not np.any(L % q != 0)
        and not np.any(diff != placed)
    )
    cm = product_matrix(out, out, p)
    pairs = [(i, j, int(cm[i, j])) for i in range(k) for j in range(i + 1, k) if cm[i, j]]
    return VerificationReport(
        preserves_mod_q=bool(np.array_equal(out % q, src % q)),
        commutes_mod_p=not pairs,
        l_valid=bool(l_valid),
        max_entry_observed=int(max(abs(int(v)) for v in out.flat)),
        rank_mod_p=rank_mod(np.array(out % p, dtype=np.int64), p),
        noncommuting_pairs=pairs,
    )


def verify(result: TransformResult) -> VerificationReport:
    """Recheck the three guarantees of a transform independently of how it was built."""
    return check_lift(result.source.code.generators, result.output, result.q, result.target_p, result.L)


# --- bounds ---------------------------------------------------------------


def entry_bound(code: CodeSpec) -> int:
    """``B = [2 + (n-k)(q-1)](q-1)``."""
    q = int(code.q)
    return (2 + (code.n - code.k) * (q - 1)) * (q - 1)


def lifted_entry_bound(code: CodeSpec, p: int) -> int:
    """Largest magnitude the default lift can produce at target prime ``p``.

    In canonical form ``|c_ij| <= B - (q-1)``, so ``|z1_ij + c_ij| <= B``.  The
    lift adds ``L_ij = c_ij + (nu^{-1} q - 1) alpha_ij`` on top of ``z1_ij``,
    and the second term reaches ``(nu^{-1} q - 1)(q - 1)`` whenever
    ``alpha_ij != 0``.  ``B`` alone is therefore only a bound for codes whose
    canonical generators already commute over the integers.
    """
    q = int(code.q)
    p = PrimeModulus(p)
    if p == q:
        raise SameModulus(f"target prime {p} equals the source dimension {q}")
    nu_inv = mod_inverse(q % p, p)
    return entry_bound(code) + (nu_inv * q - 1) * (q - 1)


def threshold(code: CodeSpec, d: int) -> int:
    """``p* = B^(2(d-1)) [2(d-1)]^(d-1)``; every prime above it keeps distance ``d``."""
    return eval_p_star(entry_bound(code), d)


@dataclass(frozen=True)
class BoundsReport:
    B: int
    p_star: int
    d_used: int
    max_entry_observed: int | None = None

    @property
    def trivial(self) -> bool:
        """``d == 1`` makes both exponents zero, so ``p* = 1`` by convention."""
        return self.d_used == 1


def bounds(code: CodeSpec, d: int, result: TransformResult | None = None) -> BoundsReport:
    observed = verify(result).max_entry_observed if result is not None else None
    return BoundsReport(entry_bound(code), threshold(code, d), d, observed)


# --- scanning primes --------------------------------------------------------


@dataclass(frozen=True, eq=False)
class ScanEntry:
    p: int
    result: TransformResult | None = None
    verification: VerificationReport | None = None
    distance: "object | None" = None
    preserved: bool | None = None
    error: str | None = None


def prime_scan(
    code: CodeSpec,
    primes: Sequence[int],
    max_weight: int | None = None,
    source_distance: int | None = None,
) -> list[ScanEntry]:
    """Transform at each prime and measure the distance of what comes out.

    ``source_distance`` defaults to the declared ``d`` of the code, or failing
    that the brute-force distance over ``q``.  ``preserved`` is ``None`` when
    the search cap stopped the measurement before an answer.
    """
    from .distance import detection_distance

    if source_distance is None:
        source_distance = code.d
    if source_distance is None:
        source_distance = detection_distance(code.generators, code.q, max_weight).distance

    entries = []
    for p in primes:
        try:
            res = transform(code, p)
        except LDIError as exc:
            entries.append(ScanEntry(int(p), error=f"{type(exc).__name__}: {exc}"))
            continue
        rep = detection_distance(res.output, p, max_weight)
        if rep.distance is not None:
            preserved = source_distance is not None and rep.distance >= source_distance
        else:
            preserved = None if rep.cap_hit else True
        entries.append(ScanEntry(int(p), res, verify(res), rep, preserved))
    return entries
