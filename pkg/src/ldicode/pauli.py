"""The phi representation of generalized Pauli operators.

An n-qudit Pauli ``X^a Z^b`` (phase discarded) becomes the length-2n integer
vector ``(a_1 .. a_n | b_1 .. b_n)``.  Registers are numbered from 1, as
physical particles are; generator rows are ordinary 0-based array indices.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    DimensionMismatch,
    DuplicateRegister,
    ModulusMismatch,
    ParseError,
    RegisterOutOfRange,
    YRequiresQubit,
)
from .modular import PrimeModulus


@dataclass(frozen=True)
class PhiVector:
    """Integer vector ``(x | z)``; ``modulus=None`` means phi_infinity (no reduction)."""

    entries: tuple[int, ...]
    modulus: int | None = None

    def __post_init__(self):
        entries = tuple(int(e) for e in self.entries)
        if len(entries) % 2:
            raise DimensionMismatch(f"phi vector needs even length, got {len(entries)}")
        if self.modulus is not None:
            q = PrimeModulus(self.modulus)
            object.__setattr__(self, "modulus", q)
            entries = tuple(e % q for e in entries)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def zeros(cls, n: int, modulus: int | None = None) -> "PhiVector":
        return cls((0,) * (2 * n), modulus)

    @property
    def n(self) -> int:
        return len(self.entries) // 2

    @property
    def x(self) -> tuple[int, ...]:
        return self.entries[: self.n]

    @property
    def z(self) -> tuple[int, ...]:
        return self.entries[self.n :]

    def __array__(self, dtype=None, copy=None):
        return np.array(self.entries, dtype=dtype or np.int64)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return " ".join(map(str, self.x)) + " | " + " ".join(map(str, self.z))


@dataclass(frozen=True)
class PauliTerm:
    """``X^x_power Z^z_power`` acting on one register (1-based)."""

    register: int
    x_power: int = 0
    z_power: int = 0

    def __post_init__(self):
        if self.x_power == 0 and self.z_power == 0:
            raise ValueError("identity terms are implicit and should not be stored")


def phi_of_pauli(terms: Iterable[PauliTerm], n: int, q: int) -> PhiVector:
    q = PrimeModulus(q)
    entries = [0] * (2 * n)
    seen = set()
    for t in terms:
        if not 1 <= t.register <= n:
            raise RegisterOutOfRange(f"register {t.register} outside 1..{n}")
        if t.register in seen:
            raise DuplicateRegister(f"register {t.register} appears twice")
        seen.add(t.register)
        entries[t.register - 1] = t.x_power
        entries[t.register - 1 + n] = t.z_power
    return PhiVector(tuple(entries), q)


def compose(a: PhiVector, b: PhiVector) -> PhiVector:
    """Product of the underlying operators, i.e. entry-wise sum."""
    if a.modulus != b.modulus:
        raise ModulusMismatch(f"cannot compose modulus {a.modulus} with {b.modulus}")
    if len(a) != len(b):
        raise DimensionMismatch(f"lengths {len(a)} and {len(b)} differ")
    return PhiVector(tuple(u + v for u, v in zip(a.entries, b.entries)), a.modulus)


def weight(v) -> int:
    """Number of registers carrying a non-identity operator."""
    if isinstance(v, PhiVector):
        e, q = np.array(v.entries, dtype=object), v.modulus
    else:
        e, q = np.asarray(v), None
    if q is not None:
        e = e % q
    n = len(e) // 2
    return int(np.count_nonzero((e[:n] != 0) | (e[n:] != 0)))


def weights(matrix: np.ndarray) -> np.ndarray:
    """Row-wise weight of a (rows, 2n) array of already-reduced vectors."""
    n = matrix.shape[1] // 2
    return np.count_nonzero((matrix[:, :n] != 0) | (matrix[:, n:] != 0), axis=1)


# --- codes ----------------------------------------------------------------


@dataclass(frozen=True, eq=False)
class CodeSpec:
    """A set of ``k`` generators on ``n`` registers of local dimension ``q``.

    ``generators`` is a read-only ``(k, 2n)`` int64 array.  With
    ``unbounded=False`` entries are reduced into ``[0, q)``; with
    ``unbounded=True`` the integers are kept as given (phi_infinity), which
    lets the same matrix be reread modulo a different prime.

    ``c`` and ``d`` are optional declared parameters carried as metadata only;
    nothing trusts them without recomputation.
    """

    q: int
    generators: np.ndarray
    unbounded: bool = False
    c: int | None = None
    d: int | None = None

    def __post_init__(self):
        q = PrimeModulus(self.q)
        g = np.array(self.generators, dtype=np.int64)
        if g.ndim == 1:
            g = g.reshape(1, -1)
        if g.ndim != 2 or g.shape[1] % 2:
            raise DimensionMismatch(f"generators must be k x 2n, got shape {g.shape}")
        k, two_n = g.shape
        if k == 0 or two_n == 0:
            raise DimensionMismatch("a code needs at least one generator on at least one register")
        if k > two_n:
            raise DimensionMismatch(f"k={k} generators exceed 2n={two_n}")
        if not self.unbounded:
            g %= q
        g.setflags(write=False)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "generators", g)

    @property
    def n(self) -> int:
        return self.generators.shape[1] // 2

    @property
    def k(self) -> int:
        return self.generators.shape[0]

    @property
    def x(self) -> np.ndarray:
        return self.generators[:, : self.n]

    @property
    def z(self) -> np.ndarray:
        return self.generators[:, self.n :]

    @property
    def modulus(self) -> int | None:
        return None if self.unbounded else self.q

    def rows(self) -> list[PhiVector]:
        return [PhiVector(tuple(r), self.modulus) for r in self.generators.tolist()]

    def reduced(self, p: int | None = None) -> np.ndarray:
        """Writable copy of the generators reduced modulo ``p`` (default ``q``)."""
        p = PrimeModulus(self.q if p is None else p)
        return self.generators % p

    def over(self, p: int) -> "CodeSpec":
        """Reinterpret the integer entries at local dimension ``p``."""
        return CodeSpec(p, self.generators, unbounded=False, c=None, d=None)

    def with_generators(self, generators, **changes) -> "CodeSpec":
        kw = dict(q=self.q, unbounded=self.unbounded, c=self.c, d=self.d)
        kw.update(changes)
        return CodeSpec(generators=generators, **kw)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CodeSpec):
            return NotImplemented
        return (
            self.q == other.q
            and self.unbounded == other.unbounded
            and self.c == other.c
            and self.d == other.d
            and self.generators.shape == other.generators.shape
            and bool(np.array_equal(self.generators, other.generators))
        )

    __hash__ = None

    def __repr__(self) -> str:
        return f"CodeSpec(q={int(self.q)}, n={self.n}, k={self.k}, unbounded={self.unbounded})"


def _check_register(code: CodeSpec, *regs: int) -> None:
    for r in regs:
        if not 1 <= r <= code.n:
            raise RegisterOutOfRange(f"register {r} outside 1..{code.n}")


def register_swap(code: CodeSpec, i: int, j: int) -> CodeSpec:
    """Relabel qudits ``i`` and ``j``: columns ``(i, i+n)`` and ``(j, j+n)`` trade places."""
    _check_register(code, i, j)
    g = code.generators.copy()
    n = code.n
    for off in (0, n):
        g[:, [off + i - 1, off + j - 1]] = g[:, [off + j - 1, off + i - 1]]
    return code.with_generators(g)


def hadamard_swap(code: CodeSpec, i: int) -> CodeSpec:
    """Conjugate register ``i`` by the Fourier transform: ``(x, z) -> (-z, x)``."""
    _check_register(code, i)
    g = code.generators.copy()
    xi, zi = i - 1, code.n + i - 1
    old_x = g[:, xi].copy()
    g[:, xi] = -g[:, zi]
    g[:, zi] = old_x
    return code.with_generators(g)


# --- string form ----------------------------------------------------------

_TOKEN = re.compile(r"(?:X(?:\^(\d+))?)?(?:Z(?:\^(\d+))?)?")


def parse_pauli_string(text: str, q: int) -> PhiVector:
    """Parse a space-separated list of single-register tokens.

    Accepted tokens: ``I``, ``X``, ``Z``, ``X^a``, ``Z^b``, ``XZ``,
    ``X^aZ^b`` and, for qubits only, ``Y`` (read as ``XZ``).
    """
    q = PrimeModulus(q)
    text = text.strip()
    if not text:
        raise ParseError("empty Pauli string")
    tokens = text.split()
    n = len(tokens)
    terms = []
    col = 1
    for reg, tok in enumerate(tokens, start=1):
        col = text.find(tok, col - 1) + 1
        if tok == "I":
            continue
        if tok == "Y":
            if q != 2:
                raise YRequiresQubit(f"Y is only meaningful for q=2, got q={q}")
            terms.append(PauliTerm(reg, 1, 1))
            continue
        m = _TOKEN.fullmatch(tok)
        if not m or not tok:
            raise ParseError(f"bad Pauli token {tok!r}", line=1, column=col)
        a = (int(m.group(1)) if m.group(1) else 1) if "X" in tok else 0
        b = (int(m.group(2)) if m.group(2) else 1) if "Z" in tok else 0
        if a % q or b % q:
            terms.append(PauliTerm(reg, a, b))
    return phi_of_pauli(terms, n, q)


def _power(letter: str, e: int) -> str:
    if e == 0:
        return ""
    return letter if e == 1 else f"{letter}^{e}"


def format_pauli_string(v: PhiVector) -> str:
    """Inverse of :func:`parse_pauli_string` for canonical strings (no ``Y``, no ``^1``)."""
    if v.modulus is None:
        raise ModulusMismatch("only phi_q vectors have a Pauli string form")
    out = []
    for a, b in zip(v.x, v.z):
        out.append(_power("X", a) + _power("Z", b) or "I")
    return " ".join(out)


def code_from_paulis(lines: Sequence[str], q: int, **kw) -> CodeSpec:
    vecs = [parse_pauli_string(s, q) for s in lines]
    if len({len(v) for v in vecs}) != 1:
        raise DimensionMismatch("Pauli strings have different register counts")
    return CodeSpec(q, np.array([v.entries for v in vecs]), **kw)
