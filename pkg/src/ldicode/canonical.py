"""Reduction of a code to the canonical shape ``[I_k X2 | Z1 Z2]``.

Only operations that leave n, k and the distance untouched are used: row
operations over GF(q), register relabelling and single-register Hadamards.
Every step lands in a :class:`TransformLog` that replays exactly.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Union

import numpy as np

from .errors import NoCanonicalForm
from .modular import RowAdd, RowOp, RowScale, RowSwap, mod_inverse, rank_mod
from .pauli import CodeSpec, hadamard_swap, register_swap
from .symplectic import check_independent


@dataclass(frozen=True)
class RegisterSwap:
    i: int
    j: int


@dataclass(frozen=True)
class HadamardSwap:
    """``(x_i, z_i) -> (-z_i, x_i)`` on register ``i``."""

    i: int


Step = Union[RowOp, RegisterSwap, HadamardSwap]
TransformLog = tuple  # tuple[Step, ...]

STEP_NAMES = {
    RowScale: "row_scale",
    RowAdd: "row_add",
    RowSwap: "row_swap",
    RegisterSwap: "register_swap",
    HadamardSwap: "hadamard_swap",
}


def step_to_dict(step: Step) -> dict:
    d = {"op": STEP_NAMES[type(step)]}
    d.update({k: int(v) for k, v in vars(step).items()})
    return d


def step_from_dict(d: dict) -> Step:
    cls = {v: k for k, v in STEP_NAMES.items()}[d["op"]]
    return cls(**{k: v for k, v in d.items() if k != "op"})


def apply_step(step: Step, code: CodeSpec) -> CodeSpec:
    if isinstance(step, RegisterSwap):
        return register_swap(code, step.i, step.j)
    if isinstance(step, HadamardSwap):
        return hadamard_swap(code, step.i)
    return code.with_generators(step.apply(np.array(code.generators), code.modulus))


def replay(log, code: CodeSpec) -> CodeSpec:
    for step in log:
        code = apply_step(step, code)
    return code


@dataclass(frozen=True, eq=False)
class CanonicalForm:
    code: CodeSpec
    log: TransformLog

    @property
    def k(self) -> int:
        return self.code.k

    @property
    def x2(self) -> np.ndarray:
        return self.code.x[:, self.k :]

    @property
    def z1(self) -> np.ndarray:
        return self.code.z[:, : self.k]

    @property
    def z2(self) -> np.ndarray:
        return self.code.z[:, self.k :]

    @property
    def hadamards(self) -> list[int]:
        return [s.i for s in self.log if isinstance(s, HadamardSwap)]


class _Builder:
    """Mutable working copy that records each operation as it is applied."""

    def __init__(self, code: CodeSpec):
        self.q = code.q
        self.n = code.n
        self.g = code.reduced()
        self.log: list[Step] = []

    def hadamard(self, reg: int) -> None:
        x, z = reg - 1, self.n + reg - 1
        old = self.g[:, x].copy()
        self.g[:, x] = -self.g[:, z] % self.q
        self.g[:, z] = old
        self.log.append(HadamardSwap(reg))

    def swap_registers(self, a: int, b: int) -> None:
        for off in (0, self.n):
            self.g[:, [off + a - 1, off + b - 1]] = self.g[:, [off + b - 1, off + a - 1]]
        self.log.append(RegisterSwap(a, b))

    def row(self, op: RowOp) -> None:
        self.g = op.apply(self.g, self.q)
        self.log.append(op)


def _find(block: np.ndarray, r: int) -> tuple[int, int] | None:
    """First nonzero of ``block[r:, r:]`` scanning columns left to right, then rows."""
    sub = block[r:, r:]
    for col in range(sub.shape[1]):
        nz = np.flatnonzero(sub[:, col])
        if nz.size:
            return r + int(nz[0]), r + col
    return None


def _greedy(b: _Builder, k: int) -> bool:
    n = b.n
    for r in range(k):
        hit = _find(b.g[:, :n], r)
        if hit is None:
            zhit = _find(b.g[:, n:], r)
            if zhit is None:
                return False
            b.hadamard(zhit[1] + 1)
            hit = zhit
        row, col = hit
        if col != r:
            b.swap_registers(r + 1, col + 1)
        if row != r:
            b.row(RowSwap(r, row))
        inv = mod_inverse(int(b.g[r, r]), b.q)
        if inv != 1:
            b.row(RowScale(r, inv))
        for t in range(k):
            if t != r and b.g[t, r]:
                b.row(RowAdd(t, r, int(-b.g[t, r]) % b.q))
    return True


def canonicalize(code: CodeSpec) -> CanonicalForm:
    """Bring ``code`` to ``[I_k X2 | Z1 Z2]`` over GF(q).

    Registers are scanned left to right and rows top to bottom; a Hadamard is
    used only when no remaining row has an X entry on a remaining register.
    If that greedy pass dead-ends, Hadamard sets of increasing size are tried
    up front until the X half has full rank.

    Raises DependentGenerators when the rows are not independent and
    NoCanonicalForm when no Hadamard pattern gives the X half rank ``k``.
    """
    check_independent(code)
    k, n = code.k, code.n
    if k > n:
        raise NoCanonicalForm(f"k={k} generators cannot have an identity X block on n={n} registers")

    b = _Builder(code)
    if _greedy(b, k):
        return _finish(code, b)

    base = code.reduced()
    for size in range(1, n + 1):
        for regs in itertools.combinations(range(1, n + 1), size):
            trial = code.with_generators(base)
            for reg in regs:
                trial = hadamard_swap(trial, reg)
            if rank_mod(trial.x, code.q) == k:
                b = _Builder(code)
                for reg in regs:
                    b.hadamard(reg)
                if _greedy(b, k):
                    return _finish(code, b)
    raise NoCanonicalForm("no Hadamard pattern gives the X half full rank")


def _finish(code: CodeSpec, b: _Builder) -> CanonicalForm:
    out = code.with_generators(b.g, unbounded=False)
    assert np.array_equal(out.x[:, : code.k], np.eye(code.k, dtype=np.int64))
    return CanonicalForm(out, tuple(b.log))


def is_canonical(code: CodeSpec) -> bool:
    k = code.k
    return k <= code.n and np.array_equal(code.x[:, :k] % code.q, np.eye(k, dtype=np.int64))

