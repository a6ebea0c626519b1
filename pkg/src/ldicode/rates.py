"""Rates of an entanglement-assisted code, as exact fractions."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class RatesReport:
    n: int
    k: int
    c: int
    ea_rate: Fraction
    tradeoff: tuple[Fraction, Fraction]
    catalytic: Fraction


def rates(n: int, k: int, c: int) -> RatesReport:
    """Entanglement-assisted ``(n+c-k)/n``, trade-off ``((n+c-k)/n, c/n)`` and catalytic ``(n-k)/n``."""
    if n < 1:
        raise ValueError(f"n must be positive, got {n}")
    ea = Fraction(n + c - k, n)
    return RatesReport(n, k, c, ea, (ea, Fraction(c, n)), Fraction(n - k, n))


def fmt(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}" if x.denominator != 1 else str(x.numerator)
