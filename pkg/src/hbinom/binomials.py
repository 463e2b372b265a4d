"""Generalized factorials, binomials, and multinomials over a sequence.

For a sequence F the factorial is n!_F = F(n)*F(n-1)*...*F(1) with 0!_F = 1;
F(0) never enters a product.  Binomials and multinomials are factorial ratios
computed in the fraction field, so nothing here assumes integrality; whether
the ratios are integral is a separate scan.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Dict, Iterable, Union

from . import oracles
from .ring import ONE, ZERO, Scalar, ScalarLike
from .sequences import HoradamSpec, preset, term

SequenceLike = Union[HoradamSpec, Callable[[int], ScalarLike]]


class ZeroTermError(ArithmeticError):
    """A factorial ran into a zero sequence term (a zero divisor for ratios)."""

    def __init__(self, index: int):
        super().__init__(f"sequence term at index {index} is zero")
        self.index = index


def sequence_fn(seq: SequenceLike) -> Callable[[int], Scalar]:
    """Normalize a spec or plain callable into an exact term function."""
    if isinstance(seq, HoradamSpec):
        return lambda n: term(seq, n)
    if callable(seq):
        return lambda n: Scalar.coerce(seq(n))
    raise TypeError(f"not a sequence: {seq!r}")


class BinomialTable:
    """Memoized factorials and binomial/multinomial cells for one sequence."""

    def __init__(self, source: SequenceLike):
        self.source = source
        self._fn = sequence_fn(source)
        self._fact = [ONE]
        self._cells: Dict[tuple[int, int], Scalar] = {}

    def factorial(self, n: int) -> Scalar:
        if n < 0:
            raise ValueError("factorial index must be nonnegative")
        fact = self._fact
        while len(fact) <= n:
            i = len(fact)
            f_i = self._fn(i)
            if f_i.is_zero():
                raise ZeroTermError(i)
            fact.append(fact[-1] * f_i)
        return fact[n]

    def binomial(self, n: int, k: int) -> Scalar:
        if k < 0 or k > n:
            return ZERO
        key = (n, k)
        value = self._cells.get(key)
        if value is None:
            value = self.factorial(n) / (self.factorial(k) * self.factorial(n - k))
            self._cells[key] = value
        return value

    def multinomial(self, parts: Iterable[int]) -> Scalar:
        parts = tuple(parts)
        if any(p < 0 for p in parts):
            return ZERO
        n = sum(parts)
        denom = ONE
        for p in parts:
            denom = denom * self.factorial(p)
        return self.factorial(n) / denom


_tables: Dict[HoradamSpec, BinomialTable] = {}


def table_for(seq: SequenceLike) -> BinomialTable:
    """Table for a sequence; tables for specs are shared and memoized."""
    if isinstance(seq, HoradamSpec):
        tbl = _tables.get(seq)
        if tbl is None:
            tbl = _tables[seq] = BinomialTable(seq)
        return tbl
    return BinomialTable(seq)


def ffactorial(seq: SequenceLike, n: int) -> Scalar:
    return table_for(seq).factorial(n)


def fbinomial(seq: SequenceLike, n: int, k: int) -> Scalar:
    return table_for(seq).binomial(n, k)


def fmultinomial(seq: SequenceLike, parts: Iterable[int]) -> Scalar:
    return table_for(seq).multinomial(parts)


@dataclass(frozen=True)
class MultinomialCheck:
    """Two consistency identities tying multinomials to binomial products."""

    n: int
    k: int
    parts: tuple[int, ...]
    product_ok: bool
    chain_ok: bool


def multinomial_product_check(seq: SequenceLike, n: int, k: int,
                              parts: Iterable[int]) -> MultinomialCheck:
    """Check {n choose k}*{n-k choose parts} = {n choose k,parts} and the
    telescoping product of binomials for the full part list."""
    parts = tuple(parts)
    if sum(parts) != n - k:
        raise ValueError(f"parts must sum to n - k = {n - k}, got {sum(parts)}")
    tbl = table_for(seq)
    full = (k,) + parts
    product_ok = tbl.binomial(n, k) * tbl.multinomial(parts) == tbl.multinomial(full)

    chain = ONE
    remaining = n
    for p in full:
        chain = chain * tbl.binomial(remaining, p)
        remaining -= p
    chain_ok = chain == tbl.multinomial(full)
    return MultinomialCheck(n, k, parts, product_ok, chain_ok)


def integrality_scan(seq: SequenceLike, max_n: int) -> list[tuple[int, int, Scalar]]:
    """All (n, k, value) with non-integral binomial value for 0 <= k <= n <= max_n.

    Integral means integer coefficients throughout (a plain integer in the
    rational case).
    """
    tbl = table_for(seq)
    violations = []
    for n in range(max_n + 1):
        for k in range(n + 1):
            value = tbl.binomial(n, k)
            if not value.is_integral:
                violations.append((n, k, value))
    return violations


@dataclass(frozen=True)
class QstarReport:
    """Transfer between a two-root power-sum binomial and the q-binomial."""

    n: int
    k: int
    lhs: Scalar
    rhs: Scalar
    ok: bool


def qstar_transfer(p: ScalarLike, q: ScalarLike, n: int, k: int) -> QstarReport:
    """Check {n choose k} over U(m) = sum p^(m-1-j) q^j equals
    q^(k(n-k)) * Gauss(n, k) evaluated at p/q.  Needs p*q != 0."""
    p = Scalar.coerce(p)
    q = Scalar.coerce(q)
    if p.is_zero() or q.is_zero():
        raise ValueError("transfer needs p*q != 0")

    def power_sum(m: int) -> Scalar:
        acc = ZERO
        for j in range(m):
            acc = acc + p ** (m - 1 - j) * q ** j
        return acc

    lhs = fbinomial(power_sum, n, k)
    gauss = oracles.gaussian_binomial(n, k)
    rhs = q ** (k * (n - k)) * gauss.evaluate(p / q)
    return QstarReport(n, k, lhs, rhs, lhs == rhs)
