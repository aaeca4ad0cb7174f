"""Truncated formal power series over arbitrary-precision integers.

All arithmetic is exact; there is no floating point anywhere.  Operations on
series of different truncation orders truncate to the smaller order, so
pipeline code composes.  Series are immutable and therefore safe to share
across threads and to cache.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence


class Series:
    """Coefficients of a power series up to and including q**order."""

    __slots__ = ("order", "coeffs")

    def __init__(self, coeffs: Sequence[int], order: int | None = None):
        coeffs = tuple(coeffs)
        if order is None:
            order = len(coeffs) - 1
        if order < 0:
            raise ValueError("order must be nonnegative")
        if len(coeffs) < order + 1:
            coeffs = coeffs + (0,) * (order + 1 - len(coeffs))
        else:
            coeffs = coeffs[: order + 1]
        self.order = order
        self.coeffs = coeffs

    @classmethod
    def zero(cls, order: int) -> "Series":
        return cls((0,), order)

    @classmethod
    def one(cls, order: int) -> "Series":
        return cls((1,), order)

    @classmethod
    def monomial(cls, exponent: int, order: int, coeff: int = 1) -> "Series":
        if exponent < 0:
            raise ValueError("exponent must be nonnegative")
        c = [0] * (order + 1)
        if exponent <= order:
            c[exponent] = coeff
        return cls(c, order)

    def __getitem__(self, n: int) -> int:
        if not 0 <= n <= self.order:
            raise IndexError(f"coefficient {n} outside truncation order {self.order}")
        return self.coeffs[n]

    def nonzero(self) -> list[tuple[int, int]]:
        return [(i, c) for i, c in enumerate(self.coeffs) if c]

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([a - b for a, b in zip(self.coeffs, other.coeffs)], n)

    def __neg__(self) -> "Series":
        return Series([-a for a in self.coeffs], self.order)

    def __rmul__(self, scalar: int) -> "Series":
        if not isinstance(scalar, int):
            return NotImplemented
        return Series([scalar * a for a in self.coeffs], self.order)

    def __mul__(self, other: "Series | int") -> "Series":
        if isinstance(other, int):
            return self.__rmul__(other)
        n = min(self.order, other.order)
        # Cauchy product; iterate over the operand with fewer nonzero terms.
        a, b = self, other
        na = sum(1 for c in a.coeffs[: n + 1] if c)
        nb = sum(1 for c in b.coeffs[: n + 1] if c)
        if na > nb:
            a, b = b, a
        out = [0] * (n + 1)
        bc = b.coeffs
        for i, ci in enumerate(a.coeffs[: n + 1]):
            if not ci:
                continue
            for j in range(0, n - i + 1):
                d = bc[j]
                if d:
                    out[i + j] += ci * d
        return Series(out, n)

    def __truediv__(self, other: "Series") -> "Series":
        return divide_unit(self, other)

    def shift(self, j: int) -> "Series":
        """Multiply by q**j (coefficients beyond the order are dropped)."""
        if j < 0:
            raise ValueError("shift must be nonnegative")
        return Series((0,) * j + self.coeffs[: self.order + 1 - j], self.order)

    def times_geometric(self, k: int) -> "Series":
        """Multiply by 1/(1 - q**k), i.e. by geometric(k, order).

        Uses the telescoping recurrence c'[i] = c[i] + c'[i-k], which is the
        same multiplication in O(order) operations.
        """
        if k < 1:
            raise ValueError("k must be at least 1")
        out = list(self.coeffs)
        for i in range(k, self.order + 1):
            out[i] += out[i - k]
        return Series(out, self.order)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Series)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.order, self.coeffs))

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(f"{c}*q^{i}" if i else str(c))
            if len(terms) == 6:
                terms.append("...")
                break
        body = " + ".join(terms) if terms else "0"
        return f"<Series order={self.order}: {body}>"


def geometric(k: int, order: int) -> Series:
    """The series 1/(1 - q**k): coefficient 1 at every multiple of k."""
    if k < 1:
        raise ValueError("k must be at least 1")
    c = [0] * (order + 1)
    for i in range(0, order + 1, k):
        c[i] = 1
    return Series(c, order)


@lru_cache(maxsize=None)
def pochhammer_inf(first: int, step: int, order: int) -> Series:
    """Truncation of the infinite product (1 - q^first)(1 - q^(first+step))...

    Factors whose exponent exceeds the order are skipped.
    """
    if first < 1 or step < 1:
        raise ValueError("first and step must be at least 1")
    c = [1] + [0] * order
    for e in range(first, order + 1, step):
        for i in range(order, e - 1, -1):
            c[i] -= c[i - e]
    return Series(c, order)


def divide_unit(num: Series, den: Series) -> Series:
    """Exact division by a series with constant term +1 or -1.

    Cost is O(order * nnz(den)), which makes division by sparse products
    such as pochhammer_inf(1, 1, N) cheap.
    """
    n = min(num.order, den.order)
    d0 = den.coeffs[0]
    if d0 not in (1, -1):
        raise ValueError("divisor must have constant term 1 or -1")
    tail = [(j, c) for j, c in enumerate(den.coeffs[1 : n + 1], start=1) if c]
    q = [0] * (n + 1)
    for i in range(n + 1):
        acc = num.coeffs[i]
        for j, c in tail:
            if j > i:
                break
            acc -= c * q[i - j]
        q[i] = acc if d0 == 1 else -acc
    return Series(q, n)


@lru_cache(maxsize=None)
def partition_gf(order: int) -> Series:
    """1/(q;q)_inf: coefficient of q^n is the number of partitions of n."""
    return divide_unit(Series.one(order), pochhammer_inf(1, 1, order))


@lru_cache(maxsize=None)
def t_regular_gf(t: int, order: int) -> Series:
    """(q^t;q^t)_inf / (q;q)_inf: coefficient of q^n counts t-regular partitions."""
    if t < 2:
        raise ValueError("t must be at least 2")
    return divide_unit(pochhammer_inf(t, t, order), pochhammer_inf(1, 1, order))


def csv_lines(s: Series) -> Iterator[str]:
    """Rows 'n,coefficient' with exact decimal integers, after a header."""
    yield "n,coefficient"
    for n, c in enumerate(s.coeffs):
        yield f"{n},{c}"
