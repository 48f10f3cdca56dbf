"""Exact rational polynomials, f-polynomials and the Jacobsthal families."""
from __future__ import annotations

import json
import math
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence, Union

from .complexes import Complex
from .errors import InvalidArgument

Number = Union[int, Fraction]


class Polynomial:
    """Polynomial in t with Fraction coefficients, lowest degree first."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def t(cls) -> "Polynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __repr__(self) -> str:
        return f"Polynomial({[str(c) for c in self.coeffs]})"

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Polynomial((other,))
        return isinstance(other, Polynomial) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def _lift(self, other) -> "Polynomial":
        return other if isinstance(other, Polynomial) else Polynomial((other,))

    def __add__(self, other) -> "Polynomial":
        o = self._lift(other)
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return Polynomial(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial(-c for c in self.coeffs)

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._lift(other) - self

    def __mul__(self, other) -> "Polynomial":
        o = self._lift(other)
        if not self.coeffs or not o.coeffs:
            return Polynomial()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return Polynomial(out)

    __rmul__ = __mul__

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "Polynomial":
        return Polynomial(k * c for k, c in enumerate(self.coeffs) if k)

    def antiderivative(self) -> "Polynomial":
        """The antiderivative vanishing at 0."""
        return Polynomial([0] + [c / (k + 1) for k, c in enumerate(self.coeffs)])

    def integrate(self, a: Number, b: Number) -> Fraction:
        big = self.antiderivative()
        return big(Fraction(b)) - big(Fraction(a))

    def to_json(self) -> str:
        return json.dumps([f"{c.numerator}/{c.denominator}" for c in self.coeffs])

    @classmethod
    def from_json(cls, text: str) -> "Polynomial":
        return cls(Fraction(s) for s in json.loads(text))


def f_polynomial(cx: Complex) -> Polynomial:
    """1 + sum_k v_{k-1} t^k, with v the f-vector."""
    return Polynomial((1,) + cx.f_vector)


@lru_cache(maxsize=None)
def _jacobsthal(n: int, a: Polynomial, b: Polynomial) -> Polynomial:
    seq = [a, b]
    tt = Polynomial.t()
    for _ in range(n - 1):
        seq.append(seq[-1] + tt * seq[-2])
    return seq[n]


def jacobsthal_cycle(n: int) -> Polynomial:
    """f_0 = 2, f_1 = 1, f_n = f_{n-1} + t f_{n-2}; f-polynomial of G_n for n >= 4."""
    if n < 0:
        raise InvalidArgument(f"n must be >= 0, got {n}")
    return _jacobsthal(n, Polynomial((2,)), Polynomial((1,)))


def jacobsthal_path(n: int) -> Polynomial:
    """f_{-1} = f_0 = 1, f_n = f_{n-1} + t f_{n-2}; f-polynomial of G_n^+."""
    if n < -1:
        raise InvalidArgument(f"n must be >= -1, got {n}")
    return _jacobsthal(n + 1, Polynomial((1,)), Polynomial((1,)))


def jacobsthal_path_int(n: int) -> list[int]:
    """Integer coefficient list of jacobsthal_path(n), computed without Fractions."""
    a, b = [1], [1]
    if n == -1:
        return a
    for _ in range(n):
        c = b + [0] * (len(a) + 1 - len(b))
        for i, x in enumerate(a):
            c[i + 1] += x
        a, b = b, c
    return b


def dihedral_f_function(n: int) -> Polynomial:
    """f-polynomial of H_n: f_n = (1 + t) f_{n-1} + t f_{n-2} + 2 (-1)^n t^n for n >= 5."""
    if n < 3:
        raise InvalidArgument(f"n must be >= 3, got {n}")
    tt = Polynomial.t()
    a, b = Polynomial((1, 6, 6)), Polynomial((1, 8, 16, 8, 2))
    if n == 3:
        return a
    for k in range(5, n + 1):
        a, b = b, (1 + tt) * b + tt * a + Polynomial([0] * k + [2 * (-1) ** k])
    return b


def jacobsthal_cycle_binomial(n: int) -> Polynomial:
    """Closed form f_n = sum_j n/(n-j) C(n-j, j) t^j, an independent check."""
    if n == 0:
        return Polynomial((2,))
    return Polynomial(Fraction(n, n - j) * math.comb(n - j, j) for j in range(n // 2 + 1))


def integrate_product(a: Sequence[int], b: Sequence[int]) -> Fraction:
    """Exact integral over [-1, 0] of the product of two integer polynomials."""
    if not a or not b:
        return Fraction(0)
    prod = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                prod[i + j] += x * y
    return integrate_minus_one_zero(prod)


def integrate_minus_one_zero(coeffs: Sequence[int]) -> Fraction:
    """Integral of sum c_j t^j over [-1, 0], which is sum (-1)^j c_j / (j+1)."""
    m = len(coeffs)
    if m == 0:
        return Fraction(0)
    den = math.lcm(*range(1, m + 1))
    num = 0
    for j, c in enumerate(coeffs):
        if c:
            term = c * (den // (j + 1))
            num += -term if j & 1 else term
    return Fraction(num, den)
