"""Commutative rings that the rest of the package computes over.

A ring is an object that knows how to combine its elements; elements
themselves are plain Python values (ints, Fractions, tuples, ...).
Everything is exact: no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


class Ring:
    """A commutative ring given by its operations on a carrier set.

    Subclasses supply ``zero``, ``one``, ``add``, ``mul`` and ``neg``.
    Equality defaults to Python ``==``, which is adequate for all the
    concrete carriers used here (ints, Fractions, tuples, polynomials).
    """

    def zero(self):
        raise NotImplementedError

    def one(self):
        raise NotImplementedError

    def add(self, a, b):
        raise NotImplementedError

    def mul(self, a, b):
        raise NotImplementedError

    def neg(self, a):
        raise NotImplementedError

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return self.eq(a, self.zero())

    def is_one(self, a) -> bool:
        return self.eq(a, self.one())

    def from_int(self, k: int):
        """Image of k under the unique map Z -> R (double-and-add on 1)."""
        if k < 0:
            return self.neg(self.from_int(-k))
        acc = self.zero()
        base = self.one()
        while k:
            if k & 1:
                acc = self.add(acc, base)
            base = self.add(base, base)
            k >>= 1
        return acc

    def inv_unit(self, a):
        """Inverse of an element known to be a unit.

        The generic fallback only handles +-1; rings with more units
        override this.
        """
        if self.eq(a, self.one()):
            return a
        if self.eq(a, self.neg(self.one())):
            return a
        raise ArithmeticError(f"cannot invert {a!r} in {self.describe()}")

    def render(self, a) -> str:
        return str(a)

    def describe(self) -> str:
        return type(self).__name__


@dataclass(frozen=True)
class IntegerRing(Ring):
    """Z with arbitrary-precision integers."""

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k: int):
        return k

    def describe(self) -> str:
        return "Z"


@dataclass(frozen=True)
class RationalField(Ring):
    """Q with exact fractions."""

    def zero(self):
        return Fraction(0)

    def one(self):
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k: int):
        return Fraction(k)

    def inv_unit(self, a):
        if a == 0:
            raise ArithmeticError("0 is not a unit in Q")
        return 1 / Fraction(a)

    def describe(self) -> str:
        return "Q"


@dataclass(frozen=True)
class ModularRing(Ring):
    """Z/n with canonical residues 0..n-1."""

    modulus: int

    def __post_init__(self):
        if self.modulus < 2:
            raise ValueError("modulus must be >= 2")

    def zero(self):
        return 0

    def one(self):
        return 1

    def add(self, a, b):
        return (a + b) % self.modulus

    def mul(self, a, b):
        return (a * b) % self.modulus

    def neg(self, a):
        return (-a) % self.modulus

    def from_int(self, k: int):
        return k % self.modulus

    def inv_unit(self, a):
        try:
            return pow(a, -1, self.modulus)
        except ValueError:
            raise ArithmeticError(
                f"{a} is not a unit in {self.describe()}"
            ) from None

    def describe(self) -> str:
        return f"Z/{self.modulus}"


@dataclass(frozen=True)
class PrimeField(ModularRing):
    """Z/p for prime p; every nonzero element is invertible."""

    def __post_init__(self):
        super().__post_init__()
        if not _is_prime(self.modulus):
            raise ValueError(f"{self.modulus} is not prime")

    def inv_unit(self, a):
        if a % self.modulus == 0:
            raise ArithmeticError(f"0 is not a unit in {self.describe()}")
        return pow(a, -1, self.modulus)

    def describe(self) -> str:
        return f"F_{self.modulus}"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


# Basis of the counterexample algebra, in fixed coordinate order.
FOOTNOTE_BASIS = ("1", "x", "y", "x^2", "y^2", "x^3")

# Nonzero products of non-unit basis elements: (i, j) -> (index, sign).
# Everything not listed (and not involving the basis element 1) is zero:
# x*y = 0, x^4 = 0, y^4 = 0, and mixed positive-degree products vanish.
_FOOTNOTE_TABLE = {
    (1, 1): (3, 1),   # x * x   = x^2
    (1, 3): (5, 1),   # x * x^2 = x^3
    (3, 1): (5, 1),
    (2, 2): (4, 1),   # y * y   = y^2
    (2, 4): (5, -1),  # y * y^2 = y^3 = -x^3
    (4, 2): (5, -1),
}


@dataclass(frozen=True)
class FootnoteAlgebra(Ring):
    """The 6-dimensional quotient of k[x,y] by (x^3+y^3, xy, x^4, x^3 y,
    x^2 y^2, x y^3, y^4).

    Elements are coordinate 6-tuples over the base field with respect to
    the basis (1, x, y, x^2, y^2, x^3).  The base field defaults to Z/2.
    """

    base: Ring = field(default_factory=lambda: PrimeField(2))

    def zero(self):
        z = self.base.zero()
        return (z,) * 6

    def one(self):
        z = self.base.zero()
        return (self.base.one(), z, z, z, z, z)

    def add(self, a, b):
        return tuple(self.base.add(x, y) for x, y in zip(a, b))

    def neg(self, a):
        return tuple(self.base.neg(x) for x in a)

    def mul(self, a, b):
        out = list(self.zero())
        for i, ai in enumerate(a):
            if self.base.is_zero(ai):
                continue
            for j, bj in enumerate(b):
                if self.base.is_zero(bj):
                    continue
                prod = self.base.mul(ai, bj)
                if i == 0:
                    out[j] = self.base.add(out[j], prod)
                elif j == 0:
                    out[i] = self.base.add(out[i], prod)
                else:
                    hit = _FOOTNOTE_TABLE.get((i, j))
                    if hit is None:
                        continue
                    k, sign = hit
                    if sign < 0:
                        prod = self.base.neg(prod)
                    out[k] = self.base.add(out[k], prod)
        return tuple(out)

    def from_int(self, k: int):
        z = self.base.zero()
        return (self.base.from_int(k), z, z, z, z, z)

    def basis_element(self, name: str):
        """Element for one of the basis symbols '1', 'x', ..., 'x^3'."""
        try:
            idx = FOOTNOTE_BASIS.index(name)
        except ValueError:
            raise ValueError(f"unknown basis symbol {name!r}") from None
        coords = list(self.zero())
        coords[idx] = self.base.one()
        return tuple(coords)

    def render(self, a) -> str:
        parts = []
        for coeff, name in zip(a, FOOTNOTE_BASIS):
            if self.base.is_zero(coeff):
                continue
            if name == "1":
                parts.append(self.base.render(coeff))
            elif self.base.is_one(coeff):
                parts.append(name)
            else:
                parts.append(f"{self.base.render(coeff)}*{name}")
        return " + ".join(parts) if parts else "0"

    def describe(self) -> str:
        return f"k[x,y]/(x^3+y^3, xy, x^4, ...) over {self.base.describe()}"
