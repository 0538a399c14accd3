"""Power series in t over an arbitrary coefficient ring, truncated at a
fixed order N.  All arithmetic is exact modulo t^(N+1)."""

from __future__ import annotations

from typing import Sequence

from .rings import Ring


class TruncatedSeries:
    """c_0 + c_1 t + ... + c_N t^N over a coefficient ring."""

    __slots__ = ("ring", "order", "coeffs")

    def __init__(self, ring: Ring, order: int, coeffs: Sequence):
        if order < 0:
            raise ValueError("truncation order must be nonnegative")
        if len(coeffs) > order + 1:
            raise ValueError("more coefficients than the truncation order allows")
        padded = list(coeffs) + [ring.zero()] * (order + 1 - len(coeffs))
        self.ring = ring
        self.order = order
        self.coeffs = tuple(padded)

    @classmethod
    def zero(cls, ring: Ring, order: int) -> "TruncatedSeries":
        return cls(ring, order, [])

    @classmethod
    def one(cls, ring: Ring, order: int) -> "TruncatedSeries":
        return cls(ring, order, [ring.one()])

    def coefficient(self, k: int):
        if not 0 <= k <= self.order:
            raise IndexError(f"coefficient index {k} out of range 0..{self.order}")
        return self.coeffs[k]

    def _check_compatible(self, other: "TruncatedSeries"):
        if self.ring != other.ring:
            raise ValueError("series coefficient rings differ")
        if self.order != other.order:
            raise ValueError("series truncation orders differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        r = self.ring
        return TruncatedSeries(
            r, self.order, [r.add(a, b) for a, b in zip(self.coeffs, other.coeffs)]
        )

    def __neg__(self) -> "TruncatedSeries":
        r = self.ring
        return TruncatedSeries(r, self.order, [r.neg(a) for a in self.coeffs])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check_compatible(other)
        r = self.ring
        out = [r.zero()] * (self.order + 1)
        for i, a in enumerate(self.coeffs):
            if r.is_zero(a):
                continue
            for j in range(self.order + 1 - i):
                b = other.coeffs[j]
                if r.is_zero(b):
                    continue
                out[i + j] = r.add(out[i + j], r.mul(a, b))
        return TruncatedSeries(r, self.order, out)

    def inverse(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires the constant term to be a unit
        with a known inverse (always 1 in this package's uses)."""
        r = self.ring
        c0 = self.coeffs[0]
        b0 = r.inv_unit(c0)  # raises ArithmeticError for non-units
        out = [b0]
        for k in range(1, self.order + 1):
            acc = r.zero()
            for j in range(1, k + 1):
                acc = r.add(acc, r.mul(self.coeffs[j], out[k - j]))
            out.append(r.neg(r.mul(b0, acc)))
        return TruncatedSeries(r, self.order, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        if self.ring != other.ring or self.order != other.order:
            return False
        return all(self.ring.eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((self.ring, self.order, self.coeffs))

    def is_one(self) -> bool:
        r = self.ring
        return r.is_one(self.coeffs[0]) and all(
            r.is_zero(c) for c in self.coeffs[1:]
        )

    def __repr__(self):
        body = " + ".join(f"({c})*t^{k}" for k, c in enumerate(self.coeffs))
        return f"TruncatedSeries[{body}]"


class SeriesRing(Ring):
    """Truncated series over a fixed coefficient ring as a Ring instance,
    so that matrices over series (e.g. I - tA) can reuse the generic
    linear-algebra kernel."""

    def __init__(self, coeff_ring: Ring, order: int):
        self.coeff_ring = coeff_ring
        self.order = order

    def zero(self):
        return TruncatedSeries.zero(self.coeff_ring, self.order)

    def one(self):
        return TruncatedSeries.one(self.coeff_ring, self.order)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k: int):
        return TruncatedSeries(self.coeff_ring, self.order, [self.coeff_ring.from_int(k)])

    def constant(self, c):
        """Embed a coefficient-ring element as a constant series."""
        return TruncatedSeries(self.coeff_ring, self.order, [c])

    def times_t(self, c, power: int = 1):
        """The series c * t^power."""
        coeffs = [self.coeff_ring.zero()] * power + [c]
        if power > self.order:
            coeffs = []
        return TruncatedSeries(self.coeff_ring, self.order, coeffs[: self.order + 1])

    def inv_unit(self, a):
        return a.inverse()

    def __eq__(self, other):
        return (
            isinstance(other, SeriesRing)
            and self.coeff_ring == other.coeff_ring
            and self.order == other.order
        )

    def __hash__(self):
        return hash((SeriesRing, self.coeff_ring, self.order))

    def describe(self) -> str:
        return f"{self.coeff_ring.describe()}[[t]]/t^{self.order + 1}"
