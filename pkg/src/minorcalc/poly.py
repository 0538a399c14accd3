"""Sparse multivariate polynomials with exact integer coefficients.

Variables are identified by name.  Three structured families are
reserved:

* ``x{i,j}``   -- entries of the generic matrix,
* ``p{1,3}``   -- principal-minor symbol for a nonempty subset,
* ``q{1,2|2,5}`` -- quasiprincipal-minor symbol for a pair of subsets.

Any other identifier (``a``, ``b``, ...) is an ordinary free variable.
Terms are kept in graded-lexicographic canonical order, so equal
polynomials have identical string forms (golden-test friendly).
"""

from __future__ import annotations

import re
from functools import lru_cache
from typing import Iterable, Mapping

from .rings import IntegerRing, Ring

_STRUCTURED = re.compile(r"^([pxq])\{([0-9,|]*)\}$")
_IDENT = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


def xvar(i: int, j: int) -> str:
    return f"x{{{i},{j}}}"


def pvar(subset: Iterable[int]) -> str:
    elems = sorted(subset)
    if not elems:
        raise ValueError("the empty-subset minor is the constant 1, not a variable")
    return "p{" + ",".join(map(str, elems)) + "}"


def qvar(left: Iterable[int], right: Iterable[int]) -> str:
    li = ",".join(map(str, sorted(left)))
    ri = ",".join(map(str, sorted(right)))
    return "q{" + li + "|" + ri + "}"


@lru_cache(maxsize=None)
def var_key(name: str):
    """Total order on variable names: p-family, then x, then q, then plain
    identifiers; within each family the order follows the subset/index
    structure."""
    m = _STRUCTURED.match(name)
    if m is None:
        if not _IDENT.match(name):
            raise ValueError(f"malformed variable name {name!r}")
        return (3, name)
    fam, body = m.groups()
    if fam == "p":
        elems = tuple(int(s) for s in body.split(","))
        return (0, len(elems), elems)
    if fam == "x":
        i, j = (int(s) for s in body.split(","))
        return (1, i, j)
    left, right = body.split("|")
    li = tuple(int(s) for s in left.split(",")) if left else ()
    ri = tuple(int(s) for s in right.split(",")) if right else ()
    return (2, len(li), li, ri)


def _term_key(mono):
    # Graded lex, descending: compare total degree first, then the sparse
    # exponent sequence with smaller variables more significant.
    deg = sum(e for _, e in mono)
    return (-deg, tuple((var_key(v), -e) for v, e in mono))


class Polynomial:
    """Immutable sparse polynomial over Z.

    ``terms`` maps a monomial -- a tuple of (variable, exponent) pairs
    sorted by variable order, with positive exponents -- to a nonzero
    integer coefficient.
    """

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[tuple, int]):
        self.terms = dict(terms)
        self._hash = None

    # -- constructors -------------------------------------------------

    @classmethod
    def constant(cls, c: int) -> "Polynomial":
        return cls({(): c}) if c else cls({})

    @classmethod
    def variable(cls, name: str) -> "Polynomial":
        var_key(name)  # validate
        return cls({((name, 1),): 1})

    # -- basic structure ----------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return all(m == () for m in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def variables(self) -> set:
        return {v for mono in self.terms for v, _ in mono}

    def degree(self) -> int:
        if not self.terms:
            return 0
        return max(sum(e for _, e in mono) for mono in self.terms)

    # -- arithmetic ---------------------------------------------------

    @staticmethod
    def _coerce(other):
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.constant(other)
        return None

    def __add__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out = dict(self.terms)
        for mono, c in other.terms.items():
            s = out.get(mono, 0) + c
            if s:
                out[mono] = s
            else:
                out.pop(mono, None)
        return Polynomial(out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial({m: -c for m, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        return other + (-self)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is None:
            return NotImplemented
        out: dict = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = _mono_mul(m1, m2)
                s = out.get(mono, 0) + c1 * c2
                if s:
                    out[mono] = s
                else:
                    del out[mono]
        return Polynomial(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.constant(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # -- comparisons --------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.terms == Polynomial.constant(other).terms
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # -- evaluation ---------------------------------------------------

    def eval(self, assignment: Mapping[str, object], ring: Ring):
        """Image under the Z-algebra homomorphism sending each variable to
        its assigned ring element.

        Every variable occurring in the polynomial must be assigned.
        """
        total = ring.zero()
        for mono, coeff in self.terms.items():
            val = ring.from_int(coeff)
            for name, exp in mono:
                try:
                    base = assignment[name]
                except KeyError:
                    raise ValueError(f"unassigned variable {name!r}") from None
                for _ in range(exp):
                    val = ring.mul(val, base)
            total = ring.add(total, val)
        return total

    def substitute(self, assignment: Mapping[str, "Polynomial"]) -> "Polynomial":
        """Substitute polynomials for some variables; unassigned variables
        are kept as themselves."""
        full = {v: assignment.get(v, Polynomial.variable(v)) for v in self.variables()}
        return self.eval(full, POLY_RING)

    # -- text form ----------------------------------------------------

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for mono, coeff in sorted(self.terms.items(), key=lambda kv: _term_key(kv[0])):
            factors = [v if e == 1 else f"{v}^{e}" for v, e in mono]
            mag = abs(coeff)
            if not factors:
                body = str(mag)
            elif mag == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(mag)] + factors)
            if not parts:
                parts.append(body if coeff > 0 else "-" + body)
            else:
                parts.append((" + " if coeff > 0 else " - ") + body)
        return "".join(parts)

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    @classmethod
    def parse(cls, text: str) -> "Polynomial":
        return _parse(text)


def _mono_mul(m1, m2):
    if not m1:
        return m2
    if not m2:
        return m1
    merged = dict(m1)
    for v, e in m2:
        merged[v] = merged.get(v, 0) + e
    return tuple(sorted(merged.items(), key=lambda ve: var_key(ve[0])))


# -- parser -----------------------------------------------------------

_TOKEN = re.compile(
    r"\s*(?:(?P<var>[pxq]\{[0-9,|]+\}|[A-Za-z_][A-Za-z_0-9]*)"
    r"|(?P<int>\d+)"
    r"|(?P<op>[\^*+-]))"
)


def _tokenize(text: str):
    pos = 0
    tokens = []
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m is None or m.end() == pos:
            if text[pos:].strip():
                raise ValueError(f"cannot parse polynomial at: {text[pos:]!r}")
            break
        pos = m.end()
        if m.group("var"):
            tokens.append(("var", m.group("var")))
        elif m.group("int"):
            tokens.append(("int", int(m.group("int"))))
        else:
            tokens.append(("op", m.group("op")))
    return tokens


def _parse(text: str) -> Polynomial:
    tokens = _tokenize(text)
    if not tokens:
        raise ValueError("empty polynomial text")
    result = Polynomial({})
    i = 0
    sign = 1
    if tokens[0] == ("op", "-"):
        sign = -1
        i = 1
    elif tokens[0] == ("op", "+"):
        i = 1
    if i >= len(tokens):
        raise ValueError("dangling sign at end of polynomial")
    while i < len(tokens):
        term, i = _parse_term(tokens, i)
        result = result + (term if sign > 0 else -term)
        if i < len(tokens):
            kind, val = tokens[i]
            if kind != "op" or val not in "+-":
                raise ValueError(f"expected + or - at token {tokens[i]!r}")
            sign = 1 if val == "+" else -1
            i += 1
            if i >= len(tokens):
                raise ValueError("dangling sign at end of polynomial")
    return result


def _parse_term(tokens, i):
    factors = []
    coeff = None
    expect_factor = True
    while i < len(tokens):
        kind, val = tokens[i]
        if kind == "int" and expect_factor:
            if coeff is not None or factors:
                raise ValueError("integer coefficient must lead its term")
            coeff = val
            i += 1
        elif kind == "var" and expect_factor:
            name, exp = val, 1
            i += 1
            if i + 1 < len(tokens) and tokens[i] == ("op", "^"):
                ek, ev = tokens[i + 1]
                if ek != "int":
                    raise ValueError("exponent must be an integer")
                exp = ev
                i += 2
            factors.append((name, exp))
        elif kind == "op" and val == "*" and not expect_factor:
            i += 1
            expect_factor = True
            continue
        else:
            break
        expect_factor = False
    if coeff is None and not factors:
        raise ValueError("empty term in polynomial text")
    if expect_factor:
        raise ValueError("dangling '*' in polynomial text")
    if coeff is None:
        coeff = 1
    poly = Polynomial.constant(coeff)
    for name, exp in factors:
        poly = poly * (Polynomial.variable(name) ** exp)
    return poly, i


# -- the polynomial ring as a Ring instance ---------------------------


class PolynomialRing(Ring):
    """Z[...named variables...] as a commutative ring of Polynomial values."""

    def zero(self):
        return Polynomial({})

    def one(self):
        return Polynomial.constant(1)

    def add(self, a, b):
        return a + b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def from_int(self, k: int):
        return Polynomial.constant(k)

    def inv_unit(self, a):
        if a == 1:
            return a
        if a == -1:
            return a
        raise ArithmeticError(f"{a!r} is not a unit in Z[...]")

    def __eq__(self, other):
        return isinstance(other, PolynomialRing)

    def __hash__(self):
        return hash(PolynomialRing)

    def describe(self) -> str:
        return "Z[...]"


POLY_RING = PolynomialRing()
INT_RING = IntegerRing()
