"""Constructive synthesis of the universal polynomials expressing the
diagonal entries of A^m in the principal minors of A, and of the
off-diagonal certificates in terms of quasiprincipal minors.

The construction works with truncated power series over Z[p{S}]:

* d(t)  = sum over P of (-1)^|P| p{P} t^|P|        (det of I - tA),
* a(t)  = the same sum over subsets of [n-1], reindexed around i
          (the (i,i) entry of adj(I - tA)),

and the t^m coefficient of d(t)^-1 * a(t) is the wanted polynomial,
because the t^m coefficient of ((I - tA)^-1)_{i,i} is (A^m)_{i,i}.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from .matrix import Matrix, Subset, all_subsets, diag_reindex, quasiprincipal_minor
from .poly import POLY_RING, Polynomial, pvar, qvar, xvar
from .rings import Ring
from .series import TruncatedSeries


@dataclass(frozen=True)
class UniversalPolynomial:
    """Integer polynomial in the minor symbols p{S} whose evaluation at
    the principal minors of any n x n matrix A yields (A^m)_{i,i}."""

    n: int
    i: int
    m: int
    body: Polynomial

    def header(self) -> str:
        return f"P[n={self.n},i={self.i},m={self.m}]"

    def serialize(self) -> str:
        return f"{self.header()}\n{self.body}\n"


@dataclass(frozen=True)
class OffDiagCertificate:
    """Finite sum of (coefficient in p{S}) * (quasiprincipal symbol)
    pairs witnessing that (A^m)_{i,j} lies in the module generated by
    products of principal minors and (i,j)-quasiprincipal minors."""

    n: int
    i: int
    j: int
    m: int
    terms: tuple  # of (Polynomial, (Subset I, Subset J))

    def to_json(self) -> str:
        payload = {
            "n": self.n,
            "i": self.i,
            "j": self.j,
            "m": self.m,
            "terms": [
                {"coeff": str(coeff), "I": list(I.members()), "J": list(J.members())}
                for coeff, (I, J) in self.terms
            ],
        }
        return json.dumps(payload, indent=2)

    @classmethod
    def from_json(cls, text: str) -> "OffDiagCertificate":
        data = json.loads(text)
        n = data["n"]
        terms = tuple(
            (
                Polynomial.parse(t["coeff"]),
                (Subset.of(n, t["I"]), Subset.of(n, t["J"])),
            )
            for t in data["terms"]
        )
        return cls(n, data["i"], data["j"], data["m"], terms)


def generic_matrix(n: int) -> Matrix:
    """The general n x n matrix with independent entries x{i,j}."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return Matrix(
        POLY_RING,
        [
            [Polynomial.variable(xvar(i, j)) for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ],
    )


def _p_symbol(subset: Subset) -> Polynomial:
    # the empty-subset minor is the constant 1, not a variable
    if len(subset) == 0:
        return Polynomial.constant(1)
    return Polynomial.variable(pvar(subset.members()))


def _det_series_coeffs(n: int, order: int) -> list[Polynomial]:
    """Coefficients of d(t): c_k = (-1)^k * sum of p{P} over |P| = k."""
    coeffs = [Polynomial({}) for _ in range(order + 1)]
    for subset in all_subsets(n):
        k = len(subset)
        if k > order:
            continue
        term = _p_symbol(subset)
        if k & 1:
            term = -term
        coeffs[k] = coeffs[k] + term
    return coeffs


def _adj_diag_series_coeffs(n: int, i: int, order: int) -> list[Polynomial]:
    """Coefficients of a(t): the subset sum over [n-1] with each subset
    reindexed around the removed row/column i."""
    coeffs = [Polynomial({}) for _ in range(order + 1)]
    for subset in all_subsets(n - 1):
        k = len(subset)
        if k > order:
            continue
        term = _p_symbol(diag_reindex(subset, i))
        if k & 1:
            term = -term
        coeffs[k] = coeffs[k] + term
    return coeffs


@lru_cache(maxsize=None)
def synth_diag(n: int, i: int, m: int) -> UniversalPolynomial:
    """The canonical universal polynomial for (A^m)_{i,i}."""
    if n < 1 or not 1 <= i <= n:
        raise ValueError(f"index i={i} outside [n]={list(range(1, n + 1))}")
    if m < 0:
        raise ValueError("m must be nonnegative")
    d = TruncatedSeries(POLY_RING, m, _det_series_coeffs(n, m))
    a = TruncatedSeries(POLY_RING, m, _adj_diag_series_coeffs(n, i, m))
    body = (d.inverse() * a).coefficient(m)
    return UniversalPolynomial(n, i, m, body)


def eval_universal(U: UniversalPolynomial, table, ring: Ring):
    """Substitute a matrix's principal minors for the p{S} symbols."""
    if table.n != U.n:
        raise ValueError(f"minor table for n={table.n}, polynomial for n={U.n}")
    assignment = {
        pvar(s.members()): table[s] for s in all_subsets(U.n) if len(s) > 0
    }
    return U.body.eval(assignment, ring)


def minor_assignment(A: Matrix) -> dict:
    """p{S} -> principal minor of A, for evaluating p-polynomials."""
    table = A.principal_minors()
    return {pvar(s.members()): table[s] for s in all_subsets(A.nrows) if len(s) > 0}


def verify_symbolic(n: int, i: int, m: int) -> bool:
    """Exact polynomial identity check: substituting the symbolic minors
    of the generic matrix into the synthesized polynomial reproduces the
    (i,i) entry of the m-th power of the generic matrix."""
    A = generic_matrix(n)
    lhs = eval_universal(synth_diag(n, i, m), A.principal_minors(), POLY_RING)
    rhs = A.pow(m).entry(i, i)
    return lhs == rhs


def quasi_sign(P: Subset, i: int, j: int) -> int:
    """Laplace sign for the row replacement trick: (-1) to the sum of the
    1-based ranks of i and j within sorted P."""
    return -1 if (P.rank(i) + P.rank(j)) & 1 else 1


def offdiag_series_coeffs(n: int, i: int, j: int, order: int) -> list[Polynomial]:
    """Coefficients of the (i,j) entry of adj(I - tA) as a series whose
    t^(|P|-1) coefficients are signed quasiprincipal symbols."""
    coeffs = [Polynomial({}) for _ in range(order + 1)]
    for P in all_subsets(n):
        if i not in P or j not in P:
            continue
        k = len(P) - 1
        if k > order:
            continue
        symbol = Polynomial.variable(qvar(P.without(j).members(), P.without(i).members()))
        sign = quasi_sign(P, i, j) * (-1 if k & 1 else 1)
        coeffs[k] = coeffs[k] + (symbol if sign > 0 else -symbol)
    return coeffs


@lru_cache(maxsize=None)
def synth_offdiag(n: int, i: int, j: int, m: int) -> OffDiagCertificate:
    """Certificate expressing (A^m)_{i,j} as a sum of products of
    p-polynomials and (i,j)-quasiprincipal minors."""
    if n < 1 or not 1 <= i <= n or not 1 <= j <= n:
        raise ValueError(f"indices ({i},{j}) outside [n]={list(range(1, n + 1))}")
    if i == j:
        raise ValueError("i and j must be distinct; use synth_diag for the diagonal")
    if m < 0:
        raise ValueError("m must be nonnegative")
    if m == 0:
        return OffDiagCertificate(n, i, j, m, ())
    d = TruncatedSeries(POLY_RING, m, _det_series_coeffs(n, m))
    a_off = TruncatedSeries(POLY_RING, m, offdiag_series_coeffs(n, i, j, m))
    poly = (d.inverse() * a_off).coefficient(m)
    grouped: dict = {}
    for mono, coeff in poly.terms.items():
        q_parts = [(v, e) for v, e in mono if v.startswith("q{")]
        if len(q_parts) != 1 or q_parts[0][1] != 1:
            raise AssertionError(f"monomial {mono} is not linear in one q-symbol")
        qname = q_parts[0][0]
        rest = tuple(ve for ve in mono if ve[0] != qname)
        grouped.setdefault(qname, {})[rest] = coeff
    terms = []
    for qname in sorted(grouped, key=_qvar_sort_key):
        left, right = qname[2:-1].split("|")
        I = Subset.of(n, (int(s) for s in left.split(",")))
        J = Subset.of(n, (int(s) for s in right.split(",")))
        coeff = Polynomial(grouped[qname])
        if not coeff.is_zero():
            terms.append((coeff, (I, J)))
    return OffDiagCertificate(n, i, j, m, tuple(terms))


def _qvar_sort_key(name: str):
    from .poly import var_key

    return var_key(name)


def eval_certificate(cert: OffDiagCertificate, A: Matrix):
    """Evaluate a certificate on a concrete matrix; equals (A^m)_{i,j}."""
    if A.nrows != cert.n or A.ncols != cert.n:
        raise ValueError(f"certificate for n={cert.n}, matrix is {A.nrows}x{A.ncols}")
    ring = A.ring
    assignment = minor_assignment(A)
    total = ring.zero()
    for coeff, (I, J) in cert.terms:
        c = coeff.eval(assignment, ring)
        q = quasiprincipal_minor(A, I, J, cert.i, cert.j)
        total = ring.add(total, ring.mul(c, q))
    return total
