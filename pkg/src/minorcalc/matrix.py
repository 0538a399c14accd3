"""Dense matrices over a generic commutative ring: products, powers,
submatrices, division-free determinants, adjugates and principal minors.

All public indexing is 1-based.  The determinant is a memoized Laplace
expansion over column bitmasks, which needs no division and therefore
works over every ring instance (Z/4, the counterexample algebra, ...).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

from .rings import Ring


@dataclass(frozen=True)
class Subset:
    """A subset of [n] = {1, ..., n}, stored as a bitmask."""

    n: int
    mask: int

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("ambient size must be nonnegative")
        if self.mask < 0 or self.mask >> self.n:
            raise ValueError(f"mask {self.mask:#x} not within [{self.n}]")

    @classmethod
    def of(cls, n: int, members: Iterable[int]) -> "Subset":
        mask = 0
        for i in members:
            if not 1 <= i <= n:
                raise ValueError(f"element {i} outside [{n}]")
            mask |= 1 << (i - 1)
        return cls(n, mask)

    @classmethod
    def empty(cls, n: int) -> "Subset":
        return cls(n, 0)

    @classmethod
    def full(cls, n: int) -> "Subset":
        return cls(n, (1 << n) - 1)

    def members(self) -> tuple:
        return tuple(i for i in range(1, self.n + 1) if self.mask >> (i - 1) & 1)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members())

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, i: int) -> bool:
        return 1 <= i <= self.n and bool(self.mask >> (i - 1) & 1)

    def without(self, i: int) -> "Subset":
        return Subset(self.n, self.mask & ~(1 << (i - 1)))

    def adding(self, i: int) -> "Subset":
        if not 1 <= i <= self.n:
            raise ValueError(f"element {i} outside [{self.n}]")
        return Subset(self.n, self.mask | (1 << (i - 1)))

    def complement(self) -> "Subset":
        return Subset(self.n, ((1 << self.n) - 1) ^ self.mask)

    def rank(self, i: int) -> int:
        """1-based position of i among the members (i must be a member)."""
        if i not in self:
            raise ValueError(f"{i} is not a member of {self}")
        return (self.mask & ((1 << i) - 1)).bit_count()

    def label(self) -> str:
        return "{" + ",".join(map(str, self.members())) + "}"

    def __str__(self):
        return self.label()


def all_subsets(n: int) -> list[Subset]:
    """All 2^n subsets in canonical order: by size, then lexicographically
    on the sorted member tuples."""
    out = []
    for k in range(n + 1):
        for combo in combinations(range(1, n + 1), k):
            out.append(Subset.of(n, combo))
    return out


class Matrix:
    """Immutable dense matrix over a commutative ring."""

    __slots__ = ("ring", "nrows", "ncols", "rows")

    def __init__(self, ring: Ring, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        ncols = len(rows[0]) if rows else 0
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        self.ring = ring
        self.nrows = len(rows)
        self.ncols = ncols
        self.rows = rows

    @classmethod
    def identity(cls, ring: Ring, n: int) -> "Matrix":
        one, zero = ring.one(), ring.zero()
        return cls(ring, [[one if i == j else zero for j in range(n)] for i in range(n)])

    @classmethod
    def zeros(cls, ring: Ring, nrows: int, ncols: int) -> "Matrix":
        zero = ring.zero()
        return cls(ring, [[zero] * ncols for _ in range(nrows)])

    @classmethod
    def from_ints(cls, ring: Ring, rows: Iterable[Iterable[int]]) -> "Matrix":
        return cls(ring, [[ring.from_int(v) for v in row] for row in rows])

    def entry(self, i: int, j: int):
        """1-based entry access."""
        if not (1 <= i <= self.nrows and 1 <= j <= self.ncols):
            raise IndexError(f"entry ({i},{j}) outside {self.nrows}x{self.ncols}")
        return self.rows[i - 1][j - 1]

    @property
    def is_square(self) -> bool:
        return self.nrows == self.ncols

    def _require_square(self, what: str):
        if not self.is_square:
            raise ValueError(f"{what} requires a square matrix, got {self.nrows}x{self.ncols}")

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        if self.ring != other.ring or self.nrows != other.nrows or self.ncols != other.ncols:
            return False
        return all(
            self.ring.eq(a, b)
            for ra, rb in zip(self.rows, other.rows)
            for a, b in zip(ra, rb)
        )

    def __hash__(self):
        return hash((self.ring, self.rows))

    def __repr__(self):
        body = "; ".join(
            ", ".join(self.ring.render(v) for v in row) for row in self.rows
        )
        return f"Matrix[{body}]"

    # -- arithmetic ---------------------------------------------------

    def add(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError("matrix shapes differ")
        r = self.ring
        return Matrix(
            r,
            [
                [r.add(a, b) for a, b in zip(ra, rb)]
                for ra, rb in zip(self.rows, other.rows)
            ],
        )

    def scale(self, c) -> "Matrix":
        r = self.ring
        return Matrix(r, [[r.mul(c, v) for v in row] for row in self.rows])

    def neg(self) -> "Matrix":
        r = self.ring
        return Matrix(r, [[r.neg(v) for v in row] for row in self.rows])

    def mul(self, other: "Matrix") -> "Matrix":
        self._check_ring(other)
        if self.ncols != other.nrows:
            raise ValueError(
                f"inner dimensions differ: {self.nrows}x{self.ncols} vs "
                f"{other.nrows}x{other.ncols}"
            )
        r = self.ring
        out = []
        for i in range(self.nrows):
            row = []
            for j in range(other.ncols):
                acc = r.zero()
                for k in range(self.ncols):
                    acc = r.add(acc, r.mul(self.rows[i][k], other.rows[k][j]))
                row.append(acc)
            out.append(row)
        return Matrix(r, out)

    def __matmul__(self, other):
        return self.mul(other)

    def pow(self, m: int) -> "Matrix":
        """A^m by repeated squaring; A^0 is the identity."""
        self._require_square("matrix power")
        if m < 0:
            raise ValueError("negative matrix power")
        result = Matrix.identity(self.ring, self.nrows)
        base = self
        while m:
            if m & 1:
                result = result.mul(base)
            base = base.mul(base) if m > 1 else base
            m >>= 1
        return result

    def _check_ring(self, other: "Matrix"):
        if self.ring != other.ring:
            raise ValueError("matrices over different rings")

    # -- submatrices --------------------------------------------------

    def submatrix(self, rows: Subset, cols: Subset) -> "Matrix":
        """sub_I^J: rows and columns selected in increasing order."""
        if rows.n != self.nrows:
            raise ValueError(f"row subset over [{rows.n}], matrix has {self.nrows} rows")
        if cols.n != self.ncols:
            raise ValueError(f"column subset over [{cols.n}], matrix has {self.ncols} columns")
        cs = cols.members()
        return Matrix(
            self.ring, [[self.rows[i - 1][j - 1] for j in cs] for i in rows.members()]
        )

    def delete(self, i: int, j: int) -> "Matrix":
        """B_{~i,~j}: remove the i-th row and the j-th column."""
        rows = Subset.full(self.nrows).without(i)
        cols = Subset.full(self.ncols).without(j)
        return self.submatrix(rows, cols)

    # -- determinants -------------------------------------------------

    def det(self, _memo: dict | None = None):
        """Division-free determinant (memoized Laplace expansion).

        The empty 0x0 matrix has determinant 1.
        """
        self._require_square("determinant")
        memo = {} if _memo is None else _memo
        rows = tuple(range(1, self.nrows + 1))
        colmask = (1 << self.ncols) - 1
        return self._laplace(rows, colmask, memo)

    def _laplace(self, rows: tuple, colmask: int, memo: dict):
        if not rows:
            return self.ring.one()
        key = (rows, colmask)
        hit = memo.get(key)
        if hit is not None:
            return hit
        r = self.ring
        i = rows[0]
        rest = rows[1:]
        acc = r.zero()
        pos = 0
        for j in range(1, self.ncols + 1):
            bit = 1 << (j - 1)
            if not colmask & bit:
                continue
            e = self.rows[i - 1][j - 1]
            if not r.is_zero(e):
                sub = self._laplace(rest, colmask ^ bit, memo)
                term = r.mul(e, sub)
                if pos & 1:
                    term = r.neg(term)
                acc = r.add(acc, term)
            pos += 1
        memo[key] = acc
        return acc

    def principal_minor(self, subset: Subset, _memo: dict | None = None):
        """det(sub_P^P) for one subset P of [n]."""
        self._require_square("principal minor")
        if subset.n != self.nrows:
            raise ValueError("subset ambient size differs from matrix size")
        memo = {} if _memo is None else _memo
        return self._laplace(subset.members(), subset.mask, memo)

    def principal_minors(self) -> "MinorTable":
        """All 2^n principal minors, sharing one Laplace memo cache."""
        self._require_square("principal minors")
        n = self.nrows
        memo: dict = {}
        values = {
            s.mask: self._laplace(s.members(), s.mask, memo) for s in all_subsets(n)
        }
        return MinorTable(n, self.ring, values)

    def adjugate(self) -> "Matrix":
        """adj B with (adj B)_{i,j} = (-1)^(i+j) det(B_{~j,~i})."""
        self._require_square("adjugate")
        n = self.nrows
        r = self.ring
        full = (1 << n) - 1
        memo: dict = {}
        out = []
        for i in range(1, n + 1):
            row = []
            for j in range(1, n + 1):
                rows = tuple(k for k in range(1, n + 1) if k != j)
                colmask = full ^ (1 << (i - 1))
                minor = self._laplace(rows, colmask, memo)
                if (i + j) & 1:
                    minor = r.neg(minor)
                row.append(minor)
            out.append(row)
        return Matrix(r, out)


@dataclass(frozen=True)
class MinorTable:
    """All 2^n principal minors of an n x n matrix, keyed by subset."""

    n: int
    ring: Ring
    values: dict  # mask -> ring element

    def __getitem__(self, subset):
        if isinstance(subset, Subset):
            if subset.n != self.n:
                raise KeyError(f"subset ambient size {subset.n} != {self.n}")
            mask = subset.mask
        else:
            mask = Subset.of(self.n, subset).mask
        return self.values[mask]

    def items(self):
        """(Subset, value) pairs in canonical subset order."""
        return [(s, self.values[s.mask]) for s in all_subsets(self.n)]

    def all_equal(self, element) -> bool:
        return all(self.ring.eq(v, element) for v in self.values.values())

    def __eq__(self, other):
        if not isinstance(other, MinorTable):
            return NotImplemented
        if self.n != other.n or self.ring != other.ring:
            return False
        return all(
            self.ring.eq(self.values[m], other.values[m]) for m in self.values
        )


def diag_reindex(P: Subset, i: int) -> Subset:
    """Map a subset P of [n-1] to the subset P' of [n] with
    sub_P^P(A_{~i,~i}) = sub_P'^P' A: members < i stay, members >= i
    shift up by one (so i is never in P')."""
    n = P.n + 1
    if not 1 <= i <= n:
        raise ValueError(f"index {i} outside [{n}]")
    return Subset.of(n, (q if q < i else q + 1 for q in P))


def quasiprincipal_minor(A: Matrix, I: Subset, J: Subset, i: int, j: int):
    """det(sub_I^J A) where (I, J) is a valid (i,j)-quasiprincipal pair:
    i in I, j in J, |I| = |J| and J = (I \\ {i}) | {j}."""
    A._require_square("quasiprincipal minor")
    n = A.nrows
    if I.n != n or J.n != n:
        raise ValueError("subset ambient sizes differ from matrix size")
    if i == j:
        raise ValueError("i and j must be distinct")
    if i not in I:
        raise ValueError(f"violated clause: i={i} not in I={I}")
    if j not in J:
        raise ValueError(f"violated clause: j={j} not in J={J}")
    if len(I) != len(J):
        raise ValueError(f"violated clause: |I|={len(I)} != |J|={len(J)}")
    if J.mask != (I.without(i).adding(j)).mask:
        raise ValueError(f"violated clause: J={J} != (I\\{{{i}}}) u {{{j}}} for I={I}")
    return A.submatrix(I, J).det()
