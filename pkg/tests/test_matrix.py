import random
from itertools import combinations, permutations

import pytest

from minorcalc.matrix import (
    Matrix,
    Subset,
    all_subsets,
    diag_reindex,
    quasiprincipal_minor,
)
from minorcalc.poly import POLY_RING, Polynomial
from minorcalc.rings import FootnoteAlgebra, IntegerRing, ModularRing
from minorcalc.universal import generic_matrix

Z = IntegerRing()


def det_leibniz(M):
    """Independent determinant oracle: signed permutation sum."""
    n = M.nrows
    r = M.ring
    total = r.zero()
    for perm in permutations(range(1, n + 1)):
        inversions = sum(
            1 for a, b in combinations(range(n), 2) if perm[a] > perm[b]
        )
        term = r.one()
        for i, j in enumerate(perm, start=1):
            term = r.mul(term, M.entry(i, j))
        total = r.add(total, term if inversions % 2 == 0 else r.neg(term))
    return total


class TestSubset:
    def test_members_ascending(self):
        s = Subset.of(5, [4, 1, 3])
        assert s.members() == (1, 3, 4)
        assert list(s) == [1, 3, 4]
        assert len(s) == 3
        assert 3 in s and 2 not in s

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            Subset.of(3, [4])

    def test_rank(self):
        s = Subset.of(6, [2, 4, 5])
        assert [s.rank(i) for i in (2, 4, 5)] == [1, 2, 3]

    def test_canonical_order(self):
        labels = [s.label() for s in all_subsets(3)]
        assert labels == ["{}", "{1}", "{2}", "{3}", "{1,2}", "{1,3}", "{2,3}", "{1,2,3}"]


class TestArithmetic:
    def test_identity_is_neutral(self):
        rng = random.Random(3)
        A = Matrix.from_ints(Z, [[rng.randint(-9, 9) for _ in range(3)] for _ in range(3)])
        assert Matrix.identity(Z, 3).mul(A) == A
        assert A.mul(Matrix.identity(Z, 3)) == A

    def test_nilpotent_square(self):
        N = Matrix.from_ints(Z, [[0, 1], [0, 0]])
        assert N.mul(N) == Matrix.zeros(Z, 2, 2)

    def test_generic_square_entry(self):
        A = generic_matrix(2)
        x = {name: Polynomial.variable(name) for name in ("x{1,1}", "x{1,2}", "x{2,1}", "x{2,2}")}
        sq = A.mul(A)
        assert sq.entry(1, 1) == x["x{1,1}"] ** 2 + x["x{1,2}"] * x["x{2,1}"]

    def test_dimension_mismatch(self):
        A = Matrix.zeros(Z, 2, 3)
        with pytest.raises(ValueError):
            A.mul(A)

    def test_pow(self):
        A = Matrix.from_ints(Z, [[1, 2], [3, 4]])
        assert A.pow(0) == Matrix.identity(Z, 2)
        assert A.pow(1) == A
        # oracle: direct repeated multiplication
        expected = A
        for m in range(2, 6):
            expected = expected.mul(A)
            assert A.pow(m) == expected
        assert A.pow(2) == Matrix.from_ints(Z, [[7, 10], [15, 22]])

    def test_pow_requires_square(self):
        with pytest.raises(ValueError):
            Matrix.zeros(Z, 2, 3).pow(2)


class TestSubmatrix:
    def test_full_subsets_identity(self):
        A = generic_matrix(3)
        assert A.submatrix(Subset.full(3), Subset.full(3)) == A

    def test_selection(self):
        A = generic_matrix(3)
        sub = A.submatrix(Subset.of(3, [1, 3]), Subset.of(3, [2, 3]))
        assert [[str(v) for v in row] for row in sub.rows] == [
            ["x{1,2}", "x{1,3}"],
            ["x{3,2}", "x{3,3}"],
        ]

    def test_delete_row_column(self):
        A = generic_matrix(4)
        B = A.delete(2, 2)
        keep = (1, 3, 4)
        for bi, i in enumerate(keep, start=1):
            for bj, j in enumerate(keep, start=1):
                assert B.entry(bi, bj) == A.entry(i, j)

    def test_empty_subset_gives_empty_matrix(self):
        A = generic_matrix(2)
        sub = A.submatrix(Subset.empty(2), Subset.empty(2))
        assert (sub.nrows, sub.ncols) == (0, 0)

    def test_out_of_range(self):
        A = generic_matrix(2)
        with pytest.raises(ValueError):
            A.submatrix(Subset.of(3, [3]), Subset.of(3, [1]))


class TestDeterminant:
    def test_empty_matrix(self):
        assert Matrix(Z, []).det() == 1

    def test_two_by_two(self):
        assert Matrix.from_ints(Z, [[1, 2], [3, 4]]).det() == -2

    def test_generic_two_by_two(self):
        assert str(generic_matrix(2).det()) == "x{1,1}*x{2,2} - x{1,2}*x{2,1}"

    def test_against_leibniz_all_3x3_mod2(self):
        ring = ModularRing(2)
        for bits in range(512):
            a = [[(bits >> (3 * i + j)) & 1 for j in range(3)] for i in range(3)]
            M = Matrix(ring, a)
            assert M.det() == det_leibniz(M)

    def test_against_leibniz_random_4x4(self):
        rng = random.Random(17)
        for _ in range(25):
            M = Matrix.from_ints(
                Z, [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)]
            )
            assert M.det() == det_leibniz(M)

    def test_requires_square(self):
        with pytest.raises(ValueError):
            Matrix.zeros(Z, 2, 3).det()


class TestAdjugate:
    def test_identity(self):
        for n in range(4):
            I = Matrix.identity(Z, n)
            assert I.adjugate() == I

    def test_two_by_two_formula(self):
        a, b, c, d = (Polynomial.variable(v) for v in "abcd")
        M = Matrix(POLY_RING, [[a, b], [c, d]])
        assert M.adjugate() == Matrix(POLY_RING, [[d, -b], [-c, a]])

    @pytest.mark.parametrize(
        "ring", [Z, ModularRing(4), FootnoteAlgebra()], ids=lambda r: r.describe()
    )
    def test_main_identity_random(self, ring):
        from minorcalc.suites import random_matrix

        rng = random.Random(23)
        for _ in range(10):
            n = rng.randint(1, 3)
            B = random_matrix(ring, n, rng)
            adj = B.adjugate()
            expected = Matrix.identity(ring, n).scale(B.det())
            assert B.mul(adj) == expected
            assert adj.mul(B) == expected


class TestPrincipalMinors:
    def test_unitriangular_all_ones(self):
        A = Matrix.from_ints(Z, [[1, 5, -2], [0, 1, 7], [0, 0, 1]])
        assert A.principal_minors().all_equal(1)

    def test_table_consistency(self):
        rng = random.Random(31)
        A = Matrix.from_ints(Z, [[rng.randint(-9, 9) for _ in range(4)] for _ in range(4)])
        table = A.principal_minors()
        assert table[Subset.empty(4)] == 1
        for i in range(1, 5):
            assert table[[i]] == A.entry(i, i)
        assert table[Subset.full(4)] == A.det()

    def test_minors_match_submatrix_dets(self):
        A = generic_matrix(3)
        table = A.principal_minors()
        for P in all_subsets(3):
            assert table[P] == A.submatrix(P, P).det()


class TestDiagReindex:
    def test_empty(self):
        assert diag_reindex(Subset.empty(3), 2) == Subset.empty(4)

    def test_example(self):
        assert diag_reindex(Subset.of(3, [1, 3]), 2) == Subset.of(4, [1, 4])

    def test_i_equals_n_keeps_subset(self):
        P = Subset.of(4, [1, 3])
        assert diag_reindex(P, 5).members() == (1, 3)

    def test_submatrix_equality_oracle(self):
        # defining property, checked on the generic matrix for n <= 5
        for n in range(1, 6):
            A = generic_matrix(n)
            for i in range(1, n + 1):
                deleted = A.delete(i, i)
                for P in all_subsets(n - 1):
                    Pp = diag_reindex(P, i)
                    assert i not in Pp
                    assert len(Pp) == len(P)
                    assert deleted.submatrix(P, P) == A.submatrix(Pp, Pp)

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            diag_reindex(Subset.empty(3), 5)


class TestQuasiprincipalMinor:
    def test_paper_shape_accepted(self):
        A = generic_matrix(7)
        I = Subset.of(7, [1, 2, 7])
        J = Subset.of(7, [2, 5, 7])
        value = quasiprincipal_minor(A, I, J, 1, 5)
        assert value == A.submatrix(I, J).det()

    def test_single_entry(self):
        A = generic_matrix(2)
        value = quasiprincipal_minor(A, Subset.of(2, [1]), Subset.of(2, [2]), 1, 2)
        assert value == A.entry(1, 2)

    def test_rejects_wrong_replacement(self):
        A = generic_matrix(2)
        with pytest.raises(ValueError, match="violated clause"):
            quasiprincipal_minor(A, Subset.of(2, [1, 2]), Subset.of(2, [1, 2]), 1, 2)

    def test_rejects_missing_indices(self):
        A = generic_matrix(3)
        with pytest.raises(ValueError, match="i=1 not in I"):
            quasiprincipal_minor(A, Subset.of(3, [2]), Subset.of(3, [3]), 1, 3)


def test_charpoly_expansion_symbolic():
    # det(B + z I) expands into principal minors of B, as polynomials
    z = Polynomial.variable("z")
    for m in range(5):
        B = generic_matrix(m)
        lhs = B.add(Matrix.identity(POLY_RING, m).scale(z)).det()
        table = B.principal_minors()
        rhs = POLY_RING.zero()
        for P in all_subsets(m):
            rhs = rhs + table[P] * z ** (m - len(P))
        assert lhs == rhs


def test_diagonal_sum_expansion_symbolic():
    from minorcalc.suites import suite_diagonal_sum

    assert suite_diagonal_sum(3) == []
