"""Test disjoint-row tableaux, contingency matrices and RSK."""

import unittest

from sympy.utilities.iterables import multiset_permutations

from promotion_sieve.charge import charge
from promotion_sieve.promotion import promote
from promotion_sieve.qpoly import QPoly, kostka_foulkes, kostka_number
from promotion_sieve.shapes import (
    Composition,
    Partition,
    SkewShape,
    partitions,
    sm_shape,
)
from promotion_sieve.skewrsk import (
    Biword,
    ContingencyMatrix,
    enumerate_matrices,
    matrix_to_biword,
    matrix_to_tableau,
    rotate_columns,
    rsk,
    rsk_word,
    tableau_to_matrix,
)
from promotion_sieve.tableaux import Tableau, reading_word, sm_tableaux

EXAMPLE = ContingencyMatrix(rows=((2, 1, 2, 1), (1, 0, 1, 1), (0, 2, 0, 1)))


class TestMatrices(unittest.TestCase):
    """Test the tableau, matrix and biword encodings."""

    def test_example_tableau(self):
        t = matrix_to_tableau(EXAMPLE)
        self.assertEqual(t.shape, sm_shape(Partition(parts=(2, 1, 1)), 3))
        self.assertEqual(t.rows, ((1, 1, 2, 3, 3, 4), (1, 3, 4), (2, 2, 4)))
        self.assertEqual(tableau_to_matrix(t), EXAMPLE)

    def test_example_biword(self):
        w = matrix_to_biword(EXAMPLE)
        self.assertEqual("".join(map(str, w.top)), "111222333333")
        self.assertEqual("".join(map(str, w.bottom)), "224134112334")
        self.assertEqual(w.bottom, reading_word(matrix_to_tableau(EXAMPLE)))

    def test_margins(self):
        self.assertEqual(EXAMPLE.row_sums, (6, 3, 3))
        self.assertEqual(EXAMPLE.col_sums, (3, 3, 3, 3))
        self.assertEqual(EXAMPLE.num_columns, 4)

    def test_invalid_matrices(self):
        with self.assertRaises(ValueError):
            ContingencyMatrix(rows=((1, 2), (3,)))
        with self.assertRaises(ValueError):
            ContingencyMatrix(rows=((1, -1),))
        with self.assertRaises(ValueError):
            matrix_to_tableau(ContingencyMatrix(rows=((1, 1), (0, 0))))

    def test_shared_columns_rejected(self):
        with self.assertRaises(ValueError):
            tableau_to_matrix(Tableau.from_rows([[1, 2], [3]]))

    def test_enumerate_matrices(self):
        self.assertEqual(len(enumerate_matrices((2, 1), (1, 1, 1))), 3)
        self.assertEqual(len(enumerate_matrices((2, 2), (2, 2))), 3)
        self.assertEqual(enumerate_matrices((1,), (2,)), [])
        for matrix in enumerate_matrices((3, 2, 1), (2, 2, 2)):
            self.assertEqual(matrix.row_sums, (3, 2, 1))
            self.assertEqual(matrix.col_sums, (2, 2, 2))

    def test_matrices_match_tableaux(self):
        nu = Partition(parts=(2, 1))
        tableaux = sm_tableaux(nu, 2)
        matrices = enumerate_matrices((4, 2), (2, 2, 2))
        self.assertCountEqual([tableau_to_matrix(t, 3) for t in tableaux], matrices)


class TestRotation(unittest.TestCase):
    """Test column rotation against promotion."""

    def test_example(self):
        t = matrix_to_tableau(EXAMPLE)
        self.assertEqual(matrix_to_tableau(rotate_columns(EXAMPLE)), promote(t, 4))

    def test_promotion_rotates_columns(self):
        for nu, n in [((2, 1), 2), ((1, 1, 1), 1), ((2, 2), 1), ((3, 1), 1)]:
            nu = Partition(parts=nu)
            m = nu.size
            for t in sm_tableaux(nu, n):
                self.assertEqual(
                    tableau_to_matrix(promote(t, m), m),
                    rotate_columns(tableau_to_matrix(t, m)),
                )

    def test_full_rotation_is_identity(self):
        self.assertEqual(rotate_columns(EXAMPLE, 4), EXAMPLE)
        self.assertEqual(rotate_columns(rotate_columns(EXAMPLE, 1), 3), EXAMPLE)


class TestRsk(unittest.TestCase):
    """Test row insertion."""

    def test_empty(self):
        p, q = rsk(Biword())
        self.assertEqual(p, Tableau.from_rows([]))
        self.assertEqual(q, Tableau.from_rows([]))

    def test_single_pair(self):
        p, q = rsk(Biword(pairs=((1, 5),)))
        self.assertEqual(p.rows, ((5,),))
        self.assertEqual(q.rows, ((1,),))

    def test_word(self):
        p, q = rsk_word((3, 1, 2))
        self.assertEqual(str(p), "12/3")
        self.assertEqual(str(q), "13/2")

    def test_unsorted_biword_rejected(self):
        with self.assertRaises(ValueError):
            Biword(pairs=((2, 1), (1, 1)))

    def test_insertion_preserves_charge(self):
        for nu, n in [((2, 1), 2), ((2, 1), 1), ((1, 1, 1), 1), ((2, 2), 1)]:
            for t in sm_tableaux(Partition(parts=nu), n):
                p, _ = rsk(matrix_to_biword(tableau_to_matrix(t)))
                self.assertEqual(charge(reading_word(p)), charge(reading_word(t)))

    def test_insertion_preserves_charge_of_words(self):
        for size in range(1, 8):
            for nu in partitions(size):
                letters = [i + 1 for i, p in enumerate(nu.parts) for _ in range(p)]
                for w in map(tuple, multiset_permutations(letters)):
                    p, _ = rsk_word(w)
                    self.assertEqual(charge(reading_word(p)), charge(w), w)

    def test_recording_tableau_content(self):
        """The recording tableau has the reversed row lengths as content."""
        nu = Partition(parts=(2, 1))
        for t in sm_tableaux(nu, 2):
            _, q = rsk(matrix_to_biword(tableau_to_matrix(t)))
            counts = [sum(row.count(i) for row in q.rows) for i in (1, 2)]
            self.assertEqual(counts, [2, 4])

    def test_disjoint_row_generating_function(self):
        """Charge over disjoint rows sums Kostka-Foulkes polynomials."""
        for nu, n in [((2, 1), 1), ((2, 1), 2), ((2, 2), 1)]:
            nu = Partition(parts=nu)
            m = nu.size
            found = QPoly.from_exponents(
                charge(reading_word(t)) for t in sm_tableaux(nu, n)
            )
            recording = Composition(parts=tuple(n * p for p in reversed(nu.parts)))
            expected = QPoly()
            for lam in partitions(m * n):
                shape = SkewShape(outer=lam)
                count = kostka_number(shape, recording)
                if count:
                    kf = kostka_foulkes(shape, Partition(parts=(n,) * m))
                    expected = expected + kf * count
            self.assertEqual(found, expected)


if __name__ == "__main__":
    unittest.main()
