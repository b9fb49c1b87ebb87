"""Test promotion and orbit decomposition."""

import unittest

from promotion_sieve.promotion import (
    EntryRangeError,
    NotClosedError,
    decompose,
    orbit_decomposition,
    promote,
    promote_bender_knuth,
    promote_inverse,
    promote_power,
)
from promotion_sieve.shapes import Composition, Partition, SkewShape
from promotion_sieve.tableaux import (
    Tableau,
    direct_sum_tableau,
    enumerate_bounded_ssyt,
    enumerate_ssyt,
    enumerate_syt_ribbon,
    shst,
    sm_tableaux,
)


class TestPromote(unittest.TestCase):
    """Test single promotion steps."""

    def test_example(self):
        t = Tableau.from_rows([[1, 1, 2, 3, 4], [2, 3], [3, 4]])
        self.assertEqual(
            promote(t, 4), Tableau.from_rows([[1, 1, 2, 3, 4], [2, 2], [3, 4]])
        )

    def test_stretched_hook(self):
        t = Tableau.from_rows([[1, 1, 2, 2], [3, 3], [4, 4]])
        expected = Tableau.from_rows([[1, 1, 4, 4], [2, 2], [3, 3]])
        self.assertEqual(promote(t, 4), expected)

    def test_standard_square(self):
        t = Tableau.from_rows([[1, 2], [3, 4]])
        self.assertEqual(promote(t, 4), Tableau.from_rows([[1, 3], [2, 4]]))
        self.assertEqual(promote_power(t, 4, 2), t)

    def test_single_row_is_fixed(self):
        t = Tableau.from_rows([[1, 2, 3, 4]])
        self.assertEqual(promote(t, 4), t)

    def test_without_ones_decrements(self):
        t = Tableau.from_rows([[2, 3], [4]])
        self.assertEqual(promote(t, 4), Tableau.from_rows([[1, 2], [3]]))

    def test_entry_out_of_range(self):
        with self.assertRaises(EntryRangeError):
            promote(Tableau.from_rows([[1, 5]]), 4)

    def test_inverse(self):
        for t in enumerate_bounded_ssyt(SkewShape.straight((3, 2)), 4):
            self.assertEqual(promote_inverse(promote(t, 4), 4), t)
            self.assertEqual(promote(promote_inverse(t, 4), 4), t)

    def test_negative_power(self):
        t = Tableau.from_rows([[1, 1, 2, 3, 4], [2, 3], [3, 4]])
        self.assertEqual(promote_power(promote_power(t, 4, 3), 4, -3), t)

    def test_bender_knuth_agrees_with_sliding(self):
        families = [
            (shst(1, 2, 2), 4),
            (shst(2, 1, 1), 4),
            (enumerate_bounded_ssyt(SkewShape.straight((2, 2, 1)), 4), 4),
        ]
        for tableaux, m in families:
            for t in tableaux:
                self.assertEqual(promote_bender_knuth(t, m), promote(t, m, True))

    def test_direct_sums_promote_componentwise(self):
        first, second = Tableau.from_rows([[1, 3]]), Tableau.from_rows([[2, 3]])
        joined = promote(direct_sum_tableau([first, second]), 3)
        self.assertEqual(
            joined, direct_sum_tableau([promote(first, 3), promote(second, 3)])
        )
        self.assertEqual(joined.rows, ((2, 3), (1, 2)))


class TestOrbits(unittest.TestCase):
    """Test orbit decomposition under promotion."""

    def test_stretched_hook_orbits(self):
        orbits, order = orbit_decomposition(shst(1, 2, 2), 4)
        self.assertEqual([o.length for o in orbits], [3, 3])
        self.assertEqual(order, 3)
        self.assertEqual(str(orbits[0].representative), "1122/33/44")

    def test_orbits_partition_the_set(self):
        tableaux = shst(1, 2, 2)
        orbits, _ = orbit_decomposition(tableaux, 4)
        members = [t for o in orbits for t in o.elements]
        self.assertCountEqual(members, tableaux)

    def test_orbit_follows_promotion(self):
        orbits, _ = orbit_decomposition(shst(1, 2, 2), 4)
        for orbit in orbits:
            for i, t in enumerate(orbit.elements):
                self.assertEqual(
                    promote(t, 4), orbit.elements[(i + 1) % orbit.length]
                )

    def test_stretched_hook_order_divides_alphabet_size_minus_one(self):
        for a, b, n in [(1, 1, 1), (2, 1, 1), (1, 2, 1), (1, 1, 2), (2, 2, 1)]:
            _, order = orbit_decomposition(shst(a, b, n), a + b + 1)
            self.assertEqual((a + b) % order, 0)

    def test_threads_do_not_change_the_result(self):
        tableaux = enumerate_syt_ribbon(Composition(parts=(2, 2, 2)))
        single = orbit_decomposition(tableaux, 6, threads=1)
        pooled = orbit_decomposition(tableaux, 6, threads=4)
        self.assertEqual(single, pooled)

    def test_ribbon_orders(self):
        square = enumerate_syt_ribbon(Composition(parts=(2, 2)))
        _, order = orbit_decomposition(square, 4)
        self.assertEqual(order, 6)
        tableaux = enumerate_syt_ribbon(Composition(parts=(2, 2, 2)))
        self.assertEqual(len(tableaux), 61)
        self.assertEqual(orbit_decomposition(tableaux, 6)[1], 60)
        for k, expected in [(2, 20), (3, 55)]:
            tableaux = enumerate_syt_ribbon(Composition(parts=(1, 1, k, 1)))
            self.assertEqual(orbit_decomposition(tableaux, k + 3)[1], expected)

    def test_order_of_promotion_on_rectangles(self):
        shape = SkewShape.straight((2, 2))
        tableaux = enumerate_ssyt(shape, Composition(parts=(1,) * 4))
        self.assertEqual(orbit_decomposition(tableaux, 4)[1], 2)
        _, order = orbit_decomposition(sm_tableaux(Partition(parts=(2, 1)), 2), 3)
        self.assertEqual(3 % order, 0)

    def test_decompose_rotation(self):
        words = [
            (0, 0, 1, 1),
            (0, 1, 0, 1),
            (0, 1, 1, 0),
            (1, 0, 0, 1),
            (1, 0, 1, 0),
            (1, 1, 0, 0),
        ]
        orbits = decompose(words, lambda w: w[1:] + w[:1], key=lambda w: w)
        self.assertEqual(sorted(o.length for o in orbits), [2, 4])
        self.assertEqual(orbits[0].representative, (0, 0, 1, 1))

    def test_decompose_not_closed(self):
        with self.assertRaises(NotClosedError):
            decompose([1, 2, 3], lambda x: x + 1)


if __name__ == "__main__":
    unittest.main()
