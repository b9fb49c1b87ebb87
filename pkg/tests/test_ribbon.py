"""Test ribbon tilings, ribbon tableaux and the root-of-unity identity."""

import unittest

from promotion_sieve.qpoly import kostka_number
from promotion_sieve.ribbon import (
    count_ribbon_tableaux,
    dlt_check,
    epsilon,
    is_horizontal_strip,
    rectangle_sign,
    ribbon_tilings,
    sign_exponent,
)
from promotion_sieve.shapes import (
    Composition,
    SkewShape,
    compositions,
    parse_skew_shape,
    partitions,
)

SHAPE = SkewShape.straight((4, 4, 2, 2))


class TestTilings(unittest.TestCase):
    """Test ribbon tilings and their signs."""

    def test_square_dominoes(self):
        tilings = ribbon_tilings(SkewShape.straight((2, 2)), 2)
        self.assertEqual(len(tilings), 2)
        self.assertEqual({t.sign for t in tilings}, {1})
        self.assertEqual(epsilon(SkewShape.straight((2, 2)), 2), 1)

    def test_single_cells(self):
        shape = parse_skew_shape("3,2/1")
        self.assertEqual(len(ribbon_tilings(shape, 1)), 1)
        self.assertEqual(epsilon(shape, 1), 1)

    def test_vertical_domino_sign(self):
        self.assertEqual(epsilon(SkewShape.straight((1, 1)), 2), -1)
        self.assertEqual(epsilon(SkewShape.straight((2,)), 2), 1)

    def test_no_tiling(self):
        self.assertEqual(ribbon_tilings(SkewShape.straight((2, 1)), 2), [])
        self.assertEqual(epsilon(SkewShape.straight((2, 2)), 4), 0)

    def test_example_sign(self):
        self.assertEqual(epsilon(SHAPE, 3), -1)

    def test_every_tiling_covers_the_shape(self):
        for tiling in ribbon_tilings(SHAPE, 3):
            cells = [cell for ribbon in tiling.ribbons for cell in ribbon]
            self.assertCountEqual(cells, SHAPE.cells())
            self.assertTrue(all(len(r) == 3 for r in tiling.ribbons))

    def test_horizontal_strip(self):
        row = SkewShape.straight((4,))
        tilings = ribbon_tilings(row, 2)
        self.assertTrue(all(is_horizontal_strip(t, row) for t in tilings))
        column = SkewShape.straight((1, 1))
        self.assertTrue(is_horizontal_strip(ribbon_tilings(column, 2)[0], column))
        square = SkewShape.straight((2, 2))
        tilings = ribbon_tilings(square, 2)
        flags = sorted(is_horizontal_strip(t, square) for t in tilings)
        self.assertEqual(flags, [False, True])


class TestRibbonTableaux(unittest.TestCase):
    """Test semistandard ribbon tableau counts."""

    def test_example_counts(self):
        ones = Composition(parts=(1,) * 4)
        self.assertEqual(count_ribbon_tableaux(SHAPE, ones, 3), 6)
        weights = Composition(parts=(2, 1, 1))
        self.assertEqual(count_ribbon_tableaux(SHAPE, weights, 3), 3)

    def test_unit_ribbons_are_kostka_numbers(self):
        for size in range(1, 6):
            for lam in partitions(size):
                shape = SkewShape(outer=lam)
                for weights in compositions(size, 3):
                    self.assertEqual(
                        count_ribbon_tableaux(shape, weights, 1),
                        kostka_number(shape, weights),
                    )

    def test_wrong_size(self):
        short = Composition(parts=(1, 1))
        self.assertEqual(count_ribbon_tableaux(SHAPE, short, 3), 0)
        with self.assertRaises(ValueError):
            count_ribbon_tableaux(SHAPE, Composition(parts=(1,)), 0)


class TestRootOfUnityIdentity(unittest.TestCase):
    """Test ribbon counts against Kostka-Foulkes values at roots of unity."""

    def test_example(self):
        record = dlt_check(SHAPE, Composition(parts=(2, 1, 1)), 3)
        self.assertEqual(record.ribbon_count, 3)
        self.assertEqual(record.epsilon, -1)
        self.assertEqual(record.kf_value, -3)
        self.assertTrue(record.ok)

    def test_small_shapes(self):
        for j in (2, 3):
            for size in range(1, 3):
                for lam in partitions(size * j):
                    shape = SkewShape(outer=lam)
                    for weights in compositions(size, 2):
                        if weights.parts[0] == 0:
                            continue
                        with self.subTest(shape=str(shape), j=j):
                            self.assertTrue(dlt_check(shape, weights, j).ok)

    def test_trivial_root(self):
        record = dlt_check(SkewShape.straight((2, 1)), Composition(parts=(2, 1)), 1)
        self.assertEqual(record.ribbon_count, 1)
        self.assertTrue(record.ok)


class TestRectangleSigns(unittest.TestCase):
    """Test the sign exponent of rectangles."""

    def test_square(self):
        self.assertEqual(rectangle_sign(2, 2, 1), 1)
        self.assertEqual(rectangle_sign(2, 2, 2), 1)
        self.assertEqual(rectangle_sign(2, 2, 4), 0)
        self.assertEqual(rectangle_sign(2, 2, 3), 0)
        self.assertEqual(sign_exponent(2, 2, 4), 2)

    def test_column(self):
        # one vertical domino on a 1^2 column
        self.assertEqual(rectangle_sign(1, 2, 2), 1)
        self.assertEqual(sign_exponent(1, 2, 2), 2)


if __name__ == "__main__":
    unittest.main()
