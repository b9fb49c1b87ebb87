"""Test partitions, compositions and skew shapes."""

import unittest

from pydantic import ValidationError

from promotion_sieve.shapes import (
    Composition,
    Partition,
    SkewShape,
    compositions,
    conjugate,
    direct_sum,
    n_stat,
    parse_skew_shape,
    partitions,
    rectangle,
    ribbon_shape,
    rotate,
    skew_shapes,
    sm_shape,
    sorted_partition,
    stretch,
)


class TestPartition(unittest.TestCase):
    """Test partition statistics."""

    def test_rejects_increasing_parts(self):
        with self.assertRaises(ValidationError):
            Partition(parts=(2, 3))

    def test_rejects_zero_part(self):
        with self.assertRaises(ValueError):
            Partition(parts=(2, 0))

    def test_conjugate(self):
        self.assertEqual(conjugate(Partition(parts=(4, 2, 2))).parts, (3, 3, 1, 1))
        self.assertEqual(conjugate(Partition(parts=(5,))).parts, (1,) * 5)
        self.assertEqual(conjugate(Partition()).parts, ())

    def test_conjugate_is_an_involution(self):
        for size in range(1, 9):
            for p in partitions(size):
                self.assertEqual(conjugate(conjugate(p)), p)

    def test_n_stat(self):
        self.assertEqual(n_stat(Partition(parts=(2, 1, 1))), 3)
        self.assertEqual(n_stat(Partition(parts=(2, 2, 2, 2))), 12)
        self.assertEqual(n_stat(Partition()), 0)

    def test_n_stat_from_columns(self):
        """n(p) is also the sum of binomial(column length, 2)."""
        for size in range(1, 9):
            for p in partitions(size):
                columns = conjugate(p).parts
                self.assertEqual(n_stat(p), sum(c * (c - 1) // 2 for c in columns))

    def test_stretch_and_rectangle(self):
        self.assertEqual(stretch(Partition(parts=(3, 1)), 2).parts, (6, 2))
        self.assertEqual(rectangle(3, 2).parts, (3, 3))

    def test_partitions_order(self):
        found = partitions(4)
        self.assertEqual(len(found), 5)
        self.assertEqual(found[0].parts, (4,))
        self.assertEqual(found[-1].parts, (1, 1, 1, 1))
        self.assertEqual(len(partitions(10)), 42)

    def test_sorted_partition(self):
        self.assertEqual(sorted_partition((1, 3, 0, 2)).parts, (3, 2, 1))


class TestComposition(unittest.TestCase):
    """Test compositions."""

    def test_rotate(self):
        self.assertEqual(rotate(Composition(parts=(1, 2, 3)), 1).parts, (2, 3, 1))
        gamma = Composition(parts=(2, 1, 2, 1))
        self.assertEqual(rotate(gamma, 2), gamma)

    def test_compositions(self):
        self.assertEqual(
            [c.parts for c in compositions(2, 2)], [(2, 0), (1, 1), (0, 2)]
        )

    def test_is_partition(self):
        self.assertTrue(Composition(parts=(2, 2, 1)).is_partition())
        self.assertFalse(Composition(parts=(1, 2)).is_partition())


class TestSkewShape(unittest.TestCase):
    """Test skew shapes and their constructions."""

    def test_skew_shapes(self):
        shapes = skew_shapes(2)
        self.assertEqual(
            [(s.outer.parts, s.inner.parts) for s in shapes],
            [((1,), ()), ((2,), ()), ((2,), (1,)), ((1, 1), ()), ((1, 1), (1,))],
        )
        self.assertEqual(len(skew_shapes(3)), 5 + 3 + 4 + 3)
        self.assertTrue(all(s.size > 0 for s in skew_shapes(5)))

    def test_inner_must_fit(self):
        with self.assertRaises(ValidationError):
            SkewShape(outer=Partition(parts=(2,)), inner=Partition(parts=(3,)))

    def test_parse(self):
        shape = parse_skew_shape("4,2/1")
        self.assertEqual(shape.outer.parts, (4, 2))
        self.assertEqual(shape.inner.parts, (1,))
        self.assertEqual(shape.size, 5)
        self.assertEqual(str(shape), "4,2/1")
        self.assertEqual(str(parse_skew_shape("3,1")), "3,1")

    def test_cells_row_major(self):
        shape = parse_skew_shape("3,2/1")
        self.assertEqual(shape.cells(), [(0, 1), (0, 2), (1, 0), (1, 1)])
        self.assertTrue(shape.contains((1, 1)))
        self.assertFalse(shape.contains((0, 0)))

    def test_direct_sum(self):
        row = SkewShape.straight((2,))
        self.assertEqual(direct_sum([row, row]), parse_skew_shape("4,2/2"))

    def test_sm_shape(self):
        shape = sm_shape(Partition(parts=(2, 1, 1)), 3)
        self.assertEqual(shape, parse_skew_shape("12,6,3/6,3"))

    def test_direct_sum_rows_share_no_column(self):
        shape = sm_shape(Partition(parts=(3, 2, 2, 1)), 2)
        columns = [set(range(*shape.row_span(r))) for r in range(shape.num_rows)]
        for r in range(1, len(columns)):
            self.assertFalse(columns[r] & columns[r - 1])

    def test_ribbon_shape(self):
        shape = ribbon_shape(Composition(parts=(2, 2)))
        self.assertEqual(shape, parse_skew_shape("3,2/1"))
        self.assertEqual(shape.size, 4)

    def test_ribbon_shape_rejects_zero_rows(self):
        with self.assertRaises(ValueError):
            ribbon_shape(Composition(parts=(2, 0, 1)))


if __name__ == "__main__":
    unittest.main()
