#!/usr/bin/env python
# coding:utf-8

"""unit test cases for solid3d.py"""

import random
import unittest

import tilecount.regions2d as regions2d
import tilecount.solid3d as solid3d
from tilecount.count2d import LimitError
from tilecount.regions2d import RegionError
from tilecount.solid3d import Prism3D

class TestPrism3D(unittest.TestCase):
    """test: Prism3D construction"""
    def test_sizes(self):
        self.assertEqual(len(solid3d.tower(3)), 12)
        self.assertEqual(len(solid3d.m_tower(3)), 10)
        self.assertEqual(len(Prism3D(regions2d.rect(2, 3), 0)), 0)
    def test_deleted_cell_outside(self):
        self.assertRaises(RegionError, Prism3D, regions2d.rect(2, 2), 2,
            [(0, 0, 2)])
        self.assertRaises(RegionError, Prism3D, regions2d.from_ascii('##\n#.'),
            2, [(1, 1, 0)])
    def test_bad_layers(self):
        self.assertRaises(RegionError, Prism3D, regions2d.rect(2, 2), -1)
        self.assertRaises(RegionError, solid3d.tower, 0)
        self.assertRaises(RegionError, solid3d.m_tower, 0)
    def test_layer_cells(self):
        prism = solid3d.m_tower(2)
        self.assertEqual(len(prism.layer_cells(0)), 4)
        self.assertEqual(sorted(prism.layer_cells(1)), [(1, 0), (1, 1)])
        self.assertEqual(prism.layer_cells(2), frozenset())
    def test_contains(self):
        prism = solid3d.m_tower(2)
        self.assertIn((0, 0, 0), prism)
        self.assertNotIn((0, 0, 1), prism)
        self.assertNotIn((0, 0, 2), prism)

class TestCountBricks(unittest.TestCase):
    """test: count_bricks"""
    def test_towers(self):
        expected = {1: 2, 2: 9, 3: 32, 4: 121, 10: 326041}
        for n, value in expected.items():
            self.assertEqual(solid3d.count_bricks(solid3d.tower(n)), value)
    def test_m_towers(self):
        for n, value in ((1, 1), (2, 3), (3, 12)):
            self.assertEqual(solid3d.count_bricks(solid3d.m_tower(n)), value)
    def test_empty_prism(self):
        self.assertEqual(
            solid3d.count_bricks(Prism3D(regions2d.rect(2, 2), 0)), 1)
    def test_flat_prism(self):
        self.assertEqual(
            solid3d.count_bricks(Prism3D(regions2d.rect(2, 4), 1)), 5)
    def test_odd_prism(self):
        self.assertEqual(
            solid3d.count_bricks(Prism3D(regions2d.rect(1, 3), 1)), 0)
        self.assertEqual(solid3d.count_bricks(
            Prism3D(regions2d.rect(2, 2), 2, [(0, 0, 0)])), 0)
    def test_section_limit(self):
        self.assertRaises(LimitError, solid3d.count_bricks,
            Prism3D(regions2d.rect(3, 3), 2))
    def test_half_towers(self):
        # T_2n = A_n ** 2 and T_2n+1 = 2 B_n ** 2
        a = {1: 3, 2: 11, 3: 41, 4: 153}
        b = {1: 4, 2: 15, 3: 56, 4: 209}
        for n in range(1, 5):
            self.assertEqual(solid3d.count_bricks(solid3d.tower(2 * n)),
                a[n] ** 2)
            self.assertEqual(solid3d.count_bricks(solid3d.tower(2 * n + 1)),
                2 * b[n] ** 2)
    def test_cross_section_symmetry(self):
        prism = Prism3D(regions2d.from_ascii('###\n#..'), 4,
            [(0, 2, 3), (1, 0, 0)])
        expected = solid3d.count_bricks(prism)
        for op in regions2d.TRANSFORMS:
            self.assertEqual(solid3d.count_bricks(prism.transform(op)),
                expected)
    def test_unknown_transform(self):
        self.assertRaises(RegionError, solid3d.tower(2).transform, 'spin')

class TestOracle(unittest.TestCase):
    """test: count_bricks_bruteforce against count_bricks"""
    def test_towers(self):
        for n in range(1, 7):
            self.assertEqual(solid3d.count_bricks_bruteforce(solid3d.tower(n)),
                solid3d.count_bricks(solid3d.tower(n)))
            self.assertEqual(
                solid3d.count_bricks_bruteforce(solid3d.m_tower(n)),
                solid3d.count_bricks(solid3d.m_tower(n)))
    def test_random_deletions(self):
        rng = random.Random(2016)
        for _ in range(60):
            base = solid3d.tower(rng.randrange(1, 7))
            cells = sorted(base.cells())
            deleted = rng.sample(cells, 2 * rng.randrange(0, len(cells) // 2))
            prism = Prism3D(base.cross_section(), base.layers(), deleted)
            self.assertEqual(solid3d.count_bricks_bruteforce(prism),
                solid3d.count_bricks(prism), repr(sorted(deleted)))
    def test_other_sections(self):
        for text, layers in (('##\n#.', 4), ('###\n##.', 4), ('####', 5),
                             ('.#.\n###', 4), ('###\n###', 3)):
            prism = Prism3D(regions2d.from_ascii(text), layers)
            self.assertEqual(solid3d.count_bricks_bruteforce(prism),
                solid3d.count_bricks(prism), text)
    def test_size_guard(self):
        self.assertRaises(LimitError, solid3d.count_bricks_bruteforce,
            solid3d.tower(7))

if __name__ == '__main__':
    unittest.main()
