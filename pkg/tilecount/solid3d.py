#!/usr/bin/env python
# coding:utf-8

"""brick (1 x 1 x 2) tilings of prisms built on a small cross-section"""

import collections
import functools
import itertools
import logging

from tilecount.count2d import LimitError, count_tilings
from tilecount.regions2d import (Region2D, RegionError, rect,
    transform_cell, TRANSFORMS)

logger = logging.getLogger(__name__)

__MAX_SECTION__ = 8
__MAX_ORACLE_CELLS__ = 24

Cell3 = collections.namedtuple('Cell3', ['row', 'col', 'layer'])

class Prism3D:
    """
    A cross-section stacked `layers` times, minus some deleted cells.

    The cross-section is normalized like any Region2D; deleted cells are
    given in that normalized frame as (row, col, layer).
    """
    def __init__(self, cross_section, layers, deleted=()):
        if not isinstance(cross_section, Region2D):
            cross_section = Region2D(cross_section)
        if not isinstance(layers, int) or layers < 0:
            raise RegionError('layers must be a nonnegative integer, got %r' % \
                (layers,))
        deleted = frozenset(Cell3(*cell) for cell in deleted)
        outside = sorted(c for c in deleted if (c.row, c.col) not in
            cross_section or not 0 <= c.layer < layers)
        if outside:
            raise RegionError('deleted cells %s lie outside the prism' % \
                ', '.join(str(tuple(c)) for c in outside))
        self.__section__ = cross_section
        self.__layers__ = layers
        self.__deleted__ = deleted
    def __len__(self):
        return len(self.__section__) * self.__layers__ - len(self.__deleted__)
    def __contains__(self, cell):
        row, col, layer = cell
        return (row, col) in self.__section__ and \
            0 <= layer < self.__layers__ and \
            (row, col, layer) not in self.__deleted__
    def __eq__(self, other):
        return isinstance(other, Prism3D) and \
            (self.__section__, self.__layers__, self.__deleted__) == \
            (other.__section__, other.__layers__, other.__deleted__)
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        return hash((self.__section__, self.__layers__, self.__deleted__))
    def __repr__(self):
        return '<Prism3D %d-cell section x %d layers, %d deleted>' % \
            (len(self.__section__), self.__layers__, len(self.__deleted__))
    def cross_section(self):
        """getter : the Region2D every layer is cut from"""
        return self.__section__
    def layers(self):
        """getter : number of layers"""
        return self.__layers__
    def deleted(self):
        """getter : frozenset of deleted Cell3"""
        return self.__deleted__
    def layer_cells(self, layer):
        """the cells of one layer still present, as Cell2"""
        if not 0 <= layer < self.__layers__:
            return frozenset()
        return frozenset(c for c in self.__section__.cells()
            if (c.row, c.col, layer) not in self.__deleted__)
    def cells(self):
        """every present cell as Cell3"""
        return frozenset(Cell3(c.row, c.col, z)
            for z in range(self.__layers__) for c in self.layer_cells(z))
    def transform(self, op):
        """apply a regions2d transform to the cross-section of every layer"""
        if op not in TRANSFORMS:
            raise RegionError('unknown transform `%s`, expected one of %s' % \
                (op, ', '.join(TRANSFORMS)))
        height = self.__section__.height()
        width = self.__section__.width()
        section = [transform_cell(c, op, height, width)
            for c in self.__section__]
        deleted = [transform_cell((c.row, c.col), op, height, width) + \
            (c.layer,) for c in self.__deleted__]
        return Prism3D(section, self.__layers__, deleted)

def tower(n):
    """the 2 x 2 x n tower counted by T_n"""
    if not isinstance(n, int) or n < 1:
        raise RegionError('n must be an integer >= 1, got %r' % (n,))
    return Prism3D(rect(2, 2), n)

def m_tower(n):
    """the 2 x 2 x n tower without two edge-adjacent top cells, counted by M_n"""
    if not isinstance(n, int) or n < 1:
        raise RegionError('n must be an integer >= 1, got %r' % (n,))
    return Prism3D(rect(2, 2), n, [(0, 0, n - 1), (0, 1, n - 1)])

@functools.lru_cache(maxsize=4096)
def _flat(cells):
    """tilings of one layer's leftover cells with flat bricks"""
    return count_tilings(Region2D(cells))

def _subsets(cells):
    return itertools.chain.from_iterable(
        itertools.combinations(cells, size) for size in range(len(cells) + 1))

def count_bricks(prism):
    """
    Count the brick tilings of `prism` layer by layer.

    The state after a layer is the set of its cells whose brick sticks up
    into the next layer.  Within a layer, the cells neither filled from
    below nor raised into the next layer are tiled flat, which is a two
    dimensional count.
    """
    section = prism.cross_section()
    if len(section) > __MAX_SECTION__:
        raise LimitError('cross-section has %d cells, the limit is %d' % \
            (len(section), __MAX_SECTION__))
    if len(prism) % 2:
        return 0
    states = {frozenset(): 1}
    for layer in range(prism.layers()):
        present = prism.layer_cells(layer)
        above = prism.layer_cells(layer + 1)
        following = collections.defaultdict(int)
        for filled, ways in states.items():
            free = present - filled
            for raised in _subsets(sorted(free & above)):
                raised = frozenset(raised)
                flat = _flat(free - raised)
                if flat:
                    following[raised] += ways * flat
        states = following
        logger.debug('layer %d: %d protrusion states', layer, len(states))
    return states.get(frozenset(), 0)

def count_bricks_bruteforce(prism):
    """
    count brick tilings by backtracking; the oracle for count_bricks
    """
    if len(prism) > __MAX_ORACLE_CELLS__:
        raise LimitError('prism has %d cells, the backtracking limit is %d' % \
            (len(prism), __MAX_ORACLE_CELLS__))
    if len(prism) % 2:
        return 0
    cells = prism.cells()
    order = sorted(cells, key=lambda c: (c.layer, c.row, c.col))
    covered = set()
    def count_from(index):
        while index < len(order) and order[index] in covered:
            index += 1
        if index == len(order):
            return 1
        cell = order[index]
        total = 0
        for other in (Cell3(cell.row, cell.col + 1, cell.layer),
                      Cell3(cell.row + 1, cell.col, cell.layer),
                      Cell3(cell.row, cell.col, cell.layer + 1)):
            if other in cells and other not in covered:
                covered.update((cell, other))
                total += count_from(index + 1)
                covered.difference_update((cell, other))
        return total
    return count_from(0)
