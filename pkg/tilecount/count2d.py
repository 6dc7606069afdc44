#!/usr/bin/env python
# coding:utf-8

"""exact domino tiling counts of two dimensional regions"""

import collections
import itertools
import logging

from tilecount import TilecountError
from tilecount.regions2d import Cell2, Region2D

logger = logging.getLogger(__name__)

__MAX_WIDTH__ = 32
__MAX_ORACLE_CELLS__ = 30

__NODE__ = 'o'
__HOLE__ = '.'
__ACROSS__ = '-'
__DOWN__ = '|'

class LimitError(TilecountError):
    """an input is larger than the algorithm accepts"""
    pass

class TilingError(TilecountError):
    """a set of dominoes is not a tiling"""
    pass

Domino = collections.namedtuple('Domino', ['first', 'second'])

def domino(one, other):
    """an unordered pair of edge-adjacent cells, stored smaller first"""
    one, other = sorted((Cell2(*one), Cell2(*other)))
    if abs(one.row - other.row) + abs(one.col - other.col) != 1:
        raise TilingError('cells %s and %s are not edge-adjacent' % \
            (tuple(one), tuple(other)))
    return Domino(one, other)

class Tiling:
    """
    A set of disjoint dominoes.  When `region` is given the dominoes must
    cover it exactly.
    """
    def __init__(self, dominoes, region=None):
        dominoes = sorted(domino(*pair) for pair in dominoes)
        covered = set()
        for piece in dominoes:
            for cell in piece:
                if cell in covered:
                    raise TilingError('cell %s is covered twice' % \
                        (tuple(cell),))
                covered.add(cell)
        if region is not None and covered != set(region.cells()):
            missing = sorted(set(region.cells()) - covered)
            extra = sorted(covered - set(region.cells()))
            raise TilingError(
                'dominoes do not cover the region: missing %s, outside %s' % \
                ([tuple(c) for c in missing], [tuple(c) for c in extra]))
        self.__dominoes__ = tuple(dominoes)
        self.__cells__ = frozenset(covered)
    def __len__(self):
        return len(self.__dominoes__)
    def __iter__(self):
        return iter(self.__dominoes__)
    def __eq__(self, other):
        return isinstance(other, Tiling) and \
            self.__dominoes__ == other.__dominoes__
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        return hash(self.__dominoes__)
    def __str__(self):
        return render_tiling_ascii(self)
    def dominoes(self):
        """getter : sorted tuple of Domino"""
        return self.__dominoes__
    def cells(self):
        """getter : the covered cells"""
        return self.__cells__
    def region(self):
        """the region this tiling covers"""
        return Region2D(self.__cells__)

def count_tilings(region):
    """
    Count the perfect domino tilings of `region` with a broken-profile
    dynamic programme.

    Cells are scanned row by row.  Bit `c` of a profile tells whether the
    next cell to visit in column `c` is already covered by a domino placed
    earlier.  The scan runs along the shorter side of the region, so the
    number of profiles is at most 2 ** min(height, width).
    """
    if len(region) % 2:
        return 0
    if not len(region):
        return 1
    if region.height() < region.width():
        region = region.transpose()
    height, width = region.height(), region.width()
    if width > __MAX_WIDTH__:
        raise LimitError('region width %d exceeds the profile limit of %d' % \
            (width, __MAX_WIDTH__))
    cells = region.cells()
    profiles = {0: 1}
    peak = 1
    for row in range(height):
        for col in range(width):
            bit = 1 << col
            here = (row, col) in cells
            down = (row + 1, col) in cells
            across = col + 1 < width and (row, col + 1) in cells
            following = collections.defaultdict(int)
            for profile, ways in profiles.items():
                if profile & bit:
                    following[profile ^ bit] += ways
                elif not here:
                    following[profile] += ways
                else:
                    if down:
                        following[profile | bit] += ways
                    if across and not profile & (bit << 1):
                        following[profile | (bit << 1)] += ways
            profiles = following
            peak = max(peak, len(profiles))
    logger.debug('counted %r with at most %d live profiles', region, peak)
    return profiles.get(0, 0)

def _guard(region):
    if len(region) > __MAX_ORACLE_CELLS__:
        raise LimitError('region has %d cells, the backtracking limit is %d' % \
            (len(region), __MAX_ORACLE_CELLS__))

def _placements(region):
    """
    Yield every tiling of `region` as a list of dominoes, always covering
    the first uncovered cell in row-major order, horizontally before
    vertically.
    """
    order = sorted(region.cells())
    cells = region.cells()
    covered = set()
    chosen = []
    def search(index):
        while index < len(order) and order[index] in covered:
            index += 1
        if index == len(order):
            yield list(chosen)
            return
        cell = order[index]
        for other in (Cell2(cell.row, cell.col + 1),
                      Cell2(cell.row + 1, cell.col)):
            if other in cells and other not in covered:
                covered.update((cell, other))
                chosen.append((cell, other))
                for found in search(index + 1):
                    yield found
                chosen.pop()
                covered.difference_update((cell, other))
    return search(0)

def count_tilings_bruteforce(region):
    """count tilings by backtracking; the oracle for count_tilings"""
    _guard(region)
    if len(region) % 2:
        return 0
    order = sorted(region.cells())
    cells = region.cells()
    covered = set()
    def count_from(index):
        while index < len(order) and order[index] in covered:
            index += 1
        if index == len(order):
            return 1
        row, col = order[index]
        total = 0
        for other in ((row, col + 1), (row + 1, col)):
            if other in cells and other not in covered:
                covered.update((order[index], other))
                total += count_from(index + 1)
                covered.difference_update((order[index], other))
        return total
    return count_from(0)

def enumerate_tilings(region, limit=None):
    """
    Return up to `limit` tilings of `region` in a fixed lexicographic
    order; `limit=None` returns all of them.
    """
    _guard(region)
    if limit is not None and (not isinstance(limit, int) or limit < 1):
        raise ValueError('limit must be a positive integer, got %r' % limit)
    if len(region) % 2:
        return []
    return [Tiling(found, region)
        for found in itertools.islice(_placements(region), limit)]

def render_tiling_ascii(tiling):
    """
    Draw a tiling on a doubled grid: `o` marks a cell, `-` joins the two
    halves of a horizontal domino, `|` those of a vertical one and `.` marks
    a hole inside the bounding box.
    """
    cells = tiling.cells()
    if not cells:
        return ''
    height = max(c.row for c in cells) + 1
    width = max(c.col for c in cells) + 1
    canvas = [[' '] * (2 * width - 1) for _ in range(2 * height - 1)]
    for row in range(height):
        for col in range(width):
            canvas[2 * row][2 * col] = \
                __NODE__ if (row, col) in cells else __HOLE__
    for first, second in tiling:
        if first.row == second.row:
            canvas[2 * first.row][2 * first.col + 1] = __ACROSS__
        else:
            canvas[2 * first.row + 1][2 * first.col] = __DOWN__
    return '\n'.join(''.join(line).rstrip() for line in canvas)

def parse_tiling_ascii(text):
    """read back the drawing made by render_tiling_ascii"""
    lines = text.splitlines()
    nodes = set()
    pieces = []
    for y, line in enumerate(lines):
        for x, char in enumerate(line):
            if char == __NODE__ and x % 2 == 0 and y % 2 == 0:
                nodes.add(Cell2(y // 2, x // 2))
            elif char == __ACROSS__ and x % 2 == 1 and y % 2 == 0:
                pieces.append(((y // 2, x // 2), (y // 2, x // 2 + 1)))
            elif char == __DOWN__ and x % 2 == 0 and y % 2 == 1:
                pieces.append(((y // 2, x // 2), (y // 2 + 1, x // 2)))
            elif char not in (' ', __HOLE__):
                raise TilingError('unexpected %r at line %d, column %d' % \
                    (char, y + 1, x + 1))
    tiling = Tiling(pieces)
    if tiling.cells() != nodes:
        raise TilingError('links and cells of the drawing do not match')
    return tiling
