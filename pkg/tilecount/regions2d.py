#!/usr/bin/env python
# coding:utf-8

"""two dimensional regions and the grid families of the tiling tables"""

import collections

from tilecount import TilecountError

__CELL__ = '#'
__EMPTY__ = '.'

ORIENTATIONS = ('SE', 'SW', 'NE', 'NW')
TRANSFORMS = ('reflectH', 'reflectV', 'rotate90')

Cell2 = collections.namedtuple('Cell2', ['row', 'col'])

class RegionError(TilecountError):
    """a region (or prism) cannot be built as requested"""
    pass

class Region2D:
    """
    A finite set of unit cells in the plane.

    Regions are immutable and always normalized: the smallest row and the
    smallest column present are both 0.  The empty region is legal.
    """
    def __init__(self, cells=()):
        cells = [Cell2(*cell) for cell in cells]
        unique = frozenset(cells)
        if len(unique) != len(cells):
            dups = sorted(c for c, n in collections.Counter(cells).items()
                if n > 1)
            raise RegionError('duplicate cells %s' % \
                ', '.join(str(tuple(c)) for c in dups))
        if unique:
            top = min(c.row for c in unique)
            left = min(c.col for c in unique)
            unique = frozenset(Cell2(c.row - top, c.col - left)
                for c in unique)
            self.__height__ = max(c.row for c in unique) + 1
            self.__width__ = max(c.col for c in unique) + 1
        else:
            self.__height__ = 0
            self.__width__ = 0
        self.__cells__ = unique
    def __len__(self):
        return len(self.__cells__)
    def __iter__(self):
        return iter(sorted(self.__cells__))
    def __contains__(self, cell):
        return cell in self.__cells__
    def __eq__(self, other):
        return isinstance(other, Region2D) and \
            self.__cells__ == other.__cells__
    def __ne__(self, other):
        return not self.__eq__(other)
    def __hash__(self):
        return hash(self.__cells__)
    def __str__(self):
        return to_ascii(self)
    def __repr__(self):
        return '<Region2D %dx%d, %d cells>' % \
            (self.__height__, self.__width__, len(self))
    def cells(self):
        """getter : frozenset of Cell2"""
        return self.__cells__
    def width(self):
        """getter : max col + 1"""
        return self.__width__
    def height(self):
        """getter : max row + 1"""
        return self.__height__
    def transpose(self):
        """mirror the region along its main diagonal"""
        return Region2D(Cell2(c.col, c.row) for c in self.__cells__)
    def components(self):
        """return the edge-connected components, each normalized"""
        remaining = set(self.__cells__)
        parts = []
        while remaining:
            seed = min(remaining)
            remaining.discard(seed)
            stack, part = [seed], [seed]
            while stack:
                row, col = stack.pop()
                for near in ((row - 1, col), (row + 1, col),
                             (row, col - 1), (row, col + 1)):
                    if near in remaining:
                        remaining.discard(near)
                        stack.append(near)
                        part.append(near)
            parts.append(Region2D(part))
        return parts

def _positive(name, value, least=1):
    if not isinstance(value, int) or isinstance(value, bool) or value < least:
        raise RegionError('%s must be an integer >= %d, got %r' % \
            (name, least, value))
    return value

def rect(rows, cols):
    """the full rows x cols rectangle"""
    _positive('rows', rows)
    _positive('cols', cols)
    return Region2D((r, c) for r in range(rows) for c in range(cols))

def a_grid(n):
    """the 3 x 2n rectangle counted by A_n"""
    _positive('n', n)
    return rect(3, 2 * n)

def b_grid(n):
    """3 x (2n+1) with the corner (0,0) removed, counted by B_n"""
    _positive('n', n, 0)
    return remove_cells(rect(3, 2 * n + 1), [(0, 0)])

def c_grid(n):
    """3 x (2n+2) with the two top cells of the left end removed"""
    _positive('n', n, 0)
    return remove_cells(rect(3, 2 * n + 2), [(0, 0), (0, 1)])

def l2_region(n, k):
    """
    The width-2 right angle with arms n and k.

    Two strips of width 2 share their 2 x 2 corner: rows 0..1 by cols 0..n
    and rows 0..k by cols 0..1.  The region has 2n+2k cells, is the 2 x 2
    square for (1, 1) and the 2 x (n+1) rectangle when k = 1.
    """
    _positive('n', n)
    _positive('k', k)
    cells = [(r, c) for r in range(2) for c in range(n + 1)]
    cells += [(r, c) for r in range(2, k + 1) for c in range(2)]
    return Region2D(cells)

def l3_region(n, k, orientation='SE'):
    """
    The width-3 right angle made of a 3 x 2n and a 3 x 2k rectangle.

    The vertical arm is 3 columns wide and 2n rows tall.  The horizontal arm
    is 3 rows tall and 2k columns wide; its short side meets the long side
    of the vertical arm, flush with one end of it.  `orientation` names the
    corner where the horizontal arm sits: SE (right of the bottom end), SW
    (left of the bottom end), NE (right of the top end), NW (left of the top
    end).  When n = 1 the vertical arm is only 2 rows tall and the
    horizontal arm overhangs it by one row.
    """
    _positive('n', n)
    _positive('k', k)
    if orientation not in ORIENTATIONS:
        raise RegionError('unknown orientation `%s`, expected one of %s' % \
            (orientation, ', '.join(ORIENTATIONS)))
    tall = 2 * n
    cells = [(r, c) for r in range(tall) for c in range(3)]
    first = tall - 3 if orientation[0] == 'S' else 0
    arm_cols = range(3, 3 + 2 * k) if orientation[1] == 'E' \
        else range(-2 * k, 0)
    cells += [(r, c) for r in range(first, first + 3) for c in arm_cols]
    return Region2D(cells)

def remove_cells(region, cells):
    """return `region` without `cells`, which must all be present"""
    cells = [Cell2(*cell) for cell in cells]
    absent = [c for c in cells if c not in region]
    if absent:
        raise RegionError('cannot remove absent cells %s' % \
            ', '.join(str(tuple(c)) for c in sorted(absent)))
    return Region2D(region.cells() - frozenset(cells))

def transform_cell(cell, op, height, width):
    """map one cell of a height x width frame through `op`"""
    row, col = cell
    if op == 'reflectH':
        return Cell2(row, width - 1 - col)
    if op == 'reflectV':
        return Cell2(height - 1 - row, col)
    if op == 'rotate90':
        return Cell2(col, height - 1 - row)
    raise RegionError('unknown transform `%s`, expected one of %s' % \
        (op, ', '.join(TRANSFORMS)))

def transform(region, op):
    """
    reflectH mirrors left to right, reflectV mirrors top to bottom and
    rotate90 turns the region a quarter turn clockwise
    """
    if op not in TRANSFORMS:
        raise RegionError('unknown transform `%s`, expected one of %s' % \
            (op, ', '.join(TRANSFORMS)))
    height, width = region.height(), region.width()
    return Region2D(transform_cell(c, op, height, width) for c in region)

def from_ascii(text):
    """
    Parse a region drawn with `#` for cells and `.` for holes, one line per
    row.  Rows may have different lengths; missing positions are holes.
    """
    cells = []
    for row, line in enumerate(text.splitlines()):
        for col, char in enumerate(line.rstrip('\r')):
            if char == __CELL__:
                cells.append((row, col))
            elif char != __EMPTY__:
                raise RegionError(
                    'unknown character %r at line %d, column %d' % \
                    (char, row + 1, col + 1))
    return Region2D(cells)

def to_ascii(region):
    """draw a region with `#` and `.`; the empty region draws as ''"""
    cells = region.cells()
    return '\n'.join(
        ''.join(__CELL__ if (r, c) in cells else __EMPTY__
            for c in range(region.width()))
        for r in range(region.height()))
