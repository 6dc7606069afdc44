#!/usr/bin/env python
# coding:utf-8

"""draw every tiling of the small A, B and C grids"""

from tilecount import count2d, regions2d

grids = (
    ('A_1', regions2d.a_grid(1)),
    ('B_1', regions2d.b_grid(1)),
    ('C_1', regions2d.c_grid(1)),
)

for label, region in grids:
    tilings = count2d.enumerate_tilings(region)
    print('%s: %d tilings of' % (label, len(tilings)))
    print(regions2d.to_ascii(region))
    for tiling in tilings:
        print('')
        print(count2d.render_tiling_ascii(tiling))
    print('')
