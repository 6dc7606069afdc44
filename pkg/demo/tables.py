#!/usr/bin/env python
# coding:utf-8

"""print the A, B, C, L3 table and the tower table, counted three ways"""

from prettytable import PrettyTable

from tilecount import count2d, regions2d, solid3d
from tilecount.sequences import catalog, closed_eval

families = catalog()

table = PrettyTable(['n', 'A_n', 'B_n', 'C_n', 'L3(2n, 2n)', 'A_n tilings'])
for n in range(1, 11):
    table.add_row([n,
        families.A.term(n),
        families.B.term(n),
        families.C.term(n),
        closed_eval(families.L3diag.closed, n),
        count2d.count_tilings(regions2d.a_grid(n))])
print(table)

table = PrettyTable(['n', 'T_n', 'M_n', 'T_n bricks'])
for n in range(1, 11):
    table.add_row([n,
        closed_eval(families.T.closed, n),
        families.M.term(n),
        solid3d.count_bricks(solid3d.tower(n)) if n <= 8 else '-'])
print(table)
