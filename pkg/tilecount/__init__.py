#!/usr/bin/env python
# coding:utf-8

"""init file of the package"""

__version__ = '0.1'

class TilecountError(Exception):
    """root of every error raised by tilecount"""
    pass

from tilecount import regions2d
from tilecount import count2d
from tilecount import solid3d
from tilecount import quad
from tilecount import sequences
from tilecount import identities
