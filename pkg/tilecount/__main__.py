#!/usr/bin/env python
# coding:utf-8

"""python -m tilecount"""

import sys

from tilecount.cli import main

sys.exit(main())
