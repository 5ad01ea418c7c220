# -*- coding: utf-8 -*-

import typing as T

T_PRINTER = T.Callable[[str], None]

T_INDEX_SET = tuple[int, ...]
"""
A sorted tuple of 1-based indices, e.g. the ``L`` of a discriminantal hyperplane.
"""

T_PAIR = tuple[int, int]
"""
A sorted pair of 1-based line indices naming a double point ``P_ij``.
"""
