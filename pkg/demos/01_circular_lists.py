"""
Circular lists from self-reference
==================================

A stream defined in terms of itself becomes a cycle in memory: the tail
of ``ones`` is the very cell that holds ``ones``.
"""

from circprog import Arena, same_cell, stats
from circprog.knots import GenSpec, circ, ones, uncirc
from circprog.lazy_list import nth, tail, take

a = Arena()
o = ones(a)
print("ones:", take(o, 8))
# a million elements later there is still only one cons cell
print("element 10**6:", nth(o, 10**6), "| stream nodes:", stats(a).stream_nodes)
print("tail is the head:", same_cell(o, tail(o)))

# The same trick for any period: 0, 1, 2, 0, 1, 2, ...
spec = GenSpec(seed=0, step=lambda y: y + 1, emit=lambda y: y, stop=lambda y: y == 2)
a, b = Arena(), Arena()
print("circ:  ", take(circ(a, spec), 12), "cells:", stats(a).cells_allocated)
# Without the back-pointer the list is unfolded, one cell per element demanded.
print("uncirc:", take(uncirc(b, spec), 12), "cells:", stats(b).cells_allocated)
