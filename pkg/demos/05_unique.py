"""
Removing duplicates in space linear in the output
=================================================

``unique`` checks each element against the result list it is building,
searching only the part already known.  ``unique_f`` gets the same answer
by re-filtering the input and pays for it in intermediate lists.
"""

import random

from circprog import Arena, stats
from circprog.lazy_list import from_iterable, from_iterator, take, to_list
from circprog.selfref import unique, unique_backpatch, unique_f, unique_l

xs = [1, 2, 1, 3, 2]
a = Arena()
print("unique:  ", to_list(unique(a, from_iterable(a, xs))))
print("uniqueL: ", to_list(unique_l(a, from_iterable(a, xs))), "(last occurrence order)")
print("uniqueF: ", to_list(unique_f(a, from_iterable(a, xs))))
print("backpatch:", unique_backpatch(xs))

rng = random.Random(0)
print("\n   m  unique-nodes  uniqueF-nodes")
for m in (250, 500, 1000, 2000):
    data = [rng.randrange(50) for _ in range(m)]
    costs = []
    for fn in (unique, unique_f):
        a = Arena()
        s = from_iterable(a, data)
        before = stats(a)
        to_list(fn(a, s))
        costs.append((stats(a) - before).stream_nodes)
    print(f"{m:4d}  {costs[0]:12d}  {costs[1]:13d}")

# Works on infinite input too.
a = Arena()
print("\ninfinite 1,1,2,2,...:", take(unique(a, from_iterator(a, (i // 2 for i in range(2, 10**9)))), 10))
