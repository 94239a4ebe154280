"""
Breadth-first traversal with a queue that eats itself
=====================================================

``bfirst`` produces its work queue as the same lazy list it reads from,
keeping a count of how much of that list is known.  That is enough to
traverse even an infinite tree.
"""

from circprog import Arena, stats
from circprog.bfs import QueueTrace, bfirst, bfs_oracle, heap_tree, tree_from_nested
from circprog.lazy_list import take, to_list

a = Arena()
t = tree_from_nested(a, (((None, 4, None), 2, None), 1, ((None, 6, None), 3, (None, 7, None))))
print("bfirst:", to_list(bfirst(t)), "| FIFO oracle:", bfs_oracle(t))

# Infinite complete tree labelled by heap index: level order is 1, 2, 3, ...
a = Arena()
trace = QueueTrace()
print("infinite:", take(bfirst(heap_tree(a), trace), 20))
print("stream nodes for 20 elements:", stats(a).stream_nodes)
print("queue reads past the known part:", trace.unknown_forces)
print("first steps (children, known before, known after):", trace.steps[:6])
