"""
Doubly linked lists without assignment
======================================

Each node is built knowing its own cell, so it can pass that cell on as
the predecessor of the next node while its own successor is still a recipe.
"""

from circprog import Arena, force, same_cell, stats
from circprog.knots import GenSpec, backward_elements, double, forward_elements, last_node

a = Arena()
spec = GenSpec(seed=1, step=lambda y: y + 1, emit=lambda y: 10 * y, stop=lambda y: y == 6)
d = double(a, spec)

print("forward: ", forward_elements(d))
end = last_node(d)
print("backward:", backward_elements(end))

second = force(d).next
print("second.prev is first:", same_cell(force(second).prev, d))

# Walking back and forth again builds nothing new.
before = stats(a)
for _ in range(10):
    forward_elements(d)
    backward_elements(end)
print("extra executions after 10 more walks:", (stats(a) - before).executions)
