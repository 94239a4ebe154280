"""
Threaded binary search trees
============================

Right pointers that would be empty instead point at the in-order
successor, so the tree can be walked with a simple loop and no stack.
"""

from circprog import Arena, force
from circprog.knots import EMPTY, Thrd, thread, threaded_walk

a = Arena()
t = thread(a, [50, 30, 70, 20, 40, 60, 80, 30, 70])
out, steps = threaded_walk(t, return_steps=True)
print("in order:", out, f"({steps} pointer moves)")


def show(cell, depth=0):
    node = force(cell)
    if node is EMPTY:
        return
    show(node.left, depth + 1)
    right = force(node.right)
    link = f"  -> thread to {force(right.succ).elt}" if isinstance(right, Thrd) else ""
    print("    " * depth + str(node.elt) + link)
    if not isinstance(right, Thrd):
        show(node.right, depth + 1)


show(t)
