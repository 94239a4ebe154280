"""Breadth-first traversal with a self-consuming queue.

:func:`bfirst` builds the queue of tree nodes as a lazy stream that reads
itself: each step takes one node from the front and appends its non-empty
children to the back, while the back is still an unevaluated recipe.  A
count of how many queue entries are already known keeps the reader from
ever reaching the recipe it is producing.
"""

from __future__ import annotations

from collections import deque

from .engine import Arena, Cell, force, is_evaluated, new_recipe, new_value, tie
from .lazy_list import NIL, Cons

__all__ = [
    "BFork",
    "EMPTY_TREE",
    "QueueTrace",
    "bfirst",
    "bfirst_nodes",
    "bfs_oracle",
    "heap_tree",
    "tree_from_nested",
]


class _EmptyTree:
    __slots__ = ()

    def __repr__(self):
        return "EMPTY_TREE"

    def __reduce__(self):
        return "EMPTY_TREE"


EMPTY_TREE = _EmptyTree()


class BFork:
    """Binary tree node with lazy subtrees (so trees may be infinite)."""

    __slots__ = ("left", "elt", "right")

    def __init__(self, left: Cell, elt, right: Cell):
        self.left = left
        self.elt = elt
        self.right = right
        left.arena.stats.tree_nodes += 1

    def __repr__(self):
        return f"BFork({self.left!r}, {self.elt!r}, {self.right!r})"


def tree_from_nested(a: Arena, nested) -> Cell:
    """Build a finite tree from ``None`` or ``(left, elt, right)`` tuples."""
    if nested is None:
        return new_value(a, EMPTY_TREE)
    left, elt, right = nested
    return new_value(a, BFork(tree_from_nested(a, left), elt, tree_from_nested(a, right)))


def heap_tree(a: Arena, i: int = 1) -> Cell:
    """Infinite complete binary tree labelled by heap index (children 2i, 2i+1)."""
    return new_recipe(a, lambda: BFork(heap_tree(a, 2 * i), i, heap_tree(a, 2 * i + 1)))


class QueueTrace:
    """Instrumentation for the queue producer.

    ``steps`` records ``(children, known_before, known_after)`` per consumed
    node; ``unknown_forces`` counts reads of queue cells that were not yet
    evaluated (a correct producer never makes one).
    """

    def __init__(self):
        self.steps: list[tuple[int, int, int]] = []
        self.unknown_forces = 0


def bfirst_nodes(t: Cell, trace: QueueTrace | None = None) -> Cell:
    """The self-referential queue itself: a stream of tree nodes in level order."""
    a = t.arena

    def read(q):
        if trace is not None and not is_evaluated(q):
            trace.unknown_forces += 1
        return force(q)

    def bf(q, n):
        # q: cell of the queue, of which n entries are known
        while n:
            node = read(q)
            root = node.head
            q = node.tail
            left = force(root.left)
            right = force(root.right)
            if left is EMPTY_TREE and right is EMPTY_TREE:
                if trace is not None:
                    trace.steps.append((0, n, n - 1))
                n -= 1
                continue
            if left is EMPTY_TREE or right is EMPTY_TREE:
                child = right if left is EMPTY_TREE else left
                if trace is not None:
                    trace.steps.append((1, n, n))
                return Cons(child, new_recipe(a, lambda q=q, n=n: bf(q, n)))
            if trace is not None:
                trace.steps.append((2, n, n + 1))
            rest = new_recipe(a, lambda q=q, n=n: bf(q, n + 1))
            return Cons(left, new_value(a, Cons(right, rest)))
        return NIL  # queue used up

    def start(r):
        root = force(t)
        if root is EMPTY_TREE:
            return NIL
        return Cons(root, new_recipe(a, lambda: bf(r, 1)))

    return tie(a, start)


def bfirst(t: Cell, trace: QueueTrace | None = None) -> Cell:
    """Stream of the elements of ``t`` in breadth-first order.

    Works on infinite trees; allocates one queue cell per node visited.
    """
    a = t.arena

    def elts(q):
        node = force(q)
        if node is NIL:
            return NIL
        rest = node.tail
        return Cons(node.head.elt, new_recipe(a, lambda: elts(rest)))

    nodes = bfirst_nodes(t, trace)
    return new_recipe(a, lambda: elts(nodes))


def bfs_oracle(t: Cell) -> list:
    """Level-order elements of a finite tree using an ordinary FIFO."""
    out = []
    queue = deque([t])
    while queue:
        node = force(queue.popleft())
        if node is EMPTY_TREE:
            continue
        out.append(node.elt)
        queue.append(node.left)
        queue.append(node.right)
    return out
