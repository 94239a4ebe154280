"""Explicitly circular structures: ``ones``, circular lists, doubly linked
lists and right-threaded binary search trees.

Each is built by handing a cell its own handle (:func:`~circprog.engine.tie`)
so that back-pointers are ordinary references to cells that already exist.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Callable

from .engine import Arena, Cell, LimitExceeded, force, new_recipe, new_value, tie
from .lazy_list import NIL, Cons

__all__ = [
    "DEFAULT_BUDGET",
    "Dbl",
    "EMPTY",
    "Fork",
    "GenSpec",
    "NIL",
    "Thrd",
    "backward_elements",
    "circ",
    "double",
    "forward_elements",
    "last_node",
    "ones",
    "thread",
    "threaded_walk",
    "uncirc",
]

DEFAULT_BUDGET = 2**20


@dataclass(frozen=True)
class GenSpec:
    """Generator for circ/uncirc/double.

    Emits ``emit(seed), emit(step(seed)), ...`` up to the first value on
    which ``stop`` holds.
    """

    seed: Any
    step: Callable[[Any], Any]
    emit: Callable[[Any], Any]
    stop: Callable[[Any], bool]


def ones(a: Arena) -> Cell:
    """The stream 1, 1, 1, ... as a single self-referencing cons cell."""
    return tie(a, lambda c: Cons(1, c))


def circ(a: Arena, spec: GenSpec, budget: int = DEFAULT_BUDGET) -> Cell:
    """Circular stream of ``emit(y)`` for y in seed..g^n(seed), where
    ``stop(g^n(seed))`` first holds; the last tail points back at the head."""

    def build(c, y, i):
        if i >= budget:
            raise LimitExceeded(f"stop predicate did not hold within {budget} steps")
        if spec.stop(y):
            rest = c
        else:
            nxt = spec.step(y)
            rest = new_recipe(a, lambda: build(c, nxt, i + 1))
        return Cons(spec.emit(y), rest)

    return tie(a, lambda c: build(c, spec.seed, 0))


def uncirc(a: Arena, spec: GenSpec, budget: int = DEFAULT_BUDGET) -> Cell:
    """Same sequence as :func:`circ`, unfolded: no cell is ever revisited,
    so the cells allocated grow with the demanded length."""

    def build(y, i):
        if i >= budget:
            raise LimitExceeded(f"stop predicate did not hold within {budget} steps")
        if spec.stop(y):
            rest = new_recipe(a, lambda: build(spec.seed, 0))
        else:
            nxt = spec.step(y)
            rest = new_recipe(a, lambda: build(nxt, i + 1))
        return Cons(spec.emit(y), rest)

    return new_recipe(a, lambda: build(spec.seed, 0))


# -- doubly linked lists -----------------------------------------------------


class Dbl:
    """Doubly linked node; ``prev`` and ``next`` are cells of Dbl or NIL."""

    __slots__ = ("prev", "elt", "next")

    def __init__(self, prev: Cell, elt, next: Cell):
        self.prev = prev
        self.elt = elt
        self.next = next
        next.arena.stats.stream_nodes += 1

    def __repr__(self):
        return f"Dbl({self.prev!r}, {self.elt!r}, {self.next!r})"


def double(a: Arena, spec: GenSpec, budget: int = DEFAULT_BUDGET) -> Cell:
    """Doubly linked list of ``emit(y)`` for y before the first stop value.

    Every node position is a tied cell, so the node built there can hand its
    own cell to its successor as the ``prev`` pointer.  Successors stay
    recipes until walked.
    """

    def build(prev, y, i, d):
        if spec.stop(y):
            return NIL
        if i >= budget:
            raise LimitExceeded(f"stop predicate did not hold within {budget} steps")
        nxt = spec.step(y)
        return Dbl(prev, spec.emit(y), tie(a, lambda c: build(d, nxt, i + 1, c)))

    return tie(a, lambda d: build(new_value(a, NIL), spec.seed, 0, d))


def forward_elements(d: Cell) -> list:
    out = []
    node = force(d)
    while node is not NIL:
        out.append(node.elt)
        node = force(node.next)
    return out


def last_node(d: Cell) -> Cell:
    """Cell of the final node of a non-empty doubly linked list."""
    node = force(d)
    if node is NIL:
        raise ValueError("empty doubly linked list has no last node")
    while True:
        nxt = node.next
        nxt_node = force(nxt)
        if nxt_node is NIL:
            return d
        d, node = nxt, nxt_node


def backward_elements(d: Cell) -> list:
    """Elements from ``d`` back to the first node, following ``prev``."""
    out = []
    node = force(d)
    while node is not NIL:
        out.append(node.elt)
        node = force(node.prev)
    return out


# -- threaded trees ------------------------------------------------------------


class _Empty:
    __slots__ = ()

    def __repr__(self):
        return "EMPTY"

    def __reduce__(self):
        return "EMPTY"


EMPTY = _Empty()


class Thrd:
    """A right pointer repurposed as a link to the infix successor."""

    __slots__ = ("succ",)

    def __init__(self, succ: Cell):
        self.succ = succ
        succ.arena.stats.tree_nodes += 1

    def __repr__(self):
        return f"Thrd({self.succ!r})"


class Fork:
    __slots__ = ("left", "elt", "right")

    def __init__(self, left: Cell, elt, right: Cell):
        self.left = left
        self.elt = elt
        self.right = right
        left.arena.stats.tree_nodes += 1

    def __repr__(self):
        return f"Fork({self.left!r}, {self.elt!r}, {self.right!r})"


def thread(a: Arena, items) -> Cell:
    """Right-threaded binary search tree of the distinct ``items``.

    Left subtrees take elements below the root, right subtrees those above.
    Each left subtree threads its last node to the root; the rightmost path
    of the whole tree ends in EMPTY.
    """
    items = list(items)

    def build(isleft, succ, xs, t):
        if not xs:
            if isleft or succ is None:
                return EMPTY
            return Thrd(succ)
        h = xs[0]
        below = [x for x in xs if x < h]
        above = [x for x in xs if x > h]
        return Fork(
            tie(a, lambda c: build(True, t, below, c)),
            h,
            tie(a, lambda c: build(False, succ, above, c)),
        )

    return tie(a, lambda t: build(True, None, items, t))


def threaded_walk(t: Cell, *, return_steps: bool = False):
    """In-order elements of a threaded tree, using no stack.

    Descends to the leftmost node, then repeatedly emits and either follows a
    thread to the successor or descends leftmost in the right subtree.  With
    ``return_steps`` also returns the number of pointer moves made.
    """
    out = []
    steps = 0
    node = force(t)
    # descend leftmost
    while node is not EMPTY:
        left = force(node.left)
        if left is EMPTY:
            break
        node = left
        steps += 1
    while node is not EMPTY:
        out.append(node.elt)
        right = force(node.right)
        steps += 1
        if isinstance(right, Thrd):
            node = force(right.succ)
            continue
        node = right
        while node is not EMPTY:
            left = force(node.left)
            if left is EMPTY:
                break
            node = left
            steps += 1
    if return_steps:
        return out, steps
    return out
