"""Lazy cons streams.

A stream is a :class:`~circprog.engine.Cell` whose value is either
:data:`NIL` or a :class:`Cons` with a strict head and a tail cell.  Streams
may be infinite or cyclic, so consumers here are all demand-bounded.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator

from .engine import Arena, Cell, CircprogError, force, new_recipe, new_value

__all__ = [
    "Cons",
    "INT64_MAX",
    "NIL",
    "OutOfRange",
    "count_from",
    "filter_stream",
    "from_iterable",
    "from_iterator",
    "head",
    "iterate",
    "nth",
    "null",
    "tail",
    "take",
    "to_list",
]

INT64_MAX = 2**63 - 1


class OutOfRange(CircprogError, IndexError):
    """A stream ended before the requested position."""


class _Nil:
    __slots__ = ()

    def __repr__(self):
        return "NIL"

    def __reduce__(self):
        return "NIL"


NIL = _Nil()


class Cons:
    __slots__ = ("head", "tail")

    def __init__(self, head, tail: Cell):
        self.head = head
        self.tail = tail
        tail.arena.stats.stream_nodes += 1

    def __repr__(self):
        return f"Cons({self.head!r}, {self.tail!r})"


def from_iterable(a: Arena, items: Iterable) -> Cell:
    """Strict finite stream holding ``items``; every cell is already a value."""
    s = new_value(a, NIL)
    for x in reversed(list(items)):
        s = new_value(a, Cons(x, s))
    return s


def from_iterator(a: Arena, it: Iterator) -> Cell:
    """Lazy stream that pulls from a Python iterator on demand."""
    it = iter(it)

    def step():
        for x in it:
            return Cons(x, new_recipe(a, step))
        return NIL

    return new_recipe(a, step)


def count_from(a: Arena, n: int) -> Cell:
    """The stream n, n+1, n+2, ...; overflowing 64 bits raises OverflowError."""

    def step(k):
        if k > INT64_MAX:
            raise OverflowError(f"{k} exceeds the 64-bit element range")
        return Cons(k, new_recipe(a, lambda: step(k + 1)))

    return new_recipe(a, lambda: step(n))


def filter_stream(pred, s: Cell) -> Cell:
    """Lazy substream of ``s`` whose elements satisfy ``pred``.

    Input is consumed only as far as the output is demanded.
    """
    a = s.arena

    def step(s=s):
        while True:
            node = force(s)
            if node is NIL:
                return NIL
            if pred(node.head):
                rest = node.tail
                return Cons(node.head, new_recipe(a, lambda: step(rest)))
            s = node.tail

    return new_recipe(a, step)


def null(s: Cell) -> bool:
    return force(s) is NIL


def head(s: Cell):
    node = force(s)
    if node is NIL:
        raise OutOfRange("head of empty stream")
    return node.head


def tail(s: Cell) -> Cell:
    node = force(s)
    if node is NIL:
        raise OutOfRange("tail of empty stream")
    return node.tail


def iterate(s: Cell) -> Iterator:
    """Yield elements on demand; never terminates on infinite or cyclic streams."""
    while True:
        node = force(s)
        if node is NIL:
            return
        yield node.head
        s = node.tail


def take(s: Cell, k: int) -> list:
    if k < 0:
        raise ValueError("k must be non-negative")
    out = []
    while len(out) < k:
        node = force(s)
        if node is NIL:
            break
        out.append(node.head)
        s = node.tail
    return out


def nth(s: Cell, i: int):
    if i < 0:
        raise ValueError("index must be non-negative")
    for _ in range(i):
        node = force(s)
        if node is NIL:
            raise OutOfRange(f"stream has fewer than {i + 1} elements")
        s = node.tail
    return head(s)


def to_list(s: Cell) -> list:
    """All elements of a finite stream."""
    return list(iterate(s))
