"""Self-referential list algorithms: order-preserving deduplication and
prime streams that consult the very stream they are producing.

``unique`` keeps its result list as its own membership table, with a count
of how much of that list is known so the search never reaches the recipe at
its end.  ``primes_circular`` filters candidates against the primes found so
far, stopping at the square root, which are always already known.
"""

from __future__ import annotations

from .engine import Arena, Cell, force, new_recipe, tie
from .lazy_list import INT64_MAX, NIL, Cons, count_from, filter_stream

__all__ = [
    "isprime_shared",
    "member_bounded",
    "multiple",
    "primes_circular",
    "sieve_baseline",
    "unique",
    "unique_backpatch",
    "unique_f",
    "unique_l",
]


def member_bounded(e, s: Cell, n: int) -> bool:
    """Whether ``e`` occurs among the first ``n`` elements of ``s``.

    Looks at no more than ``n`` cells, so ``s`` may end in a recipe that
    must not be forced yet.
    """
    while n:
        node = force(s)
        if node.head == e:
            return True
        s = node.tail
        n -= 1
    return False


def unique(a: Arena, items: Cell) -> Cell:
    """First occurrences of the elements of ``items``, in order.

    Works on infinite input.  The result stream doubles as the set of
    elements seen so far, so nothing besides the output is allocated.
    """

    def u(r, s, n):
        while True:
            node = force(s)
            if node is NIL:
                return NIL
            h = node.head
            s = node.tail
            if not member_bounded(h, r, n):
                rest = s
                return Cons(h, new_recipe(a, lambda: u(r, rest, n + 1)))

    return tie(a, lambda r: u(r, items, 0))


def unique_l(a: Arena, items: Cell) -> Cell:
    """Distinct elements in order of *last* occurrence. Finite input only."""

    def later(e, s):
        while True:
            node = force(s)
            if node is NIL:
                return False
            if node.head == e:
                return True
            s = node.tail

    def step(s):
        while True:
            node = force(s)
            if node is NIL:
                return NIL
            s = node.tail
            if not later(node.head, s):
                rest = s
                return Cons(node.head, new_recipe(a, lambda: step(rest)))

    return new_recipe(a, lambda: step(items))


def unique_f(a: Arena, items: Cell) -> Cell:
    """First-occurrence deduplication by repeated filtering.

    Each output element wraps the remaining input in another filter, so the
    intermediate lists grow with input length times distinct count.
    """

    def step(s):
        node = force(s)
        if node is NIL:
            return NIL
        h = node.head
        return Cons(h, unique_f(a, filter_stream(lambda x: x != h, s)))

    return new_recipe(a, lambda: step(items))


class _Link:
    __slots__ = ("hd", "tl")

    def __init__(self, hd, tl):
        self.hd = hd
        self.tl = tl


def unique_backpatch(items) -> list:
    """Strict deduplication that grows its result by overwriting a nil tail.

    The result is always nil-terminated, so membership is the ordinary
    search to the end and no length count is needed.  Returns a Python list.
    """
    r = None

    def set_r(v):
        nonlocal r
        r = v

    def member(e, lst):
        while lst is not None:
            if lst.hd == e:
                return True
            lst = lst.tl
        return False

    # ``fill`` stands for the result slot still to be written.
    fill = set_r
    for x in items:
        if member(x, r):
            continue
        node = _Link(x, None)
        fill(node)
        fill = lambda v, node=node: setattr(node, "tl", v)  # noqa: E731
    fill(None)

    out = []
    while r is not None:
        out.append(r.hd)
        r = r.tl
    return out


# -- primes ----------------------------------------------------------------------


def _square(p: int) -> int:
    sq = p * p
    if sq > INT64_MAX:
        raise OverflowError(f"{p}**2 exceeds the 64-bit range")
    return sq


def multiple(primes: Cell, n: int) -> bool:
    """Whether ``n`` has a factor among the primes not exceeding its root."""
    s = primes
    while True:
        node = force(s)
        p = node.head
        if _square(p) > n:
            return False
        if n % p == 0:
            return True
        s = node.tail


def sieve_baseline(a: Arena) -> Cell:
    """Primes by stacking one filter per prime over ``count_from(2)``."""

    def sieve(s):
        def step():
            h = force(s).head
            return Cons(h, sieve(filter_stream(lambda n: n % h != 0, s)))

        return new_recipe(a, step)

    return sieve(count_from(a, 2))


def primes_circular(a: Arena) -> Cell:
    """Primes as ``2`` followed by the numbers from 3 on that survive a
    single filter testing them against this same stream."""
    return tie(
        a, lambda primes: Cons(2, filter_stream(lambda n: not multiple(primes, n), count_from(a, 3)))
    )


def isprime_shared(a: Arena):
    """Return ``(isprime, primes)`` sharing one lazily grown prime stream.

    Repeated calls reuse the primes already forced, so a second query of
    similar magnitude forces nothing new.
    """

    def isprime(n: int) -> bool:
        if n < 2:
            raise ValueError(f"isprime is defined for n >= 2, got {n}")
        return not multiple(primes, n)

    primes = new_recipe(a, lambda: Cons(2, filter_stream(isprime, count_from(a, 3))))
    return isprime, primes
