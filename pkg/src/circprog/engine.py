"""Call-by-need cells.

A :class:`Cell` starts life holding a *recipe* (a zero-argument callable).
The first :func:`force` runs the recipe and overwrites the cell with the
result, so every later force is a plain read.  While the recipe runs the
cell is a *blackhole*; demanding it again from inside its own recipe is an
ill-founded definition and raises :class:`IllFoundedSelfReference` instead
of looping.

Every cell belongs to an :class:`Arena`, which owns the cells, counts
allocations and forces, and can be dropped as a unit.  Dropping severs every
cell's contents, so cyclic groups built by :func:`tie` are reclaimed by plain
reference counting.
"""

from __future__ import annotations

import sys
from dataclasses import dataclass, fields

__all__ = [
    "AllocStats",
    "Arena",
    "Cell",
    "CircprogError",
    "IllFoundedSelfReference",
    "LimitExceeded",
    "force",
    "is_evaluated",
    "new_recipe",
    "new_value",
    "same_cell",
    "stats",
    "tie",
]

# Nested lazy filters (the naive sieve, uniqueF) force through one Python
# frame pair per level.
_MIN_RECURSION_LIMIT = 20_000
if sys.getrecursionlimit() < _MIN_RECURSION_LIMIT:
    sys.setrecursionlimit(_MIN_RECURSION_LIMIT)


class CircprogError(Exception):
    """Base class for errors raised by this package."""


class IllFoundedSelfReference(CircprogError):
    """A cell was demanded while its own recipe was still running."""

    def __init__(self, cell):
        super().__init__(f"cell #{cell.id} demanded itself during evaluation")
        self.cell = cell


class LimitExceeded(CircprogError):
    """An arena capacity or a construction budget ran out."""


# cell states
_RECIPE = 0
_BLACKHOLE = 1
_VALUE = 2
_FAILED = 3
_DROPPED = 4


@dataclass
class AllocStats:
    """Monotone counters for one arena.

    ``stream_nodes`` and ``tree_nodes`` count constructed list/tree nodes,
    separately from engine cells, so that claims like "ones is one cell"
    can be checked without bookkeeping noise.
    """

    cells_allocated: int = 0
    forces: int = 0
    executions: int = 0
    stream_nodes: int = 0
    tree_nodes: int = 0

    def snapshot(self) -> AllocStats:
        return AllocStats(
            self.cells_allocated,
            self.forces,
            self.executions,
            self.stream_nodes,
            self.tree_nodes,
        )

    def __sub__(self, other: AllocStats) -> AllocStats:
        return AllocStats(
            *(getattr(self, f.name) - getattr(other, f.name) for f in fields(self))
        )

    def to_text(self) -> str:
        return "\n".join(f"{f.name}={getattr(self, f.name)}" for f in fields(self))

    @classmethod
    def from_text(cls, text: str) -> AllocStats:
        """Parse ``key=value`` lines; lines with other keys are ignored."""
        names = {f.name for f in fields(cls)}
        values = {}
        for line in text.splitlines():
            key, sep, value = line.strip().partition("=")
            if sep and key in names:
                values[key] = int(value)
        missing = names - values.keys()
        if missing:
            raise ValueError(f"missing stat lines: {sorted(missing)}")
        return cls(**values)


class Arena:
    """Owner of a group of cells.

    ``capacity`` caps the number of cells; allocating past it raises
    :class:`LimitExceeded`.
    """

    def __init__(self, capacity: int | None = None):
        self.capacity = capacity
        self.stats = AllocStats()
        self._cells: list[Cell] = []
        self.dropped = False

    def __len__(self):
        return len(self._cells)

    def __repr__(self):
        return f"<Arena cells={len(self._cells)} dropped={self.dropped}>"

    def _register(self, cell: Cell) -> int:
        if self.dropped:
            raise CircprogError("arena has been dropped")
        n = len(self._cells)
        if self.capacity is not None and n >= self.capacity:
            raise LimitExceeded(f"arena capacity of {self.capacity} cells exhausted")
        self._cells.append(cell)
        self.stats.cells_allocated += 1
        return n

    def drop(self) -> None:
        """Release every cell, breaking any cycles among them."""
        for cell in self._cells:
            cell._state = _DROPPED
            cell._payload = None
        self._cells.clear()
        self.dropped = True


class Cell:
    """A call-by-need slot; see :func:`force`."""

    __slots__ = ("arena", "id", "_state", "_payload", "__weakref__")

    def __init__(self, arena: Arena, state: int, payload):
        self.arena = arena
        self._state = state
        self._payload = payload
        self.id = arena._register(self)

    def __repr__(self):
        state = ("recipe", "blackhole", "value", "failed", "dropped")[self._state]
        return f"<Cell #{self.id} {state}>"

    # Identity is the only equality cells have.
    __eq__ = object.__eq__
    __hash__ = object.__hash__


def new_value(a: Arena, v) -> Cell:
    """Allocate a cell that already holds ``v``."""
    return Cell(a, _VALUE, v)


def new_recipe(a: Arena, recipe) -> Cell:
    """Allocate a cell holding the unevaluated zero-argument callable ``recipe``."""
    return Cell(a, _RECIPE, recipe)


def tie(a: Arena, builder) -> Cell:
    """Allocate a cell whose value is ``builder(cell)``.

    The builder receives the cell being defined and may embed it in the value
    it returns; that is how circular values get built.  Forcing the handle
    from inside the builder raises :class:`IllFoundedSelfReference`.
    """
    cell = Cell(a, _RECIPE, None)
    cell._payload = lambda: builder(cell)
    return cell


def force(c: Cell):
    """Return the value of ``c``, running its recipe on first demand."""
    st = c.arena.stats
    st.forces += 1
    state = c._state
    if state == _VALUE:
        return c._payload
    if state == _BLACKHOLE:
        raise IllFoundedSelfReference(c)
    if state == _FAILED:
        raise c._payload
    if state == _DROPPED:
        raise CircprogError(f"cell #{c.id} belongs to a dropped arena")
    recipe = c._payload
    c._state = _BLACKHOLE
    c._payload = None
    st.executions += 1
    try:
        value = recipe()
    except BaseException as exc:
        # A failed recipe is not re-run: the cell keeps the error.
        if c._state == _BLACKHOLE:
            c._state = _FAILED
            c._payload = exc
        raise
    c._state = _VALUE
    c._payload = value
    return value


def is_evaluated(c: Cell) -> bool:
    """True when forcing ``c`` would not run anything."""
    return c._state == _VALUE


def same_cell(x: Cell, y: Cell) -> bool:
    return x is y


def stats(a: Arena) -> AllocStats:
    return a.stats.snapshot()
