import gc
import random
import weakref

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from circprog.engine import (
    AllocStats,
    Arena,
    CircprogError,
    IllFoundedSelfReference,
    LimitExceeded,
    force,
    is_evaluated,
    new_recipe,
    new_value,
    same_cell,
    stats,
    tie,
)
from circprog.lazy_list import Cons


def test_new_value(arena):
    before = stats(arena)
    c = new_value(arena, 7)
    delta = stats(arena) - before
    assert (delta.cells_allocated, delta.executions) == (1, 0)
    assert force(c) == 7
    assert force(c) == 7
    assert stats(arena).executions == 0


def test_new_recipe_is_not_run(arena):
    def boom():
        raise AssertionError("recipe ran at creation")

    c = new_recipe(arena, boom)
    assert not is_evaluated(c)
    assert stats(arena).cells_allocated == 1


def test_recipe_runs_once(arena):
    c = new_recipe(arena, lambda: 2 + 3)
    assert force(c) == 5
    assert force(c) == 5
    s = stats(arena)
    assert (s.forces, s.executions) == (2, 1)


def test_chain(arena):
    c2 = new_recipe(arena, lambda: 41 + 1)
    c1 = new_recipe(arena, lambda: force(c2))
    assert force(c1) == 42
    assert stats(arena).executions == 2


def test_direct_self_force_is_rejected(arena):
    c = new_recipe(arena, lambda: force(c))
    with pytest.raises(IllFoundedSelfReference):
        force(c)


def test_two_cycle_is_rejected(arena):
    x = new_recipe(arena, lambda: force(y) + 1)
    y = new_recipe(arena, lambda: force(x) + 1)
    with pytest.raises(IllFoundedSelfReference) as info:
        force(x)
    assert info.value.cell is x


def test_failed_cell_keeps_its_error(arena):
    c = new_recipe(arena, lambda: force(c))
    with pytest.raises(IllFoundedSelfReference):
        force(c)
    with pytest.raises(IllFoundedSelfReference):
        force(c)
    assert stats(arena).executions == 1


def test_tie_cons_points_to_itself(arena):
    c = tie(arena, lambda h: Cons(1, h))
    node = force(c)
    assert same_cell(node.tail, c)


def test_tie_unused_handle(arena):
    assert force(tie(arena, lambda h: 5)) == 5


def test_tie_forcing_handle(arena):
    with pytest.raises(IllFoundedSelfReference):
        force(tie(arena, lambda h: force(h)))


def test_same_cell(arena):
    c = new_value(arena, 3)
    assert same_cell(c, c)
    assert not same_cell(new_value(arena, (1, 2)), new_value(arena, (1, 2)))


def test_identity_stable_under_force(arena):
    c = new_recipe(arena, lambda: 1)
    cid = c.id
    assert same_cell(c, c)
    force(c)
    assert same_cell(c, c) and c.id == cid


def test_stats_fresh_and_counts(arena):
    assert stats(arena) == AllocStats()
    for i in range(3):
        new_value(arena, i)
    assert stats(arena).cells_allocated == 3


def test_stats_snapshot_is_detached(arena):
    snap = stats(arena)
    new_value(arena, 1)
    assert snap.cells_allocated == 0


def test_stats_text_round_trip():
    s = AllocStats(4, 9, 2, 3, 1)
    text = s.to_text()
    assert text.splitlines()[:3] == ["cells_allocated=4", "forces=9", "executions=2"]
    assert AllocStats.from_text(text) == s
    with pytest.raises(ValueError):
        AllocStats.from_text("cells_allocated=1")


def test_capacity():
    a = Arena(capacity=2)
    new_value(a, 1)
    new_value(a, 2)
    with pytest.raises(LimitExceeded):
        new_value(a, 3)


def test_drop_reclaims_cycles():
    a = Arena()
    c = tie(a, lambda h: Cons(1, h))
    force(c)
    x = new_recipe(a, lambda: ("x", y))
    y = new_recipe(a, lambda: ("y", x))
    force(x)
    force(y)
    refs = [weakref.ref(cell) for cell in (c, x, y)]
    del c, x, y
    gc.disable()
    try:
        gc.collect()  # flush garbage from earlier tests
        assert all(r() is not None for r in refs)
        a.drop()
        assert all(r() is None for r in refs)
    finally:
        gc.enable()
    with pytest.raises(CircprogError):
        new_value(a, 1)


@settings(max_examples=200, deadline=None)
@given(st.data())
def test_memoization_once_random_schedules(data):
    a = Arena()
    n = data.draw(st.integers(1, 12))
    runs = [0] * n
    cells = []
    for i in range(n):
        deps = data.draw(st.lists(st.integers(0, i - 1), max_size=3)) if i else []

        def recipe(i=i, deps=deps):
            runs[i] += 1
            return sum(force(cells[j]) for j in deps) + i

        cells.append(new_recipe(a, recipe))
    schedule = data.draw(st.lists(st.integers(0, n - 1), max_size=40))
    for i in schedule:
        force(cells[i])
    assert all(r <= 1 for r in runs)
    s = stats(a)
    assert s.executions == sum(runs) <= s.cells_allocated
    assert s.executions <= s.forces


def test_counters_monotone(rng):
    a = Arena()
    cells = [new_recipe(a, lambda i=i: i) for i in range(20)]
    prev = stats(a)
    for _ in range(200):
        force(rng.choice(cells))
        cur = stats(a)
        assert cur.forces >= prev.forces and cur.executions >= prev.executions
        prev = cur
