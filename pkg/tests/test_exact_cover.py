from itertools import combinations

from hypothesis import given, settings
from hypothesis import strategies as st

import pytest
from vtcores import Budget, BudgetExceeded
from vtcores.exact_cover import exact_covers, find_exact_cover


def brute_covers(universe, subsets):
    universe = set(universe)
    found = set()
    for k in range(len(subsets) + 1):
        for pick in combinations(range(len(subsets)), k):
            parts = [set(subsets[i]) for i in pick]
            if sum(map(len, parts)) == len(universe) and set().union(*parts) == universe:
                found.add(pick)
    return found


def test_knuth_example():
    subsets = [{2, 4, 5}, {0, 3, 6}, {1, 2, 5}, {0, 3}, {1, 6}, {3, 4, 6}]
    assert sorted(find_exact_cover(range(7), subsets)) == [0, 3, 4]
    assert len(list(exact_covers(range(7), subsets))) == 1


def test_no_cover_and_empty_universe():
    assert find_exact_cover(range(3), [{0, 1}, {1, 2}]) is None
    assert find_exact_cover([], [{0}]) == []


def test_budget():
    subsets = [{i} for i in range(10)] + [{i, i + 1} for i in range(9)]
    with pytest.raises(BudgetExceeded):
        list(exact_covers(range(10), subsets, Budget(5)))


@settings(max_examples=200, deadline=None)
@given(st.integers(0, 6).flatmap(
    lambda n: st.tuples(st.just(n), st.lists(st.frozensets(st.integers(0, max(n - 1, 0)), min_size=1), max_size=7))
))
def test_covers_match_brute_force(case):
    n, subsets = case
    subsets = [s for s in subsets if all(e < n for e in s)]
    ours = {tuple(sorted(c)) for c in exact_covers(range(n), subsets)}
    assert ours == brute_covers(range(n), subsets)
