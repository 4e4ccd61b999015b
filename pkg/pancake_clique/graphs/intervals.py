from typing import FrozenSet, Sequence, Tuple

__all__ = ["max_clique_intervals"]


def max_clique_intervals(intervals: Sequence[Tuple[float, float]]) -> FrozenSet[int]:
    """
    The max_clique_intervals function computes a maximum clique of the intersection graph of
    closed intervals by sweeping their endpoints. At equal coordinates starts are processed
    before ends, so touching intervals overlap.

    :param intervals: (lo, hi) pairs with lo <= hi
    :return: indices of the intervals sharing the deepest point
    """
    events = []
    for i, (lo, hi) in enumerate(intervals):
        if lo > hi:
            raise ValueError(f"interval {i} has lo > hi: ({lo}, {hi})")
        events.append((lo, 0, i))
        events.append((hi, 1, i))
    events.sort()

    active = set()
    best: FrozenSet[int] = frozenset()
    for _, kind, i in events:
        if kind == 0:
            active.add(i)
            if len(active) > len(best):
                best = frozenset(active)
        else:
            active.discard(i)
    return best
