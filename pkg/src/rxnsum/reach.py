"""Discrete state-space semantics of a reaction network.

A reaction ``y -> y'`` can fire on a state ``x`` iff ``x >= y``, moving it to
``x + y' - y``. All searches here are confined to a box ``0 <= x <= upper``;
negative answers are therefore only valid up to that bound.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, Optional, Sequence, Tuple

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .algebra import Reaction, Vector, net, sum_sequence, vec_le
from .closure import ClosureSet
from .cone import in_integer_cone
from .verdicts import Verdict

Box = Tuple[int, ...]


def fire(x: Sequence[int], r: Reaction) -> Optional[Vector]:
    """State after firing ``r`` on ``x``, or None when ``x`` lacks the reactant."""
    if len(x) != r.dim:
        raise ValueError(f"state has dimension {len(x)}, reaction has {r.dim}")
    y = r.reactant
    if any(a < b for a, b in zip(x, y)):
        return None
    return tuple(a - b + c for a, b, c in zip(x, y, r.product))


def _fire_iteratively(x: Sequence[int], rs: Sequence[Reaction]) -> bool:
    state = tuple(x)
    for r in rs:
        state = fire(state, r)
        if state is None:
            return False
    return True


def is_active_sequence(x: Sequence[int], rs: Sequence[Reaction]) -> bool:
    """Whether ``rs`` can fire one after another starting from ``x``.

    Equivalent to ``x >= reactant(r1 (+) ... (+) rm)``; both are computed
    and compared when assertions are enabled.
    """
    ok = _fire_iteratively(x, rs)
    if __debug__ and rs:
        assert ok == vec_le(sum_sequence(rs).reactant, x), (x, rs)
    return ok


def active_by_sum(x: Sequence[int], rs: Sequence[Reaction]) -> bool:
    """The summed form of the activity test alone."""
    if not rs:
        return True
    return vec_le(sum_sequence(rs).reactant, x)


def _check_in_box(x: Sequence[int], box: Box, what: str) -> None:
    if len(x) != len(box):
        raise ValueError(f"{what} has dimension {len(x)}, box has {len(box)}")
    if not vec_le(x, box) or min(x, default=0) < 0:
        raise ValueError(f"{what} {tuple(x)} lies outside the box {tuple(box)}")


def box_states(box: Box) -> Iterable[Vector]:
    return itertools.product(*(range(b + 1) for b in box))


@dataclass(frozen=True)
class ReachResult:
    states: FrozenSet[Vector]
    frontier_clipped: bool

    def __contains__(self, x) -> bool:
        return tuple(x) in self.states


@dataclass(frozen=True)
class LeadsToResult:
    verdict: Verdict
    witness: Optional[Tuple[int, ...]] = None  # reaction indices, in firing order

    def __bool__(self) -> bool:
        return self.verdict.positive


def _bfs(reactions: Sequence[Reaction], x: Vector, box: Box, target: Optional[Vector] = None):
    parent: Dict[Vector, Tuple[Vector, int]] = {}
    seen = {x}
    q = deque([x])
    clipped = False
    while q:
        s = q.popleft()
        if s == target:
            break
        for i, r in enumerate(reactions):
            t = fire(s, r)
            if t is None or t in seen:
                continue
            if not vec_le(t, box):
                clipped = True
                continue
            seen.add(t)
            parent[t] = (s, i)
            q.append(t)
    return seen, parent, clipped


def leads_to(reactions: Iterable[Reaction], x: Sequence[int], target: Sequence[int],
             box: Box) -> LeadsToResult:
    """Breadth-first search for a firing sequence from ``x`` to ``target``.

    Only states inside ``box`` are visited, so ``NO_WITHIN_BOX`` does not
    exclude paths that leave the box.
    """
    rs = list(reactions)
    x, target, box = tuple(x), tuple(target), tuple(box)
    _check_in_box(x, box, "start state")
    _check_in_box(target, box, "target state")
    seen, parent, _ = _bfs(rs, x, box, target)
    if target not in seen:
        return LeadsToResult(Verdict.NO_WITHIN_BOX)
    path = []
    s = target
    while s != x:
        s, i = parent[s]
        path.append(i)
    return LeadsToResult(Verdict.YES, tuple(reversed(path)))


def reachable_set(reactions: Iterable[Reaction], x: Sequence[int], box: Box) -> ReachResult:
    rs = list(reactions)
    x, box = tuple(x), tuple(box)
    _check_in_box(x, box, "start state")
    seen, _, clipped = _bfs(rs, x, box)
    return ReachResult(frozenset(seen), clipped)


def leads_to_via_closure(cl: ClosureSet, x: Sequence[int], target: Sequence[int]) -> bool:
    """``x`` leads to ``target`` iff some closure element ``(y, y')`` has
    ``x >= y`` and ``target - x == y' - y``.

    Only as complete as the enumerated closure fragment.
    """
    x, target = tuple(x), tuple(target)
    d = tuple(b - a for a, b in zip(x, target))
    return any(vec_le(y, x) for y in cl.by_net.get(d, ()))


class BoxGraph:
    """The transition graph of a network restricted to the states of a box."""

    def __init__(self, reactions: Iterable[Reaction], box: Box):
        self.reactions = list(reactions)
        self.box = tuple(int(b) for b in box)
        self.shape = tuple(b + 1 for b in self.box)
        n = len(self.box)
        self.size = int(np.prod(self.shape)) if n else 1
        states = np.indices(self.shape).reshape(n, -1).T
        self.states = states
        src, dst, lab = [], [], []
        clipped = np.zeros(self.size, dtype=bool)
        upper = np.array(self.box)
        for k, r in enumerate(self.reactions):
            can = np.all(states >= np.array(r.reactant), axis=1)
            nxt = states + np.array(net(r))
            inside = np.all(nxt <= upper, axis=1)
            clipped |= can & ~inside
            ok = np.nonzero(can & inside)[0]
            src.append(ok)
            dst.append(np.ravel_multi_index(nxt[ok].T, self.shape))
            lab.append(np.full(len(ok), k))
        self.src = np.concatenate(src) if src else np.zeros(0, dtype=int)
        self.dst = np.concatenate(dst) if dst else np.zeros(0, dtype=int)
        self.edge_reaction = np.concatenate(lab) if lab else np.zeros(0, dtype=int)
        self.clipped = clipped
        self.matrix = csr_matrix(
            (np.ones(len(self.src), dtype=np.int8), (self.src, self.dst)),
            shape=(self.size, self.size),
        )

    def index(self, x: Sequence[int]) -> int:
        _check_in_box(x, self.box, "state")
        return int(np.ravel_multi_index(tuple(x), self.shape))

    def state(self, i: int) -> Vector:
        return tuple(int(c) for c in self.states[i])

    def reach_indices(self, x: Sequence[int]) -> np.ndarray:
        order = breadth_first_order(self.matrix, self.index(x), directed=True,
                                    return_predecessors=False)
        return np.sort(order)

    def reach(self, x: Sequence[int]) -> ReachResult:
        idx = self.reach_indices(x)
        return ReachResult(frozenset(self.state(i) for i in idx), bool(self.clipped[idx].any()))

    def strong_components(self) -> np.ndarray:
        _, labels = connected_components(self.matrix, directed=True, connection="strong")
        return labels


@dataclass(frozen=True)
class PairResult:
    verdict: Verdict
    witness: Optional[Tuple[Vector, Vector]] = None
    detail: str = ""

    def __bool__(self) -> bool:
        return self.verdict.positive


def structurally_identical(net1: Iterable[Reaction], net2: Iterable[Reaction],
                           box: Box) -> PairResult:
    """Compare box-restricted reachable sets of two networks from every state of ``box``.

    A difference is reported as ``(x, x')`` with ``x'`` reached from ``x`` by
    the first network but not by the second (or the other way round).
    """
    g1, g2 = BoxGraph(net1, box), BoxGraph(net2, box)
    for x in box_states(box):
        a, b = g1.reach_indices(x), g2.reach_indices(x)
        if not np.array_equal(a, b):
            only = np.setdiff1d(a, b)
            side = "first"
            if not len(only):
                only, side = np.setdiff1d(b, a), "second"
            return PairResult(Verdict.DIFFERENT_UP_TO_BOUND, (tuple(x), g1.state(int(only[0]))),
                              f"reached only by the {side} network")
    return PairResult(Verdict.IDENTICAL_UP_TO_BOUND)


def essential_by_symmetry(reactions: Iterable[Reaction], box: Box) -> PairResult:
    """Check that leading-to is symmetric on the states of ``box``.

    Symmetry of the box-restricted relation is equivalent to every transition
    staying inside one strongly connected component. An asymmetric pair
    ``(x, x')`` is exact when ``x - x'`` is not a nonnegative integer
    combination of net gains, since then no firing sequence returns.
    """
    rs = list(reactions)
    g = BoxGraph(rs, box)
    labels = g.strong_components()
    bad = np.nonzero(labels[g.src] != labels[g.dst])[0]
    if not len(bad):
        return PairResult(Verdict.SYMMETRIC_UP_TO_BOUND)
    order = np.lexsort((g.edge_reaction[bad], g.src[bad]))
    e = bad[order[0]]
    x, xp = g.state(int(g.src[e])), g.state(int(g.dst[e]))
    back = tuple(a - b for a, b in zip(x, xp))
    if not in_integer_cone(back, [net(r) for r in rs]):
        return PairResult(Verdict.ASYMMETRIC_EXACT, (x, xp), "no combination of net gains returns")
    return PairResult(Verdict.ASYMMETRIC_UP_TO_BOUND, (x, xp), "no return path inside the box")
