import json

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from rxnsum.algebra import Reaction
from rxnsum.closure import ClosureConfig, closure
from rxnsum.fixtures import load
from rxnsum.reach import reachable_set
from rxnsum.semilinear import (LinearSet, SemiLinearSet, all_vectors,
                               check_closure_in_semilinear, contains, slice_set)
from oracles import box_vectors

SWAP = [Reaction((1, 0), (0, 1)), Reaction((0, 1), (1, 0))]
SWAP_SET = SemiLinearSet((LinearSet((0, 0, 0, 0), ((1, 0, 0, 1), (0, 1, 1, 0),
                                                   (1, 0, 1, 0), (0, 1, 0, 1))),))


def brute_members(ls, box):
    """Every ``b + sum lam p`` inside ``box``, by trying all small ``lam``."""
    out = set()
    bound = max(box) + 1
    k = len(ls.periods)
    for lam in np.ndindex(*(bound,) * k) if k else [()]:
        v = tuple(b + sum(l * p[j] for l, p in zip(lam, ls.periods))
                  for j, b in enumerate(ls.base))
        if all(a <= c for a, c in zip(v, box)):
            out.add(v)
    return out


class TestLinearSet:
    def test_examples(self):
        (ls,) = SWAP_SET.components
        assert ls.witness((1, 0, 1, 0)) == (0, 0, 1, 0)
        assert ls.witness((0, 0, 0, 0)) == (0, 0, 0, 0)
        assert (1, 1, 0, 0) not in ls
        assert contains(SWAP_SET, (2, 1, 1, 2))

    def test_validation(self):
        with pytest.raises(ValueError):
            LinearSet((0, 0), ((0, 0),))
        with pytest.raises(ValueError):
            LinearSet((0, 0), ((1, -1),))
        with pytest.raises(ValueError):
            LinearSet((0,), ((1, 0),))
        with pytest.raises(ValueError):
            SWAP_SET.contains((0, 0))

    def test_lexicographic_witness(self):
        ls = LinearSet((0,), ((1,), (2,)))
        assert ls.witness((4,)) == (0, 2)

    @settings(max_examples=50, deadline=None)
    @given(st.integers(0, 2**32 - 1))
    def test_enumerate_matches_brute_force(self, seed):
        rng = np.random.default_rng(seed)
        d = int(rng.integers(1, 4))
        k = int(rng.integers(0, 3))
        base = tuple(int(v) for v in rng.integers(0, 3, d))
        periods = []
        while len(periods) < k:
            p = tuple(int(v) for v in rng.integers(0, 3, d))
            if any(p):
                periods.append(p)
        ls = LinearSet(base, tuple(periods))
        box = (4,) * d
        members = brute_members(ls, box)
        assert set(ls.enumerate(box)) == members
        for v in box_vectors(box):
            assert (v in ls) == (v in members)


def test_json_round_trip():
    data = SWAP_SET.to_json()
    assert data["schema_version"] == 1
    again = SemiLinearSet.from_json(json.dumps(data))
    assert again == SWAP_SET
    empty = SemiLinearSet((), 4)
    assert empty.is_empty() and SemiLinearSet.from_json(empty.to_json()).dim == 4


class TestSlice:
    def test_swap_at_s1(self):
        s = slice_set(SWAP_SET, (1, 0))
        assert all(not c.periods for c in s.components)
        assert {c.base for c in s.components} == {(1, 0, 0, 1), (1, 0, 1, 0)}

    def test_no_preimage(self):
        s = SemiLinearSet((LinearSet((2, 0, 0, 0), ((1, 0, 0, 0),)),))
        assert slice_set(s, (1, 0)).is_empty()

    def test_free_periods_only(self):
        s = SemiLinearSet((LinearSet((1, 0, 0, 0), ((0, 0, 1, 0), (0, 0, 0, 2))),))
        out = slice_set(s, (1, 0))
        assert len(out.components) == 1
        assert out.components[0].base == (1, 0, 0, 0)
        assert slice_set(s, (2, 0)).is_empty()

    def test_dimension(self):
        with pytest.raises(ValueError):
            slice_set(SWAP_SET, (1, 0, 0))


class TestClosureInclusion:
    def test_swap_pair(self):
        cl = closure(SWAP, ClosureConfig(max_summands=30, coord_cap=10))
        rep = check_closure_in_semilinear(cl, SWAP_SET, (5, 5, 5, 5))
        assert cl.saturated and rep.holds and rep.set_in_closure

    def test_small_cap_misses_elements(self):
        # (1, 5) -> (1, 5) needs the partial sum through (6, 0)
        cl = closure(SWAP, ClosureConfig(max_summands=30, coord_cap=5))
        rep = check_closure_in_semilinear(cl, SWAP_SET, (5, 5, 5, 5))
        assert (1, 5, 1, 5) in rep.missing_from_closure

    def test_birth_death_is_everything(self):
        rs = [Reaction((0,), (1,)), Reaction((1,), (0,))]
        full = SemiLinearSet((LinearSet((0, 0), ((1, 0), (0, 1))),))
        cl = closure(rs, ClosureConfig(max_summands=30, coord_cap=4))
        rep = check_closure_in_semilinear(cl, full, (4, 4))
        assert rep.holds and rep.set_in_closure

    def test_wrong_set_separated(self):
        wrong = SemiLinearSet((LinearSet((0, 0, 0, 0), ((1, 0, 0, 1), (0, 1, 1, 0))),))
        cl = closure(SWAP, ClosureConfig(max_summands=3))
        rep = check_closure_in_semilinear(cl, wrong)
        assert not rep.holds and rep.outside_set

    def test_box_above_cap(self):
        cl = closure(SWAP, ClosureConfig(max_summands=30, coord_cap=3))
        with pytest.raises(ValueError):
            check_closure_in_semilinear(cl, SWAP_SET, (4, 4, 4, 4))

    def test_unsaturated_skips_reverse(self):
        cl = closure(SWAP, ClosureConfig(max_summands=2))
        rep = check_closure_in_semilinear(cl, SWAP_SET, (3, 3, 3, 3))
        assert rep.set_in_closure is None and rep.holds


def test_hopcroft_pansiot_reach_is_bounded():
    for name in ("hopcroft_pansiot", "hopcroft_pansiot_ext"):
        net = load(name).network
        x = tuple(int(s in ("S0", "S5")) for s in net.species)
        res = reachable_set(net.reactions, x, (3,) * net.n)
        assert x in res and len(res.states) > 1


def test_all_vectors():
    assert len(list(all_vectors((1, 2)))) == 6
