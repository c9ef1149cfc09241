"""Exact stochastic simulation with mass-action propensities.

Each step draws an exponential holding time at the total propensity and
picks the firing reaction with probability proportional to its propensity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import List, Mapping, Optional, Sequence, Tuple

import numpy as np

from .algebra import Reaction, Vector, vec_le
from .reach import fire, is_active_sequence

ALGORITHM = "direct-method/numpy-PCG64"
_FLOAT_MAX = np.finfo(np.float64).max


class PropensityOverflow(OverflowError):
    pass


def falling_factorial_product(x: Sequence[int], y: Sequence[int]) -> int:
    """``prod_i x_i! / (x_i - y_i)!``, or 0 when ``x`` lacks ``y``."""
    out = 1
    for a, b in zip(x, y):
        if a < b:
            return 0
        out *= math.perm(a, b)
    return out


def propensity(x: Sequence[int], r: Reaction, rate: float) -> float:
    if rate <= 0:
        raise ValueError("rate constants must be positive")
    ff = falling_factorial_product(x, r.reactant)
    if ff == 0:
        return 0.0
    try:
        val = float(ff) * float(rate)
    except OverflowError:
        raise PropensityOverflow(f"propensity of {r} at {tuple(x)} overflows") from None
    if not math.isfinite(val) or val > _FLOAT_MAX:
        raise PropensityOverflow(f"propensity of {r} at {tuple(x)} overflows")
    return val


@dataclass
class Trajectory:
    x0: Vector
    times: List[float] = field(default_factory=list)
    reactions: List[int] = field(default_factory=list)
    states: List[Vector] = field(default_factory=list)
    stop_reason: str = ""
    seed: Optional[int] = None
    algorithm: str = ALGORITHM

    def __len__(self) -> int:
        return len(self.reactions)

    def state_at_jump(self, k: int) -> Vector:
        """State before jump ``k`` (``k == len`` gives the final state)."""
        return self.x0 if k == 0 else self.states[k - 1]

    @property
    def final_state(self) -> Vector:
        return self.states[-1] if self.states else self.x0

    def rows(self) -> List[Tuple[float, Optional[int], Vector]]:
        out: List[Tuple[float, Optional[int], Vector]] = [(0.0, None, self.x0)]
        out += list(zip(self.times, self.reactions, self.states))
        return out

    def to_json(self, species: Sequence[str] = ()) -> dict:
        return {
            "x0": list(self.x0),
            "species": list(species),
            "times": self.times,
            "reactions": self.reactions,
            "states": [list(s) for s in self.states],
            "stop_reason": self.stop_reason,
            "seed": self.seed,
            "algorithm": self.algorithm,
        }


def _rates(reactions: Sequence[Reaction], rates) -> List[float]:
    if rates is None:
        return [1.0] * len(reactions)
    if isinstance(rates, Mapping):
        out = [float(rates.get(r, 1.0)) for r in reactions]
    else:
        out = [float(k) for k in rates]
        if len(out) != len(reactions):
            raise ValueError(f"{len(out)} rates for {len(reactions)} reactions")
    if any(k <= 0 for k in out):
        raise ValueError("rate constants must be positive")
    return out


def simulate(reactions: Sequence[Reaction], rates, x0: Sequence[int], t_max: float = math.inf,
             max_jumps: int = 10_000, seed: int = 0,
             rng: Optional[np.random.Generator] = None) -> Trajectory:
    """Simulate one trajectory from ``x0``.

    ``rates`` is a mapping reaction -> rate, a list aligned with
    ``reactions``, or None for unit rates. Stops at ``t_max``, after
    ``max_jumps`` jumps, or when no reaction can fire.
    """
    rs = list(reactions)
    ks = _rates(rs, rates)
    if rng is None:
        rng = np.random.Generator(np.random.PCG64(seed))
    x = tuple(int(c) for c in x0)
    traj = Trajectory(x, seed=seed)
    t = 0.0
    props = np.empty(len(rs))
    while True:
        if len(traj) >= max_jumps:
            traj.stop_reason = "max_jumps"
            break
        for i, (r, k) in enumerate(zip(rs, ks)):
            props[i] = propensity(x, r, k)
        total = float(props.sum()) if rs else 0.0
        if total <= 0.0:
            traj.stop_reason = "absorbed"
            break
        t += float(rng.exponential(1.0 / total))
        if t > t_max:
            traj.stop_reason = "t_max"
            break
        i = int(np.searchsorted(np.cumsum(props), rng.random() * total, side="right"))
        i = min(i, len(rs) - 1)
        while props[i] == 0.0:  # guard against landing on a zero-width bin
            i -= 1
        nxt = fire(x, rs[i])
        assert nxt is not None
        x = nxt
        traj.times.append(t)
        traj.reactions.append(i)
        traj.states.append(x)
    return traj


def simulate_many(reactions: Sequence[Reaction], rates, x0: Sequence[int], n_runs: int,
                  seed: int = 0, **kw) -> List[Trajectory]:
    """Independent runs; run ``i`` uses the stream spawned from ``(seed, i)``."""
    children = np.random.SeedSequence(seed).spawn(n_runs)
    out = []
    for i, ss in enumerate(children):
        tr = simulate(reactions, rates, x0, seed=seed,
                      rng=np.random.Generator(np.random.PCG64(ss)), **kw)
        out.append(tr)
    return out


@dataclass
class ActiveCheckReport:
    runs: int
    prefixes_checked: int
    compatibility_violations: List[Tuple[int, int]]
    inactive_prefixes: List[Tuple[int, int]]

    @property
    def ok(self) -> bool:
        return not self.compatibility_violations and not self.inactive_prefixes


def empirical_active_check(reactions: Sequence[Reaction], rates, x0: Sequence[int],
                           n_runs: int = 100, seed: int = 0, max_jumps: int = 20,
                           prefix_lengths: Optional[Sequence[int]] = None,
                           **kw) -> ActiveCheckReport:
    """Sample trajectories and check that observed behaviour is consistent:
    each jump fires a reaction whose reactant is present, and every observed
    prefix of the jump sequence is active from ``x0``."""
    rs = list(reactions)
    x0 = tuple(x0)
    trajs = simulate_many(rs, rates, x0, n_runs, seed=seed, max_jumps=max_jumps, **kw)
    compat, inactive = [], []
    checked = 0
    for run, tr in enumerate(trajs):
        seq = [rs[i] for i in tr.reactions]
        for k, i in enumerate(tr.reactions):
            if not vec_le(rs[i].reactant, tr.state_at_jump(k)):
                compat.append((run, k))
        lengths = prefix_lengths or range(1, len(seq) + 1)
        for m in lengths:
            if m > len(seq):
                break
            checked += 1
            if not is_active_sequence(x0, seq[:m]):
                inactive.append((run, m))
    return ActiveCheckReport(n_runs, checked, compat, inactive)
