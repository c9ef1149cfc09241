"""Linear and semi-linear sets of nonnegative integer vectors.

``L(b, P) = {b + sum(lam_i p_i) : lam in N^k}``; a semi-linear set is a finite
union of these. Periods are restricted to nonzero nonnegative vectors, which
keeps membership a finite search.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, List, Optional, Sequence, Tuple

from .algebra import Reaction, Vector, vec_le
from .closure import ClosureSet

SCHEMA_VERSION = 1


def _vec(v: Iterable[int]) -> Vector:
    return tuple(int(c) for c in v)


@dataclass(frozen=True)
class LinearSet:
    base: Vector
    periods: Tuple[Vector, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "base", _vec(self.base))
        object.__setattr__(self, "periods", tuple(_vec(p) for p in self.periods))
        d = len(self.base)
        if min(self.base, default=0) < 0:
            raise ValueError(f"base {self.base} has a negative coordinate")
        for p in self.periods:
            if len(p) != d:
                raise ValueError(f"period {p} has dimension {len(p)}, base has {d}")
            if min(p, default=0) < 0:
                raise ValueError(f"period {p} has a negative coordinate (only N-periods supported)")
            if not any(p):
                raise ValueError("periods must be nonzero")

    @property
    def dim(self) -> int:
        return len(self.base)

    def witness(self, v: Sequence[int]) -> Optional[Tuple[int, ...]]:
        """Lexicographically smallest ``lam`` with ``base + sum lam_i p_i == v``."""
        v = _vec(v)
        if len(v) != self.dim:
            raise ValueError(f"vector has dimension {len(v)}, set has {self.dim}")
        rest = tuple(a - b for a, b in zip(v, self.base))
        if min(rest, default=0) < 0:
            return None
        return _solve(rest, self.periods)

    def __contains__(self, v) -> bool:
        return self.witness(v) is not None

    def enumerate(self, box: Sequence[int]) -> Iterator[Vector]:
        """All members with every coordinate at most ``box``."""
        seen = set()
        if not vec_le(self.base, box):
            return
        stack = [self.base]
        seen.add(self.base)
        while stack:
            v = stack.pop()
            yield v
            for p in self.periods:
                w = tuple(a + b for a, b in zip(v, p))
                if w not in seen and vec_le(w, box):
                    seen.add(w)
                    stack.append(w)


def _solve(rest: Vector, periods: Sequence[Vector]) -> Optional[Tuple[int, ...]]:
    if not any(rest):
        return (0,) * len(periods)
    if not periods:
        return None
    p, others = periods[0], periods[1:]
    top = min(r // c for r, c in zip(rest, p) if c > 0)
    for lam in range(top + 1):
        sub = tuple(r - lam * c for r, c in zip(rest, p))
        tail = _solve(sub, others)
        if tail is not None:
            return (lam,) + tail
    return None


@dataclass(frozen=True)
class SemiLinearSet:
    components: Tuple[LinearSet, ...] = ()
    dim: Optional[int] = field(default=None)

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        dims = {c.dim for c in comps}
        if self.dim is not None:
            dims.add(self.dim)
        if len(dims) > 1:
            raise ValueError(f"components of mixed dimension {sorted(dims)}")
        if dims and self.dim is None:
            object.__setattr__(self, "dim", dims.pop())

    def contains(self, v: Sequence[int]) -> bool:
        if self.dim is not None and len(v) != self.dim:
            raise ValueError(f"vector has dimension {len(v)}, set has {self.dim}")
        return any(v in c for c in self.components)

    __contains__ = contains

    def enumerate(self, box: Sequence[int]) -> set:
        out = set()
        for c in self.components:
            out.update(c.enumerate(box))
        return out

    def is_empty(self) -> bool:
        return not self.components

    def to_json(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "dim": self.dim,
            "components": [{"base": list(c.base), "periods": [list(p) for p in c.periods]}
                           for c in self.components],
        }

    @classmethod
    def from_json(cls, data) -> "SemiLinearSet":
        if isinstance(data, str):
            data = json.loads(data)
        comps = tuple(LinearSet(c["base"], tuple(c.get("periods", ()))) for c in data["components"])
        return cls(comps, data.get("dim"))


def contains(s: SemiLinearSet, v: Sequence[int]) -> bool:
    return s.contains(v)


def _project(v: Sequence[int], n: int) -> Vector:
    return tuple(v[:n])


def slice_set(s: SemiLinearSet, x: Sequence[int]) -> SemiLinearSet:
    """Members ``(a, b)`` of ``s`` (dimension ``2n``) with ``a == x``, as a semi-linear set.

    Per component: periods vanishing on the first half can be added freely;
    the others can only be used finitely often, bounded by ``x``. Every
    finite combination landing exactly on ``x`` becomes a base.
    """
    x = _vec(x)
    n = len(x)
    if s.dim is not None and s.dim != 2 * n:
        raise ValueError(f"set has dimension {s.dim}, expected {2 * n}")
    out: List[LinearSet] = []
    for comp in s.components:
        free = tuple(p for p in comp.periods if not any(_project(p, n)))
        moving = [p for p in comp.periods if any(_project(p, n))]
        start = _project(comp.base, n)
        if not vec_le(start, x):
            continue
        bases = set()
        _anchors(comp.base, moving, 0, x, n, bases)
        for b in sorted(bases):
            out.append(LinearSet(b, free))
    dedup = list(dict.fromkeys(out))
    return SemiLinearSet(tuple(dedup), 2 * n)


def _anchors(v: Vector, moving: List[Vector], i: int, x: Vector, n: int, acc: set) -> None:
    if i == len(moving):
        if _project(v, n) == x:
            acc.add(v)
        return
    p = moving[i]
    w = v
    while vec_le(_project(w, n), x):
        _anchors(w, moving, i + 1, x, n, acc)
        w = tuple(a + b for a, b in zip(w, p))


def reaction_vector(r: Reaction) -> Vector:
    return tuple(r.reactant) + tuple(r.product)


@dataclass
class InclusionReport:
    closure_in_set: bool
    set_in_closure: Optional[bool]
    outside_set: List[Vector]
    missing_from_closure: List[Vector]
    box: Tuple[int, ...]

    @property
    def holds(self) -> bool:
        return self.closure_in_set and self.set_in_closure is not False

    def as_dict(self) -> dict:
        return {
            "closure_in_set": self.closure_in_set,
            "set_in_closure": self.set_in_closure,
            "outside_set": [list(v) for v in self.outside_set],
            "missing_from_closure": [list(v) for v in self.missing_from_closure],
            "box": list(self.box),
        }


def check_closure_in_semilinear(cl: ClosureSet, s: SemiLinearSet,
                                box: Optional[Sequence[int]] = None,
                                limit: int = 10) -> InclusionReport:
    """Check enumerated closure elements lie in ``s`` and, when the closure is
    saturated, that members of ``s`` within ``box`` were enumerated.

    The reverse inclusion is only meaningful when the enumeration covers the
    box: with a coordinate cap ``C`` the box must not exceed ``C``. An element
    inside the box may only be reachable through partial sums outside it
    (for ``S1 <=> S2`` a cap of twice the box is needed), so a missing
    element is only a counterexample if the cap is large enough.
    """
    vecs = [reaction_vector(r) for r in cl.sorted()]
    outside = [v for v in vecs if v not in s][:limit]
    if box is None:
        if cl.config.coord_cap is None:
            return InclusionReport(not outside, None, outside, [], ())
        box = (cl.config.coord_cap,) * (2 * cl.n)
    box = tuple(box)
    if not cl.saturated:
        return InclusionReport(not outside, None, outside, [], box)
    cap = cl.config.coord_cap
    if cap is not None and max(box, default=0) > cap:
        raise ValueError(f"box {box} exceeds the closure's coordinate cap {cap}")
    have = set(vecs)
    missing = sorted(v for v in s.enumerate(box) if v not in have)[:limit]
    return InclusionReport(not outside, not missing, outside, missing, box)


def all_vectors(box: Sequence[int]) -> Iterator[Vector]:
    return itertools.product(*(range(b + 1) for b in box))
