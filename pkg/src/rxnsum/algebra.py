"""Exact arithmetic on reactions, i.e. pairs of nonnegative integer vectors.

A reaction ``(y, y')`` is stored as two tuples of Python ints. Python ints are
unbounded, so sums never wrap around.

The sum ``r1 (+) r2`` describes firing ``r1`` and then ``r2``::

    y  = y1  + max(0, y2  - y1')
    y' = y2' + max(0, y1' - y2)

It is associative with identity ``(0, 0)`` but not commutative.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence, Tuple

Vector = Tuple[int, ...]


class DimensionError(ValueError):
    """Raised when vectors or reactions of different dimension are combined."""


def _check_vector(v: Sequence[int], what: str) -> Vector:
    t = tuple(int(c) for c in v)
    for c in t:
        if c < 0:
            raise ValueError(f"{what} has a negative coordinate: {t}")
    return t


def zeros(n: int) -> Vector:
    return (0,) * n


def unit(n: int, i: int, k: int = 1) -> Vector:
    """The vector ``k * S_i`` in dimension ``n``."""
    return tuple(k if j == i else 0 for j in range(n))


def vec_add(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x + y for x, y in zip(a, b))


def vec_sub(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x - y for x, y in zip(a, b))


def vec_le(a: Sequence[int], b: Sequence[int]) -> bool:
    """Componentwise ``a <= b``."""
    return all(x <= y for x, y in zip(a, b))


def vec_lt_all(a: Sequence[int], b: Sequence[int]) -> bool:
    """Strict componentwise ``a << b`` (every coordinate strictly smaller)."""
    return all(x < y for x, y in zip(a, b))


def vec_max(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x if x >= y else y for x, y in zip(a, b))


def vec_min(a: Sequence[int], b: Sequence[int]) -> Vector:
    return tuple(x if x <= y else y for x, y in zip(a, b))


@dataclass(frozen=True, order=True, slots=True)
class Reaction:
    """An ordered pair ``(reactant, product)`` of nonnegative integer vectors.

    Ordering is lexicographic on the reactant, then the product, which gives
    every collection of reactions a deterministic canonical order.
    """

    reactant: Vector
    product: Vector

    def __post_init__(self):
        y = _check_vector(self.reactant, "reactant")
        yp = _check_vector(self.product, "product")
        if len(y) != len(yp):
            raise DimensionError(
                f"reactant has dimension {len(y)} but product has {len(yp)}"
            )
        object.__setattr__(self, "reactant", y)
        object.__setattr__(self, "product", yp)

    @classmethod
    def _trusted(cls, y: Vector, yp: Vector) -> "Reaction":
        # skips validation; callers guarantee nonnegative equal-length tuples
        obj = object.__new__(cls)
        object.__setattr__(obj, "reactant", y)
        object.__setattr__(obj, "product", yp)
        return obj

    @classmethod
    def zero(cls, n: int) -> "Reaction":
        z = zeros(n)
        return cls._trusted(z, z)

    @property
    def dim(self) -> int:
        return len(self.reactant)

    @property
    def net(self) -> Vector:
        return net(self)

    def inverse(self) -> "Reaction":
        return inverse(self)

    def is_zero_net(self) -> bool:
        return self.reactant == self.product

    def as_tuple(self) -> Tuple[Vector, Vector]:
        return self.reactant, self.product

    def __add__(self, other: "Reaction") -> "Reaction":
        # r1 + r2 is shorthand for oplus(r1, r2)
        if not isinstance(other, Reaction):
            return NotImplemented
        return oplus(self, other)

    def __repr__(self) -> str:
        return f"Reaction({self.reactant}, {self.product})"


def _require_same_dim(r1: Reaction, r2: Reaction) -> None:
    if len(r1.reactant) != len(r2.reactant):
        raise DimensionError(
            f"cannot combine reactions of dimension {len(r1.reactant)} "
            f"and {len(r2.reactant)}"
        )


def oplus(r1: Reaction, r2: Reaction) -> Reaction:
    """The overall effect of firing ``r1`` and then ``r2``."""
    _require_same_dim(r1, r2)
    y1, y1p = r1.reactant, r1.product
    y2, y2p = r2.reactant, r2.product
    y = tuple(a + (c - b if c > b else 0) for a, b, c in zip(y1, y1p, y2))
    yp = tuple(d + (b - c if b > c else 0) for b, c, d in zip(y1p, y2, y2p))
    return Reaction._trusted(y, yp)


def net(r: Reaction) -> Vector:
    """Net gain ``product - reactant`` (signed)."""
    return tuple(b - a for a, b in zip(r.reactant, r.product))


def equivalent(r1: Reaction, r2: Reaction) -> bool:
    """``r1 ~ r2``: both reactions have the same net gain."""
    _require_same_dim(r1, r2)
    return net(r1) == net(r2)


def inverse(r: Reaction) -> Reaction:
    return Reaction._trusted(r.product, r.reactant)


def sum_sequence(rs: Iterable[Reaction], n: int | None = None) -> Reaction:
    """Left fold of ``oplus`` over ``rs``.

    The empty sum is ``(0, 0)``; its dimension must then be given as ``n``.
    """
    rs = list(rs)
    if not rs:
        if n is None:
            raise ValueError("dimension n is required for an empty sum")
        return Reaction.zero(n)
    if n is not None and rs[0].dim != n:
        raise DimensionError(f"expected dimension {n}, got {rs[0].dim}")
    return reduce(oplus, rs)


def prefix_sums(rs: Sequence[Reaction]) -> list:
    """All partial sums ``r1``, ``r1 (+) r2``, ... in order."""
    out = []
    acc = None
    for r in rs:
        acc = r if acc is None else oplus(acc, r)
        out.append(acc)
    return out


def right_cancel_valid(r2: Reaction, r1: Reaction) -> bool:
    """Whether ``r1`` is determined by ``r1 (+) r2`` and ``r2``.

    Holds when the reactant of ``r2`` is strictly below the product of ``r1``
    in every coordinate.
    """
    _require_same_dim(r1, r2)
    return vec_lt_all(r2.reactant, r1.product)


def left_cancel_valid(r2: Reaction, r1: Reaction) -> bool:
    """Whether ``r1`` is determined by ``r2 (+) r1`` and ``r2``.

    Mirror image of :func:`right_cancel_valid` under inversion: holds when the
    product of ``r2`` is strictly below the reactant of ``r1``. (Requiring
    ``y1 << y2'`` instead is not enough: with n=1, ``(0,2) (+) (0,1)`` and
    ``(0,2) (+) (1,2)`` are both ``(0,3)``.)
    """
    _require_same_dim(r1, r2)
    return vec_lt_all(r2.product, r1.reactant)


def right_cancel(s: Reaction, r2: Reaction) -> Reaction:
    """Recover ``r1`` from ``s = r1 (+) r2`` when cancellation is valid.

    With ``y2 << y1'`` the sum is ``(y1, y2' + y1' - y2)``, so
    ``y1' = s' - y2' + y2``.
    """
    _require_same_dim(s, r2)
    y1p = tuple(a - b + c for a, b, c in zip(s.product, r2.product, r2.reactant))
    r1 = Reaction(s.reactant, y1p)
    if not right_cancel_valid(r2, r1) or oplus(r1, r2) != s:
        raise ValueError("sum is not right-cancellable by r2")
    return r1


def left_cancel(s: Reaction, r2: Reaction) -> Reaction:
    """Recover ``r1`` from ``s = r2 (+) r1`` when cancellation is valid.

    With ``y2' << y1`` the sum is ``(y2 + y1 - y2', y1')``.
    """
    _require_same_dim(s, r2)
    y1 = tuple(a - b + c for a, b, c in zip(s.reactant, r2.reactant, r2.product))
    r1 = Reaction(y1, s.product)
    if not left_cancel_valid(r2, r1) or oplus(r2, r1) != s:
        raise ValueError("sum is not left-cancellable by r2")
    return r1
