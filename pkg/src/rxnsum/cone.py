"""Membership in the nonnegative integer cone spanned by a set of vectors.

Used as an exact refutation tool: every element of a closure has a net gain
that is a nonnegative integer combination of the generators' net gains, so a
target outside that cone can never be hit.
"""

from __future__ import annotations

from typing import Optional, Sequence, Tuple

import numpy as np
from scipy.optimize import Bounds, LinearConstraint, milp


def integer_cone_witness(target: Sequence[int],
                         generators: Sequence[Sequence[int]]) -> Optional[Tuple[int, ...]]:
    """Coefficients ``lam >= 0`` (integers) with ``sum lam_i g_i == target``, or None.

    A returned witness is re-checked in exact integer arithmetic. ``None``
    means the MILP solver proved infeasibility.
    """
    target = tuple(int(t) for t in target)
    if not any(target):
        return (0,) * len(generators)
    gens = [tuple(int(c) for c in g) for g in generators]
    if not gens:
        return None
    a = np.array(gens, dtype=float).T
    b = np.array(target, dtype=float)
    res = milp(
        c=np.ones(len(gens)),
        constraints=LinearConstraint(a, b, b),
        integrality=np.ones(len(gens)),
        bounds=Bounds(0, np.inf),
    )
    if res.status == 2:  # infeasible
        return None
    if res.x is None:
        raise RuntimeError(f"cone membership undecided: {res.message}")
    lam = tuple(int(round(v)) for v in res.x)
    check = [sum(l * g[j] for l, g in zip(lam, gens)) for j in range(len(target))]
    if tuple(check) != target or min(lam) < 0:
        raise RuntimeError("MILP returned an inexact cone witness")
    return lam


def in_integer_cone(target: Sequence[int], generators: Sequence[Sequence[int]]) -> bool:
    return integer_cone_witness(target, generators) is not None
