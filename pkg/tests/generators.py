"""Random network families for the acceptance fuzzers.

Species are ordered S-species first, then U-species.
"""

import itertools

from rxnsum.algebra import Reaction


def _complexes(ns, max_size):
    return [c for c in itertools.product(range(max_size + 1), repeat=ns) if sum(c) <= max_size]


def _with_tokens(c, nu, token=None):
    u = [0] * nu
    if token is not None:
        u[token] = 1
    return tuple(c) + tuple(u)


def _pick(rng, seq):
    return seq[int(rng.integers(len(seq)))]


def mass_nonincreasing_network(rng, n, k, hi=2):
    """Up to ``k`` distinct reactions over ``n`` species that never increase total mass.

    Fewer than ``k`` when the space of such reactions is smaller (``n = 1``).
    """
    vecs = list(itertools.product(range(hi + 1), repeat=n))
    pool = [Reaction(y, yp) for y in vecs for yp in vecs
            if sum(y) > 0 and sum(yp) <= sum(y) and y != yp]
    pick = rng.choice(len(pool), size=min(k, len(pool)), replace=False)
    return sorted(pool[int(i)] for i in pick)


def intermediate_network(rng):
    """A network where every U species is an intermediate.

    With S weighing 1 and U weighing 2, no reaction increases total weight,
    so reachable sets are finite and bounded by the starting weight.
    Returns ``(reactions, ns, nu)``.
    """
    ns = int(rng.integers(2, 4))
    nu = int(rng.integers(1, 3))
    cx = _complexes(ns, 2)
    pairs = [(a, b) for a in cx for b in cx if sum(a) > 0 and sum(b) <= sum(a) and a != b]
    rs = set()
    for _ in range(int(rng.integers(0, 4))):
        a, b = _pick(rng, pairs)
        rs.add(Reaction(_with_tokens(a, nu), _with_tokens(b, nu)))
    two = [c for c in cx if sum(c) == 2]
    for _ in range(int(rng.integers(1, 3))):
        rs.add(Reaction(_with_tokens(_pick(rng, two), nu),
                        _with_tokens((0,) * ns, nu, int(rng.integers(nu)))))
    zero = (0,) * ns
    for _ in range(int(rng.integers(1, 4))):
        i = int(rng.integers(nu))
        src = _with_tokens(zero, nu, i)
        if nu > 1 and rng.random() < 0.3:
            j = int(rng.integers(nu - 1))
            j += j >= i
            dst = _with_tokens(zero, nu, j)
        else:
            dst = _with_tokens(_pick(rng, cx), nu)
        rs.add(Reaction(src, dst))
    return sorted(rs), ns, nu


def _random_pair(rng, cx, nu, token_a, token_b):
    while True:
        a = _with_tokens(_pick(rng, cx), nu, token_a)
        b = _with_tokens(_pick(rng, cx), nu, token_b)
        if a != b:
            return Reaction(a, b)


def star_instance(rng):
    """A non-interacting elimination instance whose creating-plus-fast set is reversible.

    Returns ``(reactions, u, fast)``.
    """
    ns = int(rng.integers(2, 4))
    nu = int(rng.integers(1, 3))
    cx = _complexes(ns, 2)
    tok = lambda: int(rng.integers(nu))  # noqa: E731
    creating = {_random_pair(rng, cx, nu, None, tok()) for _ in range(int(rng.integers(1, 3)))}
    inner = set()
    for _ in range(int(rng.integers(0, 3))):
        r = _random_pair(rng, cx, nu, tok(), tok())
        inner |= {r, r.inverse()}
    exits = {r.inverse() for r in creating}
    for _ in range(int(rng.integers(0, 2))):
        r = _random_pair(rng, cx, nu, tok(), None)
        exits.add(r)
        creating.add(r.inverse())
    fast = inner | exits
    slow = set()
    if rng.random() < 0.3:
        slow.add(_random_pair(rng, cx, nu, tok(), None))
    r0 = set()
    reversible = rng.random() < 0.5
    for _ in range(int(rng.integers(0, 3))):
        r = _random_pair(rng, cx, nu, None, None)
        r0.add(r)
        if reversible:
            r0.add(r.inverse())
    rs = sorted(creating | fast | slow | r0)
    u = frozenset(range(ns, ns + nu))
    return rs, u, sorted(fast)
