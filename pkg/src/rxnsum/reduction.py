"""Species elimination and reduced networks.

A set of species ``U`` is eliminable with respect to fast reactions ``F``
(a subset of the reactions consuming ``U``) when every sum ``r0 (+) r1``,
with ``r0`` producing ``U`` and ``r1`` a sum over ``F``, that has a
``U``-free reactant can be completed by a further sum over ``F`` to one
with ``U``-free reactant and product. The reduced network keeps the
reactions not touching ``U`` and adds all such completed sums.

Reactants only grow along a sum, so a prefix with ``U`` in its reactant can
never become ``U``-free again; every search below prunes those prefixes.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Tuple

from .algebra import Reaction, Vector, inverse, net, oplus, sum_sequence
from .closure import (ClosureConfig, EssentialResult, closure_witness, is_essential_bounded,
                      is_reversible, is_weakly_reversible)
from .cone import in_integer_cone
from .network import (ReactionNetwork, SpeciesSet, is_intermediate, is_non_interacting,
                      partition, touches)
from .reach import reachable_set
from .verdicts import Verdict

EXIT = "EXIT"
Derivation = Tuple[Reaction, Tuple[Reaction, ...]]


class NotNonInteracting(ValueError):
    pass


class NotEliminable(ValueError):
    pass


class InvalidFastSet(ValueError):
    pass


@dataclass(frozen=True)
class EliminationSpec:
    u: SpeciesSet
    fast: Tuple[Reaction, ...]
    bounds: ClosureConfig = field(default_factory=ClosureConfig)
    product_cap: int = 8
    max_chain: int = 16

    def __init__(self, u: Iterable[int], fast: Iterable[Reaction],
                 bounds: Optional[ClosureConfig] = None, product_cap: int = 8,
                 max_chain: int = 16):
        object.__setattr__(self, "u", frozenset(u))
        object.__setattr__(self, "fast", tuple(sorted(set(fast))))
        object.__setattr__(self, "bounds", bounds or ClosureConfig())
        object.__setattr__(self, "product_cap", int(product_cap))
        object.__setattr__(self, "max_chain", int(max_chain))
        if self.product_cap < 0 or self.max_chain < 1:
            raise ValueError("product_cap must be >= 0 and max_chain >= 1")

    @classmethod
    def all_consuming(cls, net: Iterable[Reaction], u: Iterable[int], **kw) -> "EliminationSpec":
        """Take every reaction with a ``u`` species in its reactant as fast."""
        u = frozenset(u)
        r_u, _, _ = partition(net, u)
        return cls(u, r_u, **kw)

    def validate(self, net: Iterable[Reaction]) -> None:
        rs = set(net)
        for f in self.fast:
            if f not in rs:
                raise InvalidFastSet(f"fast reaction {f} is not in the network")
            if not touches(f.reactant, self.u):
                raise InvalidFastSet(f"fast reaction {f} does not consume an eliminated species")


def _u_free(v: Sequence[int], u: SpeciesSet) -> bool:
    return not touches(v, u)


def _within(r: Reaction, cap: int) -> bool:
    return max(r.reactant, default=0) <= cap and max(r.product, default=0) <= cap


# token graph (non-interacting species)

@dataclass(frozen=True)
class TokenGraph:
    """Movement of the single eliminated molecule under fast reactions.

    Nodes are the species of ``U`` (by index) plus ``EXIT``; an edge
    ``(u, v, f)`` means fast reaction ``f`` consumes ``u`` and produces ``v``
    (or nothing from ``U``, for ``v == EXIT``). Entries are the species
    produced by reactions that create ``U`` from a ``U``-free reactant.
    """

    nodes: Tuple[object, ...]
    edges: Tuple[Tuple[int, object, Reaction], ...]
    entries: Tuple[int, ...]
    entry_reactions: Tuple[Tuple[int, Reaction], ...]

    def successors(self, node) -> List[Tuple[object, Reaction]]:
        return [(v, f) for u, v, f in self.edges if u == node]

    def reachable_from_entries(self) -> Dict[object, Optional[Tuple[object, Reaction]]]:
        """BFS tree over nodes reachable from an entry: node -> (parent, reaction)."""
        parent: Dict[object, Optional[Tuple[object, Reaction]]] = {}
        q = deque()
        for e in self.entries:
            if e not in parent:
                parent[e] = None
                q.append(e)
        while q:
            a = q.popleft()
            if a == EXIT:
                continue
            for b, f in self.successors(a):
                if b not in parent:
                    parent[b] = (a, f)
                    q.append(b)
        return parent

    def reaching_exit(self) -> FrozenSet[object]:
        good = {EXIT}
        changed = True
        while changed:
            changed = False
            for u, v, _ in self.edges:
                if v in good and u not in good:
                    good.add(u)
                    changed = True
        return frozenset(good)


def _only_token(v: Sequence[int], u: SpeciesSet) -> Optional[int]:
    hits = [i for i in sorted(u) if v[i] > 0]
    return hits[0] if hits else None


def build_token_graph(net: Iterable[Reaction], spec: EliminationSpec) -> TokenGraph:
    rs = sorted(set(net))
    u = spec.u
    if not is_non_interacting(rs, u):
        raise NotNonInteracting("the eliminated species are not non-interacting")
    r_u, r_up, _ = partition(rs, u)
    consuming = set(r_u)
    entry_reactions = []
    for r in r_up:
        if r not in consuming:
            entry_reactions.append((_only_token(r.product, u), r))
    edges = []
    for f in spec.fast:
        a = _only_token(f.reactant, u)
        b = _only_token(f.product, u)
        edges.append((a, EXIT if b is None else b, f))
    edges.sort(key=lambda e: (e[0], (1, 0) if e[1] == EXIT else (0, e[1]), e[2]))
    entries = tuple(sorted({t for t, _ in entry_reactions}))
    nodes = tuple(sorted(u)) + (EXIT,)
    return TokenGraph(nodes, tuple(edges), entries, tuple(entry_reactions))


# eliminability

@dataclass(frozen=True)
class EliminabilityResult:
    verdict: Verdict
    witness: Optional[Derivation] = None
    reason: str = ""
    method: str = ""
    token_graph: Optional[TokenGraph] = None
    explored: int = 0

    def __bool__(self) -> bool:
        return self.verdict.positive

    def witness_sum(self) -> Optional[Reaction]:
        if self.witness is None:
            return None
        r0, fs = self.witness
        return sum_sequence((r0,) + tuple(fs))


@dataclass
class _Search:
    """Breadth-first exploration of the sums ``r0 (+) f1 (+) ... (+) fk``."""

    nodes: Dict[Reaction, Derivation]
    succ: Dict[Reaction, List[Reaction]]
    cut: set
    good: set


def _explore(entries: Sequence[Reaction], fast: Sequence[Reaction], u: SpeciesSet,
             product_cap: int, max_chain: int) -> _Search:
    nodes: Dict[Reaction, Derivation] = {}
    succ: Dict[Reaction, List[Reaction]] = {}
    cut = set()
    good = set()
    q = deque()
    for r0 in entries:
        if r0 in nodes:
            continue
        if not _within(r0, product_cap):
            raise ValueError(f"product_cap {product_cap} is below a coordinate of {r0}")
        nodes[r0] = (r0, ())
        q.append(r0)
    while q:
        s = q.popleft()
        r0, fs = nodes[s]
        succ[s] = []
        if _u_free(s.product, u):
            good.add(s)
        for f in fast:
            t = oplus(s, f)
            if not _u_free(t.reactant, u):
                continue
            if t in nodes:
                succ[s].append(t)
                continue
            if len(fs) + 1 > max_chain or not _within(t, product_cap):
                cut.add(s)
                continue
            nodes[t] = (r0, fs + (f,))
            succ[s].append(t)
            q.append(t)
    return _Search(nodes, succ, cut, good)


def _backward(search: _Search, targets: Iterable[Reaction]) -> set:
    pred: Dict[Reaction, List[Reaction]] = {}
    for s, ts in search.succ.items():
        for t in ts:
            pred.setdefault(t, []).append(s)
    seen = set(targets)
    q = deque(seen)
    while q:
        t = q.popleft()
        for s in pred.get(t, ()):
            if s not in seen:
                seen.add(s)
                q.append(s)
    return seen


def _entries(rs: Sequence[Reaction], u: SpeciesSet) -> List[Reaction]:
    r_u, r_up, _ = partition(rs, u)
    consuming = set(r_u)
    return [r for r in r_up if r not in consuming]


def _cone_refutation(entries: Sequence[Reaction], fast: Sequence[Reaction],
                     u: SpeciesSet) -> Optional[Reaction]:
    """An entry whose ``U`` surplus no combination of fast reactions can remove."""
    idx = sorted(u)
    gens = [tuple(net(f)[i] for i in idx) for f in fast]
    for r0 in entries:
        target = tuple(-net(r0)[i] for i in idx)
        if not in_integer_cone(target, gens):
            return r0
    return None


def _token_verdict(rs: Sequence[Reaction], spec: EliminationSpec) -> EliminabilityResult:
    g = build_token_graph(rs, spec)
    tree = g.reachable_from_entries()
    ok = g.reaching_exit()
    stuck = [v for v in tree if v not in ok]
    if not stuck:
        return EliminabilityResult(Verdict.TRUE_EXACT, reason="every reachable token can exit",
                                   method="token-graph", token_graph=g)
    bad = min(stuck, key=lambda v: (str(v)))
    path: List[Reaction] = []
    v = bad
    while tree[v] is not None:
        v, f = tree[v]
        path.append(f)
    path.reverse()
    r0 = next(r for t, r in g.entry_reactions if t == v)
    return EliminabilityResult(Verdict.FALSE_EXACT, (r0, tuple(path)),
                               f"token on species index {bad} can never leave",
                               method="token-graph", token_graph=g)


def _general_verdict(rs: Sequence[Reaction], spec: EliminationSpec) -> EliminabilityResult:
    entries = _entries(rs, spec.u)
    bad = _cone_refutation(entries, spec.fast, spec.u)
    if bad is not None:
        return EliminabilityResult(Verdict.FALSE_EXACT, (bad, ()),
                                   "net gains of the fast reactions cannot remove the produced species",
                                   method="net-cone")
    search = _explore(entries, spec.fast, spec.u, spec.product_cap, spec.max_chain)
    fine = _backward(search, search.good)
    stuck = [s for s in search.nodes if s not in fine]
    n = len(search.nodes)
    if not stuck:
        if search.cut:
            return EliminabilityResult(Verdict.TRUE_UP_TO_BOUND,
                                       reason="every explored sum can be completed",
                                       method="bounded-search", explored=n)
        return EliminabilityResult(Verdict.TRUE_EXACT, reason="search space exhausted",
                                   method="bounded-search", explored=n)
    # a stuck sum whose whole future was explored without cuts is a proof
    tainted = _backward(search, search.cut)
    for s in stuck:
        if s not in tainted:
            return EliminabilityResult(Verdict.FALSE_EXACT, search.nodes[s],
                                       "no completion exists (future fully explored)",
                                       method="bounded-search", explored=n)
    return EliminabilityResult(Verdict.CANDIDATE_COUNTEREXAMPLE, search.nodes[stuck[0]],
                               "no completion found within the bounds",
                               method="bounded-search", explored=n)


def is_eliminable(net: Iterable[Reaction], spec: EliminationSpec,
                  method: str = "auto") -> EliminabilityResult:
    """Decide eliminability of ``spec.u`` with respect to ``spec.fast``.

    ``method`` is ``"auto"`` (token graph when the species are
    non-interacting, bounded search otherwise), ``"token-graph"`` or
    ``"bounded-search"``.
    """
    rs = sorted(set(net))
    spec.validate(rs)
    if not _entries(rs, spec.u):
        return EliminabilityResult(Verdict.TRUE_EXACT,
                                   reason="no reaction creates the species from a free reactant",
                                   method="trivial")
    if method == "token-graph" or (method == "auto" and is_non_interacting(rs, spec.u)):
        return _token_verdict(rs, spec)
    if method not in ("auto", "bounded-search"):
        raise ValueError(f"unknown method {method!r}")
    return _general_verdict(rs, spec)


# reduced network

@dataclass(frozen=True)
class ReducedNetwork:
    base: Tuple[Reaction, ...]
    generated: Tuple[Reaction, ...]
    truncated: bool
    u_eliminated: SpeciesSet
    derivations: Dict[Reaction, Derivation] = field(default_factory=dict, compare=False,
                                                    repr=False)
    eliminability: Optional[EliminabilityResult] = field(default=None, compare=False)

    @property
    def reactions(self) -> Tuple[Reaction, ...]:
        return tuple(sorted(set(self.base) | set(self.generated)))

    def network(self, species: Sequence[str]) -> ReactionNetwork:
        return ReactionNetwork(species, self.reactions)

    def network_without_eliminated(self, species: Sequence[str]) -> ReactionNetwork:
        keep = [i for i in range(len(species)) if i not in self.u_eliminated]
        return self.network(species).restrict_species(keep)

    def expand(self, r: Reaction) -> Tuple[Reaction, ...]:
        """Original reactions whose sum is ``r``."""
        if r in self.derivations:
            r0, fs = self.derivations[r]
            return (r0,) + tuple(fs)
        if r in self.base:
            return (r,)
        raise KeyError(f"{r} is not in the reduced network")


def reduce(net: Iterable[Reaction], spec: EliminationSpec, force: bool = False) -> ReducedNetwork:
    """Build the reduced network, enumerating sums up to the caps in ``spec``.

    Each generated reaction keeps its shortest derivation ``(r0, fast seq)``.
    Sums equivalent to the empty reaction are dropped.
    """
    rs = sorted(set(net))
    verdict = is_eliminable(rs, spec)
    if not verdict.verdict.positive and not force:
        raise NotEliminable(f"species are not eliminable: {verdict.verdict} ({verdict.reason})")
    _, _, r_0 = partition(rs, spec.u)
    entries = _entries(rs, spec.u)
    search = _explore(entries, spec.fast, spec.u, spec.product_cap, spec.max_chain)
    derivations = {s: search.nodes[s] for s in sorted(search.good) if not s.is_zero_net()}
    return ReducedNetwork(tuple(sorted(r_0)), tuple(sorted(derivations)), bool(search.cut),
                          spec.u, derivations, verdict)


# composition checks

@dataclass
class CompositionReport:
    applicable: bool
    verdicts: Dict[str, Verdict]
    holds: Optional[bool]
    detail: str = ""
    failed_stage: Optional[str] = None

    def as_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "verdicts": {k: str(v) for k, v in self.verdicts.items()},
            "holds": self.holds,
            "detail": self.detail,
            "failed_stage": self.failed_stage,
        }


def check_disjoint_union_eliminability(net: Iterable[Reaction], u1: Iterable[int],
                                       f1: Iterable[Reaction], u2: Iterable[int],
                                       f2: Iterable[Reaction], **kw) -> CompositionReport:
    """Eliminating two sets with non-overlapping reaction footprints one by one
    should imply eliminating their union with the union of fast sets."""
    rs = sorted(set(net))
    u1, u2 = frozenset(u1), frozenset(u2)
    s1, s2 = EliminationSpec(u1, f1, **kw), EliminationSpec(u2, f2, **kw)
    a1, b1, _ = partition(rs, u1)
    a2, b2, _ = partition(rs, u2)
    overlap = (set(a1) | set(b1)) & (set(a2) | set(b2))
    v1 = is_eliminable(rs, s1).verdict
    v2 = is_eliminable(rs, s2).verdict
    vs = {"u1": v1, "u2": v2}
    if u1 & u2:
        return CompositionReport(False, vs, None, "the species sets intersect")
    if overlap:
        return CompositionReport(False, vs, None,
                                 f"{len(overlap)} reaction(s) involve both species sets")
    if not (v1.positive and v2.positive):
        return CompositionReport(False, vs, None, "a component set is not eliminable")
    both = EliminationSpec(u1 | u2, tuple(s1.fast) + tuple(s2.fast), **kw)
    v = is_eliminable(rs, both).verdict
    vs["union"] = v
    return CompositionReport(True, vs, v.positive,
                             "union eliminable" if v.positive else "union NOT eliminable")


def check_sequential_eliminability(net: Iterable[Reaction], u1: Iterable[int],
                                   f1: Iterable[Reaction], u2: Iterable[int],
                                   **kw) -> CompositionReport:
    """Eliminate ``u1`` first, then ``u2`` in the reduced network using every
    reduced reaction consuming ``u2``; the union should then be eliminable
    with respect to ``f1`` plus every original reaction consuming ``u2``.

    The second stage runs on a possibly truncated reduced network, so its
    verdict is at most bound-qualified in that case.
    """
    rs = sorted(set(net))
    u1, u2 = frozenset(u1), frozenset(u2)
    notes = []
    applicable = True
    if u1 & u2:
        applicable = False
        notes.append("species sets intersect")
    if not is_non_interacting(rs, u1 | u2):
        applicable = False
        notes.append("union is not non-interacting")
    s1 = EliminationSpec(u1, f1, **kw)
    e1 = is_eliminable(rs, s1)
    vs = {"stage1": e1.verdict}
    if not e1.verdict.positive:
        return CompositionReport(applicable, vs, None, "; ".join(notes + ["stage 1 failed"]),
                                 failed_stage="stage1")
    red = reduce(rs, s1)
    red_rs = red.reactions
    f2, _, _ = partition(red_rs, u2)
    s2 = EliminationSpec(u2, f2, **kw)
    e2 = is_eliminable(red_rs, s2)
    v2 = e2.verdict
    if red.truncated and v2.exact:
        v2 = Verdict.TRUE_UP_TO_BOUND if v2.positive else Verdict.CANDIDATE_COUNTEREXAMPLE
    vs["stage2"] = v2
    if not v2.positive:
        return CompositionReport(applicable, vs, None, "; ".join(notes + ["stage 2 failed"]),
                                 failed_stage="stage2")
    r_u2, _, _ = partition(rs, u2)
    both = EliminationSpec(u1 | u2, tuple(s1.fast) + tuple(r_u2), **kw)
    v = is_eliminable(rs, both).verdict
    vs["union"] = v
    return CompositionReport(applicable, vs, v.positive, "; ".join(notes) or "all stages passed")


# reversibility of reduced networks

def _inv_set(rs: Iterable[Reaction]) -> FrozenSet[Reaction]:
    return frozenset(inverse(r) for r in rs)


@dataclass(frozen=True)
class StarResult:
    verdict: Verdict
    inverse_clause: bool
    essential: EssentialResult
    detail: str

    @property
    def holds(self) -> bool:
        return self.verdict.positive


def check_star_condition(net: Iterable[Reaction], spec: EliminationSpec,
                         cfg: ClosureConfig = ClosureConfig(max_summands=6)) -> StarResult:
    """Inverses of the ``U``-creating reactions must be exactly the fast
    reactions that leave no ``U`` behind, and the remaining fast reactions
    (those also producing ``U``) must have an inverse-closed closure."""
    rs = sorted(set(net))
    r_u, r_up, _ = partition(rs, spec.u)
    creating = frozenset(r for r in r_up if r not in set(r_u))
    fast = frozenset(spec.fast)
    up = frozenset(r_up)
    leaving = fast - up
    first = _inv_set(creating) == leaving
    inner = sorted(fast & up)
    n = rs[0].dim if rs else None
    ess = is_essential_bounded(inner, cfg, n=n) if inner else EssentialResult(
        Verdict.TRUE_EXACT, reason="empty set")
    if not first:
        detail = (f"inverse clause fails: {len(creating)} creating reaction(s) vs "
                  f"{len(leaving)} exiting fast reaction(s)")
        return StarResult(Verdict.FALSE_EXACT, False, ess, detail)
    v = ess.verdict
    if v.positive:
        out = Verdict.TRUE_EXACT if v.exact else Verdict.TRUE_UP_TO_BOUND
    else:
        out = Verdict.FALSE_EXACT if v.exact else Verdict.CANDIDATE_COUNTEREXAMPLE
    return StarResult(out, True, ess, f"inverse clause holds; essential clause: {v}")


@dataclass
class ClauseResult:
    hypothesis: Optional[bool]
    conclusion: Optional[bool]
    status: str  # holds | hypothesis-fails | violation | inconclusive
    note: str = ""


def _clause(hyp: Optional[bool], concl: Optional[bool], conclusive: bool,
            note: str = "") -> ClauseResult:
    if hyp is None:
        return ClauseResult(hyp, concl, "inconclusive", note)
    if not hyp:
        return ClauseResult(hyp, concl, "hypothesis-fails", note)
    if concl:
        return ClauseResult(hyp, concl, "holds", note)
    if not conclusive:
        return ClauseResult(hyp, concl, "inconclusive", note or "reduced set was truncated")
    return ClauseResult(hyp, concl, "violation", note)


def _and(*vals: Optional[bool]) -> Optional[bool]:
    """Three-valued conjunction: False wins, then unknown."""
    if any(v is False for v in vals):
        return False
    if any(v is None for v in vals):
        return None
    return True


@dataclass
class ReversibilityReport:
    applicable: bool
    star: Optional[StarResult]
    clauses: Dict[str, ClauseResult]
    reduced_reversible: bool
    reduced_weakly_reversible: bool
    truncated: bool

    @property
    def violations(self) -> List[str]:
        return [k for k, c in self.clauses.items() if c.status == "violation"]

    def as_dict(self) -> dict:
        return {
            "applicable": self.applicable,
            "star": None if self.star is None else {
                "verdict": str(self.star.verdict), "detail": self.star.detail},
            "clauses": {k: vars(c) for k, c in self.clauses.items()},
            "reduced_reversible": self.reduced_reversible,
            "reduced_weakly_reversible": self.reduced_weakly_reversible,
            "truncated": self.truncated,
            "violations": self.violations,
        }


def reversibility_report(net: Iterable[Reaction], spec: EliminationSpec,
                         reduced: Optional[ReducedNetwork] = None,
                         f0: Optional[Iterable[Reaction]] = None,
                         cfg: ClosureConfig = ClosureConfig(max_summands=6)) -> ReversibilityReport:
    """Evaluate the sufficient conditions for (weak) reversibility of a
    reduced network against what the reduced network actually is.

    Clauses: (i) a reversible creating-plus-fast set implies the star
    condition; (ii) star plus eliminability implies the generated part is reversible; (iii)
    star plus a (weakly) reversible untouched part implies the same for the
    reduced network; (iv) star plus a user-supplied ``f0`` making the
    non-consuming reactions weakly reversible implies weak reversibility.
    A conclusion failing on a truncated enumeration is only inconclusive.
    """
    rs = sorted(set(net))
    if reduced is None:
        reduced = reduce(rs, spec, force=True)
    red = reduced.reactions
    rev = is_reversible(red)
    wrev = is_weakly_reversible(red)
    conclusive = not reduced.truncated
    if not is_non_interacting(rs, spec.u):
        return ReversibilityReport(False, None, {}, rev, wrev, reduced.truncated)
    star = check_star_condition(rs, spec, cfg)
    elim = reduced.eliminability or is_eliminable(rs, spec)
    # clauses ii-iv presuppose eliminability; clause i does not need it
    star_h = _and(star.holds if star.verdict.exact else None,
                  elim.verdict.positive if elim.verdict.exact else None)
    r_u, r_up, r_0 = partition(rs, spec.u)
    creating = [r for r in r_up if r not in set(r_u)]
    clauses = {}
    clauses["i"] = _clause(is_reversible(creating + list(spec.fast)), star.holds,
                           star.verdict.exact, "" if star.verdict.exact else "star verdict bounded")
    clauses["ii"] = _clause(star_h, is_reversible(reduced.generated), conclusive)
    hyp_rev = _and(star_h, is_reversible(r_0))
    clauses["iii-reversible"] = _clause(hyp_rev, rev, conclusive)
    hyp_wrev = _and(star_h, is_weakly_reversible(r_0))
    clauses["iii-weak"] = _clause(hyp_wrev, wrev, conclusive)
    if f0 is not None:
        f0 = sorted(set(f0))
        in_cl = all(closure_witness(g, rs, cfg) is not None for g in f0)
        wr = is_weakly_reversible([r for r in rs if r not in set(r_u)] + f0)
        hyp = _and(star_h, True if in_cl else None, wr)
        note = "" if in_cl else "F0 not shown to lie in the closure within the bound"
        clauses["iv"] = _clause(hyp, wrev, conclusive, note)
    return ReversibilityReport(True, star, clauses, rev, wrev, reduced.truncated)


# reachability preservation

@dataclass
class PreservationReport:
    pairs_checked: int
    gaps: List[Tuple[Vector, Vector]]        # reached by the original only
    violations: List[Tuple[str, Vector, Vector]]
    clause_ii_applies: bool
    clipped: bool

    @property
    def ok(self) -> bool:
        return not self.violations


def reachability_preservation(net: Iterable[Reaction], spec: EliminationSpec,
                              reduced: ReducedNetwork, box: Sequence[int],
                              starts: Optional[Iterable[Sequence[int]]] = None) -> PreservationReport:
    """Compare reachability between ``U``-free states in the original and
    reduced networks, within ``box``.

    Reduced reachability must always imply original reachability (each
    reduced step expands to original steps). The converse is asserted only
    for intermediate species with every consuming reaction fast. Negative
    answers from a clipped search, or from a truncated reduced network, are
    not counted as violations.
    """
    from .reach import box_states

    rs = sorted(set(net))
    u = spec.u
    box = tuple(box)
    r_u, _, _ = partition(rs, u)
    clause_ii = is_intermediate(rs, u) and set(spec.fast) == set(r_u)
    if starts is None:
        starts = [x for x in box_states(box) if _u_free(x, u)]
    gaps, violations = [], []
    clipped = False
    checked = 0
    for x in starts:
        x = tuple(x)
        a = reachable_set(rs, x, box)
        b = reachable_set(reduced.reactions, x, box)
        clipped |= a.frontier_clipped or b.frontier_clipped
        orig = {s for s in a.states if _u_free(s, u)}
        red = {s for s in b.states if _u_free(s, u)}
        checked += len(orig | red)
        for s in sorted(red - orig):
            if not a.frontier_clipped:
                violations.append(("i", x, s))
        for s in sorted(orig - red):
            gaps.append((x, s))
            if clause_ii and not b.frontier_clipped and not reduced.truncated:
                violations.append(("ii", x, s))
    return PreservationReport(checked, gaps, violations, clause_ii, clipped)
