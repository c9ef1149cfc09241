"""Reaction networks over named species and the species-class predicates."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import FrozenSet, Iterable, Sequence, Tuple

from .algebra import DimensionError, Reaction

SpeciesSet = FrozenSet[int]


class NetworkError(ValueError):
    """Invalid network construction (net-zero reaction, bad names, ...)."""


def support(v: Sequence[int]) -> SpeciesSet:
    """Indices of the strictly positive coordinates of ``v``."""
    return frozenset(i for i, c in enumerate(v) if c > 0)


@dataclass(frozen=True)
class ReactionNetwork:
    """A finite set of reactions over an ordered list of species names.

    Reactions are kept in canonical order (see :class:`Reaction`), so reaction
    indices are stable for a given reaction set regardless of input order.
    """

    species: Tuple[str, ...]
    reactions: Tuple[Reaction, ...]
    labels: Tuple[str, ...] = field(default=(), compare=False, repr=False)

    def __init__(self, species: Iterable[str], reactions: Iterable[Reaction],
                 labels: Iterable[str] | None = None):
        species = tuple(species)
        if len(set(species)) != len(species):
            raise NetworkError(f"duplicate species names in {species}")
        rs = list(reactions)
        labels = list(labels) if labels is not None else [None] * len(rs)
        n = len(species)
        seen = {}
        for r, lab in zip(rs, labels):
            if r.dim != n:
                raise DimensionError(
                    f"reaction {r} has dimension {r.dim}, network has {n} species"
                )
            if r.is_zero_net():
                where = f" ({lab})" if lab else ""
                raise NetworkError(f"reaction{where} has zero net gain: {r}")
            seen.setdefault(r, lab)
        ordered = tuple(sorted(seen))
        object.__setattr__(self, "species", species)
        object.__setattr__(self, "reactions", ordered)
        object.__setattr__(self, "labels", tuple(seen[r] or "" for r in ordered))

    @property
    def n(self) -> int:
        return len(self.species)

    def __len__(self) -> int:
        return len(self.reactions)

    def __iter__(self):
        return iter(self.reactions)

    def __contains__(self, r) -> bool:
        return r in set(self.reactions)

    def index(self, r: Reaction) -> int:
        return self.reactions.index(r)

    def species_index(self, name: str) -> int:
        try:
            return self.species.index(name)
        except ValueError:
            raise KeyError(f"unknown species {name!r}") from None

    def species_set(self, names: Iterable[str]) -> SpeciesSet:
        return frozenset(self.species_index(s) for s in names)

    def with_reactions(self, reactions: Iterable[Reaction]) -> "ReactionNetwork":
        return ReactionNetwork(self.species, reactions)

    def restrict_species(self, keep: Iterable[int]) -> "ReactionNetwork":
        """Project onto the species ``keep``; every reaction must vanish outside it."""
        keep = sorted(keep)
        drop = set(range(self.n)) - set(keep)
        out = []
        for r in self.reactions:
            if any(r.reactant[i] or r.product[i] for i in drop):
                raise NetworkError(f"{r} involves a dropped species")
            out.append(Reaction(tuple(r.reactant[i] for i in keep),
                                tuple(r.product[i] for i in keep)))
        return ReactionNetwork([self.species[i] for i in keep], out)


def touches(v: Sequence[int], u: SpeciesSet) -> bool:
    return any(v[i] > 0 for i in u)


def partition(reactions: Iterable[Reaction], u: SpeciesSet):
    """Split reactions by where the species ``u`` occur.

    Returns ``(R_U, R_U_prime, R_0)``: reactions with a ``u``-species in the
    reactant, in the product, and in neither. The first two may overlap.
    """
    r_u, r_up, r_0 = [], [], []
    for r in reactions:
        a = touches(r.reactant, u)
        b = touches(r.product, u)
        if a:
            r_u.append(r)
        if b:
            r_up.append(r)
        if not a and not b:
            r_0.append(r)
    return tuple(r_u), tuple(r_up), tuple(r_0)


def catalytic_species(r: Reaction) -> SpeciesSet:
    """Species present on both sides of ``r``."""
    return support(r.reactant) & support(r.product)


def has_catalytic_species(reactions: Iterable[Reaction]) -> bool:
    return any(catalytic_species(r) for r in reactions)


def u_load(v: Sequence[int], u: SpeciesSet) -> int:
    return sum(v[i] for i in u)


def is_non_interacting(reactions: Iterable[Reaction], u: SpeciesSet) -> bool:
    """At most one ``u`` molecule in every reactant and every product."""
    return all(u_load(r.reactant, u) <= 1 and u_load(r.product, u) <= 1
               for r in reactions)


def _bare(v: Sequence[int], i: int) -> bool:
    return v[i] == 1 and sum(v) == 1


def is_intermediate(reactions: Iterable[Reaction], u: SpeciesSet) -> bool:
    """Non-interacting, and a ``u`` species only ever forms a complex on its own."""
    reactions = list(reactions)
    if not is_non_interacting(reactions, u):
        return False
    for r in reactions:
        for i in u:
            if r.reactant[i] == 1 and not _bare(r.reactant, i):
                return False
            if r.product[i] == 1 and not _bare(r.product, i):
                return False
    return True
