"""The ``.rn`` text format for reaction networks.

Grammar (one statement per line, ``#`` starts a comment)::

    species A, B, C                  # optional; fixes the species order
    set U = G'                       # named species set
    fast F = G' -> G; G' -> G' + P   # named reaction set
    reaction := complex ("->" | "<=>") complex ["@" rate ["," rate]]
    complex  := "0" | term ("+" term)*
    term     := [positive-integer] species-name

Species names are identifier characters plus ``'`` and must not start with a
digit, so both ``2S1`` and ``2 S1`` read as two copies of ``S1``. Undeclared
species are appended in order of first appearance. ``<=>`` adds the reaction
and its inverse; a rate annotation on it takes a forward and a backward rate.
"""

from __future__ import annotations

import re
import warnings
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

from .algebra import Reaction, Vector
from .network import NetworkError, ReactionNetwork

_NAME = r"[^\W\d][\w']*"
_TERM_RE = re.compile(rf"^\s*(\d+)?\s*({_NAME})\s*$")
_NAME_RE = re.compile(rf"^{_NAME}$")
_ARROW_RE = re.compile(r"<=>|->")


class ParseError(ValueError):
    def __init__(self, message: str, line: int | None = None, col: int | None = None):
        self.line = line
        self.col = col
        where = ""
        if line is not None:
            where = f"line {line}" + (f", column {col}" if col is not None else "") + ": "
        super().__init__(where + message)


@dataclass
class NetworkDocument:
    network: ReactionNetwork
    rates: Dict[Reaction, float] = field(default_factory=dict)
    species_sets: Dict[str, FrozenSet[int]] = field(default_factory=dict)
    reaction_sets: Dict[str, Tuple[Reaction, ...]] = field(default_factory=dict)

    @property
    def species(self) -> Tuple[str, ...]:
        return self.network.species


def _parse_complex(text: str, line: int | None, col0: int) -> Dict[str, int]:
    s = text.strip()
    if s in ("0", "∅"):
        return {}
    if not s:
        raise ParseError("empty complex (write 0 for the empty complex)", line, col0 + 1)
    out: Dict[str, int] = {}
    offset = 0
    for part in text.split("+"):
        m = _TERM_RE.match(part)
        if not m:
            raise ParseError(f"bad term {part.strip()!r}", line, col0 + offset + 1)
        k = int(m.group(1)) if m.group(1) else 1
        if k <= 0:
            raise ParseError(f"coefficient must be positive in {part.strip()!r}",
                             line, col0 + offset + 1)
        name = m.group(2)
        out[name] = out.get(name, 0) + k
        offset += len(part) + 1
    return out


@dataclass
class _RawReaction:
    lhs: Dict[str, int]
    rhs: Dict[str, int]
    reversible: bool
    rates: Tuple[float, ...]
    line: Optional[int]
    text: str


def _parse_reaction_text(text: str, line: int | None = None) -> _RawReaction:
    body, rate_part = text, None
    if "@" in text:
        body, rate_part = text.split("@", 1)
    arrows = list(_ARROW_RE.finditer(body))
    if len(arrows) != 1:
        raise ParseError(f"expected exactly one '->' or '<=>' in {text.strip()!r}", line)
    a = arrows[0]
    lhs = _parse_complex(body[:a.start()], line, 0)
    rhs = _parse_complex(body[a.end():], line, a.end())
    reversible = a.group() == "<=>"
    rates: Tuple[float, ...] = ()
    if rate_part is not None:
        try:
            rates = tuple(float(x) for x in rate_part.split(","))
        except ValueError:
            raise ParseError(f"bad rate annotation {rate_part.strip()!r}", line,
                             len(body) + 2) from None
        if len(rates) != (2 if reversible else 1):
            raise ParseError("'->' takes one rate and '<=>' takes two", line, len(body) + 2)
        if any(k <= 0 for k in rates):
            raise ParseError("rate constants must be positive", line, len(body) + 2)
    return _RawReaction(lhs, rhs, reversible, rates, line, text.strip())


def _vector(d: Dict[str, int], species: Sequence[str]) -> Vector:
    return tuple(d.get(s, 0) for s in species)


def _expand(raw: _RawReaction, species: Sequence[str]) -> List[Tuple[Reaction, Optional[float]]]:
    unknown = [s for s in list(raw.lhs) + list(raw.rhs) if s not in species]
    if unknown:
        raise ParseError(f"unknown species {unknown[0]!r}", raw.line)
    fwd = Reaction(_vector(raw.lhs, species), _vector(raw.rhs, species))
    if fwd.is_zero_net():
        raise ParseError(f"reaction {raw.text!r} has zero net gain", raw.line)
    rates = raw.rates or (None, None)
    out = [(fwd, rates[0])]
    if raw.reversible:
        out.append((fwd.inverse(), rates[1]))
    return out


def parse_reactions(text: str, species: Sequence[str]) -> Tuple[Reaction, ...]:
    """Parse ``;``-separated reactions over a known species list."""
    out: List[Reaction] = []
    for chunk in text.split(";"):
        if chunk.strip():
            out.extend(r for r, _ in _expand(_parse_reaction_text(chunk), species))
    return tuple(out)


def parse_complex(text: str, species: Sequence[str]) -> Vector:
    d = _parse_complex(text, None, 0)
    unknown = [s for s in d if s not in species]
    if unknown:
        raise ParseError(f"unknown species {unknown[0]!r}")
    return _vector(d, species)


def infer_species(texts: Sequence[str]) -> List[str]:
    """Species in order of first appearance across standalone reaction strings."""
    names: List[str] = []
    for t in texts:
        raw = _parse_reaction_text(t)
        for s in list(raw.lhs) + list(raw.rhs):
            if s not in names:
                names.append(s)
    return names


def parse(text: str) -> NetworkDocument:
    declared: List[str] = []
    raws: List[_RawReaction] = []
    sets_raw: List[Tuple[str, str, int]] = []
    fast_raw: List[Tuple[str, str, int]] = []

    for lineno, line in enumerate(text.splitlines(), start=1):
        stmt = line.split("#", 1)[0].strip()
        if not stmt:
            continue
        head = stmt.split(None, 1)[0]
        if head == "species":
            rest = stmt[len("species"):]
            for name in rest.split(","):
                name = name.strip()
                if not _NAME_RE.match(name):
                    raise ParseError(f"bad species name {name!r}", lineno)
                if name in declared:
                    raise ParseError(f"species {name!r} declared twice", lineno)
                declared.append(name)
        elif head in ("set", "fast") and "=" in stmt and not _ARROW_RE.search(stmt.split("=", 1)[0]):
            label, body = stmt[len(head):].split("=", 1)
            label = label.strip()
            if not _NAME_RE.match(label):
                raise ParseError(f"bad set name {label!r}", lineno)
            (sets_raw if head == "set" else fast_raw).append((label, body, lineno))
        else:
            raws.append(_parse_reaction_text(stmt, lineno))

    species = list(declared)
    for raw in raws:
        for s in list(raw.lhs) + list(raw.rhs):
            if s not in species:
                species.append(s)

    reactions: List[Reaction] = []
    labels: List[str] = []
    rates: Dict[Reaction, float] = {}
    for raw in raws:
        for r, k in _expand(raw, species):
            if r in rates or r in reactions:
                warnings.warn(f"line {raw.line}: duplicate reaction {raw.text!r} ignored",
                              stacklevel=2)
                continue
            reactions.append(r)
            labels.append(f"line {raw.line}")
            if k is not None:
                rates[r] = k
    try:
        net = ReactionNetwork(species, reactions, labels)
    except NetworkError as exc:
        raise ParseError(str(exc)) from None

    species_sets = {}
    for label, body, lineno in sets_raw:
        names = [s.strip() for s in body.split(",") if s.strip()]
        bad = [s for s in names if s not in species]
        if bad:
            raise ParseError(f"unknown species {bad[0]!r} in set {label}", lineno)
        species_sets[label] = frozenset(species.index(s) for s in names)
    reaction_sets = {}
    for label, body, lineno in fast_raw:
        try:
            rs = parse_reactions(body, species)
        except ParseError as exc:
            raise ParseError(f"in reaction set {label}: {exc}", lineno) from None
        reaction_sets[label] = rs
    return NetworkDocument(net, rates, species_sets, reaction_sets)


def parse_network(text: str) -> ReactionNetwork:
    return parse(text).network


def format_complex(v: Sequence[int], species: Sequence[str]) -> str:
    terms = [name if k == 1 else f"{k}{name}" for k, name in zip(v, species) if k]
    return " + ".join(terms) if terms else "0"


def format_reaction(r: Reaction, species: Sequence[str]) -> str:
    return f"{format_complex(r.reactant, species)} -> {format_complex(r.product, species)}"


def print_canonical(net: ReactionNetwork, rates: Dict[Reaction, float] | None = None) -> str:
    lines = ["species " + ", ".join(net.species)]
    for r in net.reactions:
        s = format_reaction(r, net.species)
        if rates and r in rates:
            s += f" @ {rates[r]!r}"
        lines.append(s)
    return "\n".join(lines) + "\n"


def reaction_json(r: Reaction, species: Sequence[str]) -> dict:
    return {
        "reactant": list(r.reactant),
        "product": list(r.product),
        "text": format_reaction(r, species),
    }
