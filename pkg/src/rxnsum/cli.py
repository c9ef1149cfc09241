"""Command-line interface.

Exit codes: 0 success or property holds, 1 violation / counterexample /
negative answer, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import warnings
from typing import List, Optional, Sequence

from . import __version__
from .algebra import Reaction, sum_sequence
from .closure import ClosureConfig, closure
from .network import NetworkError, partition
from .parser import (NetworkDocument, ParseError, format_reaction, infer_species, parse,
                     parse_complex, parse_reactions, reaction_json)
from .reach import leads_to, leads_to_via_closure, reachable_set
from .reduction import (EliminationSpec, InvalidFastSet, NotEliminable, check_star_condition,
                        is_eliminable, reachability_preservation, reduce, reversibility_report)
from .semilinear import SemiLinearSet, check_closure_in_semilinear
from .simulate import simulate
from .verdicts import Verdict

SCHEMA_VERSION = 1
OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(args, payload: dict, text: str) -> None:
    if args.json:
        payload = {"schema_version": SCHEMA_VERSION, "command": args.command, **payload}
        print(json.dumps(payload, indent=2, sort_keys=False))
    else:
        print(text.rstrip("\n"))


def _read(path: str) -> NetworkDocument:
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return parse(text)


def _box(text: Optional[str], n: int) -> tuple:
    if text is None:
        raise UsageError("--box is required")
    try:
        vals = tuple(int(v) for v in text.split(","))
    except ValueError:
        raise UsageError(f"bad --box {text!r}") from None
    if len(vals) == 1:
        vals = vals * n
    if len(vals) != n or min(vals) < 0:
        raise UsageError(f"--box needs {n} nonnegative values")
    return vals


def _state(text: Optional[str], doc: NetworkDocument, flag: str) -> tuple:
    if text is None:
        raise UsageError(f"{flag} is required")
    t = text.strip()
    if t and all(part.strip().lstrip("-").isdigit() for part in t.split(",")) and "," in t:
        vals = tuple(int(v) for v in t.split(","))
        if len(vals) != len(doc.species) or min(vals) < 0:
            raise UsageError(f"{flag} needs {len(doc.species)} nonnegative counts")
        return vals
    return parse_complex(t, doc.species)


def _elimination(args, doc: NetworkDocument) -> EliminationSpec:
    if not args.eliminate:
        raise UsageError("--eliminate is required")
    if args.eliminate in doc.species_sets:
        u = doc.species_sets[args.eliminate]
    else:
        names = [s.strip() for s in args.eliminate.split(",") if s.strip()]
        try:
            u = doc.network.species_set(names)
        except KeyError as exc:
            raise UsageError(str(exc.args[0])) from None
    rs = doc.network.reactions
    if args.fast is None:
        fast = partition(rs, u)[0]
    elif args.fast in doc.reaction_sets:
        fast = doc.reaction_sets[args.fast]
    else:
        fast = parse_reactions(args.fast, doc.species)
    spec = EliminationSpec(u, fast, product_cap=args.cap, max_chain=args.max_chain)
    try:
        spec.validate(rs)
    except InvalidFastSet as exc:
        raise UsageError(str(exc)) from None
    return spec


def _rx(r: Reaction, species) -> str:
    return format_reaction(r, species)


def _names(u, species) -> List[str]:
    return [species[i] for i in sorted(u)]


# subcommands

def cmd_sum(args) -> int:
    species = args.species.split(",") if args.species else infer_species(args.reactions)
    species = [s.strip() for s in species]
    rs = [r for text in args.reactions for r in parse_reactions(text, species)]
    total = sum_sequence(rs, n=len(species))
    _emit(args, {"species": species, "sum": reaction_json(total, species)},
          _rx(total, species))
    return OK


def _closure_cfg(args) -> ClosureConfig:
    return ClosureConfig(max_summands=args.max_summands, coord_cap=args.coord_cap)


def cmd_closure(args) -> int:
    doc = _read(args.network)
    cl = closure(doc.network.reactions, _closure_cfg(args), n=doc.network.n)
    qual = "EXACT" if cl.exact else "UP_TO_BOUND"
    lines = [f"# {len(cl)} elements, saturated={cl.saturated}, capped={cl.capped} [{qual}]"]
    lines += [_rx(r, doc.species) for r in cl.sorted()]
    _emit(args, {
        "elements": [reaction_json(r, doc.species) for r in cl.sorted()],
        "saturated": cl.saturated, "capped": cl.capped, "qualification": qual,
        "max_summands": cl.config.max_summands, "coord_cap": cl.config.coord_cap,
    }, "\n".join(lines))
    return OK


def cmd_reach(args) -> int:
    doc = _read(args.network)
    box = _box(args.box, doc.network.n)
    x = _state(args.from_, doc, "--from")
    res = reachable_set(doc.network.reactions, x, box)
    qual = "UP_TO_BOUND" if res.frontier_clipped else "EXACT"
    states = sorted(res.states)
    lines = [f"# {len(states)} states, frontier_clipped={res.frontier_clipped} [{qual}]"]
    lines += [",".join(map(str, s)) for s in states]
    _emit(args, {"states": [list(s) for s in states], "frontier_clipped": res.frontier_clipped,
                 "qualification": qual, "box": list(box)}, "\n".join(lines))
    return OK


def cmd_leads_to(args) -> int:
    doc = _read(args.network)
    rs = doc.network.reactions
    box = _box(args.box, doc.network.n)
    x = _state(args.from_, doc, "--from")
    y = _state(args.to, doc, "--to")
    res = leads_to(rs, x, y, box)
    lines = [str(res.verdict)]
    payload = {"verdict": str(res.verdict), "box": list(box)}
    if res.witness is not None:
        payload["witness"] = list(res.witness)
        lines += [f"  {_rx(rs[i], doc.species)}" for i in res.witness]
    if args.via_closure:
        cl = closure(rs, _closure_cfg(args), n=doc.network.n)
        via = leads_to_via_closure(cl, x, y)
        qual = "EXACT" if via or cl.exact else "UP_TO_BOUND"
        payload["via_closure"] = {"result": via, "qualification": qual}
        lines.append(f"via closure: {'YES' if via else 'NO'} [{qual}]")
    _emit(args, payload, "\n".join(lines))
    return OK if res.verdict.positive else FAIL


def _derivation_text(red, r, species) -> str:
    r0, fs = red.derivations[r]
    return " (+) ".join(_rx(s, species) for s in (r0,) + tuple(fs))


def cmd_reduce(args) -> int:
    doc = _read(args.network)
    spec = _elimination(args, doc)
    try:
        red = reduce(doc.network.reactions, spec, force=args.force)
    except NotEliminable as exc:
        print(f"error: {exc}", file=sys.stderr)
        return FAIL
    sp = doc.species
    v = red.eliminability.verdict
    qual = "UP_TO_BOUND" if red.truncated or not v.exact else "EXACT"
    lines = [f"# eliminating {', '.join(_names(spec.u, sp))}: {v}",
             f"# truncated={red.truncated} (cap {spec.product_cap}, chain {spec.max_chain}) [{qual}]",
             "# base"]
    lines += [_rx(r, sp) for r in red.base]
    lines.append("# generated")
    lines += [_rx(r, sp) for r in red.generated]
    _emit(args, {
        "eliminated": _names(spec.u, sp), "eliminability": str(v),
        "base": [reaction_json(r, sp) for r in red.base],
        "generated": [dict(reaction_json(r, sp), derivation=_derivation_text(red, r, sp))
                      for r in red.generated],
        "truncated": red.truncated, "qualification": qual,
        "product_cap": spec.product_cap, "max_chain": spec.max_chain,
    }, "\n".join(lines))
    return OK


def cmd_check_eliminable(args) -> int:
    doc = _read(args.network)
    spec = _elimination(args, doc)
    res = is_eliminable(doc.network.reactions, spec)
    sp = doc.species
    lines = [f"{res.verdict}  ({res.method}: {res.reason})"]
    payload = {"verdict": str(res.verdict), "method": res.method, "reason": res.reason}
    if res.witness is not None:
        r0, fs = res.witness
        seq = [_rx(s, sp) for s in (r0,) + tuple(fs)]
        lines.append("witness: " + " (+) ".join(seq) + " = " + _rx(res.witness_sum(), sp))
        payload["witness"] = {"sequence": seq, "sum": reaction_json(res.witness_sum(), sp)}
    if res.token_graph is not None:
        g = res.token_graph
        name = lambda v: v if isinstance(v, str) else sp[v]  # noqa: E731
        edges = [f"{name(a)} -> {name(b)} via {_rx(f, sp)}" for a, b, f in g.edges]
        payload["token_graph"] = {"entries": [name(e) for e in g.entries], "edges": edges}
        lines.append("token graph entries: " + ", ".join(name(e) for e in g.entries))
        lines += ["  " + e for e in edges]
    _emit(args, payload, "\n".join(lines))
    return OK if res.verdict.positive else FAIL


def cmd_check_star(args) -> int:
    doc = _read(args.network)
    spec = _elimination(args, doc)
    res = check_star_condition(doc.network.reactions, spec, _closure_cfg(args))
    _emit(args, {"verdict": str(res.verdict), "inverse_clause": res.inverse_clause,
                 "essential": str(res.essential.verdict), "detail": res.detail},
          f"{res.verdict}  {res.detail}")
    return OK if res.holds else FAIL


def cmd_check_reversibility(args) -> int:
    doc = _read(args.network)
    spec = _elimination(args, doc)
    f0 = parse_reactions(args.f0, doc.species) if args.f0 else None
    rep = reversibility_report(doc.network.reactions, spec, f0=f0, cfg=_closure_cfg(args))
    qual = "UP_TO_BOUND" if rep.truncated else "EXACT"
    lines = []
    if not rep.applicable:
        lines.append("not applicable: eliminated species are not non-interacting")
    else:
        lines.append(f"star condition: {rep.star.verdict}  {rep.star.detail}")
        for k, c in rep.clauses.items():
            lines.append(f"clause {k}: {c.status} (hypothesis={c.hypothesis}, "
                         f"conclusion={c.conclusion}) {c.note}".rstrip())
    lines.append(f"reduced network reversible={rep.reduced_reversible}, "
                 f"weakly reversible={rep.reduced_weakly_reversible} [{qual}]")
    _emit(args, dict(rep.as_dict(), qualification=qual), "\n".join(lines))
    return FAIL if rep.violations else OK


def cmd_check_semilinear(args) -> int:
    doc = _read(args.network)
    try:
        with open(args.set, encoding="utf-8") as fh:
            s = SemiLinearSet.from_json(fh.read())
    except (OSError, KeyError, ValueError) as exc:
        raise UsageError(f"cannot load semi-linear set: {exc}") from None
    if s.dim is not None and s.dim != 2 * doc.network.n:
        raise UsageError(f"set has dimension {s.dim}, expected {2 * doc.network.n}")
    cl = closure(doc.network.reactions, _closure_cfg(args), n=doc.network.n)
    box = _box(args.box, 2 * doc.network.n) if args.box else None
    rep = check_closure_in_semilinear(cl, s, box)
    qual = "EXACT" if cl.exact else "UP_TO_BOUND"
    lines = [f"closure in set: {rep.closure_in_set} [{qual}]",
             f"set within box in closure: {rep.set_in_closure} [UP_TO_BOUND]"]
    for v in rep.outside_set:
        lines.append(f"  closure element outside set: {v}")
    for v in rep.missing_from_closure:
        lines.append(f"  set member missing from closure: {v}")
    _emit(args, dict(rep.as_dict(), qualification=qual), "\n".join(lines))
    return OK if rep.holds else FAIL


def cmd_compare_reach(args) -> int:
    doc = _read(args.network)
    spec = _elimination(args, doc)
    box = _box(args.box, doc.network.n)
    rs = doc.network.reactions
    red = reduce(rs, spec, force=args.force)
    starts = [_state(args.from_, doc, "--from")] if args.from_ else None
    rep = reachability_preservation(rs, spec, red, box, starts)
    sp = doc.species
    fmt = lambda v: " + ".join(f"{c}{sp[i]}" if c > 1 else sp[i]  # noqa: E731
                               for i, c in enumerate(v) if c) or "0"
    lines = [f"pairs checked: {rep.pairs_checked}, clipped={rep.clipped} [UP_TO_BOUND]",
             f"full converse expected: {rep.clause_ii_applies}"]
    for x, y in rep.gaps[:20]:
        lines.append(f"  reached only by the original network: {fmt(x)} => {fmt(y)}")
    for c, x, y in rep.violations[:20]:
        lines.append(f"  VIOLATION ({c}): {fmt(x)} => {fmt(y)}")
    verdict = Verdict.IDENTICAL_UP_TO_BOUND if not rep.gaps else Verdict.DIFFERENT_UP_TO_BOUND
    lines.insert(0, str(verdict))
    _emit(args, {"verdict": str(verdict), "pairs_checked": rep.pairs_checked,
                 "gaps": [[list(x), list(y)] for x, y in rep.gaps],
                 "violations": [[c, list(x), list(y)] for c, x, y in rep.violations],
                 "converse_expected": rep.clause_ii_applies, "clipped": rep.clipped},
          "\n".join(lines))
    return FAIL if rep.violations else OK


def cmd_simulate(args) -> int:
    doc = _read(args.network)
    rs = doc.network.reactions
    x0 = _state(args.x0, doc, "--x0")
    tr = simulate(rs, doc.rates, x0, t_max=args.t_max, max_jumps=args.max_jumps, seed=args.seed)
    sp = doc.species
    if args.plot:
        from .plotting import plot_trajectory
        plot_trajectory(tr, sp, args.plot)
    if args.json:
        _emit(args, {"trajectory": tr.to_json(sp)}, "")
        return OK
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["time", "reaction"] + list(sp))
    for t, i, s in tr.rows():
        w.writerow([repr(t), "" if i is None else i] + list(s))
    print(buf.getvalue(), end="")
    print(f"# stop={tr.stop_reason} jumps={len(tr)} seed={args.seed} algorithm={tr.algorithm}",
          file=sys.stderr)
    return OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="rxnsum", description="Reaction-sum analysis of reaction networks.")
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    bounds = argparse.ArgumentParser(add_help=False)
    bounds.add_argument("--max-summands", type=int, default=8, metavar="L")
    bounds.add_argument("--coord-cap", type=int, default=None, metavar="C")
    elim = argparse.ArgumentParser(add_help=False)
    elim.add_argument("--eliminate", metavar="U1,U2", help="species names or a declared set name")
    elim.add_argument("--fast", metavar="R;R", help="fast reactions or a declared set name "
                      "(default: every reaction consuming an eliminated species)")
    elim.add_argument("--cap", type=int, default=8, metavar="K", help="per-coordinate cap")
    elim.add_argument("--max-chain", type=int, default=16, metavar="M")
    elim.add_argument("--force", action="store_true", help="reduce even if not shown eliminable")

    s = sub.add_parser("sum", parents=[common], help="sum a sequence of reactions")
    s.add_argument("reactions", nargs="+")
    s.add_argument("--species", help="comma-separated species order")
    s.set_defaults(func=cmd_sum)

    s = sub.add_parser("closure", parents=[common, bounds], help="enumerate the closure")
    s.add_argument("network")
    s.set_defaults(func=cmd_closure)

    s = sub.add_parser("reach", parents=[common], help="reachable states within a box")
    s.add_argument("network")
    s.add_argument("--from", dest="from_", metavar="STATE")
    s.add_argument("--box")
    s.set_defaults(func=cmd_reach)

    s = sub.add_parser("leads-to", parents=[common, bounds], help="search for a firing sequence")
    s.add_argument("network")
    s.add_argument("--from", dest="from_", metavar="STATE")
    s.add_argument("--to", metavar="STATE")
    s.add_argument("--box")
    s.add_argument("--via-closure", action="store_true", help="also answer via the closure")
    s.set_defaults(func=cmd_leads_to)

    for name, func, hlp in [
        ("reduce", cmd_reduce, "build the reduced network"),
        ("check-eliminable", cmd_check_eliminable, "decide eliminability"),
    ]:
        s = sub.add_parser(name, parents=[common, elim], help=hlp)
        s.add_argument("network")
        s.set_defaults(func=func)

    s = sub.add_parser("check-star", parents=[common, elim, bounds],
                       help="check the inverse/essential condition on the fast set")
    s.add_argument("network")
    s.set_defaults(func=cmd_check_star, max_summands=6)

    s = sub.add_parser("check-reversibility", parents=[common, elim, bounds],
                       help="reversibility conditions for the reduced network")
    s.add_argument("network")
    s.add_argument("--f0", metavar="R;R", help="reactions of cl(R) for the weak-reversibility clause")
    s.set_defaults(func=cmd_check_reversibility, max_summands=6)

    s = sub.add_parser("check-semilinear", parents=[common, bounds],
                       help="compare the closure with a semi-linear set (JSON)")
    s.add_argument("network")
    s.add_argument("--set", required=True, metavar="FILE")
    s.add_argument("--box")
    s.set_defaults(func=cmd_check_semilinear)

    s = sub.add_parser("compare-reach", parents=[common, elim],
                       help="compare reachability of a network and its reduction")
    s.add_argument("network")
    s.add_argument("--box")
    s.add_argument("--from", dest="from_", metavar="STATE")
    s.set_defaults(func=cmd_compare_reach)

    s = sub.add_parser("simulate", parents=[common], help="stochastic simulation (CSV output)")
    s.add_argument("network")
    s.add_argument("--x0", required=True, metavar="STATE")
    s.add_argument("--t-max", type=float, default=math.inf)
    s.add_argument("--max-jumps", type=int, default=1000)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--plot", metavar="PNG", help="also write a trajectory plot")
    s.set_defaults(func=cmd_simulate)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = lambda m, *a, **k: print(f"warning: {m}", file=sys.stderr)
            return args.func(args)
    except (ParseError, NetworkError, UsageError, InvalidFastSet) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
