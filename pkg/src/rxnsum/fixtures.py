"""Named example networks in ``.rn`` text form."""

from __future__ import annotations

from typing import Dict

from .parser import NetworkDocument, parse

FIXTURES: Dict[str, str] = {
    "photosynthesis": """
species CO2, H2O, C6H12O6, O2
6 CO2 + 6 H2O -> C6H12O6 + 6 O2
""",
    # mRNA produced freely, translated to protein, both degraded
    "single_gene": """
species R, P
0 <=> R
R -> R + P
P -> 0
""",
    # G' is the active gene; eliminate it through its fast reactions
    "gene_expression": """
species G, G', P
G <=> G'
G' -> G' + P
P -> 0
set U = G'
fast F = G' -> G; G' -> G' + P
""",
    "mrna": """
species G, G', R, P
G <=> G'
G' -> G' + R
R -> R + P
R -> 0
P -> 0
set U = G', R
fast F = G' -> G; G' -> G' + R; R -> R + P; R -> 0
""",
    "two_substrate": """
species E, A, EA, P, EQ, Q
E + A <=> EA
EA + P -> EQ
EQ -> E + Q
set U1 = EQ
fast F1 = EQ -> E + Q
set U2 = EA, EQ
fast F2 = EA -> E + A; EA + P -> EQ; EQ -> E + Q
""",
    "chain_cycle": """
species S1, U1, U2
S1 -> U1
U1 <=> U2
set U = U1, U2
""",
    "paired_intermediates": """
species S1, S2, S3, U1, U2
S1 <=> U1 + U2
S2 <=> U1
S3 <=> U2
set U = U1, U2
fast F = U1 + U2 -> S1; U1 -> S2; U2 -> S3
""",
    "cycle_through_u": """
species S1, S2, U1
S1 -> U1
U1 -> S2
S2 -> S1
set U = U1
fast F = U1 -> S2
""",
    "two_step_shuttle": """
species S1, S2, S3, S4, U1, U2
S1 + S2 -> S3 + S4
S3 -> U1
S4 + U1 -> S1 + U2
U2 -> S2
set U = U1, U2
fast F = S4 + U1 -> S1 + U2; U2 -> S2
""",
    "wr_counterexample": """
species S1, S2, S3, S4, U1, U2
S1 -> U1
U1 -> S2
S2 -> U2
U2 -> S1
S3 + U2 <=> S4
set U = U1, U2
fast F = U1 -> S2; U2 -> S1; S3 + U2 -> S4
""",
    "reach_counterexample": """
species S1, S2, S3, S4, S5, U
S1 -> S2 + U
S2 + U -> S3
S2 -> S4
S4 + U -> S5
set U = U
fast F = S2 + U -> S3; S4 + U -> S5
""",
    "hopcroft_pansiot": """
species S0, S1, S2, S3, S4
S0 + S2 -> S0 + S1
S0 -> S3
S3 + S1 -> S3 + 2 S2
S3 -> S0 + S4
""",
    "hopcroft_pansiot_ext": """
species S0, S1, S2, S3, S4, S5
S5 -> S0 + S2
S0 + S2 -> S0 + S1
S0 -> S3
S3 + S1 -> S3 + 2 S2
S3 -> S0 + S4
""",
    "reversible_pair": """
species S1, S2
S1 <=> S2
""",
    "birth_death": """
species S1
0 <=> S1
""",
    "two_genes": """
species G, G', P, H, H', Q
G <=> G'
G' -> G' + P
P -> 0
H <=> H'
H' -> H' + Q
Q -> 0
set U1 = G'
fast F1 = G' -> G; G' -> G' + P
set U2 = H'
fast F2 = H' -> H; H' -> H' + Q
""",
}


def load(name: str) -> NetworkDocument:
    try:
        return parse(FIXTURES[name])
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; known: {sorted(FIXTURES)}") from None
