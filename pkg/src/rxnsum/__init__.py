"""Sums of chemical reactions and the network analyses built on them."""

__version__ = "0.1.0"

from .algebra import (DimensionError, Reaction, equivalent, inverse, left_cancel,  # noqa: E402
                      left_cancel_valid, net, oplus, prefix_sums, right_cancel,
                      right_cancel_valid, sum_sequence)
from .closure import (ClosureConfig, ClosureSet, closure, is_essential_bounded,  # noqa: E402
                      is_reversible, is_weakly_reversible)
from .network import (NetworkError, ReactionNetwork, has_catalytic_species,  # noqa: E402
                      is_intermediate, is_non_interacting, partition, support)
from .parser import ParseError, parse, parse_network, print_canonical  # noqa: E402
from .reach import (BoxGraph, essential_by_symmetry, fire, is_active_sequence,  # noqa: E402
                    leads_to, leads_to_via_closure, reachable_set, structurally_identical)
from .reduction import (EliminationSpec, ReducedNetwork, build_token_graph,  # noqa: E402
                        check_disjoint_union_eliminability, check_sequential_eliminability,
                        check_star_condition, is_eliminable, reachability_preservation, reduce,
                        reversibility_report)
from .semilinear import LinearSet, SemiLinearSet, check_closure_in_semilinear, slice_set  # noqa: E402
from .simulate import empirical_active_check, propensity, simulate  # noqa: E402
from .verdicts import Verdict  # noqa: E402
