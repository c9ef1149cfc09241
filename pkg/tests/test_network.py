import pytest

from rxnsum.algebra import DimensionError, Reaction
from rxnsum.fixtures import load
from rxnsum.network import (NetworkError, ReactionNetwork, catalytic_species,
                            has_catalytic_species, is_intermediate, is_non_interacting,
                            partition, support)


def rx(y, yp):
    return Reaction(tuple(y), tuple(yp))


def test_zero_net_rejected():
    with pytest.raises(NetworkError):
        ReactionNetwork(["A"], [rx((1,), (1,))])


def test_dimension_checked():
    with pytest.raises(DimensionError):
        ReactionNetwork(["A", "B"], [rx((1,), (0,))])


def test_duplicate_species_rejected():
    with pytest.raises(NetworkError):
        ReactionNetwork(["A", "A"], [])


def test_canonical_order_and_dedup():
    a, b = rx((1, 0), (0, 1)), rx((0, 1), (1, 0))
    n1 = ReactionNetwork(["A", "B"], [a, b, a])
    n2 = ReactionNetwork(["A", "B"], [b, a])
    assert n1 == n2 and len(n1) == 2
    assert n1.reactions == (b, a)


def test_partition_gene():
    net = load("gene_expression").network
    u = net.species_set(["G'"])
    r_u, r_up, r_0 = partition(net.reactions, u)
    names = net.species
    from rxnsum.parser import format_reaction
    f = lambda rs: sorted(format_reaction(r, names) for r in rs)  # noqa: E731
    assert f(r_u) == ["G' -> G", "G' -> G' + P"]
    assert f(r_up) == ["G -> G'", "G' -> G' + P"]
    assert f(r_0) == ["P -> 0"]


def test_catalytic():
    net = load("gene_expression").network
    assert has_catalytic_species(net.reactions)
    r = rx((0, 1, 0), (0, 1, 1))
    assert catalytic_species(r) == {1}
    assert not has_catalytic_species(load("reversible_pair").network.reactions)


def test_species_classes():
    net = load("two_substrate").network
    u1 = net.species_set(["EQ"])
    u2 = net.species_set(["EA", "EQ"])
    assert is_non_interacting(net.reactions, u1) and is_intermediate(net.reactions, u1)
    assert is_non_interacting(net.reactions, u2)
    # EA + P uses EA inside a larger complex
    assert not is_intermediate(net.reactions, u2)
    mrna = load("mrna").network
    assert not is_non_interacting(mrna.reactions, mrna.species_set(["G'", "R"]))


def test_support():
    assert support((0, 2, 0, 1)) == {1, 3}


def test_restrict_species():
    net = ReactionNetwork(["A", "B", "C"], [rx((1, 0, 0), (0, 0, 1))])
    small = net.restrict_species([0, 2])
    assert small.species == ("A", "C") and small.reactions == (rx((1, 0), (0, 1)),)
    with pytest.raises(NetworkError):
        net.restrict_species([0, 1])


def test_unknown_species_name():
    net = load("single_gene").network
    with pytest.raises(KeyError):
        net.species_index("X")
