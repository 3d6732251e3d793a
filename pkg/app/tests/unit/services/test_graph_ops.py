import pytest

from app.core.errors import ArgumentError, CapabilityError
from app.models.graph import Graph, MinorStep
from app.services import catalog
from app.services.graph_ops import (
    are_isomorphic,
    automorphisms,
    canonical_form,
    contract_edge,
    delete_edge,
    delete_vertex,
    enumerate_minors,
    find_decompositions,
    graph_from_form,
    is_cycle,
    is_forest,
    is_k2n,
    is_reducible,
    make_trace,
    minor_realizations,
    replay_trace,
    treewidth,
)


def test_delete_vertex_drops_incident_edges(c4):
    h = delete_vertex(c4, 0)
    assert h.vertices == (1, 2, 3)
    assert h.edges == frozenset({(1, 2), (2, 3)})


def test_contract_edge_merges_into_smaller_endpoint(c4):
    """ Should turn C4 into a triangle on the surviving labels."""
    h = contract_edge(c4, (1, 0))
    assert h.vertices == (0, 2, 3)
    assert h.edges == frozenset({(0, 2), (2, 3), (0, 3)})


@pytest.mark.parametrize("op, arg", [
    (delete_vertex, 9),
    (contract_edge, (0, 2)),
    (delete_edge, (0, 2)),
])
def test_operations_reject_missing_targets(c4, op, arg):
    with pytest.raises(ArgumentError):
        op(c4, arg)


def test_trace_records_vertex_map(c4):
    """ Should map deleted vertices to None and contracted ones to the survivor."""
    trace = make_trace(c4, [MinorStep("delete", (3,)), MinorStep("contract", (1, 2))])
    assert trace.result.vertices == (0, 1)
    assert trace.image(2) == 1
    assert trace.deleted == (3,)
    assert replay_trace(trace) == trace.result


def test_canonical_form_identifies_isomorphic_graphs(c4):
    relabeled = Graph.from_edges(4, [(0, 2), (2, 1), (1, 3), (3, 0)])
    assert are_isomorphic(c4, relabeled)
    assert not are_isomorphic(catalog.path(4), catalog.star(3))
    assert are_isomorphic(graph_from_form(canonical_form(c4)), c4)


def test_automorphism_counts(k3, c4):
    assert len(automorphisms(k3)) == 6
    assert len(automorphisms(c4)) == 8


def test_minors_of_k3(k3):
    """ Should find K3, K2 and K1 only when edges cannot be deleted."""
    assert len(enumerate_minors(k3).minors) == 3
    assert len(enumerate_minors(k3, allow_edge_deletion=True).minors) == 7


def test_minors_of_c4(c4):
    found = enumerate_minors(c4)
    assert not found.truncated
    assert len(found.minors) == 6
    assert canonical_form(catalog.complete(3)) in found.forms()


def test_minor_enumeration_truncates(c4):
    found = enumerate_minors(c4, max_out=2)
    assert found.truncated
    assert len(found.minors) == 2


def test_minor_realizations_of_k3(k3):
    """ Should list every deleted set with every connected partition of the rest."""
    traces = list(minor_realizations(k3))
    assert len(traces) == 14
    assert all(replay_trace(t) == t.result for t in traces)


def test_decompositions_of_a_path():
    decs = find_decompositions(catalog.path(3))
    assert len(decs) == 1
    (dec,) = decs
    assert dec.s == frozenset({1})
    assert {dec.v1, dec.v2} == {frozenset({0}), frozenset({2})}


def test_reducibility(k3, c4, example):
    assert not is_reducible(k3)
    assert not is_reducible(c4)
    assert is_reducible(example)
    assert is_reducible(catalog.glue(c4, k3, (0, 1), (0, 1)))


def test_graph_classes(c5, k23):
    assert is_forest(catalog.path(4))
    assert is_forest(catalog.empty(3))
    assert not is_forest(c5)
    assert is_cycle(c5)
    assert not is_cycle(catalog.disjoint_union(catalog.complete(3), catalog.complete(3)))
    assert is_k2n(k23)
    assert is_k2n(catalog.cycle(4))
    assert not is_k2n(catalog.complete_bipartite(3, 3))
    assert not is_k2n(catalog.path(3))


@pytest.mark.parametrize("g, expected", [
    (catalog.empty(3), 0),
    (catalog.path(5), 1),
    (catalog.cycle(5), 2),
    (catalog.complete(4), 3),
    (catalog.complete(5), 4),
])
def test_treewidth(g, expected):
    assert treewidth(g) == expected


def test_treewidth_is_capped():
    with pytest.raises(CapabilityError):
        treewidth(catalog.complete(9))
