# test_boolean_family.py
import logging

import pytest
from hypothesis import HealthCheck, assume, given, settings

from conftest import labelled_graphs
from labelspace.boolean_family import AccommodatingFamily, build_family
from labelspace.exceptions import InputError
from labelspace.graph_core import LabelledGraph, is_subset


def names(space, sets):
  return {space.graph.render_set(mask) for mask in sets}


def test_minimal_families(g1, g2, g3):
  assert names(g3, g3.family) == {'{}', '{2}', '{3}', '{2,3}'}
  assert names(g1, g1.family) == {'{}', '{v}'}
  assert names(g2, g2.family) == {'{}', '{w}'}


def test_sorted_sets(g3):
  assert [g3.graph.render_set(mask) for mask in g3.family.sorted_sets()] == ['{}', '{2}', '{2,3}', '{3}']


def test_restrict(g3):
  graph, family = g3.graph, g3.family
  assert names(g3, family.restrict(graph.word('b')).carrier) == {'{}', '{3}'}
  assert names(g3, family.restrict(()).carrier) == {'{}', '{2}', '{3}', '{2,3}'}
  assert names(g3, family.restrict(graph.word('ab')).carrier) == {'{}', '{3}'}


def test_degenerate_restriction_is_flagged(g3, caplog):
  with caplog.at_level(logging.WARNING, logger='labelspace'):
    restricted = g3.family.restrict(g3.graph.word('ba'))
  assert restricted.carrier == [0]
  assert 'degenerate' in caplog.text


def test_atoms_below(g1, g3):
  graph = g3.graph
  whole = g3.family.restrict(())
  assert set(whole.atoms_below(graph.vset('2', '3'))) == {graph.vset('2'), graph.vset('3')}
  assert whole.atoms_below(0) == ()
  assert g1.family.restrict(()).atoms_below(g1.graph.vset('v')) == (g1.graph.vset('v'),)
  with pytest.raises(InputError):
    whole.atoms_below(graph.vset('1'))


def test_weakly_left_resolving(g1, g3):
  assert g3.family.check_weakly_left_resolving()
  assert g1.family.check_weakly_left_resolving()


def test_family_from_vertex_lists(g3):
  family = AccommodatingFamily.from_vertex_lists(g3.graph, [['2'], ['3'], ['2', '3']])
  assert set(family) == set(g3.family)


def test_family_not_closed_names_the_letter(g3):
  with pytest.raises(InputError, match=r'r\(a\) = \{2,3\} is missing'):
    AccommodatingFamily.from_vertex_lists(g3.graph, [['3']])


def test_family_not_closed_under_complements(g3):
  with pytest.raises(InputError, match=r'\{2,3\}\\\{3\} = \{2\} is missing'):
    AccommodatingFamily.from_vertex_lists(g3.graph, [['3'], ['2', '3']])


def test_family_with_unknown_vertex(g3):
  with pytest.raises(InputError, match='family-1'):
    AccommodatingFamily.from_vertex_lists(g3.graph, [['2'], ['7']])


def test_build_family_modes(g3):
  assert len(build_family(g3.graph, 'powerset')) == 8
  with pytest.raises(InputError):
    build_family(g3.graph, 'file')
  with pytest.raises(InputError, match='unknown family mode'):
    build_family(g3.graph, 'maximal')


def test_not_weakly_left_resolving_powerset():
  # 1 と 2 が同じ a で 3 に入るので、{1} ∩ {2} = ∅ でも r({1},a) ∩ r({2},a) = {3}
  graph = LabelledGraph(['1', '2', '3'], [('1', '3', 'a'), ('2', '3', 'a')])
  assert not AccommodatingFamily.build_powerset(graph).check_weakly_left_resolving()


@settings(max_examples=25, deadline=None, suppress_health_check=[HealthCheck.filter_too_much])
@given(labelled_graphs())
def test_minimal_family_is_closed(drawn):
  vertices, edges = drawn
  graph = LabelledGraph(vertices, edges)
  family = AccommodatingFamily.build_minimal(graph)
  assume(family.check_weakly_left_resolving())
  assert family.closure_violations() == []
  for a in range(len(graph.letters)):
    assert graph.range_of((a,)) in family


@settings(max_examples=25, deadline=None)
@given(labelled_graphs())
def test_left_resolving_graphs_are_weakly_left_resolving(drawn):
  vertices, edges = drawn
  graph = LabelledGraph(vertices, edges)
  assume(graph.validate().left_resolving)
  assert AccommodatingFamily.build_minimal(graph).check_weakly_left_resolving()


@settings(max_examples=25, deadline=None)
@given(labelled_graphs())
def test_atoms_partition_every_member(drawn):
  vertices, edges = drawn
  graph = LabelledGraph(vertices, edges)
  family = AccommodatingFamily.build_minimal(graph)
  whole = family.restrict(())
  for mask in family:
    atoms = whole.atoms_below(mask)
    union = 0
    for atom in atoms:
      assert union & atom == 0
      assert is_subset(atom, mask)
      union |= atom
    assert union == mask
