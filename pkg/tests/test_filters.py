# test_filters.py
import pytest
from hypothesis import assume, given, settings

from conftest import labelled_graphs
from labelspace.exceptions import InputError, NotWeaklyLeftResolvingError
from labelspace.space import LabelledSpace
from labelspace.utils.report_format import render_filter, render_levels
from labelspace.utils.text_parse import parse_filter, parse_triple


def rendered(space, depth):
  return [render_filter(space.graph, xi) for xi in space.spectrum.enumerate_tight(depth)]


def test_enumerate_tight(g1, g2, g3):
  assert rendered(g3, 2) == ['e[{3}]', 'a[{3}]', 'ab[{3}]', 'b[{3}]']
  assert rendered(g1, 1) == ['(a)^∞[{v}]']
  assert rendered(g2, 1) == ['e[{w}]', 'a[{w}]']


def test_enumerate_tight_rejects_negative_depth(g3):
  with pytest.raises(InputError):
    g3.spectrum.enumerate_tight(-1)


def test_levels_of_finite_filters(g3):
  graph, spectrum = g3.graph, g3.spectrum
  xi = spectrum.finite_filter(graph.word('ab'), graph.vset('3'))
  assert render_levels(graph, spectrum.complete_family_of(xi).minima) == '∅ {2} {3}'
  xi = spectrum.finite_filter(graph.word('b'), graph.vset('3'))
  assert render_levels(graph, spectrum.complete_family_of(xi).minima) == '{2} {3}'


def test_complete_from_atom(g1):
  graph = g1.graph
  chain = g1.spectrum.complete_from_atom(graph.word('a'), graph.vset('v'))
  assert chain.minima == (graph.vset('v'), graph.vset('v'))
  assert g1.spectrum.is_complete(chain)
  assert g1.spectrum.complete_from_atom((), graph.vset('v')).minima == (graph.vset('v'),)


def test_finite_filter_requires_tight_atom(g3):
  graph = g3.graph
  with pytest.raises(InputError, match='not tight'):
    g3.spectrum.finite_filter(graph.word('a'), graph.vset('2'))
  with pytest.raises(InputError, match='not an atom'):
    g3.spectrum.finite_filter(graph.word('a'), graph.vset('2', '3'))


def test_parse_lasso_filter(g1):
  xi = parse_filter(g1.spectrum, 'a(a)^inf[{v},{v}]')
  assert render_filter(g1.graph, xi) == '(a)^∞[{v}]'
  assert not xi.is_finite


def test_contains(g1, g3):
  spectrum = g3.spectrum
  xi = parse_filter(spectrum, 'ab[{3}]')
  assert spectrum.contains(xi, parse_triple(g3.semigroup, '(a,{2,3},a)'))
  assert spectrum.contains(xi, parse_triple(g3.semigroup, '(ab,{3},ab)'))
  assert not spectrum.contains(xi, parse_triple(g3.semigroup, '(b,{3},b)'))
  lasso = parse_filter(g1.spectrum, '(a)^∞[{v}]')
  assert g1.spectrum.contains(lasso, parse_triple(g1.semigroup, '(aa,{v},aa)'))


def test_contains_rejects_non_idempotents(g3):
  xi = parse_filter(g3.spectrum, 'ab[{3}]')
  with pytest.raises(InputError):
    g3.spectrum.contains(xi, parse_triple(g3.semigroup, '(a,{3},b)'))


def test_in_basic_open(g1, g3):
  spectrum = g3.spectrum
  xi = parse_filter(spectrum, 'ab[{3}]')
  e = parse_triple(g3.semigroup, '(a,{2,3},a)')
  assert spectrum.in_basic_open(xi, e)
  assert not spectrum.in_basic_open(xi, e, [parse_triple(g3.semigroup, '(ab,{3},ab)')])
  lasso = parse_filter(g1.spectrum, '(a)^∞[{v}]')
  assert not g1.spectrum.in_basic_open(
    lasso, parse_triple(g1.semigroup, '(a,{v},a)'), [parse_triple(g1.semigroup, '(aa,{v},aa)')]
  )


def test_lasso_with_prefix_and_cycle():
  space = LabelledSpace.from_edges(['1', '2'], [('1', '2', 'a'), ('2', '2', 'b')])
  assert rendered(space, 2) == ['(b)^∞[{2}]', 'a(b)^∞[{2},{2}]']


def test_idempotents_in_filter(g3):
  xi = parse_filter(g3.spectrum, 'b[{3}]')
  graph = g3.graph
  found = {(e.alpha, e.vertices) for e in g3.spectrum.idempotents_in(xi, 2)}
  assert found == {
    ((), graph.vset('2')), ((), graph.vset('2', '3')), (graph.word('b'), graph.vset('3')),
  }


@settings(max_examples=25, deadline=None)
@given(labelled_graphs())
def test_tight_filters_are_complete(drawn):
  vertices, edges = drawn
  try:
    space = LabelledSpace.from_edges(vertices, edges)
  except NotWeaklyLeftResolvingError:
    assume(False)
  spectrum = space.spectrum
  for xi in spectrum.enumerate_tight(2):
    chain = spectrum.complete_family_of(xi, None if xi.is_finite else 3)
    assert spectrum.is_complete(chain)
    assert spectrum.has_ultrafilter_propagation(chain)
    for e in spectrum.idempotents_in(xi, 2):
      assert spectrum.contains(xi, e)
