# test_surgery.py
import pytest
from hypothesis import assume, given, settings

from conftest import labelled_graphs
from labelspace.exceptions import DomainError, NotWeaklyLeftResolvingError
from labelspace.space import LabelledSpace
from labelspace.surgery import UltrafilterRef
from labelspace.utils.report_format import render_filter
from labelspace.utils.text_parse import parse_filter


def uf(space, word, *names):
  return space.surgery.ultrafilter(space.graph.word(word), space.graph.vset(*names))


def test_f_cut_end(g1, g3):
  surgery = g3.surgery
  assert surgery.f_cut_end(uf(g3, 'ab', '3'), 1) == UltrafilterRef(g3.graph.word('a'), g3.graph.vset('2'))
  assert surgery.f_cut_end(uf(g3, 'ab', '3'), 2) == uf(g3, 'ab', '3')
  assert surgery.f_cut_end(uf(g3, 'ab', '3'), 0) is None
  assert g1.surgery.f_cut_end(uf(g1, 'aa', 'v'), 1) == uf(g1, 'a', 'v')
  with pytest.raises(DomainError):
    surgery.f_cut_end(uf(g3, 'ab', '3'), 3)


def test_g_glue(g1, g3):
  assert g3.surgery.g_glue(g3.graph.word('a'), uf(g3, 'b', '3')) == uf(g3, 'ab', '3')
  assert g3.surgery.g_glue((), uf(g3, 'b', '3')) == uf(g3, 'b', '3')
  assert g1.surgery.g_glue(g1.graph.word('a'), uf(g1, 'a', 'v')) == uf(g1, 'aa', 'v')


def test_g_glue_outside_the_range(g3):
  with pytest.raises(DomainError):
    g3.surgery.g_glue(g3.graph.word('b'), uf(g3, 'e', '2'))


def test_h_cut(g2, g3):
  assert g3.surgery.h_cut(g3.graph.word('a'), uf(g3, 'ab', '3')) == uf(g3, 'b', '3')
  assert g3.surgery.h_cut((), uf(g3, 'ab', '3')) == uf(g3, 'ab', '3')
  assert g2.surgery.h_cut(g2.graph.word('a'), uf(g2, 'a', 'w')) == uf(g2, 'e', 'w')
  with pytest.raises(DomainError):
    g3.surgery.h_cut(g3.graph.word('b'), uf(g3, 'ab', '3'))


def test_glue_and_cut_filters(g1, g2, g3):
  surgery = g3.surgery
  word = g3.graph.word
  b3 = parse_filter(g3.spectrum, 'b[{3}]')
  ab3 = parse_filter(g3.spectrum, 'ab[{3}]')
  assert surgery.G_glue_filter(word('a'), b3) == ab3
  assert surgery.H_cut_filter(word('a'), ab3) == b3
  assert surgery.G_glue_filter((), b3) == b3
  assert surgery.H_cut_filter((), b3) == b3
  lasso = parse_filter(g1.spectrum, '(a)^∞[{v}]')
  assert g1.surgery.G_glue_filter(g1.graph.word('a'), lasso) == lasso
  a_w = parse_filter(g2.spectrum, 'a[{w}]')
  assert g2.surgery.H_cut_filter(g2.graph.word('a'), a_w) == parse_filter(g2.spectrum, 'e[{w}]')


def test_glue_outside_the_domain(g3):
  # (ab,{3}) のレベル0は空フィルター
  ab3 = parse_filter(g3.spectrum, 'ab[{3}]')
  assert not g3.surgery.in_glue_domain(g3.graph.word('a'), ab3)
  with pytest.raises(DomainError):
    g3.surgery.G_glue_filter(g3.graph.word('a'), ab3)


def test_cut_requires_a_beginning(g3):
  with pytest.raises(DomainError):
    g3.surgery.H_cut_filter(g3.graph.word('b'), parse_filter(g3.spectrum, 'ab[{3}]'))


def test_sigma(g1, g2, g3):
  assert render_filter(g3.graph, g3.surgery.sigma(parse_filter(g3.spectrum, 'ab[{3}]'))) == 'b[{3}]'
  lasso = parse_filter(g1.spectrum, '(a)^∞[{v}]')
  assert g1.surgery.sigma(lasso) == lasso
  assert render_filter(g2.graph, g2.surgery.sigma(parse_filter(g2.spectrum, 'a[{w}]'))) == 'e[{w}]'
  with pytest.raises(DomainError):
    g3.surgery.sigma(parse_filter(g3.spectrum, 'e[{3}]'))


def test_sigma_on_a_lasso_with_prefix():
  space = LabelledSpace.from_edges(['1', '2'], [('1', '2', 'a'), ('2', '2', 'b')])
  xi = parse_filter(space.spectrum, 'a(b)^∞[{2},{2}]')
  assert render_filter(space.graph, space.surgery.sigma(xi)) == '(b)^∞[{2}]'
  assert space.surgery.G_glue_filter(space.graph.word('a'), space.surgery.sigma(xi)) == xi


@settings(max_examples=25, deadline=None)
@given(labelled_graphs())
def test_glue_and_cut_are_inverse(drawn):
  vertices, edges = drawn
  try:
    space = LabelledSpace.from_edges(vertices, edges)
  except NotWeaklyLeftResolvingError:
    assume(False)
  surgery = space.surgery
  words = space.graph.labelled_paths_up_to(2)
  for xi in space.spectrum.enumerate_tight(2):
    for alpha in words:
      if xi.has_beginning(alpha):
        cut = surgery.H_cut_filter(alpha, xi)
        assert surgery.in_glue_domain(alpha, cut)
        assert surgery.G_glue_filter(alpha, cut) == xi
        assert surgery.sigma_power(xi, len(alpha)) == cut
      if surgery.in_glue_domain(alpha, xi):
        assert surgery.H_cut_filter(alpha, surgery.G_glue_filter(alpha, xi)) == xi
