# test_steinberg_algebra.py
from fractions import Fraction

import pytest

from labelspace.exceptions import InputError
from labelspace.steinberg_algebra import AlgebraElement
from labelspace.utils.report_format import render_algebra
from labelspace.utils.text_parse import parse_filter, parse_generators, parse_triple


@pytest.fixture
def triple(g3):
  return lambda text: parse_triple(g3.semigroup, text)


def test_coefficients_cancel():
  x = AlgebraElement({'s': 2})
  assert not x - x
  assert (x * Fraction(1, 2))['s'] == 1
  assert x['missing'] == 0
  assert not 0 * x


def test_projection_against_isometry(g3, triple):
  algebra, vset = g3.algebra, g3.graph.vset
  S_b = algebra.partial_isometry('b')
  assert algebra.multiply(algebra.projection(vset('3')), S_b) == AlgebraElement()
  expected = algebra.indicator(triple('(b,{3},e)'))
  assert algebra.multiply(algebra.projection(vset('2')), S_b) == expected
  assert algebra.multiply(S_b, algebra.projection(vset('3'))) == expected


def test_multiply_by_nothing(g3):
  algebra = g3.algebra
  assert algebra.multiply(algebra.partial_isometry('a'), AlgebraElement()) == AlgebraElement()
  assert algebra.projection(0) == AlgebraElement()


def test_word_isometry_needs_a_letter(g3):
  with pytest.raises(InputError):
    g3.algebra.word_isometry('')
  with pytest.raises(InputError):
    g3.algebra.partial_isometry('ab')


def test_generator_product(g3, triple):
  algebra = g3.algebra
  product = algebra.generator_product('a', g3.graph.vset('3'), 'b')
  assert product == algebra.indicator(triple('(a,{3},b)'))
  assert parse_generators(algebra, 'S{a}P{3}S{b}*') == product


def test_star(g3, triple):
  algebra = g3.algebra
  x = algebra.indicator(triple('(a,{3},b)'), 3)
  assert algebra.star(x) == algebra.indicator(triple('(b,{3},a)'), 3)


def test_expand_one_step(g3, triple):
  expansion = g3.algebra.expand_one_step(triple('(e,{2,3},e)'))
  assert expansion.leaves == (triple('(e,{3},e)'),)
  assert expansion.children == (triple('(b,{3},b)'),)
  expansion = g3.algebra.expand_one_step(triple('(a,{2,3},a)'))
  assert expansion.leaves == (triple('(a,{3},a)'),)
  assert expansion.children == (triple('(ab,{3},ab)'),)


def test_expand_on_the_loop(g1):
  expansion = g1.algebra.expand_one_step(parse_triple(g1.semigroup, '(e,{v},e)'))
  assert expansion.leaves == ()
  assert expansion.children == (parse_triple(g1.semigroup, '(a,{v},a)'),)


def test_leaf_point(g3, triple):
  point = g3.algebra.leaf_point(triple('(e,{3},e)'))
  assert point == g3.groupoid.unit(parse_filter(g3.spectrum, 'e[{3}]'))


def test_equals(g3):
  algebra = g3.algebra
  assert algebra.equals(parse_generators(algebra, 'P{2}'), parse_generators(algebra, 'S{b}P{3}S{b}*'))
  assert not algebra.equals(parse_generators(algebra, 'P{2}'), parse_generators(algebra, 'P{3}'))
  assert algebra.equals(parse_generators(algebra, 'P{2,3} - P{3}'), parse_generators(algebra, 'P{2}'))


def test_normal_form_of_zero(g3):
  assert g3.algebra.normal_form(AlgebraElement()) == AlgebraElement()


def test_check_relations(g1, g2, g3):
  for space in (g1, g2, g3):
    report = space.algebra.check_relations()
    assert report.ok, report.failures
    assert report.summary_line() == 'relations: i OK, ii OK, iii OK, iv OK'
  # G3 で (iv) の対象は {2} だけ（{2,3} はシンク {3} を含む）
  assert g3.algebra.check_relations().checked['iv'] == 1


def test_convolve_pointwise(g3):
  algebra, vset = g3.algebra, g3.graph.vset
  x, y = algebra.projection(vset('2', '3')), algebra.projection(vset('3'))
  for text, value in (('e[{3}]', 1), ('b[{3}]', 0)):
    point = g3.groupoid.unit(parse_filter(g3.spectrum, text))
    assert algebra.convolve_pointwise(x, y, point) == value
    assert algebra.evaluate(algebra.multiply(x, y), point) == value


def test_convolve_isometries(g3):
  algebra = g3.algebra
  S_b = algebra.partial_isometry('b')
  point = g3.groupoid.unit(parse_filter(g3.spectrum, 'b[{3}]'))
  assert algebra.convolve_pointwise(S_b, algebra.star(S_b), point) == 1


def test_parse_generators(g3):
  algebra = g3.algebra
  x = parse_generators(algebra, 'P{2,3} - P{3}')
  assert render_algebra(g3.graph, x) == '(e,{2,3},e) - (e,{3},e)'
  assert render_algebra(g3.graph, parse_generators(algebra, 'P{3}-P{3}')) == '0'
  assert render_algebra(g3.graph, parse_generators(algebra, 'P{3} + P{3}')) == '2*(e,{3},e)'


@pytest.mark.parametrize('text', ['P{2}Q', 'P{2} +', 'S{}'])
def test_parse_generators_rejects(g3, text):
  with pytest.raises(InputError):
    parse_generators(g3.algebra, text)
