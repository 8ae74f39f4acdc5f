# test_graph_core.py
import pytest

from labelspace.exceptions import InputError
from labelspace.graph_core import (
  LabelledGraph, LassoWord, canonical_lasso, is_beginning, subword, validate_graph
)


def test_relative_range(g3):
  graph = g3.graph
  assert graph.relative_range(graph.vset('1'), graph.word('a')) == graph.vset('2', '3')
  assert graph.relative_range(graph.vset('1'), graph.word('ab')) == graph.vset('3')
  assert graph.relative_range(graph.vset('2'), ()) == graph.vset('2')


def test_relative_range_of_empty_word_is_identity(g1, g3):
  for space in (g1, g3):
    graph = space.graph
    for mask in range(graph.all_vertices + 1):
      assert graph.relative_range(mask, ()) == mask


def test_unknown_letter_is_rejected(g3):
  with pytest.raises(InputError, match='unknown letter'):
    g3.graph.word('ac')


def test_range_of_empty_word_is_all_vertices(g3):
  graph = g3.graph
  assert graph.range_of(()) == graph.all_vertices


def test_letters_from(g2, g3):
  assert g3.graph.letters_from(g3.graph.vset('2')) == {g3.graph.letter_id('b')}
  assert g3.graph.letters_from(0) == frozenset()
  assert g2.graph.letters_from(g2.graph.vset('w')) == frozenset()


def test_labelled_paths_up_to(g1, g3):
  graph = g3.graph
  assert graph.labelled_paths_up_to(2) == {(), graph.word('a'), graph.word('b'), graph.word('ab')}
  assert g1.graph.labelled_paths_up_to(3) == {(), (0,), (0, 0), (0, 0, 0)}
  assert graph.labelled_paths_up_to(0) == {()}
  with pytest.raises(InputError):
    graph.labelled_paths_up_to(-1)


def test_validate_graph(g1, g3):
  report = validate_graph(g3.graph)
  assert report.left_resolving
  assert report.sinks == g3.graph.vset('3')
  report = validate_graph(g1.graph)
  assert report.left_resolving
  assert report.sinks == 0
  assert report.alphabet_surjective


def test_two_equal_labels_into_one_vertex_is_not_left_resolving():
  graph = LabelledGraph(['1', '2', '3'], [('1', '3', 'a'), ('2', '3', 'a')])
  assert not graph.validate().left_resolving


def test_parallel_edges_with_one_label_are_kept_apart():
  graph = LabelledGraph(['v', 'w'], [('v', 'w', 'a'), ('v', 'w', 'a')])
  assert len(graph.edges) == 2
  assert graph.digraph.number_of_edges() == 2
  assert not graph.validate().left_resolving
  assert graph.range_of(graph.word('a')) == graph.vset('w')


@pytest.mark.parametrize('name', ['1,2', 'v w', '{v}', 'x.y', 'p;q'])
def test_reserved_characters_in_vertex_names(name):
  with pytest.raises(InputError, match='reserved character in vertex'):
    LabelledGraph([name], [(name, name, 'a')])


@pytest.mark.parametrize('edges, message', [
  ([('1', '9', 'a')], 'unknown vertex'),
  ([('1', '2', 'e')], 'edges-0'),
  ([('1', '2', 'a.b')], 'edges-0'),
  ([('1', '2')], 'edges-0'),
])
def test_invalid_edges(edges, message):
  with pytest.raises(InputError, match=message):
    LabelledGraph(['1', '2'], edges)


def test_duplicate_vertices():
  with pytest.raises(InputError):
    LabelledGraph(['1', '1'], [('1', '1', 'a')])


def test_word_text_forms():
  graph = LabelledGraph(['1', '2'], [('1', '2', 'x1'), ('2', '1', 'y')])
  assert graph.word('e') == ()
  assert graph.word('x1.y') == (graph.letter_id('x1'), graph.letter_id('y'))
  assert graph.word('x1') == (graph.letter_id('x1'),)
  assert graph.render_word(graph.word('x1.y')) == 'x1.y'
  assert graph.render_word(()) == 'e'


def test_render_set(g3):
  graph = g3.graph
  assert graph.render_set(graph.vset('3', '2')) == '{2,3}'
  assert graph.render_set(0) == '{}'


def test_subword_and_beginnings():
  alpha = (0, 1, 2, 3)
  assert subword(alpha, 2, 3) == (1, 2)
  assert subword(alpha, 3, 2) == ()
  assert is_beginning((0, 1), alpha)
  assert is_beginning((), alpha)
  assert not is_beginning((1,), alpha)


def test_canonical_lasso():
  # 周期は原始的にし、前置部は周期に吸収できるだけ縮める
  assert canonical_lasso((), (0, 0)) == ((), (0,))
  assert canonical_lasso((1, 0), (1, 0)) == ((), (1, 0))
  assert canonical_lasso((2, 1), (0, 1)) == ((2,), (1, 0))
  with pytest.raises(InputError):
    canonical_lasso((0,), ())


def test_lasso_word_drop_and_prepend():
  word = LassoWord.canonical((2,), (0, 1))
  assert word.unroll(5) == (2, 0, 1, 0, 1)
  assert word.drop(1) == LassoWord.canonical((), (0, 1))
  assert word.drop(2) == LassoWord.canonical((), (1, 0))
  assert word.drop(1).prepend((2,)) == word
  assert word.letter(4) == 0
