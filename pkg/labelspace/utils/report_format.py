# report_format.py
# 語、集合、三つ組、フィルター、Γ の元、代数の元を1行のテキストにする
from labelspace.filters import TightFilter
from labelspace.graph_core import LabelledGraph
from labelspace.groupoid import Cylinder, Germ, GroupoidElement
from labelspace.semigroup import SemigroupElement


def render_triple(graph: LabelledGraph, s: SemigroupElement) -> str:
  if s.is_zero:
    return '0'
  return f'({graph.render_word(s.alpha)},{graph.render_set(s.vertices)},{graph.render_word(s.beta)})'


def triple_key(graph: LabelledGraph, s: SemigroupElement):
  names = lambda word: tuple(graph.letters[a] for a in word)
  return (names(s.alpha), names(s.beta), graph.set_key(s.vertices))


def render_filter(graph: LabelledGraph, xi: TightFilter) -> str:
  """有限型は word[{atom}]、無限型は prefix(cycle)^∞[{X1},{X2},…]。"""
  if xi.is_finite:
    return f'{graph.render_word(xi.word)}[{graph.render_set(xi.top_atom)}]'
  prefix = tuple(letter for letter, _ in xi.prefix)
  cycle = tuple(letter for letter, _ in xi.cycle)
  head = graph.render_word(prefix) if prefix else ''
  atoms = ','.join(graph.render_set(atom) for _, atom in xi.prefix + xi.cycle)
  return f'{head}({graph.render_word(cycle)})^∞[{atoms}]'


def render_levels(graph: LabelledGraph, minima) -> str:
  """完全族の最小元の並び。空フィルターの印は ∅。"""
  return ' '.join(graph.render_set(m) if m else '∅' for m in minima)


def render_element(graph: LabelledGraph, x: GroupoidElement) -> str:
  return f'{render_filter(graph, x.eta)};{x.m};{render_filter(graph, x.xi)}'


def render_germ(graph: LabelledGraph, germ: Germ) -> str:
  return f'[{render_triple(graph, germ.s)}, {render_filter(graph, germ.xi)}]'


def render_cylinder(graph: LabelledGraph, cylinder: Cylinder | None) -> str:
  if cylinder is None:
    return 'empty'
  text = 'Z' + render_triple(graph, cylinder.triple)
  if cylinder.idempotent is not None or cylinder.negatives:
    e = render_triple(graph, cylinder.idempotent) if cylinder.idempotent is not None else 's*s'
    text += f'[{e}:' + ','.join(render_triple(graph, n) for n in cylinder.negatives) + ']'
  return text


def render_algebra(graph: LabelledGraph, x) -> str:
  """c*(α,A,β) の和。空なら 0。"""
  if not x:
    return '0'
  parts = []
  for s in sorted(x, key=lambda s: triple_key(graph, s)):
    coefficient = x[s]
    sign = '-' if coefficient < 0 else '+'
    magnitude = abs(coefficient)
    body = render_triple(graph, s) if magnitude == 1 else f'{magnitude}*{render_triple(graph, s)}'
    parts.append((sign, body))
  first_sign, first_body = parts[0]
  text = ('-' if first_sign == '-' else '') + first_body
  for sign, body in parts[1:]:
    text += f' {sign} {body}'
  return text
