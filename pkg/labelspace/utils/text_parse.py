# text_parse.py
# コマンドライン引数のテキストを三つ組、フィルター、Γ の元、生成元の式に変換する
import re

from labelspace.exceptions import InputError
from labelspace.filters import TightFilter
from labelspace.graph_core import VertexSet
from labelspace.semigroup import ZERO, SemigroupElement
from labelspace.steinberg_algebra import AlgebraElement

SET_PATTERN = re.compile(r'\{[^{}]*\}')
TRIPLE_PATTERN = re.compile(r'^\((?P<alpha>[^,{}()]*),(?P<set>\{[^{}]*\}),(?P<beta>[^,{}()]*)\)$')
FINITE_FILTER_PATTERN = re.compile(r'^(?P<word>[^\[\](){}]*)\[(?P<atom>\{[^{}]*\})\]$')
LASSO_FILTER_PATTERN = re.compile(
  r'^(?P<prefix>[^\[\](){}]*)\((?P<cycle>[^\[\](){}]+)\)\^(?:∞|inf)\[(?P<atoms>[^\[\]]*)\]$'
)
TOKEN_PATTERN = re.compile(r'\s*(?:(?P<projection>P\{[^{}]*\})|(?P<isometry>S\{[^{}]+\})(?P<star>\*)?)')


def parse_set(graph, text: str) -> VertexSet:
  """'{1,2}' を頂点集合にする。'{}' は ∅。"""
  text = text.strip()
  if not SET_PATTERN.fullmatch(text):
    raise InputError(f'invalid vertex set {text!r} (expected {{v1,v2}})')
  names = [name.strip() for name in text[1:-1].split(',') if name.strip()]
  return graph.vset(*names)


def parse_word(graph, text: str):
  return graph.word(text.strip())


def parse_triple(semigroup, text: str) -> SemigroupElement:
  """'(word,{v1,v2},word)' または零元 '0' を検査付きで三つ組にする。"""
  text = text.replace(' ', '')
  if text == '0':
    return ZERO
  match = TRIPLE_PATTERN.match(text)
  if match is None:
    raise InputError(f'invalid triple {text!r} (expected (word,{{v1,v2}},word))')
  graph = semigroup.graph
  return semigroup.element(
    parse_word(graph, match['alpha']), parse_set(graph, match['set']), parse_word(graph, match['beta'])
  )


def parse_filter(spectrum, text: str) -> TightFilter:
  """
  'word[{atom}]' または 'prefix(cycle)^∞[{X1},{X2},…]' をタイトなフィルターにする。

  Raises:
    InputError: 書式の誤り、またはタイトでない場合。
  """
  graph = spectrum.graph
  text = text.replace(' ', '')
  match = FINITE_FILTER_PATTERN.match(text)
  if match is not None:
    return spectrum.finite_filter(parse_word(graph, match['word']), parse_set(graph, match['atom']))
  match = LASSO_FILTER_PATTERN.match(text)
  if match is None:
    raise InputError(f'invalid filter {text!r} (expected word[{{atom}}] or prefix(cycle)^∞[atoms])')
  prefix = parse_word(graph, match['prefix']) if match['prefix'] else ()
  cycle = parse_word(graph, match['cycle'])
  atoms = [parse_set(graph, atom) for atom in SET_PATTERN.findall(match['atoms'])]
  if len(atoms) != len(prefix) + len(cycle):
    raise InputError(f'{text}: give one atom per lasso position ({len(prefix) + len(cycle)} expected)')
  symbols = list(zip(prefix + cycle, atoms))
  return spectrum.infinite_filter(symbols[:len(prefix)], symbols[len(prefix):])


def parse_element(groupoid, text: str):
  """'eta;m;xi' を Γ の元にする。"""
  parts = text.split(';')
  if len(parts) != 3:
    raise InputError(f'invalid groupoid element {text!r} (expected eta;m;xi)')
  try:
    m = int(parts[1].strip())
  except ValueError:
    raise InputError(f'invalid cocycle value {parts[1]!r}') from None
  spectrum = groupoid.spectrum
  return groupoid.element(parse_filter(spectrum, parts[0]), m, parse_filter(spectrum, parts[2]))


def parse_generators(algebra, text: str):
  """
  'S{a}P{2,3}S{a}*' のような生成元の積を代数の元にする。

  積は '+' と '-' でつないで和にできる。
  """
  graph = algebra.graph
  total = AlgebraElement()
  for sign, term in _split_terms(text):
    factors = []
    position = 0
    term = term.strip()
    if not term:
      raise InputError(f'empty term in {text!r}')
    while position < len(term):
      match = TOKEN_PATTERN.match(term, position)
      if match is None or match.end() == position:
        raise InputError(f'invalid generator expression near {term[position:]!r}')
      if match['projection']:
        factors.append(algebra.projection(parse_set(graph, match['projection'][1:])))
      else:
        letter = match['isometry'][2:-1].strip()
        isometry = algebra.partial_isometry((graph.letter_id(letter),))
        factors.append(algebra.star(isometry) if match['star'] else isometry)
      position = match.end()
    total += algebra.product(factors) * sign
  return total


def _split_terms(text: str):
  terms, sign, current, depth = [], 1, '', 0
  for char in text:
    if char == '{':
      depth += 1
    elif char == '}':
      depth -= 1
    if depth == 0 and char in '+-':
      if current.strip():
        terms.append((sign, current))
      sign, current = (1 if char == '+' else -1), ''
      continue
    current += char
  terms.append((sign, current))
  return terms
