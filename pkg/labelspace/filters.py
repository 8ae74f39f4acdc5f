# filters.py
# E(S) のフィルターを完全族で表し、タイトなフィルターを列挙する
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

import networkx as nx

from labelspace.exceptions import InputError
from labelspace.graph_core import (
  VertexSet, Word, canonical_lasso, is_subset
)
from labelspace.semigroup import InverseSemigroup, SemigroupElement

logger = logging.getLogger(__name__)

# 遷移グラフの始点
ROOT = 'root'

Symbol = tuple[int, VertexSet]


@dataclass(frozen=True)
class CompleteFamily:
  """
  語 α とレベルごとの主フィルターの最小元 X_0 … X_|α|。

  X_0 = 0 は空フィルターの印。それ以外の X_n は B_{α_1,n} の空でない要素。

  Attributes:
    word (Word): 語 α。
    minima (tuple[VertexSet]): X_0 … X_|α|。
  """
  word: Word
  minima: tuple[VertexSet, ...]

  def level(self, n: int) -> VertexSet:
    return self.minima[n]


@dataclass(frozen=True)
class TightFilter:
  """
  タイトなフィルター ξ^α。各レベルの超フィルターを原子（最小元）で持つ。

  有限型は cycle が空で、語は prefix の文字列、最上位の原子は prefix の最後
  （語が ε なら root）。無限型は (文字, 原子) の列が prefix·cycle·cycle·… となる
  投げ縄で、常に標準形で保持するので等価性は構造的な比較で決まる。

  Attributes:
    root (VertexSet): レベル0の最小元（0 は空フィルターの印）。
    prefix (tuple[Symbol]): (文字, 原子) の前置部。
    cycle (tuple[Symbol]): (文字, 原子) の周期部。有限型では空。
  """
  root: VertexSet
  prefix: tuple[Symbol, ...]
  cycle: tuple[Symbol, ...] = ()

  @property
  def is_finite(self) -> bool:
    return not self.cycle

  @property
  def length(self) -> int | None:
    """語の長さ。無限型では None。"""
    return len(self.prefix) if self.is_finite else None

  @property
  def word(self) -> Word:
    if not self.is_finite:
      raise InputError('無限型のフィルターには有限の語がありません')
    return tuple(letter for letter, _ in self.prefix)

  @property
  def top_atom(self) -> VertexSet:
    if not self.is_finite:
      raise InputError('無限型のフィルターには最上位の原子がありません')
    return self.prefix[-1][1] if self.prefix else self.root

  def symbol(self, n: int) -> Symbol:
    """n 番目（1始まり）の (文字, 原子)。"""
    if n <= len(self.prefix):
      return self.prefix[n - 1]
    if self.is_finite:
      raise IndexError(n)
    return self.cycle[(n - 1 - len(self.prefix)) % len(self.cycle)]

  def letter(self, n: int) -> int:
    return self.symbol(n)[0]

  def atom_at(self, n: int) -> VertexSet:
    """レベル n の最小元。n = 0 は root。"""
    return self.root if n == 0 else self.symbol(n)[1]

  def reaches(self, n: int) -> bool:
    return not self.is_finite or n <= len(self.prefix)

  def letters_upto(self, n: int) -> Word:
    """語の先頭 n 文字（有限型では語の長さで打ち切る）。"""
    if self.is_finite:
      n = min(n, len(self.prefix))
    return tuple(self.letter(i) for i in range(1, n + 1))

  def symbols_upto(self, n: int) -> tuple[Symbol, ...]:
    if self.is_finite:
      n = min(n, len(self.prefix))
    return tuple(self.symbol(i) for i in range(1, n + 1))

  def has_beginning(self, alpha: Sequence[int]) -> bool:
    """α が語の先頭部分であるか（投げ縄は必要なだけ展開する）。"""
    if not self.reaches(len(alpha)):
      return False
    return self.letters_upto(len(alpha)) == tuple(alpha)


def finite_tight_filter(root: VertexSet, symbols: Iterable[Symbol]) -> TightFilter:
  return TightFilter(root, tuple(symbols), ())


def lasso_tight_filter(root: VertexSet, prefix: Iterable[Symbol], cycle: Iterable[Symbol]) -> TightFilter:
  """投げ縄を標準形に直して無限型のフィルターを作る。"""
  prefix, cycle = canonical_lasso(tuple(prefix), tuple(cycle))
  return TightFilter(root, prefix, cycle)


class TightSpectrum:
  """
  タイトなフィルター全体 T_tight の有限な扱い。

  有限型は (語, 原子) から完全族を下向きに計算して作り、無限型は
  (値域の文脈 R, 原子 C) を頂点とする遷移グラフの投げ縄として作る。

  Attributes:
    semigroup (InverseSemigroup): 逆半群 S。
    family (AccommodatingFamily): 受容族 B。
    graph (LabelledGraph): グラフ。
  """

  def __init__(self, semigroup: InverseSemigroup):
    self.semigroup = semigroup
    self.family = semigroup.family
    self.graph = semigroup.graph

  # --- 完全族 ---

  def step_down(self, context: VertexSet, letter: int, target: VertexSet) -> VertexSet:
    """
    一段下のレベルの最小元 ∩{A ∈ B, A ⊆ context | r(A,a) ⊇ target}。

    条件を満たす A が無ければ空フィルターの印 0 を返す。
    """
    minimum = self.family.preimage_minimum(context, (letter,), target)
    return 0 if minimum is None else minimum

  def complete_downward(self, word: Word, top: VertexSet) -> tuple[VertexSet, ...]:
    """最上位 X_|α| = top から X_0 まで完全性の式で計算する。"""
    graph = self.graph
    minima = [top]
    for n in range(len(word) - 1, -1, -1):
      context = graph.range_of(word[:n])
      minima.append(self.step_down(context, word[n], minima[-1]))
    return tuple(reversed(minima))

  def complete_from_atom(self, word, top: VertexSet) -> CompleteFamily:
    """
    B_α の空でない要素 X を最上位とする完全族を返す。

    Args:
      word: 語 α。
      top (VertexSet): X_|α| = X。

    Returns:
      CompleteFamily: X_0 … X_|α|。X_0 は 0（空フィルターの印）になり得る。

    Raises:
      InputError: X ∉ B_α または X = ∅ の場合。
    """
    graph = self.graph
    word = graph.word(word)
    if not top or top not in self.family.restrict(word):
      raise InputError(
        f'{graph.render_set(top)} is not a nonempty member of B_{graph.render_word(word)}'
      )
    return CompleteFamily(word, self.complete_downward(word, top))

  def is_complete(self, chain: CompleteFamily) -> bool:
    """各レベルが一つ上のレベルから完全性の式で決まっているかを調べる。"""
    graph = self.graph
    word, minima = chain.word, chain.minima
    for n in range(len(word)):
      context = graph.range_of(word[:n])
      expected = self.family.preimage_minimum(context, (word[n],), minima[n + 1])
      if expected is None:
        if n != 0 or minima[0] != 0:
          return False
        continue
      if minima[n] != expected:
        return False
      if not is_subset(minima[n + 1], graph.step(minima[n], word[n])):
        return False
    return True

  def has_ultrafilter_propagation(self, chain: CompleteFamily) -> bool:
    """X_k が原子なら、それより下の空でないレベルもすべて原子か。"""
    atoms = self.family.atoms
    for k, minimum in enumerate(chain.minima):
      if minimum in atoms:
        if any(lower and lower not in atoms for lower in chain.minima[:k]):
          return False
    return True

  def complete_family_of(self, xi: TightFilter, depth: int | None = None) -> CompleteFamily:
    """フィルターの先頭 depth レベル（有限型なら全レベル）を完全族として返す。"""
    if depth is None:
      depth = len(xi.prefix) if xi.is_finite else len(xi.prefix) + len(xi.cycle)
    symbols = xi.symbols_upto(depth)
    return CompleteFamily(
      tuple(letter for letter, _ in symbols), (xi.root,) + tuple(atom for _, atom in symbols)
    )

  # --- タイト性 ---

  def has_infinitely_many_letters(self, vertices: VertexSet) -> bool:
    """L(AE^1) が無限か。有限グラフでは常に偽。"""
    letters = self.graph.letters_from(vertices)
    return len(letters) > len(self.graph.letters)

  def has_sink_member(self, word: Word, vertices: VertexSet) -> bool:
    """∅ ≠ B ⊆ A ∩ E^0_sink となる B ∈ B_α があるか。"""
    restricted = self.family.restrict(word)
    bound = vertices & self.graph.sinks
    return any(member and is_subset(member, bound) for member in restricted.carrier)

  def is_tight_atom(self, word, atom: VertexSet) -> bool:
    """
    有限型のタイト性の条件。

    原子 C を含むすべての A ∈ B_α について、L(AE^1) が無限か、
    ∅ ≠ B ⊆ A ∩ E^0_sink となる B ∈ B_α があることを調べる。
    """
    word = self.graph.word(word)
    restricted = self.family.restrict(word)
    return all(
      self.has_infinitely_many_letters(member) or self.has_sink_member(word, member)
      for member in restricted.carrier
      if is_subset(atom, member)
    )

  def finite_filter(self, word, atom: VertexSet) -> TightFilter:
    """
    有限型のタイトなフィルター (α, C) を作る。

    Raises:
      InputError: C が B_α の原子でない、またはタイトでない場合。
    """
    graph = self.graph
    word = graph.word(word)
    shown = f'{graph.render_word(word)}[{graph.render_set(atom)}]'
    if atom not in self.family.restrict(word).atoms:
      raise InputError(f'{shown}: {graph.render_set(atom)} is not an atom of B_{graph.render_word(word)}')
    if not self.is_tight_atom(word, atom):
      raise InputError(f'{shown}: the filter is not tight')
    minima = self.complete_downward(word, atom)
    return finite_tight_filter(minima[0], zip(word, minima[1:]))

  # --- 無限型 ---

  @cached_property
  def transition_graph(self) -> nx.MultiDiGraph:
    """
    頂点 (R, C)（R は値域の文脈、C は B ∩ P(R) の原子）と始点 ROOT からなるグラフ。

    a でラベル付けされた辺 (R, C) → (r(R,a), C′) は C′ ⊆ r(C,a) のときだけ張る。
    """
    graph, family = self.graph, self.family
    transitions = nx.MultiDiGraph()
    transitions.add_node(ROOT)
    pending = [ROOT]
    while pending:
      state = pending.pop()
      for letter in range(len(graph.letters)):
        if state == ROOT:
          context = graph.range_of((letter,))
          allowed = context
        else:
          context = graph.step(state[0], letter)
          allowed = graph.step(state[1], letter)
        for atom in family.atoms_within(context & allowed):
          target = (context, atom)
          if target not in transitions:
            pending.append(target)
          transitions.add_edge(state, target, key=letter)
    logger.debug(
      'transition graph: %d states, %d edges',
      transitions.number_of_nodes(), transitions.number_of_edges()
    )
    return transitions

  def advance(self, state, symbol: Symbol):
    """遷移グラフで一歩進む。辺が無ければ None。"""
    letter, atom = symbol
    context = self.graph.range_of((letter,)) if state == ROOT else self.graph.step(state[0], letter)
    target = (context, atom)
    if self.transition_graph.has_edge(state, target, key=letter):
      return target
    return None

  def follows_forever(self, state, cycle: Sequence[Symbol]) -> bool:
    """state から cycle を無限に繰り返せるか。"""
    seen = set()
    position = 0
    while (state, position) not in seen:
      seen.add((state, position))
      state = self.advance(state, cycle[position])
      if state is None:
        return False
      position = (position + 1) % len(cycle)
    return True

  def lasso_root(self, first: Symbol) -> VertexSet:
    letter, atom = first
    return self.step_down(self.graph.all_vertices, letter, atom)

  def infinite_filter(self, prefix: Iterable[Symbol], cycle: Iterable[Symbol]) -> TightFilter:
    """
    (文字, 原子) の投げ縄から無限型のタイトなフィルターを作る。

    Raises:
      InputError: 周期部が空、または完全性・超フィルターの条件を満たさない場合。
    """
    prefix, cycle = tuple(prefix), tuple(cycle)
    if not cycle:
      raise InputError('無限型のフィルターには空でない周期部が必要です')
    state = ROOT
    for position, symbol in enumerate(prefix):
      state = self.advance(state, symbol)
      if state is None:
        raise InputError(f'position {position + 1}: the levels do not form a complete family of ultrafilters')
    if not self.follows_forever(state, cycle):
      raise InputError('cycle: the levels do not form a complete family of ultrafilters')
    first = prefix[0] if prefix else cycle[0]
    return lasso_tight_filter(self.lasso_root(first), prefix, cycle)

  def _paths(self, depth: int) -> Iterator[list]:
    """ROOT から出る長さ depth 以下の道を (記号, 到達状態) の列として返す。"""
    transitions = self.transition_graph
    stack = [(ROOT, [])]
    while stack:
      state, path = stack.pop()
      if path:
        yield path
      if len(path) < depth:
        for _, target, letter in transitions.out_edges(state, keys=True):
          stack.append((target, path + [((letter, target[1]), target)]))

  def enumerate_infinite(self, depth: int) -> set[TightFilter]:
    found = set()
    for path in self._paths(depth):
      symbols = [symbol for symbol, _ in path]
      states = [ROOT] + [state for _, state in path]
      for split in range(len(path)):
        cycle = symbols[split:]
        if self.follows_forever(states[split], cycle):
          found.add(lasso_tight_filter(self.lasso_root(symbols[0]), symbols[:split], cycle))
    return {xi for xi in found if len(xi.prefix) + len(xi.cycle) <= depth}

  def enumerate_finite(self, depth: int) -> set[TightFilter]:
    graph, family = self.graph, self.family
    found = set()
    for word in graph.labelled_paths_up_to(depth):
      for atom in family.atoms_within(graph.range_of(word)):
        if self.is_tight_atom(word, atom):
          minima = self.complete_downward(word, atom)
          found.add(finite_tight_filter(minima[0], zip(word, minima[1:])))
    return found

  def enumerate_tight(self, depth: int) -> list[TightFilter]:
    """
    語の長さ depth 以下の有限型と、標準形の |prefix| + |cycle| が depth 以下の
    無限型のタイトなフィルターを出力順に返す。

    Raises:
      InputError: depth が負の場合。
    """
    if depth < 0:
      raise InputError('depth は0以上で指定してください')
    filters = self.enumerate_finite(depth) | self.enumerate_infinite(depth)
    logger.debug('enumerated %d tight filters (depth <= %d)', len(filters), depth)
    return sorted(filters, key=self.sort_key)

  def sort_key(self, xi: TightFilter):
    """語の辞書式順、続いて頂点集合の順。"""
    graph = self.graph
    names = lambda symbols: tuple(graph.letters[letter] for letter, _ in symbols)
    sets = tuple(graph.set_key(atom) for _, atom in xi.prefix + xi.cycle)
    return (names(xi.prefix), not xi.is_finite, names(xi.cycle), graph.set_key(xi.root), sets)

  # --- E(S) との対応 ---

  def contains(self, xi: TightFilter, idempotent: SemigroupElement) -> bool:
    """
    (β, A, β) ∈ ξ か。β が語の先頭部分で、レベル |β| の原子が A に含まれるとき真。

    Raises:
      InputError: 冪等でない元、または零元の場合。
    """
    if idempotent.is_zero or not idempotent.is_idempotent:
      raise InputError('contains には零でない冪等元を与えてください')
    beta = idempotent.alpha
    if not xi.has_beginning(beta):
      return False
    atom = xi.atom_at(len(beta))
    return atom != 0 and is_subset(atom, idempotent.vertices)

  def in_basic_open(self, xi: TightFilter, idempotent: SemigroupElement,
                    negatives: Iterable[SemigroupElement] = ()) -> bool:
    """ξ ∈ V_{e:e1,…,en}"""
    return self.contains(xi, idempotent) and not any(self.contains(xi, e) for e in negatives)

  def idempotents_in(self, xi: TightFilter, max_length: int) -> list[SemigroupElement]:
    """語の長さ max_length 以下で ξ に属する冪等元。"""
    return [
      e for e in self.semigroup.enumerate_idempotents(max_length) if self.contains(xi, e)
    ]


__all__ = [
  'CompleteFamily', 'TightFilter', 'TightSpectrum', 'ROOT',
  'finite_tight_filter', 'lasso_tight_filter',
]
