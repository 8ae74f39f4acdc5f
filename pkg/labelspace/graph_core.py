# graph_core.py
# 有限ラベル付きグラフ、語、相対値域の計算
import logging
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from typing import Hashable, TypeVar

import networkx as nx

from labelspace.exceptions import InputError

logger = logging.getLogger(__name__)

# 頂点集合は E^0 上のビットマスク、語は文字IDのタプルで表す
VertexSet = int
Word = tuple[int, ...]
EMPTY_WORD: Word = ()
# 空語のテキスト表現（文字名としては予約語）
EPSILON = 'e'
# 頂点名とラベルに使えない文字（語・集合・三つ組のテキスト表現で使う記号）
RESERVED_CHARACTERS = '.{},()[]; '

T = TypeVar('T', bound=Hashable)


def is_subset(a: VertexSet, b: VertexSet) -> bool:
  return a & ~b == 0


def members(mask: VertexSet) -> Iterator[int]:
  """ビットマスクに含まれる頂点IDを昇順に返す。"""
  index = 0
  while mask:
    if mask & 1:
      yield index
    mask >>= 1
    index += 1


def subword(alpha: Sequence[int], i: int, j: int) -> Word:
  """
  部分語 α_{i,j} を返す（1始まり、両端を含む）。

  Args:
    alpha: 元の語。
    i (int): 開始位置。
    j (int): 終了位置。j < i のときは空語。

  Returns:
    Word: α_i α_{i+1} … α_j
  """
  if j < i:
    return EMPTY_WORD
  return tuple(alpha[i - 1:j])


def is_beginning(alpha: Sequence[int], beta: Sequence[int]) -> bool:
  """α が β の先頭部分（β = αβ′）であるかを判定する。"""
  return len(alpha) <= len(beta) and tuple(beta[:len(alpha)]) == tuple(alpha)


def canonical_lasso(prefix: Sequence[T], cycle: Sequence[T]) -> tuple[tuple[T, ...], tuple[T, ...]]:
  """
  最終的に周期的な無限列 prefix·cycle·cycle·… の標準形を返す。

  周期を原始的なものに縮め、その後に前置部を最短にする。
  前置部の長さが決まれば周期の回転も一意に決まる。

  Args:
    prefix: 前置部の記号列。
    cycle: 周期部の記号列（空でない）。

  Returns:
    tuple: (前置部, 周期部) の標準形。
  """
  prefix, cycle = tuple(prefix), tuple(cycle)
  if not cycle:
    raise InputError('周期部が空の無限語は作れません')
  size = len(cycle)
  for period in range(1, size + 1):
    if size % period == 0 and cycle[:period] * (size // period) == cycle:
      cycle = cycle[:period]
      break
  while prefix and prefix[-1] == cycle[-1]:
    prefix = prefix[:-1]
    cycle = cycle[-1:] + cycle[:-1]
  return prefix, cycle


@dataclass(frozen=True)
class LassoWord:
  """
  最終的に周期的な無限語 prefix·cycle·cycle·… 。

  Attributes:
    prefix (Word): 前置部。
    cycle (Word): 周期部（空でない）。
  """
  prefix: Word
  cycle: Word

  @classmethod
  def canonical(cls, prefix: Sequence[int], cycle: Sequence[int]) -> 'LassoWord':
    return cls(*canonical_lasso(prefix, cycle))

  def letter(self, n: int) -> int:
    """n 番目（1始まり）の文字。"""
    if n <= len(self.prefix):
      return self.prefix[n - 1]
    return self.cycle[(n - 1 - len(self.prefix)) % len(self.cycle)]

  def unroll(self, n: int) -> Word:
    """先頭 n 文字を有限語として返す。"""
    return tuple(self.letter(i) for i in range(1, n + 1))

  def drop(self, k: int) -> 'LassoWord':
    """先頭 k 文字を取り除いた無限語。"""
    if k <= len(self.prefix):
      return LassoWord.canonical(self.prefix[k:], self.cycle)
    shift = (k - len(self.prefix)) % len(self.cycle)
    return LassoWord.canonical((), self.cycle[shift:] + self.cycle[:shift])

  def prepend(self, alpha: Sequence[int]) -> 'LassoWord':
    return LassoWord.canonical(tuple(alpha) + self.prefix, self.cycle)


@dataclass(frozen=True)
class GraphReport:
  """
  validate_graph の結果。

  Attributes:
    sinks (VertexSet): シンクの集合。
    left_resolving (bool): 各頂点への入辺のラベルが相異なるか。
    alphabet_surjective (bool): ラベル写像がアルファベット全体に全射か。
  """
  sinks: VertexSet
  left_resolving: bool
  alphabet_surjective: bool


class LabelledGraph:
  """
  有限の有向ラベル付きグラフ。

  頂点と文字は構築時に小さな整数IDへ置き換えられ、頂点集合はすべて
  ビットマスクとして扱う。構築後は不変。

  Attributes:
    vertices (tuple[str]): 宣言順の頂点名。
    letters (tuple[str]): 名前順に並べた文字名（アルファベット）。
    edges (tuple): (始点ID, 終点ID, 文字ID) の並び。
    digraph (nx.MultiDiGraph): 頂点IDを節点、辺の位置をキー、文字IDを label 属性とするグラフ。
    sinks (VertexSet): 出辺を持たない頂点の集合。
  """

  def __init__(self, vertices: Iterable, edges: Iterable[Sequence]):
    """
    頂点名と (src, dst, label) の並びからグラフを作る。

    Args:
      vertices: 頂点名の並び。
      edges: (始点名, 終点名, ラベル) の並び。

    Raises:
      InputError: 頂点名の重複、未知の端点、予約されたラベルなど。
    """
    self.vertices = tuple(str(v) for v in vertices)
    if not self.vertices:
      raise InputError('頂点が一つもありません')
    if len(set(self.vertices)) != len(self.vertices):
      raise InputError('頂点名が重複しています')
    for name in self.vertices:
      if any(ch in name for ch in RESERVED_CHARACTERS):
        raise InputError(f'reserved character in vertex {name!r}')
    self._vertex_ids = {name: index for index, name in enumerate(self.vertices)}

    raw_edges = []
    for position, edge in enumerate(edges):
      if len(edge) != 3:
        raise InputError(f'edges-{position}: 辺は (src, dst, label) の三つ組で指定してください')
      src, dst, label = (str(item) for item in edge)
      for end in (src, dst):
        if end not in self._vertex_ids:
          raise InputError(f'edges-{position}: unknown vertex {end!r}')
      if not label or label == EPSILON or any(ch in label for ch in RESERVED_CHARACTERS):
        raise InputError(f'edges-{position}: ラベル {label!r} は使えません')
      raw_edges.append((src, dst, label))

    # アルファベットはちょうど現れるラベルの集合（ラベル写像は全射）
    self.letters = tuple(sorted({label for _, _, label in raw_edges}))
    self._letter_ids = {name: index for index, name in enumerate(self.letters)}
    self.edges = tuple(
      (self._vertex_ids[src], self._vertex_ids[dst], self._letter_ids[label])
      for src, dst, label in raw_edges
    )

    self.digraph = nx.MultiDiGraph()
    self.digraph.add_nodes_from(range(len(self.vertices)))
    for position, (src, dst, letter) in enumerate(self.edges):
      self.digraph.add_edge(src, dst, key=position, label=letter)

    self.all_vertices: VertexSet = (1 << len(self.vertices)) - 1
    self.sinks: VertexSet = 0
    for v in self.digraph.nodes:
      if self.digraph.out_degree(v) == 0:
        self.sinks |= 1 << v

    # 一文字ぶんの相対値域表: _step[a][v] = r({v}, a)
    self._step = [[0] * len(self.vertices) for _ in self.letters]
    for src, dst, letter in self.edges:
      self._step[letter][src] |= 1 << dst
    self._range_cache: dict[tuple[VertexSet, int], VertexSet] = {}
    logger.debug(
      'labelled graph: %d vertices, %d edges, %d letters',
      len(self.vertices), len(self.edges), len(self.letters)
    )

  def __repr__(self):
    return f'LabelledGraph(vertices={list(self.vertices)}, letters={list(self.letters)})'

  # --- 名前とIDの変換 ---

  def vertex_id(self, name) -> int:
    try:
      return self._vertex_ids[str(name)]
    except KeyError:
      raise InputError(f'unknown vertex {str(name)!r}') from None

  def letter_id(self, name) -> int:
    try:
      return self._letter_ids[str(name)]
    except KeyError:
      raise InputError(f'unknown letter {str(name)!r}') from None

  def vset(self, *names) -> VertexSet:
    """頂点名から頂点集合（ビットマスク）を作る。"""
    mask = 0
    for name in names:
      mask |= 1 << self.vertex_id(name)
    return mask

  def word(self, text) -> Word:
    """
    語のテキストまたは文字名の並びから語を作る。

    Args:
      text: 'e'（空語）、'a.b' のような区切り表記、'ab' のような1文字ずつの表記、
        文字名の並び、または文字IDのタプル（そのまま検査して返す）。

    Returns:
      Word: 文字IDのタプル。

    Raises:
      InputError: 未知の文字が含まれる場合。
    """
    if isinstance(text, str):
      if text in ('', EPSILON):
        return EMPTY_WORD
      if text in self._letter_ids:
        return (self._letter_ids[text],)
      names = text.split('.') if '.' in text else list(text)
    elif all(isinstance(item, int) for item in text):
      self.check_word(text)
      return tuple(text)
    else:
      names = list(text)
    return tuple(self.letter_id(name) for name in names)

  def render_word(self, alpha: Sequence[int]) -> str:
    if not alpha:
      return EPSILON
    names = [self.letters[a] for a in alpha]
    if all(len(name) == 1 for name in self.letters):
      return ''.join(names)
    return '.'.join(names)

  def render_set(self, mask: VertexSet) -> str:
    return '{' + ','.join(self.vertices[v] for v in members(mask)) + '}'

  def set_key(self, mask: VertexSet) -> tuple[int, ...]:
    """出力の並び順に使うキー（頂点IDの昇順列）。"""
    return tuple(members(mask))

  # --- 相対値域 ---

  def check_word(self, alpha: Sequence[int]) -> None:
    for a in alpha:
      if not isinstance(a, int) or not 0 <= a < len(self.letters):
        raise InputError(f'unknown letter {a!r}')

  def step(self, vertices: VertexSet, letter: int) -> VertexSet:
    """一文字ぶんの相対値域 r(A, a)。"""
    key = (vertices, letter)
    cached = self._range_cache.get(key)
    if cached is None:
      cached = 0
      table = self._step[letter]
      for v in members(vertices):
        cached |= table[v]
      self._range_cache[key] = cached
    return cached

  def relative_range(self, vertices: VertexSet, alpha: Sequence[int]) -> VertexSet:
    """
    α の A に関する相対値域 r(A, α) を返す。

    Args:
      vertices (VertexSet): 始点の集合 A。
      alpha (Word): 語。空語なら A をそのまま返す。

    Returns:
      VertexSet: L(λ)=α かつ s(λ)∈A である道 λ の終点全体。

    Raises:
      InputError: アルファベットにない文字が含まれる場合。
    """
    self.check_word(alpha)
    result = vertices
    for letter in alpha:
      if not result:
        break
      result = self.step(result, letter)
    return result

  def range_of(self, alpha: Sequence[int]) -> VertexSet:
    """r(α) = r(E^0, α)。r(ε) = E^0。"""
    return self.relative_range(self.all_vertices, alpha)

  def is_labelled_path(self, alpha: Sequence[int]) -> bool:
    return self.range_of(alpha) != 0

  def letters_from(self, vertices: VertexSet) -> frozenset[int]:
    """L(AE^1) = { a | r(A, a) ≠ ∅ }"""
    return frozenset(a for a in range(len(self.letters)) if self.step(vertices, a))

  def labelled_paths_up_to(self, depth: int) -> set[Word]:
    """
    長さ depth 以下のラベル付き道（空語を含む）をすべて返す。

    Args:
      depth (int): 長さの上限（0以上）。

    Returns:
      set[Word]: r(α) ≠ ∅ となる語 α の集合。
    """
    if depth < 0:
      raise InputError('depth は0以上で指定してください')
    found = {EMPTY_WORD}
    frontier = {EMPTY_WORD: self.all_vertices}
    for _ in range(depth):
      next_frontier = {}
      for alpha, reached in frontier.items():
        for letter in self.letters_from(reached):
          next_frontier[alpha + (letter,)] = self.step(reached, letter)
      found.update(next_frontier)
      frontier = next_frontier
    return found

  def sorted_words(self, words: Iterable[Word]) -> list[Word]:
    """出力用に文字名の辞書式順で並べる。"""
    return sorted(words, key=lambda alpha: tuple(self.letters[a] for a in alpha))

  def validate(self) -> GraphReport:
    """
    グラフの性質をまとめて返す。

    Returns:
      GraphReport: シンク、左分解性、アルファベットの全射性。
    """
    left_resolving = True
    for v in self.digraph.nodes:
      labels = [letter for _, _, letter in self.digraph.in_edges(v, data='label')]
      if len(labels) != len(set(labels)):
        left_resolving = False
        break
    used = {letter for _, _, letter in self.edges}
    return GraphReport(
      sinks=self.sinks,
      left_resolving=left_resolving,
      alphabet_surjective=used == set(range(len(self.letters))),
    )


def validate_graph(graph: LabelledGraph) -> GraphReport:
  return graph.validate()
