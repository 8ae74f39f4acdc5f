# boolean_family.py
# 受容族 B の閉包構成、制限 B_α、原子（有限版のストーン双対）
import logging
from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from functools import cached_property, reduce

from labelspace.exceptions import InputError
from labelspace.graph_core import LabelledGraph, VertexSet, Word, is_subset

logger = logging.getLogger(__name__)

FAMILY_MODES = ('minimal', 'powerset', 'file')


class AccommodatingFamily:
  """
  ラベル付きグラフ上の正規な受容族 B。

  有限の ∩、∪、相対補集合、各文字の相対値域で閉じ、すべての r(a) を含む。
  ∅ は常に要素。構築後は不変。

  Attributes:
    graph (LabelledGraph): 元のグラフ。
    sets (frozenset[VertexSet]): 族の要素（ビットマスク）。
    mode (str): 'minimal'、'powerset'、'file' のいずれか。
  """

  def __init__(self, graph: LabelledGraph, sets: Iterable[VertexSet], mode: str = 'minimal'):
    self.graph = graph
    self.sets = frozenset(sets) | {0}
    self.mode = mode
    logger.debug('accommodating family (%s): %d sets', mode, len(self.sets))

  def __repr__(self):
    return f'AccommodatingFamily(mode={self.mode!r}, size={len(self.sets)})'

  def __contains__(self, mask: VertexSet) -> bool:
    return mask in self.sets

  def __iter__(self):
    return iter(self.sorted_sets())

  def __len__(self):
    return len(self.sets)

  # --- 構成 ---

  @classmethod
  def build_minimal(cls, graph: LabelledGraph) -> 'AccommodatingFamily':
    """
    {r(a)} ∪ {∅} から始めて閉包を取り、最小の正規な受容族を作る。

    Args:
      graph (LabelledGraph): 対象のグラフ。

    Returns:
      AccommodatingFamily: 最小不動点。
    """
    seeds = {graph.range_of((a,)) for a in range(len(graph.letters))}
    return cls(graph, _close(graph, seeds), mode='minimal')

  @classmethod
  def build_powerset(cls, graph: LabelledGraph) -> 'AccommodatingFamily':
    """冪集合 P(E^0) 全体を族とする（照合用）。"""
    return cls(graph, range(graph.all_vertices + 1), mode='powerset')

  @classmethod
  def from_vertex_lists(cls, graph: LabelledGraph, lists: Iterable[Sequence]) -> 'AccommodatingFamily':
    """
    利用者が与えた頂点名リストの並びから族を作り、閉包性を検査する。

    Args:
      graph (LabelledGraph): 対象のグラフ。
      lists: 頂点名のリストの並び。

    Returns:
      AccommodatingFamily: 検査に通った族。

    Raises:
      InputError: 未知の頂点、または閉じていない場合。メッセージに違反した集合や文字を含む。
    """
    sets = {0}
    for position, names in enumerate(lists):
      try:
        sets.add(graph.vset(*names))
      except InputError as error:
        raise InputError(f'family-{position}: {error}') from None
    family = cls(graph, sets, mode='file')
    problems = family.closure_violations()
    if problems:
      logger.warning('rejected family: %s', problems[0])
      raise InputError('family is not closed: ' + '; '.join(problems[:5]))
    return family

  def closure_violations(self) -> list[str]:
    """閉包性に反する箇所を人が読める形で列挙する。"""
    graph = self.graph
    show = graph.render_set
    problems = []
    for a, name in enumerate(graph.letters):
      if graph.range_of((a,)) not in self.sets:
        problems.append(f'r({name}) = {show(graph.range_of((a,)))} is missing')
    ordered = self.sorted_sets()
    for first in ordered:
      for a, name in enumerate(graph.letters):
        image = graph.step(first, a)
        if image not in self.sets:
          problems.append(f'r({show(first)},{name}) = {show(image)} is missing')
      for second in ordered:
        for symbol, value in (('∩', first & second), ('∪', first | second), ('\\', first & ~second)):
          if value not in self.sets:
            problems.append(f'{show(first)}{symbol}{show(second)} = {show(value)} is missing')
    return problems

  # --- 問い合わせ ---

  def sorted_sets(self) -> list[VertexSet]:
    return sorted(self.sets, key=self.graph.set_key)

  @cached_property
  def atoms(self) -> tuple[VertexSet, ...]:
    """B の原子（極小の空でない要素）。互いに素で、出力順に並ぶ。"""
    nonempty = [mask for mask in self.sets if mask]
    found = [
      mask for mask in nonempty
      if not any(other != mask and is_subset(other, mask) for other in nonempty)
    ]
    return tuple(sorted(found, key=self.graph.set_key))

  def atoms_within(self, mask: VertexSet) -> tuple[VertexSet, ...]:
    """mask に含まれる B の原子。"""
    return tuple(atom for atom in self.atoms if is_subset(atom, mask))

  def is_atom(self, mask: VertexSet) -> bool:
    return mask in self.atoms

  def members_within(self, mask: VertexSet) -> list[VertexSet]:
    return [member for member in self.sorted_sets() if is_subset(member, mask)]

  def meet(self, candidates: Iterable[VertexSet]) -> VertexSet | None:
    """要素の共通部分。候補が無ければ None。"""
    candidates = list(candidates)
    if not candidates:
      return None
    return reduce(lambda x, y: x & y, candidates)

  def preimage_minimum(self, context: VertexSet, alpha: Word, target: VertexSet) -> VertexSet | None:
    """
    ∩{A ∈ B, A ⊆ context | r(A, α) ⊇ target} を返す。

    Args:
      context (VertexSet): 制限の上限 r(…)。
      alpha (Word): 相対値域を取る語。
      target (VertexSet): 含むべき集合。

    Returns:
      VertexSet | None: 最小元。条件を満たす要素が無ければ None。
    """
    graph = self.graph
    return self.meet(
      member for member in self.sets
      if is_subset(member, context) and is_subset(target, graph.relative_range(member, alpha))
    )

  def smallest_containing(self, context: VertexSet, target: VertexSet) -> VertexSet | None:
    """∩{C ∈ B, C ⊆ context | C ⊇ target}"""
    return self.meet(
      member for member in self.sets
      if is_subset(member, context) and is_subset(target, member)
    )

  def restrict(self, alpha: Word) -> 'RestrictedAlgebra':
    """
    B_α = B ∩ P(r(α)) を返す。α = ε のときは B 全体。

    Args:
      alpha (Word): ラベル付き道または空語。

    Returns:
      RestrictedAlgebra: 制限された代数。r(α) = ∅ のときは {∅} のみ（警告を出す）。
    """
    top = self.graph.range_of(alpha)
    if not top:
      logger.warning('restriction to %s is degenerate: r(α) = ∅', self.graph.render_word(alpha))
    return RestrictedAlgebra(self, tuple(alpha), top)

  def check_weakly_left_resolving(self) -> bool:
    """
    すべての A, B ∈ B と文字 a について r(A∩B, a) = r(A,a) ∩ r(B,a) かを調べる。
    """
    graph = self.graph
    ordered = self.sorted_sets()
    for index, first in enumerate(ordered):
      for second in ordered[index + 1:]:
        for a in range(len(graph.letters)):
          if graph.step(first & second, a) != graph.step(first, a) & graph.step(second, a):
            logger.debug(
              'not weakly left-resolving at %s, %s, %s',
              graph.render_set(first), graph.render_set(second), graph.letters[a]
            )
            return False
    return True


@dataclass(frozen=True)
class RestrictedAlgebra:
  """
  制限 B_α。α ≠ ε なら最大元 r(α) の有限ブール代数、α = ε なら B そのもの。

  Attributes:
    family (AccommodatingFamily): 元の族。
    context (Word): 語 α。
    top (VertexSet): r(α)。
  """
  family: AccommodatingFamily
  context: Word
  top: VertexSet

  @property
  def carrier(self) -> list[VertexSet]:
    return self.family.members_within(self.top)

  def __contains__(self, mask: VertexSet) -> bool:
    return mask in self.family.sets and is_subset(mask, self.top)

  @property
  def atoms(self) -> tuple[VertexSet, ...]:
    return self.family.atoms_within(self.top)

  def atoms_below(self, mask: VertexSet) -> tuple[VertexSet, ...]:
    """
    mask 以下の原子を返す。互いに素で、和集合は mask に等しい。

    Raises:
      InputError: mask が台集合に含まれない場合。
    """
    if mask not in self:
      graph = self.family.graph
      raise InputError(
        f'{graph.render_set(mask)} is not a member of B_{graph.render_word(self.context)}'
      )
    return self.family.atoms_within(mask)

  def ultrafilter_minima(self) -> tuple[VertexSet, ...]:
    """超フィルターは原子 C による主フィルター ↑C と一対一に対応する。"""
    return self.atoms


def _close(graph: LabelledGraph, seeds: Iterable[VertexSet]) -> set[VertexSet]:
  """∩、∪、相対補集合、一文字の相対値域についての閉包。"""
  closed = {0} | set(seeds)
  pending = list(closed)
  while pending:
    current = pending.pop()
    produced = [graph.step(current, a) for a in range(len(graph.letters))]
    for other in list(closed):
      produced.extend((current & other, current | other, current & ~other, other & ~current))
    for mask in produced:
      if mask not in closed:
        closed.add(mask)
        pending.append(mask)
  return closed


def build_family(graph: LabelledGraph, mode: str = 'minimal', lists: Iterable[Sequence] | None = None) -> AccommodatingFamily:
  """
  モード名から族を作る。

  Args:
    graph (LabelledGraph): 対象のグラフ。
    mode (str): 'minimal'、'powerset'、'file'。
    lists: 'file' のときに使う頂点名リストの並び。

  Raises:
    InputError: 未知のモード、または 'file' なのに族が与えられていない場合。
  """
  if mode == 'minimal':
    return AccommodatingFamily.build_minimal(graph)
  if mode == 'powerset':
    return AccommodatingFamily.build_powerset(graph)
  if mode == 'file':
    if lists is None:
      raise InputError('family: --family file を指定しましたが文書に family がありません')
    return AccommodatingFamily.from_vertex_lists(graph, lists)
  raise InputError(f'unknown family mode {mode!r} (choose from {", ".join(FAMILY_MODES)})')


__all__ = ['AccommodatingFamily', 'RestrictedAlgebra', 'build_family', 'FAMILY_MODES']
