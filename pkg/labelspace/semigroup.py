# semigroup.py
# ラベル付き空間の逆半群 S：積、対合、冪等元、自然順序
import logging
from collections.abc import Iterator
from dataclasses import dataclass

from labelspace.boolean_family import AccommodatingFamily
from labelspace.exceptions import InputError
from labelspace.graph_core import EMPTY_WORD, VertexSet, Word, is_beginning, is_subset

logger = logging.getLogger(__name__)


@dataclass(frozen=True, order=True)
class SemigroupElement:
  """
  逆半群の元 (α, A, β)。零元は集合が ∅ の三つ組 ((), 0, ()) で表す。

  Attributes:
    alpha (Word): 左の語。
    vertices (VertexSet): 集合 A。
    beta (Word): 右の語。
  """
  alpha: Word
  vertices: VertexSet
  beta: Word

  @property
  def is_zero(self) -> bool:
    return self.vertices == 0

  @property
  def is_idempotent(self) -> bool:
    return self.is_zero or self.alpha == self.beta

  @property
  def cocycle(self) -> int:
    """|α| − |β|"""
    return len(self.alpha) - len(self.beta)

  def star(self) -> 'SemigroupElement':
    if self.is_zero:
      return self
    return SemigroupElement(self.beta, self.vertices, self.alpha)


ZERO = SemigroupElement(EMPTY_WORD, 0, EMPTY_WORD)


class InverseSemigroup:
  """
  三つ組 (α, A, β)（A ≠ ∅、A ∈ B_α ∩ B_β）と零元からなる逆半群。

  S 全体は作らず、元は必要なときに検査付きで作る。

  Attributes:
    family (AccommodatingFamily): 受容族 B。
    graph (LabelledGraph): B のグラフ。
  """

  def __init__(self, family: AccommodatingFamily):
    self.family = family
    self.graph = family.graph

  def element(self, alpha, vertices: VertexSet, beta) -> SemigroupElement:
    """
    検査付きで三つ組を作る。

    Args:
      alpha: 左の語（Word または語のテキスト）。
      vertices (VertexSet): 空でない集合 A。
      beta: 右の語。

    Returns:
      SemigroupElement: 有効な三つ組。

    Raises:
      InputError: A = ∅、A ∉ B、または A ⊄ r(α) ∩ r(β) の場合。
    """
    graph = self.graph
    alpha, beta = graph.word(alpha), graph.word(beta)
    shown = f'({graph.render_word(alpha)},{graph.render_set(vertices)},{graph.render_word(beta)})'
    if not vertices:
      raise InputError(f'{shown}: 集合が空の三つ組は使えません（零元は 0 と書きます）')
    if vertices not in self.family:
      raise InputError(f'{shown}: {graph.render_set(vertices)} is not a member of the family')
    if not is_subset(vertices, graph.range_of(alpha) & graph.range_of(beta)):
      raise InputError(f'{shown}: 集合が r(α) ∩ r(β) に含まれていません')
    return SemigroupElement(alpha, vertices, beta)

  def idempotent(self, alpha, vertices: VertexSet) -> SemigroupElement:
    return self.element(alpha, vertices, alpha)

  def multiply(self, s: SemigroupElement, t: SemigroupElement) -> SemigroupElement:
    """
    積 s·t。s = (α,A,β)、t = (γ,B,δ) として

      γ = βγ′ なら (αγ′, r(A,γ′) ∩ B, δ)
      β = γβ′ なら (α, A ∩ r(B,β′), δβ′)
      それ以外は 0

    集合が ∅ になれば零元を返す。
    """
    if s.is_zero or t.is_zero:
      return ZERO
    graph = self.graph
    if is_beginning(s.beta, t.alpha):
      tail = t.alpha[len(s.beta):]
      result = SemigroupElement(
        s.alpha + tail, graph.relative_range(s.vertices, tail) & t.vertices, t.beta
      )
    elif is_beginning(t.alpha, s.beta):
      tail = s.beta[len(t.alpha):]
      result = SemigroupElement(
        s.alpha, s.vertices & graph.relative_range(t.vertices, tail), t.beta + tail
      )
    else:
      return ZERO
    return result if result.vertices else ZERO

  def star(self, s: SemigroupElement) -> SemigroupElement:
    return s.star()

  def product(self, *elements: SemigroupElement) -> SemigroupElement:
    result = elements[0]
    for element in elements[1:]:
      result = self.multiply(result, element)
    return result

  def natural_leq(self, p: SemigroupElement, q: SemigroupElement) -> bool:
    """
    冪等元の自然順序 p ≤ q。

    p = (α,A,α)、q = (β,B,β) のとき、α = βα′ かつ A ⊆ r(B,α′) で真。

    Raises:
      InputError: 冪等でない元が与えられた場合。
    """
    for element in (p, q):
      if not element.is_idempotent:
        raise InputError('natural_leq は冪等元どうしにしか使えません')
    if p.is_zero:
      return True
    if q.is_zero:
      return False
    if not is_beginning(q.alpha, p.alpha):
      return False
    tail = p.alpha[len(q.alpha):]
    return is_subset(p.vertices, self.graph.relative_range(q.vertices, tail))

  def enumerate_elements(self, max_length: int) -> list[SemigroupElement]:
    """
    |α|, |β| ≤ max_length の有効な三つ組をすべて返す（零元は含まない）。
    """
    return list(self._iter_elements(max_length, idempotent_only=False))

  def enumerate_idempotents(self, max_length: int) -> list[SemigroupElement]:
    return list(self._iter_elements(max_length, idempotent_only=True))

  def _iter_elements(self, max_length: int, idempotent_only: bool) -> Iterator[SemigroupElement]:
    graph = self.graph
    words = graph.sorted_words(graph.labelled_paths_up_to(max_length))
    nonempty = [member for member in self.family.sorted_sets() if member]
    count = 0
    for alpha in words:
      for beta in ([alpha] if idempotent_only else words):
        top = graph.range_of(alpha) & graph.range_of(beta)
        for member in nonempty:
          if is_subset(member, top):
            count += 1
            yield SemigroupElement(alpha, member, beta)
    logger.debug('enumerated %d semigroup elements (length <= %d)', count, max_length)
