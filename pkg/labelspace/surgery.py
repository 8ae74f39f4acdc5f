# surgery.py
# 超フィルターとタイトなフィルターの切り貼り f、g、h、G、H とシフト σ
import logging
from dataclasses import dataclass

from labelspace.exceptions import DomainError, InputError
from labelspace.filters import (
  TightFilter, TightSpectrum, finite_tight_filter, lasso_tight_filter
)
from labelspace.graph_core import VertexSet, Word, is_beginning, is_subset

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class UltrafilterRef:
  """
  B_context の超フィルター。最小元の原子で表す。

  Attributes:
    context (Word): 語。
    atom (VertexSet): B_context の原子。
  """
  context: Word
  atom: VertexSet


class FilterSurgery:
  """
  語を先頭に貼る・先頭から切る操作。

  すべての写像は主フィルターの最小元の上で計算する。結果の投げ縄は毎回
  標準形に直すので、フィルターの比較は構造的な等価性で済む。
  """

  def __init__(self, spectrum: TightSpectrum):
    self.spectrum = spectrum
    self.family = spectrum.family
    self.graph = spectrum.graph

  def ultrafilter(self, context, atom: VertexSet) -> UltrafilterRef:
    """
    Raises:
      InputError: atom が B_context の原子でない場合。
    """
    graph = self.graph
    context = graph.word(context)
    if atom not in self.family.restrict(context).atoms:
      raise InputError(
        f'{graph.render_set(atom)} is not an atom of B_{graph.render_word(context)}'
      )
    return UltrafilterRef(context, atom)

  def ultrafilter_at(self, xi: TightFilter, n: int) -> UltrafilterRef:
    """ξ のレベル n の超フィルター。"""
    return UltrafilterRef(xi.letters_upto(n), xi.atom_at(n))

  # --- 超フィルター ---

  def f_cut_end(self, ultrafilter: UltrafilterRef, split: int) -> UltrafilterRef | None:
    """
    f_{α[β]}：αβ 上の超フィルターから末尾の β を切り、α 上の超フィルターにする。

    Args:
      ultrafilter (UltrafilterRef): 文脈 αβ の超フィルター。
      split (int): |α|。

    Returns:
      UltrafilterRef | None: 最小元 ∩{A ∈ B_α | r(A,β) ⊇ F の原子}。
        該当する A が無いとき（α = ε に限る）は空フィルターとして None。

    Raises:
      DomainError: split が語の長さの範囲外の場合。
    """
    context = ultrafilter.context
    if not 0 <= split <= len(context):
      raise DomainError(f'split {split} is out of range for a word of length {len(context)}')
    alpha, beta = context[:split], context[split:]
    minimum = self.family.preimage_minimum(self.graph.range_of(alpha), beta, ultrafilter.atom)
    if minimum is None:
      return None
    return UltrafilterRef(alpha, minimum)

  def g_glue(self, alpha, ultrafilter: UltrafilterRef) -> UltrafilterRef:
    """
    g_{(α)β}：先頭に α を貼る。最小元は F の原子 ∩ r(αβ)。

    Raises:
      DomainError: F の原子が r(αβ) に含まれない場合。
    """
    graph = self.graph
    glued = graph.word(alpha) + ultrafilter.context
    bound = graph.range_of(glued)
    if not is_subset(ultrafilter.atom, bound):
      raise DomainError(
        f'{graph.render_set(ultrafilter.atom)} is not contained in r({graph.render_word(glued)})'
      )
    return UltrafilterRef(glued, ultrafilter.atom & bound)

  def h_cut(self, alpha, ultrafilter: UltrafilterRef) -> UltrafilterRef:
    """
    h_{[α]β}：先頭の α を切り、B_β での上方閉包を取る。

    Raises:
      DomainError: α が文脈の先頭部分でない場合。
    """
    graph = self.graph
    alpha = graph.word(alpha)
    if not is_beginning(alpha, ultrafilter.context):
      raise DomainError(
        f'{graph.render_word(alpha)} is not a beginning of {graph.render_word(ultrafilter.context)}'
      )
    beta = ultrafilter.context[len(alpha):]
    return UltrafilterRef(beta, self._upward_minimum(beta, ultrafilter.atom))

  def _upward_minimum(self, beta: Word, atom: VertexSet) -> VertexSet:
    minimum = self.family.smallest_containing(self.graph.range_of(beta), atom)
    if minimum is None:
      raise DomainError(f'{self.graph.render_set(atom)} has no upper bound in B_{self.graph.render_word(beta)}')
    return minimum

  # --- タイトなフィルター ---

  def in_glue_domain(self, alpha, xi: TightFilter) -> bool:
    """ξ ∈ T_(α)β：レベル0が空でなく、その原子が r(α) に含まれる。"""
    alpha = self.graph.word(alpha)
    if not alpha:
      return True
    return xi.root != 0 and is_subset(xi.root, self.graph.range_of(alpha))

  def G_glue_filter(self, alpha, xi: TightFilter) -> TightFilter:
    """
    G_{(α)β}：ξ^β の先頭に α を貼ったタイトなフィルター ξ^{αβ}。

    レベル |α|+n は g で、レベル |α| 以下は完全性の式で下から埋める。
    α = ε のときは恒等写像。

    Raises:
      DomainError: ξ が T_(α)β に属さない場合。
    """
    graph, spectrum = self.graph, self.spectrum
    alpha = graph.word(alpha)
    if not alpha:
      return xi
    if not self.in_glue_domain(alpha, xi):
      raise DomainError(f'the filter is not in the gluing domain of {graph.render_word(alpha)}')

    if xi.is_finite and not xi.prefix:
      top = self.g_glue(alpha, UltrafilterRef((), xi.root)).atom
      minima = spectrum.complete_downward(alpha, top)
      return finite_tight_filter(minima[0], zip(alpha, minima[1:]))

    count = len(xi.prefix) + len(xi.cycle)
    glued = []
    for n in range(1, count + 1):
      letter, atom = xi.symbol(n)
      level = self.g_glue(alpha, UltrafilterRef(xi.letters_upto(n), atom))
      glued.append((letter, level.atom))
    first_letter, first_atom = glued[0]
    minima = spectrum.complete_downward(alpha + (first_letter,), first_atom)
    head = tuple(zip(alpha, minima[1:len(alpha) + 1]))
    if xi.is_finite:
      return finite_tight_filter(minima[0], head + tuple(glued))
    return lasso_tight_filter(
      minima[0], head + tuple(glued[:len(xi.prefix)]), glued[len(xi.prefix):]
    )

  def H_cut_filter(self, alpha, xi: TightFilter) -> TightFilter:
    """
    H_{[α]β}：ξ^{αβ} から先頭の α を切る。η_n = h(ξ_{n+|α|})。

    α = ε のときは恒等写像。

    Raises:
      DomainError: α が ξ の語の先頭部分でない場合。
    """
    graph = self.graph
    alpha = graph.word(alpha)
    if not alpha:
      return xi
    if not xi.has_beginning(alpha):
      raise DomainError(f'{graph.render_word(alpha)} is not a beginning of the filter word')
    k = len(alpha)
    if xi.is_finite:
      count = len(xi.prefix) - k
    else:
      head = max(len(xi.prefix) - k, 0)
      count = head + len(xi.cycle)
    letters = tuple(xi.letter(n + k) for n in range(1, count + 1))
    levels = [self._upward_minimum(letters[:n], xi.atom_at(n + k)) for n in range(count + 1)]
    symbols = tuple(zip(letters, levels[1:]))
    if xi.is_finite:
      return finite_tight_filter(levels[0], symbols)
    return lasso_tight_filter(levels[0], symbols[:head], symbols[head:])

  def sigma(self, xi: TightFilter) -> TightFilter:
    """
    シフト σ(ξ^{aγ}) = H_{[a]γ}(ξ)。

    Raises:
      DomainError: 語が ε の場合。
    """
    if xi.is_finite and not xi.prefix:
      raise DomainError('σ is not defined on a filter with the empty word')
    return self.H_cut_filter((xi.letter(1),), xi)

  def sigma_power(self, xi: TightFilter, k: int) -> TightFilter:
    for _ in range(k):
      xi = self.sigma(xi)
    return xi
