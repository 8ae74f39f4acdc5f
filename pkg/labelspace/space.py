# space.py
# グラフと受容族から各層（逆半群、フィルター、切り貼り、亜群、代数）を組み立てる
import logging
from collections.abc import Iterable, Sequence
from functools import cached_property

from labelspace.boolean_family import AccommodatingFamily, build_family
from labelspace.exceptions import NotWeaklyLeftResolvingError
from labelspace.filters import TightSpectrum
from labelspace.graph_core import LabelledGraph
from labelspace.groupoid import BoundaryGroupoid
from labelspace.semigroup import InverseSemigroup
from labelspace.steinberg_algebra import SteinbergAlgebra
from labelspace.surgery import FilterSurgery

logger = logging.getLogger(__name__)


class LabelledSpace:
  """
  正規で弱左分解的なラベル付き空間 (E, L, B) と、その上の構成一式。

  各層は最初に使われたときに作られる。

  Attributes:
    graph (LabelledGraph): グラフ。
    family (AccommodatingFamily): 受容族。
  """

  def __init__(self, graph: LabelledGraph, family: AccommodatingFamily):
    if not family.check_weakly_left_resolving():
      raise NotWeaklyLeftResolvingError('the labelled space is not weakly left-resolving')
    self.graph = graph
    self.family = family

  @classmethod
  def from_graph(cls, graph: LabelledGraph, mode: str = 'minimal',
                 lists: Iterable[Sequence] | None = None) -> 'LabelledSpace':
    return cls(graph, build_family(graph, mode, lists))

  @classmethod
  def from_edges(cls, vertices: Iterable, edges: Iterable[Sequence], mode: str = 'minimal',
                 lists: Iterable[Sequence] | None = None) -> 'LabelledSpace':
    """頂点名と (src, dst, label) の並びから直接作る。"""
    return cls.from_graph(LabelledGraph(vertices, edges), mode, lists)

  @classmethod
  def from_document(cls, document, mode: str | None = None) -> 'LabelledSpace':
    """
    検査済みの GraphDocument から作る。

    mode が None なら、文書に family があれば 'file'、無ければ 'minimal'。
    """
    if mode is None:
      mode = 'file' if document.family is not None else 'minimal'
    logger.info('building labelled space (family=%s)', mode)
    return cls.from_graph(document.graph, mode, document.family)

  @cached_property
  def semigroup(self) -> InverseSemigroup:
    return InverseSemigroup(self.family)

  @cached_property
  def spectrum(self) -> TightSpectrum:
    return TightSpectrum(self.semigroup)

  @cached_property
  def surgery(self) -> FilterSurgery:
    return FilterSurgery(self.spectrum)

  @cached_property
  def groupoid(self) -> BoundaryGroupoid:
    return BoundaryGroupoid(self.surgery)

  @cached_property
  def algebra(self) -> SteinbergAlgebra:
    return SteinbergAlgebra(self.groupoid)
