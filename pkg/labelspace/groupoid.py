# groupoid.py
# 亜群 Γ、胚の同値と同型 Φ、円筒集合 Z とその計算
import logging
import math
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from labelspace.exceptions import DomainError, InputError
from labelspace.filters import TightFilter
from labelspace.graph_core import EMPTY_WORD, Word, is_beginning
from labelspace.semigroup import ZERO, SemigroupElement
from labelspace.surgery import FilterSurgery

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroupoidElement:
  """
  Γ の元 (η, m, ξ)。

  witness = (α, β) は η の語 = αγ、ξ の語 = βγ、H_[α]γ(η) = H_[β]γ(ξ) を満たす組で、
  比較には使わない。

  Attributes:
    eta (TightFilter): 値域側のフィルター。
    m (int): |α| − |β|。
    xi (TightFilter): 始域側のフィルター。
    witness (tuple[Word, Word]): 共通の末尾を示す組。
  """
  eta: TightFilter
  m: int
  xi: TightFilter
  witness: tuple[Word, Word] = field(default=(EMPTY_WORD, EMPTY_WORD), compare=False, hash=False)

  @property
  def is_unit(self) -> bool:
    return self.m == 0 and self.eta == self.xi


@dataclass(frozen=True)
class Germ:
  """
  胚 [s, ξ] の代表 (s, ξ)。ξ は s*s を含む。

  Attributes:
    s (SemigroupElement): 零でない三つ組。
    xi (TightFilter): タイトなフィルター。
  """
  s: SemigroupElement
  xi: TightFilter


@dataclass(frozen=True)
class Cylinder:
  """
  円筒集合 Z_{s,e:e1,…,en}。

  idempotent が None なら e = s*s。negatives が空なら Z_s。

  Attributes:
    triple (SemigroupElement): 零でない三つ組 (α, A, β)。
    negatives (tuple[SemigroupElement]): 除く冪等元 e1 … en。
    idempotent (SemigroupElement | None): 基本開集合の冪等元 e。
  """
  triple: SemigroupElement
  negatives: tuple[SemigroupElement, ...] = ()
  idempotent: SemigroupElement | None = None

  @property
  def is_plain(self) -> bool:
    return not self.negatives and self.idempotent is None


class BoundaryGroupoid:
  """
  境界道型の亜群 Γ と胚の亜群への同型 Φ。

  Attributes:
    surgery (FilterSurgery): 切り貼り写像。
    spectrum (TightSpectrum): タイトなフィルター。
    semigroup (InverseSemigroup): 逆半群。
  """

  def __init__(self, surgery: FilterSurgery):
    self.surgery = surgery
    self.spectrum = surgery.spectrum
    self.semigroup = surgery.spectrum.semigroup
    self.graph = surgery.graph

  # --- Γ の元 ---

  def witness_lengths(self, eta: TightFilter, m: int, xi: TightFilter) -> range | None:
    """|β| の候補の範囲。"""
    low = max(0, -m)
    if eta.is_finite and xi.is_finite:
      if len(eta.prefix) - len(xi.prefix) != m:
        return None
      return range(low, len(xi.prefix) + 1)
    if eta.is_finite or xi.is_finite:
      return None
    bound = max(low, len(eta.prefix) - m, len(xi.prefix)) + math.lcm(len(eta.cycle), len(xi.cycle))
    return range(low, bound + 1)

  def is_witness(self, eta: TightFilter, xi: TightFilter, witness: tuple[Word, Word]) -> bool:
    alpha, beta = witness
    if not (eta.has_beginning(alpha) and xi.has_beginning(beta)):
      return False
    surgery = self.surgery
    return surgery.H_cut_filter(alpha, eta) == surgery.H_cut_filter(beta, xi)

  def all_witnesses(self, eta: TightFilter, m: int, xi: TightFilter) -> Iterator[tuple[Word, Word]]:
    """探索範囲内の証拠を短い順に返す。"""
    candidates = self.witness_lengths(eta, m, xi)
    if candidates is None:
      return
    for k in candidates:
      witness = (eta.letters_upto(k + m), xi.letters_upto(k))
      if len(witness[0]) == k + m and len(witness[1]) == k and self.is_witness(eta, xi, witness):
        yield witness

  def find_witness(self, eta: TightFilter, m: int, xi: TightFilter) -> tuple[Word, Word] | None:
    """
    (η, m, ξ) ∈ Γ を示す最短の証拠 (α, β) を探す。

    有限型どうしでは m = |η の語| − |ξ の語| が必要。投げ縄どうしでは
    前置部の長さに周期の最小公倍数を足したところまで調べれば十分。

    Returns:
      tuple[Word, Word] | None: 証拠。Γ に属さなければ None。
    """
    return next(self.all_witnesses(eta, m, xi), None)

  def contains(self, eta: TightFilter, m: int, xi: TightFilter) -> bool:
    return self.find_witness(eta, m, xi) is not None

  def element(self, eta: TightFilter, m: int, xi: TightFilter) -> GroupoidElement:
    """
    Raises:
      DomainError: (η, m, ξ) が Γ に属さない場合。
    """
    witness = self.find_witness(eta, m, xi)
    if witness is None:
      raise DomainError('the triple is not an element of the groupoid')
    return GroupoidElement(eta, m, xi, witness)

  def unit(self, xi: TightFilter) -> GroupoidElement:
    return GroupoidElement(xi, 0, xi, (EMPTY_WORD, EMPTY_WORD))

  def inverse(self, x: GroupoidElement) -> GroupoidElement:
    alpha, beta = x.witness
    return GroupoidElement(x.xi, -x.m, x.eta, (beta, alpha))

  def compose(self, x: GroupoidElement, y: GroupoidElement) -> GroupoidElement:
    """
    (η, m, ξ)(ξ, n, ρ) = (η, m+n, ρ)。証拠は作り直す。

    Raises:
      DomainError: x.xi ≠ y.eta の場合。
    """
    if x.xi != y.eta:
      raise DomainError('the elements are not composable')
    return self.element(x.eta, x.m + y.m, y.xi)

  def compose_along(self, x: GroupoidElement, y: GroupoidElement) -> GroupoidElement:
    """与えられた証拠の末尾をそろえて積を作る（証拠の取り方によらないことの確認用）。"""
    if x.xi != y.eta:
      raise DomainError('the elements are not composable')
    alpha, beta = x.witness
    mu, nu = y.witness
    if len(beta) <= len(mu):
      witness = (alpha + mu[len(beta):], nu)
    else:
      witness = (alpha, nu + beta[len(mu):])
    return GroupoidElement(x.eta, x.m + y.m, y.xi, witness)

  def enumerate_elements(self, depth: int, max_length: int) -> list[GroupoidElement]:
    """
    enumerate_tight(depth) の各 ξ について、|α|, |β| ≤ max_length の証拠で
    得られる Γ の元をすべて返す。
    """
    graph, surgery = self.graph, self.surgery
    words = graph.sorted_words(graph.labelled_paths_up_to(max_length))
    found = {}
    for xi in self.spectrum.enumerate_tight(depth):
      for beta in words:
        if not xi.has_beginning(beta):
          continue
        tail = surgery.H_cut_filter(beta, xi)
        for alpha in words:
          if surgery.in_glue_domain(alpha, tail):
            eta = surgery.G_glue_filter(alpha, tail)
            element = GroupoidElement(eta, len(alpha) - len(beta), xi, (alpha, beta))
            found.setdefault(element, element)
    logger.debug('enumerated %d groupoid elements', len(found))
    return list(found.values())

  # --- 作用 θ と胚 ---

  def theta(self, t: SemigroupElement, xi: TightFilter) -> TightFilter:
    """
    θ_t(ξ) = G_{(β)α′}(H_{[γ]α′}(ξ))（t = (β, A, γ)）。

    Raises:
      DomainError: ξ が t*t を含まない場合。
    """
    if t.is_zero or not self.spectrum.contains(xi, self.semigroup.multiply(t.star(), t)):
      raise DomainError('the filter does not contain t*t')
    return self.surgery.G_glue_filter(t.alpha, self.surgery.H_cut_filter(t.beta, xi))

  def germ(self, s: SemigroupElement, xi: TightFilter) -> Germ:
    """
    Raises:
      InputError: s が零元の場合。
      DomainError: ξ が s*s を含まない場合。
    """
    if s.is_zero:
      raise InputError('胚には零でない三つ組が必要です')
    if not self.spectrum.contains(xi, self.semigroup.multiply(s.star(), s)):
      raise DomainError('the filter does not contain s*s')
    return Germ(s, xi)

  def germ_equivalent(self, first: Germ, second: Germ) -> bool:
    """
    [s, ξ] = [t, ξ] か。s = (μ,A,ν)、t = (β,B,γ) として、γ = νγ′ なら β = μγ′、
    ν = γν′ なら μ = βν′ のとき真。
    """
    if first.xi != second.xi:
      return False
    mu, nu = first.s.alpha, first.s.beta
    beta, gamma = second.s.alpha, second.s.beta
    if is_beginning(nu, gamma):
      return beta == mu + gamma[len(nu):]
    if is_beginning(gamma, nu):
      return mu == beta + nu[len(gamma):]
    return False

  def germ_product(self, first: Germ, second: Germ) -> Germ:
    """
    [s, θ_t(ξ)][t, ξ] = [st, ξ]。

    Raises:
      DomainError: first.xi ≠ θ_t(second.xi) の場合。
    """
    if first.xi != self.theta(second.s, second.xi):
      raise DomainError('the germs are not composable')
    product = self.semigroup.multiply(first.s, second.s)
    if product == ZERO:
      raise DomainError('the product of the germ triples is zero')
    return Germ(product, second.xi)

  def enumerate_germs(self, depth: int, max_length: int) -> list[Germ]:
    filters = self.spectrum.enumerate_tight(depth)
    germs = []
    for s in self.semigroup.enumerate_elements(max_length):
      source = self.semigroup.multiply(s.star(), s)
      germs.extend(Germ(s, xi) for xi in filters if self.spectrum.contains(xi, source))
    return germs

  def phi(self, germ: Germ) -> GroupoidElement:
    """Φ[t, ξ] = (θ_t(ξ), |β| − |γ|, ξ)。証拠は (β, γ)。"""
    t = germ.s
    return GroupoidElement(self.theta(t, germ.xi), t.cocycle, germ.xi, (t.alpha, t.beta))

  def preimage(self, x: GroupoidElement) -> Germ:
    """
    Φ の逆像となる胚。証拠 (β, γ) に対して t = (β, r(β) ∩ r(γ), γ)。

    γ = ε で ξ の語が空でなければ証拠を一文字ずらす。両方 ε なら
    t = (β, r(β) ∩ ξ のレベル0, ε)。
    """
    graph = self.graph
    beta, gamma = x.witness
    if not self.is_witness(x.eta, x.xi, x.witness):
      beta, gamma = self.find_witness(x.eta, x.m, x.xi) or (None, None)
      if beta is None:
        raise DomainError('the element has no witness')
    if not gamma and x.xi.reaches(1):
      first = (x.xi.letter(1),)
      beta, gamma = beta + first, first
    if gamma:
      t = SemigroupElement(beta, graph.range_of(beta) & graph.range_of(gamma), gamma)
    else:
      t = SemigroupElement(beta, graph.range_of(beta) & x.xi.root, EMPTY_WORD)
    return self.germ(t, x.xi)

  # --- σ による記述 ---

  def renault_deaconu_member(self, eta: TightFilter, m: int, xi: TightFilter, p: int, q: int) -> bool:
    """p − q = m かつ σ^p(η) = σ^q(ξ) か。"""
    if p - q != m or not (eta.reaches(p) and xi.reaches(q)):
      return False
    surgery = self.surgery
    return surgery.sigma_power(eta, p) == surgery.sigma_power(xi, q)

  # --- 円筒集合 ---

  def cylinder(self, triple: SemigroupElement, negatives: Iterable[SemigroupElement] = (),
               idempotent: SemigroupElement | None = None) -> Cylinder:
    """
    Raises:
      InputError: 三つ組が零、または冪等でない元が与えられた場合。
    """
    negatives = tuple(negatives)
    if triple.is_zero:
      raise InputError('円筒集合には零でない三つ組が必要です')
    for e in negatives + ((idempotent,) if idempotent is not None else ()):
      if e.is_zero or not e.is_idempotent:
        raise InputError('円筒集合の冪等元に冪等でない元が含まれています')
    return Cylinder(triple, negatives, idempotent)

  def cylinder_member(self, cylinder: Cylinder, x: GroupoidElement) -> bool:
    """
    x ∈ Z_{s,e:e1..en}：ξ ∈ V_{e:e1..en}、ξ ∋ s*s、H_[α](η) = H_[β](ξ)。
    """
    s = cylinder.triple
    if x.m != s.cocycle:
      return False
    if not (x.eta.has_beginning(s.alpha) and x.xi.has_beginning(s.beta)):
      return False
    spectrum = self.spectrum
    source = self.semigroup.multiply(s.star(), s)
    if not spectrum.contains(x.xi, source):
      return False
    if not spectrum.in_basic_open(x.xi, cylinder.idempotent or source, cylinder.negatives):
      return False
    surgery = self.surgery
    return surgery.H_cut_filter(s.alpha, x.eta) == surgery.H_cut_filter(s.beta, x.xi)

  def fibre_product_member(self, cylinder: Cylinder, x: GroupoidElement) -> bool:
    """
    σ による記述：η ∈ V_{ss*:se_is*}、ξ ∈ V_{e:e_i}、σ^|α|(η) = σ^|β|(ξ)。
    """
    s = cylinder.triple
    semigroup, spectrum = self.semigroup, self.spectrum
    source = semigroup.multiply(s.star(), s)
    target = semigroup.multiply(s, s.star())
    moved = [semigroup.product(s, e, s.star()) for e in cylinder.negatives]
    moved = [e for e in moved if not e.is_zero]
    if x.m != s.cocycle:
      return False
    if not spectrum.in_basic_open(x.eta, target, moved):
      return False
    if not spectrum.in_basic_open(x.xi, source, ()):
      return False
    if not spectrum.in_basic_open(x.xi, cylinder.idempotent or source, cylinder.negatives):
      return False
    return self.renault_deaconu_member(x.eta, x.m, x.xi, len(s.alpha), len(s.beta))

  def _compare(self, shallow: SemigroupElement, deep: SemigroupElement) -> Word | None:
    """deep = (αδ, ·, βδ) となる δ。そうでなければ None。"""
    if not (is_beginning(shallow.alpha, deep.alpha) and is_beginning(shallow.beta, deep.beta)):
      return None
    delta = deep.alpha[len(shallow.alpha):]
    return delta if deep.beta[len(shallow.beta):] == delta else None

  def intersect_cylinders(self, first: Cylinder, second: Cylinder) -> Cylinder | None:
    """
    Z_(α,A,β) ∩ Z_(μ,B,ν)：

      μ = αδ、ν = βδ なら Z_(μ, r(A,δ) ∩ B, ν)
      α = μδ、β = νδ なら Z_(α, A ∩ r(B,δ), β)
      それ以外は空（None）

    Raises:
      InputError: 除く冪等元などを持つ円筒集合が与えられた場合。
    """
    if not (first.is_plain and second.is_plain):
      raise InputError('intersect_cylinders は除く冪等元の無い円筒集合にしか使えません')
    graph = self.graph
    s, t = first.triple, second.triple
    delta = self._compare(s, t)
    if delta is not None:
      vertices = graph.relative_range(s.vertices, delta) & t.vertices
      result = SemigroupElement(t.alpha, vertices, t.beta)
    else:
      delta = self._compare(t, s)
      if delta is None:
        return None
      vertices = s.vertices & graph.relative_range(t.vertices, delta)
      result = SemigroupElement(s.alpha, vertices, s.beta)
    return Cylinder(result) if vertices else None

  def _shrink(self, deep: SemigroupElement, shallow: SemigroupElement, delta: Word) -> SemigroupElement:
    vertices = deep.vertices & ~self.graph.relative_range(shallow.vertices, delta)
    return SemigroupElement(deep.alpha, vertices, deep.beta)

  def disjointify(self, cylinders: Iterable[Cylinder]) -> list[Cylinder]:
    """
    和集合を変えずに互いに素な円筒集合へ直す。

    一つずつ加え、既にある各円筒集合と比べて深い方を B \\ r(A,δ) に縮める。
    空になったものは捨てる。
    """
    result: list[SemigroupElement] = []
    for cylinder in cylinders:
      if not cylinder.is_plain:
        raise InputError('disjointify は除く冪等元の無い円筒集合にしか使えません')
      current = cylinder.triple
      for index, existing in enumerate(result):
        if current.is_zero:
          break
        delta = self._compare(existing, current)
        if delta is not None:
          current = self._shrink(current, existing, delta)
          continue
        delta = self._compare(current, existing)
        if delta is not None:
          result[index] = self._shrink(existing, current, delta)
      result = [triple for triple in result if not triple.is_zero]
      if not current.is_zero:
        result.append(current)
    return [Cylinder(triple) for triple in result]

  def fibre(self, cylinder: Cylinder, points: Iterable[GroupoidElement]) -> list[GroupoidElement]:
    return [x for x in points if self.cylinder_member(cylinder, x)]
