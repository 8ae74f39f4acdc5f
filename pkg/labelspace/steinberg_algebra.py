# steinberg_algebra.py
# 円筒集合の指示関数の有理係数の和：畳み込み、正規形、関係式の検証
import logging
import math
from collections import defaultdict
from collections.abc import Iterable
from dataclasses import dataclass, field
from fractions import Fraction

from labelspace.exceptions import InputError
from labelspace.groupoid import BoundaryGroupoid, Cylinder, GroupoidElement
from labelspace.graph_core import EMPTY_WORD, VertexSet, is_subset
from labelspace.semigroup import SemigroupElement

logger = logging.getLogger(__name__)

RELATION_NAMES = ('i', 'ii', 'iii', 'iv')


class AlgebraElement(dict):
  """
  キー -> Fraction の辞書で、係数0のキーは持たない。

  代数の元としてはキーが零でない三つ組 (α, A, β) で、値 Σ c·χ_{Z_(α,A,β)} を表す。
  正規形ではキーに ('cylinder', 三つ組) や ('point', 三つ組) を使う。
  """

  def __init__(self, data=()):
    super().__init__()
    self.__iadd__(data)

  def __getitem__(self, key):
    return self.get(key, Fraction(0))

  def __iadd__(self, other):
    if isinstance(other, dict):
      other = other.items()
    for key, value in other:
      if value == 0:
        continue
      if not isinstance(value, Fraction):
        value = Fraction(value)
      total = self.get(key, 0) + value
      if total == 0:
        del self[key]
      else:
        self[key] = total
    return self

  def __add__(self, other):
    result = AlgebraElement(self)
    result += other
    return result

  def __neg__(self):
    return AlgebraElement((key, -value) for key, value in self.items())

  def __sub__(self, other):
    return self + (-AlgebraElement(other))

  def __mul__(self, scalar):
    if scalar == 0:
      return AlgebraElement()
    return AlgebraElement((key, value * scalar) for key, value in self.items())

  def __rmul__(self, scalar):
    return self.__mul__(scalar)


@dataclass(frozen=True)
class Expansion:
  """
  Z_(α,A,β) の一段の分割。

  Attributes:
    leaves (tuple[SemigroupElement]): (α, C, β)。有限型のフィルター (β, C) の上の一点を表す。
    children (tuple[SemigroupElement]): (αa, r(A,a), βa)。
  """
  leaves: tuple[SemigroupElement, ...]
  children: tuple[SemigroupElement, ...]


@dataclass
class RelationReport:
  """
  関係式 (i)〜(iv) の検査結果。

  Attributes:
    checked (dict[str, int]): 関係式ごとの検査件数。
    failures (dict[str, list[str]]): 関係式ごとの反例。
  """
  checked: dict[str, int] = field(default_factory=lambda: {name: 0 for name in RELATION_NAMES})
  failures: dict[str, list[str]] = field(default_factory=lambda: {name: [] for name in RELATION_NAMES})

  @property
  def ok(self) -> bool:
    return not any(self.failures.values())

  def record(self, name: str, passed: bool, instance: str) -> None:
    self.checked[name] += 1
    if not passed:
      self.failures[name].append(instance)

  def summary_line(self) -> str:
    states = [f'{name} {"FAIL" if self.failures[name] else "OK"}' for name in RELATION_NAMES]
    return 'relations: ' + ', '.join(states)


class SteinbergAlgebra:
  """
  Γ 上のコンパクト台の有理係数関数のうち、円筒集合の指示関数で張られる部分。

  積は基底の規則 χ_{Z_s}·χ_{Z_t} = χ_{Z_st} の双線形拡張、等価性は有限回の
  展開による正規形で判定する。convolve_pointwise は独立な照合用。
  """

  def __init__(self, groupoid: BoundaryGroupoid):
    self.groupoid = groupoid
    self.semigroup = groupoid.semigroup
    self.spectrum = groupoid.spectrum
    self.surgery = groupoid.surgery
    self.family = groupoid.semigroup.family
    self.graph = groupoid.graph

  # --- 元の構成 ---

  def indicator(self, triple: SemigroupElement, coefficient=1) -> AlgebraElement:
    if triple.is_zero:
      return AlgebraElement()
    return AlgebraElement([(triple, coefficient)])

  def projection(self, vertices: VertexSet) -> AlgebraElement:
    """P_A = χ_{Z_(ε,A,ε)}。P_∅ = 0。"""
    if not vertices:
      return AlgebraElement()
    return self.indicator(self.semigroup.element(EMPTY_WORD, vertices, EMPTY_WORD))

  def partial_isometry(self, letter) -> AlgebraElement:
    """S_a = χ_{Z_(a,r(a),ε)}"""
    alpha = self.graph.word(letter)
    if len(alpha) != 1:
      raise InputError('S には一文字を指定してください')
    return self.word_isometry(alpha)

  def word_isometry(self, alpha) -> AlgebraElement:
    """S_α = χ_{Z_(α,r(α),ε)}（α ≠ ε）。"""
    alpha = self.graph.word(alpha)
    if not alpha:
      raise InputError('S_ε は使えません（P_A を使ってください）')
    return self.indicator(SemigroupElement(alpha, self.graph.range_of(alpha), EMPTY_WORD))

  def generator_product(self, alpha, vertices: VertexSet, beta) -> AlgebraElement:
    """S_α P_A S_β* を生成元 S_a、P_A の積として計算する。"""
    graph = self.graph
    alpha, beta = graph.word(alpha), graph.word(beta)
    factors = [self.partial_isometry((a,)) for a in alpha]
    factors.append(self.projection(vertices))
    factors.extend(self.star(self.partial_isometry((b,))) for b in reversed(beta))
    return self.product(factors)

  # --- 演算 ---

  def multiply(self, x: AlgebraElement, y: AlgebraElement) -> AlgebraElement:
    result = AlgebraElement()
    for s, c in x.items():
      for t, d in y.items():
        st = self.semigroup.multiply(s, t)
        if not st.is_zero:
          result += [(st, c * d)]
    return result

  def product(self, factors: Iterable[AlgebraElement]) -> AlgebraElement:
    factors = list(factors)
    result = factors[0]
    for factor in factors[1:]:
      result = self.multiply(result, factor)
    return result

  def star(self, x: AlgebraElement) -> AlgebraElement:
    return AlgebraElement((s.star(), c) for s, c in x.items())

  def evaluate(self, x: AlgebraElement, point: GroupoidElement) -> Fraction:
    """Σ c·[point ∈ Z_s]"""
    member = self.groupoid.cylinder_member
    return sum((c for s, c in x.items() if member(Cylinder(s), point)), Fraction(0))

  def convolve_pointwise(self, x: AlgebraElement, y: AlgebraElement, point: GroupoidElement) -> Fraction:
    """
    (x*y)(η, n, ξ) = Σ x(η, m, ζ) y(ζ, n−m, ξ) を直接計算する。

    (m, ζ) の候補は x の項 (α, A, β) から m = |α| − |β|、ζ = G_(β)(H_[α](η)) で得る。
    """
    surgery, groupoid = self.surgery, self.groupoid
    eta, n, xi = point.eta, point.m, point.xi
    candidates = {}
    for s in x:
      if not eta.has_beginning(s.alpha):
        continue
      tail = surgery.H_cut_filter(s.alpha, eta)
      if not surgery.in_glue_domain(s.beta, tail):
        continue
      zeta = surgery.G_glue_filter(s.beta, tail)
      candidates.setdefault((s.cocycle, zeta), (s.alpha, s.beta))
    total = Fraction(0)
    for (m, zeta), witness in candidates.items():
      left = self.evaluate(x, GroupoidElement(eta, m, zeta, witness))
      if left == 0:
        continue
      right_witness = groupoid.find_witness(zeta, n - m, xi)
      if right_witness is None:
        continue
      total += left * self.evaluate(y, GroupoidElement(zeta, n - m, xi, right_witness))
    return total

  # --- 展開と正規形 ---

  def expand_one_step(self, triple: SemigroupElement) -> Expansion:
    """
    Z_(α,A,β) を有限型の点と一段深い円筒集合に分ける。

    Returns:
      Expansion: leaves は B_β の原子 C ⊆ A のうちタイトなもの、
        children は a ∈ L(AE^1) ごとの (αa, r(A,a), βa)。
    """
    graph, spectrum = self.graph, self.spectrum
    alpha, vertices, beta = triple.alpha, triple.vertices, triple.beta
    leaves = tuple(
      SemigroupElement(alpha, atom, beta)
      for atom in self.family.atoms_within(vertices)
      if spectrum.is_tight_atom(beta, atom)
    )
    children = tuple(
      SemigroupElement(alpha + (a,), graph.step(vertices, a), beta + (a,))
      for a in sorted(graph.letters_from(vertices))
    )
    return Expansion(leaves, children)

  def leaf_point(self, leaf: SemigroupElement) -> GroupoidElement:
    """葉 (α, C, β) が表す点 (G_(α)(H_[β](ξ)), |α|−|β|, ξ)、ξ = (β, C)。"""
    surgery = self.surgery
    xi = self.spectrum.finite_filter(leaf.beta, leaf.vertices)
    eta = surgery.G_glue_filter(leaf.alpha, surgery.H_cut_filter(leaf.beta, xi))
    return GroupoidElement(eta, leaf.cocycle, xi, (leaf.alpha, leaf.beta))

  def normal_form(self, x: AlgebraElement) -> AlgebraElement:
    """
    項を |α|−|β| ごとにまとめ、各組で β の長さが最大値 L にそろうまで展開する。

    長さ L の円筒集合は原子ごとに ('cylinder', (α, C, β)) に、途中で出た点は
    ('point', (α, C, β)) に係数を集める。係数0のキーは消える。
    """
    groups: dict[int, list[tuple[SemigroupElement, Fraction]]] = defaultdict(list)
    for s, c in x.items():
      groups[s.cocycle].append((s, c))
    result = AlgebraElement()
    for terms in groups.values():
      depth = max(len(s.beta) for s, _ in terms)
      pending = list(terms)
      while pending:
        s, c = pending.pop()
        if len(s.beta) == depth:
          result += [
            (('cylinder', SemigroupElement(s.alpha, atom, s.beta)), c)
            for atom in self.family.atoms_within(s.vertices)
          ]
          continue
        expansion = self.expand_one_step(s)
        result += [(('point', leaf), c) for leaf in expansion.leaves]
        pending.extend((child, c) for child in expansion.children)
    return result

  def equals(self, x: AlgebraElement, y: AlgebraElement) -> bool:
    return not self.normal_form(x - y)

  # --- 関係式 ---

  def check_relations(self) -> RelationReport:
    """
    ラベル付き空間の関係式 (i)〜(iv) を equals で検査する。

    (iv) は 0 < |L(AE^1)| < ∞ で A ∩ E^0_sink に族の空でない要素が無い A についてだけ調べる。
    """
    graph, family = self.graph, self.family
    show = graph.render_set
    report = RelationReport()
    P, S, star = self.projection, self.partial_isometry, self.star
    sets = family.sorted_sets()
    letters = range(len(graph.letters))

    report.record('i', self.equals(P(0), AlgebraElement()), 'P_{} = 0')
    for first in sets:
      for second in sets:
        meet, join = first & second, first | second
        report.record(
          'i', self.equals(P(meet), self.multiply(P(first), P(second))),
          f'P_{show(meet)} = P_{show(first)} P_{show(second)}'
        )
        report.record(
          'i', self.equals(P(join), P(first) + P(second) - P(meet)),
          f'P_{show(join)} = P_{show(first)} + P_{show(second)} - P_{show(meet)}'
        )

    for vertices in sets:
      for a in letters:
        name = graph.letters[a]
        report.record(
          'ii', self.equals(self.multiply(P(vertices), S((a,))), self.multiply(S((a,)), P(graph.step(vertices, a)))),
          f'P_{show(vertices)} S_{name} = S_{name} P_r({show(vertices)},{name})'
        )

    for a in letters:
      for b in letters:
        product = self.multiply(star(S((b,))), S((a,)))
        expected = P(graph.range_of((a,))) if a == b else AlgebraElement()
        report.record(
          'iii', self.equals(product, expected),
          f'S_{graph.letters[b]}* S_{graph.letters[a]} = ' + (f'P_r({graph.letters[a]})' if a == b else '0')
        )

    for vertices in sets:
      outgoing = graph.letters_from(vertices)
      if not 0 < len(outgoing) < math.inf:
        continue
      if any(member and is_subset(member, vertices & graph.sinks) for member in sets):
        continue
      total = AlgebraElement()
      for a in sorted(outgoing):
        total += self.product([S((a,)), P(graph.step(vertices, a)), star(S((a,)))])
      report.record('iv', self.equals(P(vertices), total), f'P_{show(vertices)} = Σ S_a P_r(A,a) S_a*')

    logger.debug('relation checks: %s', report.checked)
    return report


