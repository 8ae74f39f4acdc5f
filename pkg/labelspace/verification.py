# verification.py
# 構造に関する主張を有限の範囲で総当たりに確かめる（テストと verify コマンドで共用）
import logging
import random
from dataclasses import dataclass, field
from itertools import combinations

from labelspace.graph_core import is_subset, subword
from labelspace.groupoid import Cylinder
from labelspace.semigroup import ZERO
from labelspace.space import LabelledSpace
from labelspace.steinberg_algebra import AlgebraElement
from labelspace.surgery import UltrafilterRef
from labelspace.utils.report_format import (
  render_algebra, render_element, render_filter, render_triple
)

logger = logging.getLogger(__name__)

# 三重ループなど総当たりが重い検査で使う標本の大きさ
SAMPLE_SIZE = 40
MAX_REPORTED = 5


@dataclass
class PropertyReport:
  """
  一つの性質の検査結果。

  Attributes:
    name (str): 性質の名前。
    checked (int): 調べた事例の数。
    failures (list[str]): 反例の説明（先頭の数件）。
    failure_count (int): 反例の総数。
    sampled (bool): 事例を標本に絞って調べたか。
  """
  name: str
  checked: int = 0
  failures: list[str] = field(default_factory=list)
  failure_count: int = 0
  sampled: bool = False

  @property
  def ok(self) -> bool:
    return self.failure_count == 0

  def record(self, passed: bool, instance=None) -> None:
    self.checked += 1
    if not passed:
      self.failure_count += 1
      if len(self.failures) < MAX_REPORTED:
        self.failures.append(instance() if callable(instance) else str(instance))

  def line(self) -> str:
    scope = ' (sampled)' if self.sampled else ''
    if self.ok:
      return f'{self.name}: {self.checked} checked{scope}, OK'
    return f'{self.name}: FAIL ({self.failure_count} of {self.checked}{scope}) e.g. ' + '; '.join(self.failures)


def _sample(items: list, seed: int, size: int = SAMPLE_SIZE) -> list:
  if len(items) <= size:
    return items
  return random.Random(seed).sample(items, size)


# --- graph_core / boolean_family ---

def check_relative_ranges(space: LabelledSpace, max_length: int = 4) -> list[PropertyReport]:
  """相対値域の合成則、単調性、L(AE^1) の空判定。"""
  graph, family = space.graph, space.family
  words = graph.sorted_words(graph.labelled_paths_up_to(max_length))
  single = [(a,) for a in range(len(graph.letters))]
  sets = family.sorted_sets()
  composition = PropertyReport('relative range composition')
  monotone = PropertyReport('relative range monotonicity')
  emptiness = PropertyReport('letters_from emptiness')
  for vertices in sets:
    for alpha in words:
      for beta in words + single:
        if len(alpha) + len(beta) > max_length:
          continue
        composition.record(
          graph.relative_range(vertices, alpha + beta)
          == graph.relative_range(graph.relative_range(vertices, alpha), beta),
          lambda: f'A={graph.render_set(vertices)} α={graph.render_word(alpha)} β={graph.render_word(beta)}'
        )
      for larger in sets:
        if is_subset(vertices, larger):
          monotone.record(
            is_subset(graph.relative_range(vertices, alpha), graph.relative_range(larger, alpha)),
            lambda: f'{graph.render_set(vertices)} ⊆ {graph.render_set(larger)} under {graph.render_word(alpha)}'
          )
    emptiness.record(
      (not graph.letters_from(vertices)) == all(not graph.step(vertices, a) for a in range(len(graph.letters))),
      lambda: graph.render_set(vertices)
    )
  return [composition, monotone, emptiness]


def check_family(space: LabelledSpace, max_length: int = 2) -> list[PropertyReport]:
  """閉包性、弱左分解性、原子による分割、超フィルターの交わりの補題。"""
  graph, family = space.graph, space.family
  closure = PropertyReport('family closure')
  for problem in family.closure_violations():
    closure.record(False, problem)
  closure.record(True)
  resolving = PropertyReport('weakly left-resolving')
  resolving.record(family.check_weakly_left_resolving(), 'r(A∩B,a) ≠ r(A,a)∩r(B,a)')

  partition = PropertyReport('atoms partition members')
  additivity = PropertyReport('atoms of disjoint unions')
  whole = family.restrict(())
  sets = family.sorted_sets()
  for vertices in sets:
    atoms = whole.atoms_below(vertices)
    union = 0
    disjoint = True
    for atom in atoms:
      disjoint = disjoint and not (union & atom)
      union |= atom
    partition.record(disjoint and union == vertices, lambda: graph.render_set(vertices))
    for other in sets:
      if vertices & other == 0:
        combined = set(whole.atoms_below(vertices | other))
        additivity.record(
          combined == set(atoms) | set(whole.atoms_below(other)),
          lambda: f'{graph.render_set(vertices)} ⊔ {graph.render_set(other)}'
        )

  meets = PropertyReport('ultrafilter meets')
  words = graph.sorted_words(graph.labelled_paths_up_to(max_length))
  for alpha in words:
    for beta in words:
      glued = alpha + beta
      if len(glued) > max_length or not graph.range_of(glued):
        continue
      restricted = family.restrict(glued)
      upper = family.restrict(beta)
      for atom in restricted.atoms:
        for member in restricted.carrier:
          if not is_subset(atom, member):
            continue
          for bound in upper.carrier:
            if is_subset(atom, bound):
              meet = member & bound
              meets.record(
                meet in restricted and is_subset(atom, meet),
                lambda: f'{graph.render_word(glued)}: {graph.render_set(member)} ∩ {graph.render_set(bound)}'
              )
  return [closure, resolving, partition, additivity, meets]


# --- semigroup ---

def check_semigroup_laws(space: LabelledSpace, max_length: int = 2, seed: int = 0) -> list[PropertyReport]:
  """
  結合則、s s* s = s、冪等元の可換性、自然順序の判定、E*-ユニタリ性。

  結合則だけは三つ組の標本（零を含む）で調べ、ほかはすべての元で調べる。
  """
  graph, semigroup = space.graph, space.semigroup
  show = lambda s: render_triple(graph, s)
  elements = semigroup.enumerate_elements(max_length) + [ZERO]
  idempotents = [s for s in elements if s.is_idempotent]
  mul = semigroup.multiply

  associativity = PropertyReport('associativity', sampled=len(elements) > SAMPLE_SIZE + 1)
  triples = _sample(elements[:-1], seed) + [ZERO]
  for s in triples:
    for t in triples:
      st = mul(s, t)
      for u in triples:
        associativity.record(
          mul(st, u) == mul(s, mul(t, u)), lambda: f'{show(s)} {show(t)} {show(u)}'
        )

  inverse = PropertyReport('inverse laws')
  unitary = PropertyReport('E*-unitary')
  for s in elements:
    inverse.record(
      mul(mul(s, s.star()), s) == s and mul(mul(s.star(), s), s.star()) == s.star()
      and mul(s.star(), s).is_idempotent,
      lambda: show(s)
    )
    for e in idempotents:
      if not e.is_zero and mul(s, e) == e:
        unitary.record(s.is_idempotent, lambda: f'{show(s)} · {show(e)}')

  commuting = PropertyReport('idempotents commute')
  order = PropertyReport('natural order criterion')
  for e in idempotents:
    for f in idempotents:
      commuting.record(mul(e, f) == mul(f, e), lambda: f'{show(e)} {show(f)}')
      order.record(
        semigroup.natural_leq(e, f) == (mul(e, f) == e), lambda: f'{show(e)} ≤ {show(f)}'
      )
  return [associativity, inverse, commuting, order, unitary]


# --- filters ---

def check_filter_correspondence(space: LabelledSpace, depth: int = 3, max_length: int = 2) -> list[PropertyReport]:
  """タイトなフィルターが E(S) のフィルターを与えること、完全性、超フィルターの伝播。"""
  graph, semigroup, spectrum = space.graph, space.semigroup, space.spectrum
  filters = spectrum.enumerate_tight(depth)
  idempotents = semigroup.enumerate_idempotents(max_length)

  upward = PropertyReport('filters are upward closed')
  meets = PropertyReport('filters are closed under products')
  complete = PropertyReport('levels form a complete family')
  propagation = PropertyReport('ultrafilter propagation')
  for xi in filters:
    shown = render_filter(graph, xi)
    members = [e for e in idempotents if spectrum.contains(xi, e)]
    inside = set(members)
    for e in members:
      for f in idempotents:
        if semigroup.natural_leq(e, f):
          upward.record(f in inside, lambda: f'{shown} ∋ {render_triple(graph, e)}')
      for f in members:
        product = semigroup.multiply(e, f)
        meets.record(
          not product.is_zero and spectrum.contains(xi, product),
          lambda: f'{shown}: {render_triple(graph, e)}·{render_triple(graph, f)}'
        )
    chain = spectrum.complete_family_of(xi)
    complete.record(spectrum.is_complete(chain), shown)
    propagation.record(spectrum.has_ultrafilter_propagation(chain), shown)

  reduction = PropertyReport('finite-type tightness reduction')
  for word in graph.labelled_paths_up_to(depth):
    for atom in space.family.restrict(word).atoms:
      reduction.record(
        spectrum.is_tight_atom(word, atom) == spectrum.has_sink_member(word, atom),
        lambda: f'{graph.render_word(word)}[{graph.render_set(atom)}]'
      )
  return [upward, meets, complete, propagation, reduction]


# --- surgery ---

def _ultrafilters(space: LabelledSpace, max_length: int) -> list[UltrafilterRef]:
  graph, family = space.graph, space.family
  return [
    UltrafilterRef(word, atom)
    for word in graph.sorted_words(graph.labelled_paths_up_to(max_length))
    for atom in family.restrict(word).atoms
  ]


def check_surgery(space: LabelledSpace, depth: int = 3) -> list[PropertyReport]:
  """G と H が互いに逆であること、合成則、f の合成、g と h の所属の補題、σ の性質。"""
  graph, surgery, spectrum = space.graph, space.surgery, space.spectrum
  filters = spectrum.enumerate_tight(depth)
  words = graph.sorted_words(graph.labelled_paths_up_to(depth))
  G, H = surgery.G_glue_filter, surgery.H_cut_filter
  show = lambda xi: render_filter(graph, xi)
  word = graph.render_word

  glue_cut = PropertyReport('G after H is the identity')
  cut_glue = PropertyReport('H after G is the identity')
  glue_law = PropertyReport('gluing composition law')
  cut_law = PropertyReport('cutting composition law')
  shift = PropertyReport('sigma powers are cuts')
  for xi in filters:
    for alpha in words:
      if xi.has_beginning(alpha):
        tail = H(alpha, xi)
        glue_cut.record(
          surgery.in_glue_domain(alpha, tail) and G(alpha, tail) == xi, lambda: f'{word(alpha)} {show(xi)}'
        )
        shift.record(surgery.sigma_power(xi, len(alpha)) == H(alpha, xi), lambda: f'{word(alpha)} {show(xi)}')
        for cut in range(len(alpha) + 1):
          first, second = alpha[:cut], alpha[cut:]
          cut_law.record(
            H(second, H(first, xi)) == H(alpha, xi), lambda: f'{word(first)}|{word(second)} {show(xi)}'
          )
      if surgery.in_glue_domain(alpha, xi):
        cut_glue.record(H(alpha, G(alpha, xi)) == xi, lambda: f'{word(alpha)} {show(xi)}')
        for cut in range(len(alpha) + 1):
          first, second = alpha[:cut], alpha[cut:]
          inner_ok = surgery.in_glue_domain(second, xi)
          glued = G(second, xi) if inner_ok else None
          glue_law.record(
            inner_ok and surgery.in_glue_domain(first, glued) and G(first, glued) == G(alpha, xi),
            lambda: f'{word(first)}|{word(second)} {show(xi)}'
          )

  cut_end = PropertyReport('f composition')
  glue_member = PropertyReport('g preserves membership')
  cut_member = PropertyReport('h preserves membership')
  family = space.family
  for ultrafilter in _ultrafilters(space, depth):
    context = ultrafilter.context
    for outer in range(len(context) + 1):
      for inner in range(outer + 1):
        middle = surgery.f_cut_end(ultrafilter, outer)
        expected = surgery.f_cut_end(ultrafilter, inner)
        composed = None if middle is None else surgery.f_cut_end(middle, inner)
        cut_end.record(composed == expected, lambda: f'{word(context)} at {inner}, {outer}')
    for a in range(len(graph.letters)):
      glued_context = (a,) + context
      bound = graph.range_of(glued_context)
      if bound and is_subset(ultrafilter.atom, bound):
        glued = surgery.g_glue((a,), ultrafilter)
        for member in family.restrict(context).carrier:
          glue_member.record(
            is_subset(ultrafilter.atom, member) == is_subset(glued.atom, member & bound),
            lambda: f'{graph.letters[a]}·{word(context)} {graph.render_set(member)}'
          )
    if context:
      cut = surgery.h_cut(context[:1], ultrafilter)
      for member in family.restrict(context).carrier:
        cut_member.record(
          is_subset(ultrafilter.atom, member) == is_subset(cut.atom, member),
          lambda: f'{word(context)} {graph.render_set(member)}'
        )

  bijective = PropertyReport('sigma_a is a bijection')
  for a in range(len(graph.letters)):
    top = graph.range_of((a,))
    source = [xi for xi in filters if spectrum.contains(xi, space.semigroup.idempotent((a,), top))]
    images = [surgery.sigma(xi) for xi in source]
    target = space.semigroup.idempotent((), top)
    bijective.record(len(set(images)) == len(images), lambda: f'{graph.letters[a]}: not injective')
    for xi, image in zip(source, images):
      bijective.record(
        spectrum.contains(image, target) and G((a,), image) == xi,
        lambda: f'{graph.letters[a]}: {show(xi)}'
      )
    for zeta in filters:
      if spectrum.contains(zeta, target):
        bijective.record(
          surgery.in_glue_domain((a,), zeta) and surgery.sigma(G((a,), zeta)) == zeta,
          lambda: f'{graph.letters[a]}: {show(zeta)} has no preimage'
        )
  return [glue_cut, cut_glue, glue_law, cut_law, cut_end, glue_member, cut_member, bijective, shift]


# --- groupoid ---

def check_groupoid(space: LabelledSpace, depth: int = 3, max_length: int = 2) -> list[PropertyReport]:
  """θ と E(S) の作用の一致、Φ の同型性、積の証拠によらなさ、σ による記述。"""
  graph, groupoid, semigroup, spectrum = space.graph, space.groupoid, space.semigroup, space.spectrum
  filters = spectrum.enumerate_tight(depth)
  germs = groupoid.enumerate_germs(depth, max_length)
  idempotents = semigroup.enumerate_idempotents(max_length + 1)
  show_germ = lambda g: f'{render_triple(graph, g.s)} {render_filter(graph, g.xi)}'

  action = PropertyReport('theta matches the action on idempotents')
  for germ in germs:
    t, xi = germ.s, germ.xi
    moved = groupoid.theta(t, xi)
    for e in idempotents:
      conjugate = semigroup.product(t.star(), e, t)
      expected = not conjugate.is_zero and spectrum.contains(xi, conjugate)
      action.record(spectrum.contains(moved, e) == expected, lambda: f'{show_germ(germ)} {render_triple(graph, e)}')

  injective = PropertyReport('phi is well defined and injective')
  multiplicative = PropertyReport('phi is multiplicative')
  images = {germ: groupoid.phi(germ) for germ in germs}
  by_filter = {}
  for germ in germs:
    by_filter.setdefault(germ.xi, []).append(germ)
  for first in germs:
    for second in by_filter[first.xi]:
      injective.record(
        groupoid.germ_equivalent(first, second) == (images[first] == images[second]),
        lambda: f'{show_germ(first)} / {show_germ(second)}'
      )
  for second in germs:
    for first in by_filter.get(images[second].eta, []):
      if not semigroup.multiply(first.s, second.s).is_zero:
        product = groupoid.germ_product(first, second)
        multiplicative.record(
          groupoid.phi(product) == groupoid.compose(images[first], images[second]),
          lambda: f'{show_germ(first)} · {show_germ(second)}'
        )

  elements = groupoid.enumerate_elements(depth, max_length)
  surjective = PropertyReport('phi is surjective')
  inverses = PropertyReport('inverse laws in the groupoid')
  deaconu = PropertyReport('shift description of the groupoid')
  for x in elements:
    preimage = groupoid.preimage(x)
    surjective.record(groupoid.phi(preimage) == x, lambda: render_element(graph, x))
    inverse = groupoid.inverse(x)
    inverses.record(
      groupoid.compose(x, inverse) == groupoid.unit(x.eta) and groupoid.compose(inverse, x) == groupoid.unit(x.xi),
      lambda: render_element(graph, x)
    )
    alpha, beta = x.witness
    deaconu.record(
      groupoid.renault_deaconu_member(x.eta, x.m, x.xi, len(alpha), len(beta)),
      lambda: render_element(graph, x)
    )
  for eta in filters:
    for xi in filters:
      for m in range(-depth, depth + 1):
        lengths = groupoid.witness_lengths(eta, m, xi)
        shifted = lengths is not None and any(
          groupoid.renault_deaconu_member(eta, m, xi, k + m, k) for k in lengths
        )
        deaconu.record(
          groupoid.contains(eta, m, xi) == shifted,
          lambda: f'{render_filter(graph, eta)};{m};{render_filter(graph, xi)}'
        )

  witnesses = PropertyReport('products do not depend on witnesses')
  by_source = {}
  for y in elements:
    by_source.setdefault(y.eta, []).append(y)
  for x in elements:
    for y in by_source.get(x.xi, []):
      expected = groupoid.compose(x, y)
      for first in list(groupoid.all_witnesses(x.eta, x.m, x.xi))[:3]:
        for second in list(groupoid.all_witnesses(y.eta, y.m, y.xi))[:3]:
          product = groupoid.compose_along(
            type(x)(x.eta, x.m, x.xi, first), type(y)(y.eta, y.m, y.xi, second)
          )
          witnesses.record(
            product == expected and groupoid.is_witness(product.eta, product.xi, product.witness),
            lambda: f'{render_element(graph, x)} · {render_element(graph, y)}'
          )

  fibre = PropertyReport('cylinders as fibre products')
  shift_injective = PropertyReport('sigma powers are injective on ranges')
  by_lag = {}
  for x in elements:
    by_lag.setdefault(x.m, []).append(x)
  longer = semigroup.enumerate_idempotents(max_length + 1)
  for s in semigroup.enumerate_elements(max_length):
    # 除く冪等元は s の β を延ばしたものから先頭の二つだけ
    extensions = [
      e for e in longer
      if len(e.alpha) > len(s.beta) and subword(e.alpha, 1, len(s.beta)) == s.beta
    ]
    cylinders = [groupoid.cylinder(s)] + [groupoid.cylinder(s, (e,)) for e in extensions[:2]]
    for cylinder in cylinders:
      for x in by_lag.get(s.cocycle, []):
        fibre.record(
          groupoid.cylinder_member(cylinder, x) == groupoid.fibre_product_member(cylinder, x),
          lambda: f'Z{render_triple(graph, s)} {render_element(graph, x)}'
        )
    target = semigroup.multiply(s, s.star())
    reached = [eta for eta in filters if spectrum.contains(eta, target)]
    shifted = [space.surgery.sigma_power(eta, len(s.alpha)) for eta in reached]
    shift_injective.record(len(set(shifted)) == len(shifted), lambda: render_triple(graph, s))
  return [action, injective, multiplicative, surjective, inverses, deaconu, witnesses, fibre, shift_injective]


def check_cylinder_calculus(space: LabelledSpace, depth: int = 3, max_length: int = 2) -> list[PropertyReport]:
  """
  intersect_cylinders と disjointify が点ごとの所属と一致すること。

  三つ組のすべての組と、すべての三つ組をまとめた一つの並びについて調べる。
  円筒集合の点は m が三つ組の |α| − |β| に等しいものに限られる。
  """
  graph, groupoid = space.graph, space.groupoid
  by_lag: dict[int, list] = {}
  for index, x in enumerate(groupoid.enumerate_elements(depth, max_length)):
    by_lag.setdefault(x.m, []).append((index, x))
  triples = space.semigroup.enumerate_elements(max_length)
  cache: dict = {}

  def members(cylinder):
    if cylinder is None:
      return frozenset()
    if cylinder not in cache:
      cache[cylinder] = frozenset(
        index for index, x in by_lag.get(cylinder.triple.cocycle, [])
        if groupoid.cylinder_member(cylinder, x)
      )
    return cache[cylinder]

  cylinders = [Cylinder(s) for s in triples]
  intersections = PropertyReport('cylinder intersections')
  disjoint = PropertyReport('disjointified cylinders')
  for first in cylinders:
    for second in cylinders:
      meet = groupoid.intersect_cylinders(first, second)
      intersections.record(
        members(meet) == members(first) & members(second),
        lambda: f'Z{render_triple(graph, first.triple)} ∩ Z{render_triple(graph, second.triple)}'
      )
  for group in [list(pair) for pair in combinations(cylinders, 2)] + [cylinders]:
    pieces = groupoid.disjointify(group)
    union = frozenset().union(*(members(c) for c in group))
    covered = frozenset().union(*(members(c) for c in pieces))
    pairwise = all(not (members(p) & members(q)) for p, q in combinations(pieces, 2))
    shrunk = all(
      any(p.triple.alpha == c.triple.alpha and p.triple.beta == c.triple.beta
          and is_subset(p.triple.vertices, c.triple.vertices) for c in group)
      for p in pieces
    )
    disjoint.record(
      union == covered and pairwise and shrunk,
      lambda: ', '.join(render_triple(graph, c.triple) for c in group)
    )
  return [intersections, disjoint]


# --- steinberg_algebra ---

def check_algebra(space: LabelledSpace, depth: int = 3, max_length: int = 2,
                  trials: int = 100, seed: int = 0) -> list[PropertyReport]:
  """
  関係式、生成元の積の補題、対合、畳み込みとの照合、展開の健全性、互いに素な分解。

  対合と互いに素な分解は三つ組の組を調べるので標本に絞る。
  """
  graph, algebra, groupoid = space.graph, space.algebra, space.groupoid
  show = lambda s: render_triple(graph, s)

  relations = PropertyReport('relations')
  relation_report = algebra.check_relations()
  for name in relation_report.checked:
    relations.record(not relation_report.failures[name], lambda: f'({name}) ' + ', '.join(relation_report.failures[name][:2]))

  triples = space.semigroup.enumerate_elements(max_length)
  generators = PropertyReport('generator products are cylinders')
  for s in triples:
    generators.record(
      algebra.generator_product(s.alpha, s.vertices, s.beta) == algebra.indicator(s), lambda: show(s)
    )

  sample = _sample(triples, seed, 15)
  involution = PropertyReport('involution reverses products', sampled=len(sample) < len(triples))
  for s in sample:
    for t in sample:
      x, y = algebra.indicator(s), algebra.indicator(t)
      involution.record(
        algebra.star(algebra.multiply(x, y)) == algebra.multiply(algebra.star(y), algebra.star(x)),
        lambda: f'{show(s)} {show(t)}'
      )

  oracle = oracle_trials(space, depth, max_length, trials, seed)
  by_lag: dict[int, list] = {}
  for x in groupoid.enumerate_elements(depth, max_length):
    by_lag.setdefault(x.m, []).append(x)

  expansion = PropertyReport('expansion soundness')
  for s in triples:
    parts = algebra.expand_one_step(s)
    leaf_points = [algebra.leaf_point(leaf) for leaf in parts.leaves]
    children = [Cylinder(child) for child in parts.children]
    for x in by_lag.get(s.cocycle, []):
      count = sum(1 for p in leaf_points if p == x) + sum(
        1 for child in children if groupoid.cylinder_member(child, x)
      )
      expected = 1 if groupoid.cylinder_member(Cylinder(s), x) else 0
      expansion.record(count == expected, lambda: f'{show(s)} {render_element(graph, x)}')

  paired = _sample(triples, seed, 12)
  normal = PropertyReport('disjoint normal forms', sampled=len(paired) < len(triples))
  for s, t in combinations(paired, 2):
    first, second = Cylinder(s), Cylinder(t)
    pieces = groupoid.disjointify([first, second])
    union = AlgebraElement()
    for piece in pieces:
      union += algebra.indicator(piece.triple)
    meet = groupoid.intersect_cylinders(first, second)
    overlap = algebra.indicator(meet.triple) if meet is not None else AlgebraElement()
    form = algebra.normal_form(union)
    normal.record(
      algebra.equals(union + overlap, algebra.indicator(s) + algebra.indicator(t))
      and all(value == 1 for value in form.values()),
      lambda: f'{show(s)} {show(t)}'
    )
  return [relations, generators, involution, oracle, expansion, normal]


def oracle_trials(space: LabelledSpace, depth: int = 3, max_length: int = 2,
                  trials: int = 100, seed: int = 0) -> PropertyReport:
  """
  ランダムな元 x, y と点について、multiply の値と畳み込みの直接計算を比べる。

  Args:
    space (LabelledSpace): 対象の空間。
    depth (int): 点を取るフィルターの深さ。
    max_length (int): 三つ組と証拠の語の長さの上限。
    trials (int): 試行回数。
    seed (int): 乱数の種。

  Returns:
    PropertyReport: 'oracle trials' の結果。
  """
  graph, algebra = space.graph, space.algebra
  report = PropertyReport('oracle trials')
  triples = space.semigroup.enumerate_elements(max_length)
  points = space.groupoid.enumerate_elements(depth, max_length)
  if not (points and triples):
    return report
  rng = random.Random(seed)
  for _ in range(trials):
    x = _random_element(rng, algebra, triples)
    y = _random_element(rng, algebra, triples)
    point = rng.choice(points)
    report.record(
      algebra.evaluate(algebra.multiply(x, y), point) == algebra.convolve_pointwise(x, y, point),
      lambda: f'{render_algebra(graph, x)} * {render_algebra(graph, y)} at {render_element(graph, point)}'
    )
  return report


def _random_element(rng: random.Random, algebra, triples) -> AlgebraElement:
  x = AlgebraElement()
  for _ in range(rng.randint(1, 2)):
    x += algebra.indicator(rng.choice(triples), rng.choice((-2, -1, 1, 2, 3)))
  return x


def run_all(space: LabelledSpace, depth: int = 3, max_length: int = 2,
            trials: int = 100, seed: int = 0) -> list[PropertyReport]:
  """すべての検査を順に実行する。"""
  reports = []
  reports += check_relative_ranges(space, min(depth + 1, 4))
  reports += check_family(space, max_length)
  reports += check_semigroup_laws(space, max_length, seed)
  reports += check_filter_correspondence(space, depth, max_length)
  reports += check_surgery(space, depth)
  reports += check_groupoid(space, depth, max_length)
  reports += check_cylinder_calculus(space, depth, max_length)
  reports += check_algebra(space, depth, max_length, trials, seed)
  failed = [report.name for report in reports if not report.ok]
  if failed:
    logger.warning('failed properties: %s', ', '.join(failed))
  return reports
