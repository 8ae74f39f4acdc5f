# cli.py
# flask コマンドとして使うサブコマンド群
import functools
import logging

import click
from flask import Blueprint, current_app
from flask.cli import FlaskGroup

from labelspace.boolean_family import FAMILY_MODES
from labelspace.exceptions import LabelSpaceError
from labelspace.forms import parse_input
from labelspace.space import LabelledSpace
from labelspace.utils.report_format import (
  render_algebra, render_element, render_filter, render_levels, render_triple
)
from labelspace.utils.text_parse import (
  parse_element, parse_filter, parse_generators, parse_triple
)
from labelspace.verification import oracle_trials, run_all

logger = logging.getLogger(__name__)

# コマンドを app.cli に直接登録する（flask validate ... の形で呼ぶ）
bp = Blueprint('labelspace', __name__, cli_group=None)

graph_argument = click.argument('graph', metavar='GRAPH')
family_option = click.option(
  '--family', 'mode', type=click.Choice(FAMILY_MODES), default=None,
  help='受容族の作り方（既定は設定値 LABELSPACE_FAMILY、文書に family があれば file）'
)
depth_option = click.option('--depth', type=click.IntRange(min=0), default=None, help='列挙する語の長さの上限')
seed_option = click.option('--seed', type=int, default=None, help='ランダムな試行の種')
trials_option = click.option('--trials', type=click.IntRange(min=0), default=None, help='照合の試行回数')
length_option = click.option('--length', type=click.IntRange(min=0), default=2, help='三つ組と証拠の語の長さの上限')


class InputFailure(click.ClickException):
  """入力の誤りや定義域外の呼び出し。終了コード2。"""
  exit_code = 2


def reports_errors(command):
  """ツールキットの例外を終了コード2のエラー表示に変える。"""
  @functools.wraps(command)
  def wrapper(*args, **kwargs):
    try:
      return command(*args, **kwargs)
    except LabelSpaceError as error:
      logger.debug('command failed: %s', error)
      raise InputFailure(str(error)) from None
  return wrapper


def _setting(value, key: str):
  return current_app.config[key] if value is None else value


def load_space(graph: str, mode: str | None = None) -> LabelledSpace:
  """
  GRAPH 引数（ファイルのパスまたは JSON テキスト）から空間を作る。

  Args:
    graph (str): GRAPH 引数。
    mode (str | None): --family の値。

  Returns:
    LabelledSpace: 組み立てた空間。
  """
  document = parse_input(graph)
  if mode is None and document.family is None:
    mode = current_app.config['LABELSPACE_FAMILY']
  return LabelledSpace.from_document(document, mode)


def _finish(reports) -> None:
  """性質の検査に失敗があれば終了コード1で終える。"""
  if any(not report.ok for report in reports):
    click.get_current_context().exit(1)


# --- 基本のコマンド ---

@bp.cli.command('validate')
@graph_argument
@family_option
@reports_errors
def validate(graph, mode):
  """グラフと受容族を検査して概要を表示する。"""
  space = load_space(graph, mode)
  g = space.graph
  report = g.validate()
  click.echo(f'vertices: {len(g.vertices)}')
  click.echo(f'edges: {len(g.edges)}')
  click.echo('letters: ' + ','.join(g.letters))
  click.echo(f'sinks: {g.render_set(report.sinks)}')
  click.echo(f'left-resolving: {"yes" if report.left_resolving else "no"}')
  click.echo(f'alphabet-surjective: {"yes" if report.alphabet_surjective else "no"}')
  click.echo(f'family: {space.family.mode} ({len(space.family)} sets)')
  click.echo('weakly-left-resolving: yes')


@bp.cli.command('family')
@graph_argument
@family_option
@click.option('--atoms', is_flag=True, help='族の要素の代わりに原子を表示する')
@reports_errors
def family(graph, mode, atoms):
  """受容族 B の要素（または原子）を1行に1つずつ表示する。"""
  space = load_space(graph, mode)
  g = space.graph
  if atoms:
    for atom in sorted(space.family.atoms, key=g.set_key):
      click.echo(g.render_set(atom))
    return
  for vertices in space.family.sorted_sets():
    click.echo(g.render_set(vertices))


@bp.cli.command('tight')
@graph_argument
@family_option
@depth_option
@click.option('--levels', is_flag=True, help='各フィルターのレベルの最小元も表示する')
@reports_errors
def tight(graph, mode, depth, levels):
  """語の長さが depth 以下のタイトなフィルターを表示する。"""
  space = load_space(graph, mode)
  depth = _setting(depth, 'LABELSPACE_DEPTH')
  spectrum = space.spectrum
  for xi in spectrum.enumerate_tight(depth):
    line = render_filter(space.graph, xi)
    if levels:
      chain = spectrum.complete_family_of(xi, None if xi.is_finite else depth)
      line += '\t' + render_levels(space.graph, chain.minima)
    click.echo(line)


@bp.cli.command('sigma')
@graph_argument
@click.argument('filter_text', metavar='FILTER')
@family_option
@click.option('--power', type=click.IntRange(min=0), default=1, help='シフトを繰り返す回数')
@reports_errors
def sigma(graph, filter_text, mode, power):
  """シフト σ をフィルターに適用する。"""
  space = load_space(graph, mode)
  xi = parse_filter(space.spectrum, filter_text)
  click.echo(render_filter(space.graph, space.surgery.sigma_power(xi, power)))


# --- 逆半群 ---

@bp.cli.group('semigroup')
def semigroup():
  """逆半群 S の演算。"""


@semigroup.command('mul')
@graph_argument
@click.argument('first')
@click.argument('second')
@family_option
@reports_errors
def semigroup_mul(graph, first, second, mode):
  """三つ組の積を表示する。"""
  space = load_space(graph, mode)
  s = parse_triple(space.semigroup, first)
  t = parse_triple(space.semigroup, second)
  click.echo(render_triple(space.graph, space.semigroup.multiply(s, t)))


@semigroup.command('star')
@graph_argument
@click.argument('triple')
@family_option
@reports_errors
def semigroup_star(graph, triple, mode):
  space = load_space(graph, mode)
  s = parse_triple(space.semigroup, triple)
  click.echo(render_triple(space.graph, space.semigroup.star(s)))


@semigroup.command('leq')
@graph_argument
@click.argument('first')
@click.argument('second')
@family_option
@reports_errors
def semigroup_leq(graph, first, second, mode):
  """冪等元の自然な順序 p ≤ q を true / false で表示する。"""
  space = load_space(graph, mode)
  p = parse_triple(space.semigroup, first)
  q = parse_triple(space.semigroup, second)
  click.echo('true' if space.semigroup.natural_leq(p, q) else 'false')


# --- 亜群 ---

@bp.cli.group('groupoid')
def groupoid():
  """亜群 Γ と胚の同型 Φ。"""


@groupoid.command('compose')
@graph_argument
@click.argument('first')
@click.argument('second')
@family_option
@reports_errors
def groupoid_compose(graph, first, second, mode):
  """'eta;m;xi' の形の二つの元の積を表示する。"""
  space = load_space(graph, mode)
  x = parse_element(space.groupoid, first)
  y = parse_element(space.groupoid, second)
  click.echo(render_element(space.graph, space.groupoid.compose(x, y)))


@groupoid.command('inverse')
@graph_argument
@click.argument('element')
@family_option
@reports_errors
def groupoid_inverse(graph, element, mode):
  space = load_space(graph, mode)
  x = parse_element(space.groupoid, element)
  click.echo(render_element(space.graph, space.groupoid.inverse(x)))


@groupoid.command('phi')
@graph_argument
@click.argument('triple')
@click.argument('filter_text', metavar='FILTER')
@family_option
@reports_errors
def groupoid_phi(graph, triple, filter_text, mode):
  """胚 [s, ξ] の像 Φ[s, ξ] を表示する。"""
  space = load_space(graph, mode)
  s = parse_triple(space.semigroup, triple)
  xi = parse_filter(space.spectrum, filter_text)
  g = space.groupoid
  click.echo(render_element(space.graph, g.phi(g.germ(s, xi))))


@groupoid.command('theta')
@graph_argument
@click.argument('triple')
@click.argument('filter_text', metavar='FILTER')
@family_option
@reports_errors
def groupoid_theta(graph, triple, filter_text, mode):
  """作用 θ_s(ξ) を表示する。"""
  space = load_space(graph, mode)
  s = parse_triple(space.semigroup, triple)
  xi = parse_filter(space.spectrum, filter_text)
  click.echo(render_filter(space.graph, space.groupoid.theta(s, xi)))


# --- 代数 ---

@bp.cli.command('algebra-check')
@graph_argument
@family_option
@depth_option
@seed_option
@trials_option
@reports_errors
def algebra_check(graph, mode, depth, seed, trials):
  """関係式 (i)〜(iv) と、積と畳み込みの照合結果を表示する。"""
  space = load_space(graph, mode)
  depth = _setting(depth, 'LABELSPACE_DEPTH')
  seed = _setting(seed, 'LABELSPACE_SEED')
  trials = _setting(trials, 'LABELSPACE_TRIALS')
  relations = space.algebra.check_relations()
  click.echo(relations.summary_line())
  for name, failures in relations.failures.items():
    for failure in failures[:3]:
      click.echo(f'  ({name}) {failure}')
  oracle = oracle_trials(space, depth, 2, trials, seed)
  if oracle.ok:
    click.echo(f'oracle: {oracle.checked} trials OK')
  else:
    click.echo(f'oracle: {oracle.failure_count} of {oracle.checked} trials FAILED')
    for failure in oracle.failures:
      click.echo(f'  {failure}')
  if not relations.ok or not oracle.ok:
    click.get_current_context().exit(1)


@bp.cli.group('algebra')
def algebra():
  """生成元 P{A}、S{a}、S{a}* の式の計算。"""


@algebra.command('mul')
@graph_argument
@click.argument('first')
@click.argument('second')
@family_option
@reports_errors
def algebra_mul(graph, first, second, mode):
  """二つの式の積を c*(α,A,β) の和として表示する。"""
  space = load_space(graph, mode)
  x = parse_generators(space.algebra, first)
  y = parse_generators(space.algebra, second)
  click.echo(render_algebra(space.graph, space.algebra.multiply(x, y)))


@algebra.command('equal')
@graph_argument
@click.argument('first')
@click.argument('second')
@family_option
@reports_errors
def algebra_equal(graph, first, second, mode):
  """二つの式が代数の元として等しいかを true / false で表示する。"""
  space = load_space(graph, mode)
  x = parse_generators(space.algebra, first)
  y = parse_generators(space.algebra, second)
  click.echo('true' if space.algebra.equals(x, y) else 'false')


# --- 検証 ---

@bp.cli.command('verify')
@graph_argument
@family_option
@depth_option
@length_option
@seed_option
@trials_option
@reports_errors
def verify(graph, mode, depth, length, seed, trials):
  """構造に関するすべての性質を検査し、1行に1つずつ結果を表示する。"""
  space = load_space(graph, mode)
  reports = run_all(
    space,
    depth=_setting(depth, 'LABELSPACE_DEPTH'),
    max_length=length,
    trials=_setting(trials, 'LABELSPACE_TRIALS'),
    seed=_setting(seed, 'LABELSPACE_SEED'),
  )
  for report in reports:
    click.echo(report.line())
  failed = sum(1 for report in reports if not report.ok)
  if failed:
    click.echo(f'verify: {failed} of {len(reports)} properties FAILED')
  else:
    click.echo(f'verify: {len(reports)} properties OK')
  _finish(reports)


def _create_app():
  from labelspace import create_app
  return create_app()


@click.group(cls=FlaskGroup, create_app=_create_app, add_default_commands=False)
def cli():
  """ラベル付き空間ツールキット。"""
