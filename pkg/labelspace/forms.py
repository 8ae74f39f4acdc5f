# forms.py
# グラフ文書（JSON）の読み込みと WTForms による検査
import json
import logging
from collections.abc import Mapping
from dataclasses import dataclass
from pathlib import Path

from wtforms import Form, ValidationError
from wtforms.fields import FieldList, FormField, StringField
from wtforms.validators import DataRequired, StopValidation

from labelspace.exceptions import InputError
from labelspace.graph_core import EPSILON, RESERVED_CHARACTERS, LabelledGraph

logger = logging.getLogger(__name__)


def _is_name(form, field):
  if not isinstance(field.data, str):
    raise StopValidation('名前は文字列か数値で指定してください')


class EdgeForm(Form):
  """
  辺 {src, dst, label} の入力を表すフォーム。

  Attributes:
    src (StringField): 始点の頂点名。
    dst (StringField): 終点の頂点名。
    label (StringField): ラベル（文字名）。
  """
  src = StringField('src', validators=[DataRequired('src がありません'), _is_name])
  dst = StringField('dst', validators=[DataRequired('dst がありません'), _is_name])
  label = StringField('label', validators=[DataRequired('label がありません'), _is_name])

  def validate_label(self, field):
    if field.data == EPSILON:
      raise ValidationError(f'ラベル {EPSILON!r} は空語のために予約されています')
    if any(ch in field.data for ch in RESERVED_CHARACTERS):
      raise ValidationError(f'ラベル {field.data!r} に使えない文字が含まれています')


class GraphDocumentForm(Form):
  """
  グラフ文書全体を表すフォーム。

  Attributes:
    vertices (FieldList): 頂点名の並び。
    edges (FieldList): EdgeForm の並び。
    family (FieldList): 族の要素（頂点名リスト）の並び。省略可。

  Methods:
    validate_vertices: 頂点名の重複と予約文字を検証する。
    validate: 辺の端点と族の頂点が宣言済みかを検証する。
  """
  vertices = FieldList(StringField('vertex', validators=[DataRequired('空の頂点名です'), _is_name]), min_entries=0)
  edges = FieldList(FormField(EdgeForm), min_entries=0)
  family = FieldList(FieldList(StringField('vertex', validators=[_is_name])), min_entries=0)

  def validate_vertices(self, field):
    names = [entry.data for entry in field.entries]
    if not names:
      raise ValidationError('頂点が一つもありません')
    reserved = [name for name in names if isinstance(name, str) and any(ch in name for ch in RESERVED_CHARACTERS)]
    if reserved:
      raise ValidationError('reserved character in vertex ' + ', '.join(repr(name) for name in reserved))
    duplicated = sorted({name for name in names if isinstance(name, str) and names.count(name) > 1})
    if duplicated:
      raise ValidationError('duplicate vertex ' + ', '.join(repr(name) for name in duplicated))

  def validate(self, extra_validators=None) -> bool:
    valid = super().validate(extra_validators)
    declared = {entry.data for entry in self.vertices.entries}
    for entry in self.edges.entries:
      for end in (entry.form.src, entry.form.dst):
        if isinstance(end.data, str) and end.data and end.data not in declared:
          end.errors.append(f'unknown vertex {end.data!r}')
          valid = False
    for members in self.family.entries:
      for entry in members.entries:
        if isinstance(entry.data, str) and entry.data not in declared:
          entry.errors.append(f'unknown vertex {entry.data!r}')
          valid = False
    return valid


@dataclass(frozen=True)
class GraphDocument:
  """
  検査済みのグラフ文書。

  Attributes:
    graph (LabelledGraph): 組み立てたグラフ。
    family (tuple | None): 族の頂点名リスト。文書に無ければ None。
  """
  graph: LabelledGraph
  family: tuple[tuple[str, ...], ...] | None = None


def _normalize(value):
  """数値の名前は文字列にそろえる。それ以外はそのまま検査に回す。"""
  if isinstance(value, bool):
    return value
  if isinstance(value, (int, float)):
    return str(value)
  return value


def _as_list(document: Mapping, key: str) -> list:
  value = document.get(key, [])
  if not isinstance(value, list):
    raise InputError(f'{key}: リストで指定してください')
  return value


def _form_data(document: Mapping) -> dict:
  edges = []
  for position, edge in enumerate(_as_list(document, 'edges')):
    if not isinstance(edge, Mapping):
      raise InputError(f'edges-{position}: {{src, dst, label}} のオブジェクトで指定してください')
    edges.append({key: _normalize(edge.get(key)) for key in ('src', 'dst', 'label')})
  family = []
  for position, members in enumerate(_as_list(document, 'family')):
    if not isinstance(members, list):
      raise InputError(f'family-{position}: 頂点名のリストで指定してください')
    family.append([_normalize(name) for name in members])
  return {
    'vertices': [_normalize(name) for name in _as_list(document, 'vertices')],
    'edges': edges,
    'family': family,
  }


def collect_errors(form) -> list[str]:
  """フォームの入れ子をたどって 'フィールド名: メッセージ' の並びを作る。"""
  messages = []
  for field in form:
    if isinstance(field, FormField):
      messages.extend(collect_errors(field.form))
    elif isinstance(field, FieldList):
      messages.extend(f'{field.name}: {error}' for error in field.errors if isinstance(error, str))
      for entry in field.entries:
        if isinstance(entry, FormField):
          messages.extend(collect_errors(entry.form))
        elif isinstance(entry, FieldList):
          messages.extend(collect_errors([entry]))
        else:
          messages.extend(f'{entry.name}: {error}' for error in entry.errors)
    else:
      messages.extend(f'{field.name}: {error}' for error in field.errors)
  return messages


def load_document(source: str | Path) -> Mapping:
  """
  ファイルのパス、または JSON テキストそのものから文書を読む。

  Raises:
    InputError: ファイルが読めない、または JSON として不正な場合。
  """
  text = str(source)
  if not text.lstrip().startswith('{'):
    path = Path(text)
    try:
      text = path.read_text(encoding='utf-8')
    except OSError as error:
      raise InputError(f'{path}: ファイルを読めません ({error.strerror})') from None
  try:
    document = json.loads(text)
  except json.JSONDecodeError as error:
    raise InputError(f'JSON の形式が正しくありません (line {error.lineno}, column {error.colno}): {error.msg}') from None
  if not isinstance(document, Mapping):
    raise InputError('文書は JSON オブジェクトで指定してください')
  return document


def parse_input(source: str | Path | Mapping) -> GraphDocument:
  """
  グラフ文書を読み、検査してグラフを組み立てる。

  Args:
    source: ファイルのパス、JSON テキスト、または読み込み済みの辞書。

  Returns:
    GraphDocument: グラフと（あれば）族の頂点名リスト。

  Raises:
    InputError: 検査に通らない場合。メッセージは 'edges-1-dst: unknown vertex '9'' のように
      場所を示す行を '; ' でつないだもの。
  """
  document = source if isinstance(source, Mapping) else load_document(source)
  form = GraphDocumentForm(data=_form_data(document))
  if not form.validate():
    messages = collect_errors(form)
    logger.info('invalid graph document: %d problems', len(messages))
    raise InputError('; '.join(messages))

  graph = LabelledGraph(
    form.vertices.data,
    [(edge['src'], edge['dst'], edge['label']) for edge in form.edges.data],
  )
  family = None
  if 'family' in document:
    family = tuple(tuple(members) for members in form.family.data)
  return GraphDocument(graph, family)
