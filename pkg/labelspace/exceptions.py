# exceptions.py
# ツールキット全体で使う例外クラス


class LabelSpaceError(Exception):
  """ラベル付き空間ツールキットの例外の基底クラス。"""


class InputError(LabelSpaceError, ValueError):
  """
  入力に誤りがある場合の例外。

  不正な文書、未知の頂点・文字、無効な三つ組、閉じていない集合族などで発生する。
  CLIでは終了コード2に対応する。
  """


class DomainError(LabelSpaceError, ValueError):
  """
  部分写像の定義域の外で呼び出された場合の例外。

  T_(α)β の外での貼り合わせ、先頭でない語の切り取り、空語へのσ、
  合成できない群亜元の積などで発生する。
  """


class NotWeaklyLeftResolvingError(InputError):
  """ラベル付き空間が弱左分解的でない場合の例外。"""
