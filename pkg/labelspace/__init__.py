# __init__.py
import logging
import os
from collections.abc import Mapping
from typing import Any

from dotenv import load_dotenv
from flask import Flask

load_dotenv(override=True)


def create_app(test_config: Mapping[str, Any] | None = None) -> Flask:
  """
  ツールキットの Flask アプリケーションを作成し、設定します。

  Args:
    test_config (Mapping | None): 環境変数の値より優先する設定（テスト用）。

  Returns:
    Flask: CLI のブループリントを登録したアプリケーション。

  設定値は .env または環境変数から読み込みます。コマンドラインのオプションは
  ここで決めた既定値よりさらに優先されます。

  例:
    app = create_app({'LABELSPACE_DEPTH': 2})
    runner = app.test_cli_runner()
  """
  app = Flask(__name__)
  app.config['LABELSPACE_DEPTH'] = int(os.getenv('LABELSPACE_DEPTH', '3'))
  app.config['LABELSPACE_FAMILY'] = os.getenv('LABELSPACE_FAMILY', 'minimal')
  app.config['LABELSPACE_SEED'] = int(os.getenv('LABELSPACE_SEED', '0'))
  app.config['LABELSPACE_TRIALS'] = int(os.getenv('LABELSPACE_TRIALS', '100'))
  app.config['LOG_LEVEL'] = os.getenv('LABELSPACE_LOG_LEVEL', 'WARNING').upper()
  if test_config is not None:
    app.config.from_mapping(test_config)

  # ライブラリの各モジュールのロガーはこのロガーへ伝播する
  level = str(app.config['LOG_LEVEL']).upper()
  # getLevelNamesMapping は 3.11 以降。3.10 では同じ内容の _nameToLevel を使う
  level_names = getattr(logging, 'getLevelNamesMapping', lambda: dict(logging._nameToLevel))()
  if level not in level_names:
    app.logger.warning('unknown log level %r, using WARNING', app.config['LOG_LEVEL'])
    level = 'WARNING'
  app.config['LOG_LEVEL'] = level
  app.logger.setLevel(level)

  from labelspace.cli import bp # cliで定義するbpをインポート

  app.register_blueprint(bp)

  return app
