# app.py
# アプリ立ち上げのファイル（flask --app app <command> または python app.py <command>）
from labelspace import create_app
from labelspace.cli import cli

app = create_app()

if __name__ == '__main__':
  cli()
