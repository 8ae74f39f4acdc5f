# conftest.py
# 共通のフィクスチャ（G1〜G3 の空間、アプリ、CLI ランナー）とランダムなグラフの生成
from pathlib import Path

import pytest
from hypothesis import strategies as st

from labelspace import create_app
from labelspace.space import LabelledSpace

DATA = Path(__file__).parent / 'data'
GOLDEN = Path(__file__).parent / 'golden'

# G1: 頂点 v と a のループ。G2: v→w（w はシンク）。G3: 1→2, 1→3 が a、2→3 が b。
G1_EDGES = [('v', 'v', 'a')]
G2_EDGES = [('v', 'w', 'a')]
G3_EDGES = [('1', '2', 'a'), ('1', '3', 'a'), ('2', '3', 'b')]


@pytest.fixture(scope='session')
def g1() -> LabelledSpace:
  return LabelledSpace.from_edges(['v'], G1_EDGES)


@pytest.fixture(scope='session')
def g2() -> LabelledSpace:
  return LabelledSpace.from_edges(['v', 'w'], G2_EDGES)


@pytest.fixture(scope='session')
def g3() -> LabelledSpace:
  return LabelledSpace.from_edges(['1', '2', '3'], G3_EDGES)


@pytest.fixture
def app():
  return create_app({'LABELSPACE_DEPTH': 3, 'LABELSPACE_FAMILY': 'minimal', 'LABELSPACE_SEED': 0,
                     'LABELSPACE_TRIALS': 100, 'LOG_LEVEL': 'WARNING'})


@pytest.fixture
def runner(app):
  return app.test_cli_runner(mix_stderr=False)


def data_file(name: str) -> str:
  return str(DATA / name)


@st.composite
def labelled_graphs(draw, max_vertices: int = 5, letters: str = 'abc'):
  """頂点5個以下、文字3種類以下のランダムなラベル付きグラフ（頂点名と辺の並び）。"""
  size = draw(st.integers(min_value=1, max_value=max_vertices))
  vertices = [str(index + 1) for index in range(size)]
  edge = st.tuples(st.sampled_from(vertices), st.sampled_from(vertices), st.sampled_from(letters))
  edges = draw(st.lists(edge, min_size=1, max_size=2 * size, unique=True))
  return vertices, edges
