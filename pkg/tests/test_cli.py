# test_cli.py
import logging

import pytest

from conftest import GOLDEN, data_file
from labelspace import create_app


def golden(name: str) -> str:
  return (GOLDEN / name).read_text(encoding='utf-8')


@pytest.mark.parametrize('graph', ['g1', 'g2', 'g3'])
def test_family(runner, graph):
  result = runner.invoke(args=['family', data_file(f'{graph}.json')])
  assert result.exit_code == 0
  assert result.stdout == golden(f'family_{graph}.txt')


@pytest.mark.parametrize('graph', ['g1', 'g2', 'g3'])
def test_tight(runner, graph):
  result = runner.invoke(args=['tight', data_file(f'{graph}.json'), '--depth', '2'])
  assert result.exit_code == 0
  assert result.stdout == golden(f'tight_{graph}.txt')


def test_tight_levels(runner):
  result = runner.invoke(args=['tight', data_file('g3.json'), '--depth', '2', '--levels'])
  assert result.stdout == golden('tight_levels_g3.txt')


def test_tight_uses_configured_depth(app, runner):
  app.config['LABELSPACE_DEPTH'] = 0
  result = runner.invoke(args=['tight', data_file('g3.json')])
  assert result.stdout == 'e[{3}]\n'


@pytest.mark.parametrize('graph', ['g1', 'g2', 'g3'])
def test_algebra_check(runner, graph):
  result = runner.invoke(args=['algebra-check', data_file(f'{graph}.json'), '--depth', '2'])
  assert result.exit_code == 0
  assert result.stdout == golden('algebra_check.txt')


def test_validate(runner):
  result = runner.invoke(args=['validate', data_file('g3.json')])
  assert result.exit_code == 0
  assert result.stdout == golden('validate_g3.txt')


def test_family_from_the_document(runner):
  result = runner.invoke(args=['validate', data_file('g3_family.json')])
  assert 'family: file (8 sets)' in result.stdout
  result = runner.invoke(args=['validate', data_file('g3_family.json'), '--family', 'minimal'])
  assert 'family: minimal (4 sets)' in result.stdout


def test_family_atoms(runner):
  result = runner.invoke(args=['family', data_file('g3.json'), '--atoms'])
  assert result.stdout == '{2}\n{3}\n'


def test_semigroup_commands(runner):
  graph = data_file('g3.json')
  result = runner.invoke(args=['semigroup', 'mul', graph, '(a,{2,3},a)', '(ab,{3},b)'])
  assert result.stdout == '(ab,{3},b)\n'
  result = runner.invoke(args=['semigroup', 'star', graph, '(ab,{3},b)'])
  assert result.stdout == '(b,{3},ab)\n'
  result = runner.invoke(args=['semigroup', 'leq', graph, '(ab,{3},ab)', '(a,{2,3},a)'])
  assert result.stdout == 'true\n'


def test_groupoid_commands(runner):
  graph = data_file('g3.json')
  result = runner.invoke(args=['groupoid', 'phi', graph, '(e,{3},a)', 'a[{3}]'])
  assert result.stdout == 'e[{3}];-1;a[{3}]\n'
  result = runner.invoke(args=['groupoid', 'theta', graph, '(a,{3},b)', 'b[{3}]'])
  assert result.stdout == 'a[{3}]\n'
  result = runner.invoke(args=['groupoid', 'compose', graph, 'a[{3}];1;e[{3}]', 'e[{3}];-1;a[{3}]'])
  assert result.stdout == 'a[{3}];0;a[{3}]\n'
  result = runner.invoke(args=['groupoid', 'inverse', graph, 'a[{3}];1;e[{3}]'])
  assert result.stdout == 'e[{3}];-1;a[{3}]\n'


def test_sigma(runner):
  result = runner.invoke(args=['sigma', data_file('g3.json'), 'ab[{3}]'])
  assert result.stdout == 'b[{3}]\n'
  result = runner.invoke(args=['sigma', data_file('g3.json'), 'ab[{3}]', '--power', '2'])
  assert result.stdout == 'e[{3}]\n'


def test_algebra_commands(runner):
  graph = data_file('g3.json')
  result = runner.invoke(args=['algebra', 'mul', graph, 'P{2}', 'S{b}'])
  assert result.stdout == '(b,{3},e)\n'
  result = runner.invoke(args=['algebra', 'mul', graph, 'P{3}', 'S{b}'])
  assert result.stdout == '0\n'
  result = runner.invoke(args=['algebra', 'equal', graph, 'P{2}', 'S{b}P{3}S{b}*'])
  assert result.stdout == 'true\n'


def test_verify(runner):
  result = runner.invoke(args=['verify', data_file('g3.json'), '--depth', '2', '--trials', '20'])
  assert result.exit_code == 0, result.stdout
  assert result.stdout.splitlines()[-1].endswith('properties OK')


@pytest.mark.parametrize('args, message', [
  (['family', data_file('unknown_vertex.json')], "edges-1-dst: unknown vertex '9'"),
  (['family', data_file('broken.json')], 'JSON'),
  (['validate', data_file('not_closed.json')], 'is missing'),
  (['sigma', data_file('g3.json'), 'e[{3}]'], 'σ'),
  (['groupoid', 'compose', data_file('g3.json'), 'a[{3}];1;e[{3}]', 'a[{3}];1;e[{3}]'], 'composable'),
  (['semigroup', 'mul', data_file('g3.json'), '(a,{1},a)', '0'], 'Error'),
])
def test_input_errors(runner, args, message):
  result = runner.invoke(args=args)
  assert result.exit_code == 2
  assert message in result.stderr
  assert result.stdout == ''


def test_unknown_log_level_falls_back_to_warning():
  app = create_app({'LOG_LEVEL': 'verbose'})
  assert app.config['LOG_LEVEL'] == 'WARNING'
  assert app.logger.level == logging.WARNING


def test_unknown_command(runner):
  result = runner.invoke(args=['no-such-command'])
  assert result.exit_code == 2
