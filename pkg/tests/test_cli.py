"""Tests for the command-line front end."""
import json

import pytest

from app.api.cli import cli, run
from app.models import OutputEnvelope


def invoke_json(runner, *args, env=None):
    result = runner.invoke(cli, ['--json', *args], env=env)
    return result, json.loads(result.output)


class TestCapacityCommand:

    def test_mixed_moore_space(self, runner):
        result, data = invoke_json(runner, 'capacity', 'M(Z_2^2 + Z_3 + Z^2, 4)')
        assert result.exit_code == 0
        assert data['status'] == 'ok'
        assert data['command'] == 'capacity'
        assert data['input'] == 'M(Z_2^2 + Z_3 + Z^2, 4)'
        assert data['result']['capacity'] == 18
        assert data['error'] is None

    def test_human_output_has_the_same_number(self, runner):
        result = runner.invoke(cli, ['capacity', 'pt'])
        assert result.exit_code == 0
        assert 'capacity: 1' in result.output

    def test_infinite(self, runner):
        result, data = invoke_json(runner, 'capacity', 'M(Z^inf, 2)')
        assert result.exit_code == 0
        assert data['result']['capacity'] == 'inf'

    def test_unknown_is_an_answer(self, runner):
        result, data = invoke_json(runner, 'capacity', 'S^1 v S^2')
        assert result.exit_code == 0
        assert data['result']['capacity'] is None
        assert data['result']['reason'] == 'open-problem'

    def test_require_finite(self, runner):
        result = runner.invoke(cli, ['capacity', 'S^1 v S^2', '--require-finite'])
        assert result.exit_code == 2
        assert 'open-problem' in result.output
        assert runner.invoke(cli, ['capacity', 'S^3', '--require-finite']).exit_code == 0

    def test_parse_error(self, runner):
        result, data = invoke_json(runner, 'capacity', 'M(Z, 1)')
        assert result.exit_code == 1
        assert data['status'] == 'error'
        assert data['result'] is None
        assert data['error']['code'] == 'parse-error'
        assert data['error']['offset'] == 5

    def test_parse_error_human(self, runner):
        result = runner.invoke(cli, ['capacity', 'S^2 v ?'])
        assert result.exit_code == 1
        assert 'parse-error' in result.output
        assert 'byte 6' in result.output

    def test_envelope_round_trips(self, runner):
        result = runner.invoke(cli, ['--json', 'capacity', 'T^2'])
        envelope = OutputEnvelope.model_validate_json(result.output)
        assert envelope.result['capacity'] == 3
        assert OutputEnvelope.model_validate_json(envelope.model_dump_json()) == envelope


class TestSpaceCommands:

    def test_dominated(self, runner):
        result, data = invoke_json(runner, 'dominated', 'S^2 v S^5')
        assert result.exit_code == 0
        assert data['result'] == {'count': 4, 'types': ['pt', 'S^2', 'S^5', 'S^2 v S^5']}

    def test_dominated_needs_finite_capacity(self, runner):
        result, data = invoke_json(runner, 'dominated', 'M(Z^inf, 2)')
        assert result.exit_code == 2
        assert data['error']['code'] == 'unsupported'

    def test_normalize(self, runner):
        result, data = invoke_json(runner, 'normalize', 'S^1 v S^1')
        assert result.exit_code == 0
        assert data['result']['kind'] == 'em-product'
        assert data['result']['degrees'] == {'1': 'Z^2'}
        assert data['result']['circle_wedge'] is True

    def test_homology_table(self, runner):
        result, data = invoke_json(runner, 'homology', 'S^2 v S^2 v M(Z_4, 3)', '--max-degree', '4')
        assert result.exit_code == 0
        assert data['result']['groups'] == {'1': '0', '2': 'Z^2', '3': 'Z_4', '4': '0'}

    def test_homotopy_table(self, runner):
        result, data = invoke_json(runner, 'homotopy', 'T^2 x K(Z_6, 3)', '--max-degree', '3')
        assert result.exit_code == 0
        assert data['result']['groups'] == {'1': 'Z^2', '2': '0', '3': 'Z_2 + Z_3'}

    def test_homotopy_of_moore_space_is_unsupported(self, runner):
        result = runner.invoke(cli, ['homotopy', 'S^2'])
        assert result.exit_code == 2

    def test_pp_form(self, runner):
        result, data = invoke_json(runner, 'pp-form', 'M(Z_6, 2)')
        assert result.exit_code == 0
        assert data['result']['form'] == 'susp^1(P_2 v P_3)'


class TestGroupCommands:

    def test_summands(self, runner):
        result, data = invoke_json(runner, 'summands', 'Z_2^2')
        assert result.exit_code == 0
        assert data['result']['count'] == 3
        assert data['result']['classes'] == ['0', 'Z_2', 'Z_2^2']

    def test_summands_with_oracle(self, runner):
        result, data = invoke_json(runner, 'summands', 'Z_6', '--oracle')
        assert result.exit_code == 0
        assert data['result']['count'] == data['result']['oracle_count'] == 4

    def test_summands_of_infinite_rank(self, runner):
        result, data = invoke_json(runner, 'summands', 'Z^inf')
        assert data['result']['count'] == 'inf'
        assert data['result']['classes'] is None

    def test_group_from_presentation(self, runner):
        result, data = invoke_json(runner, 'group', '--presentation',
                                   '{"generators": 2, "relations": [[2, 4], [4, 4]]}')
        assert result.exit_code == 0
        assert data['result']['group'] == 'Z_2 + Z_4'
        assert data['result']['invariant_factors'] == [2, 4]
        assert data['result']['order'] == 8

    def test_group_literal(self, runner):
        result = runner.invoke(cli, ['group', 'Z_6 + Z'])
        assert result.exit_code == 0
        assert 'Z_2 + Z_3 + Z' in result.output
        assert 'invariant factors: [6]' in result.output

    def test_group_needs_one_input(self, runner):
        assert runner.invoke(cli, ['group']).exit_code == 2

    def test_idempotents_torus(self, runner):
        result, data = invoke_json(runner, 'idempotents', 'Z^2')
        assert result.exit_code == 0
        assert data['result']['count'] == 'inf'
        assert data['result']['em_capacity'] == 3
        assert data['result']['bound_holds'] is None
        assert data['result']['witness']['verified'] is True

    def test_idempotents_finite(self, runner):
        result, data = invoke_json(runner, 'idempotents', 'Z_4')
        assert data['result']['count'] == 2
        assert data['result']['em_capacity'] == 2
        assert data['result']['bound_holds'] is True

    def test_oracle_cap_flag(self, runner):
        result, data = invoke_json(runner, '--oracle-cap', '2', 'idempotents', 'Z_2^2')
        assert result.exit_code == 3
        assert data['error']['code'] == 'resource-limit'

    def test_oracle_cap_env(self, runner):
        result = runner.invoke(cli, ['summands', 'Z_4', '--oracle'], env={'CAPAX_ORACLE_CAP': '2'})
        assert result.exit_code == 3


class TestVerifyCommand:

    def test_up_to_32(self, runner):
        result, data = invoke_json(runner, 'verify', '--max-order', '32')
        assert result.exit_code == 0
        assert data['result']['checked'] == 55
        assert data['result']['failed'] == 0
        assert data['result']['all_pass'] is True
        orders = [row['order'] for row in data['result']['groups']]
        assert orders == sorted(orders)

    def test_human_report(self, runner):
        result = runner.invoke(cli, ['verify', '--max-order', '4', '--show-classes'])
        assert result.exit_code == 0
        assert 'checked 5 groups: 5 passed, 0 failed' in result.output
        assert 'PASS  Z_2^2  formula=3 oracle=3  [0, Z_2, Z_2^2]' in result.output

    def test_above_cap(self, runner):
        result = runner.invoke(cli, ['verify', '--max-order', '100'])
        assert result.exit_code == 3


class TestRun:

    @pytest.mark.parametrize('argv, code', [
        (['capacity', 'pt'], 0),
        (['capacity', 'M(Z, 1)'], 1),
        (['capacity', 'S^1 v S^2', '--require-finite'], 2),
        (['--oracle-cap', '2', 'summands', 'Z_4', '--oracle'], 3),
        (['no-such-command'], 2),
        (['--help'], 0),
    ])
    def test_exit_codes(self, argv, code):
        assert run(argv) == code

    def test_json_after_the_subcommand(self, capsys):
        assert run(['capacity', 'M(Z_2^2 + Z_3 + Z^2, 4)', '--json']) == 0
        data = json.loads(capsys.readouterr().out)
        assert data['status'] == 'ok'
        assert data['result']['capacity'] == 18

    def test_oracle_cap_after_the_subcommand(self, capsys):
        assert run(['verify', '--max-order', '4', '--oracle-cap', '64']) == 0
        assert 'checked 5 groups' in capsys.readouterr().out
        assert run(['summands', 'Z_4', '--oracle', '--oracle-cap', '2']) == 3

    def test_subcommand_cap_overrides_group_cap(self, runner):
        result = runner.invoke(cli, ['--oracle-cap', '2', 'idempotents', 'Z_2^2', '--oracle-cap', '64', '--json'])
        assert result.exit_code == 0
        assert json.loads(result.output)['result']['count'] == 8
