import json
from dataclasses import replace

import pytest
from dacite import DaciteError

from ...algos import ConfigurationError
from ...data_classes import AlgorithmId, ProblemSpec, RunConfig
from ...harness import (apply_overrides, config_to_dict, default_run_config, effective_algo_config, load_run_config,
                        run_config_from_dict, validate_run_config)


def test_overrides_replace_only_given_values(run_config: RunConfig):
    cfg = apply_overrides(run_config, problem='p6', algo='mfea', seed=11, evals=900, k=3, n=4, rmp=0.5, dim=7,
                          tasks=9, repeats=5, out='/tmp/elsewhere')
    assert cfg.problem == ProblemSpec(set_id='P6', dim=7, seed=1, n_tasks=9)
    assert cfg.algo.algorithm == AlgorithmId.MFEA
    assert (cfg.algo.seed, cfg.algo.K, cfg.algo.N, cfg.algo.rmp) == (11, 3, 4, 0.5)
    assert (cfg.repeats, cfg.max_evals_per_task, cfg.output_dir) == (5, 900, '/tmp/elsewhere')
    assert cfg.algo.pop_size_per_task == run_config.algo.pop_size_per_task

    assert apply_overrides(run_config) == run_config
    assert run_config.algo.algorithm == AlgorithmId.EMATO_MKT


def test_problem_file_override(run_config: RunConfig):
    cfg = apply_overrides(run_config, problem='sets/mixed.json')
    assert cfg.problem.path == 'sets/mixed.json'
    assert apply_overrides(cfg, problem='P2').problem.path is None


def test_unknown_algorithm_override(run_config: RunConfig):
    with pytest.raises(ConfigurationError):
        apply_overrides(run_config, algo='cmaes')


def test_effective_algo_config(run_config: RunConfig):
    cfg = replace(run_config, max_evals_per_task=1234)
    algo = effective_algo_config(cfg, repeat=3)
    assert algo.seed == run_config.algo.seed + 3
    assert algo.max_evals_per_task == 1234
    assert algo.K == run_config.algo.K


def test_valid_configuration_returns_problem(run_config: RunConfig):
    problem = validate_run_config(run_config)
    assert problem.fingerprint() == 'P4/d5/s1/n6'


@pytest.mark.parametrize('changes', [
    {'repeats': 0},
    {'problem': ProblemSpec(set_id='P11', dim=5, seed=1, n_tasks=6)},
    {'problem': ProblemSpec(set_id='P4', dim=0, seed=1, n_tasks=6)},
    {'problem': ProblemSpec(set_id='P9', dim=5, seed=1, n_tasks=4)},
    {'problem': ProblemSpec(path='/does/not/exist.json')},
    {'max_evals_per_task': 10},
])
def test_invalid_run_configuration(run_config: RunConfig, changes: dict):
    with pytest.raises(ConfigurationError):
        validate_run_config(replace(run_config, **changes))


def test_invalid_algorithm_values_are_reported(run_config: RunConfig):
    with pytest.raises(ConfigurationError):
        validate_run_config(replace(run_config, algo=replace(run_config.algo, N=6)))
    with pytest.raises(ConfigurationError):
        validate_run_config(replace(run_config, algo=replace(run_config.algo, rmp=-0.1)))


def test_config_file_roundtrip(run_config: RunConfig, tmp_path):
    file_path = tmp_path / 'config.json'
    file_path.write_text(json.dumps(config_to_dict(run_config)))
    assert load_run_config(str(file_path)) == run_config
    assert config_to_dict(run_config)['algo']['algorithm'] == 'EMATO_MKT'


def test_partial_config_uses_defaults():
    cfg = run_config_from_dict({'problem': {'set_id': 'P3'}, 'algo': {'algorithm': 'MATDE', 'seed': 4}})
    assert cfg.algo.algorithm == AlgorithmId.MATDE
    assert cfg.problem.dim == 20 and cfg.repeats == 10 and cfg.max_evals_per_task == 20_000
    assert default_run_config(AlgorithmId.ST_DE, 9).algo.seed == 9


def test_broken_config_files(tmp_path):
    with pytest.raises(ConfigurationError):
        load_run_config(str(tmp_path / 'missing.json'))
    (tmp_path / 'broken.json').write_text('{"problem": ')
    with pytest.raises(ConfigurationError):
        load_run_config(str(tmp_path / 'broken.json'))
    (tmp_path / 'unknown.json').write_text('{"problem": {}, "algo": {"algorithm": "MFEA"}, "budget": 3}')
    with pytest.raises(DaciteError):
        load_run_config(str(tmp_path / 'unknown.json'))
    (tmp_path / 'algorithm.json').write_text('{"problem": {}, "algo": {"algorithm": "GA"}}')
    with pytest.raises((DaciteError, ValueError)):
        load_run_config(str(tmp_path / 'algorithm.json'))
