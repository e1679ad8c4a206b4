"""Run configuration parsing and environment overrides."""

from fractions import Fraction

import pytest

from specdom import InvalidArgumentError, RunConfig
from specdom.config import parse_rational


def test_defaults():
    cfg = RunConfig()
    assert cfg.tol == Fraction(1, 10**6)
    assert cfg.max_tree_n == 18
    assert cfg.max_graph_n == 8
    assert cfg.workers == 1
    assert cfg.output_format == "json"
    assert cfg.checkpoint_path is None


def test_validation():
    pytest.raises(InvalidArgumentError, lambda: RunConfig(tol=Fraction(0)))
    pytest.raises(InvalidArgumentError, lambda: RunConfig(max_tree_n=0))
    pytest.raises(InvalidArgumentError, lambda: RunConfig(workers=0))
    pytest.raises(InvalidArgumentError, lambda: RunConfig(output_format="yaml"))


def test_parse_rational():
    assert parse_rational("1/3") == Fraction(1, 3)
    assert parse_rational("0.25") == Fraction(1, 4)
    assert parse_rational("1e-6") == Fraction(1, 10**6)
    assert parse_rational(" 7 ") == 7
    pytest.raises(InvalidArgumentError, lambda: parse_rational("tiny"))
    pytest.raises(InvalidArgumentError, lambda: parse_rational("1/0"))


def test_from_env_reads_prefixed_variables():
    env = {
        "SPECDOM_TOL": "1/1024",
        "SPECDOM_MAX_TREE_N": "12",
        "SPECDOM_MAX_GRAPH_N": "6",
        "SPECDOM_WORKERS": "3",
        "SPECDOM_OUTPUT_FORMAT": "csv",
        "SPECDOM_CHECKPOINT": "/tmp/ck",
        "UNRELATED": "ignored",
    }
    cfg = RunConfig.from_env(env)
    assert cfg.tol == Fraction(1, 1024)
    assert cfg.max_tree_n == 12
    assert cfg.max_graph_n == 6
    assert cfg.workers == 3
    assert cfg.output_format == "csv"
    assert cfg.checkpoint_path == "/tmp/ck"


def test_from_env_overrides_win():
    env = {"SPECDOM_WORKERS": "3"}
    assert RunConfig.from_env(env, workers=5).workers == 5
    assert RunConfig.from_env({}).workers == 1


def test_from_env_rejects_bad_values():
    pytest.raises(
        InvalidArgumentError,
        lambda: RunConfig.from_env({"SPECDOM_WORKERS": "many"}),
    )
    pytest.raises(
        InvalidArgumentError,
        lambda: RunConfig.from_env({"SPECDOM_TOL": "-1/2"}),
    )
