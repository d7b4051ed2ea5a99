"""Skew group algebras, invariant subalgebras and Clifford theory checks.

Jobs and reports are exchanged as JSON; the helpers here decode them into dicts.
"""

import json

from ._core import (
    DEFAULT_SEED,
    DEFAULT_TOL,
    SkewgroupError,
    eig_hermitian,
    fixture_names,
    nullspace,
    rank,
    task_names,
)
from . import _core

__all__ = [
    "DEFAULT_SEED",
    "DEFAULT_TOL",
    "SkewgroupError",
    "eig_hermitian",
    "fixture",
    "fixture_names",
    "nullspace",
    "random_instance",
    "rank",
    "run",
    "task_names",
    "validate",
]


def _text(job):
    return job if isinstance(job, str) else json.dumps(job)


def fixture(name, tol=DEFAULT_TOL, seed=DEFAULT_SEED):
    return json.loads(_core.fixture_json(name, tol, seed))


def random_instance(seed):
    return json.loads(_core.random_instance_json(seed))


def validate(job):
    """Summary of a parsed job; raises SkewgroupError on the first problem."""
    return json.loads(_core.validate_json(_text(job)))


def run(job, tol=None, seed=None, tasks=(), timing=False):
    return json.loads(_core.run_json(_text(job), tol, seed, list(tasks), timing))
