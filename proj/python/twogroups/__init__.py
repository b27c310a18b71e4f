"""2-generator class-2 2-groups with cyclic center: Q1(n,r), Q2(n,r), R3(n)."""

import json

from ._core import *  # noqa: F401,F403
from ._core import check_witness_json, info_json, oracle_json, sweep_json


def info(group):
    return json.loads(info_json(group))


def sweep(families=("Q1", "Q2", "R3"), max_order=4096, mode="pruned", jobs=1, timing=True):
    return json.loads(sweep_json(list(families), max_order, mode, jobs, timing))


def check_witness(case, group, m=0, s=0):
    return json.loads(check_witness_json(case, group, m, s))


def oracle(max_order=512, seed=1, jobs=1):
    return json.loads(oracle_json(max_order, seed, jobs))
