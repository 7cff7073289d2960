import os
import subprocess
import sys

import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from listaccess import Algorithm, _backend, access_positions, total_cost
from oracle import naive_serve

CODES = {"mtf": 0, "transpose": 1, "fc": 2}


@st.composite
def dense_instances(draw):
    l = draw(st.integers(1, 10))
    order = draw(st.permutations(list(range(l))))
    requests = draw(st.lists(st.integers(0, l - 1), min_size=1, max_size=40))
    return list(order), requests


@settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.function_scoped_fixture])
@given(dense_instances(), st.sampled_from(sorted(CODES)))
def test_kernel_matches_oracle(kernels, inst, algo):
    order, requests = inst
    costs, lists = naive_serve(order, requests, algo)
    positions, final = kernels.serve_positions(order, requests, CODES[algo])
    assert positions == costs
    assert tuple(final) == lists[-1]
    assert kernels.total_positions(order, requests, CODES[algo]) == sum(costs)


def test_kernel_leaves_input_alone(kernels):
    order = [2, 0, 1]
    kernels.serve_positions(order, [1, 1, 0], 0)
    assert order == [2, 0, 1]


def test_kernel_rejects_unknown_algorithm(kernels):
    with pytest.raises(ValueError):
        kernels.serve_positions([0, 1], [1], 7)


def test_backends_agree_on_long_sequence():
    names = _backend.available()
    if len(names) < 2:
        pytest.skip("compiled kernels not built")
    import random

    rng = random.Random(7)
    order = list(range(50))
    requests = [rng.randrange(50) for _ in range(5000)]
    results = {
        name: [_backend.load(name).serve_positions(order, requests, c) for c in CODES.values()]
        for name in names
    }
    assert results["cython"] == results["python"]


@pytest.mark.parametrize("name", _backend.available())
def test_public_api_accepts_explicit_backend(name):
    k = _backend.load(name)
    assert total_cost("ABCD", "CAADB", kernels=k) == 14
    positions, final = access_positions("ABCD", "CAADB", Algorithm.MTF, kernels=k)
    assert positions == [3, 2, 1, 4, 4]
    assert final.elements == tuple("BDAC")


def test_env_var_forces_pure_python():
    env = dict(os.environ, LISTACCESS_PURE_PYTHON="1")
    out = subprocess.run(
        [sys.executable, "-c", "import listaccess; print(listaccess.BACKEND)"],
        env=env, capture_output=True, text=True, check=True,
    )
    assert out.stdout.strip() == "python"
