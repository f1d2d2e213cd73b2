import dataclasses

import numpy as np
import pytest

from hexreg.cli import RunConfig, build_exo, build_plant
from hexreg.synthesis import synthesize

BENCH_LY = np.array([0.1, 1.0])


@pytest.fixture(scope="session")
def bench_rc():
    return RunConfig()


@pytest.fixture(scope="session")
def bench_cfg(bench_rc):
    return build_plant(bench_rc)


@pytest.fixture(scope="session")
def bench_exo(bench_rc):
    return build_exo(bench_rc)


@pytest.fixture(scope="session")
def bench_params(bench_cfg, bench_exo):
    return synthesize(bench_cfg, bench_exo, ly_candidate=BENCH_LY)


@pytest.fixture(scope="session")
def cfg_at():
    """Benchmark plant at an arbitrary resolution (with optional overrides)."""
    def make(n, **overrides):
        return build_plant(dataclasses.replace(RunConfig(), n_grid=n, **overrides))
    return make


@pytest.fixture(scope="session")
def params_at(bench_exo, cfg_at):
    """Benchmark synthesis at an arbitrary resolution, cached per grid."""
    cache = {}

    def make(n):
        if n not in cache:
            cache[n] = synthesize(cfg_at(n), bench_exo, ly_candidate=BENCH_LY)
        return cache[n]

    return make
