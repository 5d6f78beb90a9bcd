from __future__ import annotations

import time

import pytest

from nlbvp import oracles, rayleigh


@pytest.fixture(scope="session")
def exact_table_40() -> rayleigh.RayleighTable:
    return rayleigh.power_sums_recursion(40)


@pytest.fixture(scope="session")
def nystrom_study() -> dict:
    """Trace-power reports for the refinement ladder, shared across modules.

    The N = 4096 pair is timed so the acceptance suite can assert its runtime
    without recomputing two 4096^3 matrix products.
    """
    reports = {}
    elapsed_4096 = 0.0
    for n in (512, 1024, 2048, 4096):
        start = time.perf_counter()
        for p in (2, 3):
            reports[(n, p)] = oracles.nystrom_trace_power(n, p)
        if n == 4096:
            elapsed_4096 = time.perf_counter() - start
    reports["elapsed_4096"] = elapsed_4096
    return reports
