import functools

import pytest

from avcodes.config import load_fixture
from avcodes.decoder import build_tables
from avcodes.ideals import decoding_basis

ALL_FIXTURES = ["hermitian_q2", "degenere1", "degenere2", "sdg_curve", "sdg_surface1",
                "sdg_surface2", "norm_trace"]
T1_FIXTURES = ["sdg_curve", "sdg_surface1", "sdg_surface2", "norm_trace"]


@functools.lru_cache(maxsize=None)
def config(name):
    return load_fixture(name)


@functools.lru_cache(maxsize=None)
def star_spec(name):
    return config(name).spec(variant="STAR")


@functools.lru_cache(maxsize=None)
def tables(name, flavor="stuffed", variant="STAR"):
    cc = config(name)
    spec = star_spec(name) if variant == "STAR" else cc.spec(variant=variant)
    return build_tables(spec, flavor)


@pytest.fixture(scope="session")
def herm():
    return config("hermitian_q2")


@pytest.fixture(scope="session")
def herm_spec():
    spec = star_spec("hermitian_q2")
    decoding_basis(spec)
    return spec


@pytest.fixture(scope="session")
def herm_stuffed():
    return tables("hermitian_q2", "stuffed")


@pytest.fixture(scope="session")
def herm_weak():
    return tables("hermitian_q2", "weak")


# criterion number -> (ok, detail); filled by test_acceptance.py
ACCEPTANCE: dict = {}


def record(n, ok, detail=""):
    ACCEPTANCE[n] = (ok, detail)
    print(f"criterion {n}: {'PASS' if ok else 'FAIL'} {detail}".rstrip())
    return ok


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"criterion {n}: {'PASS' if ok else 'FAIL'}  {detail}".rstrip())
