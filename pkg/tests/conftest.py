import os

import pytest
from hypothesis import settings

from folkman.arrowing import AUDIT

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "default"))

ACCEPTANCE_LINES: list[str] = []


def pytest_collection_modifyitems(session, config, items):
    # Acceptance criteria run last so the witness audit covers the whole run.
    items.sort(key=lambda item: item.nodeid.startswith("tests/test_acceptance.py"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def pytest_sessionfinish(session, exitstatus):
    # Every witness produced anywhere in the run went through the validator.
    if AUDIT["failed"]:
        session.exitstatus = 1
        print(f"\nwitness audit: {AUDIT['failed']} of {AUDIT['checked']} witnesses rejected")


@pytest.fixture(scope="session", autouse=True)
def warm_kernels():
    """Compile (or load from cache) the numba kernels once, outside any timing."""
    from folkman import build
    from folkman.arrowing import brute_force_free_colorings, solve

    g = build("K3")
    solve(g, 3, 3, engine="both")
    brute_force_free_colorings(g, 3, 3)
