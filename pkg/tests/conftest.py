import pytest


@pytest.fixture(scope="session")
def full_battery():
    """One full battery run shared by the acceptance criteria."""
    from exporlicz.battery import run_battery

    checks, ok = run_battery(p_filter=None, seed=0)
    return {c.name: c for c in checks}, ok
