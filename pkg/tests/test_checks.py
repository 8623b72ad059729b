import pytest

from grassmann_cosine.cli.checks import SUITE_ALIASES, SUITES, CheckContext, run_suite
from grassmann_cosine.domain.models import QuadratureConfig


@pytest.fixture
def ctx():
    return CheckContext(seed=0, samples=20_000, cfg=QuadratureConfig())


def test_alias_resolves_to_registered_suite(ctx):
    assert set(SUITE_ALIASES.values()) <= set(SUITES)
    rows = run_suite("product_law", ctx)
    assert {r.suite for r in rows} == {"lemma58"}
    assert all(r.passed for r in rows)


@pytest.mark.slow
def test_spectrum_suite_passes(ctx):
    rows = {r.check: r for r in run_suite("spectrum", ctx)}
    assert rows["pole-order table"].residual == 0.0
    assert all(r.passed for r in rows.values()), [r.check for r in rows.values() if not r.passed]
