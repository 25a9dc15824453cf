"""The catalog fact suite: everything passes, and sabotage is detected."""

from dataclasses import replace

from partialmetric import MapSpec, get_entry
from partialmetric.facts import run_fact_suite


def test_every_fact_passes():
    suite = run_fact_suite()
    failing = [r for r in suite.results if not r.ok]
    assert not failing, failing
    assert suite.passed >= 50


def test_results_carry_anchors_and_ids():
    suite = run_fact_suite(["ex5.8"])
    assert all(r.fact_id.startswith("ex5.8/") for r in suite.results)
    assert all(r.anchor for r in suite.results)


def test_identity_map_sabotage_fails_fixed_point_facts():
    entry = get_entry("ex5.4")
    sabotaged = replace(entry, maps=(("ex5.4.T", MapSpec("ex5.4.T", lambda x: x)),))
    suite = run_fact_suite(["ex5.4"], overrides={"ex5.4": sabotaged})
    failed = {r.fact_id for r in suite.results if not r.ok}
    # the identity fixes every sample point, so the declared fixed-point set
    # and the orbit facts must break
    assert "ex5.4/fixed-points" in failed
    assert "ex5.4/iterate-0-to-1" in failed


def test_empty_selection_is_vacuous():
    suite = run_fact_suite([])
    assert suite.ok and suite.passed == 0 and suite.failed == 0
