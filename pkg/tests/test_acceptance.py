"""The acceptance battery, asserted criterion by criterion.

Runs the shared suite once per session and prints one pass/fail line per
criterion.  Criterion 8 is expected to fail: its bounded free-product
certificate at syllable length 8 finds a genuine relation in the rank-5
pull-back (the fiber product is not the claimed free product); the relation
itself is pinned by a dedicated test below.  Everything else must pass.
"""

import pytest

from gquot.suite import run_all

SEED = 0


@pytest.fixture(scope="module")
def battery():
    results, report = run_all(seed=SEED)
    for r in results:
        print(r.line())
    return {r.number: r for r in results}, report


def _assert_criterion(battery, number):
    results, _ = battery
    r = results[number]
    print(r.line())
    assert r.passed, "\n".join(f"{k}: {v}" for k, v in r.records)


def test_criterion_1_reconstruction(battery):
    _assert_criterion(battery, 1)
    results, _ = battery
    assert int(dict(results[1].records)["cases"]) >= 300


def test_criterion_2_quotient_equidimensionality(battery):
    _assert_criterion(battery, 2)


def test_criterion_3_crossed_product_iff_lagrangian(battery):
    _assert_criterion(battery, 3)


def test_criterion_4_maximal_elementary_uniqueness(battery):
    _assert_criterion(battery, 4)
    results, _ = battery
    recs = dict(results[4].records)
    assert "C4xC4.quotient_types" in recs


def test_criterion_5_doubly_nondegenerate(battery):
    _assert_criterion(battery, 5)
    results, _ = battery
    assert int(dict(results[5].records)["doubly_nondegenerate_cases"]) >= 20


def test_criterion_6_cube_free_law(battery):
    _assert_criterion(battery, 6)


def test_criterion_7_rank4_presentation(battery):
    _assert_criterion(battery, 7)
    results, _ = battery
    recs = dict(results[7].records)
    assert recs["admissible_triples_len6"] == "52/52 expressed"


@pytest.mark.xfail(
    strict=True,
    reason=(
        "source defect: the rank-5 common-quotient pull-back is not the claimed "
        "free product; the length-8 certificate finds an explicit relation "
        "(see notes ledger); all other rank-5 checks pass"
    ),
)
def test_criterion_8_rank5_presentation(battery):
    _assert_criterion(battery, 8)


def test_criterion_8_attainable_parts(battery):
    """Everything in criterion 8 except the free-product certificate holds."""
    results, _ = battery
    recs = dict(results[8].records)
    assert recs["admissible_tuples_len4"] == "404/404 expressed"
    for name in (
        "central_element_identity",
        "central_element_commutes",
        "central_element_order_2",
        "zbar6_wbar2",
        "kernel_b_squared",
        "h5_meets_center_trivially",
        "beta5_kernel",
    ):
        assert recs[name].startswith("pass"), name
    assert recs["q5_free_product"].startswith("FAIL")
    assert "alternating relation found" in recs["q5_free_product"]


def test_criterion_9_diagonal_maxima(battery):
    _assert_criterion(battery, 9)


def test_criterion_10_iyb_witnesses(battery):
    _assert_criterion(battery, 10)
    results, _ = battery
    assert dict(results[10].records)["inconclusive"] == "0"


def test_criterion_11_determinism(battery):
    _assert_criterion(battery, 11)


def test_report_is_reproducible(battery):
    _, report = battery
    assert report.startswith(f"seed: {SEED}")
    assert "criterion 11 [determinism]: PASS" in report
