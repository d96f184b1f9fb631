import pytest

from qdepth.errors import SelftestFailedError
from qdepth.selftest import (
    SelftestCheck,
    SelftestRegistry,
    SelftestStatus,
    build_registry,
    run_selftest,
)
from qdepth.selftest.checks import GOLDEN, PROPERTY, SCAN


def test_check_run_success():
    check = SelftestCheck("ok", lambda: {"cases": 3}, tags=["t"])
    result = check.run()
    assert result["name"] == "ok"
    assert result["status"] == SelftestStatus.PASS
    assert result["details"] == {"cases": 3}
    assert result["tags"] == ["t"]


def test_check_run_library_failure():
    def fail():
        raise SelftestFailedError("mismatch", details={"expected": 1})

    result = SelftestCheck("fail", fail).run()
    assert result["status"] == SelftestStatus.FAIL
    assert result["details"]["error"] == "mismatch"
    assert result["details"]["code"] == "SELFTEST_FAILED"
    assert result["details"]["expected"] == "1"


def test_check_run_crash():
    def crash():
        raise ZeroDivisionError("boom")

    result = SelftestCheck("crash", crash).run()
    assert result["status"] == SelftestStatus.FAIL
    assert result["details"]["code"] == "INTERNAL_ERROR"
    assert "boom" in result["details"]["error"]


def test_check_returning_none_passes():
    assert SelftestCheck("none", lambda: None).run()["details"] == {}


def test_registry_run_all():
    reg = SelftestRegistry()
    reg.register(SelftestCheck("ok", lambda: {}))
    reg.register(SelftestCheck("bad", lambda: 1 / 0))
    result = reg.run_all()
    assert result["status"] == SelftestStatus.FAIL
    assert (result["passed"], result["failed"]) == (1, 1)
    assert [c["name"] for c in result["checks"]] == ["ok", "bad"]


def test_registry_empty():
    result = SelftestRegistry().run_all()
    assert result["status"] == SelftestStatus.PASS
    assert result["checks"] == []


def test_registry_tag_filter():
    reg = SelftestRegistry()
    reg.register(SelftestCheck("a", lambda: {}, tags=["x"]))
    reg.register(SelftestCheck("b", lambda: {}, tags=["y"]))
    reg.register(SelftestCheck("c", lambda: {}, tags=["x", "y"]))
    result = reg.run_all(["x"])
    assert [c["name"] for c in result["checks"]] == ["a", "c"]


def test_build_registry_names(testing_settings):
    reg = build_registry(testing_settings)
    names = reg.names()
    assert len(names) == len(set(names))
    assert names[0] == "polarization-example"
    assert "oracle-consistency" in names
    assert "e-conjecture-scan" in names
    tags = {tag for check in reg.checks for tag in check.tags}
    assert {GOLDEN, PROPERTY, SCAN} <= tags


def test_golden_checks_pass(testing_settings):
    result = run_selftest(testing_settings, [GOLDEN])
    failed = [c for c in result["checks"] if c["status"] == SelftestStatus.FAIL]
    assert failed == []
    assert result["status"] == SelftestStatus.PASS
    assert result["passed"] == 8


@pytest.mark.parametrize(
    "name",
    [
        "alpha-beta-roundtrip",
        "inclusion-exclusion",
        "extension-shift",
        "colon-invariance",
        "multiplication-invariance",
        "colon-sequence",
    ],
)
def test_scaled_property_checks_pass(testing_settings, name):
    reg = build_registry(testing_settings)
    check = next(c for c in reg.checks if c.name == name)
    result = check.run()
    assert result["status"] == SelftestStatus.PASS, result["details"]


def test_property_checks_are_reproducible(testing_settings):
    def details():
        reg = build_registry(testing_settings)
        check = next(c for c in reg.checks if c.name == "regular-element")
        return check.run()["details"]

    assert details() == details()


@pytest.mark.slow
def test_full_selftest(testing_settings):
    assert run_selftest(testing_settings)["status"] == SelftestStatus.PASS
