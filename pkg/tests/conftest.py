import pytest

from qconcept.classicality import Connective, MembershipTriple


def _triple(item, a, b, conn, mu_a, mu_b, mu_c):
    return MembershipTriple(item, a, b, Connective(conn), mu_a, mu_b, mu_c)


@pytest.fixture
def mint():
    return _triple("Mint", "Food", "Plant", "and", 0.87, 0.81, 0.90)


@pytest.fixture
def sunglasses():
    return _triple("Sunglasses", "Sportswear", "Sports Equipment", "or", 0.4, 0.2, 0.1)


@pytest.fixture
def refrigerator():
    return _triple("Refrigerator", "House Furnishings", "Furniture", "or", 0.9, 0.7, 0.575)


@pytest.fixture
def tv():
    return _triple("TV", "Furniture", "Household Appliances", "and", 0.7, 0.9, 0.925)


_acceptance_results: list[tuple[str, str]] = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    label = dict(report.user_properties).get("criterion")
    if label:
        _acceptance_results.append((label, "PASS" if report.passed else "FAIL"))


@pytest.hookimpl(tryfirst=True)
def pytest_runtest_setup(item):
    marker = item.get_closest_marker("criterion")
    if marker:
        item.user_properties.append(("criterion", marker.args[0]))


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.section("acceptance criteria")
    for label, outcome in _acceptance_results:
        terminalreporter.write_line(f"[{outcome}] {label}")
