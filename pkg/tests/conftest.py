import pytest

from dihedral_blocks.group import Params


def grid(max_order: int, n_range=range(3, 9), m_range=range(0, 7)):
    """All (n, m) with 2^(n+m) <= max_order."""
    return [(n, m) for n in n_range for m in m_range if 2 ** (n + m) <= max_order]


CASES = ["aa", "ab", "ba", "bb"]


@pytest.fixture
def d8():
    return Params(3, 0)


@pytest.fixture
def d8c2():
    return Params(3, 1)


# -- acceptance reporting -------------------------------------------------------

_ACCEPTANCE: dict[int, tuple[str, str]] = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "acceptance(number, title): an acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None:
        return
    number, title = marker.args
    failed = rep.failed or (rep.when == "call" and rep.skipped)
    if rep.when == "call" or failed:
        previous = _ACCEPTANCE.get(number, (title, "PASS"))[1]
        status = "FAIL" if failed or previous == "FAIL" else "PASS"
        _ACCEPTANCE[number] = (title, status)
        line = f"acceptance {number:>2} {status}: {title}"
        print("\n" + line, end="")


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(_ACCEPTANCE):
        title, status = _ACCEPTANCE[number]
        terminalreporter.write_line(f"{status} {number:>2}. {title}")
