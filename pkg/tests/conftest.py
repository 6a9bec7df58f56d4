import re

import pytest

from skewcoh.ffmat import available_backends, get_backend, set_backend

_CRITERION = re.compile(r"test_criterion_(\d+)_")


@pytest.fixture(params=available_backends())
def backend(request):
    """Run a test once per available row-reduction kernel."""
    old = get_backend()
    set_backend(request.param)
    yield request.param
    set_backend(old)


def pytest_terminal_summary(terminalreporter):
    results: dict[int, tuple[str, bool]] = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py" not in nodeid or rep.when not in ("call", "setup"):
                continue
            m = _CRITERION.search(nodeid)
            if not m:
                continue
            k = int(m.group(1))
            name = nodeid.split("::")[-1].split("[")[0]
            ok = status == "passed" and results.get(k, (name, True))[1]
            results[k] = (name, ok)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(results):
        name, ok = results[k]
        terminalreporter.write_line(f"criterion {k:>2}: {'PASS' if ok else 'FAIL'}  {name}")
