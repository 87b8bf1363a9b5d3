import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from arglab import constructions as C  # noqa: E402

TAYLOR_BD = [("paley", 5), ("paley", 9), ("paley", 13), ("paley", 17), ("paley", 25), ("peisert", 9)]
IM = [7, 11, 19, 23]


@pytest.fixture(scope="session")
def pipeline_graphs():
    """All pipeline instances with q <= 25, keyed by (family, q)."""
    out = {}
    for kind, q in TAYLOR_BD:
        out[(f"taylor-{kind}", q)] = C.taylor_bd_pipeline(kind, q)
    for q in IM:
        out[("im", q)] = C.im_pipeline(q)
    return out


_criteria: dict[int, list[str]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    marker = next((m for m in report.keywords if m.startswith("criterion_")), None)
    if marker is None:
        return
    _criteria.setdefault(int(marker.split("_")[1]), []).append(report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _criteria:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(_criteria):
        outcomes = _criteria[n]
        verdict = "PASS" if all(o == "passed" for o in outcomes) else "FAIL"
        terminalreporter.write_line(f"criterion {n}: {verdict} ({len(outcomes)} checks)")


def pytest_configure(config):
    for n in range(1, 9):
        config.addinivalue_line("markers", f"criterion_{n}: acceptance criterion {n}")
