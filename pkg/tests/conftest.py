import numpy as np
import pytest
from hypothesis import settings

settings.register_profile("hllab", deadline=None, max_examples=60)
settings.load_profile("hllab")


@pytest.fixture
def rng():
    return np.random.default_rng(20240611)


def random_series(rng, deg):
    from hllab import CoefficientSeries

    return CoefficientSeries(rng.standard_normal(deg + 1) + 1j * rng.standard_normal(deg + 1))


# one line per acceptance criterion, printed at the end of the session
ACCEPTANCE_LINES: list[str] = []


def record_criterion(number: int, ok: bool, detail: str) -> None:
    line = f"criterion {number:2d}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.write_sep("-", "acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(line)
