from hypothesis import strategies as st

from gaussforms.gaussian import GaussianInt

ACCEPTANCE_LINES: list[str] = []


def gaussian_ints(bound=10**6, nonzero=False):
    s = st.builds(GaussianInt, st.integers(-bound, bound), st.integers(-bound, bound))
    if nonzero:
        s = s.filter(lambda z: not z.is_zero())
    return s


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
