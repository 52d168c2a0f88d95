import pytest
from hypothesis import strategies as st

from privwords.generators import thue_morse_prefix


def words(alphabet="01", max_size=40, min_size=0):
    return st.text(alphabet=alphabet, min_size=min_size, max_size=max_size)


@pytest.fixture(scope="session")
def tm_prefix():
    return thue_morse_prefix(1 << 14)


def pytest_terminal_summary(terminalreporter):
    lines = []
    for outcome in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(outcome, []):
            if "test_acceptance.py::" in getattr(rep, "nodeid", "") and rep.when == "call":
                name = rep.nodeid.split("::")[-1]
                detail = "; ".join(str(v) for k, v in rep.user_properties if k == "detail")
                lines.append((name, "PASS" if outcome == "passed" else "FAIL", detail))
    if lines:
        terminalreporter.section("acceptance criteria")
        for name, verdict, detail in sorted(lines):
            terminalreporter.write_line(f"{verdict}  {name}" + (f"  [{detail}]" if detail else ""))
