import re


def pytest_terminal_summary(terminalreporter):
    from test_acceptance import CRITERIA

    verdicts = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            m = re.search(r"test_acceptance\.py::test_criterion_(\d+)", getattr(rep, "nodeid", ""))
            if not m or rep.when not in ("call", "setup"):
                continue
            n = int(m.group(1))
            ok = status == "passed"
            verdicts[n] = verdicts.get(n, True) and ok
    if not verdicts:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(CRITERIA):
        if n in verdicts:
            word = "PASS" if verdicts[n] else "FAIL"
            terminalreporter.write_line(f"{word}  criterion {n}: {CRITERIA[n]}")
