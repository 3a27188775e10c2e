import sys


def pytest_terminal_summary(terminalreporter):
    mods = [m for name, m in sys.modules.items() if name.endswith("test_acceptance") and hasattr(m, "RESULTS")]
    if not mods or not mods[0].RESULTS:
        return
    mod = mods[0]
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.line(k))
