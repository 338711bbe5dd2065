"""Collects acceptance verdicts and prints one line per criterion at the end of the run."""

ACCEPTANCE: dict[int, tuple[str, bool, str]] = {}


def record(number: int, name: str, ok: bool, detail: str = "") -> bool:
    ACCEPTANCE[number] = (name, bool(ok), detail)
    print(f"ACCEPTANCE {number:2d} {'PASS' if ok else 'FAIL'}: {name}" + (f" ({detail})" if detail else ""))
    return bool(ok)


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(ACCEPTANCE):
        name, ok, detail = ACCEPTANCE[n]
        terminalreporter.write_line(f"{n:2d}. {'PASS' if ok else 'FAIL'}  {name}" + (f"  [{detail}]" if detail else ""))
