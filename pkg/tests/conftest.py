import pytest

_ACCEPTANCE: list[str] = []


class Criterion:
    def __init__(self, label: str):
        self.label = label
        self.line: str | None = None

    def check(self, ok: bool, detail: str) -> None:
        self.line = f"{'PASS' if ok else 'FAIL'} {self.label}: {detail}"
        assert ok, self.line


@pytest.fixture
def criterion(request):
    marker = request.node.get_closest_marker("criterion")
    rec = Criterion(marker.args[0] if marker else request.node.name)
    yield rec
    _ACCEPTANCE.append(rec.line or f"FAIL {rec.label}: raised before completing")


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion reported in the summary")


def pytest_terminal_summary(terminalreporter):
    if _ACCEPTANCE:
        terminalreporter.section("acceptance criteria")
        for line in sorted(_ACCEPTANCE, key=lambda s: int(s.split()[1].rstrip(".:"))):
            terminalreporter.write_line(line)
