import sys

from matroidlc.matroid import make_graphic, make_linear, make_uniform

K3 = [(0, 1), (1, 2), (0, 2)]
K4 = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def small_matroids():
    """A mixed bag of matroids with n <= 6 used across test modules."""
    out = [make_uniform(r, n) for n in range(5) for r in range(n + 1)]
    out += [
        make_graphic(3, K3),
        make_graphic(4, K4),
        make_graphic(2, [(0, 0), (0, 1), (0, 1)]),
        make_graphic(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        make_linear(2, [[1, 0, 1, 1, 0], [0, 1, 1, 1, 0]]),
        make_linear(3, [[1, 0, 1, 1], [0, 1, 1, 2]]),
    ]
    return out


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
