import sys
from fractions import Fraction
from itertools import permutations

import pytest

from hankel_exact import Mat, MomentKind

F = Fraction


def leibniz_det(m: Mat) -> Fraction:
    """Determinant by the permutation expansion; only for small matrices."""
    n = m.rows
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(1 for a in range(n) for b in range(a + 1, n) if perm[a] > perm[b])
        term = Fraction(-1 if inversions % 2 else 1)
        for i, j in enumerate(perm):
            term *= m[i, j]
            if not term:
                break
        total += term
    return total


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for line in mod.summary_lines():
        terminalreporter.write_line(line)


@pytest.fixture
def hilbert2():
    return Mat.from_rows([[1, F(1, 2)], [F(1, 2), F(1, 3)]])


FUNCTIONAL_KINDS = [
    MomentKind.hilbert(1),
    MomentKind.hilbert(2),
    MomentKind.generalized(1, F(3, 2)),
]

KIND_GRID = FUNCTIONAL_KINDS + [
    MomentKind.hilbert(F(1, 3)),
    MomentKind.generalized(1, 2),
    MomentKind.generalized(1, F(1, 2)),
    MomentKind.generalized(2, F(7, 3)),
]
