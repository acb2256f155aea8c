"""The acceptance battery, one pytest per criterion.

Each test drives the corresponding function in hopflab.regress (the
same functions the `hopflab regress` CLI replays) and prints one
pass/fail line per sub-check.  Everything is exact arithmetic; there
are no tolerances to tune.
"""

import pytest

from hopflab import regress


def _run(fn):
    results = fn()
    for name, ok, detail in results:
        print("%-66s %s" % (name, "pass" if ok else "FAIL"))
    bad = [(n, d) for n, ok, d in results if not ok]
    assert not bad, "failed: %s" % "\n".join(
        "%s\n  %s" % (n, d) for n, d in bad)


@pytest.mark.parametrize("title,fn", regress.CRITERIA,
                         ids=[t for t, _ in regress.CRITERIA])
def test_criterion(title, fn):
    _run(fn)
