import random

import pytest

from curvedist.ladder import Ladder, beta_components, parse_ladder

# the worked genus-2 pair used throughout (k = 12, distance 4+)
F8_TOP = "1,6,11,4,3,2,7,0,5,9,8,7"
F8_BOTTOM = "0,5,10,3,2,1,6,11,4,10,9,8"

# the genus-3 pair with k = 29 and distance 4+
G3_TOP = ("1,11,3,27,8,15,7,24,0,10,2,12,4,21,19,17,"
          "24,14,6,23,28,9,16,25,13,5,20,18,16")
G3_BOTTOM = ("0,10,2,26,7,14,6,23,28,9,1,11,3,22,20,"
             "18,25,13,5,22,27,8,15,26,12,4,21,19,17")


@pytest.fixture(scope="session")
def f8():
    return parse_ladder(F8_TOP, F8_BOTTOM)


@pytest.fixture(scope="session")
def g3():
    return parse_ladder(G3_TOP, G3_BOTTOM)


def random_ladder(rng: random.Random, k: int) -> Ladder:
    """Uniform random slot pairing on 2k slots."""
    slots = list(range(2 * k))
    rng.shuffle(slots)
    top = [-1] * k
    bottom = [-1] * k
    for lab in range(k):
        for s in (slots[2 * lab], slots[2 * lab + 1]):
            if s % 2 == 0:
                top[s >> 1] = lab
            else:
                bottom[s >> 1] = lab
    return Ladder.from_rows(top, bottom)


def random_single_curve_ladder(rng: random.Random, k: int) -> Ladder:
    while True:
        lad = random_ladder(rng, k)
        if beta_components(lad).single_curve:
            return lad


# --- acceptance summary ----------------------------------------------------

_acceptance_results = []


def record_acceptance(nodeid, outcome):
    name = nodeid.rsplit("::", 1)[-1]
    if name.startswith("test_criterion_"):
        _acceptance_results.append((name, outcome))


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    out = yield
    report = out.get_result()
    if report.when == "call" and "test_acceptance" in item.nodeid:
        record_acceptance(item.nodeid, report.outcome)


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_results:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, outcome in sorted(_acceptance_results):
        label = name.replace("test_criterion_", "criterion ")
        terminalreporter.write_line(f"{label}: {outcome.upper()}")
