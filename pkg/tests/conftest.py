import pytest

from mlpade.pade import construct, make_spec

# every (alpha, beta) the package promises to handle well
TEST_PAIRS = (
    (0.25, 1.0),
    (0.5, 0.5),
    (0.5, 1.0),
    (0.6, 0.6),
    (0.75, 0.75),
    (0.9, 1.0),
    (0.9, 1.9),
    (1.0, 1.1),
    (1.0, 1.5),
    (1.0, 2.0),
)

ALL_TYPES = ((3, 2), (5, 4), (6, 3), (7, 2))

# the second-order form with equal parameters is documented to misbehave
# for alpha > 0.5: at (0.75, 0.75) its denominator has positive real
# roots and construction is rejected
UNSUPPORTED_COMBOS = {((3, 2), (0.75, 0.75))}


def constructible(mn, pair):
    return (mn, pair) not in UNSUPPORTED_COMBOS


@pytest.fixture(scope="session")
def approximants():
    """Construct-once cache shared across the suite."""
    cache = {}

    def get(alpha, beta, m, n):
        key = (alpha, beta, m, n)
        if key not in cache:
            cache[key] = construct(make_spec(alpha, beta, m, n))
        return cache[key]

    return get


def grid(start, stop, step):
    n = int(round((stop - start) / step))
    return [start + i * step for i in range(n + 1)]
