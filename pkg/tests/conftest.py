import os

import pytest
from pytest_reorder import make_reordering_hook

from dquiver.dataclass.quiver import DimVector, Quiver


from typing import TYPE_CHECKING, Dict, Iterable, List


if TYPE_CHECKING:
    from _pytest.nodes import Item
    from _pytest.runner import CallInfo


# https://github.com/not-raspberry/pytest_reorder
pytest_collection_modifyitems = make_reordering_hook([
    r'(^|.*/)test_fixtures',
    None,
])


# https://stackoverflow.com/questions/59379412/pytest-mark-a-test-as-a-must-pass-and-stop-testing-if-it-fails
# https://docs.pytest.org/en/latest/example/simple.html#incremental-testing-test-steps
# TODO: This behaviour seems to work only on sibling tests of the
#       test marked as `must_pass` that are in the same module.
#       The desired behaviour is that if a test marked `must_pass` fails,
#       This should skip test execution of any other tests in the session.
def pytest_runtest_makereport(item: 'Item', call: 'CallInfo'):

    if 'must_pass' in item.keywords and call.excinfo is not None:
        parent = item.parent
        parent._mpfailed = item


def pytest_runtest_setup(item: 'Item'):

    must_pass_failed = getattr(item.parent, '_mpfailed', None)  # type: Item
    if must_pass_failed is not None:
        pytest.skip('must pass test failed (%s)' % must_pass_failed.name)


@pytest.fixture
def files_dir() -> str:
    return os.path.join(os.path.dirname(__file__), 'files')


@pytest.fixture
def a2() -> Quiver:
    return Quiver.of(['1', '2'], [('a', '1', '2')])


@pytest.fixture
def d4() -> Quiver:
    """Three arrows into the branch vertex 2."""
    return Quiver.of(['1', '2', '3', '4'], [('a', '1', '2'), ('b', '3', '2'), ('c', '4', '2')])


@pytest.fixture
def d4_dim(d4) -> DimVector:
    return DimVector.of(d4, {'1': 1, '2': 2, '3': 1, '4': 1})


@pytest.fixture
def d4_composable() -> Quiver:
    """The short arrows compose through the branch vertex 2."""
    return Quiver.of(['1', '2', '3', '4'], [('a', '1', '2'), ('b', '2', '3'), ('c', '2', '4')])


@pytest.fixture
def d5() -> Quiver:
    return Quiver.of(
        ['1', '2', '3', '4', '5'],
        [('a', '2', '1'), ('b', '3', '2'), ('c', '2', '4'), ('d', '5', '4')],
    )


@pytest.fixture
def d7() -> Quiver:
    """
    Branch c with p <- c <- q and the long branch c -> d -> e <- f <- g, which
    contracts from the star quiver of rank 4.
    """
    return Quiver.of(
        ['c', 'p', 'q', 'd', 'e', 'f', 'g'],
        [
            ('gamma', 'c', 'p'), ('delta', 'q', 'c'),
            ('a1', 'c', 'd'), ('a2', 'd', 'e'), ('a3', 'f', 'e'), ('a4', 'g', 'f'),
        ],
    )


@pytest.fixture
def type_d_family(d4, d4_composable, d5, d7):
    """Type D quivers in several orientations, one of them fully outward."""
    return [d4, d4_composable, d4.opposite(), d5, d5.opposite(), d7]


def _type_d(m: int, flipped: Iterable[int] = ()) -> Quiver:
    """
    D_m on '1'..'m': the path 1 - 2 - ... - (m-1) with m hung off m-2. Edge k
    runs from its smaller to its larger vertex unless k is flipped. From D5
    on the last two edges are the short branches.
    """

    edges = [(str(k + 1), str(k + 2)) for k in range(m - 2)] + [(str(m - 2), str(m))]
    arrows = [
        (f'e{k}', w, u) if k in flipped else (f'e{k}', u, w)
        for k, (u, w) in enumerate(edges)
    ]
    return Quiver.of([str(i) for i in range(1, m + 1)], arrows)


@pytest.fixture
def type_d():
    return _type_d


@pytest.fixture
def type_d_orientations() -> Dict[int, List[Quiver]]:
    """
    D4, D5 and D6 with both short arrows outward (embedded through the
    opposite quiver), both inward and composable through the branch vertex.
    The short branches of D4 end at 1 and 3, the long one at 4.
    """

    family = {4: [_type_d(4, {0}), _type_d(4, {1}), _type_d(4)]}
    for m in (5, 6):
        family[m] = [_type_d(m), _type_d(m, {0, m - 3, m - 2}), _type_d(m, {m - 3})]
    return family


@pytest.fixture
def branch_dim():
    """Dimension 2 at the branch vertex and 1 elsewhere."""

    def _dim(q: Quiver) -> DimVector:
        branch = str(len(q.vertices) - 2)
        return DimVector.of(q, {z: 2 if z == branch else 1 for z in q.vertices})

    return _dim
