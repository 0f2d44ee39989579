import pytest

from dquiver.error import QuiverError, RankDeficientError, ShapeError
from dquiver.grassmann import compare_grassmann, grassmann_dim, grassmann_quiver, grassmann_representation
from dquiver.linalg import ExactMatrix
from dquiver.quiver import dynkin_type


def _m(rows):
    return ExactMatrix.from_rows(rows)


def test__grassmann_quiver():

    q = grassmann_quiver(4)

    assert dynkin_type(q) == ('D', 6)
    assert grassmann_dim(2, 1, 4).as_dict() == {'a': 2, 'b': 1, '4': 4, '3': 3, '2': 2, '1': 1}

    with pytest.raises(QuiverError):
        grassmann_quiver(1)


def test__grassmann_representation__flag_steps():

    flag = _m([[1, 1, 0], [0, 1, 0], [0, 0, 1]])
    v = grassmann_representation(_m([[1, 0, 0]]), _m([[0, 0, 1]]), flag)

    assert v.mat('F2').to_json() == [[1, 1, 0], [0, 1, 0]]
    assert v.mat('F1').to_json() == [[1, 0]]
    assert v.dim == grassmann_dim(1, 1, 3)


def test__same_point_same_orbit():

    m, nm = _m([[1, 2, 0]]), _m([[0, 1, 1], [1, 0, 0]])
    flag = _m([[1, 0, 0], [1, 1, 0], [2, 0, 1]])

    v = grassmann_representation(m, nm, flag)
    verdict = compare_grassmann(v, v)

    assert verdict.same_orbit and verdict.leq and verdict.geq


def test__change_of_basis_same_orbit():

    m, nm = _m([[1, 2, 0]]), _m([[0, 1, 1], [1, 0, 0]])
    flag = _m([[1, 0, 0], [1, 1, 0], [2, 0, 1]])

    # row operations inside every subspace and every flag step
    lower = _m([[2, 0, 0], [1, -1, 0], [3, 1, 1]])
    m2 = m.scale(-3)
    nm2 = _m([[1, 1], [0, 1]]) @ nm

    verdict = compare_grassmann(
        grassmann_representation(m, nm, flag),
        grassmann_representation(m2, nm2, lower @ flag),
        oracle=True,
    )

    assert verdict.same_orbit
    assert verdict.agree


def test__equal_lines_degenerate_from_distinct_lines():

    flag = _m([[1, 1], [0, 1]])
    distinct = grassmann_representation(_m([[1, 0]]), _m([[0, 1]]), flag)
    equal = grassmann_representation(_m([[1, 0]]), _m([[1, 0]]), flag)

    verdict = compare_grassmann(distinct, equal, oracle=True)

    assert not verdict.same_orbit
    assert not verdict.leq
    assert verdict.geq
    assert verdict.agree


def test__rank_deficient():

    flag = ExactMatrix.identity(2)

    with pytest.raises(RankDeficientError):
        grassmann_representation(_m([[1, 0], [2, 0]]), _m([[0, 1]]), flag)

    with pytest.raises(RankDeficientError):
        grassmann_representation(_m([[1, 0]]), _m([[0, 1]]), _m([[1, 1], [2, 2]]))

    with pytest.raises(ShapeError):
        grassmann_representation(_m([[1, 0, 0]]), _m([[0, 1]]), flag)
