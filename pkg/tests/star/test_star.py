import random

import pytest

from dquiver.dataclass.embedding import BOTH_INWARD, COMPOSABLE
from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.dataclass.representation import Representation
from dquiver.error import EmbeddingMismatchError, NotTypeDError, QuiverError
from dquiver.field import PrimeField
from dquiver.linalg import ExactMatrix
from dquiver.quiver import act, random_group_element, random_representation, transpose_rep
from dquiver.star import build_star, contraction_check, embed_typeD, extend_group, in_X_Q, star_extend


GF = PrimeField(101)


def _dims(q: Quiver, rng: random.Random) -> DimVector:
    return DimVector.of(q, {z: rng.randint(1, 2) for z in q.vertices})


@pytest.mark.parametrize('n', [1, 2, 3, 5])
def test__build_star__sizes(n):

    q = build_star(n).quiver

    assert len(q.vertices) == 2 * n + 3
    assert len(q.arrows) == 2 * n + 2
    assert all(a.tail.startswith('y') and a.head.startswith('x') for a in q.arrows)


def test__build_star__rank_zero():
    with pytest.raises(QuiverError):
        build_star(0)


def test__embed_typeD__d7(d7):

    d = DimVector.of(d7, {z: 1 for z in d7.vertices})
    e = embed_typeD(d7, d)

    assert e.n == 4
    assert e.case == COMPOSABLE
    assert not e.opposite
    assert e.contracted == {'alpha1', 'beta1', 'beta2', 'alpha4'}
    assert dict(e.arrow_map) == {
        'gamma': 'beta0', 'delta': "alpha1'",
        'a1': 'alpha2', 'a2': 'alpha3', 'a3': 'beta3', 'a4': 'beta4',
    }
    assert e.image('x0') == 'p'
    assert e.image('y1') == 'c'
    assert e.image('x4') == 'f'


def test__embed_typeD__both_inward(d4, d4_dim):

    e = embed_typeD(d4, d4_dim)

    assert e.case == BOTH_INWARD
    assert e.n == 1
    assert not e.contracted
    assert e.image('x0') is None
    assert e.dim_star.as_dict() == {'x0': 0, 'x1': 2, 'y0': 1, "y0'": 1, 'y1': 1}


def test__embed_typeD__dim_star_follows_source(d4):

    d = DimVector.of(d4, {'1': 3, '2': 5, '3': 4, '4': 2})
    e = embed_typeD(d4, d)

    assert e.dim_star.as_dict() == {'x0': 0, 'x1': 5, 'y0': 3, "y0'": 4, 'y1': 2}


def test__embed_typeD__composable(d4_composable):

    e = embed_typeD(d4_composable, {z: 1 for z in d4_composable.vertices})

    assert e.case == COMPOSABLE
    assert e.n == 2
    assert e.contracted == {'alpha1', 'beta1', 'beta2'}
    assert e.star_arrow('b') == 'beta0'
    assert e.star_arrow('a') == "alpha1'"


def test__embed_typeD__fully_outward_uses_opposite(d4):

    e = embed_typeD(d4.opposite(), {z: 1 for z in d4.vertices})

    assert e.opposite
    assert e.normalized == d4
    assert e.case == BOTH_INWARD


def test__embed_typeD__rejects(a2, d4, d5):

    with pytest.raises(NotTypeDError):
        embed_typeD(a2, {'1': 1, '2': 1})

    with pytest.raises(EmbeddingMismatchError):
        embed_typeD(d4, DimVector.of(d5, {z: 1 for z in d5.vertices}))


def test__contraction_check(type_d_family):
    for q in type_d_family:
        e = embed_typeD(q, {z: 1 for z in q.vertices})
        assert contraction_check(e), q


def test__star_extend__matrices(d4, d4_dim):

    rng = random.Random(7)
    v = random_representation(d4, d4_dim, rng, GF)
    e = embed_typeD(d4, d4_dim)
    w = star_extend(v, e)

    assert w.quiver == build_star(1).quiver
    assert w.mat('alpha1') == v.mat('a')
    assert w.mat("alpha1'") == v.mat('b')
    assert w.mat('beta1') == v.mat('c')
    assert w.mat('beta0').shape == (1, 0)


def test__star_extend__identities_on_contracted(d7):

    rng = random.Random(8)
    d = _dims(d7, rng)
    e = embed_typeD(d7, d)
    w = star_extend(random_representation(d7, d, rng, GF), e)

    for a in e.contracted:
        assert w.mat(a) == ExactMatrix.identity(w.dim[w.quiver.arrow(a).tail], GF)
    assert in_X_Q(w, e)


def test__star_extend__opposite_transposes(d4):

    rng = random.Random(9)
    q = d4.opposite()
    d = DimVector.of(q, {'1': 1, '2': 2, '3': 1, '4': 1})
    v = random_representation(q, d, rng, GF)
    w = star_extend(v, embed_typeD(q, d))

    assert w.mat('alpha1') == transpose_rep(v).mat('a')


def test__star_extend__mismatch(d4, d4_dim):

    e = embed_typeD(d4, d4_dim)
    v = Representation.zero(d4, {z: 1 for z in d4.vertices})

    with pytest.raises(EmbeddingMismatchError):
        star_extend(v, e)


def test__in_X_Q__singular_contracted_arrow(d7):

    d = DimVector.of(d7, {z: 1 for z in d7.vertices})
    e = embed_typeD(d7, d)
    w = star_extend(Representation.zero(d7, d, GF), e)

    mats = w.as_dict()
    mats['alpha4'] = ExactMatrix.zeros(1, 1, GF)
    broken = Representation.of(w.quiver, w.dim, mats, GF)

    assert in_X_Q(w, e)
    assert not in_X_Q(broken, e)


def test__extend_group__equivariance(type_d_family):

    rng = random.Random(10)

    for q in type_d_family:
        d = _dims(q, rng)
        e = embed_typeD(q, d)
        v = random_representation(q, d, rng, GF)
        g = random_group_element(q, d, rng, GF)

        assert star_extend(act(v, g), e) == act(star_extend(v, e), extend_group(g, e)), q
