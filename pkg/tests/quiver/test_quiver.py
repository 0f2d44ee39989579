import random

import pytest

from dquiver.dataclass.quiver import DimVector, Quiver
from dquiver.dataclass.representation import GroupElement, Representation
from dquiver.error import NotAdmissibleError, NotDynkinError, NotTypeDError, RepresentationError
from dquiver.field import PrimeField
from dquiver.orbit_poset import enumerate_orbits
from dquiver.quiver import (act, catalog_for, contract, direct_sum, dynkin_type, hom_dim, lift_dim, multiplicities,
                            orbit_codim, positive_roots, random_group_element, random_representation,
                            sample_indecomposable, transpose_rep, type_d_shape)


GF = PrimeField(101)


def test__representation__shape_mismatch(a2):
    with pytest.raises(RepresentationError):
        Representation.of(a2, {'1': 1, '2': 2}, {'a': [[1]]})


def test__act__scales_target(a2):

    v = Representation.of(a2, {'1': 1, '2': 2}, {'a': [[1, 0]]})
    g = GroupElement.of(a2, v.dim, {'1': [[1]], '2': [[2, 0], [0, 3]]})

    assert act(v, g).mat('a').to_json() == [[2, 0]]
    assert act(v, GroupElement.identity(a2, v.dim)) == v


def test__act__inverse(d4, d4_dim):

    rng = random.Random(1)
    v = random_representation(d4, d4_dim, rng, GF)
    g = random_group_element(d4, d4_dim, rng, GF)

    assert act(act(v, g), g.inverse()) == v


def test__transpose_rep__involution_and_equivariance(d4, d4_dim):

    rng = random.Random(2)
    v = random_representation(d4, d4_dim, rng, GF)
    g = random_group_element(d4, d4_dim, rng, GF)

    assert transpose_rep(transpose_rep(v)) == v
    assert transpose_rep(act(v, g)) == act(transpose_rep(v), g.transpose_inverse())


def test__transpose_rep__hom_duality(d5):

    rng = random.Random(4)
    d = DimVector.of(d5, {'1': 1, '2': 2, '3': 1, '4': 1, '5': 1})

    for _ in range(5):
        v = random_representation(d5, d, rng, GF)
        w = Representation.zero(d5, d, GF) if rng.random() < 0.3 else random_representation(d5, d, rng, GF)
        assert hom_dim(transpose_rep(v), transpose_rep(w)) == hom_dim(w, v)


def test__hom_dim(a2):

    v = Representation.of(a2, {'1': 1, '2': 1}, {'a': [[1]]})
    w = Representation.zero(a2, {'1': 1, '2': 1})

    assert hom_dim(v, w) == 1
    assert hom_dim(v, v) == 1


def test__hom_dim__no_arrows():

    q = Quiver.of(['1', '2'], [])
    v = Representation.zero(q, {'1': 2, '2': 1})
    w = Representation.zero(q, {'1': 3, '2': 2})

    assert hom_dim(v, w) == 2 * 3 + 1 * 2


def test__hom_dim__additive(d4, d4_dim):

    rng = random.Random(5)
    v = random_representation(d4, d4_dim, rng, GF)
    w1 = random_representation(d4, d4_dim, rng, GF)
    w2 = Representation.zero(d4, d4_dim, GF)

    assert hom_dim(v, direct_sum(w1, w2)) == hom_dim(v, w1) + hom_dim(v, w2)


def test__contract__empty(d4):

    target, plan = contract(d4, [])

    assert target == d4
    assert lift_dim(DimVector.of(d4, {'1': 1, '2': 2, '3': 3, '4': 4}), plan)['3'] == 3


def test__contract__path_collapses():

    q = Quiver.of(['1', '2', '3', '4'], [('a', '1', '2'), ('b', '3', '2'), ('c', '3', '4')])
    target, plan = contract(q, ['a', 'b', 'c'])

    assert target.vertices == ('1',)
    assert target.arrows == ()
    assert {plan.image(z) for z in q.vertices} == {'1'}


def test__contract__leaves_a_loop():

    # contracting one arrow of a double edge turns the other into a loop
    q = Quiver.of(['1', '2', '3'], [('a', '1', '2'), ('b', '2', '1'), ('c', '2', '3')])
    target, _ = contract(q, ['a'])

    assert target.arrow('b').is_loop
    assert target.arrow('c').tail == '1'


def test__contract__cycle():

    q = Quiver.of(['1', '2'], [('a', '1', '2'), ('b', '2', '1')])
    with pytest.raises(NotAdmissibleError):
        contract(q, ['a', 'b'])


def test__lift_dim():

    q = Quiver.of(['1', '2', '3'], [('a', '1', '2'), ('b', '3', '2')])
    target, plan = contract(q, ['a'])
    lifted = lift_dim(DimVector.of(target, {'1': 2, '3': 5}), plan)

    assert lifted.as_dict() == {'1': 2, '2': 2, '3': 5}


def test__dynkin_type(a2, d4, d7):

    assert dynkin_type(a2) == ('A', 2)
    assert dynkin_type(d4) == ('D', 4)
    assert dynkin_type(d7) == ('D', 7)


@pytest.mark.parametrize('vertices, arrows', [
    (['1'], [('a', '1', '1')]),
    (['1', '2'], [('a', '1', '2'), ('b', '1', '2')]),
    (['1', '2', '3'], [('a', '1', '2'), ('b', '2', '3'), ('c', '3', '1')]),
    (['0', '1', '2', '3', '4'], [('a', '1', '0'), ('b', '2', '0'), ('c', '3', '0'), ('d', '4', '0')]),
])
def test__dynkin_type__rejects(vertices, arrows):
    with pytest.raises(NotDynkinError):
        dynkin_type(Quiver.of(vertices, arrows))


def test__type_d_shape(d4, d7):

    shape = type_d_shape(d4)
    assert shape.branch == '2'
    assert [leaf for leaf, _ in shape.short] == ['1', '3']
    assert shape.long == (('4', 'c'),)

    shape = type_d_shape(d7)
    assert shape.branch == 'c'
    assert [w for w, _ in shape.long] == ['d', 'e', 'f', 'g']

    with pytest.raises(NotTypeDError):
        type_d_shape(Quiver.of(['1', '2'], [('a', '1', '2')]))


def test__positive_roots__counts(a2, d4, d5, d7):

    path = Quiver.of(['1', '2', '3', '4'], [('a', '1', '2'), ('b', '3', '2'), ('c', '3', '4')])

    assert len(positive_roots(a2)) == 3
    assert len(positive_roots(path)) == 10
    assert len(positive_roots(d4)) == 12
    assert len(positive_roots(d5)) == 20
    assert len(positive_roots(d7)) == 42


def test__positive_roots__twos_on_long_branch(d7):

    shape = type_d_shape(d7)
    inner = {shape.branch} | {w for w, _ in shape.long}

    for root in positive_roots(d7):
        for z, value in root.values:
            assert value in (0, 1, 2)
            if value == 2:
                assert z in inner


def test__sample_indecomposable(d4, d4_dim):

    simple = DimVector.of(d4, {'1': 0, '2': 1, '3': 0, '4': 0})
    v = sample_indecomposable(d4, simple)
    assert hom_dim(v, v) == 1

    v = sample_indecomposable(d4, d4_dim, seed=3)
    assert hom_dim(v, v) == 1

    with pytest.raises(RepresentationError):
        sample_indecomposable(d4, DimVector.of(d4, {'1': 2, '2': 1, '3': 0, '4': 0}))


def test__multiplicities(d4, d4_dim):

    catalog = catalog_for(d4)
    x = catalog.indecomposable(d4_dim)
    roots = catalog.roots

    assert multiplicities(x) == (d4_dim,)
    assert multiplicities(direct_sum(x, x)) == (d4_dim, d4_dim)

    picked = sorted([roots[0], roots[4], roots[7]])
    v = direct_sum(*(catalog.indecomposable(r) for r in picked))
    assert multiplicities(v) == tuple(picked)


def test__multiplicities__invariant_under_action(d4, d4_dim):

    rng = random.Random(6)
    v = random_representation(d4, d4_dim, rng)
    g = random_group_element(d4, d4_dim, rng)

    assert multiplicities(act(v, g)) == multiplicities(v)


def test__orbit_codim(d4, d4_dim):

    codims = sorted(orbit_codim(rep) for _, rep in enumerate_orbits(d4, d4_dim))

    assert codims[0] == 0
    assert codims.count(0) == 1
    assert codims.count(1) == 3
