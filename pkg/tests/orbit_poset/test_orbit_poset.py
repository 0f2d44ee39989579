import itertools
import json
import random

import pytest

from dquiver.dataclass.quiver import DimVector
from dquiver.dataclass.representation import Representation
from dquiver.error import BudgetExceededError, RepresentationError
from dquiver.field import PrimeField
from dquiver.orbit_poset import (OrbitLabel, bongartz_leq, compare_orbits, count_orbits, degenerates_to,
                                 enumerate_orbits, hasse, hasse_oracle, same_orbit)
from dquiver.quiver import act, catalog_for, positive_roots, random_group_element, transpose_rep
from dquiver.slice import eta, porbit_leq
from dquiver.star import embed_typeD, star_extend


def _brute_count(q, d: DimVector) -> int:
    roots = positive_roots(q)
    count = 1 if d.is_zero else 0
    for k in range(1, d.total + 1):
        for combo in itertools.combinations_with_replacement(roots, k):
            total = tuple(map(sum, zip(*(r.vector for r in combo))))
            if total == d.vector:
                count += 1
    return count


def test__count_orbits__a2(a2):

    assert count_orbits(a2, DimVector.of(a2, {'1': 1, '2': 1})) == 2
    assert count_orbits(a2, DimVector.of(a2, {'1': 2, '2': 1})) == 2
    assert count_orbits(a2, DimVector.of(a2, {'1': 0, '2': 0})) == 1


def test__count_orbits__d4(d4, d4_dim):

    assert count_orbits(d4, d4_dim) == _brute_count(d4, d4_dim)

    d = DimVector.of(d4, {'1': 1, '2': 1, '3': 1, '4': 1})
    assert count_orbits(d4, d) == _brute_count(d4, d)


def test__enumerate_orbits(d4, d4_dim):

    orbits = enumerate_orbits(d4, d4_dim)
    labels = [label for label, _ in orbits]

    assert len(orbits) == count_orbits(d4, d4_dim)
    assert labels == sorted(labels)
    assert all(label.dim == d4_dim and rep.dim == d4_dim for label, rep in orbits)


def test__enumerate_orbits__budget(d4, d4_dim):

    with pytest.raises(BudgetExceededError) as e:
        enumerate_orbits(d4, d4_dim, max_orbits=1)

    assert e.value.count == count_orbits(d4, d4_dim)


def test__orbit_label__zero():

    label = OrbitLabel.of([])

    assert str(label) == '0'
    assert label.dim is None


def test__same_orbit__action(d4, d4_dim):

    rng = random.Random(12)
    e = embed_typeD(d4, d4_dim)
    v = catalog_for(d4).indecomposable(d4_dim)
    g = random_group_element(d4, d4_dim, rng)

    assert same_orbit(v, act(v, g), e)
    assert not same_orbit(v, Representation.zero(d4, d4_dim), e)


def test__degenerates_to(d4, d4_dim):

    e = embed_typeD(d4, d4_dim)
    generic = catalog_for(d4).indecomposable(d4_dim)
    zero = Representation.zero(d4, d4_dim)

    assert degenerates_to(generic, zero, e)
    assert not degenerates_to(zero, generic, e)
    assert degenerates_to(zero, zero, e)


def test__compare_orbits__generic_and_zero(d4, d4_dim):

    generic = catalog_for(d4).indecomposable(d4_dim)
    zero = Representation.zero(d4, d4_dim)

    verdict = compare_orbits(generic, zero, oracle=True)

    assert not verdict.same_orbit
    assert not verdict.leq
    assert verdict.geq
    assert verdict.agree
    assert verdict.to_json()['verdict'] == 'AGREE'


def test__compare_orbits__matches_bongartz(d5):

    d = DimVector.of(d5, {z: 1 for z in d5.vertices})
    orbits = [rep for _, rep in enumerate_orbits(d5, d)]

    for v, w in itertools.combinations(orbits, 2):
        verdict = compare_orbits(v, w)
        assert verdict.leq == bongartz_leq(w, v)
        assert verdict.geq == bongartz_leq(v, w)


def test__compare_orbits__transpose_duality(d4, d4_dim):

    orbits = [rep for _, rep in enumerate_orbits(d4, d4_dim)][:6]

    for v, w in itertools.combinations(orbits, 2):
        verdict = compare_orbits(v, w)
        dual = compare_orbits(transpose_rep(v), transpose_rep(w))
        assert (verdict.leq, verdict.geq) == (dual.leq, dual.geq)


def test__compare_orbits__fields(d4, d4_dim):

    v = Representation.zero(d4, d4_dim)
    w = Representation.zero(d4, d4_dim, PrimeField(7))

    with pytest.raises(RepresentationError):
        compare_orbits(v, w)


def test__hasse__matches_oracle(d4, d4_dim):

    poset = hasse(d4, d4_dim)
    oracle = hasse_oracle(d4, d4_dim)

    assert poset.edge_labels() == oracle.edge_labels()
    assert poset.nodes[poset.generic].codim == 0


def test__hasse__codim_grows_along_edges(d4, d4_dim):

    poset = hasse(d4, d4_dim)

    for i, j in poset.edges:
        assert poset.nodes[j].codim > poset.nodes[i].codim


def test__hasse__d5_matches_oracle(d5):

    d = DimVector.of(d5, {'1': 1, '2': 2, '3': 1, '4': 1, '5': 1})
    assert hasse(d5, d).edge_labels() == hasse_oracle(d5, d).edge_labels()


def test__hasse__a2_chain(a2):

    d = DimVector.of(a2, {'1': 1, '2': 1})
    poset = hasse_oracle(a2, d)

    assert len(poset.nodes) == 2
    assert poset.edge_labels() == [('11', '01+10')]


def test__hasse__output(d4, d4_dim):

    poset = hasse(d4, d4_dim)
    data = json.loads(json.dumps(poset.to_json()))

    assert len(data['nodes']) == count_orbits(d4, d4_dim)
    assert data['dim'] == [1, 2, 1, 1]
    assert all(len(node['signature']) == 11 for node in data['nodes'])
    assert poset.to_dot().startswith('digraph degenerations')


def test__hasse__single_orbit(d4):

    d = DimVector.of(d4, {'1': 0, '2': 1, '3': 0, '4': 0})
    poset = hasse(d4, d)

    assert len(poset.nodes) == 1
    assert poset.edges == []
    assert poset.generic == 0


def test__signatures_separate_orbits(d4, d4_dim, d5):

    d5_dim = DimVector.of(d5, {'1': 1, '2': 2, '3': 1, '4': 2, '5': 1})

    for q, d in ((d4, d4_dim), (d4.opposite(), DimVector.of(d4.opposite(), d4_dim.as_dict())), (d5, d5_dim)):
        poset = hasse(q, d)
        signatures = {node.signature.values for node in poset.nodes}
        assert len(signatures) == len(poset.nodes), q


def test__slice_order_matches_degenerations(d4, d4_dim):

    e = embed_typeD(d4, d4_dim)
    orbits = [rep for _, rep in enumerate_orbits(d4, d4_dim)]
    points = [eta(star_extend(rep, e)) for rep in orbits]

    for (v, p), (w, r) in itertools.product(zip(orbits, points), repeat=2):
        assert porbit_leq(r, p) == degenerates_to(v, w, e)
