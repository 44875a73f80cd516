import itertools
import pickle

import pytest

from canonvec.core import catalog
from canonvec.core.errors import CostBoundExceeded, DegreeMismatchError
from canonvec.core.group import (
    PermutationGroup,
    contains,
    elements,
    group_order,
    intersection,
    orbit_of_vector,
    schreier_sims,
    set_stabilizer_of_orbit,
    subgroup_by_filter,
)
from canonvec.core.parser import parse_permutation
from canonvec.core.permutation import Permutation, compose, identity

from conftest import bundled_groups


def closure(group):
    """Every element, by multiplying out the generators."""
    elements = {identity(group.degree)}
    frontier = list(elements)
    while frontier:
        nxt = []
        for g in frontier:
            for s in group.generators:
                h = compose(s, g)
                if h not in elements:
                    elements.add(h)
                    nxt.append(h)
        frontier = nxt
    return elements


@pytest.mark.parametrize("group, order", [
    (catalog.cyclic(5), 5),
    (catalog.dihedral(5), 10),
    (catalog.frobenius_20(), 20),
    (catalog.alternating(5), 60),
    (catalog.symmetric(5), 120),
    (catalog.dihedral(4), 8),
    (catalog.dihedral(6), 12),
    (catalog.alternating(4), 12),
    (catalog.symmetric(6), 720),
    (catalog.trivial(4), 1),
    (catalog.symmetric(1), 1),
])
def test_catalog_orders(group, order):
    assert group.order() == order


def test_chain_shape():
    for group in bundled_groups(5):
        sgs = group.chain
        n = group.degree
        assert len(sgs.levels) == n
        assert len(sgs.levels[-1]) == 1
        assert sgs.order() == group.order() == len(closure(group))
        for i, level in enumerate(sgs.levels):
            assert level.representatives[0].is_identity()
            for image, u in level.by_image.items():
                assert u(i) == image
                assert all(u(j) == j for j in range(i))


def test_redundant_generators():
    gens = [parse_permutation(t, 4) for t in ("(1,2)", "(1,2)", "(1,2,3,4)", "()")]
    assert PermutationGroup(4, gens).order() == 24
    assert schreier_sims([], 3).order() == 1


def test_membership():
    a4 = catalog.alternating(4)
    assert a4.contains(parse_permutation("(1,2,3)", 4))
    assert parse_permutation("(1,2)(3,4)", 4) in a4
    assert parse_permutation("(1,2)", 4) not in a4
    with pytest.raises(DegreeMismatchError):
        a4.contains(identity(3))


def test_elements_are_distinct_members():
    group = catalog.dihedral(5)
    elements = list(group.elements())
    assert len(elements) == len(set(elements)) == 10
    assert set(elements) == closure(group)


def test_subgroups_and_equality():
    assert catalog.cyclic(4).is_subgroup_of(catalog.dihedral(4))
    assert not catalog.dihedral(4).is_subgroup_of(catalog.cyclic(4))
    gens = [parse_permutation("(1,2,3)", 3), parse_permutation("(1,2)", 3)]
    assert PermutationGroup(3, gens) == catalog.symmetric(3)
    assert catalog.alternating(3) != catalog.symmetric(3)
    assert catalog.symmetric(4).is_symmetric()


def test_from_elements_keeps_only_new_generators():
    s3 = list(catalog.symmetric(3).elements())
    group = PermutationGroup.from_elements(3, s3)
    assert group.order() == 6
    assert len(group.generators) <= 2


def test_orbit_of_vector():
    assert orbit_of_vector(catalog.cyclic(3), (0, 1, 0)) == {(1, 0, 0), (0, 1, 0), (0, 0, 1)}
    assert orbit_of_vector(catalog.symmetric(4), (0, 0, 0, 0)) == {(0, 0, 0, 0)}
    assert len(orbit_of_vector(catalog.dihedral(5), (2, 1, 0, 0, 0))) == 10


def test_set_stabilizer_of_orbit():
    assert set_stabilizer_of_orbit(catalog.alternating(3), (2, 1, 0)).order() == 3
    assert set_stabilizer_of_orbit(catalog.cyclic(3), (1, 0, 0)).order() == 6
    assert set_stabilizer_of_orbit(catalog.trivial(2), (1, 0)).order() == 1
    # the orbit of (1,1,0,0) under C4 has the 4 "adjacent" pairs: the square's symmetries
    assert set_stabilizer_of_orbit(catalog.cyclic(4), (1, 1, 0, 0)).order() == 8


def test_orbit_stabilizer_contains_group():
    for group in bundled_groups(4):
        stab = set_stabilizer_of_orbit(group, tuple(range(group.degree)))
        assert group.is_subgroup_of(stab)
        assert stab.order() == group.order()


def test_intersection():
    assert intersection(catalog.symmetric(4), catalog.alternating(4)).order() == 12
    assert intersection(catalog.dihedral(4), catalog.alternating(4)).order() == 4
    assert intersection(catalog.cyclic(5), catalog.dihedral(5)).order() == 5
    with pytest.raises(DegreeMismatchError):
        intersection(catalog.cyclic(3), catalog.cyclic(4))


def test_subgroup_by_filter_respects_bound(monkeypatch):
    fixes_first = subgroup_by_filter(4, lambda t: t(0) == 0)
    assert fixes_first.order() == 6
    monkeypatch.setenv("CANONVEC_BRUTE_FORCE_DEGREE", "2")
    with pytest.raises(CostBoundExceeded):
        subgroup_by_filter(3, lambda t: True)


def test_groups_pickle_without_chain():
    group = catalog.dihedral(5)
    group.order()
    clone = pickle.loads(pickle.dumps(group))
    assert clone._chain is None
    assert clone.order() == 10
    assert clone == group


def test_module_level_accessors():
    d4 = catalog.dihedral(4)
    assert group_order(d4) == 8
    assert contains(d4, parse_permutation("(1,3)", 4))
    assert not contains(d4, parse_permutation("(1,2)", 4))
    assert sum(1 for _ in elements(d4)) == 8


def test_membership_against_every_permutation():
    for group in bundled_groups(5):
        members = closure(group)
        for images in itertools.permutations(range(group.degree)):
            tau = Permutation(images)
            assert group.contains(tau) == (tau in members), (group, tau)


def test_orbit_sizes_divide_the_order():
    for group in bundled_groups(5):
        for v in itertools.product(range(3), repeat=group.degree):
            assert group.order() % len(orbit_of_vector(group, v)) == 0
