from itertools import product

import pytest

from canonvec.core import catalog
from canonvec.core.canonical import (
    CanonicalTest,
    Ordering,
    canonical_representative_bruteforce,
    is_canonical,
    prefix_compare,
)
from canonvec.core.errors import DegreeMismatchError
from canonvec.core.group import orbit_of_vector

from conftest import bundled_groups


@pytest.fixture
def c3():
    return catalog.cyclic(3)


def test_prefix_compare():
    assert prefix_compare((1, 1, 0), (1, 0, 1), 1) is Ordering.EQUAL_PREFIX
    assert prefix_compare((1, 1, 0), (1, 0, 1), 2) is Ordering.GREATER
    assert prefix_compare((1, 0, 1), (1, 1, 0), 3) is Ordering.LESS
    assert prefix_compare((2, 0), (2, 0), 2) is Ordering.EQUAL_PREFIX
    with pytest.raises(ValueError):
        prefix_compare((1, 0), (0, 1), 3)
    with pytest.raises(ValueError):
        prefix_compare((1, 0), (0, 1), 0)


def test_is_canonical_small_cases(c3):
    assert is_canonical((1, 1, 0), c3) is True
    assert is_canonical((0, 1, 0), c3) is False
    assert is_canonical((0, 0, 0), c3) is True
    assert is_canonical((0, 1, 0), c3.chain) is False
    with pytest.raises(DegreeMismatchError):
        is_canonical((1, 0), c3)


def test_bruteforce_representative(c3):
    assert canonical_representative_bruteforce((0, 1, 0), c3) == (1, 0, 0)
    assert canonical_representative_bruteforce((2, 2, 2), c3) == (2, 2, 2)
    assert canonical_representative_bruteforce((0, 1, 2), catalog.symmetric(3)) == (2, 1, 0)


def test_agrees_with_orbit_maximum():
    for group in bundled_groups(5):
        for v in product(range(4), repeat=group.degree):
            expected = canonical_representative_bruteforce(v, group) == v
            assert is_canonical(v, group) == expected, (group, v)


def test_one_canonical_per_orbit():
    for group in bundled_groups(4):
        seen = set()
        for v in product(range(3), repeat=group.degree):
            if v in seen:
                continue
            orbit = orbit_of_vector(group, v)
            seen |= orbit
            assert sum(1 for w in orbit if is_canonical(w, group)) == 1


def test_explored_stays_inside_the_orbit():
    for group in [catalog.cyclic(5), catalog.dihedral(5), catalog.symmetric(5), catalog.frobenius_20()]:
        for v in product(range(3), repeat=5):
            outcome = is_canonical(v, group, with_explored=True)
            assert isinstance(outcome, CanonicalTest)
            assert outcome.canonical == is_canonical(v, group)
            orbit_size = len(orbit_of_vector(group, v))
            assert 1 <= outcome.explored <= orbit_size
            assert outcome.retained <= outcome.explored


def test_explored_counts(c3):
    assert is_canonical((0, 0, 0), c3, with_explored=True) == CanonicalTest(True, 1, 1)
    # all three rotations are produced at the first level
    assert is_canonical((2, 1, 0), c3, with_explored=True).explored == 3
    assert is_canonical((1, 0, 0, 0, 0), catalog.symmetric(5), with_explored=True).explored == 5


def test_rejection_means_a_larger_image_exists():
    group = catalog.dihedral(4)
    for v in product(range(3), repeat=4):
        if not is_canonical(v, group):
            assert max(orbit_of_vector(group, v)) > v
