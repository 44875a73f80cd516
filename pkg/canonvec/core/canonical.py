from dataclasses import dataclass
from enum import Enum
from typing import Callable, List, Sequence, Union

from .errors import DegreeMismatchError
from .group import PermutationGroup, StrongGeneratingSet, orbit_of_vector
from .permutation import Vector


class Ordering(Enum):
    LESS = -1
    EQUAL_PREFIX = 0
    GREATER = 1


def prefix_compare(v: Sequence[int], w: Sequence[int], i: int) -> Ordering:
    """Compare v against w on their first i coordinates (1 <= i <= n)."""
    if len(v) != len(w):
        raise DegreeMismatchError(f"vectors of length {len(v)} and {len(w)}")
    if not 1 <= i <= len(v):
        raise ValueError(f"prefix length {i} is out of range 1..{len(v)}")
    a, b = tuple(v[:i]), tuple(w[:i])
    if a == b:
        return Ordering.EQUAL_PREFIX
    return Ordering.GREATER if a > b else Ordering.LESS


@dataclass(frozen=True)
class CanonicalTest:
    """
    Outcome of one canonicity test.

    Attributes:
        canonical (bool): v is the lexicographic maximum of its orbit.
        explored (int): distinct orbit vectors produced as images over all
            levels, v included.
        retained (int): distinct vectors kept in the todo sets over all levels
            (the union of the per-level todo sets).
    """
    canonical: bool
    explored: int = 0
    retained: int = 0


class CanonicalTester:
    """
    Level-by-level canonicity test over a stabilizer chain.

    At level i every vector kept so far agrees with v on the first i
    coordinates, and so do its images under the level's representatives,
    since those fix the first i points. Only coordinate i has to be compared.
    Images are taken under the inverse representatives, which sweep coordinate
    i through the whole basic orbit.
    """

    def __init__(self, sgs: StrongGeneratingSet):
        self.degree = sgs.degree
        self.levels: List[List[Callable]] = sgs.pullbacks

    def __call__(self, v: Vector) -> bool:
        return self.is_canonical(v)

    def is_canonical(self, v: Vector) -> bool:
        todo = [v]
        for i, getters in enumerate(self.levels):
            vi = v[i]
            new_todo = {}
            if len(getters) == 1:
                # identity only: the images are the vectors themselves
                for w in todo:
                    wi = w[i]
                    if wi > vi:
                        return False
                    if wi == vi:
                        new_todo[w] = None
            else:
                for w in todo:
                    for image in getters:
                        child = image(w)
                        ci = child[i]
                        if ci > vi:
                            return False
                        if ci == vi and child not in new_todo:
                            new_todo[child] = None
            todo = list(new_todo)
        return True

    def test(self, v: Vector) -> CanonicalTest:
        """Same decision as is_canonical, also measuring how much of the orbit was visited."""
        explored = {v}
        retained = set()
        todo = [v]
        for i, getters in enumerate(self.levels):
            vi = v[i]
            new_todo = {}
            for w in todo:
                for image in getters:
                    child = image(w)
                    explored.add(child)
                    ci = child[i]
                    if ci > vi:
                        return CanonicalTest(False, len(explored), len(retained))
                    if ci == vi and child not in new_todo:
                        new_todo[child] = None
                        retained.add(child)
            todo = list(new_todo)
        return CanonicalTest(True, len(explored), len(retained))


def _tester(source: Union[StrongGeneratingSet, PermutationGroup]) -> CanonicalTester:
    if isinstance(source, PermutationGroup):
        return source.canonical_tester
    return CanonicalTester(source)


def is_canonical(v: Sequence[int], sgs: Union[StrongGeneratingSet, PermutationGroup], with_explored: bool = False):
    """
    True iff v is the lexicographic maximum of its orbit.

    With with_explored=True a CanonicalTest carrying the explored count is
    returned instead of a bare boolean.
    """
    tester = _tester(sgs)
    v = tuple(v)
    if len(v) != tester.degree:
        raise DegreeMismatchError(f"vector of length {len(v)} for a group of degree {tester.degree}")
    if with_explored:
        return tester.test(v)
    return tester.is_canonical(v)


def canonical_representative_bruteforce(v: Sequence[int], group: PermutationGroup) -> Vector:
    """The lexicographic maximum of the full orbit, by explicit closure."""
    return max(orbit_of_vector(group, v))
