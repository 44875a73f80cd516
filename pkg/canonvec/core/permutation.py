from dataclasses import dataclass
from operator import itemgetter
from typing import Callable, List, Sequence, Tuple

from .errors import DegreeMismatchError

# An integer vector is a plain tuple of non-negative ints; its degree is its sum.
Vector = Tuple[int, ...]


def check_vector(v: Sequence[int]) -> Vector:
    """Return v as a tuple, rejecting negative or non-integer entries."""
    vec = tuple(v)
    for k, x in enumerate(vec):
        if not isinstance(x, int) or isinstance(x, bool) or x < 0:
            raise ValueError(f"entry {k + 1} of {vec} is not a non-negative integer")
    return vec


def vector_degree(v: Vector) -> int:
    return sum(v)


@dataclass(frozen=True)
class Permutation:
    """
    A bijection of {0, ..., n-1}, stored as the tuple of images.

    Points are 0-based internally; every textual form (cycle notation,
    error messages) is 1-based.

    Attributes:
        images (Tuple[int, ...]): images[i] is the image of point i.
    """
    images: Tuple[int, ...]

    def __post_init__(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"{self.images} is not a permutation of 0..{len(self.images) - 1}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, point: int) -> int:
        return self.images[point]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Composition: (p * q)(i) = p(q(i))."""
        return compose(self, other)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j] = i
        return Permutation(tuple(inv))

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> List[Tuple[int, ...]]:
        """Non-trivial cycles, each starting at its smallest point (0-based)."""
        seen = set()
        out = []
        for start in range(len(self.images)):
            if start in seen or self.images[start] == start:
                continue
            cycle = [start]
            seen.add(start)
            j = self.images[start]
            while j != start:
                seen.add(j)
                cycle.append(j)
                j = self.images[j]
            out.append(tuple(cycle))
        return out

    def cycle_type(self) -> Tuple[int, ...]:
        """Lengths of all cycles, fixed points included, in decreasing order."""
        lengths = [len(c) for c in self.cycles()]
        lengths += [1] * (self.degree - sum(lengths))
        return tuple(sorted(lengths, reverse=True))

    def __str__(self) -> str:
        out = "".join("(" + ",".join(str(p + 1) for p in c) + ")" for c in self.cycles())
        return out or "()"

    def __repr__(self) -> str:
        return f"Permutation({self})"


def identity(n: int) -> Permutation:
    return Permutation(tuple(range(n)))


def compose(p: Permutation, q: Permutation) -> Permutation:
    if p.degree != q.degree:
        raise DegreeMismatchError(f"cannot compose permutations of degree {p.degree} and {q.degree}")
    return Permutation(tuple(p.images[i] for i in q.images))


def inverse(p: Permutation) -> Permutation:
    return p.inverse()


def from_cycles(n: int, cycles: Sequence[Sequence[int]]) -> Permutation:
    """Build a permutation of degree n from disjoint 0-based cycles."""
    images = list(range(n))
    for cycle in cycles:
        for a, b in zip(cycle, cycle[1:]):
            images[a] = b
        if cycle:
            images[cycle[-1]] = cycle[0]
    return Permutation(tuple(images))


def act(p: Permutation, v: Sequence[int]) -> Vector:
    """
    Left action on positions: (p.v)_i = v_{p^-1(i)}.

    The entry at position i moves to position p(i), so
    act(p, act(q, v)) == act(compose(p, q), v).
    """
    if len(v) != p.degree:
        raise DegreeMismatchError(f"vector of length {len(v)} cannot be acted on by a permutation of degree {p.degree}")
    out = [0] * p.degree
    for i, j in enumerate(p.images):
        out[j] = v[i]
    return tuple(out)


def pullback_getter(p: Permutation) -> Callable[[Vector], Vector]:
    """
    Fast callable computing act(p^-1, w), i.e. w composed with p.

    The result at position i is w_{p(i)}. itemgetter returns a bare value for
    a single index, so degree 1 is wrapped.
    """
    if p.degree == 1:
        return lambda w: (w[0],)
    return itemgetter(*p.images)
