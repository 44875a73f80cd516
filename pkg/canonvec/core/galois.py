"""
Primitive invariants: polynomials whose stabilizer in S_n is exactly G.

Canonical vectors of G are visited by increasing degree. The stabilizer in
S_n of each vector's orbit (taken as a set) contains G; intersecting those
stabilizers one after the other shrinks S_n down to G. The vectors that made
the intersection drop give the orbit sums the invariant is assembled from.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from .catalog import symmetric
from .errors import IncompleteChainError
from .group import PermutationGroup, intersection, set_stabilizer_of_orbit
from .permutation import Vector
from .polynomial import SparsePolynomial, orbit_sum
from .tree import GenerationConfig, Mode, enumerate_canonicals

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class RefinementStep:
    """
    Attributes:
        vector (Vector): canonical vector of the target group.
        orbit_stabilizer (PermutationGroup): stabilizer in S_n of the vector's orbit.
        cumulative (PermutationGroup): intersection of all stabilizers so far.
    """
    vector: Vector
    orbit_stabilizer: PermutationGroup
    cumulative: PermutationGroup

    @property
    def degree(self) -> int:
        return sum(self.vector)


@dataclass(frozen=True)
class RefinementChain:
    target: PermutationGroup
    steps: Tuple[RefinementStep, ...]

    @property
    def final(self) -> PermutationGroup:
        return self.steps[-1].cumulative

    def is_complete(self) -> bool:
        return self.final.order() == self.target.order()

    def lines(self) -> List[str]:
        """One "degree, vector, |AutV|, |cumulative|" line per step."""
        return [
            f"{s.degree}, {','.join(map(str, s.vector))}, {s.orbit_stabilizer.order()}, {s.cumulative.order()}"
            for s in self.steps
        ]


def minimal_primitive_invariant(group: PermutationGroup) -> RefinementChain:
    n = group.degree
    full = symmetric(n)
    root = (0,) * n
    steps = [RefinementStep(root, full, full)]
    cumulative = full
    if full.order() == group.order():
        return RefinementChain(group, tuple(steps))
    # (n-1, ..., 1, 0) has degree n(n-1)/2 and its orbit is stabilized by G alone
    cap = n * (n - 1) // 2
    config = GenerationConfig(group, Mode.UP_TO_DEGREE, degree=cap)
    for v in enumerate_canonicals(config):
        if v == root:
            continue
        aut = set_stabilizer_of_orbit(group, v)
        if aut.order() == full.order():
            continue
        narrowed = intersection(cumulative, aut)
        if narrowed.order() < cumulative.order():
            cumulative = narrowed
            steps.append(RefinementStep(v, aut, cumulative))
            logger.info("vector %s narrows the stabilizer to order %d", v, cumulative.order())
            if cumulative.order() == group.order():
                return RefinementChain(group, tuple(steps))
    raise IncompleteChainError(
        f"no chain down to order {group.order()} within degree {cap}; reached order {cumulative.order()}"
    )


def assemble_primitive_polynomial(chain: RefinementChain) -> SparsePolynomial:
    """
    sum over the non-root steps k = 1, 2, ... of (k+1) * orbit_sum(G, v_k).

    Distinct coefficients keep the orbits apart: a permutation fixing the sum
    maps every orbit onto itself, hence lies in every step's stabilizer.
    """
    if not chain.is_complete():
        raise IncompleteChainError(
            f"chain stops at order {chain.final.order()}, target order is {chain.target.order()}"
        )
    n = chain.target.degree
    refining = [s for s in chain.steps if any(s.vector)]
    if not refining:
        return SparsePolynomial.constant(n, 1)
    total = SparsePolynomial(n)
    for k, step in enumerate(refining, start=1):
        total = total + orbit_sum(chain.target, step.vector) * (k + 1)
    return total
