"""Small bundled catalog of permutation groups with their standard generators."""

from typing import List

from .group import PermutationGroup
from .permutation import Permutation, from_cycles


def _cycle(n: int, *points: int) -> Permutation:
    """1-based cycle of degree n."""
    return from_cycles(n, [[p - 1 for p in points]])


def trivial(n: int) -> PermutationGroup:
    return PermutationGroup(n, (), name=f"trivial{n}")


def cyclic(n: int) -> PermutationGroup:
    if n < 2:
        return PermutationGroup(n, (), name=f"cyclic{n}")
    return PermutationGroup(n, [_cycle(n, *range(1, n + 1))], name=f"cyclic{n}")


def dihedral(n: int) -> PermutationGroup:
    """Symmetries of the n-gon: the rotation (1,...,n) and the reflection i -> n+1-i."""
    if n < 2:
        return PermutationGroup(n, (), name=f"dihedral{n}")
    reflection = Permutation(tuple(n - 1 - i for i in range(n)))
    gens: List[Permutation] = [_cycle(n, *range(1, n + 1)), reflection]
    return PermutationGroup(n, gens, name=f"dihedral{n}")


def symmetric(n: int) -> PermutationGroup:
    if n < 2:
        return PermutationGroup(n, (), name=f"symmetric{n}")
    gens = [_cycle(n, 1, 2)]
    if n > 2:
        gens.append(_cycle(n, *range(1, n + 1)))
    return PermutationGroup(n, gens, name=f"symmetric{n}")


def alternating(n: int) -> PermutationGroup:
    # generated by the 3-cycles (1,2,k)
    gens = [_cycle(n, 1, 2, k) for k in range(3, n + 1)]
    return PermutationGroup(n, gens, name=f"alternating{n}")


def frobenius_20() -> PermutationGroup:
    return PermutationGroup(5, [_cycle(5, 1, 2, 3, 4, 5), _cycle(5, 2, 3, 5, 4)], name="frobenius20")


def degree5_transitive() -> List[PermutationGroup]:
    """The five transitive groups of degree 5, ordered by size."""
    return [cyclic(5), dihedral(5), frobenius_20(), alternating(5), symmetric(5)]
