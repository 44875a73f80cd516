"""
Independent orbit-counting oracles: Burnside counting through the cycle index
and exhaustive orbit-maximum filtering over a finite box.
"""

import logging
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm, prod
from typing import Dict, List, Optional, Set, Tuple

from sympy import Poly, Rational, symbols

from canonvec import config as settings
from .errors import CostBoundExceeded
from .group import PermutationGroup, orbit_of_vector
from .permutation import Vector
from .tree import GenerationConfig

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CycleIndexMonomial:
    """
    coefficient * prod_k a_k^{m_k}.

    Attributes:
        exponents (Tuple[Tuple[int, int], ...]): (k, m_k) pairs with m_k > 0, k increasing.
        coefficient (Fraction): share of the group elements with this cycle type.
    """
    exponents: Tuple[Tuple[int, int], ...]
    coefficient: Fraction

    def weight(self) -> int:
        """sum of k * m_k, the degree of the group."""
        return sum(k * m for k, m in self.exponents)

    def variables(self) -> int:
        """Total number of cycles."""
        return sum(m for _, m in self.exponents)

    def render(self) -> str:
        return "*".join(f"a{k}" if m == 1 else f"a{k}^{m}" for k, m in self.exponents)


def _check_order(group: PermutationGroup):
    bound = settings.element_bound()
    if group.order() > bound:
        raise CostBoundExceeded(f"group order {group.order()} is above the element bound {bound}")


def cycle_index(group: PermutationGroup) -> List[CycleIndexMonomial]:
    """(1/|G|) sum over g of prod_k a_k^{c_k(g)}, one monomial per cycle type."""
    _check_order(group)
    types: Counter = Counter()
    for g in group.elements():
        types[tuple(sorted(Counter(g.cycle_type()).items()))] += 1
    order = group.order()
    monomials = [CycleIndexMonomial(exps, Fraction(count, order)) for exps, count in types.items()]
    n = group.degree
    # a1^3 before a1*a2 before a3: descending on (m_1, ..., m_n)
    monomials.sort(key=lambda mono: [dict(mono.exponents).get(k, 0) for k in range(1, n + 1)], reverse=True)
    return monomials


def cycle_index_polynomial_string(group: PermutationGroup) -> str:
    """Render the cycle index over a common denominator, e.g. "(a1^3 + 3*a1*a2 + 2*a3)/6"."""
    monomials = cycle_index(group)
    denominator = lcm(*(m.coefficient.denominator for m in monomials))
    terms = []
    for mono in monomials:
        c = mono.coefficient * denominator
        terms.append(mono.render() if c == 1 else f"{c}*{mono.render()}")
    body = " + ".join(terms)
    return body if denominator == 1 else f"({body})/{denominator}"


# --------------------------
# Burnside counting
# --------------------------

x = symbols("x")


def _colour_series(k: int, max_part: int) -> Poly:
    """1 + x^k + ... + x^(k*max_part): one k-cycle carrying a constant entry."""
    return Poly(sum(x ** (k * j) for j in range(max_part + 1)), x)


def generating_polynomial(group: PermutationGroup, max_part: int) -> Poly:
    """
    sum over d of (number of orbits of degree d) * x^d, for entries in 0..max_part,
    obtained by substituting a_k = 1 + x^k + ... + x^(k*max_part) into the cycle index.
    """
    if max_part < 0:
        raise ValueError(f"max_part must be non-negative, got {max_part}")
    series: Dict[int, Poly] = {}
    total = Poly(0, x, domain="QQ")
    for mono in cycle_index(group):
        term = Poly(Rational(mono.coefficient.numerator, mono.coefficient.denominator), x, domain="QQ")
        for k, m in mono.exponents:
            if k not in series:
                series[k] = _colour_series(k, max_part)
            term = term * series[k] ** m
        total = total + term
    return total


def orbit_counts_by_degree(group: PermutationGroup, max_part: int) -> List[int]:
    """Dense list c where c[d] is the number of orbits of degree d, d = 0..n*max_part."""
    coefficients = generating_polynomial(group, max_part).all_coeffs()[::-1]
    counts = []
    for c in coefficients:
        if not c.is_integer:
            raise ArithmeticError(f"Burnside coefficient {c} is not an integer")
        counts.append(int(c))
    return counts


def burnside_count(group: PermutationGroup, max_part: int, degree: Optional[int] = None) -> int:
    """
    Number of orbits of vectors with entries in 0..max_part, or of those with
    sum `degree` when it is given.

    Without a degree each a_k becomes max_part + 1; with one, the coefficient
    of x^degree is read off the generating polynomial.
    """
    if max_part < 0:
        raise ValueError(f"max_part must be non-negative, got {max_part}")
    if degree is not None:
        if degree < 0:
            return 0
        counts = orbit_counts_by_degree(group, max_part)
        return counts[degree] if degree < len(counts) else 0
    total = sum(m.coefficient * (max_part + 1) ** m.variables() for m in cycle_index(group))
    if total.denominator != 1:
        raise ArithmeticError(f"Burnside sum {total} is not an integer")
    return int(total)


# --------------------------
# Exhaustive oracle
# --------------------------

def _box(config: GenerationConfig) -> List[range]:
    n = config.group.degree
    bounds = []
    for i in range(n):
        caps = [c for c in (config.max_part, config.degree_cap) if c is not None]
        if config.ceiling is not None:
            caps.append(config.ceiling[i])
        bounds.append(range(min(caps) + 1))
    size = prod(len(r) for r in bounds)
    if size > settings.box_bound():
        raise CostBoundExceeded(f"box of {size} vectors is above the bound {settings.box_bound()}")
    return bounds


def brute_force_canonicals(group: PermutationGroup, config: GenerationConfig) -> Set[Vector]:
    """Every vector of the config's box equal to the maximum of its orbit."""
    orbit_max: Dict[Vector, Vector] = {}
    found = set()
    for v in product(*_box(config)):
        if not config.wanted(sum(v)):
            continue
        if v not in orbit_max:
            orbit = orbit_of_vector(group, v)
            top = max(orbit)
            orbit_max.update((w, top) for w in orbit)
        if orbit_max[v] == v:
            found.add(v)
    logger.debug("brute force: %d canonical vectors", len(found))
    return found


def brute_force_orbit_count(group: PermutationGroup, config: GenerationConfig) -> int:
    return len(brute_force_canonicals(group, config))
