from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Mapping, Sequence, Tuple, Union

from canonvec import config
from .errors import CostBoundExceeded, DegreeMismatchError
from .group import PermutationGroup, orbit_of_vector, subgroup_by_filter
from .permutation import Permutation, Vector, act, check_vector

Coefficient = Union[int, Fraction]


class SparsePolynomial:
    """
    A polynomial in x1..xn with exact rational coefficients, stored as a map
    from exponent vectors to non-zero coefficients.

    Instances are immutable; every operation returns a new polynomial.
    Rendering lists the terms with exponents in lex-descending order, e.g.
    "x1^2*x2 + 1/2*x3 - 3".
    """

    def __init__(self, nvars: int, terms: Mapping[Sequence[int], Coefficient] = None):
        if nvars < 0:
            raise ValueError(f"number of variables must be non-negative, got {nvars}")
        self.nvars = nvars
        self._terms: Dict[Vector, Fraction] = {}
        for exps, c in (terms or {}).items():
            exps = check_vector(exps)
            if len(exps) != nvars:
                raise DegreeMismatchError(f"exponent vector {exps} for {nvars} variables")
            c = Fraction(c)
            if c:
                self._terms[exps] = self._terms.get(exps, 0) + c
        self._terms = {e: c for e, c in self._terms.items() if c}

    @classmethod
    def constant(cls, nvars: int, c: Coefficient = 1) -> "SparsePolynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def monomial(cls, exponents: Sequence[int], c: Coefficient = 1) -> "SparsePolynomial":
        return cls(len(exponents), {tuple(exponents): c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "SparsePolynomial":
        """x_{i+1}, i being 0-based."""
        exps = [0] * nvars
        exps[i] = 1
        return cls.monomial(exps)

    @property
    def terms(self) -> Dict[Vector, Fraction]:
        return dict(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Tuple[Vector, Fraction]]:
        return iter(sorted(self._terms.items(), reverse=True))

    def is_zero(self) -> bool:
        return not self._terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self._terms), default=0)

    # --------------------------
    # Ring operations
    # --------------------------
    def _check(self, other: "SparsePolynomial"):
        if other.nvars != self.nvars:
            raise DegreeMismatchError(f"polynomials in {self.nvars} and {other.nvars} variables")

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self._terms.items())))

    def __add__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        self._check(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePolynomial(self.nvars, out)

    def __neg__(self) -> "SparsePolynomial":
        return SparsePolynomial(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "SparsePolynomial") -> "SparsePolynomial":
        return self + (-other)

    def __mul__(self, other) -> "SparsePolynomial":
        if isinstance(other, Rational):
            return SparsePolynomial(self.nvars, {e: c * other for e, c in self._terms.items()})
        if not isinstance(other, SparsePolynomial):
            return NotImplemented
        self._check(other)
        out: Dict[Vector, Fraction] = {}
        for e1, c1 in self._terms.items():
            for e2, c2 in other._terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePolynomial(self.nvars, out)

    __rmul__ = __mul__

    def act(self, sigma: Permutation) -> "SparsePolynomial":
        """sigma . x^a = x^(sigma . a), extended linearly."""
        if sigma.degree != self.nvars:
            raise DegreeMismatchError(f"permutation of degree {sigma.degree} on {self.nvars} variables")
        return SparsePolynomial(self.nvars, {act(sigma, e): c for e, c in self._terms.items()})

    # --------------------------
    # Rendering
    # --------------------------
    def render(self) -> str:
        if not self._terms:
            return "0"
        out = ""
        for k, (exps, c) in enumerate(self):
            sign = "-" if c < 0 else "+"
            c = abs(c)
            factors = [f"x{i + 1}" if a == 1 else f"x{i + 1}^{a}" for i, a in enumerate(exps) if a]
            if not factors:
                body = str(c)
            elif c == 1:
                body = "*".join(factors)
            else:
                body = "*".join([str(c)] + factors)
            if k == 0:
                out = body if sign == "+" else "-" + body
            else:
                out += f" {sign} {body}"
        return out

    def __str__(self) -> str:
        return self.render()

    def __repr__(self) -> str:
        return f"SparsePolynomial({self.render()!r}, nvars={self.nvars})"


# --------------------------
# Invariants
# --------------------------

def orbit_sum(group: PermutationGroup, exponents: Sequence[int]) -> SparsePolynomial:
    """Sum of the monomials x^b over the orbit of a, each with coefficient 1."""
    return SparsePolynomial(group.degree, {b: 1 for b in orbit_of_vector(group, exponents)})


def reynolds(group: PermutationGroup, p: SparsePolynomial) -> SparsePolynomial:
    """(1/|G|) * sum over sigma in G of sigma . P"""
    if p.nvars != group.degree:
        raise DegreeMismatchError(f"polynomial in {p.nvars} variables for a group of degree {group.degree}")
    if group.order() > config.element_bound():
        raise CostBoundExceeded(f"group order {group.order()} is above the element bound {config.element_bound()}")
    out: Dict[Vector, Fraction] = {}
    for sigma in group.elements():
        for e, c in p.terms.items():
            image = act(sigma, e)
            out[image] = out.get(image, 0) + c
    return SparsePolynomial(p.nvars, out) * Fraction(1, group.order())


def is_invariant(group: PermutationGroup, p: SparsePolynomial) -> bool:
    # generators suffice: the stabilizer of P is a subgroup
    if p.nvars != group.degree:
        raise DegreeMismatchError(f"polynomial in {p.nvars} variables for a group of degree {group.degree}")
    return all(p.act(g) == p for g in group.generators)


def polynomial_stabilizer_bruteforce(p: SparsePolynomial, n: int = None) -> PermutationGroup:
    """The subgroup of S_n fixing P, by testing every permutation."""
    n = p.nvars if n is None else n
    if n != p.nvars:
        raise DegreeMismatchError(f"polynomial in {p.nvars} variables, asked for S_{n}")
    stab = subgroup_by_filter(n, lambda tau: p.act(tau) == p)
    stab.name = f"Stab({p.render()})"
    return stab
