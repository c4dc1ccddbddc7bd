"""Sparse quasi-homogeneous polynomials with exact coefficients.

Coefficients live in Q or in a single real/imaginary quadratic extension
Q(sqrt(m)) with m a square-free integer; one square root is all the normal
form construction ever needs.  Monomials are plain exponent tuples keyed in a
dict, as usual for sparse multivariate arithmetic.

The representability helpers (`representable`, `eligible_partners`) answer
"does a monomial of weighted degree d supported on an index set exist", which
is the arithmetic core of the quasi-smoothness criteria of Iano-Fletcher
("Working with weighted complete intersections", Thm 8.1 / 8.7).
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence


def _squarefree_split(n: int) -> tuple[int, int]:
    """n = u**2 * m with m square-free (sign kept on m); returns (u, m)."""
    if n == 0:
        return 0, 1
    sign = -1 if n < 0 else 1
    n = abs(n)
    u, m = 1, 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            u *= p ** (e // 2)
            if e % 2:
                m *= p
        p += 1 if p == 2 else 2
    m *= n
    return u, sign * m


@dataclass(frozen=True)
class Coeff:
    """Element base + rad*sqrt(m) of Q(sqrt(m)), m square-free."""

    base: Fraction
    rad: Fraction = Fraction(0)
    m: int = 1

    def __post_init__(self):
        if self.m == 1 and self.rad != 0:
            # sqrt(1) collapses into the rational part
            object.__setattr__(self, "base", self.base + self.rad)
            object.__setattr__(self, "rad", Fraction(0))
        if self.rad == 0 and self.m != 1:
            object.__setattr__(self, "m", 1)

    @classmethod
    def of(cls, value) -> "Coeff":
        if isinstance(value, Coeff):
            return value
        return cls(Fraction(value))

    @classmethod
    def sqrt_of(cls, value) -> "Coeff":
        """A square root of a nonzero rational, with square-free radicand."""
        r = Fraction(value)
        if r == 0:
            return cls(Fraction(0))
        u, m = _squarefree_split(r.numerator * r.denominator)
        if m == 1:
            return cls(Fraction(u, r.denominator))
        return cls(Fraction(0), Fraction(u, r.denominator), m)

    @property
    def is_zero(self) -> bool:
        return self.base == 0 and self.rad == 0

    @property
    def is_rational(self) -> bool:
        return self.rad == 0

    def _join(self, other: "Coeff") -> int:
        if self.m != 1 and other.m != 1 and self.m != other.m:
            raise ValueError(f"incompatible radicands {self.m} and {other.m}")
        return self.m if self.m != 1 else other.m

    def __add__(self, other) -> "Coeff":
        other = Coeff.of(other)
        m = self._join(other)
        return Coeff(self.base + other.base, self.rad + other.rad, m)

    def __neg__(self) -> "Coeff":
        return Coeff(-self.base, -self.rad, self.m)

    def __sub__(self, other) -> "Coeff":
        return self + (-Coeff.of(other))

    def __mul__(self, other) -> "Coeff":
        other = Coeff.of(other)
        m = self._join(other)
        return Coeff(
            self.base * other.base + self.rad * other.rad * m,
            self.base * other.rad + self.rad * other.base,
            m,
        )

    def inverse(self) -> "Coeff":
        if self.is_zero:
            raise ZeroDivisionError("coefficient is zero")
        norm = self.base * self.base - self.rad * self.rad * self.m
        if norm == 0:
            raise ZeroDivisionError("zero divisor in degenerate extension")
        return Coeff(self.base / norm, -self.rad / norm, self.m)

    def __truediv__(self, other) -> "Coeff":
        return self * Coeff.of(other).inverse()

    def __str__(self) -> str:
        if self.is_rational:
            return str(self.base)
        rad = f"{self.rad}*sqrt({self.m})"
        if self.base == 0:
            return rad
        return f"{self.base} + {rad}"

    def to_json(self) -> dict:
        return {"coeff": str(self.base), "radical": str(self.rad), "radicand": self.m}

    @classmethod
    def from_json(cls, obj: Mapping) -> "Coeff":
        return cls(Fraction(obj.get("coeff", "0")),
                   Fraction(obj.get("radical", "0")),
                   int(obj.get("radicand", 1)))


ONE = Coeff(Fraction(1))


def weighted_degree(exponents: Sequence[int], weights: Sequence[int]) -> int:
    """Weighted degree sum(e_i * a_i) of an exponent vector."""
    if len(exponents) != len(weights):
        raise ValueError("exponent/weight length mismatch")
    return sum(e * a for e, a in zip(exponents, weights))


class GradedPolynomial:
    """Quasi-homogeneous polynomial over fixed weights, stored sparsely."""

    __slots__ = ("weights", "degree", "terms")

    def __init__(self, weights: Sequence[int], degree: int,
                 terms: Mapping[tuple, Coeff] | Iterable[tuple]):
        self.weights = tuple(int(a) for a in weights)
        self.degree = int(degree)
        items = terms.items() if isinstance(terms, Mapping) else terms
        table: dict[tuple, Coeff] = {}
        for exps, coeff in items:
            coeff = Coeff.of(coeff)
            if coeff.is_zero:
                continue
            exps = tuple(int(e) for e in exps)
            if weighted_degree(exps, self.weights) != self.degree:
                raise ValueError(f"term {exps} breaks quasi-homogeneity of degree {self.degree}")
            if exps in table:
                coeff = table[exps] + coeff
            if coeff.is_zero:
                del table[exps]
            else:
                table[exps] = coeff
        self.terms = table

    @property
    def nvars(self) -> int:
        return len(self.weights)

    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exps: Sequence[int]) -> Coeff:
        return self.terms.get(tuple(exps), Coeff(Fraction(0)))

    def involves(self, i: int) -> bool:
        return any(e[i] for e in self.terms)

    def support_vars(self) -> frozenset[int]:
        out = set()
        for e in self.terms:
            out.update(k for k, v in enumerate(e) if v)
        return frozenset(out)

    def scale(self, factor) -> "GradedPolynomial":
        factor = Coeff.of(factor)
        return GradedPolynomial(
            self.weights, self.degree,
            {e: c * factor for e, c in self.terms.items()})

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        if self.weights != other.weights or self.degree != other.degree:
            raise ValueError("cannot add polynomials of different grading")
        table = dict(self.terms)
        for e, c in other.terms.items():
            s = table.get(e, Coeff(Fraction(0))) + c
            if s.is_zero:
                table.pop(e, None)
            else:
                table[e] = s
        return GradedPolynomial(self.weights, self.degree, table)

    def __sub__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        return self + other.scale(-1)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedPolynomial)
                and self.weights == other.weights
                and self.degree == other.degree
                and self.terms == other.terms)

    def __hash__(self):
        return hash((self.weights, self.degree, frozenset(self.terms.items())))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for exps in sorted(self.terms):
            factors = [f"x{i}^{e}" if e > 1 else f"x{i}"
                       for i, e in enumerate(exps) if e]
            mono = "*".join(factors) if factors else "1"
            c = self.terms[exps]
            parts.append(mono if c == ONE else f"({c})*{mono}")
        return " + ".join(parts)

    def to_json(self) -> dict:
        return {
            "weights": list(self.weights),
            "degree": self.degree,
            "terms": [dict(exps=list(e), **self.terms[e].to_json())
                      for e in sorted(self.terms)],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "GradedPolynomial":
        terms = {tuple(t["exps"]): Coeff.from_json(t) for t in obj["terms"]}
        return cls(obj["weights"], obj["degree"], terms)


def poly_mul(p: GradedPolynomial, q: GradedPolynomial) -> GradedPolynomial:
    """Product of two graded polynomials (degrees add)."""
    if p.weights != q.weights:
        raise ValueError("weight mismatch")
    table: dict[tuple, Coeff] = {}
    for e1, c1 in p.terms.items():
        for e2, c2 in q.terms.items():
            e = tuple(a + b for a, b in zip(e1, e2))
            prod = c1 * c2
            acc = table.get(e)
            s = prod if acc is None else acc + prod
            if s.is_zero:
                table.pop(e, None)
            else:
                table[e] = s
    return GradedPolynomial(p.weights, p.degree + q.degree, table)


def poly_pow(p: GradedPolynomial, k: int) -> GradedPolynomial:
    if k == 0:
        return GradedPolynomial(p.weights, 0, {tuple(0 for _ in p.weights): ONE})
    out = p
    for _ in range(k - 1):
        out = poly_mul(out, p)
    return out


# ---------------------------------------------------------------------------
# representability (numerical-semigroup membership with witnesses)
# ---------------------------------------------------------------------------

def semigroup_mask(gens: Sequence[int], limit: int) -> int:
    """Bitmask whose bit d says that d is a nonnegative combination of gens.

    Classic coin-problem DP packed into a Python integer; bit 0 (the empty
    combination) is always set.
    """
    full = (1 << (limit + 1)) - 1
    mask = 1
    for a in gens:
        if a <= 0:
            raise ValueError("generators must be positive")
        if a > limit:
            continue
        prev = -1
        while prev != mask:
            prev = mask
            mask |= (mask << a) & full
    return mask


def representable(weights: Sequence[int], subset: Iterable[int], d: int) -> Optional[tuple]:
    """Lexicographically smallest monomial on `subset` of weighted degree d.

    Returns an exponent tuple of full length (zeros off the subset), or None
    when no nonnegative combination of the selected weights reaches d.
    """
    if d < 0:
        return None
    idx = sorted(set(subset))
    if any(i < 0 or i >= len(weights) for i in idx):
        raise ValueError("subset index out of range")
    gens = [weights[i] for i in idx]
    # feasibility of each suffix, then a greedy smallest-first reconstruction
    k = len(gens)
    suffix = [0] * (k + 1)
    suffix[k] = 1  # only degree 0
    for pos in range(k - 1, -1, -1):
        full = (1 << (d + 1)) - 1
        m = suffix[pos + 1]
        a = gens[pos]
        prev = -1
        while prev != m:
            prev = m
            m |= (m << a) & full
        suffix[pos] = m
    if not (suffix[0] >> d) & 1:
        return None
    exps = [0] * len(weights)
    remaining = d
    for pos, i in enumerate(idx):
        a = gens[pos]
        e = 0
        while not (suffix[pos + 1] >> (remaining - e * a)) & 1:
            e += 1
        exps[i] = e
        remaining -= e * a
    assert remaining == 0
    return tuple(exps)


def eligible_partners(weights: Sequence[int], subset: Iterable[int], d: int) -> tuple[int, ...]:
    """Indices e outside `subset` admitting a monomial (on the subset) of
    degree d - a_e; degree 0 counts via the empty monomial."""
    inside = set(subset)
    out = []
    for e, a in enumerate(weights):
        if e in inside:
            continue
        if d - a >= 0 and representable(weights, inside, d - a) is not None:
            out.append(e)
    return tuple(out)


# ---------------------------------------------------------------------------
# substitution and generic members
# ---------------------------------------------------------------------------

def substitute(p: GradedPolynomial, i: int, replacement: GradedPolynomial) -> GradedPolynomial:
    """Substitute x_i <- replacement, a graded coordinate change.

    The replacement must be quasi-homogeneous of degree equal to the weight of
    x_i, and must either avoid x_i entirely or have the triangular shape
    x_i + (terms free of x_i), so that the change is invertible.
    """
    if replacement.weights != p.weights:
        raise ValueError("ungraded substitution: weight vectors differ")
    if replacement.degree != p.weights[i]:
        raise ValueError("ungraded substitution: replacement degree "
                         f"{replacement.degree} != weight {p.weights[i]}")
    if replacement.involves(i):
        unit = tuple(int(k == i) for k in range(p.nvars))
        rest = dict(replacement.terms)
        head = rest.pop(unit, None)
        if head != ONE or any(e[i] for e in rest):
            raise ValueError("replacement must avoid the variable or be "
                             "x_i plus terms without it")
    table: dict[tuple, Coeff] = {}
    powers: dict[int, GradedPolynomial] = {}
    for exps, coeff in p.terms.items():
        e_i = exps[i]
        if e_i == 0:
            acc = table.get(exps)
            s = coeff if acc is None else acc + coeff
            if s.is_zero:
                table.pop(exps, None)
            else:
                table[exps] = s
            continue
        if e_i not in powers:
            powers[e_i] = poly_pow(replacement, e_i)
        stripped = tuple(0 if k == i else e for k, e in enumerate(exps))
        for rexps, rcoeff in powers[e_i].terms.items():
            e = tuple(a + b for a, b in zip(stripped, rexps))
            prod = coeff * rcoeff
            acc = table.get(e)
            s = prod if acc is None else acc + prod
            if s.is_zero:
                table.pop(e, None)
            else:
                table[e] = s
    return GradedPolynomial(p.weights, p.degree, table)


def monomials_of_degree(weights: Sequence[int], d: int,
                        cap: Optional[int] = None) -> Iterator[tuple]:
    """All exponent tuples of weighted degree d, in lexicographic order."""
    n = len(weights)
    count = 0

    def rec(pos: int, remaining: int, prefix: tuple):
        nonlocal count
        if pos == n:
            if remaining == 0:
                count += 1
                if cap is not None and count > cap:
                    raise ValueError(f"monomial count exceeds cap {cap}")
                yield prefix
            return
        a = weights[pos]
        if pos == n - 1:
            if remaining % a == 0:
                yield from rec(pos + 1, 0, prefix + (remaining // a,))
            return
        for e in range(remaining // a + 1):
            yield from rec(pos + 1, remaining - e * a, prefix + (e,))

    yield from rec(0, d, ())


GENERIC_TERM_CAP = 200_000


def generic_member(weights: Sequence[int], d: int, seed: int,
                   cap: int = GENERIC_TERM_CAP) -> GradedPolynomial:
    """A pseudo-generic member of the degree-d linear system: every monomial
    of weighted degree d appears, with a nonzero rational coefficient drawn
    deterministically from the seed."""
    if d < 1:
        raise ValueError("degree must be positive")
    rng = random.Random((seed, tuple(weights), d).__repr__())
    table = {}
    for exps in monomials_of_degree(weights, d, cap=cap):
        num = rng.randrange(1, 10) * (1 if rng.randrange(2) else -1)
        den = rng.randrange(1, 5)
        table[exps] = Coeff(Fraction(num, den))
    return GradedPolynomial(weights, d, table)
