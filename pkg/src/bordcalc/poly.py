"""Exact sparse multivariate polynomial arithmetic over F2 and Z.

Every variable carries a positive integer degree, so polynomials are graded
and all cohomological bookkeeping (graded components, homogeneity of ring
map images, eager truncation of infinite presentations) happens here.
Monomials are exponent tuples aligned with the ring's variable order;
coefficients are Python ints, reduced mod 2 when the ring has char 2.
Values are immutable after construction and safe to share.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Mapping, Sequence


@dataclass(frozen=True)
class Variable:
    """A named ring generator with a positive cohomological degree."""

    name: str
    degree: int = 1

    def __post_init__(self):
        if self.degree < 1:
            raise ValueError(f"variable {self.name!r} must have degree >= 1")


class Ring:
    """A graded polynomial ring presentation.

    char=2 gives F2 coefficients, char=0 arbitrary-precision integers.
    If ``truncation`` is set, terms of total degree above it are dropped
    eagerly after every operation.
    """

    __slots__ = ("variables", "char", "truncation", "_index", "_degrees")

    def __init__(self, variables: Iterable, char: int = 2, truncation: int | None = None):
        vs = tuple(v if isinstance(v, Variable) else Variable(*v) for v in variables)
        names = [v.name for v in vs]
        if len(set(names)) != len(names):
            raise ValueError("duplicate variable names in ring")
        if char not in (0, 2):
            raise ValueError("coefficient ring must be Z (char 0) or F2 (char 2)")
        if truncation is not None and truncation < 1:
            raise ValueError("truncation degree must be positive")
        self.variables = vs
        self.char = char
        self.truncation = truncation
        self._index = {v.name: i for i, v in enumerate(vs)}
        self._degrees = tuple(v.degree for v in vs)

    # -- identity ------------------------------------------------------

    def __eq__(self, other):
        return (
            isinstance(other, Ring)
            and self.variables == other.variables
            and self.char == other.char
            and self.truncation == other.truncation
        )

    def __hash__(self):
        return hash((self.variables, self.char, self.truncation))

    def __repr__(self):
        coeff = "F2" if self.char == 2 else "Z"
        names = ",".join(v.name for v in self.variables)
        trunc = f", truncation={self.truncation}" if self.truncation is not None else ""
        return f"Ring({coeff}[{names}]{trunc})"

    def __contains__(self, name: str) -> bool:
        return name in self._index

    def index(self, name: str) -> int:
        if name not in self._index:
            raise KeyError(f"unknown variable {name!r} in {self!r}")
        return self._index[name]

    def monomial_degree(self, exps: tuple) -> int:
        return sum(e * d for e, d in zip(exps, self._degrees))

    # -- element constructors ------------------------------------------

    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.const(1)

    def const(self, c: int) -> Polynomial:
        return self._canon({(0,) * len(self.variables): c})

    def var(self, name: str, exp: int = 1) -> Polynomial:
        return self.monomial({name: exp})

    def monomial(self, exps: Mapping[str, int], coeff: int = 1) -> Polynomial:
        key = [0] * len(self.variables)
        for name, e in exps.items():
            if e < 0:
                raise ValueError("negative exponent")
            key[self.index(name)] = e
        return self._canon({tuple(key): coeff})

    def from_terms(self, terms: Mapping[tuple, int]) -> Polynomial:
        return self._canon(dict(terms))

    def _canon(self, acc: dict) -> Polynomial:
        out = {}
        trunc = self.truncation
        for m, c in acc.items():
            if self.char:
                c %= self.char
            if not c:
                continue
            if trunc is not None and self.monomial_degree(m) > trunc:
                continue
            out[m] = c
        return Polynomial(self, out)


def _sort_key(ring: Ring, m: tuple):
    # graded lexicographic: total degree first, then lex on exponents
    return (ring.monomial_degree(m), m)


class Polynomial:
    """Immutable sparse polynomial attached to a Ring."""

    __slots__ = ("ring", "terms")

    def __init__(self, ring: Ring, terms: dict):
        self.ring = ring
        self.terms = terms

    # -- predicates -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def __bool__(self):
        return bool(self.terms)

    def degree(self) -> int:
        """Largest total degree of a term (-1 for the zero polynomial)."""
        if not self.terms:
            return -1
        return max(self.ring.monomial_degree(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {self.ring.monomial_degree(m) for m in self.terms}
        return len(degs) <= 1

    def coefficient(self, exps: Mapping[str, int]) -> int:
        key = [0] * len(self.ring.variables)
        for name, e in exps.items():
            key[self.ring.index(name)] = e
        return self.terms.get(tuple(key), 0)

    # -- arithmetic ------------------------------------------------------

    def _check_ring(self, other: Polynomial):
        if self.ring != other.ring:
            raise ValueError(f"ring mismatch: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other: Polynomial) -> Polynomial:
        self._check_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) + c
        return self.ring._canon(acc)

    def __sub__(self, other: Polynomial) -> Polynomial:
        self._check_ring(other)
        acc = dict(self.terms)
        for m, c in other.terms.items():
            acc[m] = acc.get(m, 0) - c
        return self.ring._canon(acc)

    def __neg__(self) -> Polynomial:
        return self.ring._canon({m: -c for m, c in self.terms.items()})

    def __mul__(self, other):
        if isinstance(other, int):
            return self.ring._canon({m: c * other for m, c in self.terms.items()})
        self._check_ring(other)
        acc: dict = {}
        trunc = self.ring.truncation
        deg = self.ring.monomial_degree
        for m1, c1 in self.terms.items():
            d1 = deg(m1) if trunc is not None else 0
            for m2, c2 in other.terms.items():
                if trunc is not None and d1 + deg(m2) > trunc:
                    continue
                key = tuple(a + b for a, b in zip(m1, m2))
                acc[key] = acc.get(key, 0) + c1 * c2
        return self.ring._canon(acc)

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, n: int) -> Polynomial:
        if n < 0:
            raise ValueError("negative power")
        result = self.ring.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self.terms == other.terms

    def __hash__(self):
        return hash((self.ring, frozenset(self.terms.items())))

    # -- structure -------------------------------------------------------

    def graded_component(self, d: int) -> Polynomial:
        """Sum of the terms of total degree exactly d."""
        deg = self.ring.monomial_degree
        return Polynomial(self.ring, {m: c for m, c in self.terms.items() if deg(m) == d})

    def homogeneous_degrees(self) -> list[int]:
        return sorted({self.ring.monomial_degree(m) for m in self.terms})

    def in_ring(self, other: Ring) -> Polynomial:
        """Re-express in a ring containing (by name and degree) all variables in use."""
        if other.char != self.ring.char:
            raise ValueError("ring mismatch: coefficient rings differ")
        pos = []
        for i, v in enumerate(self.ring.variables):
            if v.name in other:
                j = other.index(v.name)
                if other.variables[j].degree != v.degree:
                    raise ValueError(f"variable {v.name!r} changes degree")
                pos.append(j)
            else:
                pos.append(None)
        acc: dict = {}
        for m, c in self.terms.items():
            key = [0] * len(other.variables)
            for i, e in enumerate(m):
                if not e:
                    continue
                if pos[i] is None:
                    raise KeyError(f"unknown variable {self.ring.variables[i].name!r} in {other!r}")
                key[pos[i]] = e
            acc[tuple(key)] = acc.get(tuple(key), 0) + c
        return other._canon(acc)

    def __str__(self):
        if not self.terms:
            return "0"
        ring = self.ring
        parts = []
        for m in sorted(self.terms, key=lambda mm: _sort_key(ring, mm), reverse=True):
            c = self.terms[m]
            factors = [
                v.name if e == 1 else f"{v.name}^{e}"
                for v, e in zip(ring.variables, m)
                if e
            ]
            body = "*".join(factors)
            if not body:
                parts.append((c, str(abs(c))))
            elif abs(c) == 1:
                parts.append((c, body))
            else:
                parts.append((c, f"{abs(c)}*{body}"))
        out = parts[0][1] if parts[0][0] > 0 else "-" + parts[0][1]
        for c, text in parts[1:]:
            out += (" + " if c > 0 else " - ") + text
        return out

    def __repr__(self):
        return f"<{self}>"


class RingMap:
    """A substitution homomorphism determined by generator images.

    Every image must be zero or homogeneous of the degree of its source
    variable, so the induced map preserves the grading.
    """

    __slots__ = ("source", "target", "images", "_by_index", "_pow_cache")

    def __init__(self, source: Ring, target: Ring, images: Mapping[str, Polynomial]):
        self.source = source
        self.target = target
        by_index = []
        for v in source.variables:
            if v.name not in images:
                raise ValueError(f"missing image for {v.name!r}")
            img = images[v.name]
            if img.ring != target:
                raise ValueError(f"image of {v.name!r} lives in the wrong ring")
            if img and (not img.is_homogeneous() or img.degree() != v.degree):
                raise ValueError(f"image of {v.name!r} is not homogeneous of degree {v.degree}")
            by_index.append(img)
        self.images = dict(images)
        self._by_index = tuple(by_index)
        self._pow_cache: dict = {}

    def _power(self, i: int, e: int) -> Polynomial:
        key = (i, e)
        cached = self._pow_cache.get(key)
        if cached is None:
            cached = self._by_index[i] ** e
            self._pow_cache[key] = cached
        return cached

    def __call__(self, p: Polynomial) -> Polynomial:
        if p.ring != self.source:
            raise ValueError("polynomial not in the source ring")
        acc: dict = {}
        one = self.target.one()
        for m, c in p.terms.items():
            term = one
            dead = False
            for i, e in enumerate(m):
                if not e:
                    continue
                if self._by_index[i].is_zero():
                    dead = True
                    break
                term = term * self._power(i, e)
            if dead:
                continue
            for mm, cc in term.terms.items():
                acc[mm] = acc.get(mm, 0) + c * cc
        return self.target._canon(acc)


def substitute(f: RingMap, p: Polynomial) -> Polynomial:
    """Apply the substitution homomorphism f to p."""
    return f(p)


def graded_component(p: Polynomial, d: int) -> Polynomial:
    """Sum of the terms of p of total degree exactly d."""
    return p.graded_component(d)


def reduce_mod_variables(p: Polynomial, kill: Iterable[str]) -> Polynomial:
    """Drop every term containing one of the named variables (set them to 0)."""
    idx = [p.ring.index(name) for name in kill]
    return Polynomial(
        p.ring, {m: c for m, c in p.terms.items() if all(m[i] == 0 for i in idx)}
    )


def reduce_mod_monomial(p: Polynomial, exps: Mapping[str, int]) -> Polynomial:
    """Drop every term divisible by the given monomial."""
    bound = [(p.ring.index(name), e) for name, e in exps.items()]
    return Polynomial(
        p.ring,
        {m: c for m, c in p.terms.items() if any(m[i] < e for i, e in bound)},
    )


def permute_variables(p: Polynomial, i: int, j: int) -> Polynomial:
    """Swap the exponents of the i-th and j-th variables in every term."""
    acc = {}
    for m, c in p.terms.items():
        key = list(m)
        key[i], key[j] = key[j], key[i]
        acc[tuple(key)] = c
    return Polynomial(p.ring, acc)


def elementary_symmetric(ring: Ring, k: int, names: Sequence[str] | None = None) -> Polynomial:
    """The k-th elementary symmetric polynomial in the named variables."""
    if names is None:
        names = [v.name for v in ring.variables]
    if k == 0:
        return ring.one()
    if k > len(names):
        return ring.zero()
    acc = {}
    idxs = [ring.index(n) for n in names]
    width = len(ring.variables)
    for combo in combinations(idxs, k):
        key = [0] * width
        for i in combo:
            key[i] = 1
        acc[tuple(key)] = 1
    return ring._canon(acc)


def power_sum(ring: Ring, n: int, names: Sequence[str] | None = None) -> Polynomial:
    """The n-th power sum of the named variables."""
    if names is None:
        names = [v.name for v in ring.variables]
    acc = {}
    width = len(ring.variables)
    for name in names:
        key = [0] * width
        key[ring.index(name)] = n
        acc[tuple(key)] = acc.get(tuple(key), 0) + 1
    return ring._canon(acc)


def is_symmetric(p: Polynomial) -> bool:
    """Check invariance under adjacent transpositions (they generate Sigma_N)."""
    n = len(p.ring.variables)
    return all(permute_variables(p, i, i + 1) == p for i in range(n - 1))


def express_in_elementary(p: Polynomial, sigma_prefix: str = "sigma") -> Polynomial:
    """Rewrite a symmetric polynomial in terms of elementary symmetric functions.

    Returns a polynomial in a fresh ring with generators sigma1..sigmaN where
    sigmak carries degree k (times the common degree of the input variables).
    Classical leading-term elimination: the graded-lex leading exponent vector
    of a symmetric polynomial is weakly decreasing, and subtracting the
    matching product of elementary symmetric polynomials strictly lowers it.
    """
    ring = p.ring
    n = len(ring.variables)
    base_deg = {v.degree for v in ring.variables}
    if len(base_deg) > 1:
        raise ValueError("variables must share a common degree")
    d = base_deg.pop() if base_deg else 1
    if not is_symmetric(p):
        raise ValueError("polynomial is not symmetric")
    sigma = Ring([(f"{sigma_prefix}{k}", k * d) for k in range(1, n + 1)], char=ring.char)
    elem = [None] + [elementary_symmetric(ring, k) for k in range(1, n + 1)]
    out_acc: dict = {}
    work = p
    while work:
        lead = max(work.terms, key=lambda m: _sort_key(ring, m))
        c = work.terms[lead]
        if any(lead[i] < lead[i + 1] for i in range(n - 1)):
            raise ValueError("polynomial is not symmetric")
        sigma_key = [0] * n
        prod = ring.one()
        for k in range(n):
            e = lead[k] - (lead[k + 1] if k + 1 < n else 0)
            if e:
                sigma_key[k] = e
                prod = prod * elem[k + 1] ** e
        work = work - c * prod
        out_acc[tuple(sigma_key)] = out_acc.get(tuple(sigma_key), 0) + c
    return sigma._canon(out_acc)


def mod2(p: Polynomial) -> Polynomial:
    """Reduce integer coefficients mod 2 (into the char-2 twin of the ring)."""
    if p.ring.char == 2:
        return p
    twin = Ring(p.ring.variables, char=2, truncation=p.ring.truncation)
    return twin._canon(dict(p.terms))
