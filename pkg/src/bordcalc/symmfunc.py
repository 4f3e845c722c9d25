"""Newton/Girard polynomials, Whitney coproduct, and primitivity tests.

The polynomials s_n and s_{p,p} live in Z[sigma1..sigmaN] with sigmak of
weighted degree k; substituting Stiefel-Whitney classes for the sigmak
evaluates them on a bundle.  The sign convention is fixed so that
substituting elementary symmetric polynomials returns the plain power sum
x_1^n + ... + x_N^n.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .poly import Polynomial, Ring, RingMap, mod2
from .report import Case, case
from . import steenrod


def sigma_ring(n: int, char: int = 0) -> Ring:
    """Z[sigma1..sigman] (or its F2 twin) with sigmak of degree k."""
    return Ring([(f"sigma{k}", k) for k in range(1, n + 1)], char=char)


def sw_ring(top: int, lowest: int = 1, truncation: int | None = None) -> Ring:
    """F2[w<lowest>..w<top>] with wk of degree k; lowest=2 models the w1=0 quotient."""
    return Ring([(f"w{k}", k) for k in range(lowest, top + 1)], char=2, truncation=truncation)


@dataclass(frozen=True)
class SnPolynomial:
    """The polynomial expressing the n-th power sum in elementary symmetric functions."""

    n: int
    body: Polynomial

    def __post_init__(self):
        if self.body.homogeneous_degrees() != [self.n]:
            raise ValueError(f"s_{self.n} is not homogeneous of weighted degree {self.n}")
        top = self.body.coefficient({f"sigma{self.n}": 1})
        if top != (-1) ** (self.n - 1) * self.n:
            raise ValueError(f"s_{self.n} has wrong sigma{self.n} coefficient {top}")


@lru_cache(maxsize=None)
def s_n_newton(n: int) -> SnPolynomial:
    """s_n via the classical recursion s_m = sigma1*s_{m-1} - ... + (-1)^(m-1)*m*sigmam."""
    if n < 1:
        raise ValueError("n must be positive")
    ring = sigma_ring(n)
    s: list[Polynomial] = [ring.zero()]
    for m in range(1, n + 1):
        acc = ring.var(f"sigma{m}") * ((-1) ** (m - 1) * m)
        for k in range(1, m):
            acc = acc + ring.var(f"sigma{k}") * s[m - k] * ((-1) ** (k - 1))
        s.append(acc)
    return SnPolynomial(n, s[n])


def _exponent_partitions(n: int, max_part: int):
    """Yield multiplicity maps {m: i_m} with sum m*i_m = n and parts <= max_part."""
    if n == 0:
        yield {}
        return
    for m in range(min(n, max_part), 0, -1):
        for i in range(1, n // m + 1):
            for rest in _exponent_partitions(n - m * i, m - 1):
                out = dict(rest)
                out[m] = i
                yield out


@lru_cache(maxsize=None)
def s_n_girard(n: int) -> SnPolynomial:
    """s_n via Girard's explicit sum over partitions, with exact big-integer division."""
    if n < 1:
        raise ValueError("n must be positive")
    ring = sigma_ring(n)
    acc = ring.zero()
    for part in _exponent_partitions(n, n):
        total = sum(part.values())
        num = n * factorial(total - 1)
        den = 1
        for i_m in part.values():
            den *= factorial(i_m)
        if num % den:
            raise ArithmeticError(f"non-integral Girard coefficient at partition {part}")
        coeff = (-1) ** (n + total) * (num // den)
        acc = acc + ring.monomial({f"sigma{m}": i for m, i in part.items()}, coeff)
    return SnPolynomial(n, acc)


def s_pp(p: int) -> Polynomial:
    """s_{p,p} = (s_{2p} - s_p^2) / 2, an exact division over Z."""
    if p < 1:
        raise ValueError("p must be positive")
    ring = sigma_ring(2 * p)
    diff = s_n_newton(2 * p).body - s_n_newton(p).body.in_ring(ring) ** 2
    half = {}
    for m, c in diff.terms.items():
        if c % 2:
            raise ArithmeticError(f"s_{2*p} - s_{p}^2 has an odd coefficient at {m}")
        half[m] = c // 2
    return ring.from_terms(half)


# -- Whitney-sum coproduct ---------------------------------------------------


def _check_sw_ring(ring: Ring):
    for v in ring.variables:
        if v.name != f"w{v.degree}":
            raise ValueError(f"expected Stiefel-Whitney generators w<k>, got {v.name!r}")


def tensor_square_ring(ring: Ring) -> Ring:
    """Two disjoint copies of a w-ring: primed (left factor) and double-primed (right)."""
    _check_sw_ring(ring)
    left = [(f"{v.name}'", v.degree) for v in ring.variables]
    right = [(f"{v.name}''", v.degree) for v in ring.variables]
    return Ring(left + right, char=2, truncation=ring.truncation)


def tensor_pure(p: Polynomial, side: str) -> Polynomial:
    """Embed p as p (x) 1 (side='left') or 1 (x) p (side='right')."""
    tensor = tensor_square_ring(p.ring)
    suffix = "'" if side == "left" else "''"
    images = {v.name: tensor.var(v.name + suffix) for v in p.ring.variables}
    return RingMap(p.ring, tensor, images)(p)


def coproduct(p: Polynomial) -> Polynomial:
    """The Whitney-sum coproduct, as a polynomial in the primed/double-primed ring.

    w_k maps to the sum of w_i' * w_j'' over i + j = k, where indices absent
    from the presentation (for example w1 in the w1 = 0 quotient) contribute
    nothing and index 0 means the unit.
    """
    ring = p.ring
    _check_sw_ring(ring)
    tensor = tensor_square_ring(ring)
    present = {v.degree for v in ring.variables}
    images = {}
    for v in ring.variables:
        k = v.degree
        acc = tensor.var(f"w{k}'") + tensor.var(f"w{k}''")
        for i in range(1, k):
            if i in present and (k - i) in present:
                acc = acc + tensor.var(f"w{i}'") * tensor.var(f"w{k - i}''")
        images[v.name] = acc
    return RingMap(ring, tensor, images)(p)


def is_primitive(p: Polynomial) -> bool:
    """True iff coproduct(p) = p (x) 1 + 1 (x) p in p's own presentation."""
    if not p.is_homogeneous():
        raise ValueError("primitivity test needs a homogeneous element")
    return coproduct(p) == tensor_pure(p, "left") + tensor_pure(p, "right")


def sn_sw(n: int, ring: Ring) -> Polynomial:
    """s_n evaluated on Stiefel-Whitney classes in the given w-ring (mod 2)."""
    _check_sw_ring(ring)
    present = {v.degree for v in ring.variables}
    src = sigma_ring(n, char=2)
    images = {
        f"sigma{k}": ring.var(f"w{k}") if k in present else ring.zero()
        for k in range(1, n + 1)
    }
    return RingMap(src, ring, images)(mod2(s_n_newton(n).body))


def spp_sw(p: int, ring: Ring) -> Polynomial:
    """s_{p,p} evaluated on Stiefel-Whitney classes in the given w-ring (mod 2)."""
    _check_sw_ring(ring)
    body = mod2(s_pp(p))
    present = {v.degree for v in ring.variables}
    images = {
        f"sigma{k}": ring.var(f"w{k}") if k in present else ring.zero()
        for k in range(1, 2 * p + 1)
    }
    return RingMap(body.ring, ring, images)(body)


# -- restriction checks over the rank-four elementary abelian group ----------


def rank4_ring() -> Ring:
    """F2[alpha, beta, gamma, delta], four degree-one generators."""
    return Ring([("alpha", 1), ("beta", 1), ("gamma", 1), ("delta", 1)], char=2)


def _abc(ring: Ring):
    alpha, beta, gamma, delta = (ring.var(n) for n in ("alpha", "beta", "gamma", "delta"))
    a = alpha * alpha + alpha * delta
    b = beta * beta + beta * delta
    c = gamma * gamma + gamma * delta
    return a, b, c, delta


def verify_sq1_chern() -> list[Case]:
    """Check Sq1 on the degree-4 and degree-6 Chern-type generators by restriction.

    The generators of the rank-three unitary group extended by conjugation
    restrict to A*B*C-type classes over the rank-four elementary abelian
    subgroup, where Sq1 is forced by the squaring rule on degree-one classes.
    """
    ring = rank4_ring()
    sq1 = steenrod.squaring_action(ring)
    a, b, c, delta = _abc(ring)
    cases = [
        case("Sq1(A) = A*delta", a * delta, sq1(a)),
        case("Sq1(B) = B*delta", b * delta, sq1(b)),
        case("Sq1(C) = C*delta", c * delta, sq1(c)),
    ]
    chern = Ring([("c1", 1), ("c2", 2), ("c4", 4), ("c6", 6)], char=2)
    restrict = RingMap(
        chern, ring,
        {"c1": delta, "c2": a + b + c, "c4": a * b + b * c + a * c, "c6": a * b * c},
    )
    cases.append(case("Sq1(c4 restriction) = 0", ring.zero(), sq1(restrict(chern.var("c4")))))
    cases.append(
        case(
            "Sq1(c6 restriction) = restriction of c1*c6",
            restrict(chern.var("c1") * chern.var("c6")),
            sq1(restrict(chern.var("c6"))),
        )
    )
    return cases


def verify_fiber_tangent_class() -> list[Case]:
    """Expand the four-line-bundle product for the vertical tangent bundle.

    Restricting the rank-four representation to the elementary abelian
    subgroup turns the total Stiefel-Whitney class into a product of four
    degree-one factors; collecting it in A, B, C, delta and pulling back
    recovers the closed form 1 + (x1^2 + x2) + x1*x2 + x4.
    """
    ring = rank4_ring()
    alpha, beta, gamma, delta = (ring.var(n) for n in ("alpha", "beta", "gamma", "delta"))
    a, b, c, _ = _abc(ring)
    one = ring.one()
    product = (
        (one + alpha + gamma)
        * (one + alpha + gamma + delta)
        * (one + beta + gamma)
        * (one + beta + gamma + delta)
    )
    expected = one + (a + b + delta * delta) + (a + b) * delta + (a * b + c * c + (a + b) * c)
    cases = [
        case("degree-2 part = A + B + delta^2", a + b + delta * delta, product.graded_component(2)),
        case("degree-3 part = (A + B)*delta", (a + b) * delta, product.graded_component(3)),
        case(
            "degree-4 part = AB + C^2 + (A + B)C",
            a * b + c * c + (a + b) * c,
            product.graded_component(4),
        ),
        case("full product matches", expected, product),
    ]
    bundle = Ring([("d1", 1), ("a2", 2), ("b2", 2), ("a4", 4)], char=2)
    d1, a2, b2, a4 = (bundle.var(n) for n in ("d1", "a2", "b2", "a4"))
    w_total = bundle.one() + (d1 * d1 + a2) + d1 * a2 + (a4 + b2 * b2 + a2 * b2)
    restrict = RingMap(bundle, ring, {"d1": delta, "a2": a + b, "a4": a * b, "b2": c})
    cases.append(case("restriction of total class equals the product", product, restrict(w_total)))
    total = Ring([("x1", 1), ("x2", 2), ("x4", 4)], char=2)
    x1, x2, x4 = (total.var(n) for n in ("x1", "x2", "x4"))
    incl = RingMap(bundle, total, {"d1": x1, "a2": x2, "a4": x4, "b2": x2})
    cases.append(
        case(
            "pullback gives 1 + (x1^2 + x2) + x1*x2 + x4",
            total.one() + (x1 * x1 + x2) + x1 * x2 + x4,
            incl(w_total),
        )
    )
    return cases
