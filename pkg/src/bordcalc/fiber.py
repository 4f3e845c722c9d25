"""Integration along the fiber for the CP^2- and RP^2-bundle cohomology.

The total ring is a free rank-three module over the base ring via the
pullback pi*, with basis {1, xb, xb^2} for the distinguished generator xb
(x2 in the oriented case, x1 in the unoriented case).  decompose() finds
the unique coordinates of an element in that basis by a terminating
rewrite system, and pi_shriek() reads off the top coordinate, which drops
the cohomological degree by the fiber dimension.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .arithmetic import binom_parity
from .poly import Polynomial, Ring, RingMap, reduce_mod_variables
from . import symmfunc


@dataclass(frozen=True)
class BundleConfig:
    """Rings and pullback data for one of the two projective-bundle cases."""

    case: str  # "oriented" | "unoriented"
    base_ring: Ring
    total_ring: Ring
    pi_star: RingMap
    basis_name: str


@dataclass(frozen=True)
class ModuleDecomposition:
    """Coordinates a, b, c of an element as a*1 + b*xb + c*xb^2 over the base ring."""

    a: Polynomial
    b: Polynomial
    c: Polynomial


@lru_cache(maxsize=None)
def oriented_bundle() -> BundleConfig:
    """CP^2-bundle case: F2[x1,x2,x4] over F2[y1,y4,y6], basis {1, x2, x2^2}."""
    total = Ring([("x1", 1), ("x2", 2), ("x4", 4)], char=2)
    base = Ring([("y1", 1), ("y4", 4), ("y6", 6)], char=2)
    x1, x2, x4 = (total.var(n) for n in ("x1", "x2", "x4"))
    pi = RingMap(base, total, {"y1": x1, "y4": x2 * x2 + x4, "y6": x2 * x4})
    return BundleConfig("oriented", base, total, pi, "x2")


@lru_cache(maxsize=None)
def unoriented_bundle() -> BundleConfig:
    """RP^2-bundle case: F2[x1,x2] over F2[y2,y3], basis {1, x1, x1^2}."""
    total = Ring([("x1", 1), ("x2", 2)], char=2)
    base = Ring([("y2", 2), ("y3", 3)], char=2)
    x1, x2 = total.var("x1"), total.var("x2")
    pi = RingMap(base, total, {"y2": x1 * x1 + x2, "y3": x1 * x2})
    return BundleConfig("unoriented", base, total, pi, "x1")


def _toggle(d: dict, key: tuple):
    if key in d:
        del d[key]
    else:
        d[key] = 1


def decompose(cfg: BundleConfig, p: Polynomial) -> ModuleDecomposition:
    """Unique free-module coordinates of p over the base ring.

    Oriented rewrite system (u, v stand for the pullbacks of y4, y6):
    substitute x4 = u + x2^2, then x2^3 -> v + x2*u until every x2-exponent
    is at most two.  Each step lowers the basis-variable exponent, so the
    rewriting terminates; uniqueness is checked by the recomposition tests.
    The unoriented case runs the same system with x2 = u + x1^2 and
    x1^3 -> v + x1*u.
    """
    if p.ring != cfg.total_ring:
        raise ValueError("polynomial not in the total ring of this bundle")
    # work keys: (kept x1-exponent, basis exponent, u-exponent, v-exponent);
    # the unoriented case has no kept variable and uses slot zero for x1.
    work: dict = {}
    if cfg.case == "oriented":
        i1, i2, i4 = (cfg.total_ring.index(n) for n in ("x1", "x2", "x4"))
        for m in p.terms:
            a, b, c = m[i1], m[i2], m[i4]
            for k in range(c + 1):
                if binom_parity(c, k):
                    _toggle(work, (a, b + 2 * (c - k), k, 0))
    else:
        i1, i2 = (cfg.total_ring.index(n) for n in ("x1", "x2"))
        for m in p.terms:
            a, b = m[i1], m[i2]
            for k in range(b + 1):
                if binom_parity(b, k):
                    _toggle(work, (0, a + 2 * (b - k), k, 0))
    while True:
        hot = [key for key in work if key[1] >= 3]
        if not hot:
            break
        for key in hot:
            if key not in work:  # cancelled by an earlier toggle in this sweep
                continue
            a, b, u, v = key
            del work[key]
            _toggle(work, (a, b - 3, u, v + 1))
            _toggle(work, (a, b - 2, u + 1, v))
    base = cfg.base_ring
    parts = [{}, {}, {}]
    width = len(base.variables)
    for a, b, u, v in work:
        key = [0] * width
        if cfg.case == "oriented":
            key[base.index("y1")] = a
            key[base.index("y4")] = u
            key[base.index("y6")] = v
        else:
            key[base.index("y2")] = u
            key[base.index("y3")] = v
        parts[b][tuple(key)] = 1
    return ModuleDecomposition(*(Polynomial(base, t) for t in parts))


def recompose(cfg: BundleConfig, dec: ModuleDecomposition) -> Polynomial:
    """Inverse of decompose: pi*(a) + pi*(b)*xb + pi*(c)*xb^2."""
    xb = cfg.total_ring.var(cfg.basis_name)
    pi = cfg.pi_star
    return pi(dec.a) + pi(dec.b) * xb + pi(dec.c) * xb * xb


def pi_shriek(cfg: BundleConfig, p: Polynomial) -> Polynomial:
    """Integration along the fiber: the xb^2-coordinate of the decomposition."""
    return decompose(cfg, p).c


def pi_shriek_closed_form(a: int, b: int, c: int) -> Polynomial:
    """Three-branch value of pi_!(x1^a x2^b x4^c) modulo y6 (oriented case)."""
    base = oriented_bundle().base_ring
    if b > 0 and b % 2 == 0 and c == 0:
        return base.monomial({"y1": a, "y4": b // 2 - 1})
    if b == 0 and c > 0:
        return base.monomial({"y1": a, "y4": c - 1})
    return base.zero()


def vtilde_star(cfg: BundleConfig, p: Polynomial) -> Polynomial:
    """Pullback along the classifying map of the tangent bundle along the fiber.

    Oriented: w2 -> x1^2 + x2, w3 -> x1*x2, w4 -> x4, all higher classes to zero
    (and w1 to zero).  Unoriented: w1 -> x1, w2 -> x2, higher classes to zero.
    """
    total = cfg.total_ring
    if cfg.case == "oriented":
        x1, x2, x4 = (total.var(n) for n in ("x1", "x2", "x4"))
        named = {"w2": x1 * x1 + x2, "w3": x1 * x2, "w4": x4}
    else:
        named = {"w1": total.var("x1"), "w2": total.var("x2")}
    images = {v.name: named.get(v.name, total.zero()) for v in p.ring.variables}
    return RingMap(p.ring, total, images)(p)


@lru_cache(maxsize=None)
def reduced_sw_ring() -> Ring:
    """F2[w2, w3, w4]: the quotient of the w-ring seen by the oriented pullback."""
    return symmfunc.sw_ring(4, lowest=2)


@lru_cache(maxsize=None)
def _reduced_sn(n: int) -> Polynomial:
    """s_n mod 2 with w1 = 0 and w5, w6, ... killed, via the quotient recursion.

    Killing variables is a ring homomorphism, so the Newton recursion
    descends to t_n = w2*t_{n-2} + w3*t_{n-3} + w4*t_{n-4} over F2 once the
    seeds t_1..t_4 are reduced by hand.
    """
    ring = reduced_sw_ring()
    if n < 1:
        raise ValueError("n must be positive")
    seeds = {1: ring.zero(), 2: ring.zero(), 3: ring.var("w3"), 4: ring.zero()}
    if n in seeds:
        return seeds[n]
    return (
        ring.var("w2") * _reduced_sn(n - 2)
        + ring.var("w3") * _reduced_sn(n - 3)
        + ring.var("w4") * _reduced_sn(n - 4)
    )


def primitive_of_degree(n: int) -> Polynomial:
    """The nonzero primitive class of degree n in the w1 = 0 quotient, mod (w5, w6, ...).

    w2^(n/2) when n is a power of two; the reduction of s_n otherwise.
    Degrees below four and of the form 2^i - 1 carry no primitive class.
    """
    if n < 4 or (n & (n + 1)) == 0:
        raise ValueError(f"no primitive class in degree {n}")
    ring = reduced_sw_ring()
    if n & (n - 1) == 0:
        return ring.var("w2", n // 2)
    out = _reduced_sn(n)
    if not out:
        raise ArithmeticError(f"reduced s_{n} vanished unexpectedly")
    return out


def transfer_sn(n: int) -> Polynomial:
    """pi_! of the pulled-back degree-n primitive class, reduced mod y6."""
    cfg = oriented_bundle()
    image = vtilde_star(cfg, primitive_of_degree(n))
    return reduce_mod_variables(pi_shriek(cfg, image), ["y6"])


def transfer_s2t2t(t: int) -> Polynomial:
    """pi_! of the pulled-back s_{2t,2t}, with y1 and y6 set to zero.

    Evaluates s_{2t,2t} through the exact integer formula before reducing
    mod 2, so no sign ambiguity from partially-reduced displays enters.
    """
    if t < 1:
        raise ValueError("t must be positive")
    cfg = oriented_bundle()
    w = symmfunc.spp_sw(2 * t, reduced_sw_ring())
    res = pi_shriek(cfg, vtilde_star(cfg, w))
    return reduce_mod_variables(res, ["y1", "y6"])


def z_via_fiber(n: int) -> Polynomial:
    """The unoriented composite pi_! (vtilde* (s_n)) in F2[y2, y3]."""
    if n < 1:
        raise ValueError("n must be positive")
    cfg = unoriented_bundle()
    sn = symmfunc.sn_sw(n, symmfunc.sw_ring(2))
    return pi_shriek(cfg, vtilde_star(cfg, sn))


def lowest_y1_part(q: Polynomial) -> tuple[int, Polynomial]:
    """Minimal y1-exponent present and the sum of the terms realizing it."""
    if not q:
        raise ValueError("zero polynomial has no leading filtration part")
    i = q.ring.index("y1")
    b0 = min(m[i] for m in q.terms)
    return b0, Polynomial(q.ring, {m: c for m, c in q.terms.items() if m[i] == b0})
