"""Characteristic numbers of the projective-bundle generators and their gcd certificate.

S_n(PE_r) has the closed form 1 + (-1)^(r+1) * C(2n, r).  The independent
oracle recomputes it from scratch: antisymmetrize x1 * ((x1-x3)^2n + (x2-x3)^2n)
over three variables, set x3 = 0, divide exactly by (x1-x2)*x1*x2, and read
off a coefficient.  The gcd of the values decides generation: 1 when 2n+1
is not a prime power, p when 2n+1 = p^s.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, reduce
from itertools import permutations
from math import comb, gcd

from .arithmetic import prime_power
from .poly import Polynomial, Ring, reduce_mod_variables

_PERMS = [
    (perm, 1 if sign else -1)
    for perm, sign in zip(
        permutations((0, 1, 2)),
        (True, False, False, True, True, False),
    )
]
# permutations() yields S3 in lexicographic order; the parity pattern above
# is +, -, -, +, +, - for (012),(021),(102),(120),(201),(210).


@lru_cache(maxsize=None)
def chern_root_ring() -> Ring:
    """Z[x1, x2, x3], the three-torus coefficients carrying both subrings."""
    return Ring([("x1", 1), ("x2", 1), ("x3", 1)], char=0)


def S_n_PE(n: int, r: int) -> int:
    """Closed-form characteristic number of the r-th degree-4n bundle generator."""
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in [1, {n}]")
    return 1 + (-1) ** (r + 1) * comb(2 * n, r)


def antisymmetrize(p: Polynomial) -> Polynomial:
    """Alternating sum over S3 of the variable-permuted monomials.

    x1^a x2^b x3^c maps to the signed sum of x_{s(1)}^a x_{s(2)}^b x_{s(3)}^c;
    the output changes sign under any transposition of variables.
    """
    if len(p.ring.variables) != 3:
        raise ValueError("antisymmetrization is over exactly three variables")
    acc: dict = {}
    for m, coeff in p.terms.items():
        for perm, sign in _PERMS:
            key = [0, 0, 0]
            for slot, e in enumerate(m):
                key[perm[slot]] = e
            k = tuple(key)
            acc[k] = acc.get(k, 0) + sign * coeff
    return p.ring._canon(acc)


@dataclass(frozen=True)
class AntisymmetricQuotient:
    """Numerator (after x3 = 0) and its exact quotient by (x1 - x2)*x1*x2."""

    numerator: Polynomial
    quotient: Polynomial
    remainder_zero: bool


def _divide_by_variable(p: Polynomial, name: str) -> Polynomial:
    i = p.ring.index(name)
    acc = {}
    for m, c in p.terms.items():
        if m[i] == 0:
            raise ArithmeticError(f"{name} does not divide {p}")
        key = list(m)
        key[i] -= 1
        acc[tuple(key)] = c
    return Polynomial(p.ring, acc)


def _divide_by_x1_minus_x2(p: Polynomial) -> tuple[Polynomial, Polynomial]:
    """Synthetic division in x1 with coefficients in Z[x2, ...]; returns (q, r)."""
    ring = p.ring
    i1 = ring.index("x1")
    i2 = ring.index("x2")
    by_deg: dict[int, dict[tuple, int]] = {}
    for m, c in p.terms.items():
        rest = list(m)
        e1 = rest[i1]
        rest[i1] = 0
        by_deg.setdefault(e1, {})[tuple(rest)] = c
    if not by_deg:
        return ring.zero(), ring.zero()
    top = max(by_deg)
    quot: dict[tuple, int] = {}
    carry: dict[tuple, int] = {}
    for e1 in range(top, 0, -1):
        cur = dict(by_deg.get(e1, {}))
        for m, c in carry.items():
            cur[m] = cur.get(m, 0) + c
        carry = {}
        for m, c in cur.items():
            if not c:
                continue
            key = list(m)
            key[i1] = e1 - 1
            quot[tuple(key)] = quot.get(tuple(key), 0) + c
            bump = list(m)
            bump[i2] += 1
            carry[tuple(bump)] = carry.get(tuple(bump), 0) + c
    rem = dict(by_deg.get(0, {}))
    for m, c in carry.items():
        rem[m] = rem.get(m, 0) + c
    return ring._canon(quot), ring._canon(rem)


@lru_cache(maxsize=None)
def antisym_quotient(n: int) -> AntisymmetricQuotient:
    """The oracle pipeline shared by all r for a fixed n."""
    ring = chern_root_ring()
    x1, x2, x3 = (ring.var(v) for v in ("x1", "x2", "x3"))
    sn_tau = (x1 - x3) ** (2 * n) + (x2 - x3) ** (2 * n)
    numerator = reduce_mod_variables(antisymmetrize(x1 * sn_tau), ["x3"])
    q = _divide_by_variable(numerator, "x1")
    q = _divide_by_variable(q, "x2")
    q, rem = _divide_by_x1_minus_x2(q)
    if rem:
        raise ArithmeticError(f"division by (x1 - x2) left remainder {rem}")
    return AntisymmetricQuotient(numerator, q, True)


def S_n_PE_oracle(n: int, r: int) -> int:
    """Recompute S_n(PE_r) from the antisymmetrization pipeline."""
    if not 1 <= r <= n:
        raise ValueError(f"r must lie in [1, {n}]")
    return antisym_quotient(n).quotient.coefficient({"x1": r - 1, "x2": 2 * n - r - 1})


@dataclass(frozen=True)
class GeneratorReport:
    """Values S_n(PE_1..n), their gcd, and the prime-power criterion for 2n+1."""

    n: int
    values: tuple[int, ...]
    gcd: int
    criterion: int  # 1, or the prime p when 2n+1 = p^s
    consistent: bool


def gcd_report(n: int) -> GeneratorReport:
    """Compare gcd(S_n(PE_r)) against the prime-power branch of the criterion.

    Also re-derives the telescoping difference identity
    S_n(PE_r) - S_n(PE_{r+1}) = (-1)^(r+1) * C(2n+1, r+1), which drives the
    divisibility argument.
    """
    if n < 1:
        raise ValueError("n must be positive")
    values = tuple(S_n_PE(n, r) for r in range(1, n + 1))
    g = reduce(gcd, (abs(v) for v in values))
    pp = prime_power(2 * n + 1)
    criterion = pp[0] if pp else 1
    diffs_ok = all(
        values[r - 1] - values[r] == (-1) ** (r + 1) * comb(2 * n + 1, r + 1)
        for r in range(1, n)
    )
    return GeneratorReport(n, values, g, criterion, g == criterion and diffs_ok)
