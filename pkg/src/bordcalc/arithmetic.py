"""Number-theoretic kernels: binomial parity, prime powers, and the z-recursion.

Everything here is exact: parities come from Lucas' theorem as bit tests,
the odd-pair solver follows a dyadic-interval construction and certifies
itself with big-integer factorials, and the z_n sequence lives in F2[y2, y3].
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import factorial

from .poly import Polynomial, Ring, reduce_mod_monomial


def binom_parity(n: int, k: int) -> int:
    """C(n, k) mod 2 via Lucas: 1 iff the bits of k sit inside the bits of n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return 1 if (n & k) == k else 0


def p_adic_valuation(x: int, p: int) -> int:
    """Exact exponent of the prime p in x (x nonzero)."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    x = abs(x)
    v = 0
    while x % p == 0:
        x //= p
        v += 1
    return v


@dataclass(frozen=True)
class BinomSolution:
    """Odd exponents a, b with 2a + 3b = n and odd n*(a+b-1)!/(a!*b!).

    i and j are the dyadic indices of the construction; a + b equals
    2^(i-j) * (2^j - 1), which is what makes the parity argument work.
    """

    n: int
    a: int
    b: int
    i: int
    j: int

    def __post_init__(self):
        if not (self.a > 0 and self.b > 0 and self.a % 2 and self.b % 2):
            raise ValueError(f"a, b must be positive odd, got ({self.a}, {self.b})")
        if 2 * self.a + 3 * self.b != self.n:
            raise ValueError(f"2a + 3b = {2 * self.a + 3 * self.b} != {self.n}")
        if self.a + self.b != 2 ** (self.i - self.j) * (2**self.j - 1):
            raise ValueError("a + b misses the dyadic form of the construction")
        num = self.n * factorial(self.a + self.b - 1)
        den = factorial(self.a) * factorial(self.b)
        if num % den:
            raise ValueError("n*(a+b-1)!/(a!*b!) is not an integer")
        if (num // den) % 2 == 0:
            raise ValueError("n*(a+b-1)!/(a!*b!) is even")


def binom_split(n: int) -> BinomSolution:
    """Construct the odd pair (a, b) for odd n >= 5 that is not of the form 2^k - 1.

    Choose i with 2^i < n < 2^(i+1), then the j in [1, i-1] whose dyadic
    window 2^(i+1) - 2^(i-j+1) < n < 2^(i+1) - 2^(i-j) contains n; such a j
    exists exactly because n is not 2^(i+1) - 1.
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be odd and at least 5")
    if n & (n + 1) == 0:
        raise ValueError(f"n = {n} is 2^k - 1; no valid pair exists")
    i = n.bit_length() - 1
    for j in range(1, i):
        lo = 2 ** (i + 1) - 2 ** (i - j + 1)
        hi = 2 ** (i + 1) - 2 ** (i - j)
        if lo < n < hi:
            return BinomSolution(n, 3 * 2**i - 3 * 2 ** (i - j) - n, n - lo, i, j)
    raise ValueError(f"no dyadic window contains {n}")  # unreachable for valid n


def minimal_odd_split(n: int) -> tuple[int, int]:
    """The smallest odd b (with odd a, 2a + 3b = n) making n*(a+b-1)!/(a!*b!) odd.

    This is the pair the filtration argument actually reads off; the dyadic
    construction in binom_split proves such a pair exists but need not be
    minimal in b (n = 21: construction (3, 5), minimum (9, 1)).
    """
    if n < 5 or n % 2 == 0:
        raise ValueError("n must be odd and at least 5")
    for b in range(1, n // 3 + 1, 2):
        a = (n - 3 * b) // 2
        if a <= 0 or a % 2 == 0:
            continue
        num = n * factorial(a + b - 1)
        den = factorial(a) * factorial(b)
        if num % den == 0 and (num // den) % 2:
            return a, b
    raise ValueError(f"no odd pair for n = {n} (n is 2^k - 1)")


_MR_WITNESSES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)


def is_prime(m: int) -> bool:
    """Deterministic Miller-Rabin (witness set valid far beyond 64 bits)."""
    if m < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    if m in small:
        return True
    if any(m % p == 0 for p in small):
        return False
    d, s = m - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in _MR_WITNESSES:
        x = pow(a, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(s - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _nth_root(m: int, s: int) -> int:
    """Floor of the s-th root of m."""
    if s == 1:
        return m
    r = 1 << (m.bit_length() // s + 1)
    while True:
        nr = ((s - 1) * r + m // r ** (s - 1)) // s
        if nr >= r:
            return r
        r = nr


def prime_power(m: int):
    """(p, s) with m = p^s for a prime p, or None; s is maximal, so p is prime."""
    if m < 2:
        raise ValueError("m must be at least 2")
    for s in range(m.bit_length(), 0, -1):
        r = _nth_root(m, s)
        if r >= 2 and r**s == m and is_prime(r):
            return (r, s)
    return None


def factorize(m: int) -> dict[int, int]:
    """Prime factorization by trial division (desk-scale inputs)."""
    if m < 1:
        raise ValueError("m must be positive")
    out: dict[int, int] = {}
    d = 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1 if d == 2 else 2
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out


# -- the unoriented z-recursion -----------------------------------------------


@lru_cache(maxsize=None)
def z_ring() -> Ring:
    return Ring([("y2", 2), ("y3", 3)], char=2)


@dataclass(frozen=True)
class ZSequence:
    """z_1..z_max of the recursion z_n = y2*z_{n-2} + y3*z_{n-3} in F2[y2, y3]."""

    ring: Ring
    values: tuple[Polynomial, ...]  # index 0 is an unused placeholder

    @property
    def max_n(self) -> int:
        return len(self.values) - 1

    def __getitem__(self, n: int) -> Polynomial:
        if not 1 <= n <= self.max_n:
            raise IndexError(f"z_{n} not computed (have 1..{self.max_n})")
        return self.values[n]


def z_sequence(max_n: int) -> ZSequence:
    """Run the recursion with initial values z_1 = 0, z_2 = 1, z_3 = 0."""
    if max_n < 3:
        raise ValueError("max_n must be at least 3")
    ring = z_ring()
    y2, y3 = ring.var("y2"), ring.var("y3")
    vals = [ring.zero(), ring.zero(), ring.one(), ring.zero()]
    for n in range(4, max_n + 1):
        vals.append(y2 * vals[n - 2] + y3 * vals[n - 3])
    return ZSequence(ring, tuple(vals))


def verify_doubling(n: int, j: int, zs: ZSequence | None = None) -> bool:
    """Check z_n = y2^(2^j) * z_{n - 2^(j+1)} + y3^(2^j) * z_{n - 3*2^j}."""
    if 3 * 2**j >= n:
        raise ValueError(f"need 3*2^{j} < {n}")
    if zs is None or zs.max_n < n:
        zs = z_sequence(max(n, 3))
    ring = zs.ring
    e = 2**j
    rhs = ring.var("y2", e) * zs[n - 2 * e] + ring.var("y3", e) * zs[n - 3 * e]
    return zs[n] == rhs


def trailing_ones(n: int) -> int:
    """Number of trailing ones in the binary expansion of n."""
    i = 0
    while n & 1:
        n >>= 1
        i += 1
    return i


def verify_leading_term(n: int, zs: ZSequence | None = None) -> bool:
    """Check the y3-adic leading form z_n = y3^(2^i - 1) * y2^alpha mod y3^(2^i).

    Here i counts the trailing ones of n (so n = 2^i - 1 mod 2^(i+1)) and
    alpha = (n - 3*(2^i - 1) - 2) / 2.  Excluded: n of the form 2^i - 1.
    """
    if n < 2:
        raise ValueError("n must be at least 2")
    i = trailing_ones(n)
    if n == 2**i - 1:
        raise ValueError(f"n = {n} is 2^i - 1; z_n vanishes and has no leading form")
    num = n - 3 * (2**i - 1) - 2
    if num < 0 or num % 2:
        raise AssertionError(f"alpha({i}, {n}) is not a natural number")
    alpha = num // 2
    if zs is None or zs.max_n < n:
        zs = z_sequence(max(n, 3))
    lhs = reduce_mod_monomial(zs[n], {"y3": 2**i})
    rhs = zs.ring.monomial({"y3": 2**i - 1, "y2": alpha})
    return lhs == rhs
