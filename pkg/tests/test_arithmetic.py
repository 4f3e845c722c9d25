"""Binomial parity, the odd-pair solvers, prime powers, and the z-recursion."""

from math import comb, factorial

import pytest

from bordcalc.arithmetic import (
    BinomSolution,
    binom_parity,
    binom_split,
    factorize,
    is_prime,
    minimal_odd_split,
    p_adic_valuation,
    prime_power,
    trailing_ones,
    verify_doubling,
    verify_leading_term,
    z_sequence,
)


def test_binom_parity_small():
    assert binom_parity(4, 2) == 0
    assert binom_parity(7, 3) == 1
    assert binom_parity(10, 0) == 1
    assert binom_parity(3, 5) == 0


def test_binom_parity_matches_comb_up_to_300():
    for n in range(301):
        for k in range(n + 1):
            assert binom_parity(n, k) == comb(n, k) % 2


@pytest.mark.parametrize("p,m", [(2, 3), (3, 5), (4, 1), (5, 7)])
def test_binom_parity_all_ones_tail(p, m):
    n = 2 ** p * m - 1
    for x in range(2 ** p):
        assert binom_parity(n, x) == 1


def test_binom_split_examples():
    sol = binom_split(9)
    assert (sol.a, sol.b, sol.i, sol.j) == (3, 1, 3, 1)
    sol = binom_split(5)
    assert (sol.a, sol.b, sol.i, sol.j) == (1, 1, 2, 1)


@pytest.mark.parametrize("n", (7, 15, 31, 63, 127))
def test_binom_split_rejects_mersenne(n):
    with pytest.raises(ValueError):
        binom_split(n)


def test_binom_split_rejects_even_and_small():
    for n in (3, 4, 10):
        with pytest.raises(ValueError):
            binom_split(n)


def test_binom_split_all_odd_up_to_201():
    for n in range(5, 202, 2):
        if n & (n + 1) == 0:
            continue
        sol = binom_split(n)
        quotient = n * factorial(sol.a + sol.b - 1) // (factorial(sol.a) * factorial(sol.b))
        assert quotient % 2 == 1
        assert sol.a % 2 == 1 and sol.b % 2 == 1 and 2 * sol.a + 3 * sol.b == n
        assert sol.a + sol.b == 2 ** (sol.i - sol.j) * (2 ** sol.j - 1)


def test_binom_solution_validates():
    with pytest.raises(ValueError):
        BinomSolution(9, 3, 1, 3, 2)  # wrong dyadic indices
    with pytest.raises(ValueError):
        BinomSolution(9, 6, -1, 3, 1)


def test_minimal_odd_split():
    assert minimal_odd_split(5) == (1, 1)
    assert minimal_odd_split(9) == (3, 1)
    assert minimal_odd_split(21) == (9, 1)  # construction would give (3, 5)
    assert minimal_odd_split(23) == (1, 7)
    with pytest.raises(ValueError):
        minimal_odd_split(7)


def test_minimal_odd_split_satisfies_constraints():
    for n in range(5, 202, 2):
        if n & (n + 1) == 0:
            continue
        a, b = minimal_odd_split(n)
        assert a % 2 == 1 and b % 2 == 1 and 2 * a + 3 * b == n
        quotient = n * factorial(a + b - 1) // (factorial(a) * factorial(b))
        assert quotient % 2 == 1


def test_prime_power():
    assert prime_power(9) == (3, 2)
    assert prime_power(15) is None
    assert prime_power(2) == (2, 1)
    assert prime_power(1024) == (2, 10)
    assert prime_power(343) == (7, 3)
    assert prime_power(401) == (401, 1)
    assert prime_power(36) is None
    with pytest.raises(ValueError):
        prime_power(1)


def test_is_prime_against_sieve():
    sieve = [True] * 500
    sieve[0] = sieve[1] = False
    for i in range(2, 500):
        if sieve[i]:
            for j in range(i * i, 500, i):
                sieve[j] = False
    for m in range(500):
        assert is_prime(m) == sieve[m], m


def test_p_adic_valuation_and_factorize():
    assert p_adic_valuation(48, 2) == 4
    assert p_adic_valuation(-45, 3) == 2
    assert factorize(360) == {2: 3, 3: 2, 5: 1}
    with pytest.raises(ValueError):
        p_adic_valuation(0, 2)


def test_z_sequence_values():
    zs = z_sequence(8)
    r = zs.ring
    assert zs[1].is_zero() and zs[3].is_zero()
    assert zs[2] == r.one()
    assert zs[4] == r.var("y2")
    assert zs[5] == r.var("y3")
    assert zs[6] == r.var("y2") ** 2
    assert zs[7].is_zero()
    assert zs[8] == r.var("y2") ** 3 + r.var("y3") ** 2


def test_z_vanishing_set_through_64():
    zs = z_sequence(64)
    vanishing = {n for n in range(1, 65) if zs[n].is_zero()}
    assert vanishing == {1, 3, 7, 15, 31, 63}


def test_z_homogeneous():
    zs = z_sequence(64)
    for n in range(1, 65):
        if zs[n]:
            assert zs[n].homogeneous_degrees() == [n - 2]


def test_z_sequence_bounds():
    with pytest.raises(ValueError):
        z_sequence(2)
    zs = z_sequence(5)
    with pytest.raises(IndexError):
        zs[6]


def test_verify_doubling():
    assert verify_doubling(10, 1)
    assert verify_doubling(20, 2)
    with pytest.raises(ValueError):
        verify_doubling(7, 2)


def test_verify_doubling_all_valid_up_to_64():
    zs = z_sequence(64)
    for n in range(1, 65):
        j = 0
        while 3 * 2 ** j < n:
            assert verify_doubling(n, j, zs), (n, j)
            j += 1


def test_trailing_ones():
    assert trailing_ones(19) == 2  # 10011
    assert trailing_ones(4) == 0
    assert trailing_ones(7) == 3


def test_verify_leading_term_examples():
    zs = z_sequence(16)
    assert verify_leading_term(2, zs)
    assert verify_leading_term(5, zs)
    assert verify_leading_term(13, zs)
    # by hand: z_13 mod y3^2 should be y3 * y2^4
    r = zs.ring
    from bordcalc.poly import reduce_mod_monomial

    assert reduce_mod_monomial(zs[13], {"y3": 2}) == r.monomial({"y3": 1, "y2": 4})
    with pytest.raises(ValueError):
        verify_leading_term(7, zs)


def test_verify_leading_term_all_valid_up_to_64():
    zs = z_sequence(64)
    for n in range(2, 65):
        if n == 2 ** trailing_ones(n) - 1:
            continue
        assert verify_leading_term(n, zs), n


def test_verify_leading_term_smallest_n_without_sequence():
    assert verify_leading_term(2)
