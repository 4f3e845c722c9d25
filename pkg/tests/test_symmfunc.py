"""Newton/Girard polynomials, the Whitney coproduct, and the elementary-abelian restriction checks."""

import random

import pytest

from bordcalc import symmfunc
from bordcalc.poly import (
    Ring,
    RingMap,
    elementary_symmetric,
    mod2,
    power_sum,
    reduce_mod_monomial,
    reduce_mod_variables,
)
from bordcalc.report import failures


def sig(ring, **exps):
    return ring.monomial({f"sigma{k}": e for k, e in ((int(n[1:]), e) for n, e in exps.items())})


def test_s1_s2():
    s1 = symmfunc.s_n_newton(1).body
    assert s1 == s1.ring.var("sigma1")
    s2 = symmfunc.s_n_newton(2).body
    r = s2.ring
    assert s2 == r.var("sigma1") ** 2 - 2 * r.var("sigma2")


def test_s4_closed_form():
    s4 = symmfunc.s_n_newton(4).body
    r = s4.ring
    s1, s2_, s3, s4_ = (r.var(f"sigma{k}") for k in (1, 2, 3, 4))
    assert s4 == s1 ** 4 - 4 * s1 ** 2 * s2_ + 2 * s2_ ** 2 + 4 * s1 * s3 - 4 * s4_


@pytest.mark.parametrize("n", range(1, 13))
def test_girard_equals_newton(n):
    assert symmfunc.s_n_girard(n).body == symmfunc.s_n_newton(n).body


def test_girard_n5_coefficients():
    s5 = symmfunc.s_n_girard(5).body
    assert s5.coefficient({"sigma2": 1, "sigma3": 1}) == -5
    assert s5.coefficient({"sigma5": 1}) == 5


@pytest.mark.parametrize("n", range(1, 9))
def test_power_sum_substitution(n):
    xr = Ring([(f"x{k}", 1) for k in range(1, n + 1)], char=0)
    sub = RingMap(
        symmfunc.sigma_ring(n),
        xr,
        {f"sigma{k}": elementary_symmetric(xr, k) for k in range(1, n + 1)},
    )
    assert sub(symmfunc.s_n_newton(n).body) == power_sum(xr, n)


def test_sn_invariants_enforced():
    for n in (3, 7, 10):
        body = symmfunc.s_n_newton(n).body
        assert body.homogeneous_degrees() == [n]
        assert body.coefficient({f"sigma{n}": 1}) == (-1) ** (n - 1) * n


def test_s_pp_p1():
    out = symmfunc.s_pp(1)
    assert out == -out.ring.var("sigma2")


@pytest.mark.parametrize("p", range(1, 7))
def test_s_pp_exact_halving(p):
    ring = symmfunc.sigma_ring(2 * p)
    lhs = 2 * symmfunc.s_pp(p)
    rhs = symmfunc.s_n_newton(2 * p).body - symmfunc.s_n_newton(p).body.in_ring(ring) ** 2
    assert lhs == rhs


@pytest.mark.parametrize("n", range(1, 11))
def test_s2n_is_sn_squared_mod2(n):
    ring2 = symmfunc.sigma_ring(2 * n)
    lhs = mod2(symmfunc.s_n_newton(2 * n).body)
    rhs = mod2(symmfunc.s_n_newton(n).body.in_ring(ring2)) ** 2
    assert lhs == rhs


@pytest.mark.parametrize("t", range(1, 7))
def test_s2t2t_reduced_integer_form(t):
    """Mod (sigma2*sigma4, sigma1, sigma3, sigma5, ...) the double Newton class collapses.

    The ambiguous signs of the halved display resolve by direct computation to
    -sigma2^(2t) + (-1)^t * 2*sigma4^t, with an extra -8*sigma4^t when t is even.
    """
    spp = symmfunc.s_pp(2 * t)
    ring = spp.ring
    kill = [v.name for v in ring.variables if v.degree not in (2, 4)]
    reduced = reduce_mod_monomial(reduce_mod_variables(spp, kill), {"sigma2": 1, "sigma4": 1})
    c4 = (-1) ** t * 2 - (8 if t % 2 == 0 else 0)
    expected = -ring.var("sigma2", 2 * t) + c4 * ring.var("sigma4", t)
    assert reduced == expected


@pytest.mark.parametrize("t", range(1, 9))
def test_s2t2t_mod2_conclusion(t):
    even = Ring([("w2", 2), ("w4", 4)], char=2)
    reduced = reduce_mod_monomial(symmfunc.spp_sw(2 * t, even), {"w2": 1, "w4": 1})
    assert reduced == even.var("w2", 2 * t)


# -- coproduct ----------------------------------------------------------------


def test_coproduct_whitney_w2():
    ring = symmfunc.sw_ring(2)
    psi = symmfunc.coproduct(ring.var("w2"))
    t = psi.ring
    assert psi == t.var("w2'") + t.var("w2''") + t.var("w1'") * t.var("w1''")


@pytest.mark.parametrize("i", range(0, 4))
def test_coproduct_w2_powers_in_quotient(i):
    ring = symmfunc.sw_ring(2, lowest=2)
    p = ring.var("w2", 2 ** i)
    assert symmfunc.coproduct(p) == symmfunc.tensor_pure(p, "left") + symmfunc.tensor_pure(p, "right")


def test_coproduct_is_ring_hom():
    rng = random.Random(23)
    ring = symmfunc.sw_ring(5)
    gens = [ring.var(v.name) for v in ring.variables]
    for _ in range(10):
        p = gens[rng.randrange(len(gens))] * gens[rng.randrange(len(gens))]
        q = gens[rng.randrange(len(gens))] + gens[rng.randrange(len(gens))] ** 2
        assert symmfunc.coproduct(p * q) == symmfunc.coproduct(p) * symmfunc.coproduct(q)
        assert symmfunc.coproduct(p + q) == symmfunc.coproduct(p) + symmfunc.coproduct(q)


@pytest.mark.parametrize("t", (1, 2))
def test_coproduct_of_spp(t):
    ring = symmfunc.sw_ring(4 * t, lowest=2)
    spp = symmfunc.spp_sw(2 * t, ring)
    sn = symmfunc.sn_sw(2 * t, ring)
    expected = (
        symmfunc.tensor_pure(spp, "left")
        + symmfunc.tensor_pure(spp, "right")
        + symmfunc.tensor_pure(sn, "left") * symmfunc.tensor_pure(sn, "right")
    )
    assert symmfunc.coproduct(spp) == expected


@pytest.mark.parametrize("n", range(1, 13))
def test_sn_primitive(n):
    ring = symmfunc.sw_ring(n)
    assert symmfunc.is_primitive(symmfunc.sn_sw(n, ring))


@pytest.mark.parametrize("i", range(0, 4))
def test_w2_powers_primitive_in_quotient(i):
    ring = symmfunc.sw_ring(2, lowest=2)
    assert symmfunc.is_primitive(ring.var("w2", 2 ** i))


def test_random_monomials_not_primitive():
    # in the full presentation the only primitive monomials are w1^(2^k)
    rng = random.Random(41)
    ring = symmfunc.sw_ring(8)
    skip = {tuple(2 ** k if v.name == "w1" else 0 for v in ring.variables) for k in range(4)}
    found = 0
    while found < 15:
        exps = {v.name: rng.randrange(0, 3) for v in ring.variables}
        p = ring.monomial(exps)
        if p.degree() < 1 or p.degree() > 8 or next(iter(p.terms)) in skip:
            continue
        assert not symmfunc.is_primitive(p)
        found += 1


def test_w2w3_not_primitive():
    ring = symmfunc.sw_ring(3)
    assert not symmfunc.is_primitive(ring.var("w2") * ring.var("w3"))


def test_is_primitive_requires_homogeneous():
    ring = symmfunc.sw_ring(3)
    with pytest.raises(ValueError):
        symmfunc.is_primitive(ring.var("w2") + ring.var("w3"))


# -- elementary-abelian restriction checks --------------------------------------------------------


def test_sq1_chern_verification():
    assert failures(symmfunc.verify_sq1_chern()) == []


def test_fiber_tangent_class_verification():
    assert failures(symmfunc.verify_fiber_tangent_class()) == []


def test_sq1_chern_leibniz_on_triple_product():
    from bordcalc import steenrod

    ring = symmfunc.rank4_ring()
    sq1 = steenrod.squaring_action(ring)
    a, b, c, delta = symmfunc._abc(ring)
    assert sq1(a * b * c) == a * b * c * delta
