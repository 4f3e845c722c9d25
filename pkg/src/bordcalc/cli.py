"""Command-line harness: named verification suites with table and JSON output.

Each suite re-derives one family of identities and reports per-case
expected/actual strings.  Exit code 0 means every case matched, 1 means a
mismatch, 2 a usage error.  JSON reports contain no floats and render all
integers as decimal strings, so parse/re-serialize round-trips are
byte-identical.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from dataclasses import dataclass
from math import comb, factorial

from . import arithmetic, fiber, generators, steenrod, symmfunc
from .poly import power_sum, reduce_mod_monomial, reduce_mod_variables, Ring, RingMap, elementary_symmetric
from .report import Case, case


@dataclass(frozen=True)
class VerificationReport:
    check: str
    params: dict
    status: str  # pass | fail | error
    details: tuple[Case, ...]
    wall_time_ms: int

    def to_json_obj(self) -> dict:
        return {
            "check": self.check,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "status": self.status,
            "details": [
                {"case": c.name, "expected": c.expected, "actual": c.actual, "ok": c.ok}
                for c in self.details
            ],
            "wall_time_ms": str(self.wall_time_ms),
        }


def render_json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


# -- suites -------------------------------------------------------------------


def suite_pi_closed_form(max_degree: int = 30) -> list[Case]:
    cfg = fiber.oriented_bundle()
    total = cfg.total_ring
    cases = []
    for c in range(max_degree // 4 + 1):
        for b in range((max_degree - 4 * c) // 2 + 1):
            for a in range(max_degree - 4 * c - 2 * b + 1):
                mono = total.monomial({"x1": a, "x2": b, "x4": c})
                actual = reduce_mod_variables(fiber.pi_shriek(cfg, mono), ["y6"])
                expected = fiber.pi_shriek_closed_form(a, b, c)
                cases.append(case(f"pi_!(x1^{a}*x2^{b}*x4^{c}) mod y6", expected, actual))
    return cases


def suite_transfer_sn(max_n: int = 40) -> list[Case]:
    base = fiber.oriented_bundle().base_ring
    cases = []
    for n in range(4, max_n + 1):
        if n & (n + 1) == 0:
            continue
        value = fiber.transfer_sn(n)
        cases.append(case(f"transfer_sn({n}) nonzero", "nonzero", "nonzero" if value else "0"))
        if n & (n - 1) == 0:
            i = n.bit_length() - 1  # n = 2^i here, i.e. 2^(i) with exponent i
            expected = base.monomial({"y4": 2 ** (i - 2) - 1})
            cases.append(case(f"transfer_sn({n}) = y4^(2^{i - 2}-1)", expected, value))
        elif n % 2:
            a, b = arithmetic.minimal_odd_split(n)
            e = (a + b) // 2
            _, part = fiber.lowest_y1_part(value)
            expected = base.monomial({"y1": b, "y4": e - 1})
            cases.append(case(f"transfer_sn({n}) lowest y1-filtration part", expected, part))
    return cases


def suite_transfer_s2t2t(t_max: int = 8) -> list[Case]:
    base = fiber.oriented_bundle().base_ring
    cases = []
    for t in range(1, t_max + 1):
        cases.append(
            case(
                f"transfer_s2t2t({t}) = y4^{t - 1}",
                base.monomial({"y4": t - 1}),
                fiber.transfer_s2t2t(t),
            )
        )
    even_ring = Ring([("w2", 2), ("w4", 4)], char=2)
    for t in range(1, t_max + 1):
        reduced = reduce_mod_monomial(symmfunc.spp_sw(2 * t, even_ring), {"w2": 1, "w4": 1})
        cases.append(
            case(
                f"s_{2 * t},{2 * t} = w2^{2 * t} in F2[w2^2,w4^2]/(w2^2*w4^2)",
                even_ring.monomial({"w2": 2 * t}),
                reduced,
            )
        )
    return cases


def _expected_bg_classes(ring, max_degree):
    out = []
    for s in range(max_degree // 4 + 1):
        for t in range((max_degree - 4 * s) // 12 + 1):
            if 4 * s + 12 * t <= max_degree:
                out.append(ring.monomial({"y4": s, "y6": 2 * t}))
    return out


def _expected_bso_classes(ring, max_degree):
    """Products of squares of the even-index generators, up to max_degree."""
    gens = [v.degree for v in ring.variables if v.degree % 2 == 0 and 2 * v.degree <= max_degree]
    out = []

    def rec(i, acc_exps, deg):
        if i == len(gens):
            out.append(ring.monomial({f"w{k}": 2 * e for k, e in acc_exps.items() if e}))
            return
        k = gens[i]
        for e in range((max_degree - deg) // (2 * k) + 1):
            acc_exps[k] = e
            rec(i + 1, acc_exps, deg + 2 * k * e)
        acc_exps[k] = 0

    rec(0, {}, 0)
    return out


def suite_sq1_homology(max_degree: int = 40) -> list[Case]:
    ring, action = steenrod.bg_action()
    cases = steenrod.verify_homology_basis(action, max_degree, _expected_bg_classes(ring, max_degree))
    hom = steenrod.sq1_homology(action, max_degree)
    bad = [d for d, dim in enumerate(hom.dims) if dim and d % 4]
    cases.append(case("BG homology concentrated in degrees 0 mod 4", "[]", bad))
    wu_max = min(max_degree, 24)
    wring = symmfunc.sw_ring(wu_max + 1, lowest=2, truncation=wu_max + 1)
    waction = steenrod.wu_action(wring)
    cases += steenrod.verify_homology_basis(waction, wu_max, _expected_bso_classes(wring, wu_max))
    whom = steenrod.sq1_homology(waction, wu_max)
    bad = [d for d, dim in enumerate(whom.dims) if dim and d % 4]
    cases.append(case("BSO homology concentrated in degrees 0 mod 4", "[]", bad))
    return cases


def suite_lemma_l32() -> list[Case]:
    return symmfunc.verify_sq1_chern()


def suite_lemma_analog() -> list[Case]:
    return symmfunc.verify_fiber_tangent_class()


def suite_sn_identities(t_max: int = 4) -> list[Case]:
    return steenrod.verify_sn_sq1_identities(t_max)


def suite_primitivity(max_n: int = 12) -> list[Case]:
    cases = []
    for n in range(1, max_n + 1):
        sn = symmfunc.sn_sw(n, symmfunc.sw_ring(n))
        cases.append(case(f"s_{n} primitive in BO", True, symmfunc.is_primitive(sn)))
    for i in range(0, 4):
        ring = symmfunc.sw_ring(2, lowest=2)
        cases.append(
            case(
                f"w2^(2^{i}) primitive in the w1 = 0 quotient",
                True,
                symmfunc.is_primitive(ring.var("w2", 2**i)),
            )
        )
    ring = symmfunc.sw_ring(4)
    cases.append(case("w2*w3 not primitive", False, symmfunc.is_primitive(ring.var("w2") * ring.var("w3"))))
    cases.append(case("w4 not primitive", False, symmfunc.is_primitive(ring.var("w4"))))
    return cases


def suite_girard_newton(max_n: int = 12) -> list[Case]:
    cases = []
    for n in range(1, max_n + 1):
        cases.append(
            case(f"Girard = Newton at n = {n}", symmfunc.s_n_newton(n).body, symmfunc.s_n_girard(n).body)
        )
    for n in range(1, min(max_n, 8) + 1):
        xr = Ring([(f"x{k}", 1) for k in range(1, n + 1)], char=0)
        images = {f"sigma{k}": elementary_symmetric(xr, k) for k in range(1, n + 1)}
        sub = RingMap(symmfunc.sigma_ring(n), xr, images)
        cases.append(
            case(f"s_{n} gives the power sum in {n} variables", power_sum(xr, n), sub(symmfunc.s_n_newton(n).body))
        )
    return cases


def suite_generators(n: int = 4) -> list[Case]:
    rep = generators.gcd_report(n)
    oracle_values = [generators.S_n_PE_oracle(n, r) for r in range(1, n + 1)]
    cases = [
        case(f"S_{n}(PE_1..{n}) via the antisymmetrization oracle", list(rep.values), oracle_values),
        case(f"gcd consistent with the 2n+1 criterion at n = {n}", rep.criterion, rep.gcd),
        case(f"report consistency flag at n = {n}", True, rep.consistent),
    ]
    for r in range(1, n + 1):
        cases.append(
            case(
                f"oracle S_{n}(PE_{r}) matches closed form",
                generators.S_n_PE(n, r),
                generators.S_n_PE_oracle(n, r),
            )
        )
    return cases


def suite_gcd_criterion(max_n: int = 200) -> list[Case]:
    cases = []
    for n in range(1, max_n + 1):
        rep = generators.gcd_report(n)
        cases.append(case(f"gcd_report({n}) consistent", True, rep.consistent))
        m = 2 * n + 1
        pp = arithmetic.prime_power(m)
        if pp:
            p, s = pp
            witness = comb(p**s, p ** (s - 1))
            cases.append(
                case(
                    f"C({m}, {p ** (s - 1)}) has p-adic valuation 1 (p = {p})",
                    1,
                    arithmetic.p_adic_valuation(witness, p),
                )
            )
        else:
            for p, s in arithmetic.factorize(m).items():
                witness = comb(m, p**s)
                cases.append(
                    case(
                        f"C({m}, {p ** s}) not divisible by {p}",
                        0,
                        arithmetic.p_adic_valuation(witness, p),
                    )
                )
    return cases


def suite_lemma_binom(max_n: int = 1001) -> list[Case]:
    cases = []
    for n in range(5, max_n + 1, 2):
        if n & (n + 1) == 0:
            continue
        sol = arithmetic.binom_split(n)
        quotient = n * factorial(sol.a + sol.b - 1) // (factorial(sol.a) * factorial(sol.b))
        ok = sol.a % 2 == 1 and sol.b % 2 == 1 and 2 * sol.a + 3 * sol.b == n and quotient % 2 == 1
        cases.append(case(f"binom_split({n}) = ({sol.a}, {sol.b}) satisfies all constraints", True, ok))
    return cases


def suite_zseq(max_n: int = 64) -> list[Case]:
    zs = arithmetic.z_sequence(max_n)
    vanishing = [n for n in range(1, max_n + 1) if not zs[n]]
    expected = [2**i - 1 for i in range(1, max_n.bit_length() + 1) if 2**i - 1 <= max_n]
    cases = [case(f"z_n = 0 exactly at 2^i - 1 (n <= {max_n})", expected, vanishing)]
    homogeneous = all(zs[n].homogeneous_degrees() in ([], [n - 2]) for n in range(1, max_n + 1))
    cases.append(case("every nonzero z_n is homogeneous of degree n - 2", True, homogeneous))
    return cases


def suite_mf_ia(max_n: int = 64) -> list[Case]:
    zs = arithmetic.z_sequence(max_n)
    cases = []
    for n in range(1, max_n + 1):
        j = 0
        while 3 * 2**j < n:
            cases.append(case(f"doubling identity at (n = {n}, j = {j})", True, arithmetic.verify_doubling(n, j, zs)))
            j += 1
    for n in range(2, max_n + 1):
        if n == 2 ** arithmetic.trailing_ones(n) - 1:
            continue
        cases.append(case(f"y3-adic leading form at n = {n}", True, arithmetic.verify_leading_term(n, zs)))
    return cases


def suite_unoriented_transfer(max_n: int = 20) -> list[Case]:
    zs = arithmetic.z_sequence(max(max_n, 3))
    cases = []
    for n in range(1, max_n + 1):
        cases.append(case(f"z_via_fiber({n}) = z_{n}", zs[n], fiber.z_via_fiber(n)))
    return cases


SUITES = {
    "pi-closed-form": (suite_pi_closed_form, ("max_degree",)),
    "transfer-sn": (suite_transfer_sn, ("max_n",)),
    "transfer-s2t2t": (suite_transfer_s2t2t, ("t_max",)),
    "sq1-homology": (suite_sq1_homology, ("max_degree",)),
    "lemma-l32": (suite_lemma_l32, ()),
    "lemma-analog": (suite_lemma_analog, ()),
    "sn-identities": (suite_sn_identities, ("t_max",)),
    "primitivity": (suite_primitivity, ("max_n",)),
    "girard-newton": (suite_girard_newton, ("max_n",)),
    "generators": (suite_generators, ("n",)),
    "gcd-criterion": (suite_gcd_criterion, ("max_n",)),
    "lemma-binom": (suite_lemma_binom, ("max_n",)),
    "zseq": (suite_zseq, ("max_n",)),
    "mf-ia": (suite_mf_ia, ("max_n",)),
    "unoriented-transfer": (suite_unoriented_transfer, ("max_n",)),
}

PROFILES = {
    "quick": {
        "pi-closed-form": {"max_degree": 20},
        "transfer-sn": {"max_n": 20},
        "transfer-s2t2t": {"t_max": 4},
        "sq1-homology": {"max_degree": 20},
        "lemma-l32": {},
        "lemma-analog": {},
        "sn-identities": {"t_max": 3},
        "primitivity": {"max_n": 8},
        "girard-newton": {"max_n": 8},
        "generators": {"n": 4},
        "gcd-criterion": {"max_n": 50},
        "lemma-binom": {"max_n": 201},
        "zseq": {"max_n": 32},
        "mf-ia": {"max_n": 32},
        "unoriented-transfer": {"max_n": 12},
    },
    "full": {
        "pi-closed-form": {"max_degree": 30},
        "transfer-sn": {"max_n": 40},
        "transfer-s2t2t": {"t_max": 8},
        "sq1-homology": {"max_degree": 40},
        "lemma-l32": {},
        "lemma-analog": {},
        "sn-identities": {"t_max": 4},
        "primitivity": {"max_n": 12},
        "girard-newton": {"max_n": 12},
        "generators": {"n": 4},
        "gcd-criterion": {"max_n": 200},
        "lemma-binom": {"max_n": 1001},
        "zseq": {"max_n": 64},
        "mf-ia": {"max_n": 64},
        "unoriented-transfer": {"max_n": 20},
    },
}


def run(check_id: str, params: dict | None = None) -> VerificationReport:
    """Execute one registered suite and wrap its cases in a report."""
    if check_id not in SUITES:
        raise KeyError(f"unknown check id {check_id!r}")
    func, accepted = SUITES[check_id]
    params = {k: v for k, v in (params or {}).items() if v is not None}
    unknown = set(params) - set(accepted)
    if unknown:
        raise KeyError(f"check {check_id!r} does not accept parameters {sorted(unknown)}")
    start = time.perf_counter()
    try:
        details = tuple(func(**params))
        status = "pass" if all(c.ok for c in details) else "fail"
    except Exception as exc:  # surfaced in the report rather than a traceback
        details = (Case("suite raised", "no exception", f"{type(exc).__name__}: {exc}"),)
        status = "error"
    elapsed = int((time.perf_counter() - start) * 1000)
    return VerificationReport(check_id, params, status, details, elapsed)


def run_all(profile: str = "quick") -> list[VerificationReport]:
    """Run every registered suite with the profile's bounds, ordered by suite id."""
    if profile not in PROFILES:
        raise KeyError(f"unknown profile {profile!r}")
    bounds = PROFILES[profile]
    return [run(check_id, bounds.get(check_id, {})) for check_id in sorted(SUITES)]


def _print_report(report: VerificationReport, stream=sys.stdout):
    n_ok = sum(c.ok for c in report.details)
    print(
        f"{report.check:<22} {report.status:<5} ({n_ok}/{len(report.details)} cases, {report.wall_time_ms} ms)",
        file=stream,
    )
    for c in report.details:
        if not c.ok:
            print(f"  FAIL {c.name}: expected {c.expected}, got {c.actual}", file=stream)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(
        prog="bordcalc", description="verification suites for the projective-bundle calculus"
    )
    sub = parser.add_subparsers(dest="command")
    runp = sub.add_parser("run", help="run one suite, or 'all'")
    runp.add_argument("check_id", help="suite id from `bordcalc list`, or 'all'")
    runp.add_argument("--max-degree", type=int, dest="max_degree")
    runp.add_argument("--n", type=int, dest="n")
    runp.add_argument("--max-n", type=int, dest="max_n")
    runp.add_argument("--t-max", type=int, dest="t_max")
    runp.add_argument("--json", dest="json_path", metavar="PATH")
    runp.add_argument("--profile", choices=sorted(PROFILES), default="quick")
    sub.add_parser("list", help="list registered suite ids")
    args = parser.parse_args(argv)

    if args.command == "list":
        for check_id in sorted(SUITES):
            print(check_id)
        return 0
    if args.command != "run":
        parser.print_usage(sys.stderr)
        return 2

    if args.check_id == "all":
        reports = run_all(args.profile)
        for report in reports:
            _print_report(report)
        if args.json_path:
            payload = [r.to_json_obj() for r in reports]
            with open(args.json_path, "w") as fh:
                fh.write(render_json(payload))
        return 0 if all(r.status == "pass" for r in reports) else 1

    if args.check_id not in SUITES:
        print(f"unknown check id {args.check_id!r}; try `bordcalc list`", file=sys.stderr)
        return 2
    params = {
        "max_degree": args.max_degree,
        "n": args.n,
        "max_n": args.max_n,
        "t_max": args.t_max,
    }
    accepted = SUITES[args.check_id][1]
    params = {k: v for k, v in params.items() if v is not None}
    unknown = set(params) - set(accepted)
    if unknown:
        print(f"check {args.check_id!r} does not accept {sorted(unknown)}", file=sys.stderr)
        return 2
    report = run(args.check_id, params)
    _print_report(report)
    if args.json_path:
        with open(args.json_path, "w") as fh:
            fh.write(render_json(report.to_json_obj()))
    return 0 if report.status == "pass" else 1


if __name__ == "__main__":
    sys.exit(main())
