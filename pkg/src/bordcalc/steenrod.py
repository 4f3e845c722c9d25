"""Sq1 as an F2-derivation on presented rings, and its homology.

Sq1 is determined by generator images (degree +1, squaring on degree-one
generators) and extended by the Leibniz rule.  Homology is computed degree
by degree with exact Gaussian elimination over F2 on int bitsets indexed
by graded-lex sorted monomial bases.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .poly import Polynomial, Ring
from .report import Case, case


class Sq1Action:
    """A degree +1 derivation with d*d = 0, given by generator images.

    Construction checks that every image is homogeneous of the right degree,
    that degree-one generators map to their squares, and that the derivation
    squares to zero on generators (hence globally).
    """

    __slots__ = ("ring", "images", "_by_index")

    def __init__(self, ring: Ring, images: dict[str, Polynomial]):
        if ring.char != 2:
            raise ValueError("Sq1 acts on F2 coefficients")
        self.ring = ring
        by_index = []
        for v in ring.variables:
            if v.name not in images:
                raise ValueError(f"missing Sq1 image for {v.name!r}")
            img = images[v.name]
            if img.ring != ring:
                raise ValueError(f"Sq1 image of {v.name!r} lives in the wrong ring")
            if img and (not img.is_homogeneous() or img.degree() != v.degree + 1):
                raise ValueError(f"Sq1 image of {v.name!r} must be homogeneous of degree {v.degree + 1}")
            if v.degree == 1 and img != ring.var(v.name) ** 2:
                raise ValueError(f"Sq1 on the degree-one generator {v.name!r} must be its square")
            by_index.append(img)
        self.images = dict(images)
        self._by_index = tuple(by_index)
        for v in ring.variables:
            square = self(self(ring.var(v.name)))
            if square:
                raise ValueError(f"Sq1(Sq1({v.name})) = {square} != 0")

    def __call__(self, p: Polynomial) -> Polynomial:
        """Leibniz extension: only odd exponents of a generator contribute."""
        if p.ring != self.ring:
            raise ValueError("polynomial not in the action's ring")
        acc: dict = {}
        for m, _ in p.terms.items():
            for i, e in enumerate(m):
                if e % 2 == 0:
                    continue
                img = self._by_index[i]
                if img.is_zero():
                    continue
                base = list(m)
                base[i] = e - 1
                for mi in img.terms:
                    key = tuple(a + b for a, b in zip(base, mi))
                    acc[key] = acc.get(key, 0) ^ 1
        return self.ring._canon(acc)


def sq1(action: Sq1Action, p: Polynomial) -> Polynomial:
    """Apply the derivation to p (function form of action(p))."""
    return action(p)


def squaring_action(ring: Ring) -> Sq1Action:
    """The unique Sq1 on a ring generated in degree one (every g maps to g^2)."""
    return Sq1Action(ring, {v.name: ring.var(v.name) ** 2 for v in ring.variables})


_WNAME = re.compile(r"w(\d+)('{0,2})")


def wu_action(ring: Ring) -> Sq1Action:
    """Sq1 on Stiefel-Whitney generators: w_k -> w1*w_k + (k+1)*w_{k+1} mod 2.

    Works on plain w-rings and on primed/double-primed tensor copies;
    in a presentation without w1 the first summand disappears.  The ring
    must contain w_{k+1} whenever k is even, unless truncation drops it.
    """
    names = {v.name for v in ring.variables}
    images = {}
    for v in ring.variables:
        m = _WNAME.fullmatch(v.name)
        if not m or int(m.group(1)) != v.degree:
            raise ValueError(f"not a Stiefel-Whitney generator: {v.name!r}")
        k, suffix = v.degree, m.group(2)
        acc = ring.zero()
        if f"w1{suffix}" in names:
            acc = acc + ring.var(f"w1{suffix}") * ring.var(v.name)
        if k % 2 == 0:
            nxt = f"w{k + 1}{suffix}"
            if nxt in names:
                acc = acc + ring.var(nxt)
            elif ring.truncation is None or k + 1 <= ring.truncation:
                raise ValueError(f"ring too small to express Sq1({v.name})")
        images[v.name] = acc
    return Sq1Action(ring, images)


def bg_action() -> tuple[Ring, Sq1Action]:
    """F2[y1, y4, y6] with Sq1(y1) = y1^2, Sq1(y4) = 0, Sq1(y6) = y1*y6."""
    ring = Ring([("y1", 1), ("y4", 4), ("y6", 6)], char=2)
    y1, y6 = ring.var("y1"), ring.var("y6")
    return ring, Sq1Action(ring, {"y1": y1 * y1, "y4": ring.zero(), "y6": y1 * y6})


def so3_action() -> tuple[Ring, Sq1Action]:
    """F2[y2, y3] with the Wu-type action Sq1(y2) = y3, Sq1(y3) = 0 (cross-check only)."""
    ring = Ring([("y2", 2), ("y3", 3)], char=2)
    return ring, Sq1Action(ring, {"y2": ring.var("y3"), "y3": ring.zero()})


# -- degreewise F2 linear algebra --------------------------------------------


def monomials_of_degree(ring: Ring, d: int) -> list[tuple]:
    """All exponent tuples of total degree d, sorted (graded-lex within a degree)."""
    degs = ring._degrees
    out: list[tuple] = []
    key = [0] * len(degs)

    def rec(i: int, rem: int):
        if i == len(degs):
            if rem == 0:
                out.append(tuple(key))
            return
        step = degs[i]
        for e in range(rem // step + 1):
            key[i] = e
            rec(i + 1, rem - e * step)
        key[i] = 0

    rec(0, d)
    return sorted(out)


class _Echelon:
    """Incremental row echelon basis of int bitsets (most-significant-bit pivots)."""

    def __init__(self):
        self.pivots: dict[int, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def reduce(self, v: int) -> int:
        while v:
            b = v.bit_length() - 1
            if b not in self.pivots:
                return v
            v ^= self.pivots[b]
        return 0

    def add(self, v: int) -> int:
        """Insert v; return its reduced form (0 if already in the span)."""
        w = self.reduce(v)
        if w:
            self.pivots[w.bit_length() - 1] = w
        return w


def _kernel_combos(rows: list[int]) -> list[int]:
    """Combination masks spanning the kernel of the map with the given rows."""
    pivots: dict[int, tuple[int, int]] = {}
    kernel = []
    for i, r in enumerate(rows):
        v, c = r, 1 << i
        while v:
            b = v.bit_length() - 1
            if b not in pivots:
                pivots[b] = (v, c)
                break
            pv, pc = pivots[b]
            v ^= pv
            c ^= pc
        else:
            kernel.append(c)
    return kernel


def _sq1_rows(action: Sq1Action, basis_d: list[tuple], index_next: dict) -> list[int]:
    rows = []
    ring = action.ring
    for m in basis_d:
        img = action(Polynomial(ring, {m: 1}))
        row = 0
        for mm in img.terms:
            row |= 1 << index_next[mm]
        rows.append(row)
    return rows


def _mask_to_poly(ring: Ring, basis: list[tuple], mask: int) -> Polynomial:
    terms = {basis[i]: 1 for i in range(mask.bit_length()) if (mask >> i) & 1}
    return Polynomial(ring, terms)


def _poly_to_mask(p: Polynomial, index: dict) -> int:
    mask = 0
    for m in p.terms:
        mask |= 1 << index[m]
    return mask


@dataclass(frozen=True)
class Sq1Homology:
    """Per-degree dimensions and representative cocycles of ker Sq1 / im Sq1."""

    max_degree: int
    dims: tuple[int, ...]
    representatives: tuple[tuple[Polynomial, ...], ...]


def _degree_sweep(action: Sq1Action, max_degree: int):
    """Yield (degree, basis, index, kernel masks, image echelon from below)."""
    ring = action.ring
    if ring.truncation is not None and max_degree + 1 > ring.truncation:
        raise ValueError(
            f"max_degree {max_degree} needs degree {max_degree + 1}, beyond truncation {ring.truncation}"
        )
    rows_prev: list[int] = []
    for d in range(max_degree + 1):
        basis = monomials_of_degree(ring, d)
        index = {m: i for i, m in enumerate(basis)}
        image = _Echelon()
        for r in rows_prev:
            image.add(r)
        index_next = {m: i for i, m in enumerate(monomials_of_degree(ring, d + 1))}
        rows = _sq1_rows(action, basis, index_next)
        kernel = _kernel_combos(rows)
        yield d, basis, index, kernel, image
        rows_prev = rows


def sq1_homology(action: Sq1Action, max_degree: int) -> Sq1Homology:
    """Sq1-homology in degrees 0..max_degree with deterministic representatives."""
    dims = []
    reps = []
    ring = action.ring
    for d, basis, _index, kernel, image in _degree_sweep(action, max_degree):
        im_rank = image.rank
        chosen = []
        for v in kernel:
            w = image.add(v)
            if w:
                chosen.append(w)
        dims.append(len(kernel) - im_rank)
        if len(chosen) != dims[-1]:
            raise AssertionError("kernel/image bookkeeping out of step")
        reps.append(tuple(_mask_to_poly(ring, basis, w) for w in chosen))
    return Sq1Homology(max_degree, tuple(dims), tuple(reps))


def verify_homology_basis(action: Sq1Action, max_degree: int, expected) -> list[Case]:
    """Check that the expected monomial classes are exactly a homology basis.

    Per degree: every expected class is a cocycle, the classes stay linearly
    independent modulo boundaries, and their count matches the computed
    homology dimension.
    """
    by_degree: dict[int, list[Polynomial]] = {}
    for e in expected:
        if not e.is_homogeneous():
            raise ValueError("expected classes must be homogeneous")
        by_degree.setdefault(e.degree(), []).append(e)
    cases = []
    for d, _basis, index, kernel, image in _degree_sweep(action, max_degree):
        want = by_degree.get(d, [])
        im_rank = image.rank
        dim = len(kernel) - im_rank
        cases.append(case(f"degree {d}: dim H", len(want), dim))
        independent = True
        for e in want:
            if action(e):
                cases.append(case(f"degree {d}: Sq1({e}) = 0", "0", str(action(e))))
            if not image.add(_poly_to_mask(e, index)):
                independent = False
        if want:
            cases.append(
                case(f"degree {d}: classes independent mod boundaries", True, independent)
            )
    return cases


def verify_sn_sq1_identities(t_max: int) -> list[Case]:
    """Sq1(s_{2t-1}) = s_{2t}, Sq1(s_{2t}) = 0, and the tensor-product identity."""
    from . import symmfunc

    if t_max < 1:
        raise ValueError("t_max must be positive")
    ring = symmfunc.sw_ring(2 * t_max + 1)
    act = wu_action(ring)
    sn = {k: symmfunc.sn_sw(k, ring) for k in range(1, 2 * t_max + 1)}
    cases = []
    for t in range(1, t_max + 1):
        cases.append(case(f"Sq1(s_{2 * t - 1}) = s_{2 * t}", sn[2 * t], act(sn[2 * t - 1])))
        cases.append(case(f"Sq1(s_{2 * t}) = 0", "0", act(sn[2 * t])))
    tensor = symmfunc.tensor_square_ring(ring)
    tact = wu_action(tensor)
    for t in range(1, t_max + 1):
        lhs = tact(symmfunc.tensor_pure(sn[2 * t - 1], "left") * symmfunc.tensor_pure(sn[2 * t], "right"))
        rhs = symmfunc.tensor_pure(sn[2 * t], "left") * symmfunc.tensor_pure(sn[2 * t], "right")
        cases.append(case(f"Sq1(s_{2 * t - 1} (x) s_{2 * t}) = s_{2 * t} (x) s_{2 * t}", rhs, lhs))
    return cases
