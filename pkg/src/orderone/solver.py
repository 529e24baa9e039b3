"""Root-of-unity solutions of the trivariate Laurent equation coupling two
Frobenius-eigenvalue quadratics.

The 14-term Laurent polynomial g(z1, z2, z3) vanishes at (eta1, eta2, eta3)
whenever two eigenvalues with defining roots of unity eta1, eta2 have ratio
eta3.  This module certifies g by an exact resultant computation, enumerates
the symmetry group G of g, reduces the candidate single-vanishing-subsum
expressions to orbit representatives, and finds all root-of-unity solutions
within given order bounds by exhaustive search: a vectorized floating filter
(sound with a wide error margin) followed by exact cyclotomic confirmation.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .cyclo import CycInt, cyclotomic_poly, root_sum
from .intpoly import IntPoly
from .madanpal import build_record, euler_phi
from .roots import RootOfUnity

Term = tuple[int, tuple[int, int, int]]  # coefficient, exponents of z1, z2, z3


@dataclass(frozen=True)
class LaurentExpr:
    """Canonical multivariate Laurent polynomial in z1, z2, z3 over Z."""

    terms: tuple[tuple[tuple[int, int, int], int], ...]  # ((e1,e2,e3), coeff) sorted

    @staticmethod
    def make(terms) -> "LaurentExpr":
        acc: dict[tuple[int, int, int], int] = {}
        for coeff, expo in terms:
            expo = tuple(expo)
            acc[expo] = acc.get(expo, 0) + coeff
        items = tuple(sorted((e, c) for e, c in acc.items() if c))
        return LaurentExpr(items)

    @staticmethod
    def monomial(coeff: int, e1: int, e2: int, e3: int) -> "LaurentExpr":
        return LaurentExpr.make([(coeff, (e1, e2, e3))])

    def __add__(self, other):
        return LaurentExpr.make(
            [(c, e) for e, c in self.terms] + [(c, e) for e, c in other.terms]
        )

    def __neg__(self):
        return LaurentExpr.make([(-c, e) for e, c in self.terms])

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        out = []
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out.append((c1 * c2, (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])))
        return LaurentExpr.make(out)

    def is_zero(self) -> bool:
        return not self.terms

    def key(self):
        """Total-order key: the sorted tuple of (e1, e2, e3, coeff)."""
        return tuple((*e, c) for e, c in self.terms)

    def substitute(self, images) -> "LaurentExpr":
        """Apply z_i -> images[i], each image a signed monomial (sign, exponents)."""
        out = []
        for e, c in self.terms:
            sign = 1
            expo = [0, 0, 0]
            for i in range(3):
                s_i, m_i = images[i]
                if e[i] % 2 and s_i < 0:
                    sign = -sign
                for j in range(3):
                    expo[j] += e[i] * m_i[j]
            out.append((sign * c, tuple(expo)))
        return LaurentExpr.make(out)

    def eval_at(self, t: "SolutionTriple") -> CycInt:
        parts = []
        for e, c in self.terms:
            r = (t.eta1 ** e[0]) * (t.eta2 ** e[1]) * (t.eta3 ** e[2])
            parts.append((c, r))
        return root_sum(parts) if parts else CycInt.zero()

    def __repr__(self):
        bits = []
        for e, c in self.terms:
            bits.append(f"{c}*z^{e}")
        return f"LaurentExpr({' + '.join(bits) or '0'})"


# the three involutive generators of the invariance group of g, given by the
# images of (z1, z2, z3) as signed monomials (sign, exponent vector)
GENERATORS = (
    ((1, (-1, 0, 0)), (1, (0, -1, 0)), (1, (0, 0, -1))),  # invert all three
    ((1, (0, 1, 0)), (1, (1, 0, 0)), (1, (0, 0, 1))),     # swap z1 and z2
    ((1, (1, 0, 0)), (1, (0, -1, 0)), (-1, (1, 0, -1))),  # invert z2, z3 -> -z1/z3
)


@lru_cache(maxsize=1)
def g_expr() -> LaurentExpr:
    """The 14-term equation whose root-of-unity zeros classify eigenvalue ratios."""
    terms = [
        (1, (1, 0, 0)), (1, (-1, 0, 0)),
        (1, (0, 1, 0)), (1, (0, -1, 0)),
        (1, (0, 0, 1)), (1, (0, 0, -1)),
        (-1, (1, 0, -1)), (-1, (-1, 0, 1)),
        (-1, (0, 1, -1)), (-1, (0, -1, 1)),
        (1, (1, 1, -1)), (1, (-1, -1, 1)),
        (-2, (1, 1, -2)), (-2, (-1, -1, 2)),
    ]
    return LaurentExpr.make(terms)


# the 12 signed monomials whose sum plus 2u + 2u^-1 is g
S_MONOMIALS: tuple[Term, ...] = (
    (1, (1, 0, 0)), (1, (-1, 0, 0)),
    (1, (0, 1, 0)), (1, (0, -1, 0)),
    (1, (0, 0, 1)), (1, (0, 0, -1)),
    (-1, (1, 0, -1)), (-1, (-1, 0, 1)),
    (-1, (0, 1, -1)), (-1, (0, -1, 1)),
    (1, (1, 1, -1)), (1, (-1, -1, 1)),
)
U_TERM: Term = (-1, (1, 1, -2))
U_INV_TERM: Term = (-1, (-1, -1, 2))


def apply_symmetry_word(word, obj):
    """Apply a word in the three generators, e.g. (2, 0, 1), left to right."""
    for k in word:
        obj = apply_symmetry(k, obj)
    return obj


def apply_symmetry(k: int, obj):
    """Apply the k-th generator (0, 1, 2) to a LaurentExpr or a SolutionTriple."""
    images = GENERATORS[k]
    if isinstance(obj, LaurentExpr):
        return obj.substitute(images)
    if isinstance(obj, SolutionTriple):
        if k == 0:
            return SolutionTriple(obj.eta1.inverse(), obj.eta2.inverse(), obj.eta3.inverse())
        if k == 1:
            return SolutionTriple(obj.eta2, obj.eta1, obj.eta3)
        return SolutionTriple(
            obj.eta1, obj.eta2.inverse(), (obj.eta1 * obj.eta3.inverse()).negated()
        )
    raise TypeError(f"cannot apply symmetry to {type(obj)!r}")


def candidate_h_set() -> list[LaurentExpr]:
    """Candidate single-vanishing expressions h.

    Form (a): mu + 1 and mu - 1 for each mu among the 12 signed monomials, u,
    and u^-1 (28 expressions).  Form (b): u + u^-1 + sum of an inversion-stable
    subset T of the 12 with at most 6 elements (42 expressions).
    """
    out = []
    special = list(S_MONOMIALS) + [U_TERM, U_INV_TERM]
    for coeff, expo in special:
        mono = LaurentExpr.monomial(coeff, *expo)
        out.append(mono + LaurentExpr.monomial(1, 0, 0, 0))
        out.append(mono + LaurentExpr.monomial(-1, 0, 0, 0))
    # inversion pairs of the 12-element set
    def invert(term: Term) -> Term:
        c, e = term
        return (c, (-e[0], -e[1], -e[2]))

    pairs = []
    used = set()
    for t in S_MONOMIALS:
        if t in used:
            continue
        ti = invert(t)
        assert ti in S_MONOMIALS and ti != t
        used.add(t)
        used.add(ti)
        pairs.append((t, ti))
    assert len(pairs) == 6
    ucore = LaurentExpr.make([U_TERM, U_INV_TERM])
    for k in range(0, 4):
        for chosen in itertools.combinations(pairs, k):
            expr = ucore
            for t, ti in chosen:
                expr = expr + LaurentExpr.make([t, ti])
            out.append(expr)
    assert len(out) == 70
    return out


def orbit_representatives() -> list[LaurentExpr]:
    """Connected-component representatives of the candidate set under the three
    generators, with an extra edge from h to g - h whenever both are candidates."""
    cands = candidate_h_set()
    by_key = {h.key(): h for h in cands}
    g = g_expr()
    parent: dict = {k: k for k in by_key}

    def find(k):
        while parent[k] != k:
            parent[k] = parent[parent[k]]
            k = parent[k]
        return k

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    for k, h in by_key.items():
        for i in range(3):
            img = apply_symmetry(i, h)
            ik = img.key()
            if ik not in by_key:
                raise ArithmeticError("generator image left the candidate set")
            union(k, ik)
        gk = (g - h).key()
        if gk in by_key:
            union(k, gk)
    comps: dict = {}
    for k in by_key:
        comps.setdefault(find(k), []).append(k)
    return [by_key[min(ks)] for ks in sorted(comps.values(), key=min)]


# -- solutions ---------------------------------------------------------------


@dataclass(frozen=True, order=True)
class SolutionTriple:
    eta1: RootOfUnity
    eta2: RootOfUnity
    eta3: RootOfUnity

    def orders(self) -> tuple[int, int, int]:
        return (self.eta1.order, self.eta2.order, self.eta3.order)

    def level(self) -> int:
        return math.lcm(*self.orders())


@dataclass(frozen=True, order=True)
class SolutionPattern:
    order1: int
    order2: int
    orders3: tuple[int, ...]
    kind: str  # "parametric" or "sporadic"


def eval_g(t: SolutionTriple) -> CycInt:
    return g_expr().eval_at(t)


def is_solution(t: SolutionTriple) -> bool:
    return eval_g(t).is_zero()


def _primitive_residues(n: int) -> list[int]:
    return [k for k in range(n) if math.gcd(k, n) == 1] if n > 1 else [0]


def _float_zero_mask(a: int, b: int, c: int, k1s, k2s, k3s) -> np.ndarray:
    t1 = np.exp(2j * np.pi * np.asarray(k1s, dtype=float)[:, None, None] / a)
    t2 = np.exp(2j * np.pi * np.asarray(k2s, dtype=float)[None, :, None] / b)
    t3 = np.exp(2j * np.pi * np.asarray(k3s, dtype=float)[None, None, :] / c)
    g = (
        t1 + 1 / t1 + t2 + 1 / t2 + t3 + 1 / t3
        - t1 / t3 - t3 / t1 - t2 / t3 - t3 / t2
        + t1 * t2 / t3 + t3 / (t1 * t2)
        - 2 * t1 * t2 / t3 ** 2 - 2 * t3 ** 2 / (t1 * t2)
    )
    return np.abs(g) < 1e-8


def _solve_one_order_triple(args) -> list[tuple[int, int, int, int, int, int]]:
    a, b, c = args
    k1s = [k for k in _primitive_residues(a) if 2 * k <= a]
    k2s = _primitive_residues(b)
    k3s = _primitive_residues(c)
    mask = _float_zero_mask(a, b, c, k1s, k2s, k3s)
    out = []
    for i, j, l in zip(*np.nonzero(mask)):
        t = SolutionTriple(
            RootOfUnity.make(k1s[i], a), RootOfUnity.make(k2s[j], b), RootOfUnity.make(k3s[l], c)
        )
        if is_solution(t):
            out.append((a, k1s[i], b, k2s[j], c, k3s[l]))
    return out


def solve_bounded(
    max_order_12: int,
    max_order_3: int,
    max_level: int,
    force_large_levels: bool = False,
    workers: int = 1,
) -> list[SolutionTriple]:
    """All solutions with order(eta1), order(eta2) <= max_order_12,
    order(eta3) <= max_order_3, and lcm of the three orders <= max_level.

    Enumerates order triples with order(eta1) <= order(eta2) and eta1 in the
    lower half of its inversion orbit, then re-expands by the inversion and
    swap symmetries.  Order triples whose level has phi(level) > 64 are
    skipped unless force_large_levels is set.
    """
    if min(max_order_12, max_order_3, max_level) < 1:
        raise ValueError("bounds must be positive")
    tasks = []
    for a in range(1, max_order_12 + 1):
        for b in range(a, max_order_12 + 1):
            lab = math.lcm(a, b)
            if lab > max_level:
                continue
            for c in range(1, max_order_3 + 1):
                level = math.lcm(lab, c)
                if level > max_level:
                    continue
                if euler_phi(level) > 64 and not force_large_levels:
                    continue
                tasks.append((a, b, c))
    if workers > 1:
        import multiprocessing as mp

        with mp.Pool(workers) as pool:
            chunks = pool.map(_solve_one_order_triple, tasks)
    else:
        chunks = [_solve_one_order_triple(t) for t in tasks]
    found = set()
    for chunk in chunks:
        for a, k1, b, k2, c, k3 in chunk:
            base = SolutionTriple(
                RootOfUnity.make(k1, a), RootOfUnity.make(k2, b), RootOfUnity.make(k3, c)
            )
            images = [
                base,
                apply_symmetry(0, base),
                apply_symmetry(1, base),
                apply_symmetry(0, apply_symmetry(1, base)),
            ]
            for t in images:
                if (
                    t.eta1.order <= max_order_12
                    and t.eta2.order <= max_order_12
                    and t.eta3.order <= max_order_3
                    and t.level() <= max_level
                ):
                    found.add(t)
    return sorted(found)


# -- classification ------------------------------------------------------------


def _orbit(t: SolutionTriple, cap: int = 50000) -> set[SolutionTriple]:
    seen = {t}
    frontier = [t]
    while frontier:
        nxt = []
        for s in frontier:
            for k in range(3):
                img = apply_symmetry(k, s)
                if img not in seen:
                    seen.add(img)
                    nxt.append(img)
        frontier = nxt
        if len(seen) > cap:
            raise ArithmeticError("symmetry orbit unexpectedly large")
    return seen


def is_parametric(t: SolutionTriple) -> bool:
    """True iff t lies in the symmetry orbit of some (zeta, zeta, -zeta)."""
    return any(
        s.eta1 == s.eta2 and s.eta3 == s.eta1.negated() for s in _orbit(t)
    )


def classify_solutions(sols) -> list[SolutionPattern]:
    """Group solutions into parametric members and sporadic order patterns.

    Order signatures are normalized by the swap symmetry only:
    order1 <= order2, with the full set of eta3 orders per (order1, order2).
    """
    sporadic: dict[tuple[int, int], set[int]] = {}
    parametric: dict[tuple[int, int], set[int]] = {}
    for t in sols:
        a, b, c = t.orders()
        key = (min(a, b), max(a, b))
        bucket = parametric if is_parametric(t) else sporadic
        bucket.setdefault(key, set()).add(c)
    out = []
    for (a, b), cs in sorted(parametric.items()):
        out.append(SolutionPattern(a, b, tuple(sorted(cs)), "parametric"))
    for (a, b), cs in sorted(sporadic.items()):
        out.append(SolutionPattern(a, b, tuple(sorted(cs)), "sporadic"))
    return out


# known sporadic order patterns: (order of eta1, order of eta2,
# possible orders of eta3), normalized by the swap symmetry
SPORADIC_ORDER_PATTERNS: tuple[SolutionPattern, ...] = (
    SolutionPattern(1, 2, (8,), "sporadic"),
    SolutionPattern(1, 4, (24,), "sporadic"),
    SolutionPattern(2, 2, (4,), "sporadic"),
    SolutionPattern(2, 4, (6, 12), "sporadic"),
    SolutionPattern(3, 30, (10, 15, 30), "sporadic"),
    SolutionPattern(4, 4, (3, 12), "sporadic"),
    SolutionPattern(6, 7, (21,), "sporadic"),
    SolutionPattern(7, 7, (7, 14), "sporadic"),
    SolutionPattern(30, 30, (5, 6, 10, 15, 30), "sporadic"),
)


def expected_parametric(max_order_12: int, max_order_3: int, max_level: int) -> set[SolutionTriple]:
    """The symmetry orbit of the one-parameter family (zeta, zeta, -zeta) within bounds."""
    out: set[SolutionTriple] = set()
    for n in range(1, 2 * max(max_order_12, max_order_3) + 1):
        for k in _primitive_residues(n):
            zeta = RootOfUnity.make(k, n)
            seed = SolutionTriple(zeta, zeta, zeta.negated())
            if seed in out:
                continue
            for t in _orbit(seed):
                if (
                    t.eta1.order <= max_order_12
                    and t.eta2.order <= max_order_12
                    and t.eta3.order <= max_order_3
                    and t.level() <= max_level
                ):
                    out.add(t)
    return out


def verify_table2(
    max_order_12: int = 32, max_order_3: int = 32, max_level: int = 120, workers: int = 1
) -> dict:
    """Recompute the sporadic order patterns and the parametric locus within bounds."""
    sols = solve_bounded(max_order_12, max_order_3, max_level, workers=workers)
    patterns = classify_solutions(sols)
    sporadic = tuple(p for p in patterns if p.kind == "sporadic")
    found_parametric = {t for t in sols if is_parametric(t)}
    want_parametric = expected_parametric(max_order_12, max_order_3, max_level)
    ok_sporadic = sporadic == SPORADIC_ORDER_PATTERNS
    ok_parametric = found_parametric == want_parametric
    return {
        "solutions": sols,
        "patterns": patterns,
        "sporadic_ok": ok_sporadic,
        "parametric_ok": ok_parametric,
        "ok": ok_sporadic and ok_parametric,
    }


# -- resultant certifications ----------------------------------------------------


def eigenvalue_resultant_identity(n: int) -> bool:
    """The eliminant of the eigenvalue quadratic against the n-th cyclotomic
    polynomial equals the Weil polynomial of the n-th family member up to sign.

    Res_y(Phi_n(y), x^2 + (y-1)x - 2y) is linear in y, so it expands to
    (-1)^d * sum_j c_j (x - x^2)^j (x - 2)^(d-j) with Phi_n = sum_j c_j y^j.
    """
    if n < 3:
        raise ValueError("need n >= 3 so that the family polynomial has degree phi(n)")
    phi_n = cyclotomic_poly(n)
    d = phi_n.degree()
    x_minus_2 = IntPoly([-2, 1])
    x_minus_x2 = IntPoly([0, 1, -1])
    acc = IntPoly()
    for j in range(d + 1):
        c = phi_n[j]
        if c:
            acc = acc + IntPoly([c]) * x_minus_x2 ** j * x_minus_2 ** (d - j)
    if d % 2:
        acc = -acc
    weil = build_record(n).weil
    return acc == weil or acc == -weil


def _sylvester_det_quadratics(a2, a1, a0, b2, b1, b0) -> LaurentExpr:
    """Determinant of the 4x4 Sylvester matrix of two quadratics with LaurentExpr entries."""
    # rows: [a2 a1 a0 0], [0 a2 a1 a0], [b2 b1 b0 0], [0 b2 b1 b0]
    # expand via the 2x2-block formula: det = (a2*b0 - a0*b2)^2 - (a2*b1 - a1*b2)*(a1*b0 - a0*b1)
    m = a2 * b0 - a0 * b2
    return m * m - (a2 * b1 - a1 * b2) * (a1 * b0 - a0 * b1)


def ratio_resultant_factor() -> tuple[int, tuple[int, int, int]] | None:
    """Unit factor (coefficient, monomial) with Res = factor * g, or None.

    The resultant eliminates the eigenvalue from its own quadratic and from the
    ratio-shifted quadratic of the second eigenvalue (alpha2 = alpha / z3).
    """
    one = LaurentExpr.monomial(1, 0, 0, 0)
    a2 = one
    a1 = LaurentExpr.monomial(1, 1, 0, 0) - one
    a0 = LaurentExpr.monomial(-2, 1, 0, 0)
    b2 = LaurentExpr.monomial(1, 0, 0, -2)
    b1 = (LaurentExpr.monomial(1, 0, -1, 0) - one) * LaurentExpr.monomial(1, 0, 0, -1)
    b0 = LaurentExpr.monomial(-2, 0, -1, 0)
    res = _sylvester_det_quadratics(a2, a1, a0, b2, b1, b0)
    g = g_expr()
    ge, gc = g.terms[0]
    for e, c in res.terms:
        if c % gc:
            continue
        factor = LaurentExpr.monomial(c // gc, e[0] - ge[0], e[1] - ge[1], e[2] - ge[2])
        if (g * factor).key() == res.key():
            (fe, fc), = factor.terms
            return fc, fe
    return None


def ratio_resultant_identity() -> bool:
    """True iff the eliminant recovers g up to a single monomial factor."""
    return ratio_resultant_factor() is not None
