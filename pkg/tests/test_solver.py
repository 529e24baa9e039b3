import math

import pytest

from orderone.relations import Relation, conjugation_stable_partition
from orderone.roots import RootOfUnity
from orderone.solver import (
    SPORADIC_ORDER_PATTERNS,
    SolutionTriple,
    apply_symmetry,
    candidate_h_set,
    classify_solutions,
    eigenvalue_resultant_identity,
    expected_parametric,
    g_expr,
    is_parametric,
    is_solution,
    orbit_representatives,
    ratio_resultant_factor,
    ratio_resultant_identity,
    solve_bounded,
    verify_table2,
)

r = RootOfUnity.make


def test_g_has_fourteen_terms_with_pinned_coefficients():
    g = g_expr()
    assert len(g.terms) == 14
    d = dict(g.terms)
    assert d[(1, 1, -2)] == -2
    assert d[(-1, -1, 2)] == -2
    assert d[(1, 0, 0)] == 1
    assert d[(1, 0, -1)] == -1
    assert d[(1, 1, -1)] == 1
    # total weight as a relation, with the double terms counted twice
    assert sum(abs(c) for _, c in g.terms) == 16


@pytest.mark.parametrize("k", [0, 1, 2])
def test_g_invariant_under_generators(k):
    g = g_expr()
    assert apply_symmetry(k, g).key() == g.key()


def test_symmetry_on_triples():
    t = SolutionTriple(r(1, 5), r(1, 5), r(1, 5).negated())
    assert apply_symmetry(2, t) == SolutionTriple(r(1, 5), r(4, 5), r(0, 1))
    assert apply_symmetry(1, SolutionTriple(r(1, 3), r(1, 5), r(1, 7))) == SolutionTriple(
        r(1, 5), r(1, 3), r(1, 7)
    )
    assert apply_symmetry(0, t) == SolutionTriple(r(4, 5), r(4, 5), r(1, 5).negated().inverse())


def test_symmetry_words():
    from orderone.solver import apply_symmetry_word, g_expr

    g = g_expr()
    for word in [(), (0,), (1, 2), (2, 1, 0), (0, 1, 2, 1, 0)]:
        assert apply_symmetry_word(word, g).key() == g.key()
    t = SolutionTriple(r(1, 5), r(1, 5), r(1, 5).negated())
    assert apply_symmetry_word((2, 2), t) == t  # each generator is an involution


def test_candidate_set_counts():
    cands = candidate_h_set()
    assert len(cands) == 70
    constant_terms = [h for h in cands if any(e == (0, 0, 0) for e, _ in h.terms)]
    assert len(constant_terms) == 28
    # u + u^-1 with empty T is a candidate
    from orderone.solver import LaurentExpr, U_INV_TERM, U_TERM

    assert LaurentExpr.make([U_TERM, U_INV_TERM]).key() in {h.key() for h in cands}


def test_orbit_representative_count():
    assert len(orbit_representatives()) == 16


def test_eval_g_examples():
    assert is_solution(SolutionTriple(r(1, 5), r(1, 5), r(1, 5).negated()))
    assert is_solution(SolutionTriple(r(0, 1), r(1, 2), r(1, 8)))
    assert is_solution(SolutionTriple(r(1, 2), r(1, 2), r(1, 4)))
    assert is_solution(SolutionTriple(r(0, 1), r(0, 1), r(0, 1)))
    assert not is_solution(SolutionTriple(r(1, 5), r(1, 5), r(1, 5)))
    # the shape (zeta, zeta, 1) from the printed one-parameter display fails;
    # its orbit-mate (zeta, 1/zeta, 1) is the actual solution
    assert not is_solution(SolutionTriple(r(1, 5), r(1, 5), r(0, 1)))
    assert is_solution(SolutionTriple(r(1, 5), r(4, 5), r(0, 1)))


def test_parametric_detection():
    assert is_parametric(SolutionTriple(r(1, 5), r(1, 5), r(1, 5).negated()))
    assert is_parametric(SolutionTriple(r(1, 5), r(4, 5), r(0, 1)))
    assert not is_parametric(SolutionTriple(r(0, 1), r(1, 2), r(1, 8)))


def exact_solve(max12, max3, maxlevel):
    """Independent slow path: exact evaluation over the whole grid."""
    out = set()
    for a in range(1, max12 + 1):
        for b in range(1, max12 + 1):
            for c in range(1, max3 + 1):
                if math.lcm(a, b, c) > maxlevel:
                    continue
                for k1 in range(a):
                    if math.gcd(k1, a) != 1 and a > 1:
                        continue
                    for k2 in range(b):
                        if math.gcd(k2, b) != 1 and b > 1:
                            continue
                        for k3 in range(c):
                            if math.gcd(k3, c) != 1 and c > 1:
                                continue
                            t = SolutionTriple(r(k1, a), r(k2, b), r(k3, c))
                            if is_solution(t):
                                out.add(t)
    return out


def test_solver_matches_exact_enumeration_small():
    got = set(solve_bounded(8, 8, 24))
    want = exact_solve(8, 8, 24)
    assert got == want


def test_solutions_are_symmetry_stable_with_slack():
    sols = set(solve_bounded(8, 8, 24))
    wide = set(solve_bounded(16, 16, 48))
    for t in sols:
        for k in range(3):
            img = apply_symmetry(k, t)
            assert is_solution(img)
            if (
                img.eta1.order <= 16
                and img.eta2.order <= 16
                and img.eta3.order <= 48
                and img.level() <= 48
            ):
                assert img in wide


def test_row_for_eighth_roots():
    sols = solve_bounded(2, 8, 8)
    with_1_2 = {t for t in sols if t.eta1.order == 1 and t.eta2.order == 2}
    assert {t.eta3 for t in with_1_2} == {r(1, 8), r(3, 8), r(5, 8), r(7, 8)}


def test_trivial_bounds():
    assert solve_bounded(1, 1, 1) == [SolutionTriple(r(0, 1), r(0, 1), r(0, 1))]


def test_verify_table2_full():
    result = verify_table2(32, 32, 120)
    assert result["sporadic_ok"]
    assert result["parametric_ok"]
    sporadic = [p for p in result["patterns"] if p.kind == "sporadic"]
    assert tuple(sporadic) == SPORADIC_ORDER_PATTERNS


def test_sporadic_levels_divide_known_conductor_doublings():
    result = verify_table2(32, 32, 120)
    allowed = (30, 42, 24, 15, 21)
    for t in result["solutions"]:
        if not is_parametric(t):
            assert any(a % t.level() == 0 for a in allowed), t


def test_solution_relation_separates_the_double_terms():
    g = g_expr()
    checked = 0
    for t in solve_bounded(8, 8, 30):
        values = []
        for e, c in g.terms:
            v = (t.eta1 ** e[0]) * (t.eta2 ** e[1]) * (t.eta3 ** e[2])
            if c < 0:
                v = v.negated()
            values.extend([v] * abs(c))
        rel = Relation.from_values(values)
        assert rel.weight == 16
        u_val = ((t.eta1 * t.eta2) * (t.eta3 ** -2)).negated()
        parts = conjugation_stable_partition(rel)
        for part in parts:
            assert part.values().count(u_val) <= 1
            assert part.values().count(u_val.inverse()) <= 1
        checked += 1
    assert checked > 20


def test_eigenvalue_resultant_identity():
    for n in range(3, 31):
        assert eigenvalue_resultant_identity(n), n


def test_ratio_resultant_identity():
    assert ratio_resultant_identity()
    coeff, expo = ratio_resultant_factor()
    # the eliminant is exactly -2 * z1 * z2^-1 * z3^-2 times g
    assert (coeff, expo) == (-2, (1, -1, -2))


def test_classify_groups_by_swapped_signature():
    sols = solve_bounded(8, 8, 24)
    patterns = classify_solutions(sols)
    for p in patterns:
        assert p.order1 <= p.order2
    sporadic = {(p.order1, p.order2): p.orders3 for p in patterns if p.kind == "sporadic"}
    assert sporadic[(1, 2)] == (8,)
    assert sporadic[(2, 2)] == (4,)


def test_expected_parametric_matches_found():
    found = {t for t in solve_bounded(6, 6, 24) if is_parametric(t)}
    want = expected_parametric(6, 6, 24)
    assert found == want


def test_workers_do_not_change_results():
    a = solve_bounded(6, 6, 24, workers=1)
    b = solve_bounded(6, 6, 24, workers=2)
    assert a == b
