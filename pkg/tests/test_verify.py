from fractions import Fraction
from itertools import permutations, product
from math import comb, factorial

import pytest

from conftest import K4, small_matroids
from matroidlc.collapse import (
    ResourceGuardError,
    collapse_coefficient,
    collapse_H,
    collapse_S,
    f_k,
    g_polynomial,
    pi_tuple,
    product_of_copies,
)
from matroidlc.lorentzian import is_lorentzian
from matroidlc.matroid import InvalidParameterError, make_graphic, make_uniform, mask_of, restrict
from matroidlc.poly import MultiPoly, coefficient, evaluate, monomial
from matroidlc.verify import (
    EXPECTED_FAIL,
    FAIL,
    HOLDS,
    NOT_APPLICABLE,
    PASS,
    closed_form,
    copy_multiplicity,
    gaojie_factor,
    hessian_closed_form_check,
    partition_sequence,
    ultra_log_concave_failure,
    verify_dowling,
    verify_gaojie,
    verify_highd,
    verify_prop1_minors,
    verify_strong_partition,
    verify_ultra,
    verify_wyx2_coefficient,
    verify_zhao,
)

SMALL = small_matroids()
U24 = make_uniform(2, 4)


def m(*items):
    return mask_of(items)


def brute_pi(M, sizes):
    """Ordered partitions by assigning every element a block label."""
    count = 0
    for labels in product(range(len(sizes)), repeat=M.n):
        blocks = [mask_of(e for e in range(M.n) if labels[e] == j) for j in range(len(sizes))]
        if all(bin(b).count("1") == s and M.is_independent(b) for b, s in zip(blocks, sizes)):
            count += 1
    return count


# -- polynomials of a matroid -------------------------------------------------


def test_f_k_examples():
    assert f_k(U24, 0) == MultiPoly(4, {(0, 0, 0, 0): 1})
    assert f_k(U24, 1) == sum((monomial(tuple(int(i == j) for i in range(4))) for j in range(4)), MultiPoly(4))
    f2 = f_k(U24, 2)
    assert len(f2) == 6 and set(f2.terms.values()) == {1}
    L = make_graphic(2, [(0, 0), (0, 1)])
    assert all(e[0] == 0 for e in f_k(L, 1).support())
    with pytest.raises(ValueError):
        f_k(U24, -1)


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
def test_f_k_counts(M):
    total = 0
    for k in range(M.rank() + 1):
        c = evaluate(f_k(M, k), [1] * M.n)
        assert c == len([s for s in M.independent_sets() if bin(s).count("1") == k])
        total += c
    assert evaluate(g_polynomial(M), [1] * (M.n + 1)) == total


def test_g_polynomial_examples():
    assert g_polynomial(make_uniform(1, 2)) == monomial((2, 0, 0)) + monomial((1, 1, 0)) + monomial((1, 0, 1))
    assert g_polynomial(make_uniform(0, 0)) == MultiPoly(1, {(0,): 1})
    assert evaluate(g_polynomial(U24), [1] * 5) == 11
    assert g_polynomial(U24).degree == 4


# -- collapse operators ---------------------------------------------------------


def test_collapse_s_examples():
    x, y = monomial((1, 0)), monomial((0, 1))
    assert collapse_S(make_uniform(1, 1)) == x + y
    assert coefficient(collapse_S(make_uniform(1, 2)), (1, 1)) == 2
    with pytest.raises(ValueError):
        collapse_S(U24, method="magic")


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
def test_collapse_s_symmetric_and_matches_expand(M):
    S = collapse_S(M)
    assert all(coefficient(S, (b, a)) == c for (a, b), c in S.terms.items())
    if M.n <= 5:
        assert collapse_S(M, method="expand") == S


def test_collapse_h_examples():
    assert collapse_H(make_uniform(1, 1), 2) == monomial((0, 1)) + monomial((1, 0))
    assert collapse_H(U24, 2) == collapse_S(U24)
    H = collapse_H(make_uniform(3, 3), 3)
    assert coefficient(H, (2, 2, 2)) == pi_tuple(make_uniform(3, 3), (1, 1, 1)) == 6
    with pytest.raises(ValueError):
        collapse_H(U24, 1)


@pytest.mark.parametrize("M", [M for M in SMALL if M.n <= 4], ids=lambda M: M.name)
def test_collapse_h_matches_expand(M):
    assert collapse_H(M, 3, method="expand") == collapse_H(M, 3)


def test_expand_guard():
    with pytest.raises(ResourceGuardError):
        product_of_copies(make_uniform(4, 6), 3, term_bound=1000)
    with pytest.raises(ResourceGuardError):
        collapse_H(make_uniform(4, 6), 3, method="expand", term_bound=1000)


# -- partition counts -------------------------------------------------------------


def test_pi_examples():
    assert pi_tuple(make_uniform(1, 2), (1, 1)) == 2
    assert pi_tuple(U24, (2, 2)) == 6
    assert pi_tuple(U24, (1, 3)) == 0
    U44 = make_uniform(4, 4)
    assert pi_tuple(U44, (2, 2)) == 6 and pi_tuple(U44, (1, 3)) == 4
    assert pi_tuple(make_uniform(6, 6), (2, 2, 2)) == 90
    assert pi_tuple(make_uniform(6, 6), (3, 3, 0)) == 20


def test_pi_boundary_entries():
    assert pi_tuple(U24, (-1, 5)) == 0
    assert pi_tuple(U24, (5, -1)) == 0
    assert pi_tuple(make_uniform(2, 2), (0, 2)) == 1
    assert pi_tuple(make_uniform(0, 0), (0, 0)) == 1
    with pytest.raises(ValueError):
        pi_tuple(U24, (1, 1))


@pytest.mark.parametrize("M", [M for M in SMALL if M.n <= 5], ids=lambda M: M.name)
def test_pi_matches_brute_force(M):
    n = M.n
    for i in range(n + 1):
        assert pi_tuple(M, (i, n - i)) == brute_pi(M, (i, n - i))
    for i in range(n + 1):
        for j in range(n + 1 - i):
            sizes = (i, j, n - i - j)
            value = pi_tuple(M, sizes)
            assert value == brute_pi(M, sizes)
            assert all(pi_tuple(M, q) == value for q in set(permutations(sizes)))


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
def test_collapse_coefficients_are_partition_counts(M):
    n = M.n
    S = collapse_S(M)
    for i in range(n + 1):
        assert coefficient(S, (n - i, i)) == pi_tuple(M, (n - i, i))
    H = collapse_H(M, 3)
    for i in range(n + 1):
        for j in range(n + 1 - i):
            assert collapse_coefficient(H, n, (i, j, n - i - j)) == pi_tuple(M, (i, j, n - i - j))


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
def test_partition_sequence_is_ultra_log_concave(M):
    assert ultra_log_concave_failure(partition_sequence(M)) is None


def test_ultra_log_concave_failure():
    assert ultra_log_concave_failure([1, 4, 6]) == 1
    assert ultra_log_concave_failure([1, 2, 1]) is None
    # the binomial row itself is the equality case
    assert ultra_log_concave_failure([comb(5, i) for i in range(6)]) is None
    assert ultra_log_concave_failure([1, 3, 3, 2]) == 2


# -- inequality checks ------------------------------------------------------------


def test_dowling_and_zhao_examples():
    d = verify_dowling(U24)
    assert len(d) == 1 and d[0].verdict == PASS
    z = verify_zhao(U24)
    assert z[0].verdict == PASS and z[0].scale == 2
    assert z[0].tight == {"monomial": [1, 1, 0, 0], "lhs": 2, "rhs": 1}
    assert verify_dowling(make_uniform(1, 3)) == []
    assert verify_zhao(make_uniform(0, 2)) == []


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
def test_zhao_implies_dowling(M):
    z = verify_zhao(M)
    d = verify_dowling(M)
    assert all(c.verdict == PASS for c in z)
    assert all(c.verdict == PASS for c in d)


def test_ultra_counterexample():
    u = verify_ultra(U24)
    assert len(u) == 1 and u[0].verdict == EXPECTED_FAIL
    # general factor at k=1, n=4 is 2 * 4/3; the textbook display uses 9/4, and both fail at x1x2
    assert u[0].scale == Fraction(8, 3)
    assert u[0].witness == {"monomial": [1, 1, 0, 0], "lhs": 2, "rhs": 1}
    # the ultra factor exceeds the exact ratio (k+1)/k on free matroids too
    assert [c.verdict for c in verify_ultra(make_uniform(3, 3))] == [EXPECTED_FAIL, EXPECTED_FAIL]
    assert verify_ultra(make_uniform(1, 4)) == []
    assert all(c.verdict in (EXPECTED_FAIL, HOLDS) for M in SMALL for c in verify_ultra(M))


def test_strong_partition_examples():
    c = verify_strong_partition(U24)
    assert c.verdict == PASS and (c.lhs, c.rhs) == (6, 0)
    c = verify_strong_partition(make_uniform(4, 4))
    assert c.verdict == PASS and c.tight == {"lhs": 6, "rhs": 4, "cleared_lhs": 12, "cleared_rhs": 12}
    loop = make_graphic(2, [(0, 0), (0, 1)])
    c = verify_strong_partition(loop)
    assert c.verdict == PASS and (c.lhs, c.rhs) == (0, 0) and c.tight is None
    assert verify_strong_partition(make_uniform(1, 3)).verdict == NOT_APPLICABLE


def test_gaojie_examples():
    assert gaojie_factor(3, 2) == Fraction(15, 8)
    for M in (U24, make_uniform(4, 4), make_graphic(4, K4)):
        g = verify_gaojie(M, 2)
        s = verify_strong_partition(M)
        assert (g.lhs, g.rhs, g.scale, g.verdict) == (s.lhs, s.rhs, s.scale, s.verdict)
    c = verify_gaojie(make_uniform(6, 6), 3)
    assert c.verdict == PASS and (c.lhs, c.rhs) == (90, 20)
    assert (c.details["cleared_lhs"], c.details["cleared_rhs"]) == (720, 300)
    c = verify_gaojie(make_uniform(2, 6), 3)
    assert c.verdict == PASS and c.lhs == pi_tuple(make_uniform(2, 6), (2, 2, 2)) == 90 and c.rhs == 0
    assert verify_gaojie(make_uniform(2, 3), 3).verdict == NOT_APPLICABLE
    assert verify_gaojie(make_uniform(2, 4), 3).verdict == NOT_APPLICABLE
    with pytest.raises(InvalidParameterError):
        verify_gaojie(U24, 1)


def test_highd_examples():
    M = make_uniform(3, 5)
    h = verify_highd(M, 2, 2)
    z = verify_zhao(M)[1]
    assert (h.verdict, h.scale, h.lhs, h.rhs) == (z.verdict, z.scale, z.lhs, z.rhs)
    assert verify_highd(make_uniform(4, 6), 3, 3).verdict == PASS
    assert verify_highd(make_uniform(4, 6), 3, 2).verdict == NOT_APPLICABLE
    assert verify_highd(M, 2, 1).verdict == NOT_APPLICABLE


def test_prop1_examples():
    checks = verify_prop1_minors(U24, 1)
    assert checks and all(c.verdict == PASS for c in checks)
    k0 = [c for c in checks if c.params["k"] == 0]
    assert k0 and all((c.lhs, c.rhs) == (1, 0) for c in k0)
    names = {c.name for c in checks}
    assert names == {"dowling-minor", "zhao-minor"}
    K = make_graphic(4, K4)
    assert all(c.verdict == PASS for c in verify_prop1_minors(K, 2))
    every = verify_prop1_minors(K, 2, y_mode="all")
    assert len(every) > len(verify_prop1_minors(K, 2)) and all(c.verdict == PASS for c in every)
    with pytest.raises(InvalidParameterError):
        verify_prop1_minors(U24, 0)


def test_prop1_bound_truncates():
    checks = verify_prop1_minors(make_uniform(3, 6), 2, bound=5)
    assert checks[-1].name == "prop1-truncated" and checks[-1].verdict == NOT_APPLICABLE
    assert len(checks) == 11


def test_wyx2_examples():
    M = make_graphic(4, K4)
    X1 = m(0, 1, 2, 5)
    c = verify_wyx2_coefficient(M, 2, 2, (X1, 0))
    assert c.verdict == PASS
    f2 = f_k(M, 2)
    h = [1 if X1 >> e & 1 else 0 for e in range(M.n)]
    assert c.details["profiles"][0]["coefficient"] == coefficient(f2 * f2, h)
    assert c.details["profiles"][0]["pi"] == pi_tuple(restrict(M, X1), (2, 2))
    c = verify_wyx2_coefficient(U24, 2, 2, (m(0, 1), m(2)))
    assert c.verdict == PASS and c.params["k"] == 1
    assert c.details["profiles"][0]["coefficient"] == c.details["profiles"][0]["pi"]
    with pytest.raises(InvalidParameterError):
        verify_wyx2_coefficient(U24, 2, 2, (m(0), m(2)))


def test_wyx2_needs_copy_multiplicity():
    U33 = make_uniform(3, 3)
    X = (m(0), m(1), m(2))
    assert copy_multiplicity(X) == 2
    c = verify_wyx2_coefficient(U33, 3, 2, X)
    assert c.verdict == PASS
    first = c.details["profiles"][0]
    assert (first["coefficient"], first["pi"]) == (3, 6)


def test_wyx2_dependent_last_block():
    M = make_graphic(3, [(0, 1), (0, 1), (1, 2)])
    c = verify_wyx2_coefficient(M, 2, 2, (0, m(0, 1)))
    assert c.verdict in (PASS, NOT_APPLICABLE)
    assert c.details["x_p_independent"] is False


def test_hessian_examples():
    c = hessian_closed_form_check(U24)
    assert c.verdict == PASS
    assert c.lhs == MultiPoly(2, {(1, 1): 24})
    assert c.details["hessian"] == [[0, 24], [24, 0]]
    assert c.details["hyp"] == "vacuous"
    c = hessian_closed_form_check(make_uniform(1, 2))
    assert c.lhs == collapse_S(make_uniform(1, 2)) == closed_form(make_uniform(1, 2))
    assert c.details["hessian"] == [[0, 2], [2, 0]]
    c = hessian_closed_form_check(make_uniform(4, 4))
    assert c.verdict == PASS and c.details["hessian"] == [[24, 24], [24, 24]]
    assert c.details["hyp"] == "pass" and c.details["cross_sq"] == c.details["vv_ww"] == 576
    assert hessian_closed_form_check(make_uniform(1, 3)).verdict == NOT_APPLICABLE


def test_hessian_entries_follow_factorials():
    for M in SMALL:
        if M.n % 2 or M.n == 0:
            continue
        k = M.n // 2
        c = hessian_closed_form_check(M)
        assert c.verdict == PASS
        H = c.details["hessian"]
        assert H[0][1] == factorial(k) ** 2 * pi_tuple(M, (k, k))
        assert H[1][1] == factorial(k - 1) * factorial(k + 1) * pi_tuple(M, (k - 1, k + 1))
        assert is_lorentzian(c.lhs).is_lorentzian or c.lhs.is_zero()


@pytest.mark.parametrize("M", SMALL, ids=lambda M: M.name)
def test_every_check_passes_on_small_matroids(M):
    checks = verify_dowling(M) + verify_zhao(M) + [verify_strong_partition(M), verify_gaojie(M, 2), verify_gaojie(M, 3)]
    checks += [verify_highd(M, 3, l) for l in range(3, M.rank())]
    checks.append(hessian_closed_form_check(M))
    assert not [c for c in checks if c.verdict == FAIL]
