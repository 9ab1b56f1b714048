"""Coefficientwise and partition-count inequality checks on a matroid.

Every check returns :class:`InequalityCheck` records.  Rational factors
are carried as :class:`~fractions.Fraction` and cleared to integers
before comparing, so no verdict depends on floating point.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from math import comb, factorial, prod
from typing import Sequence

from .collapse import _fk, collapse_S, pi_tuple, restrict_variables
from .lorentzian import check_hyp
from .matroid import InvalidParameterError, Matroid, elements, mask_of, masks_of_size, minor, partition_minor, popcount, submasks
from .poly import MultiPoly, coefficient, dominates, partial_derivative, poly_mul

PASS = "pass"
FAIL = "fail"
NOT_APPLICABLE = "not-applicable"
EXPECTED_FAIL = "expected-fail"
HOLDS = "holds"


@dataclass
class InequalityCheck:
    """One inequality instance ``lhs >= scale * rhs``.

    ``witness`` is set exactly when the inequality failed (verdicts
    ``fail`` and ``expected-fail``).  ``tight`` records an equality case.
    """

    name: str
    params: dict
    verdict: str
    lhs: object = None
    rhs: object = None
    scale: Fraction = Fraction(1)
    witness: dict | None = None
    tight: dict | None = None
    note: str = ""
    details: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.verdict == FAIL


def _poly_check(name: str, params: dict, lhs: MultiPoly, rhs: MultiPoly, scale: Fraction) -> InequalityCheck:
    dom = dominates(lhs, rhs, scale)
    witness = tight = None
    if dom.witness is not None:
        e, a, b = dom.witness
        witness = {"monomial": list(e), "lhs": a, "rhs": b}
    if dom.tight is not None:
        e, a, b = dom.tight
        tight = {"monomial": list(e), "lhs": a, "rhs": b}
    return InequalityCheck(name, params, PASS if dom.holds else FAIL, lhs, rhs, Fraction(scale), witness, tight)


def _count_check(name: str, params: dict, lhs: int, rhs: int, scale: Fraction) -> InequalityCheck:
    scale = Fraction(scale)
    left, right = scale.denominator * lhs, scale.numerator * rhs
    check = InequalityCheck(name, params, PASS if left >= right else FAIL, lhs, rhs, scale)
    cmp = {"lhs": lhs, "rhs": rhs, "cleared_lhs": left, "cleared_rhs": right}
    if left < right:
        check.witness = cmp
    elif left == right and right:
        check.tight = cmp
    check.details.update(cmp)
    return check


def _squared_family(M: Matroid, name: str, scale_of) -> list[InequalityCheck]:
    r = M.rank()
    if r < 2:
        return []
    polys = [_fk(M, k) for k in range(r + 1)]
    out = []
    for k in range(1, r):
        lhs = poly_mul(polys[k], polys[k])
        rhs = poly_mul(polys[k - 1], polys[k + 1])
        out.append(_poly_check(name, {"k": k}, lhs, rhs, scale_of(k)))
    return out


def verify_dowling(M: Matroid) -> list[InequalityCheck]:
    """``f_k^2 >= f_{k-1} f_{k+1}`` for ``0 < k < r``."""
    return _squared_family(M, "dowling", lambda k: Fraction(1))


def verify_zhao(M: Matroid) -> list[InequalityCheck]:
    """``k f_k^2 >= (k+1) f_{k-1} f_{k+1}`` for ``0 < k < r``."""
    return _squared_family(M, "zhao", lambda k: Fraction(k + 1, k))


def verify_ultra(M: Matroid) -> list[InequalityCheck]:
    """The ultra form with factor ``(1+1/k)(1+1/(n-k))``, which is false in general.

    Failures are recorded as ``expected-fail`` and successes as ``holds``;
    neither is a violation.
    """
    n = M.n
    checks = _squared_family(M, "ultra", lambda k: Fraction(k + 1, k) * Fraction(n - k + 1, n - k))
    for c in checks:
        c.verdict = EXPECTED_FAIL if c.verdict == FAIL else HOLDS
    return checks


def verify_strong_partition(M: Matroid) -> InequalityCheck:
    """``k pi_{k,k} >= (k+1) pi_{k-1,k+1}`` for a matroid of size ``2k``."""
    n = M.n
    if n % 2 or n == 0:
        return InequalityCheck("strong", {"n": n}, NOT_APPLICABLE, note="needs even size 2k >= 2")
    k = n // 2
    return _count_check("strong", {"k": k}, pi_tuple(M, (k, k)), pi_tuple(M, (k - 1, k + 1)), Fraction(k + 1, k))


def gaojie_factor(p: int, k: int) -> Fraction:
    """``prod_{i=1}^{p-1} (1 + i / ((p-1) k))``."""
    base = (p - 1) * k
    return prod((Fraction(base + i, base) for i in range(1, p)), start=Fraction(1))


def verify_gaojie(M: Matroid, p: int) -> InequalityCheck:
    """``pi_{(k,..,k)} >= factor * pi_{(k+1,..,k+1, k-p+1)}`` for size ``pk``."""
    n = M.n
    if p < 2:
        raise InvalidParameterError(f"need p >= 2, got {p}")
    if n == 0 or n % p:
        return InequalityCheck("gaojie", {"p": p, "n": n}, NOT_APPLICABLE, note="size is not a positive multiple of p")
    k = n // p
    if k < p - 1:
        return InequalityCheck("gaojie", {"p": p, "k": k}, NOT_APPLICABLE, note="needs k >= p - 1")
    even = (k,) * p
    shifted = (k + 1,) * (p - 1) + (k - (p - 1),)
    check = _count_check("gaojie", {"p": p, "k": k}, pi_tuple(M, even), pi_tuple(M, shifted), gaojie_factor(p, k))
    check.details["profiles"] = [list(even), list(shifted)]
    return check


def verify_highd(M: Matroid, p: int, l: int) -> InequalityCheck:
    """``f_l^p >= factor * f_{l+1}^{p-1} f_{l-p+1}`` for ``p >= 2``, ``p-1 < l < r``."""
    r = M.rank()
    params = {"p": p, "l": l}
    if p < 2 or not (p - 1 < l < r):
        return InequalityCheck("highd", params, NOT_APPLICABLE, note=f"needs p >= 2 and {p - 1} < l < {r}")
    fl = _fk(M, l)
    fup = _fk(M, l + 1)
    lhs = fl
    for _ in range(p - 1):
        lhs = poly_mul(lhs, fl)
    rhs = _fk(M, l - p + 1)
    for _ in range(p - 1):
        rhs = poly_mul(rhs, fup)
    return _poly_check("highd", params, lhs, rhs, gaojie_factor(p, l))


def _y_candidates(M: Matroid, avail: int, depth: int, mode: str):
    if mode == "independent":
        for c in combinations(elements(avail), depth):
            y = mask_of(c)
            if M.is_independent(y):
                yield y
    elif mode == "all":
        yield from (y for y in submasks(avail) if M.rank(y) == depth)
    else:
        raise ValueError(f"unknown Y mode {mode!r}")


def verify_prop1_minors(M: Matroid, l: int, bound: int = 100_000, y_mode: str = "independent") -> list[InequalityCheck]:
    """Partition inequalities on every minor of size ``2k`` and depth ``l - k``.

    For each ``k <= l``, ``X`` runs over ``2k``-subsets and ``Y`` over
    subsets of the complement with rank ``l - k`` (independent ones only
    by default, every such ``Y`` with ``y_mode="all"``).  Each minor ``N``
    yields a ``dowling-minor`` check ``pi_{k,k} >= pi_{k-1,k+1}`` and a
    ``zhao-minor`` check with factor ``1 + 1/l``.  After ``bound`` minors
    enumeration stops and the last record carries a truncation note.
    """
    if l < 1:
        raise InvalidParameterError(f"need l >= 1, got {l}")
    out: list[InequalityCheck] = []
    seen = 0
    full = M.ground
    for k in range(l + 1):
        for X in masks_of_size(M.n, 2 * k):
            for Y in _y_candidates(M, full & ~X, l - k, y_mode):
                if seen >= bound:
                    out.append(InequalityCheck("prop1-truncated", {"l": l, "bound": bound}, NOT_APPLICABLE, note="minor bound reached"))
                    return out
                seen += 1
                N = minor(M, X, Y).matroid
                a = pi_tuple(N, (k, k))
                b = pi_tuple(N, (k - 1, k + 1))
                params = {"l": l, "k": k, "X": elements(X), "Y": elements(Y)}
                out.append(_count_check("dowling-minor", params, a, b, Fraction(1)))
                out.append(_count_check("zhao-minor", params, a, b, Fraction(l + 1, l)))
    return out


def copy_multiplicity(X: Sequence[int]) -> int:
    """``prod_{j < p} (j!)^{|X_j|}`` with blocks numbered from 1.

    Each element of ``X_j`` has ``j`` mutually parallel copies in the
    partition minor, and permuting them among their blocks gives
    distinct partitions for the same tuple of independent sets.
    """
    return prod(factorial(j) ** popcount(block) for j, block in enumerate(X[:-1], start=1))


def verify_wyx2_coefficient(M: Matroid, p: int, l: int, X: Sequence[int]) -> InequalityCheck:
    """Coefficient of ``h`` in ``f_{l+n_1} .. f_{l+n_p}`` against partition counts.

    ``h`` has exponent ``j`` on each element of ``X_j`` (blocks numbered
    from 1).  With ``k = l - |X_p|`` and ``N`` the partition minor, the
    coefficient times :func:`copy_multiplicity` must equal
    ``pi_{(k+n_1, .., k+n_p)}(N)``.  This is checked for the all-equal
    profile and the shifted profile (``(k-1, k+1)`` when ``p = 2``).  If
    ``X_p`` is dependent the coefficient vanishes and a mismatch is
    reported as not applicable.
    """
    X = tuple(X)
    if len(X) != p or p < 2:
        raise InvalidParameterError(f"need p >= 2 blocks, got {len(X)} for p={p}")
    weight = sum(j * popcount(block) for j, block in enumerate(X, start=1))
    if weight != p * l:
        raise InvalidParameterError(f"sum_j j|X_j| = {weight}, expected p*l = {p * l}")
    desc = partition_minor(M, X)
    N = desc.matroid
    k = l - popcount(X[-1])
    h = [0] * M.n
    for j, block in enumerate(X, start=1):
        for e in elements(block):
            h[e] = j
    keep = sum(1 << e for e in range(M.n) if h[e])
    mult = copy_multiplicity(X)
    if p == 2:
        shifts = [(0, 0), (-1, 1)]
    else:
        shifts = [(0,) * p, (1,) * (p - 1) + (-(p - 1),)]
    profiles = []
    ok = True
    for shift in shifts:
        indices = [l + s for s in shift]
        if any(i < 0 for i in indices):
            coeff = 0
        else:
            prodpoly = None
            for i in indices:
                fi = restrict_variables(_fk(M, i), keep)
                prodpoly = fi if prodpoly is None else poly_mul(prodpoly, fi)
            coeff = coefficient(prodpoly, h)
        sizes = tuple(k + s for s in shift)
        count = pi_tuple(N, sizes) if sum(sizes) == N.n else 0
        profiles.append({"indices": indices, "sizes": list(sizes), "coefficient": coeff, "pi": count})
        ok = ok and coeff * mult == count
    params = {"p": p, "l": l, "k": k, "X": [elements(b) for b in X]}
    check = InequalityCheck("wyx2-coefficient", params, PASS if ok else FAIL)
    check.details = {"profiles": profiles, "multiplicity": mult, "depth": desc.depth, "x_p_independent": desc.y_independent}
    if not ok:
        if not desc.y_independent:
            check.verdict = NOT_APPLICABLE
            check.note = "X_p is dependent in M"
        else:
            check.witness = {"profiles": profiles}
    return check


def closed_form(M: Matroid) -> MultiPoly:
    """The expected ``d_x^{k-1} d_y^{k-1} S(G G)`` from partition counts."""
    k = M.n // 2
    lo = pi_tuple(M, (k - 1, k + 1))
    hi = pi_tuple(M, (k + 1, k - 1))
    half = factorial(k + 1) * factorial(k - 1) // 2
    return MultiPoly(2, {(2, 0): half * hi, (1, 1): factorial(k) ** 2 * pi_tuple(M, (k, k)), (0, 2): half * lo})


def hessian_closed_form_check(M: Matroid) -> InequalityCheck:
    """Compare the derivative of ``S(G G)`` with its closed form and test (Hyp).

    The Hessian of the computed quadratic is taken from the derivative
    itself, then compared entrywise with ``(k-1)!(k+1)! pi_{k-1,k+1}``
    (diagonal) and ``k!k! pi_{k,k}`` (off-diagonal).
    """
    n = M.n
    if n % 2 or n == 0:
        return InequalityCheck("hessian", {"n": n}, NOT_APPLICABLE, note="needs even size 2k >= 2")
    k = n // 2
    f = collapse_S(M)
    for _ in range(k - 1):
        f = partial_derivative(f, 0)
        f = partial_derivative(f, 1)
    expected = closed_form(M)
    H = [[coefficient(partial_derivative(partial_derivative(f, i), j), (0, 0)) for j in range(2)] for i in range(2)]
    diag = factorial(k - 1) * factorial(k + 1)
    expected_H = [
        [diag * pi_tuple(M, (k + 1, k - 1)), factorial(k) ** 2 * pi_tuple(M, (k, k))],
        [factorial(k) ** 2 * pi_tuple(M, (k, k)), diag * pi_tuple(M, (k - 1, k + 1))],
    ]
    hyp = check_hyp(H, (1, 0), (0, 1))
    ok = f == expected and H == expected_H and hyp.ok
    check = InequalityCheck("hessian", {"k": k}, PASS if ok else FAIL, lhs=f, rhs=expected)
    check.details = {
        "derivative": {f"{e[0]},{e[1]}": c for e, c in f.terms.items()},
        "hessian": H,
        "expected_hessian": expected_H,
        "hyp": hyp.status,
        "cross_sq": int(hyp.cross_sq),
        "vv_ww": int(hyp.vv * hyp.ww),
    }
    if not ok:
        check.witness = {"hessian": H, "expected_hessian": expected_H, "hyp": hyp.status}
    return check


def ultra_log_concave_failure(seq: Sequence[int]) -> int | None:
    """First ``i`` where ``a_i / C(n, i)`` breaks log-concavity, else ``None``.

    ``n = len(seq) - 1``; the comparison is cleared of binomials exactly.
    """
    n = len(seq) - 1
    for i in range(1, n):
        left = seq[i] ** 2 * comb(n, i - 1) * comb(n, i + 1)
        right = seq[i - 1] * seq[i + 1] * comb(n, i) ** 2
        if left < right:
            return i
    return None


def partition_sequence(M: Matroid) -> list[int]:
    """``[pi_{i, n-i}(M) for i in 0..n]``."""
    return [pi_tuple(M, (i, M.n - i)) for i in range(M.n + 1)]
