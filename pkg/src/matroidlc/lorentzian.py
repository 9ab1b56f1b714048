"""Lorentzian checks: M-convex supports, exact inertia, and (Hyp).

Symmetric matrices are plain nested sequences of ints or Fractions.  All
verdicts are exact; floating point appears only in the sampled
log-concavity spot check.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple, Sequence

from .poly import ExponentVector, MultiPoly, evaluate, evaluate_float, glex_key, partial_derivative

SymMatrix = Sequence[Sequence]


class InvalidInputError(ValueError):
    pass


class Inertia(NamedTuple):
    pos: int
    neg: int
    zero: int


# -- M-convexity ----------------------------------------------------------------


@dataclass(frozen=True)
class MConvexity:
    holds: bool
    witness: tuple[ExponentVector, ExponentVector, int] | None = None


def is_m_convex(support) -> MConvexity:
    """Brute-force exchange test over all ordered pairs of the support.

    The witness ``(alpha, beta, i)`` is the first triple (graded-lex order
    on ``alpha`` then ``beta``, ascending ``i``) with ``alpha_i > beta_i``
    for which no exchange ``alpha - e_i + e_j`` stays in the set.
    """
    vecs = sorted({tuple(v) for v in support}, key=glex_key, reverse=True)
    if not vecs:
        return MConvexity(True)
    if len({sum(v) for v in vecs}) != 1 or len({len(v) for v in vecs}) != 1:
        raise InvalidInputError("support vectors must share length and total degree")
    members = set(vecs)
    n = len(vecs[0])
    for a in vecs:
        for b in vecs:
            if a == b:
                continue
            for i in range(n):
                if a[i] <= b[i]:
                    continue
                ok = False
                for j in range(n):
                    if a[j] < b[j]:
                        c = list(a)
                        c[i] -= 1
                        c[j] += 1
                        if tuple(c) in members:
                            ok = True
                            break
                if not ok:
                    return MConvexity(False, (a, b, i))
    return MConvexity(True)


# -- inertia --------------------------------------------------------------------


def _check_symmetric(A: SymMatrix) -> list[list[Fraction]]:
    n = len(A)
    rows = [[Fraction(x) for x in row] for row in A]
    for i, row in enumerate(rows):
        if len(row) != n:
            raise InvalidInputError(f"row {i} has length {len(row)}, expected {n}")
    for i in range(n):
        for j in range(i + 1, n):
            if rows[i][j] != rows[j][i]:
                raise InvalidInputError(f"matrix is not symmetric at ({i}, {j})")
    return rows


def _integer_matrix(rows: list[list[Fraction]]) -> list[list[int]]:
    den = 1
    for row in rows:
        for x in row:
            den = den * x.denominator // math.gcd(den, x.denominator)
    return [[int(x * den) for x in row] for row in rows]


def charpoly(A: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients ``c_0..c_n`` of ``det(t I - A)`` for an integer matrix.

    Faddeev-LeVerrier; every division is exact over the integers.
    """
    n = len(A)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    Mk = [[0] * n for _ in range(n)]
    for k in range(1, n + 1):
        c_prev = coeffs[n - k + 1]
        # M_k = A M_{k-1} + c_{n-k+1} I
        Mk = [
            [sum(A[i][t] * Mk[t][j] for t in range(n)) + (c_prev if i == j else 0) for j in range(n)]
            for i in range(n)
        ]
        tr = sum(A[i][t] * Mk[t][i] for i in range(n) for t in range(n))
        q, r = divmod(-tr, k)
        assert r == 0
        coeffs[n - k] = q
    return coeffs


def _sign_changes(seq: Sequence[int]) -> int:
    signs = [x > 0 for x in seq if x != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia_from_charpoly(coeffs: Sequence[int]) -> Inertia:
    """Root sign counts of a real-rooted polynomial via Descartes' rule.

    Descartes' bound is exact only when every root is real, which holds
    for characteristic polynomials of symmetric matrices.  A mismatch in
    the total count means the precondition failed and raises.
    """
    n = len(coeffs) - 1
    zero = next(j for j, c in enumerate(coeffs) if c != 0)
    trimmed = list(coeffs[zero:])
    pos = _sign_changes(trimmed)
    neg = _sign_changes([c if j % 2 == 0 else -c for j, c in enumerate(trimmed)])
    if pos + neg + zero != n:
        raise InvalidInputError("polynomial is not real-rooted; sign counts do not add up")
    return Inertia(pos, neg, zero)


def inertia(A: SymMatrix) -> Inertia:
    rows = _check_symmetric(A)
    if not rows:
        return Inertia(0, 0, 0)
    return inertia_from_charpoly(charpoly(_integer_matrix(rows)))


def inertia_elimination(A: SymMatrix) -> Inertia:
    """Inertia by symmetric congruence elimination (Sylvester's law).

    When every remaining diagonal entry vanishes but an off-diagonal
    ``a_kj`` does not, row/column ``j`` is added to ``k`` so the new pivot
    is ``2 a_kj``.
    """
    a = _check_symmetric(A)
    n = len(a)
    pos = neg = 0
    live = list(range(n))
    while live:
        piv = next((i for i in live if a[i][i] != 0), None)
        if piv is None:
            pair = next(((i, j) for i in live for j in live if i != j and a[i][j] != 0), None)
            if pair is None:
                break
            k, j = pair
            for t in range(n):
                a[k][t] += a[j][t]
            for t in range(n):
                a[t][k] += a[t][j]
            piv = k
        d = a[piv][piv]
        if d > 0:
            pos += 1
        else:
            neg += 1
        live.remove(piv)
        for i in live:
            if a[i][piv]:
                f = a[i][piv] / d
                for j in live:
                    a[i][j] -= f * a[piv][j]
        for i in live:
            a[i][piv] = a[piv][i] = Fraction(0)
    return Inertia(pos, neg, n - pos - neg)


# -- Lorentzian polynomials -----------------------------------------------------


@dataclass(frozen=True)
class LorentzVerdict:
    """``failure`` is ``(kind, witness)`` when the polynomial is not Lorentzian.

    kinds: ``not-homogeneous``, ``negative-coefficient``,
    ``support-not-mconvex``, ``hessian-positive-count``.
    """

    is_lorentzian: bool
    failure: tuple[str, object] | None = None
    hessians_checked: int = 0


def derivative_hessians(f: MultiPoly):
    """Yield ``(alpha, H)`` for every ``|alpha| = d - 2`` with ``d^alpha f != 0``.

    ``H[i][j] = [x^g] f * g!`` where ``g = alpha + e_i + e_j``; rows and
    columns of variables absent from ``d^alpha f`` are dropped (they only
    add zero eigenvalues).  Order is graded-lex descending in ``alpha``.
    """
    d = f.degree
    n = f.nvars
    fact = [math.factorial(k) for k in range((d or 0) + 1)]
    alphas = set()
    for g in f.support():
        for i in range(n):
            if g[i] == 0:
                continue
            for j in range(i, n):
                if (g[j] < 2) if i == j else (g[j] == 0):
                    continue
                a = list(g)
                a[i] -= 1
                a[j] -= 1
                alphas.add(tuple(a))
    terms = f.terms
    for alpha in sorted(alphas, key=glex_key, reverse=True):
        H = [[0] * n for _ in range(n)]
        for i in range(n):
            for j in range(i, n):
                g = list(alpha)
                g[i] += 1
                g[j] += 1
                c = terms.get(tuple(g), 0)
                if c:
                    w = c
                    for k in g:
                        w *= fact[k]
                    H[i][j] = H[j][i] = w
        active = [i for i in range(n) if any(H[i])]
        yield alpha, [[H[i][j] for j in active] for i in active]


def is_lorentzian(f: MultiPoly) -> LorentzVerdict:
    if not f.is_homogeneous():
        degs = sorted({sum(e) for e in f.support()})
        return LorentzVerdict(False, ("not-homogeneous", degs))
    for e, c in f.terms.items():
        if c < 0:
            return LorentzVerdict(False, ("negative-coefficient", e))
    if f.is_zero():
        return LorentzVerdict(True)
    mc = is_m_convex(f.support())
    if not mc.holds:
        return LorentzVerdict(False, ("support-not-mconvex", mc.witness))
    d = f.degree
    if d < 2:
        return LorentzVerdict(True)
    checked = 0
    for alpha, H in derivative_hessians(f):
        checked += 1
        inert = inertia_from_charpoly(charpoly(H)) if H else Inertia(0, 0, 0)
        if inert.pos > 1:
            return LorentzVerdict(False, ("hessian-positive-count", (alpha, inert)), checked)
    return LorentzVerdict(True, None, checked)


def directional_derivative(f: MultiPoly, v: Sequence) -> tuple[MultiPoly, Fraction]:
    """``D_v f = sum v_i d_i f`` as an integer polynomial and a scale.

    Returns ``(g, s)`` with ``D_v f == s * g``; ``s`` is ``1/L`` where ``L``
    is the common denominator of ``v``.
    """
    if len(v) != f.nvars:
        raise InvalidInputError(f"direction has {len(v)} entries, polynomial has {f.nvars} variables")
    v = [Fraction(x) for x in v]
    if any(x < 0 for x in v):
        raise InvalidInputError("direction must be nonnegative")
    den = 1
    for x in v:
        den = den * x.denominator // math.gcd(den, x.denominator)
    out = MultiPoly(f.nvars)
    for i, x in enumerate(v):
        if x:
            out = out + partial_derivative(f, i) * int(x * den)
    return out, Fraction(1, den)


def hessian_at(f: MultiPoly, point: Sequence) -> list[list[Fraction]]:
    n = f.nvars
    first = [partial_derivative(f, i) for i in range(n)]
    H = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        for j in range(i, n):
            H[i][j] = H[j][i] = evaluate(partial_derivative(first[i], j), point)
    return H


def _dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def _apply(A, v):
    return [_dot(row, v) for row in A]


@dataclass(frozen=True)
class HypVerdict:
    """``status`` is ``pass``, ``fail`` or ``vacuous`` (when ``<w, A w> <= 0``)."""

    status: str
    cross_sq: Fraction
    vv: Fraction
    ww: Fraction

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def check_hyp(A: SymMatrix, v: Sequence, w: Sequence) -> HypVerdict:
    n = len(A)
    if len(v) != n or len(w) != n:
        raise InvalidInputError(f"vectors must have length {n}")
    A = [[Fraction(x) for x in row] for row in A]
    v = [Fraction(x) for x in v]
    w = [Fraction(x) for x in w]
    Aw = _apply(A, w)
    cross = _dot(v, Aw)
    vv = _dot(v, _apply(A, v))
    ww = _dot(w, Aw)
    if ww <= 0:
        return HypVerdict("vacuous", cross * cross, vv, ww)
    return HypVerdict("pass" if cross * cross >= vv * ww else "fail", cross * cross, vv, ww)


def _rand_rational(rng: random.Random, lo: int, hi: int) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, 9))


def sample_hyp(f: MultiPoly, seed: int = 0, count: int = 32):
    """Check (Hyp) for the Hessian of ``f`` at ``count`` positive rational points.

    For each point a random ``v`` is drawn and ``w`` is redrawn until
    ``<w, H w> > 0`` (up to 20 tries; the basis vectors are tried as a
    fallback).  Returns ``(all_ok, failures, checked)`` where ``failures``
    lists ``(point, v, w)``.
    """
    rng = random.Random(seed)
    n = f.nvars
    failures = []
    checked = 0
    for _ in range(count):
        point = [_rand_rational(rng, 1, 9) for _ in range(n)]
        H = hessian_at(f, point)
        v = [_rand_rational(rng, -9, 9) for _ in range(n)]
        candidates = [[_rand_rational(rng, -9, 9) for _ in range(n)] for _ in range(20)]
        candidates += [[int(i == j) for j in range(n)] for i in range(n)]
        for w in candidates:
            verdict = check_hyp(H, v, w)
            if verdict.status != "vacuous":
                checked += 1
                if verdict.status == "fail":
                    failures.append((point, v, w))
                break
    return not failures, failures, checked


def log_concavity_spot_check(f: MultiPoly, seed: int = 0, count: int = 32, eps: float = 1e-9):
    """Sampled check that ``log f`` is concave on the positive orthant.

    Floating point; returns the list of violating ``(a, b, t)`` samples.
    """
    rng = random.Random(seed)
    n = f.nvars
    bad = []
    for _ in range(count):
        a = [rng.uniform(0.1, 5.0) for _ in range(n)]
        b = [rng.uniform(0.1, 5.0) for _ in range(n)]
        t = rng.uniform(0.05, 0.95)
        m = [t * x + (1 - t) * y for x, y in zip(a, b)]
        fa, fb, fm = evaluate_float(f, a), evaluate_float(f, b), evaluate_float(f, m)
        if fa <= 0 or fb <= 0:
            continue
        if math.log(fm) < t * math.log(fa) + (1 - t) * math.log(fb) - eps:
            bad.append((a, b, t))
    return bad
