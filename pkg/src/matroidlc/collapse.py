"""Independent-set polynomials, partition counts and the collapse operators.

``G_M`` lives in ``n + 1`` variables with variable 0 the homogenizer.  In
products of ``p`` copies of ``G_M``, copy ``j`` occupies the block of
variables ``j*(n+1) .. j*(n+1)+n`` (homogenizer first).
"""

from __future__ import annotations

import warnings

from .matroid import Matroid, independents_of_size, popcount
from .poly import MultiPoly, embed, partial_derivative, poly_mul, substitute_zero


class ResourceGuardError(RuntimeError):
    """Raised instead of starting a computation that exceeds a size budget."""


DEFAULT_TERM_BOUND = 300_000


def _fk(M: Matroid, k: int) -> MultiPoly:
    n = M.n
    terms = {}
    for s in independents_of_size(M, k):
        terms[tuple((s >> i) & 1 for i in range(n))] = 1
    return MultiPoly(n, terms)


def f_k(M: Matroid, k: int) -> MultiPoly:
    """Sum of ``prod_{i in I} x_i`` over independent ``k``-sets ``I``."""
    if k < 0:
        raise ValueError(f"k must be nonnegative, got {k}")
    if k > M.rank():
        warnings.warn(f"k={k} exceeds the rank {M.rank()} of {M.name}; returning 0", stacklevel=2)
        return MultiPoly(M.n)
    return _fk(M, k)


def g_polynomial(M: Matroid) -> MultiPoly:
    n = M.n
    terms = {}
    for s in M.independent_sets():
        bits = tuple((s >> i) & 1 for i in range(n))
        terms[(n - popcount(s),) + bits] = 1
    return MultiPoly(n + 1, terms)


def pi_tuple(M: Matroid, sizes) -> int:
    """Number of ordered partitions of the ground set into independent blocks.

    Block ``j`` must have exactly ``sizes[j]`` elements; empty blocks are
    allowed and a negative or oversized entry gives 0.  Elements are
    placed one at a time and a branch dies as soon as a block becomes
    dependent.
    """
    sizes = tuple(sizes)
    n = M.n
    if sum(sizes) != n:
        raise ValueError(f"block sizes {sizes} do not sum to the ground set size {n}")
    if any(s < 0 or s > n for s in sizes):
        return 0
    p = len(sizes)
    blocks = [0] * p
    fill = [0] * p
    indep = M.is_independent

    def place(e: int) -> int:
        if e == n:
            return 1
        bit = 1 << e
        total = 0
        for j in range(p):
            if fill[j] < sizes[j]:
                cand = blocks[j] | bit
                if indep(cand):
                    blocks[j] = cand
                    fill[j] += 1
                    total += place(e + 1)
                    fill[j] -= 1
                    blocks[j] ^= bit
        return total

    return place(0)


# -- collapse operators --------------------------------------------------------


def product_of_copies(M: Matroid, p: int, term_bound: int = DEFAULT_TERM_BOUND) -> MultiPoly:
    """``G_M(x_1) * .. * G_M(x_p)`` in ``p * (n + 1)`` variables."""
    n = M.n
    G = g_polynomial(M)
    if len(G) ** p > term_bound:
        raise ResourceGuardError(f"{len(G)}^{p} product terms exceed the bound {term_bound}")
    width = p * (n + 1)
    out = None
    for j in range(p):
        copy = embed(G, width, range(j * (n + 1), (j + 1) * (n + 1)))
        out = copy if out is None else poly_mul(out, copy)
    return out


def apply_collapse(f: MultiPoly, n: int, p: int) -> MultiPoly:
    """Apply ``H_1 .. H_n`` and project onto the ``p`` homogenizers.

    ``H_i`` sums the derivatives in the element-``i`` variables of every
    block and then sets all of them to zero.  For ``p = 2`` this is the
    operator ``S``.
    """
    stride = n + 1
    for i in range(1, n + 1):
        idx = [j * stride + i for j in range(p)]
        acc = MultiPoly(f.nvars)
        for v in idx:
            acc = acc + partial_derivative(f, v)
        for v in idx:
            acc = substitute_zero(acc, v)
        f = acc
    terms = {}
    for e, c in f.terms.items():
        terms[tuple(e[j * stride] for j in range(p))] = c
    return MultiPoly(p, terms)


def collapse_S(M: Matroid, method: str = "pairs") -> MultiPoly:
    """``S(G_M(x) G_M(y))`` as a polynomial in ``(x, y)``.

    ``method="pairs"`` reads the surviving terms off independent
    bipartitions ``(I, E - I)`` directly; ``method="expand"`` forms the
    full ``2n + 2``-variable product and applies ``S_1 .. S_n`` term by
    term.
    """
    if method == "expand":
        return apply_collapse(product_of_copies(M, 2), M.n, 2)
    if method != "pairs":
        raise ValueError(f"unknown method {method!r}")
    n = M.n
    full = M.ground
    terms: dict[tuple[int, int], int] = {}
    for s in M.independent_sets():
        if M.is_independent(full & ~s):
            e = (n - popcount(s), popcount(s))
            terms[e] = terms.get(e, 0) + 1
    return MultiPoly(2, terms)


def collapse_H(M: Matroid, p: int, method: str = "blocks", term_bound: int = DEFAULT_TERM_BOUND) -> MultiPoly:
    """``H(G_M(x_1) .. G_M(x_p))`` as a polynomial in ``p`` variables.

    ``method="blocks"`` enumerates ``p``-tuples of disjoint independent
    sets covering the ground set; ``method="expand"`` multiplies out the
    product (refusing beyond ``term_bound`` terms) and applies ``H``.
    """
    if p < 2:
        raise ValueError(f"need p >= 2, got {p}")
    n = M.n
    if method == "expand":
        return apply_collapse(product_of_copies(M, p, term_bound), n, p)
    if method != "blocks":
        raise ValueError(f"unknown method {method!r}")
    indep_sets = M.independent_sets()
    terms: dict[tuple, int] = {}

    def choose(j: int, remaining: int, sizes: tuple):
        if j == p - 1:
            if M.is_independent(remaining):
                e = tuple(n - s for s in sizes + (popcount(remaining),))
                terms[e] = terms.get(e, 0) + 1
            return
        for s in indep_sets:
            if s & ~remaining == 0:
                choose(j + 1, remaining & ~s, sizes + (popcount(s),))

    choose(0, M.ground, ())
    return MultiPoly(p, terms)


def collapse_coefficient(P: MultiPoly, n: int, sizes) -> int:
    """``[x_1^{n-i_1} .. x_p^{n-i_p}] P`` for block sizes ``i``."""
    return P.terms.get(tuple(n - s for s in sizes), 0)


def restrict_variables(f: MultiPoly, keep: int) -> MultiPoly:
    """Set every variable outside the mask ``keep`` to zero."""
    return MultiPoly(f.nvars, {e: c for e, c in f.terms.items() if all(k == 0 or keep >> i & 1 for i, k in enumerate(e))})


def support_mask(exps) -> int:
    return sum(1 << i for i, k in enumerate(exps) if k)

