"""Matroids on ground sets ``0..n-1`` given by an independence oracle.

Subsets are encoded as Python ints used as bitmasks (bit ``i`` set means
element ``i`` belongs to the subset).  Every constructor below returns a
:class:`Matroid`; derived matroids (dual, minors, parallel extensions)
re-index their ground set and record an ``index_map`` back to the parent.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

MAX_GROUND_SET = 24


class InvalidParameterError(ValueError):
    pass


class AxiomViolationError(ValueError):
    """Raised when a set family fails one of the matroid axioms.

    ``axiom`` is one of ``"empty"``, ``"hereditary"`` or ``"exchange"``;
    ``witness`` is the offending tuple of masks (``(A, A')`` for the
    hereditary axiom, ``(A1, A2)`` for exchange).
    """

    def __init__(self, axiom: str, witness: tuple, message: str):
        super().__init__(message)
        self.axiom = axiom
        self.witness = witness


def popcount(mask: int) -> int:
    return bin(mask).count("1")


def elements(mask: int) -> list[int]:
    """Elements of ``mask`` in ascending order."""
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(items: Iterable[int]) -> int:
    m = 0
    for i in items:
        m |= 1 << i
    return m


def submasks(mask: int):
    """All submasks of ``mask``, in ascending numeric order."""
    subs = []
    s = mask
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & mask
    return reversed(subs)


def masks_of_size(n: int, k: int) -> list[int]:
    """All ``k``-subsets of ``range(n)`` as masks, ascending."""
    if k < 0 or k > n:
        return []
    return sorted(mask_of(c) for c in combinations(range(n), k))


class Matroid:
    """An immutable matroid on ``0..n-1``.

    ``oracle`` must be a pure predicate on masks.  Results of ``oracle``
    and of :meth:`rank` are memoized per instance; the cache writes are
    idempotent so concurrent readers can at worst recompute a value.
    """

    __slots__ = ("n", "kind", "name", "index_map", "_oracle", "_indep", "_rank", "_full_rank")

    def __init__(
        self,
        n: int,
        oracle: Callable[[int], bool],
        kind: str = "explicit",
        name: str | None = None,
        index_map: Sequence[Hashable] | None = None,
    ):
        if n < 0 or n > MAX_GROUND_SET:
            raise InvalidParameterError(f"ground set size {n} outside 0..{MAX_GROUND_SET}")
        self.n = n
        self.kind = kind
        self.name = name or f"{kind}[{n}]"
        self.index_map = tuple(index_map) if index_map is not None else tuple(range(n))
        self._oracle = oracle
        self._indep: dict[int, bool] = {}
        self._rank: dict[int, int] = {}
        self._full_rank: int | None = None

    def __repr__(self):
        return f"Matroid({self.name}, n={self.n}, rank={self.rank()})"

    @property
    def ground(self) -> int:
        return (1 << self.n) - 1

    def is_independent(self, mask: int) -> bool:
        try:
            return self._indep[mask]
        except KeyError:
            pass
        if mask == 0:
            value = True
        else:
            value = bool(self._oracle(mask))
        self._indep[mask] = value
        return value

    def rank(self, mask: int | None = None) -> int:
        """Greedy rank of ``mask`` (the whole ground set by default)."""
        if mask is None:
            if self._full_rank is None:
                self._full_rank = self.rank(self.ground)
            return self._full_rank
        try:
            return self._rank[mask]
        except KeyError:
            pass
        basis = 0
        size = 0
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            if self.is_independent(basis | low):
                basis |= low
                size += 1
        self._rank[mask] = size
        return size

    def independent_sets(self) -> list[int]:
        """All independent sets as masks, in ascending mask order."""
        return [s for s in range(1 << self.n) if self.is_independent(s)]

    def bases(self) -> list[int]:
        r = self.rank()
        return [s for s in masks_of_size(self.n, r) if self.is_independent(s)]

    def loops(self) -> list[int]:
        return [i for i in range(self.n) if not self.is_independent(1 << i)]


# -- constructors -------------------------------------------------------------


def make_uniform(r: int, n: int) -> Matroid:
    if r < 0 or n < 0 or r > n:
        raise InvalidParameterError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    return Matroid(n, lambda s: popcount(s) <= r, kind="uniform", name=f"U({r},{n})")


def _find(parent: list[int], a: int) -> int:
    while parent[a] != a:
        parent[a] = parent[parent[a]]
        a = parent[a]
    return a


def make_graphic(vertex_count: int, edges: Sequence[Sequence[int]]) -> Matroid:
    """Cycle matroid of a multigraph; element ``i`` is ``edges[i]``.

    A subset is independent iff its edges form a forest.  Self-loops are
    always dependent, parallel edges form 2-circuits.
    """
    edge_list = [tuple(e) for e in edges]
    for idx, e in enumerate(edge_list):
        if len(e) != 2:
            raise InvalidParameterError(f"edge {idx} is not a vertex pair: {e!r}")
        u, v = e
        if not (0 <= u < vertex_count and 0 <= v < vertex_count):
            raise InvalidParameterError(f"edge {idx} = {e!r} has a vertex outside 0..{vertex_count - 1}")

    def forest(mask: int) -> bool:
        parent = list(range(vertex_count))
        for i in elements(mask):
            u, v = edge_list[i]
            ru, rv = _find(parent, u), _find(parent, v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True

    name = "graphic(" + ",".join(f"{u}{v}" for u, v in edge_list) + ")"
    return Matroid(len(edge_list), forest, kind="graphic", name=name)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def gf_rank(vectors: Sequence[Sequence[int]], p: int) -> int:
    """Rank over GF(p) of a list of equal-length vectors."""
    rows = [[x % p for x in v] for v in vectors]
    rank = 0
    width = len(rows[0]) if rows else 0
    for col in range(width):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][col], p - 2, p)
        prow = [(x * inv) % p for x in rows[rank]]
        rows[rank] = prow
        for r in range(len(rows)):
            if r != rank and rows[r][col]:
                c = rows[r][col]
                rows[r] = [(a - c * b) % p for a, b in zip(rows[r], prow)]
        rank += 1
    return rank


def make_linear(p: int, matrix: Sequence[Sequence[int]]) -> Matroid:
    """Column matroid of ``matrix`` (given as rows) over GF(p)."""
    if not is_prime(p):
        raise InvalidParameterError(f"{p} is not prime")
    rows = [list(r) for r in matrix]
    width = len(rows[0]) if rows else 0
    for i, row in enumerate(rows):
        if len(row) != width:
            raise InvalidParameterError(f"row {i} has length {len(row)}, expected {width}")
        for x in row:
            if not (0 <= x < p):
                raise InvalidParameterError(f"entry {x} in row {i} outside [0, {p})")
    columns = [[rows[r][c] for r in range(len(rows))] for c in range(width)]

    def independent(mask: int) -> bool:
        chosen = [columns[i] for i in elements(mask)]
        return gf_rank(chosen, p) == len(chosen)

    return Matroid(width, independent, kind="linear", name=f"GF({p})[{len(rows)}x{width}]")


def check_axioms(n: int, is_indep: Callable[[int], bool], family: Iterable[int] | None = None):
    """Brute-force check of the three independence axioms.

    Returns ``None`` when all hold, otherwise ``(axiom, witness)``.  With
    ``family`` given, only those masks are treated as independent sets to
    enumerate (``is_indep`` is still the membership test).
    """
    indep = sorted(family) if family is not None else [s for s in range(1 << n) if is_indep(s)]
    if not is_indep(0):
        return ("empty", ())
    for a in indep:
        # removals from the highest element down give A' in ascending mask order
        for e in reversed(elements(a)):
            sub = a & ~(1 << e)
            if not is_indep(sub):
                return ("hereditary", (a, sub))
    by_size: dict[int, list[int]] = {}
    for a in indep:
        by_size.setdefault(popcount(a), []).append(a)
    for a1 in indep:
        c1 = popcount(a1)
        for a2 in indep:
            if popcount(a2) <= c1:
                continue
            diff = a2 & ~a1
            if not any(is_indep(a1 | (1 << e)) for e in elements(diff)):
                return ("exchange", (a1, a2))
    return None


def make_explicit(n: int, independents: Iterable[int], validate: bool = True) -> Matroid:
    family = frozenset(independents)
    if n < 0 or n > MAX_GROUND_SET:
        raise InvalidParameterError(f"ground set size {n} outside 0..{MAX_GROUND_SET}")
    for s in family:
        if s < 0 or s >> n:
            raise InvalidParameterError(f"mask {s} is not a subset of a {n}-element ground set")
    if validate:
        bad = check_axioms(n, family.__contains__, family)
        if bad is not None:
            axiom, witness = bad
            shown = tuple(elements(w) for w in witness)
            raise AxiomViolationError(axiom, witness, f"{axiom} axiom fails, witness {shown}")
    return Matroid(n, family.__contains__, kind="explicit", name=f"explicit[{n}]")


def rank(M: Matroid, S: int) -> int:
    return M.rank(S)


def independents_of_size(M: Matroid, k: int) -> list[int]:
    return [s for s in masks_of_size(M.n, k) if M.is_independent(s)]


# -- derived matroids ---------------------------------------------------------


def dual(M: Matroid) -> Matroid:
    full = M.ground
    r = M.rank()
    return Matroid(
        M.n,
        lambda s: M.rank(full & ~s) == r,
        kind="derived",
        name=f"dual({M.name})",
    )


def _reindex(M: Matroid, keep: int) -> tuple[list[int], Callable[[int], int]]:
    """Kept elements (ascending) and a map from new masks to parent masks."""
    kept = elements(keep)

    def lift(mask: int) -> int:
        out = 0
        for new, old in enumerate(kept):
            if mask >> new & 1:
                out |= 1 << old
        return out

    return kept, lift


def delete(M: Matroid, T: int) -> Matroid:
    """``M \\ T``; element ``i`` of the result is ``index_map[i]`` of ``M``."""
    T &= M.ground
    if T == 0:
        return M
    kept, lift = _reindex(M, M.ground & ~T)
    return Matroid(
        len(kept),
        lambda s: M.is_independent(lift(s)),
        kind="derived",
        name=f"{M.name}\\{elements(T)}",
        index_map=kept,
    )


def restrict(M: Matroid, T: int) -> Matroid:
    return delete(M, M.ground & ~T)


def contract(M: Matroid, T: int) -> Matroid:
    """``M / T`` via ``r(S | T) - r(T) == |S|``."""
    T &= M.ground
    if T == 0:
        return M
    kept, lift = _reindex(M, M.ground & ~T)
    rt = M.rank(T)
    return Matroid(
        len(kept),
        lambda s: M.rank(lift(s) | T) - rt == popcount(s),
        kind="derived",
        name=f"{M.name}/{elements(T)}",
        index_map=kept,
    )


def contract_via_dual(M: Matroid, T: int) -> Matroid:
    """``(M* \\ T)*``, the textbook definition of contraction."""
    return dual(delete(dual(M), T))


@dataclass(frozen=True)
class MinorDescriptor:
    """A minor ``M(X | Y) / Y`` together with its size and depth.

    For partition minors ``parts`` holds the blocks ``X_1..X_p`` (masks in
    the base) and ``y_set`` is ``X_p``.
    """

    matroid: Matroid
    base: Matroid
    x_set: int
    y_set: int
    size: int
    depth: int
    parts: tuple[int, ...] = ()

    @property
    def y_independent(self) -> bool:
        return self.base.is_independent(self.y_set)


def minor(M: Matroid, X: int, Y: int) -> MinorDescriptor:
    if X & Y:
        raise InvalidParameterError(f"X and Y overlap in {elements(X & Y)}")
    restricted = restrict(M, X | Y)
    # positions of Y inside the restriction
    kept = elements(X | Y)
    y_local = mask_of(i for i, e in enumerate(kept) if Y >> e & 1)
    N = contract(restricted, y_local)
    return MinorDescriptor(N, M, X, Y, popcount(X), M.rank(Y))


def parallel_extension(M: Matroid, X: int, k: int) -> Matroid:
    """``M ⊙ X^k``: every ``x`` in ``X`` gets ``k - 1`` parallel copies.

    Copies are appended after the original elements, grouped by original
    element in ascending order; ``index_map[i]`` is ``(original, copy)``
    with copy 0 the original itself.
    """
    if k < 1:
        raise InvalidParameterError(f"parallel extension needs k >= 1, got {k}")
    X &= M.ground
    if k == 1 or X == 0:
        return M
    origin = list(range(M.n))
    imap: list[tuple[int, int]] = [(i, 0) for i in range(M.n)]
    for x in elements(X):
        for c in range(1, k):
            origin.append(x)
            imap.append((x, c))

    def independent(mask: int) -> bool:
        proj = 0
        for i in elements(mask):
            bit = 1 << origin[i]
            if proj & bit:
                return False
            proj |= bit
        return M.is_independent(proj)

    return Matroid(
        len(origin),
        independent,
        kind="derived",
        name=f"{M.name}*{elements(X)}^{k}",
        index_map=imap,
    )


def partition_minor(M: Matroid, X: Sequence[int], q: Sequence[int] | None = None) -> MinorDescriptor:
    """``(M(X_1 | .. | X_p) ⊙ X_1^{q_1} .. ⊙ X_{p-1}^{q_{p-1}}) / X_p``.

    Only ``q = (1, 2, .., p-1)`` is supported.
    """
    p = len(X)
    if p < 1:
        raise InvalidParameterError("need at least one block")
    expected_q = tuple(range(1, p))
    if q is None:
        q = expected_q
    if tuple(q) != expected_q:
        raise InvalidParameterError(f"only q = {expected_q} is supported, got {tuple(q)}")
    union = 0
    for j, block in enumerate(X):
        if block & union:
            raise InvalidParameterError(f"block {j} overlaps earlier blocks in {elements(block & union)}")
        if block & ~M.ground:
            raise InvalidParameterError(f"block {j} is not a subset of the ground set")
        union |= block
    kept = elements(union)
    local = [mask_of(i for i, e in enumerate(kept) if block >> e & 1) for block in X]
    N = restrict(M, union)
    for j in range(p - 1):
        N = parallel_extension(N, local[j], q[j])
    # originals keep their positions under parallel extension
    N = contract(N, local[-1])
    size = sum(q[j] * popcount(X[j]) for j in range(p - 1))
    x_union = union & ~X[-1]
    return MinorDescriptor(N, M, x_union, X[-1], size, M.rank(X[-1]), tuple(X))


def same_matroid(A: Matroid, B: Matroid) -> bool:
    """Oracle equality on every subset."""
    if A.n != B.n:
        return False
    return all(A.is_independent(s) == B.is_independent(s) for s in range(1 << A.n))


def from_matroid(M: Matroid) -> Matroid:
    """Freeze ``M`` into an explicit matroid (no validation)."""
    fam = M.independent_sets()
    E = make_explicit(M.n, fam, validate=False)
    E.name = M.name
    return E
