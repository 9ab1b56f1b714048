"""Sparse multivariate polynomials with exact integer coefficients.

A monomial ``x^a`` is stored as its exponent tuple ``a`` (one entry per
variable).  Terms are kept in graded-lexicographic order, highest first,
so iteration and serialization are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence

ExponentVector = tuple[int, ...]


def glex_key(exps: ExponentVector):
    return (sum(exps), exps)


class MultiPoly:
    __slots__ = ("nvars", "_terms")

    def __init__(self, nvars: int, terms: Mapping[ExponentVector, int] | Iterable | None = None):
        self.nvars = nvars
        items = terms.items() if isinstance(terms, Mapping) else (terms or ())
        acc: dict[ExponentVector, int] = {}
        for exps, c in items:
            exps = tuple(exps)
            if len(exps) != nvars:
                raise ValueError(f"exponent vector {exps} does not have {nvars} entries")
            if c:
                acc[exps] = acc.get(exps, 0) + c
        self._terms = {e: acc[e] for e in sorted(acc, key=glex_key, reverse=True) if acc[e]}

    @classmethod
    def _trusted(cls, nvars: int, acc: dict) -> "MultiPoly":
        obj = cls.__new__(cls)
        obj.nvars = nvars
        obj._terms = {e: acc[e] for e in sorted(acc, key=glex_key, reverse=True) if acc[e]}
        return obj

    @property
    def terms(self) -> Mapping[ExponentVector, int]:
        return MappingProxyType(self._terms)

    def support(self) -> list[ExponentVector]:
        return list(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    @property
    def degree(self) -> int | None:
        """Common total degree, or ``None`` if inhomogeneous or zero."""
        degs = {sum(e) for e in self._terms}
        return degs.pop() if len(degs) == 1 else None

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.degree is not None

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.nvars == other.nvars and self._terms == other._terms

    def __hash__(self):
        return hash((self.nvars, tuple(self._terms.items())))

    def __repr__(self):
        if not self._terms:
            return f"MultiPoly({self.nvars}, 0)"
        return f"MultiPoly({self.nvars}, {' + '.join(format_term(c, e) for e, c in self._terms.items())})"

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        _same_space(self, other)
        acc = dict(self._terms)
        for e, c in other._terms.items():
            acc[e] = acc.get(e, 0) + c
        return MultiPoly._trusted(self.nvars, acc)

    def __neg__(self):
        return MultiPoly._trusted(self.nvars, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, MultiPoly):
            return poly_mul(self, other)
        return scale(self, other)

    def __rmul__(self, other):
        return scale(self, other)

    def __pow__(self, k: int) -> "MultiPoly":
        if k < 0:
            raise ValueError("negative power")
        out = constant(self.nvars, 1)
        for _ in range(k):
            out = poly_mul(out, self)
        return out


def _same_space(f: MultiPoly, g: MultiPoly):
    if f.nvars != g.nvars:
        raise ValueError(f"variable count mismatch: {f.nvars} vs {g.nvars}")


def constant(nvars: int, c: int) -> MultiPoly:
    return MultiPoly(nvars, {(0,) * nvars: c})


def variable(nvars: int, i: int) -> MultiPoly:
    e = [0] * nvars
    e[i] = 1
    return MultiPoly(nvars, {tuple(e): 1})


def monomial(exps: Sequence[int], c: int = 1) -> MultiPoly:
    return MultiPoly(len(exps), {tuple(exps): c})


def scale(f: MultiPoly, c: int) -> MultiPoly:
    return MultiPoly._trusted(f.nvars, {e: c * v for e, v in f._terms.items()})


def poly_mul(f: MultiPoly, g: MultiPoly) -> MultiPoly:
    _same_space(f, g)
    acc: dict[ExponentVector, int] = {}
    get = acc.get
    gterms = list(g._terms.items())
    for a, ca in f._terms.items():
        for b, cb in gterms:
            e = tuple(x + y for x, y in zip(a, b))
            acc[e] = get(e, 0) + ca * cb
    return MultiPoly._trusted(f.nvars, acc)


def partial_derivative(f: MultiPoly, i: int) -> MultiPoly:
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    acc = {}
    for e, c in f._terms.items():
        k = e[i]
        if k:
            acc[e[:i] + (k - 1,) + e[i + 1:]] = c * k
    return MultiPoly._trusted(f.nvars, acc)


def substitute_zero(f: MultiPoly, i: int) -> MultiPoly:
    if not 0 <= i < f.nvars:
        raise IndexError(f"variable index {i} out of range for {f.nvars} variables")
    return MultiPoly._trusted(f.nvars, {e: c for e, c in f._terms.items() if e[i] == 0})


def coefficient(f: MultiPoly, alpha: Sequence[int]) -> int:
    alpha = tuple(alpha)
    if len(alpha) != f.nvars:
        raise ValueError(f"exponent vector {alpha} does not have {f.nvars} entries")
    return f._terms.get(alpha, 0)


def evaluate(f: MultiPoly, point: Sequence) -> Fraction:
    if len(point) != f.nvars:
        raise ValueError(f"point has {len(point)} coordinates, polynomial has {f.nvars} variables")
    pt = [Fraction(x) for x in point]
    total = Fraction(0)
    for e, c in f._terms.items():
        term = Fraction(c)
        for x, k in zip(pt, e):
            if k:
                term *= x**k
        total += term
    return total


def evaluate_float(f: MultiPoly, point: Sequence[float]) -> float:
    total = 0.0
    for e, c in f._terms.items():
        term = float(c)
        for x, k in zip(point, e):
            if k:
                term *= x**k
        total += term
    return total


def embed(f: MultiPoly, nvars: int, positions: Sequence[int]) -> MultiPoly:
    """Rename variable ``i`` of ``f`` to variable ``positions[i]`` of a larger space."""
    if len(positions) != f.nvars:
        raise ValueError("need one target position per variable")
    acc = {}
    for e, c in f._terms.items():
        out = [0] * nvars
        for i, k in enumerate(e):
            out[positions[i]] += k
        out = tuple(out)
        acc[out] = acc.get(out, 0) + c
    return MultiPoly._trusted(nvars, acc)


def compose_linear(f: MultiPoly, A: Sequence[Sequence[int]]) -> MultiPoly:
    """``f(A y)`` for an ``nvars x m`` integer matrix ``A``."""
    if len(A) != f.nvars:
        raise ValueError(f"matrix has {len(A)} rows, polynomial has {f.nvars} variables")
    m = len(A[0]) if A else 0
    images = [MultiPoly(m, {tuple(int(j == c) for j in range(m)): A[i][c] for c in range(m)}) for i in range(f.nvars)]
    # reuse powers of each image
    powers: dict[tuple[int, int], MultiPoly] = {}

    def power(i: int, k: int) -> MultiPoly:
        if (i, k) not in powers:
            powers[(i, k)] = constant(m, 1) if k == 0 else poly_mul(power(i, k - 1), images[i])
        return powers[(i, k)]

    out = MultiPoly(m)
    for e, c in f._terms.items():
        term = constant(m, c)
        for i, k in enumerate(e):
            if k:
                term = poly_mul(term, power(i, k))
        out = out + term
    return out


@dataclass(frozen=True)
class Dominance:
    """Outcome of comparing ``den * f`` against ``num * g`` coefficientwise.

    ``witness`` is the first failing monomial (graded-lex order) as
    ``(exps, [x^a]f, [x^a]g)``; ``tight`` is the first monomial where
    both sides agree and are nonzero.
    """

    holds: bool
    scale: Fraction
    witness: tuple | None = None
    tight: tuple | None = None


def dominates(f: MultiPoly, g: MultiPoly, scale: Fraction | int = 1) -> Dominance:
    """Does ``f >= scale * g`` hold coefficientwise?"""
    _same_space(f, g)
    s = Fraction(scale)
    num, den = s.numerator, s.denominator
    keys = set(f._terms) | set(g._terms)
    witness = None
    tight = None
    for e in sorted(keys, key=glex_key, reverse=True):
        a = f._terms.get(e, 0)
        b = g._terms.get(e, 0)
        lhs, rhs = den * a, num * b
        if lhs < rhs:
            witness = (e, a, b)
            break
        if tight is None and lhs == rhs and rhs != 0:
            tight = (e, a, b)
    return Dominance(witness is None, s, witness, tight)


# -- text serialization -------------------------------------------------------


def format_term(c: int, exps: ExponentVector) -> str:
    parts = [str(c)]
    parts += [f"x{i}^{k}" for i, k in enumerate(exps) if k]
    return " * ".join(parts)


def to_lines(f: MultiPoly) -> list[str]:
    """One ``coeff * x0^a0 * ...`` line per term, graded-lex descending.

    Variables with zero exponent are omitted; the zero polynomial is the
    empty list.
    """
    return [format_term(c, e) for e, c in f._terms.items()]


def from_lines(nvars: int, lines: Iterable[str]) -> MultiPoly:
    acc = {}
    for line in lines:
        line = line.strip()
        if not line:
            continue
        head, *factors = [t.strip() for t in line.split("*")]
        e = [0] * nvars
        for fac in factors:
            name, _, k = fac.partition("^")
            if not name.startswith("x"):
                raise ValueError(f"bad factor {fac!r}")
            e[int(name[1:])] += int(k or 1)
        acc[tuple(e)] = acc.get(tuple(e), 0) + int(head)
    return MultiPoly(nvars, acc)
