"""Exact-arithmetic kernel.

Rationals are `fractions.Fraction` (always lowest terms, positive
denominator).  Multivariate polynomials are dictionaries from exponent
vectors to nonzero coefficients; the coefficient domain can be Fraction,
int, a prime field Fp, or the four-element field F4.  Rational functions
compare by cross-multiplication, so no polynomial GCD is ever needed.

All ideal questions are answered degree by degree with linear algebra on
monomial bases.  There is deliberately no Groebner machinery here.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence


# ---------------------------------------------------------------------------
# finite fields
# ---------------------------------------------------------------------------


class Fp:
    """Element of the prime field F_p.  Table-free modular arithmetic."""

    __slots__ = ("p", "v")

    def __init__(self, p: int, v: int):
        self.p = p
        self.v = v % p

    def _coerce(self, other):
        if isinstance(other, Fp):
            if other.p != self.p:
                raise ValueError("mixed characteristics")
            return other
        if isinstance(other, int):
            return Fp(self.p, other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.p, self.v + other.v)

    __radd__ = __add__

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.p, self.v - other.v)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return Fp(self.p, self.v * other.v)

    __rmul__ = __mul__

    def __neg__(self):
        return Fp(self.p, -self.v)

    def inverse(self):
        if self.v == 0:
            raise ZeroDivisionError("inverse of zero in F_p")
        return Fp(self.p, pow(self.v, self.p - 2, self.p))

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        if isinstance(other, Fp):
            return self.p == other.p and self.v == other.v
        if isinstance(other, int):
            return self.v == other % self.p
        return NotImplemented

    def __bool__(self):
        return self.v != 0

    def __hash__(self):
        return hash((self.p, self.v))

    def __repr__(self):
        return f"Fp({self.p},{self.v})"


class F4:
    """Element a + b*w of F_4 = F_2[w]/(w^2 + w + 1), coordinates (a, b) in F_2."""

    __slots__ = ("a", "b")

    def __init__(self, a: int, b: int = 0):
        self.a = a & 1
        self.b = b & 1

    def _coerce(self, other):
        if isinstance(other, F4):
            return other
        if isinstance(other, int):
            return F4(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return F4(self.a ^ other.a, self.b ^ other.b)

    __radd__ = __add__
    __sub__ = __add__          # characteristic two
    __rsub__ = __add__

    def __neg__(self):
        return self

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        # (a1 + b1 w)(a2 + b2 w) with w^2 = w + 1
        a1, b1, a2, b2 = self.a, self.b, other.a, other.b
        return F4((a1 & a2) ^ (b1 & b2), (a1 & b2) ^ (b1 & a2) ^ (b1 & b2))

    __rmul__ = __mul__

    def inverse(self):
        if not self:
            raise ZeroDivisionError("inverse of zero in F_4")
        # x^3 = 1 for x != 0, so x^-1 = x^2
        return self * self

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self.a == other.a and self.b == other.b

    def __bool__(self):
        return bool(self.a | self.b)

    def __hash__(self):
        return hash(("F4", self.a, self.b))

    def __repr__(self):
        return f"F4({self.a},{self.b})"


F4_ZERO = F4(0)
F4_ONE = F4(1)
F4_OMEGA = F4(0, 1)
F4_ELEMENTS = (F4(0, 0), F4(1, 0), F4(0, 1), F4(1, 1))


# ---------------------------------------------------------------------------
# multivariate polynomials
# ---------------------------------------------------------------------------


class Polynomial:
    """Multivariate polynomial as {exponent tuple: nonzero coefficient}.

    The variable list fixes both the exponent-vector length and the
    graded-lexicographic order used for deterministic basis enumeration.
    """

    __slots__ = ("variables", "terms")

    def __init__(self, variables: Sequence[str], terms: Mapping[tuple, object] | None = None):
        self.variables = tuple(variables)
        clean: dict = {}
        if terms:
            n = len(self.variables)
            for exps, coeff in terms.items():
                if len(exps) != n:
                    raise ValueError("exponent vector length mismatch")
                key = tuple(exps)
                if key in clean:
                    clean[key] = clean[key] + coeff
                else:
                    clean[key] = coeff
        # drop anything that is zero or cancelled during aggregation
        self.terms = {e: c for e, c in clean.items() if c}

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, variables: Sequence[str]) -> "Polynomial":
        return cls(variables, {})

    @classmethod
    def constant(cls, variables: Sequence[str], c) -> "Polynomial":
        n = len(variables)
        return cls(variables, {(0,) * n: c} if c else {})

    @classmethod
    def variable(cls, name: str, variables: Sequence[str], one=Fraction(1)) -> "Polynomial":
        variables = tuple(variables)
        i = variables.index(name)
        exps = tuple(1 if j == i else 0 for j in range(len(variables)))
        return cls(variables, {exps: one})

    # -- ring structure ------------------------------------------------------

    def _check(self, other: "Polynomial"):
        if self.variables != other.variables:
            raise ValueError("polynomials over different variable lists")

    def __add__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms = dict(self.terms)
            for e, c in other.terms.items():
                if e in terms:
                    s = terms[e] + c
                    if s:
                        terms[e] = s
                    else:
                        del terms[e]
                else:
                    terms[e] = c
            out = Polynomial.__new__(Polynomial)
            out.variables = self.variables
            out.terms = terms
            return out
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Polynomial):
            return self + (-other)
        return NotImplemented

    def __neg__(self):
        out = Polynomial.__new__(Polynomial)
        out.variables = self.variables
        out.terms = {e: -c for e, c in self.terms.items()}
        return out

    def __mul__(self, other):
        if isinstance(other, Polynomial):
            self._check(other)
            terms: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    c = c1 * c2
                    if e in terms:
                        s = terms[e] + c
                        if s:
                            terms[e] = s
                        else:
                            del terms[e]
                    elif c:
                        terms[e] = c
            out = Polynomial.__new__(Polynomial)
            out.variables = self.variables
            out.terms = terms
            return out
        # scalar
        return self.scale(other)

    __rmul__ = __mul__

    def scale(self, c) -> "Polynomial":
        out = Polynomial.__new__(Polynomial)
        out.variables = self.variables
        out.terms = {}
        for e, old in self.terms.items():
            v = old * c
            if v:
                out.terms[e] = v
        return out

    def __pow__(self, k: int) -> "Polynomial":
        if k < 0:
            raise ValueError("negative power of a polynomial")
        base = self
        for c in self.terms.values():
            one = _one_like(c)
            break
        else:
            one = Fraction(1)
        result = Polynomial.constant(self.variables, one)
        for _ in range(k):
            result = result * base
        return result

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.variables == other.variables and self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash((self.variables, frozenset(self.terms.items())))

    # -- queries -------------------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        """Total degree, -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def coefficient(self, exps: tuple):
        return self.terms.get(tuple(exps), 0)

    def derivative(self, name: str) -> "Polynomial":
        i = self.variables.index(name)
        terms: dict = {}
        for e, c in self.terms.items():
            if e[i] == 0:
                continue
            new = c * e[i]
            if new:
                ne = e[:i] + (e[i] - 1,) + e[i + 1:]
                terms[ne] = terms.get(ne, new * 0) + new if ne in terms else new
        terms = {e: c for e, c in terms.items() if c}
        out = Polynomial.__new__(Polynomial)
        out.variables = self.variables
        out.terms = terms
        return out

    def evaluate(self, values: Mapping[str, object]):
        """Evaluate at a point; every variable must be given a value."""
        missing = [v for v in self.variables if v not in values]
        if missing:
            raise ValueError(f"unmapped variable: {missing[0]}")
        total = None
        for e, c in self.terms.items():
            term = c
            for name, exp in zip(self.variables, e):
                for _ in range(exp):
                    term = term * values[name]
            total = term if total is None else total + term
        if total is None:
            return 0
        return total

    def restrict_variables(self, variables: Sequence[str]) -> "Polynomial":
        """Re-express over a different variable list (a superset or reorder)."""
        variables = tuple(variables)
        idx = []
        for j, v in enumerate(self.variables):
            if v not in variables:
                if any(e[j] for e in self.terms):
                    raise ValueError(f"variable {v} in use, cannot drop")
                idx.append(None)
            else:
                idx.append(variables.index(v))
        terms = {}
        for e, c in self.terms.items():
            ne = [0] * len(variables)
            for j, exp in enumerate(e):
                if exp:
                    ne[idx[j]] = exp
            terms[tuple(ne)] = c
        return Polynomial(variables, terms)

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for e in sorted(self.terms, key=lambda t: (-sum(t), tuple(-x for x in t))):
            c = self.terms[e]
            mono = "*".join(
                f"{v}^{k}" if k > 1 else v
                for v, k in zip(self.variables, e) if k
            )
            if mono:
                bits.append(f"({c})*{mono}" if not _is_one(c) else mono)
            else:
                bits.append(f"({c})")
        return " + ".join(bits)


def _is_one(c) -> bool:
    try:
        return c == 1
    except TypeError:
        return False


def _zero_like(c):
    return c * 0


def _one_like(c):
    if isinstance(c, Fraction):
        return Fraction(1)
    if isinstance(c, int):
        return 1
    if isinstance(c, Fp):
        return Fp(c.p, 1)
    if isinstance(c, F4):
        return F4(1)
    raise TypeError(f"no multiplicative unit known for {type(c)!r}")


def poly_from_string_exps(variables: Sequence[str], data: Mapping[str, object]) -> Polynomial:
    """Convenience: {"x*y": 1, "u^2": -1} style construction for tests."""
    variables = tuple(variables)
    terms = {}
    for mono, c in data.items():
        e = [0] * len(variables)
        if mono not in ("", "1"):
            for factor in mono.split("*"):
                if "^" in factor:
                    name, k = factor.split("^")
                    e[variables.index(name)] += int(k)
                else:
                    e[variables.index(factor)] += 1
        terms[tuple(e)] = c
    return Polynomial(variables, terms)


# ---------------------------------------------------------------------------
# rational functions
# ---------------------------------------------------------------------------


class RationalFunction:
    """Quotient of polynomials.  Equality is by cross-multiplication;
    no reduction to lowest terms is ever attempted."""

    __slots__ = ("num", "den")

    def __init__(self, num: Polynomial, den: Polynomial):
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.variables != den.variables:
            raise ValueError("numerator and denominator over different variables")
        self.num = num
        self.den = den

    @classmethod
    def from_polynomial(cls, p: Polynomial, one=Fraction(1)) -> "RationalFunction":
        return cls(p, Polynomial.constant(p.variables, one))

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __add__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.den + other.num * self.den,
                                    self.den * other.den)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.den - other.num * self.den,
                                    self.den * other.den)
        return NotImplemented

    def __neg__(self):
        return RationalFunction(-self.num, self.den)

    def __mul__(self, other):
        if isinstance(other, RationalFunction):
            return RationalFunction(self.num * other.num, self.den * other.den)
        return RationalFunction(self.num * other, self.den)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, RationalFunction):
            return (self.num * other.den) == (other.num * self.den)
        return NotImplemented

    def __hash__(self):
        raise TypeError("rational functions are unhashable (no canonical form)")

    def __repr__(self):
        return f"({self.num!r}) / ({self.den!r})"


def poly_substitute(p: Polynomial, images: Mapping[str, RationalFunction]) -> RationalFunction:
    """Substitute a rational function for every variable that occurs in p.

    Raises ValueError("unmapped variable") when p uses a variable with no
    image.  The result is combined over common denominators, exactly.
    """
    used = [v for j, v in enumerate(p.variables) if any(e[j] for e in p.terms)]
    for v in used:
        if v not in images:
            raise ValueError("unmapped variable")
    some = next(iter(images.values()))
    target_vars = some.num.variables
    for img in images.values():
        if img.num.variables != target_vars:
            raise ValueError("images over different variable lists")
    one = Polynomial.constant(target_vars, Fraction(1))
    total = RationalFunction(Polynomial.zero(target_vars), one)
    for e, c in p.terms.items():
        term = RationalFunction(Polynomial.constant(target_vars, c), one)
        for j, exp in enumerate(e):
            if exp:
                img = images[p.variables[j]]
                for _ in range(exp):
                    term = term * img
        total = total + term
    return total


# ---------------------------------------------------------------------------
# integer matrices
# ---------------------------------------------------------------------------


def int_determinant(rows: Sequence[Sequence[int]]) -> int:
    """Exact determinant by fraction-free (Bareiss) elimination."""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise ValueError("non-square matrix")
    if n == 0:
        return 1
    m = [list(map(int, r)) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def lattice_index(rows: Sequence[Sequence[int]]) -> int:
    """|det| of a square integer matrix: the index of the row lattice."""
    return abs(int_determinant(rows))


def gcd_of_maximal_minors(rows: Sequence[Sequence[int]]) -> int:
    """gcd of all k x k minors of a k x d integer matrix (k <= d)."""
    k = len(rows)
    d = len(rows[0]) if rows else 0
    if k > d:
        raise ValueError("more rows than columns")
    g = 0
    for cols in itertools.combinations(range(d), k):
        minor = int_determinant([[r[c] for c in cols] for r in rows])
        g = math.gcd(g, minor)
    return g


# ---------------------------------------------------------------------------
# linear algebra over an exact field
# ---------------------------------------------------------------------------


def _rref(mat: Sequence[Sequence[object]]):
    """Row-reduce a copy of mat; returns (rows, pivot_columns).

    Entries may be Fraction, Fp, or F4; plain ints are promoted to Fraction
    so that division stays exact.
    """
    rows = [[Fraction(x) if isinstance(x, int) else x for x in r] for r in mat]
    nrows = len(rows)
    ncols = len(rows[0]) if nrows else 0
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, nrows):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        pv = rows[r][c]
        inv_row = [x / pv for x in rows[r]]
        rows[r] = inv_row
        for i in range(nrows):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], inv_row)]
        pivots.append(c)
        r += 1
        if r == nrows:
            break
    return rows, pivots


def matrix_rank(mat: Sequence[Sequence[object]]) -> int:
    if not mat or not mat[0]:
        return 0
    _, pivots = _rref(mat)
    return len(pivots)


def kernel_dimension(mat: Sequence[Sequence[object]]):
    """Exact nullity and kernel basis of a matrix (rows act on column vectors).

    Returns (dim, basis) where each basis vector v satisfies mat @ v = 0.
    """
    if not mat:
        raise ValueError("matrix must have at least one row (use a zero row)")
    ncols = len(mat[0])
    rows, pivots = _rref(mat)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    one = _one_for_matrix(mat)
    zero = one - one
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for r, pc in enumerate(pivots):
            v[pc] = -rows[r][fc]
        basis.append(v)
    return len(free), basis


def _one_for_matrix(mat):
    for row in mat:
        for x in row:
            if isinstance(x, Fp):
                return Fp(x.p, 1)
            if isinstance(x, F4):
                return F4(1)
            if isinstance(x, Fraction):
                return Fraction(1)
    return Fraction(1)


# ---------------------------------------------------------------------------
# graded pieces of polynomial ideals
# ---------------------------------------------------------------------------


def monomials_of_degree(nvars: int, degree: int) -> list:
    """All exponent vectors of the given total degree, in descending
    lexicographic order (the graded-lex order within one degree)."""
    if degree < 0:
        return []
    out = []

    def rec(prefix, remaining, slots):
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining, -1, -1):
            rec(prefix + (e,), remaining - e, slots - 1)

    if nvars == 0:
        return [()] if degree == 0 else []
    rec((), degree, nvars)
    return out


@dataclass
class GradedPiece:
    """Coordinates of a collection of homogeneous polynomials in one degree."""
    degree: int
    basis: list          # exponent vectors, descending lex
    coordinates: list    # one coefficient row per polynomial


def graded_piece(polys: Iterable[Polynomial], degree: int) -> GradedPiece:
    polys = list(polys)
    if not polys:
        raise ValueError("empty polynomial list")
    nvars = len(polys[0].variables)
    basis = monomials_of_degree(nvars, degree)
    index = {e: i for i, e in enumerate(basis)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(basis)
        for e, c in p.terms.items():
            if sum(e) != degree:
                raise ValueError("polynomial not homogeneous of the piece degree")
            row[index[e]] = c
        rows.append(row)
    return GradedPiece(degree, basis, rows)


def ideal_graded_dimension(generators: Sequence[Polynomial], d: int) -> int:
    """Dimension of the degree-d piece of the ideal the generators span.

    Computed as the rank of {m * g : deg(m g) = d} over the monomial basis.
    Generators must be homogeneous.
    """
    gens = list(generators)
    if not gens:
        return 0
    variables = gens[0].variables
    for g in gens:
        if g.variables != variables:
            raise ValueError("generators over different variable lists")
        if not g.is_homogeneous():
            raise ValueError("inhomogeneous generator")
    nvars = len(variables)
    products = []
    for g in gens:
        if g.is_zero():
            continue
        e = g.total_degree()
        if e > d:
            continue
        for m in monomials_of_degree(nvars, d - e):
            mono = Polynomial(variables, {m: Fraction(1)})
            products.append(mono * g)
    if not products:
        return 0
    piece = graded_piece(products, d)
    return matrix_rank(piece.coordinates)


def span_dimension(polys: Sequence[Polynomial]) -> int:
    """Rank of a finite set of polynomials as vectors (any degrees)."""
    polys = [p for p in polys if not p.is_zero()]
    if not polys:
        return 0
    monos = sorted({e for p in polys for e in p.terms})
    index = {e: i for i, e in enumerate(monos)}
    rows = []
    for p in polys:
        row = [Fraction(0)] * len(monos)
        for e, c in p.terms.items():
            row[index[e]] = c
        rows.append(row)
    return matrix_rank(rows)


def spans_contain(container: Sequence[Polynomial], members: Sequence[Polynomial]) -> bool:
    """True iff every member lies in the linear span of container."""
    base = span_dimension(container)
    return span_dimension(list(container) + list(members)) == base
