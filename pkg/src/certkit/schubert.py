"""Schubert calculus on Gr(2,n), two-row partitions only.

Basis classes are sigma_(a,b) with n-2 >= a >= b >= 0.  Products use the
Littlewood-Richardson rule; for two-row shapes the lattice-word enumeration
is tiny, and every coefficient is 0 or 1.  An independent product route via
iterated Pieri steps is kept for cross-checking.

Chern-class bookkeeping happens in a formal weighted ring Q[s1,s11,s2,s3]
(weights 1,2,2,3) truncated above weight 3: powers of s1 stay symbolic and
are only paired against the ambient Grassmannian at the very end.
"""

from __future__ import annotations

import itertools
from collections import namedtuple
from fractions import Fraction
from typing import Mapping

Partition2 = tuple  # (a, b) with a >= b >= 0


def partition_is_valid(lam: Partition2, n: int) -> bool:
    a, b = lam
    return 0 <= b <= a <= n - 2


class SchubertElement:
    """Rational linear combination of two-row Schubert classes on Gr(2,n)."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs: Mapping[Partition2, object] | None = None):
        self.n = n
        clean = {}
        if coeffs:
            for lam, c in coeffs.items():
                lam = (int(lam[0]), int(lam[1]))
                if not partition_is_valid(lam, n):
                    raise ValueError("invalid partition")
                if c:
                    clean[lam] = clean.get(lam, Fraction(0)) + Fraction(c)
        self.coeffs = {k: v for k, v in clean.items() if v}

    @classmethod
    def sigma(cls, n: int, a: int, b: int = 0) -> "SchubertElement":
        return cls(n, {(a, b): Fraction(1)})

    @classmethod
    def unit(cls, n: int) -> "SchubertElement":
        return cls(n, {(0, 0): Fraction(1)})

    @classmethod
    def zero(cls, n: int) -> "SchubertElement":
        return cls(n, {})

    def is_zero(self) -> bool:
        return not self.coeffs

    def codimensions(self) -> set:
        return {a + b for a, b in self.coeffs}

    def _check(self, other: "SchubertElement"):
        if self.n != other.n:
            raise ValueError("ambient mismatch")

    def __add__(self, other):
        if not isinstance(other, SchubertElement):
            return NotImplemented
        self._check(other)
        coeffs = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            coeffs[lam] = coeffs.get(lam, Fraction(0)) + c
        return SchubertElement(self.n, coeffs)

    def __sub__(self, other):
        if not isinstance(other, SchubertElement):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c) -> "SchubertElement":
        c = Fraction(c)
        return SchubertElement(self.n, {lam: v * c for lam, v in self.coeffs.items()})

    def __mul__(self, other):
        if isinstance(other, SchubertElement):
            return mul(self, other)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SchubertElement":
        out = SchubertElement.unit(self.n)
        for _ in range(k):
            out = mul(out, self)
        return out

    def __eq__(self, other):
        if isinstance(other, SchubertElement):
            return self.n == other.n and self.coeffs == other.coeffs
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.coeffs.items())))

    def __repr__(self):
        if not self.coeffs:
            return f"0 (Gr(2,{self.n}))"
        bits = []
        for lam in sorted(self.coeffs):
            c = self.coeffs[lam]
            bits.append(f"{c}*sigma{lam}")
        return " + ".join(bits)


def pieri(lam: Partition2, k: int, n: int) -> SchubertElement:
    """Multiply sigma_lam by the special class sigma_k, k >= 1.

    Result: sum of sigma_mu over mu containing lam with mu/lam a horizontal
    strip of size k, clipped to the 2 x (n-2) box.
    """
    a, b = lam
    if not partition_is_valid(lam, n):
        raise ValueError("invalid partition")
    if not 1 <= k <= n - 2:
        raise ValueError("invalid special class index")
    out = {}
    # mu = (a2, b2), horizontal strip: a2 >= a >= b2 >= b, sizes add up
    for b2 in range(b, a + 1):
        a2 = a + b + k - b2
        if a2 < a or a2 > n - 2 or b2 > a2:
            continue
        out[(a2, b2)] = Fraction(1)
    return SchubertElement(n, out)


def dual_pieri(lam: Partition2, n: int) -> SchubertElement:
    """Multiply sigma_lam by sigma_(1,1): shift by (1,1), zero out of the box."""
    a, b = lam
    if not partition_is_valid(lam, n):
        raise ValueError("invalid partition")
    if a + 1 > n - 2:
        return SchubertElement.zero(n)
    return SchubertElement(n, {(a + 1, b + 1): Fraction(1)})


def _lr_coefficient(lam: Partition2, mu: Partition2, nu: Partition2) -> int:
    """Littlewood-Richardson coefficient for two-row shapes by direct
    enumeration of lattice-word fillings of nu/lam with content mu."""
    if nu[0] < lam[0] or nu[1] < lam[1]:
        return 0
    if nu[0] + nu[1] != lam[0] + lam[1] + mu[0] + mu[1]:
        return 0
    row1 = [(0, j) for j in range(lam[0], nu[0])]
    row2 = [(1, j) for j in range(lam[1], nu[1])]
    cells = row1 + row2
    count = 0
    for filling in itertools.product((1, 2), repeat=len(cells)):
        val = dict(zip(cells, filling))
        # content
        if filling.count(1) != mu[0] or filling.count(2) != mu[1]:
            continue
        # rows weakly increase
        ok = all(val[(r, j)] <= val[(r, j + 1)]
                 for (r, j) in cells if (r, j + 1) in val)
        if not ok:
            continue
        # columns strictly increase
        ok = all(val[(0, j)] < val[(1, j)]
                 for (r, j) in cells if r == 1 and (0, j) in val)
        if not ok:
            continue
        # reverse reading word is a lattice word
        word = [val[(0, j)] for j in range(nu[0] - 1, lam[0] - 1, -1)]
        word += [val[(1, j)] for j in range(nu[1] - 1, lam[1] - 1, -1)]
        ones = twos = 0
        good = True
        for w in word:
            if w == 1:
                ones += 1
            else:
                twos += 1
            if twos > ones:
                good = False
                break
        if good:
            count += 1
    return count


def mul(x: SchubertElement, y: SchubertElement) -> SchubertElement:
    """Chow-ring product via the Littlewood-Richardson rule."""
    if x.n != y.n:
        raise ValueError("ambient mismatch")
    n = x.n
    out: dict = {}
    for lam, cx in x.coeffs.items():
        for mu, cy in y.coeffs.items():
            total = lam[0] + lam[1] + mu[0] + mu[1]
            c = cx * cy
            # candidate nu run over two-row partitions of the right size
            lo = max(lam[1], mu[1], total - (n - 2))
            for b2 in range(lo, total // 2 + 1):
                a2 = total - b2
                if a2 > n - 2 or a2 < b2:
                    continue
                m = _lr_coefficient(lam, mu, (a2, b2))
                if m:
                    key = (a2, b2)
                    out[key] = out.get(key, Fraction(0)) + c * m
    return SchubertElement(n, out)


def mul_via_pieri(x: SchubertElement, y: SchubertElement) -> SchubertElement:
    """Independent product route: split each sigma_(c,d) of y as d steps of
    the (1,1) shift followed by one Pieri step of size c-d."""
    if x.n != y.n:
        raise ValueError("ambient mismatch")
    n = x.n
    total = SchubertElement.zero(n)
    for (c, d), cy in y.coeffs.items():
        part = x
        for _ in range(d):
            acc = SchubertElement.zero(n)
            for lam, cv in part.coeffs.items():
                acc = acc + dual_pieri(lam, n).scale(cv)
            part = acc
        if c > d:
            acc = SchubertElement.zero(n)
            for lam, cv in part.coeffs.items():
                acc = acc + pieri(lam, c - d, n).scale(cv)
            part = acc
        total = total + part.scale(cy)
    return total


def degree(x: SchubertElement) -> Fraction:
    """Coefficient of the box class sigma_(n-2,n-2); zero input gives 0."""
    if x.is_zero():
        return Fraction(0)
    top = 2 * (x.n - 2)
    if x.codimensions() != {top}:
        raise ValueError("non-top-degree")
    return x.coeffs.get((x.n - 2, x.n - 2), Fraction(0))


# ---------------------------------------------------------------------------
# formal Chern bookkeeping
# ---------------------------------------------------------------------------

# generators of the formal ring and their weights
FORMAL_GENERATORS = ("s1", "s11", "s2", "s3")
FORMAL_WEIGHTS = (1, 2, 2, 3)

# weight-3 monomial basis, fixed order: s1^3, s1*s11, s1*s2, s3
WEIGHT3_BASIS = ((3, 0, 0, 0), (1, 1, 0, 0), (1, 0, 1, 0), (0, 0, 0, 1))


def _weight(exps: tuple) -> int:
    return sum(e * w for e, w in zip(exps, FORMAL_WEIGHTS))


class FormalClass:
    """Element of Q[s1,s11,s2,s3], weighted by (1,2,2,3), truncated above
    a weight cap (default 3: threefold targets)."""

    __slots__ = ("terms", "cap")

    def __init__(self, terms: Mapping[tuple, object] | None = None, cap: int = 3):
        self.cap = cap
        clean = {}
        if terms:
            for e, c in terms.items():
                e = tuple(e)
                if _weight(e) > cap:
                    continue
                c = Fraction(c)
                if c:
                    clean[e] = clean.get(e, Fraction(0)) + c
        self.terms = {e: c for e, c in clean.items() if c}

    @classmethod
    def zero(cls, cap: int = 3) -> "FormalClass":
        return cls({}, cap)

    @classmethod
    def constant(cls, c, cap: int = 3) -> "FormalClass":
        return cls({(0, 0, 0, 0): Fraction(c)}, cap)

    @classmethod
    def generator(cls, name: str, cap: int = 3) -> "FormalClass":
        i = FORMAL_GENERATORS.index(name)
        e = tuple(1 if j == i else 0 for j in range(4))
        return cls({e: Fraction(1)}, cap)

    def __add__(self, other):
        if not isinstance(other, FormalClass):
            return NotImplemented
        terms = dict(self.terms)
        for e, c in other.terms.items():
            terms[e] = terms.get(e, Fraction(0)) + c
        return FormalClass(terms, self.cap)

    def __sub__(self, other):
        if not isinstance(other, FormalClass):
            return NotImplemented
        return self + other.scale(-1)

    def scale(self, c) -> "FormalClass":
        c = Fraction(c)
        return FormalClass({e: v * c for e, v in self.terms.items()}, self.cap)

    def __mul__(self, other):
        if isinstance(other, FormalClass):
            terms: dict = {}
            for e1, c1 in self.terms.items():
                for e2, c2 in other.terms.items():
                    e = tuple(a + b for a, b in zip(e1, e2))
                    if _weight(e) > self.cap:
                        continue
                    terms[e] = terms.get(e, Fraction(0)) + c1 * c2
            return FormalClass(terms, self.cap)
        return self.scale(other)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "FormalClass":
        out = FormalClass.constant(1, self.cap)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, FormalClass):
            return self.terms == other.terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self.terms.items()))

    def is_zero(self) -> bool:
        return not self.terms

    def graded_part(self, w: int) -> "FormalClass":
        return FormalClass({e: c for e, c in self.terms.items() if _weight(e) == w},
                           self.cap)

    def weights(self) -> set:
        return {_weight(e) for e in self.terms}

    def weight3_vector(self) -> tuple:
        """Coefficients on the basis (s1^3, s1*s11, s1*s2, s3)."""
        for e, c in self.terms.items():
            if _weight(e) == 3 and e not in WEIGHT3_BASIS:
                raise ValueError(f"unexpected weight-3 monomial {e}")
        return tuple(self.terms.get(e, Fraction(0)) for e in WEIGHT3_BASIS)

    def to_schubert(self, n: int) -> SchubertElement:
        """Expand the symbolic generators into actual Schubert classes."""
        gens = (SchubertElement.sigma(n, 1),
                SchubertElement.sigma(n, 1, 1),
                SchubertElement.sigma(n, 2),
                SchubertElement.sigma(n, 3))
        total = SchubertElement.zero(n)
        for e, c in self.terms.items():
            term = SchubertElement.unit(n)
            for g, k in zip(gens, e):
                for _ in range(k):
                    term = mul(term, g)
            total = total + term.scale(c)
        return total

    def __repr__(self):
        if not self.terms:
            return "0"
        names = FORMAL_GENERATORS
        bits = []
        for e in sorted(self.terms, key=lambda t: (_weight(t), t)):
            c = self.terms[e]
            mono = "*".join(f"{names[i]}^{k}" if k > 1 else names[i]
                            for i, k in enumerate(e) if k)
            bits.append(f"({c})*{mono}" if mono else f"({c})")
        return " + ".join(bits)


S1 = FormalClass.generator("s1")
S11 = FormalClass.generator("s11")
S2 = FormalClass.generator("s2")
S3 = FormalClass.generator("s3")


class ChernVector:
    """Total Chern class (c0=1, c1, c2, c3) of a bundle, formal coefficients."""

    __slots__ = ("rank", "classes")

    def __init__(self, rank: int, classes):
        classes = list(classes)
        if len(classes) != 4:
            raise ValueError("expected classes c0..c3")
        if classes[0] != FormalClass.constant(1):
            raise ValueError("c0 must be 1")
        for i, c in enumerate(classes):
            if not c.is_zero() and c.weights() != {i}:
                raise ValueError(f"c{i} not homogeneous of weight {i}")
        self.rank = rank
        self.classes = classes

    def __eq__(self, other):
        if isinstance(other, ChernVector):
            return self.rank == other.rank and self.classes == other.classes
        return NotImplemented

    def __repr__(self):
        return f"ChernVector(rank={self.rank}, c1={self.classes[1]!r}, " \
               f"c2={self.classes[2]!r}, c3={self.classes[3]!r})"


class ChernCharacter:
    """Chern character truncated at weight 3: rank + ch1 + ch2 + ch3."""

    __slots__ = ("rank", "ch1", "ch2", "ch3")

    def __init__(self, rank, ch1: FormalClass, ch2: FormalClass, ch3: FormalClass):
        for i, p in enumerate((ch1, ch2, ch3), start=1):
            if not p.is_zero() and p.weights() != {i}:
                raise ValueError(f"ch{i} not homogeneous of weight {i}")
        self.rank = Fraction(rank)
        self.ch1 = ch1
        self.ch2 = ch2
        self.ch3 = ch3

    def __eq__(self, other):
        if isinstance(other, ChernCharacter):
            return (self.rank == other.rank and self.ch1 == other.ch1
                    and self.ch2 == other.ch2 and self.ch3 == other.ch3)
        return NotImplemented

    def __repr__(self):
        return f"ChernCharacter({self.rank}, {self.ch1!r}, {self.ch2!r}, {self.ch3!r})"


def chern_to_character(c: ChernVector) -> ChernCharacter:
    """Newton-identity expansion: ch1 = c1, ch2 = (c1^2 - 2 c2)/2,
    ch3 = (c1^3 - 3 c1 c2 + 3 c3)/6."""
    c1, c2, c3 = c.classes[1], c.classes[2], c.classes[3]
    ch2 = (c1 * c1 - c2.scale(2)).scale(Fraction(1, 2))
    ch3 = (c1 * c1 * c1 - (c1 * c2).scale(3) + c3.scale(3)).scale(Fraction(1, 6))
    return ChernCharacter(c.rank, c1, ch2, ch3)


def character_mul(a: ChernCharacter, b: ChernCharacter) -> ChernCharacter:
    """Graded product of characters, truncated at weight 3."""
    rank = a.rank * b.rank
    ch1 = a.ch1.scale(b.rank) + b.ch1.scale(a.rank)
    ch2 = a.ch2.scale(b.rank) + a.ch1 * b.ch1 + b.ch2.scale(a.rank)
    ch3 = (a.ch3.scale(b.rank) + a.ch2 * b.ch1 + a.ch1 * b.ch2
           + b.ch3.scale(a.rank))
    return ChernCharacter(rank, ch1, ch2, ch3)


def character_to_chern(ch: ChernCharacter, rank) -> ChernVector:
    """Invert chern_to_character degree by degree."""
    if ch.rank != Fraction(rank):
        raise ValueError("rank mismatch")
    c1 = ch.ch1
    c2 = (c1 * c1).scale(Fraction(1, 2)) - ch.ch2
    c3 = ch.ch3.scale(2) - (c1 * c1 * c1).scale(Fraction(1, 3)) + c1 * c2
    return ChernVector(rank, [FormalClass.constant(1), c1, c2, c3])


def line_character(m) -> ChernCharacter:
    """Character of a line class m*s1: exp expansion through weight 3."""
    m = Fraction(m)
    return ChernCharacter(1,
                          S1.scale(m),
                          (S1 * S1).scale(m * m / 2),
                          (S1 * S1 * S1).scale(m ** 3 / 6))


def twist_character(ch: ChernCharacter, m) -> ChernCharacter:
    """Tensor by the line class m*s1."""
    return character_mul(ch, line_character(m))


def tautological_sub_chern() -> ChernVector:
    """c(S) = 1 - s1 t + s11 t^2 on Gr(2,n), rank 2."""
    one = FormalClass.constant(1)
    return ChernVector(2, [one, S1.scale(-1), S11, FormalClass.zero()])


def tautological_quotient_dual_chern() -> ChernVector:
    """c(Q*) = 1 - s1 t + s2 t^2 - s3 t^3 for the rank-3 quotient on Gr(2,5)."""
    one = FormalClass.constant(1)
    return ChernVector(3, [one, S1.scale(-1), S2, S3.scale(-1)])


def restriction_coefficients() -> tuple:
    """Scalar coefficients of (1 - s1 t + s1^2 t^2 - s1^3 t^3)^3 truncated
    at t^3, reported as (t^3, t^2, t^1, t^0) multipliers of s1-powers."""
    # polynomial in t with FormalClass coefficients
    base = [FormalClass.constant(1), S1.scale(-1), S1 * S1, (S1 ** 3).scale(-1)]
    prod = [FormalClass.constant(1), FormalClass.zero(),
            FormalClass.zero(), FormalClass.zero()]
    for _ in range(3):
        nxt = [FormalClass.zero() for _ in range(4)]
        for i in range(4):
            for j in range(4 - i):
                nxt[i + j] = nxt[i + j] + prod[i] * base[j]
        prod = nxt
    # each t^k coefficient is a scalar times s1^k; extract the scalars
    out = []
    for k in (3, 2, 1, 0):
        e = (k, 0, 0, 0)
        out.append(prod[k].terms.get(e, Fraction(0)))
        extra = {m for m in prod[k].terms if m != e}
        if extra:
            raise AssertionError("restriction coefficient not a pure s1 power")
    return tuple(out)


def restrict_third_chern(c: ChernVector) -> FormalClass:
    """Third Chern class after restriction along a codimension-3 linear
    section: sum of (restriction coefficient)_k * s1^k * c_(3-k)."""
    k3, k2, k1, k0 = restriction_coefficients()
    return (c.classes[3].scale(k0)
            + (S1 * c.classes[2]).scale(k1)
            + (S1 * S1 * c.classes[1]).scale(k2)
            + (S1 ** 3).scale(k3))


def weight3_degree_table(n: int = 5) -> tuple:
    """Intersection numbers of the weight-3 basis monomials against s1^3
    on Gr(2,n): the pairing used on a codimension-3 linear section."""
    s1_cubed = SchubertElement.sigma(n, 1) ** 3
    out = []
    for e in WEIGHT3_BASIS:
        mono = FormalClass({e: Fraction(1)})
        out.append(int(degree(mul(mono.to_schubert(n), s1_cubed))))
    return tuple(out)


V5Report = namedtuple("V5Report", [
    "cotangent_character",      # ch of the ambient cotangent bundle
    "twisted_character",        # after tensoring with the square of the hyperplane class
    "chern",                    # ChernVector of the twisted bundle
    "restriction_coefficients",
    "restricted_third_chern",   # FormalClass, weight 3
    "coefficient_vector",       # on the basis (s1^3, s1*s11, s1*s2, s3)
    "degree_table",
    "value",
])


def v5_separability_details() -> V5Report:
    """Full pipeline for the degree certificate of the twisted cotangent
    bundle restricted to a codimension-3 linear section of Gr(2,5)."""
    ch_sub = chern_to_character(tautological_sub_chern())
    ch_qd = chern_to_character(tautological_quotient_dual_chern())
    ch_cot = character_mul(ch_sub, ch_qd)
    ch_tw = twist_character(ch_cot, 2)
    c = character_to_chern(ch_tw, 6)
    coeffs = restriction_coefficients()
    cbar3 = restrict_third_chern(c)
    vec = cbar3.weight3_vector()
    table = weight3_degree_table(5)
    value = sum(v * t for v, t in zip(vec, table))
    if value.denominator != 1:
        raise AssertionError("non-integral degree certificate")
    return V5Report(ch_cot, ch_tw, c, coeffs, cbar3, vec, table, int(value))


def v5_separability_certificate() -> int:
    """Intersection-number certificate; see v5_separability_details."""
    return v5_separability_details().value
