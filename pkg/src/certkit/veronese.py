"""The quadratic Veronese surface in P^5, its secant cubic, the projection
kernel, singular containing quadrics, and smooth conics in characteristic 2.

Projective coordinates on P^5 are (x, y, z, s, t, u), matched to the generic
symmetric matrix [[x, u, t], [u, y, s], [t, s, z]].  The projection chart
lives in variables (t, u); the kernel ideal upstairs uses (Z, S, T, U).

The certificate functions return verdict records with every computed number
in them; nothing is clamped to an expected value.
"""

from __future__ import annotations

import enum
import itertools
import math
from collections import namedtuple
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .exactcore import (
    F4_ELEMENTS,
    Fp,
    Polynomial,
    RationalFunction,
    ideal_graded_dimension,
    matrix_rank,
    monomials_of_degree,
    poly_from_string_exps,
    poly_substitute,
    span_dimension,
    spans_contain,
)

P5_VARS = ("x", "y", "z", "s", "t", "u")
KERNEL_VARS = ("Z", "S", "T", "U")
CHART_VARS = ("t", "u")

F2_FIELD = (Fp(2, 0), Fp(2, 1))
F4_FIELD = F4_ELEMENTS


def _p5(data) -> Polynomial:
    return poly_from_string_exps(P5_VARS, {k: Fraction(v) for k, v in data.items()})


def veronese_ideal() -> list:
    """The six quadric generators, in a fixed order."""
    return [
        _p5({"x*y": 1, "u^2": -1}),
        _p5({"y*z": 1, "s^2": -1}),
        _p5({"z*x": 1, "t^2": -1}),
        _p5({"x*s": 1, "t*u": -1}),
        _p5({"y*t": 1, "u*s": -1}),
        _p5({"z*u": 1, "s*t": -1}),
    ]


def generic_symmetric_matrix() -> list:
    x, y, z, s, t, u = (Polynomial.variable(v, P5_VARS) for v in P5_VARS)
    return [[x, u, t], [u, y, s], [t, s, z]]


def symmetric_matrix_minors() -> list:
    """All nine 2x2 minors of the generic symmetric matrix."""
    m = generic_symmetric_matrix()
    out = []
    for rows in itertools.combinations(range(3), 2):
        for cols in itertools.combinations(range(3), 2):
            (r0, r1), (c0, c1) = rows, cols
            out.append(m[r0][c0] * m[r1][c1] - m[r0][c1] * m[r1][c0])
    return out


def secant_cubic() -> Polynomial:
    return _p5({"x*y*z": 1, "s*t*u": 2, "x*s^2": -1, "y*t^2": -1, "z*u^2": -1})


def secant_cubic_matches_determinant() -> bool:
    m = generic_symmetric_matrix()
    det = (m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
           - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
           + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]))
    return det == secant_cubic()


def veronese_map(point: Sequence) -> tuple:
    """Degree-two embedding of P^2: (X,Y,Z) -> (X^2, Y^2, Z^2, YZ, ZX, XY)."""
    X, Y, Z = (Fraction(c) for c in point)
    if X == Y == Z == 0:
        raise ValueError("zero point")
    return (X * X, Y * Y, Z * Z, Y * Z, Z * X, X * Y)


class SecantStratum(enum.Enum):
    ON_VERONESE = "OnVeronese"
    ON_SECANT_ONLY = "OnSecantOnly"
    GENERIC = "Generic"


def secant_stratum(point: Sequence) -> SecantStratum:
    """Position of a rational point of P^5 relative to the Veronese surface
    and its secant cubic, read off the rank of the symmetric matrix."""
    x, y, z, s, t, u = (Fraction(c) for c in point)
    if not any((x, y, z, s, t, u)):
        raise ValueError("zero point")
    rank = matrix_rank([[x, u, t], [u, y, s], [t, s, z]])
    if rank == 1:
        return SecantStratum.ON_VERONESE
    if rank == 2:
        return SecantStratum.ON_SECANT_ONLY
    return SecantStratum.GENERIC


# ---------------------------------------------------------------------------
# projection kernel
# ---------------------------------------------------------------------------

# chart images of the four surviving coordinates: all share the same
# denominator 1 - u^2, so numerators alone decide linear independence
_CHART_NUMERATORS = {"Z": {"t^2": 1}, "S": {"t*u": 1}, "T": {"t": 1}, "U": {"u": 1}}


def projection_images() -> dict:
    one = Polynomial.constant(CHART_VARS, Fraction(1))
    u = Polynomial.variable("u", CHART_VARS)
    den = one - u * u
    out = {}
    for name, terms in _CHART_NUMERATORS.items():
        num = poly_from_string_exps(CHART_VARS, {k: Fraction(v) for k, v in terms.items()})
        out[name] = RationalFunction(num, den)
    return out


def proposed_kernel_generators() -> list:
    """The two quadrics the source text proposes for the kernel."""
    g1 = poly_from_string_exps(KERNEL_VARS, {"S^2": Fraction(1), "T*U": Fraction(-1)})
    g2 = poly_from_string_exps(KERNEL_VARS, {"S*T": Fraction(1), "U*Z": Fraction(-1)})
    return [g1, g2]


def principal_kernel_generator() -> Polynomial:
    """The single quadric that the chart computation actually annihilates."""
    return poly_from_string_exps(KERNEL_VARS, {"S*T": Fraction(1), "U*Z": Fraction(-1)})


def _monomial_image_numerator(exps: tuple) -> Polynomial:
    """Numerator of the image of Z^a S^b T^c U^e over the common denominator."""
    a, b, c, e = exps
    # Z -> t^2, S -> tu, T -> t, U -> u
    t_exp = 2 * a + b + c
    u_exp = b + e
    return Polynomial(CHART_VARS, {(t_exp, u_exp): Fraction(1)})


DegreeRow = namedtuple("DegreeRow", ["degree", "ideal_dim", "image_dim",
                                     "ring_dim", "identity_holds"])
KernelVerdict = namedtuple("KernelVerdict", ["memberships", "rows",
                                             "membership_all", "identity_all"])


def _kernel_certificate(generators: list, degree_bound: int) -> KernelVerdict:
    if degree_bound < 2:
        raise ValueError("degree bound below two")
    images = projection_images()
    memberships = []
    for g in generators:
        residual = poly_substitute(g, images)
        memberships.append((repr(g), residual.is_zero()))
    rows = []
    for d in range(1, degree_bound + 1):
        ideal_dim = ideal_graded_dimension(generators, d)
        monos = monomials_of_degree(len(KERNEL_VARS), d)
        image_dim = span_dimension([_monomial_image_numerator(e) for e in monos])
        ring_dim = math.comb(d + 3, 3)
        rows.append(DegreeRow(d, ideal_dim, image_dim, ring_dim,
                              ideal_dim + image_dim == ring_dim))
    return KernelVerdict(tuple(memberships), tuple(rows),
                         all(ok for _, ok in memberships),
                         all(r.identity_holds for r in rows))


def projection_kernel_certificate(degree_bound: int) -> KernelVerdict:
    """Membership and degreewise dimension identity for the two proposed
    kernel generators.  Reports whatever the arithmetic says."""
    return _kernel_certificate(proposed_kernel_generators(), degree_bound)


def projection_kernel_principal_certificate(degree_bound: int) -> KernelVerdict:
    """Same checks for the single-generator kernel ideal."""
    return _kernel_certificate([principal_kernel_generator()], degree_bound)


QuotientRow = namedtuple("QuotientRow", ["degree", "quotient_dim",
                                         "claimed_dim", "equal"])


def quotient_hilbert_comparison(degree_bound: int) -> tuple:
    """Degreewise Hilbert function of the quotient by the two proposed
    generators, against the claimed splitting into a polynomial ring in
    three variables plus multiples of the extra coordinate over two."""
    gens = proposed_kernel_generators()
    rows = []
    for d in range(0, degree_bound + 1):
        ring_dim = math.comb(d + 3, 3)
        quotient = ring_dim - (ideal_graded_dimension(gens, d) if d >= 2 else 0)
        claimed = math.comb(d + 2, 2) + d
        rows.append(QuotientRow(d, quotient, claimed, quotient == claimed))
    return tuple(rows)


# ---------------------------------------------------------------------------
# singular quadrics through the projected surface
# ---------------------------------------------------------------------------

PENCIL_VARS = ("alpha", "beta", "y", "z", "s", "t", "u")
PENCIL_POINT_COORDS = ("y", "z", "s", "t", "u")

PencilVerdict = namedtuple("PencilVerdict", ["partials_zero", "value_zero",
                                             "singular_for_all"])


def pencil_form() -> Polynomial:
    return poly_from_string_exps(PENCIL_VARS, {
        "alpha*s^2": Fraction(1), "alpha*t*u": Fraction(-1),
        "beta*s*t": Fraction(1), "beta*u*z": Fraction(-1),
    })


def _evaluate_coords(p: Polynomial, values: dict) -> Polynomial:
    """Substitute numbers for some variables, keeping the rest symbolic."""
    terms: dict = {}
    idx = {v: i for i, v in enumerate(p.variables)}
    for e, c in p.terms.items():
        coeff = c
        ne = list(e)
        for name, val in values.items():
            i = idx[name]
            if e[i]:
                coeff = coeff * (Fraction(val) ** e[i])
            ne[i] = 0
        if coeff:
            key = tuple(ne)
            terms[key] = terms.get(key, Fraction(0)) + coeff
    return Polynomial(p.variables, terms)


def quadric_pencil_singularity_certificate() -> PencilVerdict:
    """Checks that the base point of the projection is singular on every
    member of the quadric pencil, identically in the pencil parameters."""
    F = pencil_form()
    point = {"y": 1, "z": 0, "s": 0, "t": 0, "u": 0}
    partials = []
    for v in PENCIL_POINT_COORDS:
        dv = F.derivative(v)
        partials.append((v, _evaluate_coords(dv, point).is_zero()))
    value_zero = _evaluate_coords(F, point).is_zero()
    ok = value_zero and all(z for _, z in partials)
    return PencilVerdict(tuple(partials), value_zero, ok)


# ---------------------------------------------------------------------------
# hyperplane splitting of a singular quadric section
# ---------------------------------------------------------------------------

P4_VARS = ("x0", "x1", "x2", "x3", "x4")

QUADRIC_CHOICES = {
    "x0x1+x2^2": {"x0*x1": 1, "x2^2": 1},
    "x0x1+x2x3": {"x0*x1": 1, "x2*x3": 1},
}

SplitRow = namedtuple("SplitRow", ["degree", "pair_dim", "intersection_dim", "equal"])
SplitVerdict = namedtuple("SplitVerdict", [
    "hyperplane", "component_a", "component_b",
    "containment_ok", "rows", "all_equal",
])


def _p4(data) -> Polynomial:
    return poly_from_string_exps(P4_VARS, {k: Fraction(v) for k, v in data.items()})


def _ideal_piece(gens: list, d: int) -> list:
    """Spanning set of the degree-d piece of the ideal on the generators."""
    out = []
    nvars = len(P4_VARS)
    for g in gens:
        e = g.total_degree()
        if e > d:
            continue
        for m in monomials_of_degree(nvars, d - e):
            out.append(Polynomial(P4_VARS, {m: Fraction(1)}) * g)
    return out


def split_hyperplane_certificate(quadric_choice: str, avoided_divisor=None) -> SplitVerdict:
    """Split the hyperplane section of a singular quadric through the
    projected surface into two linear components, avoiding a designated
    coordinate subspace if one is given, and verify the ideal identity
    (quadric, hyperplane) = I_A meet I_B degree by degree up to 3."""
    if quadric_choice not in QUADRIC_CHOICES:
        raise ValueError("unknown quadric choice")
    q = _p4(QUADRIC_CHOICES[quadric_choice])
    x0, x1, x2, x3, _ = (Polynomial.variable(v, P4_VARS) for v in P4_VARS)
    avoided = tuple(sorted(avoided_divisor)) if avoided_divisor is not None else None

    # default split: cut with the plane where the distinguished square
    # coordinate vanishes, so the quadric degenerates to a product
    h_default = x2
    comp_a_default = (x0, x2)   # indices (0, 2)
    comp_b_default = (x1, x2)   # indices (1, 2)
    if avoided not in ((0, 2), (1, 2)):
        h, comp_a, comp_b = h_default, comp_a_default, comp_b_default
    else:
        # tilt the hyperplane so neither component is the avoided subspace
        h = x1 - x2
        if quadric_choice == "x0x1+x2^2":
            # on x1 = x2 the quadric becomes x2 * (x0 + x2)
            comp_a = (x2, h)
            comp_b = (x0 + x2, h)
        else:
            # on x1 = x2 the quadric becomes x1 * (x0 + x3)
            comp_a = (x1, h)
            comp_b = (x0 + x3, h)

    # containment: q and h lie in both component ideals
    containment = True
    for gens in (comp_a, comp_b):
        for d, poly in ((1, h), (2, q)):
            piece = _ideal_piece(list(gens), d)
            if not spans_contain(piece, [poly]):
                containment = False

    rows = []
    for d in range(1, 4):
        pair_piece = _ideal_piece([q, h], d)
        a_piece = _ideal_piece(list(comp_a), d)
        b_piece = _ideal_piece(list(comp_b), d)
        a_dim = span_dimension(a_piece)
        b_dim = span_dimension(b_piece)
        sum_dim = span_dimension(a_piece + b_piece)
        inter_dim = a_dim + b_dim - sum_dim
        pair_dim = span_dimension(pair_piece)
        rows.append(SplitRow(d, pair_dim, inter_dim, pair_dim == inter_dim))
    return SplitVerdict(h, comp_a, comp_b, containment, tuple(rows),
                        containment and all(r.equal for r in rows))


# ---------------------------------------------------------------------------
# conics in characteristic two
# ---------------------------------------------------------------------------


def _field_one(field):
    for x in field:
        if x:
            return x / x
    raise ValueError("field without nonzero element")


def _field_zero(field):
    one = _field_one(field)
    return one - one


def _check_char2(field):
    one = _field_one(field)
    if one + one:
        raise ValueError("field not of characteristic two")


class QuadraticForm3:
    """Ternary quadratic form a x^2 + b y^2 + c z^2 + d yz + e zx + f xy."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs):
        coeffs = tuple(coeffs)
        if len(coeffs) != 6:
            raise ValueError("expected six coefficients")
        self.coeffs = coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def evaluate(self, point):
        x, y, z = point
        a, b, c, d, e, f = self.coeffs
        return (a * x * x + b * y * y + c * z * z
                + d * y * z + e * z * x + f * x * y)

    def __add__(self, other):
        if isinstance(other, QuadraticForm3):
            return QuadraticForm3(tuple(p + q for p, q in zip(self.coeffs, other.coeffs)))
        return NotImplemented

    def scale(self, c):
        return QuadraticForm3(tuple(v * c for v in self.coeffs))

    def __eq__(self, other):
        if isinstance(other, QuadraticForm3):
            return all(p == q for p, q in zip(self.coeffs, other.coeffs))
        return NotImplemented

    def __repr__(self):
        return f"QuadraticForm3{self.coeffs}"


def _projective_points(field):
    """One representative per point of P^2 over the finite field."""
    zero = _field_zero(field)
    one = _field_one(field)
    pts = []
    for y in field:
        for z in field:
            pts.append((one, y, z))
    for z in field:
        pts.append((zero, one, z))
    pts.append((zero, zero, one))
    return pts


def is_smooth_conic(q: QuadraticForm3, field) -> bool:
    """Smoothness of the conic in characteristic two, decided literally:
    enumerate the projective points where all three partials vanish and
    demand the form be nonzero at each of them."""
    _check_char2(field)
    if q.is_zero():
        raise ValueError("zero form")
    a, b, c, d, e, f = q.coeffs
    for (x, y, z) in _projective_points(field):
        # partials in characteristic two
        px = e * z + f * y
        py = d * z + f * x
        pz = d * y + e * x
        if not (px or py or pz):
            if not q.evaluate((x, y, z)):
                return False
    return True


def smooth_conic_closed_form(q: QuadraticForm3) -> bool:
    """Independent closed-form smoothness criterion in characteristic two:
    the off-diagonal part is nonzero and a d^2 + b e^2 + c f^2 + def is
    nonzero."""
    a, b, c, d, e, f = q.coeffs
    if not (d or e or f):
        return False
    return bool(a * d * d + b * e * e + c * f * f + d * e * f)


@dataclass(frozen=True)
class ConicSubspace:
    """A linear system of ternary quadratic forms over a fixed field."""
    basis: tuple

    def __init__(self, basis):
        basis = tuple(basis)
        if not basis:
            raise ValueError("empty basis")
        rows = [list(q.coeffs) for q in basis]
        if matrix_rank(rows) != len(basis):
            raise ValueError("basis not linearly independent")
        object.__setattr__(self, "basis", basis)

    @property
    def dimension(self) -> int:
        return len(self.basis)


def _solve_field(rows, target, field):
    """Solve sum_i mu_i rows[i] = target over the field; None if unsolvable."""
    n = len(rows)
    width = len(target)
    aug = [[rows[i][j] for i in range(n)] + [target[j]] for j in range(width)]
    zero = _field_zero(field)
    r = 0
    pivots = []
    for c in range(n):
        piv = None
        for i in range(r, width):
            if aug[i][c]:
                piv = i
                break
        if piv is None:
            continue
        aug[r], aug[piv] = aug[piv], aug[r]
        pv = aug[r][c]
        aug[r] = [x / pv for x in aug[r]]
        for i in range(width):
            if i != r and aug[i][c]:
                fct = aug[i][c]
                aug[i] = [p - fct * q for p, q in zip(aug[i], aug[r])]
        pivots.append(c)
        r += 1
    for i in range(r, width):
        if aug[i][n]:
            return None
    sol = [zero] * n
    for row_i, c in enumerate(pivots):
        sol[c] = aug[row_i][n]
    return sol


def _in_span(rows, target, field) -> bool:
    return _solve_field(rows, target, field) is not None


# coefficient slots: 0 x^2, 1 y^2, 2 z^2, 3 yz, 4 zx, 5 xy


def _substitute_linear(vec, sub, field):
    """Apply the linear substitution x_i -> sum_j sub[i][j] * x_j to a form."""
    zero = _field_zero(field)
    # expand the form on exponent triples
    slots = {(2, 0, 0): 0, (0, 2, 0): 1, (0, 0, 2): 2,
             (0, 1, 1): 3, (1, 0, 1): 4, (1, 1, 0): 5}
    out = [zero] * 6
    lin = sub  # lin[i] = coefficients of the image of variable i
    for exps, slot in slots.items():
        coeff = vec[slot]
        if not coeff:
            continue
        # product of the substituted linear forms per the exponent pattern
        factors = []
        for var_i, k in enumerate(exps):
            factors.extend([lin[var_i]] * k)
        l1, l2 = factors
        for i in range(3):
            for j in range(3):
                cij = coeff * l1[i] * l2[j]
                if not cij:
                    continue
                mono = [0, 0, 0]
                mono[i] += 1
                mono[j] += 1
                out[slots[tuple(mono)]] = out[slots[tuple(mono)]] + cij
    return out


def _swap_vars(vec, i, j, field):
    ident = [[_field_zero(field)] * 3 for _ in range(3)]
    one = _field_one(field)
    perm = [0, 1, 2]
    perm[i], perm[j] = perm[j], perm[i]
    for r in range(3):
        ident[r][perm[r]] = one
    return _substitute_linear(vec, ident, field)


ConicSearchResult = namedtuple("ConicSearchResult", ["form", "path", "combo"])


def exhaustive_smooth_conic(subspace: ConicSubspace, field):
    """Oracle: scan every member of the subspace for a smooth conic."""
    n = subspace.dimension
    for combo in itertools.product(field, repeat=n):
        if not any(combo):
            continue
        form = QuadraticForm3([_field_zero(field)] * 6)
        for mu, b in zip(combo, subspace.basis):
            form = form + b.scale(mu)
        if form.is_zero():
            continue
        if is_smooth_conic(form, field):
            return form
    return None


def find_smooth_conic_details(subspace: ConicSubspace, field) -> ConicSearchResult:
    """Constructive search for a smooth conic in a linear system of
    dimension at least four over a field of characteristic two.

    Normalizes one basis member to the shape (squares + xy), then walks the
    four-way case split on what else the system contains.  Every branch
    produces a member whose distinguished square coefficient is nonzero,
    which is exactly smoothness after the normalization.  If any step fails
    to deliver (it should not, at any field size), an exhaustive scan of
    the finite subspace is used instead and reported as the path.
    """
    _check_char2(field)
    if subspace.dimension < 4:
        raise ValueError("subspace dimension below four")
    zero = _field_zero(field)
    one = _field_one(field)
    n = subspace.dimension

    def result_from_combo(combo, path):
        form = QuadraticForm3([zero] * 6)
        for mu, b in zip(combo, subspace.basis):
            form = form + b.scale(mu)
        if form.is_zero() or not is_smooth_conic(form, field):
            return None
        return ConicSearchResult(form, path, tuple(combo))

    def fallback():
        for combo in itertools.product(field, repeat=n):
            if not any(combo):
                continue
            res = result_from_combo(combo, "exhaustive-fallback")
            if res is not None:
                return res
        return ConicSearchResult(None, "exhausted-none", None)

    def add_combo(c1, c2, factor):
        return tuple(a + factor * b for a, b in zip(c1, c2))

    # transformed copies of the basis; combos always refer to the original
    rows = [list(q.coeffs) for q in subspace.basis]
    unit = lambda i: tuple(one if j == i else zero for j in range(n))

    # pick a member with an off-diagonal term and rotate it into the xy slot
    pick = None
    for i, r in enumerate(rows):
        if r[3] or r[4] or r[5]:
            pick = i
            break
    if pick is None:
        return fallback()
    if not rows[pick][5]:
        # zx-term: swap y and z brings it to xy; yz-term: swap x and z
        swap = (1, 2) if rows[pick][4] else (0, 2)
        rows = [_swap_vars(r, swap[0], swap[1], field) for r in rows]
    f_vec = list(rows[pick])
    f_combo = unit(pick)
    scale = one / f_vec[5]
    f_vec = [v * scale for v in f_vec]
    f_combo = tuple(mu * scale for mu in f_combo)

    # absorb the remaining off-diagonal terms of f into a coordinate change
    alpha, beta = f_vec[3], f_vec[4]
    if alpha or beta:
        sub = [[one, zero, alpha], [zero, one, beta], [zero, zero, one]]
        rows = [_substitute_linear(r, sub, field) for r in rows]
        f_vec = _substitute_linear(f_vec, sub, field)
    if f_vec[3] or f_vec[4] or f_vec[5] != one:
        return fallback()
    if f_vec[2]:
        res = result_from_combo(f_combo, "normalized-member-smooth")
        return res if res is not None else fallback()

    squares = [
        (one, zero, zero, zero, zero, zero),
        (zero, one, zero, zero, zero, zero),
        (zero, zero, one, zero, zero, zero),
    ]

    # case one: all three squares belong to the system
    sq_combos = [_solve_field(rows, list(sq), field) for sq in squares]
    if all(s is not None for s in sq_combos):
        # xy + z^2 = f + A x^2 + B y^2 + z^2 with A, B from f
        combo = f_combo
        combo = add_combo(combo, tuple(sq_combos[0]), f_vec[0])
        combo = add_combo(combo, tuple(sq_combos[1]), f_vec[1])
        combo = add_combo(combo, tuple(sq_combos[2]), one)
        res = result_from_combo(combo, "case-all-squares")
        return res if res is not None else fallback()

    # case two: take a member outside (squares + f) and normalize its yz term
    span_rows = squares + [tuple(f_vec)]
    g_vec = g_combo = None
    for i, r in enumerate(rows):
        if not _in_span(span_rows, tuple(r), field):
            g_vec = list(r)
            g_combo = unit(i)
            break
    if g_vec is None:
        return fallback()
    g_combo = add_combo(g_combo, f_combo, -g_vec[5])
    g_vec = [p - g_vec[5] * q for p, q in zip(g_vec, f_vec)]
    if not g_vec[3]:
        if not g_vec[4]:
            return fallback()
        rows = [_swap_vars(r, 0, 1, field) for r in rows]
        f_vec = _swap_vars(f_vec, 0, 1, field)
        g_vec = _swap_vars(g_vec, 0, 1, field)
    scale = one / g_vec[3]
    g_vec = [v * scale for v in g_vec]
    g_combo = tuple(mu * scale for mu in g_combo)
    if g_vec[4]:
        b = g_vec[4]
        sub = [[one, zero, zero], [b, one, zero], [zero, zero, one]]
        rows = [_substitute_linear(r, sub, field) for r in rows]
        f_vec = _substitute_linear(f_vec, sub, field)
        g_vec = _substitute_linear(g_vec, sub, field)
        scale = one / f_vec[5]
        f_vec = [v * scale for v in f_vec]
        f_combo = tuple(mu * scale for mu in f_combo)
    if g_vec[0]:
        res = result_from_combo(g_combo, "yz-member-smooth")
        return res if res is not None else fallback()

    def reduce_mod_fg(vec, combo):
        combo = add_combo(combo, f_combo, -vec[5])
        vec = [p - vec[5] * q for p, q in zip(vec, f_vec)]
        combo = add_combo(combo, g_combo, -vec[3])
        vec = [p - vec[3] * q for p, q in zip(vec, g_vec)]
        return vec, combo

    # case three: some member retains a zx term after reduction
    h_vec = h_combo = None
    for i, r in enumerate(rows):
        vec, combo = reduce_mod_fg(list(r), unit(i))
        if vec[4]:
            scale = one / vec[4]
            h_vec = [v * scale for v in vec]
            h_combo = tuple(mu * scale for mu in combo)
            break
    if h_vec is not None:
        if h_vec[1]:
            res = result_from_combo(h_combo, "zx-member-smooth")
            return res if res is not None else fallback()
        # diagonal residue outside (f, g, h)
        for i, r in enumerate(rows):
            vec, combo = reduce_mod_fg(list(r), unit(i))
            combo = add_combo(combo, h_combo, -vec[4])
            vec = [p - vec[4] * q for p, q in zip(vec, h_vec)]
            if not any(vec):
                continue
            if vec[2]:
                res = result_from_combo(add_combo(combo, f_combo, one),
                                        "diagonal-plus-xy")
            elif vec[0]:
                res = result_from_combo(add_combo(combo, g_combo, one),
                                        "diagonal-plus-yz")
            else:
                res = result_from_combo(add_combo(combo, h_combo, one),
                                        "diagonal-plus-zx")
            return res if res is not None else fallback()
        return fallback()

    # case four: all reductions are diagonal
    h_vec = h_combo = None
    for i, r in enumerate(rows):
        vec, combo = reduce_mod_fg(list(r), unit(i))
        if any(vec):
            h_vec, h_combo = vec, combo
            break
    if h_vec is None:
        return fallback()
    if h_vec[2]:
        res = result_from_combo(add_combo(h_combo, f_combo, one),
                                "diagonal-plus-xy")
        return res if res is not None else fallback()
    if h_vec[0]:
        res = result_from_combo(add_combo(h_combo, g_combo, one),
                                "diagonal-plus-yz")
        return res if res is not None else fallback()
    # h is a pure y^2 residue; look one element further
    scale = one / h_vec[1]
    h_vec = [v * scale for v in h_vec]
    h_combo = tuple(mu * scale for mu in h_combo)
    for i, r in enumerate(rows):
        vec, combo = reduce_mod_fg(list(r), unit(i))
        combo = add_combo(combo, h_combo, -vec[1])
        vec = [p - vec[1] * q for p, q in zip(vec, h_vec)]
        if not any(vec):
            continue
        if vec[2]:
            res = result_from_combo(add_combo(combo, f_combo, one),
                                    "diagonal-plus-xy")
        else:
            res = result_from_combo(add_combo(combo, g_combo, one),
                                    "diagonal-plus-yz")
        return res if res is not None else fallback()
    return fallback()


def find_smooth_conic(subspace: ConicSubspace, field):
    """Constructive smooth-conic search; returns the form or None."""
    return find_smooth_conic_details(subspace, field).form
