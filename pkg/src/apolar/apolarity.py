"""Catalecticants, annihilator ideals, Hilbert functions and Waring ranks.

Every graded piece of the annihilator of a form F is the kernel of a
catalecticant matrix: the matrix of the map sending a degree-t operator to
its derivative of F, written in the graded-lex monomial bases on both
sides.  Because the pairing is honest differentiation, the entries carry
multinomial factors (the catalecticant of a generic ternary quartic at
t = 2 starts 12a, 3b, 3c, 2d, e, 2f in its first row).
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .linalg import QMatrix, mat_kernel, mat_rank, solve_linear
from .poly import (HomogPoly, apolar_apply, canonical_point, monomial_basis,
                   monomial_index, power_linear)


class DegreeOutOfRange(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


class DuplicatePoints(ValueError):
    pass


class AllZero(ValueError):
    pass


@dataclass
class CatalecticantMatrix:
    form: HomogPoly
    t: int
    matrix: QMatrix          # rows: monomials of degree d-t, cols: degree t

    @property
    def row_basis(self):
        return monomial_basis(self.form.num_vars, self.form.degree - self.t)

    @property
    def col_basis(self):
        return monomial_basis(self.form.num_vars, self.t)


@dataclass
class ApolarProfile:
    form: HomogPoly
    hf: list                 # HF(T/F-perp, t) for t = 0..d+1
    perp_dims: list          # dim (F-perp)_t for t = 0..d+1


@dataclass
class RankCertificate:
    rank: int
    witness: HomogPoly       # annihilating operator that decided the branch
    branch: str

    SQUARE_FREE_AT_D1 = "square_free_at_d1"
    FELL_THROUGH_TO_D2 = "fell_through_to_d2"
    FORMULA = "formula"
    MATRIX_RANK = "matrix_rank"


def catalecticant(form, t):
    """Matrix of the degree-t differentiation map against F."""
    d = form.degree
    if t < 0 or t > d:
        raise DegreeOutOfRange("t = %d outside [0, %d]" % (t, d))
    n = form.num_vars
    col_mons = monomial_basis(n, t)
    row_index = monomial_index(n, d - t)
    rows = len(row_index)
    entries = [[Fraction(0)] * len(col_mons) for _ in range(rows)]
    for j, op_mono in enumerate(col_mons):
        image = apolar_apply(HomogPoly.monomial(op_mono), form)
        for mono, coeff in image.terms.items():
            entries[row_index[mono]][j] = coeff
    return CatalecticantMatrix(form, t, QMatrix.from_rows(entries))


def perp_piece(form, t):
    """Basis of the degree-t piece of the annihilator, in dual variables."""
    if t < 0:
        raise DegreeOutOfRange("t must be nonnegative")
    if form.is_zero():
        raise ZeroPolynomial("annihilator of the zero form is everything")
    n = form.num_vars
    if t > form.degree:
        return [HomogPoly.monomial(m) for m in monomial_basis(n, t)]
    kernel = mat_kernel(catalecticant(form, t).matrix)
    return [HomogPoly.from_coeff_vector(n, t, vec) for vec in kernel]


def hilbert_function(form):
    """Hilbert function of T modulo the annihilator, degrees 0 through d+1."""
    if form.is_zero():
        raise ZeroPolynomial("Hilbert function needs a nonzero form")
    d = form.degree
    n = form.num_vars
    hf = [mat_rank(catalecticant(form, t).matrix) for t in range(d + 1)]
    hf.append(0)
    perp_dims = [len(monomial_basis(n, t)) - hf[t] for t in range(d + 2)]
    return ApolarProfile(form, hf, perp_dims)


def _dehomogenized_coeffs(binary_form):
    """Coefficients of g(t, 1) indexed by power of t."""
    coeffs = [Fraction(0)] * (binary_form.degree + 1)
    for (a, _), c in binary_form.terms.items():
        coeffs[a] = c
    return coeffs


def _univariate_gcd_degree(p, q):
    """Degree of gcd of two univariate coefficient lists (low to high)."""

    def trim(c):
        while c and c[-1] == 0:
            c.pop()
        return c

    p = trim(list(p))
    q = trim(list(q))
    while q:
        # p mod q
        while len(p) >= len(q):
            if p[-1] == 0:
                p.pop()
                continue
            f = p[-1] / q[-1]
            off = len(p) - len(q)
            for i in range(len(q)):
                p[off + i] -= f * q[i]
            p.pop()
        p, q = q, trim(p)
    return len(p) - 1


def is_square_free_binary(binary_form):
    """Square-freeness of a binary form via gcd with its derivative.

    Dehomogenize to g(t, 1); the form is square-free iff that polynomial is
    coprime to its derivative and the degree drop at dehomogenization is at
    most one (the drop counts the multiplicity of the root at [1:0]).
    """
    coeffs = _dehomogenized_coeffs(binary_form)
    deg = len(coeffs) - 1
    while deg >= 0 and coeffs[deg] == 0:
        deg -= 1
    if deg < 0:
        return False
    if deg < binary_form.degree - 1:
        return False
    if deg == 0:
        return True
    derivative = [coeffs[k] * k for k in range(1, deg + 1)]
    return _univariate_gcd_degree(coeffs[:deg + 1], derivative) == 0


def sylvester_rank(binary_form):
    """Waring rank of a binary form, with the deciding operator as witness.

    The annihilator of a nonzero binary form is generated in two degrees
    d1 <= d2 with d1 + d2 = d + 2.  The rank is d1 when the minimal
    generator is square-free and d2 otherwise.
    """
    if binary_form.num_vars != 2:
        raise ValueError("binary form required")
    if binary_form.is_zero():
        raise ZeroPolynomial("rank of the zero form is undefined")
    d = binary_form.degree
    for t in range(1, d + 2):
        basis = perp_piece(binary_form, t)
        if basis:
            witness = basis[0]
            if is_square_free_binary(witness):
                return RankCertificate(t, witness, RankCertificate.SQUARE_FREE_AT_D1)
            return RankCertificate(d + 2 - t, witness, RankCertificate.FELL_THROUGH_TO_D2)
    raise AssertionError("annihilator of a degree-%d form has a generator by degree d+1" % d)


def monomial_rank(exponents):
    """Waring rank of a monomial from its exponents.

    With the positive exponents sorted so a0 is smallest, the rank is the
    product of (ai + 1) over i >= 1; zero exponents are irrelevant because
    the monomial lives in the smaller variable set.
    """
    positive = sorted(e for e in exponents if e > 0)
    if not positive:
        raise AllZero("constant monomials have no Waring rank")
    if any(e < 0 for e in exponents):
        raise ValueError("exponents must be nonnegative")
    return prod(e + 1 for e in positive) // (positive[0] + 1)


def quadratic_rank(form):
    """Waring rank of a quadratic form: the rank of its symmetric matrix."""
    if form.degree != 2:
        raise DegreeOutOfRange("quadratic form required")
    n = form.num_vars
    entries = []
    for i in range(n):
        row = []
        for j in range(n):
            if i == j:
                mono = tuple(2 * int(k == i) for k in range(n))
                row.append(form.coeff(mono))
            else:
                mono = tuple(int(k == i) + int(k == j) for k in range(n))
                row.append(form.coeff(mono) / 2)
        entries.append(row)
    return mat_rank(QMatrix.from_rows(entries))


def decompose_check(form, points):
    """Fit form = sum of c_i * L_i^d for the given projective points.

    Each L_i uses the point's coordinates exactly as supplied, so the
    returned coefficients refer to those representatives.  Returns the list
    of coefficients, or None when no exact combination exists.
    """
    if form.is_zero():
        raise ZeroPolynomial("decomposition of the zero form")
    seen = []
    for pt in points:
        if len(pt) != form.num_vars:
            raise ValueError("point length %d != %d variables" % (len(pt), form.num_vars))
        canon = canonical_point(pt)
        if canon in seen:
            raise DuplicatePoints("points must be pairwise distinct up to scale")
        seen.append(canon)
    d = form.degree
    columns = [power_linear(pt, d).coeff_vector() for pt in points]
    rows = len(columns[0])
    system = QMatrix.from_rows([[col[i] for col in columns] for i in range(rows)])
    return solve_linear(system, form.coeff_vector())
