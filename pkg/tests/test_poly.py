"""Polynomial layer: parsing, powers, and the differentiation pairing.

Derived values are checked against a brute-force differentiator that
repeatedly applies single-variable partials, independent of the
falling-factorial shortcut used by the library.
"""

import random

from fractions import Fraction
from math import factorial

import pytest

from apolar.linalg import QMatrix, mat_rank
from apolar.poly import (HomogPoly, NotHomogeneous, ParseError, apolar_apply,
                         canonical_point, infer_num_vars, monomial_basis,
                         parse_poly, power_linear, render_poly,
                         veronese_tangent_basis)


def diff_once(terms, var):
    out = {}
    for mono, c in terms.items():
        e = mono[var]
        if e:
            key = mono[:var] + (e - 1,) + mono[var + 1:]
            out[key] = out.get(key, Fraction(0)) + c * e
    return out


def apply_brute_force(op, target):
    """Oracle: apply the operator monomial by monomial via repeated partials."""
    total = {}
    for op_mono, op_coeff in op.terms.items():
        cur = dict(target.terms)
        for var, e in enumerate(op_mono):
            for _ in range(e):
                cur = diff_once(cur, var)
        for mono, c in cur.items():
            total[mono] = total.get(mono, Fraction(0)) + op_coeff * c
    return {m: c for m, c in total.items() if c != 0}


def rand_poly(rng, num_vars, degree, bound=9):
    basis = monomial_basis(num_vars, degree)
    terms = {m: rng.randint(-bound, bound) for m in basis}
    poly = HomogPoly(num_vars, degree, terms)
    if poly.is_zero():
        return HomogPoly.monomial(basis[0])
    return poly


def test_monomial_order_matches_documented_basis():
    assert monomial_basis(3, 2) == ((2, 0, 0), (1, 1, 0), (1, 0, 1),
                                    (0, 2, 0), (0, 1, 1), (0, 0, 2))


def test_parse_examples():
    f = parse_poly("x0^2*x1 + 3*x1^3", 2)
    assert f.degree == 3
    assert f.terms == {(2, 1): Fraction(1), (0, 3): Fraction(3)}
    g = parse_poly("-1/6*x0^3", 2)
    assert g.terms == {(3, 0): Fraction(-1, 6)}


def test_parse_rejects_mixed_degrees():
    with pytest.raises(NotHomogeneous):
        parse_poly("x0 + x1^2", 2)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_poly("x0^", 2)
    with pytest.raises(ParseError):
        parse_poly("2 x0", 2)  # implicit multiplication is not allowed
    with pytest.raises(ParseError):
        parse_poly("x5", 2)
    with pytest.raises(ParseError):
        parse_poly("x0 @ x1", 2)
    with pytest.raises(ParseError):
        parse_poly("", 2)
    with pytest.raises(ParseError):
        parse_poly("x0^65", 1)


def test_infer_num_vars():
    assert infer_num_vars("x0*x3^2 + x1^3") == 4


def test_power_linear_binomial():
    cube = power_linear([1, 1], 3)
    assert cube.terms == {(3, 0): 1, (2, 1): 3, (1, 2): 3, (0, 3): 1}
    assert power_linear([0, 1], 5) == HomogPoly.monomial((0, 5))


def test_power_linear_quadratic_coordinates():
    rng = random.Random(0)
    a, b, c = (rng.randint(1, 20) for _ in range(3))
    sq = power_linear([a, b, c], 2)
    assert sq.coeff_vector() == [a * a, 2 * a * b, 2 * a * c, b * b, 2 * b * c, c * c]


def test_power_linear_matches_repeated_multiplication():
    rng = random.Random(1)
    for _ in range(20):
        n = rng.randint(1, 4)
        d = rng.randint(1, 5)
        coeffs = [rng.randint(-4, 4) for _ in range(n)]
        if not any(coeffs):
            coeffs[0] = 1
        lin = HomogPoly(n, 1, {tuple(int(j == i) for j in range(n)): coeffs[i]
                               for i in range(n)})
        expected = lin
        for _ in range(d - 1):
            expected = expected * lin
        assert power_linear(coeffs, d) == expected


def test_apolar_factorials():
    for mono in ((2, 1, 0), (3, 0, 2), (1, 1, 1)):
        val = apolar_apply(HomogPoly.monomial(mono), HomogPoly.monomial(mono))
        want = 1
        for e in mono:
            want *= factorial(e)
        assert val.coeff((0, 0, 0)) == want


def test_apolar_annihilation_and_derived_value():
    f = parse_poly("x0*x1^2", 2)
    assert apolar_apply(HomogPoly.monomial((2, 0)), f).is_zero()
    # d^3/dx0 dx1^2 (x0 x1^2) = 2, frozen from the brute-force oracle
    val = apolar_apply(HomogPoly.monomial((1, 2)), f)
    assert val.terms == {(0, 0): Fraction(2)}
    assert apply_brute_force(HomogPoly.monomial((1, 2)), f) == {(0, 0): Fraction(2)}


def test_apolar_matches_brute_force_randomized():
    rng = random.Random(2)
    for _ in range(60):
        n = rng.randint(1, 3)
        d = rng.randint(1, 5)
        t = rng.randint(1, d)
        f = rand_poly(rng, n, d)
        op = rand_poly(rng, n, t)
        assert apolar_apply(op, f).terms == apply_brute_force(op, f)


def test_partials_commute():
    rng = random.Random(3)
    for _ in range(30):
        n = rng.randint(2, 4)
        f = rand_poly(rng, n, rng.randint(2, 5))
        i, j = rng.sample(range(n), 2)
        yi = HomogPoly.monomial(tuple(int(k == i) for k in range(n)))
        yj = HomogPoly.monomial(tuple(int(k == j) for k in range(n)))
        assert apolar_apply(yi, apolar_apply(yj, f)) == apolar_apply(yj, apolar_apply(yi, f))


def test_apolar_on_powers_of_linear_forms():
    rng = random.Random(4)
    for _ in range(40):
        n = rng.randint(2, 4)
        d = rng.randint(1, 6)
        t = rng.randint(0, d)
        coeffs = [rng.randint(-5, 5) for _ in range(n)]
        if not any(coeffs):
            coeffs[0] = 1
        op = rand_poly(rng, n, t)
        power = power_linear(coeffs, d)
        image = apolar_apply(op, power)
        scalar = Fraction(factorial(d), factorial(d - t)) * op.evaluate(coeffs)
        if t == d:
            assert image.coeff((0,) * n) == scalar
        elif scalar == 0:
            assert image.is_zero()
        else:
            assert image == power_linear(coeffs, d - t).scale(scalar)


def test_perfect_pairing_gram_matrix():
    for n in range(1, 4):
        for i in range(1, 6 - n):
            basis = monomial_basis(n + 1, i)
            gram = [[apolar_apply(HomogPoly.monomial(a),
                                  HomogPoly.monomial(b)).coeff((0,) * (n + 1))
                     for b in basis] for a in basis]
            assert mat_rank(QMatrix.from_rows(gram)) == len(basis)


def test_veronese_tangent_basis_examples():
    got = veronese_tangent_basis([1, 0, 0], 2)
    assert got == [HomogPoly.monomial(m) for m in ((2, 0, 0), (1, 1, 0), (1, 0, 1))]
    whole_s1 = veronese_tangent_basis([1, 2], 1)
    assert whole_s1 == [HomogPoly.monomial((1, 0)), HomogPoly.monomial((0, 1))]


def test_veronese_tangent_span_dimension():
    rng = random.Random(5)
    for _ in range(10):
        coeffs = [rng.randint(1, 50) for _ in range(4)]
        basis = veronese_tangent_basis(coeffs, 4)
        rows = [p.coeff_vector() for p in basis]
        assert mat_rank(QMatrix.from_rows(rows)) == 4


def test_render_parse_round_trip():
    rng = random.Random(6)
    for _ in range(100):
        n = rng.randint(1, 4)
        d = rng.randint(0, 6)
        basis = monomial_basis(n, d)
        terms = {m: Fraction(rng.randint(-20, 20), rng.randint(1, 9)) for m in basis
                 if rng.random() < 0.5}
        f = HomogPoly(n, d, terms)
        assert parse_poly(render_poly(f), n) == f


def test_canonical_point():
    assert canonical_point([0, -2, 4]) == [0, 1, -2]
    with pytest.raises(ValueError):
        canonical_point([0, 0])
